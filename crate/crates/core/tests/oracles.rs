//! Families checked against independent brute-force constructions.

use std::collections::BTreeSet;

use catalan_magma::bijection::{enumerate, universal_convert};
use catalan_magma::families::{frieze_expand, frieze_from_triangulation, tableau_to_dyck_direct};
use catalan_magma::family::{family, Element, FamilyId, Magma};

fn rendered(id: FamilyId, n: usize) -> BTreeSet<String> {
    let f = family(id);
    enumerate(f, n).unwrap().iter().map(|e| f.render(e).unwrap()).collect()
}

/// Balanced words of `pairs` pairs over `(up, down)`, by filtering all words.
fn balanced_words(pairs: usize, up: char, down: char) -> BTreeSet<String> {
    let len = 2 * pairs;
    (0u32..1 << len)
        .filter(|&bits| {
            let mut h = 0i32;
            (0..len).all(|i| {
                h += if bits >> i & 1 == 1 { 1 } else { -1 };
                h >= 0
            }) && h == 0
        })
        .map(|bits| (0..len).map(|i| if bits >> i & 1 == 1 { up } else { down }).collect::<String>())
        .map(|w| if w.is_empty() { "_".into() } else { w })
        .collect()
}

#[test]
fn dyck_and_bracket_words() {
    for n in 1..=8 {
        assert_eq!(rendered(FamilyId::F8, n), balanced_words(n - 1, 'u', 'd'), "norm {n}");
        assert_eq!(rendered(FamilyId::F2, n), balanced_words(n - 1, '{', '}'), "norm {n}");
    }
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n);
            out.push(q);
        }
    }
    out
}

fn has_321(p: &[u32]) -> bool {
    let n = p.len();
    (0..n).any(|i| (i + 1..n).any(|j| (j + 1..n).any(|k| p[i] > p[j] && p[j] > p[k])))
}

#[test]
fn avoiding_permutations() {
    for n in 1..=7u32 {
        let brute: BTreeSet<String> = permutations(n - 1)
            .into_iter()
            .filter(|p| !has_321(p))
            .map(|p| {
                if p.is_empty() {
                    "_".into()
                } else {
                    p.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        assert_eq!(rendered(FamilyId::F10, n as usize), brute, "norm {n}");
        for e in enumerate(family(FamilyId::F10), n as usize).unwrap() {
            let Element::Permutation(p) = e else { panic!() };
            assert!(!has_321(p.values()));
        }
    }
}

/// Restricted growth strings give every set partition of `1..=n` once.
fn set_partitions(n: usize) -> Vec<Vec<Vec<u32>>> {
    fn go(i: usize, n: usize, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if i > n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..=blocks.len() {
            if b == blocks.len() {
                blocks.push(vec![i as u32]);
            } else {
                blocks[b].push(i as u32);
            }
            go(i + 1, n, blocks, out);
            if blocks[b].len() == 1 {
                blocks.pop();
            } else {
                blocks[b].pop();
            }
        }
    }
    let mut out = Vec::new();
    go(1, n, &mut Vec::new(), &mut out);
    out
}

fn partition_crosses(blocks: &[Vec<u32>]) -> bool {
    blocks.iter().any(|x| {
        blocks.iter().any(|y| {
            x != y
                && x.iter().any(|&a| {
                    y.iter().any(|&b| x.iter().any(|&c| y.iter().any(|&d| a < b && b < c && c < d)))
                })
        })
    })
}

#[test]
fn non_crossing_partitions() {
    for norm in 1..=7 {
        let n = norm - 1;
        let brute: BTreeSet<String> = set_partitions(n)
            .into_iter()
            .filter(|p| !partition_crosses(p))
            .map(|p| {
                let blocks: String = p
                    .iter()
                    .map(|b| format!("{{{}}}", b.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
                    .collect();
                format!("{n}:{blocks}")
            })
            .collect();
        assert_eq!(rendered(FamilyId::F7, norm), brute, "norm {norm}");
    }
}

fn diagonals_cross((a, b): (u32, u32), (c, d): (u32, u32)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

#[test]
fn polygon_triangulations() {
    for norm in 2..=7u32 {
        let n = norm + 1;
        let diagonals: Vec<(u32, u32)> =
            (1..=n).flat_map(|a| (a + 2..=n).map(move |b| (a, b))).filter(|&(a, b)| !(a == 1 && b == n)).collect();
        let need = n.saturating_sub(3) as usize;
        let mut brute = BTreeSet::new();
        for mask in 0u32..1 << diagonals.len() {
            if mask.count_ones() as usize != need {
                continue;
            }
            let chosen: Vec<(u32, u32)> =
                (0..diagonals.len()).filter(|&i| mask >> i & 1 == 1).map(|i| diagonals[i]).collect();
            let ok = chosen.iter().all(|&x| chosen.iter().all(|&y| !diagonals_cross(x, y)));
            if ok {
                let list: Vec<String> = chosen.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                brute.insert(format!("{n}:{}", list.join(",")));
            }
        }
        assert_eq!(rendered(FamilyId::F9, norm as usize), brute, "norm {norm}");
    }
}

fn arcs(text: &str) -> Vec<(u32, u32)> {
    let (_, list) = text.split_once(':').unwrap();
    list.split(',')
        .filter(|s| !s.is_empty())
        .map(|p| {
            let (a, b) = p.split_once('-').unwrap();
            (a.parse().unwrap(), b.parse().unwrap())
        })
        .collect()
}

#[test]
fn chords_and_matchings_do_not_cross() {
    for id in [FamilyId::F3, FamilyId::F6] {
        for n in 1..=8 {
            for text in rendered(id, n) {
                let a = arcs(&text);
                for (i, &x) in a.iter().enumerate() {
                    for &y in &a[i + 1..] {
                        assert!(!diagonals_cross(x, y), "{id} {text}");
                        assert!(x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1, "{id} {text} shares a node");
                    }
                }
            }
        }
    }
}

#[test]
fn floor_plans_are_legal_canonical_and_distinct() {
    let f = family(FamilyId::F13);
    for n in 1..=8 {
        let all = enumerate(f, n).unwrap();
        let texts: BTreeSet<String> = all.iter().map(|e| f.render(e).unwrap()).collect();
        assert_eq!(texts.len(), all.len());
        for e in &all {
            let Element::FloorPlan(p) = e else { panic!() };
            assert_eq!(p.rooms().len(), n - 1);
            assert_eq!(&f.parse(&f.render(e).unwrap()).unwrap(), e, "not a fixed point");
        }
    }
}

#[test]
fn direct_maps_agree_with_the_universal_bijection() {
    let (f12, f8, f9, f14) = (family(FamilyId::F12), family(FamilyId::F8), family(FamilyId::F9), family(FamilyId::F14));
    for n in 1..=6 {
        for e in enumerate(f12, n).unwrap() {
            let Element::Tableau(t) = &e else { panic!() };
            assert_eq!(universal_convert(f12, f8, &e).unwrap(), Element::Dyck(tableau_to_dyck_direct(t)));
        }
        for e in enumerate(f9, n).unwrap() {
            let Element::Triangulation(t) = &e else { panic!() };
            assert_eq!(universal_convert(f9, f14, &e).unwrap(), Element::Frieze(frieze_from_triangulation(t)));
        }
    }
}

#[test]
fn frieze_membership_by_brute_force() {
    for len in 2..=5u32 {
        let base = len as u64 + 1;
        let mut valid = BTreeSet::new();
        for code in 0..base.pow(len) {
            let seq: Vec<u64> = (0..len).map(|i| code / base.pow(i) % base).collect();
            if frieze_expand(&seq).is_ok() {
                valid.insert(seq.iter().map(u64::to_string).collect::<Vec<_>>().join(","));
            }
        }
        assert_eq!(valid, rendered(FamilyId::F14, len as usize - 1), "length {len}");
    }
}

#[test]
fn listed_norm_four_sets() {
    let set = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
    assert_eq!(rendered(FamilyId::F2, 4), set(&["{}{{}}", "{{}{}}", "{{{}}}", "{{}}{}", "{}{}{}"]));
    assert_eq!(
        rendered(FamilyId::F1, 4),
        set(&["(e,(e,(e,e)))", "(e,((e,e),e))", "((e,e),(e,e))", "((e,(e,e)),e)", "(((e,e),e),e)"])
    );
    assert_eq!(rendered(FamilyId::F10, 4), set(&["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2"]));
    let planar = rendered(FamilyId::F5, 4);
    assert_eq!(planar.len(), 5);
    assert!(planar.iter().all(|t| t.matches('(').count() == 4));
    let e = catalan_magma::families::PlanarTree::generator();
    assert_eq!(e.render(), "_");
}
