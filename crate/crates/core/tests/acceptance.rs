//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::process::Command;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use catalan_magma::bijection::{compose, decompose, enumerate, universal_convert};
use catalan_magma::families::{dyck_left_product, dyck_peaks, dyck_reflect, cbt_reflect, frieze_expand, tableau_to_dyck_direct};
use catalan_magma::family::{family, Element, FamilyDescriptor, FamilyId, Magma};
use catalan_magma::magma_lab::{classify, derive_norm, FiniteMagmaTable, Variant};
use catalan_magma::numbers::{catalan_number, narayana_value};
use catalan_magma::stats::narayana_histogram;
use catalan_magma::term::{enumerate_terms, Notation, Term};
use catalan_magma::{bijection, families};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn show(f: &dyn FamilyDescriptor, e: &Element) -> String {
    f.render(e).unwrap_or_else(|err| format!("<{err}>"))
}

fn up_to(f: &dyn FamilyDescriptor, max: usize) -> Result<Vec<Element>, String> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(enumerate(f, n).map_err(fail)?);
    }
    Ok(out)
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for id in FamilyId::ALL {
        let max = if matches!(id, FamilyId::F1 | FamilyId::F2 | FamilyId::F4 | FamilyId::F8) { 10 } else { 8 };
        let f = family(id);
        for n in 1..=max {
            let all = enumerate(f, n).map_err(fail)?;
            let expected = catalan_number(n as u64 - 1);
            ensure(expected == all.len().into(), || format!("{id} norm {n}: {} elements, expected {expected}", all.len()))?;
            let distinct: HashSet<&Element> = all.iter().collect();
            ensure(distinct.len() == all.len(), || format!("{id} norm {n}: duplicates"))?;
            checked += all.len();
        }
    }
    Ok(format!("{checked} elements across 14 families"))
}

fn criterion_2() -> Outcome {
    let two: Vec<usize> = (1..=5).map(|l| enumerate_terms(2, l).map(|v| v.len())).collect::<Result<_, _>>().map_err(fail)?;
    let three: Vec<usize> = (1..=4).map(|l| enumerate_terms(3, l).map(|v| v.len())).collect::<Result<_, _>>().map_err(fail)?;
    ensure(two == [2, 4, 16, 80, 448], || format!("p=2: {two:?}"))?;
    ensure(three == [3, 9, 54, 405], || format!("p=3: {three:?}"))?;
    Ok(format!("p=2 {two:?}, p=3 {three:?}"))
}

fn round_trips(ids: &[FamilyId], max: usize) -> Result<usize, String> {
    let mut cases = 0;
    for &i in ids {
        let src = family(i);
        let elems = up_to(src, max)?;
        for &j in ids {
            let dst = family(j);
            for e in &elems {
                let there = universal_convert(src, dst, e).map_err(fail)?;
                let back = universal_convert(dst, src, &there).map_err(fail)?;
                ensure(&back == e, || format!("{i} -> {j} -> {i} moved {}", show(src, e)))?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn criterion_3() -> Outcome {
    let all = round_trips(&FamilyId::ALL, 5)?;
    let subset = round_trips(&[FamilyId::F2, FamilyId::F4, FamilyId::F8, FamilyId::F12], 7)?;
    let pools: Vec<Vec<Element>> = FamilyId::ALL.iter().map(|&id| up_to(family(id), 4)).collect::<Result<_, _>>()?;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let (i, j) = (rng.gen_range(0..14), rng.gen_range(0..14));
        let (src, dst) = (family(FamilyId::ALL[i]), family(FamilyId::ALL[j]));
        let a = &pools[i][rng.gen_range(0..pools[i].len())];
        let b = &pools[i][rng.gen_range(0..pools[i].len())];
        let lhs = universal_convert(src, dst, &src.product(a, b).map_err(fail)?).map_err(fail)?;
        let ca = universal_convert(src, dst, a).map_err(fail)?;
        let cb = universal_convert(src, dst, b).map_err(fail)?;
        let rhs = dst.product(&ca, &cb).map_err(fail)?;
        ensure(lhs == rhs, || format!("morphism fails for {} * {} into {}", show(src, a), show(src, b), dst.id()))?;
    }
    Ok(format!("{all} round trips at norm <= 5, {subset} at norm <= 7, 1000 morphism pairs"))
}

fn convert_text(from: FamilyId, to: FamilyId, text: &str) -> Result<String, String> {
    let (src, dst) = (family(from), family(to));
    let e = universal_convert(src, dst, &src.parse(text).map_err(fail)?).map_err(fail)?;
    dst.render(&e).map_err(fail)
}

fn term_of(id: FamilyId, text: &str) -> Result<String, String> {
    let f = family(id);
    Ok(decompose(f, &f.parse(text).map_err(fail)?).map_err(fail)?.render(Notation::Infix))
}

fn criterion_4() -> Outcome {
    use FamilyId::*;
    // (a) the same element in five families, both directions.
    let chain = [
        (F8, "uduudd"),
        (F2, "{}{{}}"),
        (F9, "5:1-3,3-5"),
        (F13, "2,2:0-1,1-2;0-2,0-1;1-2,1-2"),
        (F6, "8:2-3,4-7,5-6"),
    ];
    for &(i, a) in &chain {
        for &(j, b) in &chain {
            let got = convert_text(i, j, a)?;
            ensure(got == b, || format!("(a) {i} {a} -> {j} gave {got}, expected {b}"))?;
        }
    }
    // (b) peaks and valleys path to a staircase polygon.
    let got = convert_text(F8, F11, "uduududdud")?;
    ensure(got == "1,2,2,1;1,2,1", || format!("(b) staircase {got}"))?;
    // (c) tableau and its Dyck word.
    let got = convert_text(F12, F8, "1,2,4/3,5,6")?;
    ensure(got == "uududd", || format!("(c) {got}"))?;
    ensure(convert_text(F8, F12, "uududd")? == "1,2,4/3,5,6", || "(c) reverse direction".into())?;
    let t = families::StandardTableau::parse("1,2,4/3,5,6").map_err(fail)?;
    ensure(tableau_to_dyck_direct(&t).render() == "uududd", || "(c) direct reading".into())?;
    // (d) permutation 1342.
    let got = term_of(F10, "1,3,4,2")?;
    ensure(got == "((e*e)*(e*(e*e)))", || format!("(d) {got}"))?;
    // (e) frieze 221412.
    let got = term_of(F14, "2,2,1,4,1,2")?;
    ensure(got == "((e*(e*e))*(e*e))", || format!("(e) {got}"))?;
    // (f) the norm-4 friezes.
    let f14 = family(F14);
    let set: BTreeSet<String> = enumerate(f14, 4).map_err(fail)?.iter().map(|e| show(f14, e)).collect();
    let expected: BTreeSet<String> =
        ["1,2,2,1,3", "2,2,1,3,1", "2,1,3,1,2", "1,3,1,2,2", "3,1,2,2,1"].map(String::from).into();
    ensure(set == expected, || format!("(f) {set:?}"))?;
    Ok("anchors (a)-(f) reproduce".into())
}

fn criterion_5() -> Outcome {
    let four = BTreeMap::from([(1, 1), (2, 3), (3, 1)]);
    for id in FamilyId::ALL {
        let h = narayana_histogram(family(id), 4).map_err(fail)?;
        ensure(h.counts == four, || format!("{id}: {:?}", h.counts))?;
    }
    let dyck = family(FamilyId::F8);
    for n in 2..=9 {
        let h = narayana_histogram(dyck, n).map_err(fail)?;
        for (&k, &v) in &h.counts {
            ensure(narayana_value(n as u64, k as u64) == v.into(), || format!("N({n},{k}) = {v}"))?;
            ensure(h.counts.get(&(n - k)) == Some(&v), || format!("asymmetric at n={n}, k={k}"))?;
        }
        for e in enumerate(dyck, n).map_err(fail)? {
            let Element::Dyck(p) = &e else { return Err("F8 enumerated a foreign element".into()) };
            let nr = decompose(dyck, &e).map_err(fail)?.narayana_right();
            ensure(dyck_peaks(p) == nr, || format!("{}: {} peaks, N_r {nr}", p.render(), dyck_peaks(p)))?;
        }
    }
    Ok("norm 4 in all families; F8 to norm 9 with peaks and symmetry".into())
}

/// `(family, left, right, product)` for the small products of every family.
const FIXTURES: &[(FamilyId, &str, &str, &str)] = {
    use FamilyId::*;
    &[
        (F1, "e", "e", "(e,e)"),
        (F1, "(e,e)", "e", "((e,e),e)"),
        (F1, "e", "(e,e)", "(e,(e,e))"),
        (F1, "(e,e)", "(e,e)", "((e,e),(e,e))"),
        (F2, "_", "_", "{}"),
        (F2, "{}", "_", "{}{}"),
        (F2, "_", "{}", "{{}}"),
        (F2, "{}", "{}", "{}{{}}"),
        (F3, "0:", "0:", "2:1-2"),
        (F3, "2:1-2", "0:", "4:1-2,3-4"),
        (F3, "0:", "2:1-2", "4:1-4,2-3"),
        (F3, "2:1-2", "2:1-2", "6:1-2,3-6,4-5"),
        (F4, "*", "*", "(*,*)"),
        (F4, "(*,*)", "*", "((*,*),*)"),
        (F4, "*", "(*,*)", "(*,(*,*))"),
        (F4, "(*,*)", "(*,*)", "((*,*),(*,*))"),
        (F5, "_", "_", "(())"),
        (F5, "(())", "_", "(()())"),
        (F5, "_", "(())", "((()))"),
        (F5, "(())", "(())", "(()(()))"),
        (F6, "2:", "2:", "4:2-3"),
        (F6, "4:2-3", "2:", "6:2-3,4-5"),
        (F6, "2:", "4:2-3", "6:2-5,3-4"),
        (F6, "4:2-3", "4:2-3", "8:2-3,4-7,5-6"),
        (F7, "0:", "0:", "1:{1}"),
        (F7, "1:{1}", "0:", "2:{1}{2}"),
        (F7, "0:", "1:{1}", "2:{1,2}"),
        (F7, "1:{1}", "3:{1}{2,3}", "5:{1}{2,4,5}{3}"),
        (F8, "_", "_", "ud"),
        (F8, "ud", "_", "udud"),
        (F8, "_", "ud", "uudd"),
        (F8, "ud", "ud", "uduudd"),
        (F9, "2:", "2:", "3:"),
        (F9, "3:", "2:", "4:1-3"),
        (F9, "2:", "3:", "4:2-4"),
        (F9, "3:", "3:", "5:1-3,3-5"),
        // Two documented errata: the rule gives 21 and 132 where the pictures differ.
        (F10, "_", "_", "1"),
        (F10, "1", "_", "1,2"),
        (F10, "_", "1", "2,1"),
        (F10, "1", "1", "1,3,2"),
        (F11, "_", "_", "1;"),
        (F11, "1;", "_", "1,1;1"),
        (F11, "_", "1;", "2;"),
        (F11, "1;", "1;", "1,2;1"),
        (F12, "_", "_", "1/2"),
        (F12, "1/2", "_", "1,3/2,4"),
        (F12, "_", "1/2", "1,2/3,4"),
        (F12, "1/2", "1/2", "1,3,4/2,5,6"),
        (F13, "_", "_", "1,1:0-1,0-1"),
        (F13, "1,1:0-1,0-1", "_", "1,2:0-1,0-1;0-1,1-2"),
        (F13, "_", "1,1:0-1,0-1", "2,1:0-1,0-1;1-2,0-1"),
        (F13, "1,1:0-1,0-1", "1,1:0-1,0-1", "2,2:0-1,1-2;0-2,0-1;1-2,1-2"),
        (F14, "0,0", "0,0", "1,1,1"),
        (F14, "0,0", "1,1,1", "1,2,1,2"),
        (F14, "1,1,1", "0,0", "2,1,2,1"),
        (F14, "1,1,1", "1,1,1", "2,1,3,1,2"),
    ]
};

fn criterion_6() -> Outcome {
    for &(id, a, b, c) in FIXTURES {
        let f = family(id);
        let (x, y) = (f.parse(a).map_err(fail)?, f.parse(b).map_err(fail)?);
        let got = show(f, &f.product(&x, &y).map_err(fail)?);
        ensure(got == c, || format!("{id}: {a} * {b} = {got}, expected {c}"))?;
        let back = f.factorize(&f.parse(c).map_err(fail)?).map_err(fail)?;
        ensure(back == Some((x, y)), || format!("{id}: {c} does not factor back"))?;
    }
    Ok(format!("{} products across 14 families", FIXTURES.len()))
}

fn criterion_7() -> Outcome {
    let terms: Vec<Term> = (1..=6).map(|n| enumerate_terms(1, n)).collect::<Result<Vec<_>, _>>().map_err(fail)?.concat();
    let cbt = family(FamilyId::F4);
    for t in &terms {
        ensure(t.reverse().reverse() == *t, || format!("reverse is not involutive on {}", t.render(Notation::Infix)))?;
        if let Term::Node(a, b) = t {
            ensure(t.reverse() == Term::product(b.reverse(), a.reverse()), || "not an anti-isomorphism".into())?;
        }
        let Element::BinaryTree(tree) = compose(cbt, t).map_err(fail)? else { return Err("F4 mismatch".into()) };
        let Element::BinaryTree(rev) = compose(cbt, &t.reverse()).map_err(fail)? else { return Err("F4 mismatch".into()) };
        ensure(cbt_reflect(&tree) == rev, || format!("reflection differs from reversal on {}", tree.render()))?;
    }
    let paths: Vec<families::DyckPath> = (1..=4).flat_map(|n| bijection::enumerate_native::<families::DyckPath>(n).unwrap()).collect();
    for a in &paths {
        for b in &paths {
            let lhs = dyck_reflect(&a.product(b));
            let rhs = dyck_left_product(&dyck_reflect(b), &dyck_reflect(a));
            ensure(lhs == rhs, || format!("reflection relation fails on {} and {}", a.render(), b.render()))?;
        }
    }
    Ok(format!("{} terms, {} Dyck pairs", terms.len(), paths.len() * paths.len()))
}

fn criterion_8() -> Outcome {
    let expected = [
        (Variant::A, ("no", "no"), vec![1, 2]),
        (Variant::B, ("no", "yes"), vec![2, 8]),
        (Variant::C, ("yes", "yes"), vec![2]),
    ];
    for (v, (uf, fd), irr) in expected {
        let t = FiniteMagmaTable::diagonal(v, 6);
        let irr: BTreeSet<u64> = irr.into_iter().collect();
        for bound in 27..=200 {
            let c = classify(&t, bound);
            ensure(c.summary() == (uf, fd, &irr), || format!("variant {v} at bound {bound}: {:?}", c.summary()))?;
            if v == Variant::C {
                let n = derive_norm(&t, bound).map_err(fail)?;
                ensure(n.is_super_additive(), || format!("variant c at bound {bound}: {:?}", n.violations))?;
            }
        }
    }
    Ok("stable for bounds 27..=200".into())
}

fn criterion_9() -> Outcome {
    let f14 = family(FamilyId::F14);
    let mut count = 0;
    for e in up_to(f14, 7)? {
        let Element::Frieze(s) = &e else { return Err("F14 mismatch".into()) };
        ensure(frieze_expand(s.values()).is_ok(), || format!("{} fails expansion", s.render()))?;
        count += 1;
    }
    let mut valid = BTreeSet::new();
    for code in 0..5u64.pow(5) {
        let seq: Vec<u64> = (0..5).map(|i| code / 5u64.pow(i) % 5).collect();
        if frieze_expand(&seq).is_ok() {
            valid.insert(seq.iter().map(u64::to_string).collect::<String>());
        }
    }
    let expected: BTreeSet<String> = ["12213", "22131", "21312", "13122", "31221"].map(String::from).into();
    ensure(valid == expected, || format!("brute force found {valid:?}"))?;
    Ok(format!("{count} enumerated sequences valid; 3125 candidates give exactly the five"))
}

fn criterion_10() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_catalan");
    let run = |args: &[&str]| -> Result<(i32, String), String> {
        let out = Command::new(bin).args(args).output().map_err(fail)?;
        Ok((out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned()))
    };
    let cases: [(&[&str], &str); 3] = [
        (&["convert", "--from", "dyck", "--to", "brackets", "uduudd"], "{}{{}}\n"),
        (&["narayana", "--family", "dyck", "--norm", "4"], "1 1\n2 3\n3 1\n"),
        (&["enumerate", "--family", "dyck", "--norm", "4", "--count-only"], "5\n"),
    ];
    for (args, expected) in cases {
        let (code, out) = run(args)?;
        ensure(code == 0 && out == expected, || format!("{args:?}: exit {code}, stdout {out:?}"))?;
    }
    let (code, _) = run(&["verify", "--family", "all", "--max-norm", "6"])?;
    ensure(code == 0, || format!("verify exited {code}"))?;
    for bad in [
        &["convert", "--from", "dyck", "--to", "brackets", "uddu"][..],
        &["product", "--family", "frieze", "1,1,1,1", "0,0"],
        &["enumerate", "--family", "nope", "--norm", "3"],
        &["term", "--family", "dyck", "--notation", "sideways", "ud"],
    ] {
        let (code, _) = run(bad)?;
        ensure(code == 2, || format!("{bad:?} exited {code}, expected 2"))?;
    }
    Ok("documented outputs, verify exit 0, malformed input exit 2".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("enumeration counts", criterion_1),
        ("p-Catalan counts", criterion_2),
        ("conversion round trips and morphism", criterion_3),
        ("anchor conversions", criterion_4),
        ("Narayana statistics", criterion_5),
        ("family product fixtures", criterion_6),
        ("reverse and reflection transforms", criterion_7),
        ("magma lab classification", criterion_8),
        ("frieze validation", criterion_9),
        ("command line", criterion_10),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", n + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
