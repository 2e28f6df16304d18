//! Exhaustive property checks of the magma laws up to a norm bound.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;

use crate::bijection::{compose, decompose, enumerate_capped};
use crate::family::{family, Element, FamilyDescriptor, FamilyId};
use crate::numbers::{catalan_number, p_catalan_number};
use crate::stats::narayana_histogram_capped;
use crate::term::{enumerate_terms_capped, CapExceeded, Notation, Term, DEFAULT_CAP};
use crate::Error;

const MAX_REPORTED: usize = 5;

/// Result of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub scope: String,
    pub check: &'static str,
    pub cases: usize,
    /// First few counterexamples, empty on success.
    pub failures: Vec<String>,
    pub total_failures: usize,
}

impl CheckOutcome {
    fn new(scope: impl Into<String>, check: &'static str) -> Self {
        CheckOutcome { scope: scope.into(), check, cases: 0, failures: Vec::new(), total_failures: 0 }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.total_failures += 1;
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.total_failures == 0
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "{} {}: ok ({} cases)", self.scope, self.check, self.cases);
        }
        write!(f, "{} {}: FAIL {}/{}", self.scope, self.check, self.total_failures, self.cases)?;
        for d in &self.failures {
            write!(f, "\n  {d}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(f, "{o}")?;
        }
        Ok(())
    }
}

fn show(f: &dyn FamilyDescriptor, e: &Element) -> String {
    f.render(e).unwrap_or_else(|err| format!("<{err}>"))
}

/// Counts, factorization, norms, codec and term round trips, Narayana law.
pub fn verify_family(f: &dyn FamilyDescriptor, max_norm: usize) -> Result<Vec<CheckOutcome>, Error> {
    let id = f.id().to_string();
    let by_norm: Vec<Vec<Element>> = (1..=max_norm)
        .map(|n| enumerate_capped(f, n, max_norm))
        .collect::<Result<_, _>>()?;

    let mut counts = CheckOutcome::new(&id, "counts");
    let mut distinct = CheckOutcome::new(&id, "distinct");
    let mut norms = CheckOutcome::new(&id, "norm");
    let mut irreducible = CheckOutcome::new(&id, "irreducibles");
    let mut codec = CheckOutcome::new(&id, "parse-render");
    let mut terms = CheckOutcome::new(&id, "decompose-compose");
    for (i, elems) in by_norm.iter().enumerate() {
        let n = i + 1;
        let expected = p_catalan_number(f.generator_count() as u64, n as u64);
        counts.case(expected == BigUint::from(elems.len()), || {
            format!("norm {n}: {} elements, expected {expected}", elems.len())
        });
        let texts: HashSet<String> = elems.iter().map(|e| show(f, e)).collect();
        distinct.case(texts.len() == elems.len(), || format!("norm {n}: duplicate elements"));
        for e in elems {
            let text = show(f, e);
            norms.case(f.norm(e).ok() == Some(n), || format!("{text}: expected norm {n}"));
            let factors = f.factorize(e)?;
            irreducible.case(factors.is_none() == (n == 1), || match factors {
                Some(_) => format!("{text}: a norm-1 element factorizes"),
                None => format!("{text}: irreducible at norm {n}"),
            });
            codec.case(f.parse(&text).as_ref() == Ok(e), || format!("{text} does not reparse"));
            let back = decompose(f, e).and_then(|t| compose(f, &t));
            terms.case(back.as_ref() == Ok(e), || format!("{text} does not recompose"));
        }
    }

    let mut unique = CheckOutcome::new(&id, "factorize-product");
    let mut additive = CheckOutcome::new(&id, "norm-additive");
    for (i, left) in by_norm.iter().enumerate() {
        for right in by_norm.iter().take(max_norm.saturating_sub(i + 1)) {
            for a in left {
                for b in right {
                    let c = f.product(a, b)?;
                    let detail = || format!("{} * {}", show(f, a), show(f, b));
                    unique.case(f.factorize(&c)? == Some((a.clone(), b.clone())), detail);
                    let sum = f.norm(a)? + f.norm(b)?;
                    additive.case(f.norm(&c)? == sum, detail);
                }
            }
        }
    }

    let mut narayana = CheckOutcome::new(&id, "narayana");
    if f.generator_count() == 1 {
        for n in 2..=max_norm {
            let h = narayana_histogram_capped(f, n, max_norm)?;
            narayana.case(h.matches_closed_form() && h.is_symmetric(), || {
                format!("norm {n}: {:?}", h.counts)
            });
        }
    }
    Ok(vec![counts, distinct, norms, irreducible, codec, terms, unique, additive, narayana])
}

/// Term algebra checks: notations, reversal, p-Catalan counts.
pub fn verify_core(max_norm: usize) -> Result<Vec<CheckOutcome>, Error> {
    let mut notations = CheckOutcome::new("core", "notations");
    let mut reverse = CheckOutcome::new("core", "reverse");
    let mut p_counts = CheckOutcome::new("core", "p-catalan");
    for p in 1..=3usize {
        for n in 1..=max_norm {
            let all = enumerate_terms_capped(p, n, max_norm)?;
            let expected = p_catalan_number(p as u64, n as u64);
            p_counts.case(expected == BigUint::from(all.len()), || format!("p={p} n={n}: {}", all.len()));
            if p > 1 {
                continue;
            }
            for t in &all {
                for notation in Notation::ALL {
                    let s = t.render(notation);
                    notations.case(Term::parse(&s, notation).as_ref() == Ok(t), || {
                        format!("{s} ({notation:?})")
                    });
                }
                let r = t.reverse();
                let anti = match (t, &r) {
                    (Term::Node(a, b), Term::Node(c, d)) => **c == b.reverse() && **d == a.reverse(),
                    (Term::Leaf(_), Term::Leaf(_)) => true,
                    _ => false,
                };
                reverse.case(anti && r.reverse() == *t && r.norm() == n, || {
                    t.render(Notation::Infix)
                });
            }
        }
    }
    let mut catalan = CheckOutcome::new("core", "catalan-recurrence");
    for n in 1..=20u64 {
        let sum: BigUint =
            (0..n).map(|k| catalan_number(k) * catalan_number(n - 1 - k)).sum();
        catalan.case(sum == catalan_number(n), || format!("C_{n}"));
    }
    Ok(vec![notations, reverse, p_counts, catalan])
}

/// Conversion round trips between every ordered pair in `ids`.
pub fn verify_conversions(ids: &[FamilyId], max_norm: usize) -> Result<Vec<CheckOutcome>, Error> {
    let mut out = Vec::new();
    let terms: Vec<Term> = (1..=max_norm)
        .map(|n| enumerate_terms_capped(1, n, max_norm))
        .collect::<Result<Vec<_>, _>>()?
        .concat();
    for &i in ids {
        let src = family(i);
        let elems: Vec<Element> = terms.iter().map(|t| compose(src, t)).collect::<Result<_, _>>()?;
        let mut check = CheckOutcome::new(i.to_string(), "conversions");
        for &j in ids {
            let dst = family(j);
            for e in &elems {
                let there = crate::bijection::universal_convert(src, dst, e)?;
                let back = crate::bijection::universal_convert(dst, src, &there)?;
                check.case(&back == e && dst.norm(&there)? == src.norm(e)?, || {
                    format!("{i} -> {j} -> {i} on {}", show(src, e))
                });
            }
        }
        out.push(check);
    }
    Ok(out)
}

/// The suite behind `verify`: one family, or everything with `None`.
pub fn run(target: Option<FamilyId>, max_norm: usize) -> Result<VerifyReport, Error> {
    if max_norm > DEFAULT_CAP {
        return Err(CapExceeded { norm: max_norm, cap: DEFAULT_CAP }.into());
    }
    let mut outcomes = Vec::new();
    let ids: Vec<FamilyId> = match target {
        Some(id) => vec![id],
        None => {
            outcomes.extend(verify_core(max_norm)?);
            FamilyId::ALL.to_vec()
        }
    };
    for &id in &ids {
        outcomes.extend(verify_family(family(id), max_norm)?);
    }
    outcomes.extend(verify_conversions(&ids, max_norm.min(5))?);
    Ok(VerifyReport { outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_passes_at_norm_five() {
        let report = run(None, 5).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.to_string().lines().all(|l| l.contains(": ok (")));
    }

    #[test]
    fn failures_are_reported() {
        let mut c = CheckOutcome::new("F0", "demo");
        for i in 0..10 {
            c.case(i % 2 == 0, || format!("case {i}"));
        }
        assert!(!c.passed());
        assert_eq!(c.failures.len(), MAX_REPORTED);
        assert!(c.to_string().starts_with("F0 demo: FAIL 5/10"));
    }
}
