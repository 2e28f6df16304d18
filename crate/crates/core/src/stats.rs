//! Narayana statistics over enumerated families.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::bijection::{decompose, enumerate_capped};
use crate::family::FamilyDescriptor;
use crate::numbers::narayana_value;
use crate::term::DEFAULT_CAP;
use crate::Error;

/// How many norm-`norm` elements have `k` right multiplications by the generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NarayanaHistogram {
    pub norm: usize,
    /// Keys `1..norm` with zero counts included, or `{0: 1}` at norm 1.
    pub counts: BTreeMap<usize, u64>,
}

impl NarayanaHistogram {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.counts.iter().all(|(&k, v)| self.counts.get(&(self.norm - k)) == Some(v))
    }

    /// Pointwise comparison with the closed form.
    pub fn matches_closed_form(&self) -> bool {
        self.counts
            .iter()
            .all(|(&k, &v)| narayana_value(self.norm as u64, k as u64) == BigUint::from(v))
    }

    /// `k count` lines for `k = 1..norm`.
    pub fn render(&self) -> String {
        self.counts.iter().map(|(k, v)| format!("{k} {v}\n")).collect()
    }
}

pub fn narayana_histogram(f: &dyn FamilyDescriptor, n: usize) -> Result<NarayanaHistogram, Error> {
    narayana_histogram_capped(f, n, DEFAULT_CAP)
}

pub fn narayana_histogram_capped(
    f: &dyn FamilyDescriptor,
    n: usize,
    cap: usize,
) -> Result<NarayanaHistogram, Error> {
    let mut counts: BTreeMap<usize, u64> = (1..n).map(|k| (k, 0)).collect();
    for e in enumerate_capped(f, n, cap)? {
        *counts.entry(decompose(f, &e)?.narayana_right()).or_default() += 1;
    }
    Ok(NarayanaHistogram { norm: n, counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{family, FamilyId};

    #[test]
    fn norm_four_and_six() {
        let h = narayana_histogram(family(FamilyId::F8), 4).unwrap();
        assert_eq!(h.counts, BTreeMap::from([(1, 1), (2, 3), (3, 1)]));
        assert_eq!(h.render(), "1 1\n2 3\n3 1\n");
        let h = narayana_histogram(family(FamilyId::F2), 6).unwrap();
        assert_eq!(h.counts.values().copied().collect::<Vec<_>>(), vec![1, 10, 20, 10, 1]);
        assert!(h.is_symmetric() && h.matches_closed_form());
        assert_eq!(h.total(), 42);
    }

    #[test]
    fn generator_has_no_right_multiplication() {
        let h = narayana_histogram(family(FamilyId::F4), 1).unwrap();
        assert_eq!(h.counts, BTreeMap::from([(0, 1)]));
    }
}
