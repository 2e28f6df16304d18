//! F10: 321-avoiding permutations.
//!
//! Row `i` holds a dot in column `σ_i`. A dot is black when `σ_i <= i` and
//! white otherwise. The product places `p1` top-left, inserts a new row and a
//! new last column, keeps black dots of `p2` and cascades its white dots one
//! white dot rightward, the last one into the new column.

use crate::element_glue;
use crate::family::{CodecError, FamilyId, Magma};

use super::{join_numbers, Cursor, MAX_NODES};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    /// One-line notation, values `1..=n`.
    values: Vec<u32>,
}

/// True when no `i < j < k` has `σ_i > σ_j > σ_k`.
pub fn is_321_avoiding(values: &[u32]) -> bool {
    // A 321 exists iff some entry has a larger entry before it and a smaller one after.
    let n = values.len();
    let mut suffix_min = vec![u32::MAX; n + 1];
    for i in (0..n).rev() {
        suffix_min[i] = suffix_min[i + 1].min(values[i]);
    }
    let mut prefix_max = 0;
    for j in 0..n {
        if prefix_max > values[j] && values[j] > suffix_min[j + 1] {
            return false;
        }
        prefix_max = prefix_max.max(values[j]);
    }
    true
}

fn is_permutation(values: &[u32]) -> bool {
    let mut seen = vec![false; values.len() + 1];
    values.iter().all(|&v| {
        (1..=values.len() as u32).contains(&v) && !std::mem::replace(&mut seen[v as usize], true)
    })
}

impl Permutation {
    /// `None` unless `values` is a 321-avoiding permutation of `1..=n`.
    pub fn new(values: Vec<u32>) -> Option<Self> {
        (is_permutation(&values) && is_321_avoiding(&values)).then_some(Permutation { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    fn product_raw(p1: &[u32], p2: &[u32]) -> Vec<u32> {
        let n1 = p1.len() as u32;
        let total = p1.len() + p2.len() + 1;
        let mut out = Vec::with_capacity(total);
        out.extend_from_slice(p1);
        let whites: Vec<usize> = (0..p2.len()).filter(|&i| p2[i] > i as u32 + 1).collect();
        let new_col = total as u32;
        out.push(whites.first().map_or(new_col, |&i| p2[i] + n1));
        let mut moved = p2.iter().map(|&v| v + n1).collect::<Vec<u32>>();
        for (a, &i) in whites.iter().enumerate() {
            moved[i] = whites.get(a + 1).map_or(new_col, |&next| p2[next] + n1);
        }
        out.extend(moved);
        out
    }

    /// Inverts the cascade assuming the new row is `n1 + 1`.
    fn split_at(values: &[u32], n1: usize) -> Option<(Vec<u32>, Vec<u32>)> {
        let n1u = n1 as u32;
        let n2 = values.len() - n1 - 1;
        let p1 = values[..n1].to_vec();
        let c0 = values[n1].checked_sub(n1u)?;
        let block: Vec<u32> = values[n1 + 1..].iter().map(|&v| v.wrapping_sub(n1u)).collect();
        let mut p2 = block.clone();
        // Dots to the right of the diagonal are cascaded whites.
        let moved: Vec<usize> = (0..n2).filter(|&i| block[i] > i as u32 + 1).collect();
        let mut prev = c0;
        for &i in &moved {
            p2[i] = prev;
            prev = block[i];
        }
        if prev != n2 as u32 + 1 {
            return None;
        }
        Some((p1, p2))
    }
}

impl Magma for Permutation {
    const ID: FamilyId = FamilyId::F10;

    fn generator() -> Self {
        Permutation::default()
    }

    fn product(&self, rhs: &Self) -> Self {
        Permutation { values: Self::product_raw(&self.values, &rhs.values) }
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        let v = &self.values;
        let mut found = None;
        let mut prefix_max = 0;
        for n1 in 0..v.len() {
            if n1 > 0 {
                prefix_max = prefix_max.max(v[n1 - 1]);
            }
            if prefix_max as usize != n1 {
                continue;
            }
            let Some((p1, p2)) = Self::split_at(v, n1) else { continue };
            if !(is_permutation(&p2) && is_321_avoiding(&p2)) {
                continue;
            }
            if Self::product_raw(&p1, &p2) == *v {
                assert!(found.is_none(), "321-avoiding product is not injective at {v:?}");
                found = Some((Permutation { values: p1 }, Permutation { values: p2 }));
            }
        }
        found
    }

    fn norm(&self) -> usize {
        self.values.len() + 1
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        if s == "_" {
            return Ok(Permutation::default());
        }
        let mut c = Cursor::new(s);
        let raw = c.list(b',', None, |c| c.number())?;
        c.finish()?;
        if raw.is_empty() {
            return Err(c.syntax("empty permutation, use `_`"));
        }
        if raw.len() as u64 > MAX_NODES {
            return Err(CodecError::invalid("permutation too long"));
        }
        let values: Vec<u32> = raw.iter().map(|&v| v.min(u32::MAX as u64) as u32).collect();
        if !is_permutation(&values) {
            return Err(CodecError::invalid(format!("not a permutation of 1..{}", values.len())));
        }
        if !is_321_avoiding(&values) {
            return Err(CodecError::invalid("contains the pattern 321"));
        }
        Ok(Permutation { values })
    }

    fn render(&self) -> String {
        if self.values.is_empty() {
            return "_".into();
        }
        join_numbers(&self.values)
    }

    element_glue!(Permutation);
}
