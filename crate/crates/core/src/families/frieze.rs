//! F14: frieze sequences, the first non-trivial row of a Conway–Coxeter frieze.
//!
//! A sequence is valid when the unimodular rule, started from a row of ones
//! and the sequence itself, closes with a row of ones. Factorization goes
//! through the matching triangulation (entries count triangles per vertex).

use thiserror::Error;

use crate::element_glue;
use crate::family::{CodecError, FamilyId, Magma};

use super::triangulation::Triangulation;
use super::{join_numbers, Cursor, MAX_NODES};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FriezeSequence {
    seq: Vec<u64>,
}

/// Why a sequence does not generate a frieze.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("a frieze sequence has at least two entries")]
    TooShort,
    #[error("the only length-2 frieze sequence is 0,0")]
    NotGenerator,
    #[error("row {row}, entry {col}: division is not exact")]
    NotExact { row: usize, col: usize },
    #[error("row {row}, entry {col}: entry is not positive")]
    NotPositive { row: usize, col: usize },
    #[error("row {row}, entry {col}: arithmetic overflow")]
    Overflow { row: usize, col: usize },
    #[error("row {row} is not a row of ones")]
    NotClosed { row: usize },
}

/// Rows `1..=n-1` of the frieze over one period, row 1 being all ones.
pub fn frieze_expand(seq: &[u64]) -> Result<Vec<Vec<u64>>, FriezeError> {
    let n = seq.len();
    match n {
        0 | 1 => return Err(FriezeError::TooShort),
        2 if seq == [0, 0] => return Ok(vec![vec![1, 1]]),
        2 => return Err(FriezeError::NotGenerator),
        _ => {}
    }
    let last = n - 1;
    let mut rows: Vec<Vec<i128>> = vec![vec![1; n], seq.iter().map(|&v| v as i128).collect()];
    while rows.len() < last {
        let r = rows.len();
        let (above, cur) = (&rows[r - 2], &rows[r - 1]);
        // `cur` is row r; it must be positive before it is used further.
        if let Some(col) = cur.iter().position(|&v| v <= 0) {
            return Err(FriezeError::NotPositive { row: r, col: col + 1 });
        }
        let mut next = Vec::with_capacity(n);
        for i in 0..n {
            let j = (i + 1) % n;
            let num = cur[i]
                .checked_mul(cur[j])
                .and_then(|v| v.checked_sub(1))
                .ok_or(FriezeError::Overflow { row: r + 1, col: i + 1 })?;
            if num % above[j] != 0 {
                return Err(FriezeError::NotExact { row: r + 1, col: i + 1 });
            }
            next.push(num / above[j]);
        }
        rows.push(next);
    }
    if rows[last - 1].iter().any(|&v| v != 1) {
        return Err(FriezeError::NotClosed { row: last });
    }
    Ok(rows.into_iter().map(|r| r.into_iter().map(|v| v as u64).collect()).collect())
}

/// Entry `i` counts the triangles at vertex `i`.
pub fn frieze_from_triangulation(t: &Triangulation) -> FriezeSequence {
    FriezeSequence { seq: (1..=t.vertices()).map(|v| t.triangles_at(v) as u64).collect() }
}

impl FriezeSequence {
    /// `None` unless `seq` passes [`frieze_expand`].
    pub fn new(seq: Vec<u64>) -> Option<Self> {
        frieze_expand(&seq).ok()?;
        Some(FriezeSequence { seq })
    }

    pub fn values(&self) -> &[u64] {
        &self.seq
    }

    /// Rebuilds the triangulation by clipping ears (entries equal to 1).
    pub fn to_triangulation(&self) -> Triangulation {
        let n = self.seq.len() as u32;
        let mut verts: Vec<(u32, u64)> = (1..=n).zip(self.seq.iter().copied()).collect();
        let mut chords = Vec::new();
        while verts.len() > 3 {
            let i = verts.iter().position(|v| v.1 == 1).expect("a frieze polygon has an ear");
            let len = verts.len();
            let (p, q) = ((i + len - 1) % len, (i + 1) % len);
            let (a, b) = (verts[p].0, verts[q].0);
            chords.push((a.min(b), a.max(b)));
            verts[p].1 -= 1;
            verts[q].1 -= 1;
            verts.remove(i);
        }
        Triangulation::new(n, chords).expect("ear clipping yields a triangulation")
    }
}

impl Magma for FriezeSequence {
    const ID: FamilyId = FamilyId::F14;

    fn generator() -> Self {
        FriezeSequence { seq: vec![0, 0] }
    }

    fn product(&self, rhs: &Self) -> Self {
        let (a, b) = (&self.seq, &rhs.seq);
        let (n, m) = (a.len(), b.len());
        let mut c = Vec::with_capacity(n + m - 1);
        c.push(a[0] + 1);
        c.extend_from_slice(&a[1..n - 1]);
        c.push(a[n - 1] + b[0] + 1);
        c.extend_from_slice(&b[1..m - 1]);
        c.push(b[m - 1] + 1);
        FriezeSequence { seq: c }
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        if self.seq.len() == 2 {
            return None;
        }
        let (a, b) = self.to_triangulation().factorize()?;
        Some((frieze_from_triangulation(&a), frieze_from_triangulation(&b)))
    }

    fn norm(&self) -> usize {
        self.seq.len() - 1
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        let mut c = Cursor::new(s);
        let seq = c.list(b',', None, |c| c.number())?;
        c.finish()?;
        if seq.len() as u64 > MAX_NODES {
            return Err(CodecError::invalid("sequence too long"));
        }
        frieze_expand(&seq).map_err(|e| CodecError::invalid(e.to_string()))?;
        Ok(FriezeSequence { seq })
    }

    fn render(&self) -> String {
        join_numbers(&self.seq)
    }

    element_glue!(Frieze);
}
