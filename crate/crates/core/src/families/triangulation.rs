//! F9: triangulations of a polygon with vertices `1..n`, vertex 1 marked.
//!
//! The generator is the 2-gon. In `p1 * p2` the last vertex of `p1` is glued
//! to the first vertex of `p2` and the outer edge `1-N` closes a new triangle.

use crate::element_glue;
use crate::family::{CodecError, FamilyId, Magma};

use super::{arcs_cross, parse_count_and_pairs, render_pairs};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    n: u32,
    chords: Vec<(u32, u32)>,
}

impl Triangulation {
    pub fn vertices(&self) -> u32 {
        self.n
    }

    pub fn chords(&self) -> &[(u32, u32)] {
        &self.chords
    }

    fn adjacent(&self, a: u32, b: u32) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        b - a == 1 || (a == 1 && b == self.n) || self.chords.binary_search(&(a, b)).is_ok()
    }

    /// Number of triangles containing vertex `v`.
    pub fn triangles_at(&self, v: u32) -> u32 {
        if self.n == 2 {
            return 0;
        }
        1 + self.chords.iter().filter(|c| c.0 == v || c.1 == v).count() as u32
    }

    /// Builds from a vertex count and chord list; `None` unless it triangulates.
    pub fn new(n: u32, mut chords: Vec<(u32, u32)>) -> Option<Self> {
        chords.sort_unstable();
        validate(n, &chords).ok()?;
        Some(Triangulation { n, chords })
    }
}

fn validate(n: u32, chords: &[(u32, u32)]) -> Result<(), CodecError> {
    if n < 2 {
        return Err(CodecError::invalid("a polygon needs at least 2 vertices"));
    }
    let expected = n.saturating_sub(3) as usize;
    if chords.len() != expected {
        return Err(CodecError::invalid(format!(
            "an {n}-gon needs {expected} chords, found {}",
            chords.len()
        )));
    }
    for (i, &(a, b)) in chords.iter().enumerate() {
        if !(1 <= a && a + 2 <= b && b <= n) || (a == 1 && b == n) {
            return Err(CodecError::invalid(format!("{a}-{b} is not a diagonal")));
        }
        if i > 0 && chords[i - 1] == (a, b) {
            return Err(CodecError::invalid(format!("diagonal {a}-{b} repeated")));
        }
    }
    for (i, &p) in chords.iter().enumerate() {
        for &q in &chords[i + 1..] {
            if arcs_cross(p, q) {
                return Err(CodecError::invalid(format!(
                    "diagonals {}-{} and {}-{} cross",
                    p.0, p.1, q.0, q.1
                )));
            }
        }
    }
    Ok(())
}

impl Magma for Triangulation {
    const ID: FamilyId = FamilyId::F9;

    fn generator() -> Self {
        Triangulation { n: 2, chords: Vec::new() }
    }

    fn product(&self, rhs: &Self) -> Self {
        let (n1, n2) = (self.n, rhs.n);
        let total = n1 + n2 - 1;
        let mut chords = self.chords.clone();
        chords.extend(rhs.chords.iter().map(|&(a, b)| (a + n1 - 1, b + n1 - 1)));
        if n1 >= 3 {
            chords.push((1, n1));
        }
        if n2 >= 3 {
            chords.push((n1, total));
        }
        chords.sort_unstable();
        Triangulation { n: total, chords }
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        if self.n == 2 {
            return None;
        }
        let n = self.n;
        // Apex of the triangle standing on the outer edge 1-n.
        let m = (2..n).find(|&m| self.adjacent(1, m) && self.adjacent(m, n))?;
        let left = self.chords.iter().copied().filter(|&(a, b)| b <= m && (a, b) != (1, m)).collect();
        let right = self
            .chords
            .iter()
            .filter(|&&(a, b)| a >= m && (a, b) != (m, n))
            .map(|&(a, b)| (a - m + 1, b - m + 1))
            .collect();
        Some((
            Triangulation { n: m, chords: left },
            Triangulation { n: n - m + 1, chords: right },
        ))
    }

    fn norm(&self) -> usize {
        self.n as usize - 1
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        let (n, chords) = parse_count_and_pairs(s)?;
        let n = n as u32;
        validate(n, &chords)?;
        Ok(Triangulation { n, chords })
    }

    fn render(&self) -> String {
        format!("{}:{}", self.n, render_pairs(&self.chords))
    }

    element_glue!(Triangulation);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Triangulation {
        Triangulation::parse(s).unwrap()
    }

    #[test]
    fn products() {
        let e = Triangulation::generator();
        let tri = e.product(&e);
        assert_eq!(tri.render(), "3:");
        assert_eq!(tri.product(&tri).render(), "5:1-3,3-5");
        assert_eq!(tri.product(&e).render(), "4:1-3");
        assert_eq!(e.product(&tri).render(), "4:2-4");
        let left = e.product(&tri);
        assert_eq!(left.product(&tri).render(), "6:1-4,2-4,4-6");
    }

    #[test]
    fn factorization() {
        assert_eq!(t("5:1-3,3-5").factorize(), Some((t("3:"), t("3:"))));
        assert_eq!(t("3:").factorize(), Some((t("2:"), t("2:"))));
        assert_eq!(t("2:").factorize(), None);
    }

    #[test]
    fn validation() {
        assert!(Triangulation::parse("5:1-3").is_err());
        assert!(Triangulation::parse("5:1-4,2-5").is_err());
        assert!(Triangulation::parse("4:1-2").is_err());
        assert!(Triangulation::parse("4:1-4").is_err());
        assert!(Triangulation::parse("1:").is_err());
        assert!(Triangulation::parse("4:1-3,").unwrap_err().is_syntax());
    }
}
