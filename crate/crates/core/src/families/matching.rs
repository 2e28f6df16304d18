//! F6: nested matchings on nodes `1..2n` where node 1 is free and node `2n` is virtual.
//!
//! In `u * v` the last node of `u` is merged with the first node of `v`, a
//! new arc joins the merged node to the image of the virtual node of `v`, and
//! a fresh virtual node is appended.

use crate::element_glue;
use crate::family::{CodecError, FamilyId, Magma};

use super::{check_matching, parse_count_and_pairs, render_pairs};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NestedMatching {
    nodes: u32,
    arcs: Vec<(u32, u32)>,
}

impl NestedMatching {
    pub fn nodes(&self) -> u32 {
        self.nodes
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }
}

impl Magma for NestedMatching {
    const ID: FamilyId = FamilyId::F6;

    fn generator() -> Self {
        NestedMatching { nodes: 2, arcs: Vec::new() }
    }

    fn product(&self, rhs: &Self) -> Self {
        let merged = self.nodes;
        let shift = merged - 1;
        let mut arcs = self.arcs.clone();
        arcs.push((merged, shift + rhs.nodes));
        arcs.extend(rhs.arcs.iter().map(|&(a, b)| (a + shift, b + shift)));
        arcs.sort_unstable();
        NestedMatching { nodes: self.nodes + rhs.nodes, arcs }
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        if self.nodes <= 2 {
            return None;
        }
        let last_real = self.nodes - 1;
        let &(s, _) = self.arcs.iter().find(|a| a.1 == last_real)?;
        let left = self.arcs.iter().copied().filter(|a| a.1 < s).collect();
        let right = self
            .arcs
            .iter()
            .filter(|a| a.0 > s && a.1 < last_real)
            .map(|&(a, b)| (a - (s - 1), b - (s - 1)))
            .collect();
        Some((
            NestedMatching { nodes: s, arcs: left },
            NestedMatching { nodes: self.nodes - s, arcs: right },
        ))
    }

    fn norm(&self) -> usize {
        self.nodes as usize / 2
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        let (n, arcs) = parse_count_and_pairs(s)?;
        let n = n as u32;
        if n < 2 || !n.is_multiple_of(2) {
            return Err(CodecError::invalid("node count must be even and at least 2"));
        }
        if arcs.iter().any(|&(a, b)| a == 1 || b == n) {
            return Err(CodecError::invalid("the first and the virtual last node carry no arc"));
        }
        check_matching(&arcs, 2..n, n)?;
        Ok(NestedMatching { nodes: n, arcs })
    }

    fn render(&self) -> String {
        format!("{}:{}", self.nodes, render_pairs(&self.arcs))
    }

    element_glue!(Matching);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> NestedMatching {
        NestedMatching::parse(s).unwrap()
    }

    #[test]
    fn small_products() {
        let e = NestedMatching::generator();
        assert_eq!(e.render(), "2:");
        assert_eq!(e.product(&e).render(), "4:2-3");
        assert_eq!(m("4:2-3").product(&e).render(), "6:2-3,4-5");
        assert_eq!(e.product(&m("4:2-3")).render(), "6:2-5,3-4");
        assert_eq!(m("4:2-3").product(&m("4:2-3")).render(), "8:2-3,4-7,5-6");
    }

    #[test]
    fn validation() {
        assert!(NestedMatching::parse("4:1-2").is_err());
        assert!(NestedMatching::parse("4:3-4").is_err());
        assert!(NestedMatching::parse("6:2-4,3-5").is_err());
        assert!(NestedMatching::parse("0:").is_err());
        assert_eq!(m("8:2-3,4-7,5-6").factorize(), Some((m("4:2-3"), m("4:2-3"))));
    }
}
