//! F3: non-crossing perfect chord diagrams on a marked circle.
//!
//! Nodes are read counter-clockwise from the mark. The product keeps the
//! left factor's chords, then adds one chord that encloses a copy of the
//! right factor.

use crate::element_glue;
use crate::family::{CodecError, FamilyId, Magma};

use super::{check_matching, parse_count_and_pairs, render_pairs};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ChordDiagram {
    nodes: u32,
    chords: Vec<(u32, u32)>,
}

impl ChordDiagram {
    pub fn nodes(&self) -> u32 {
        self.nodes
    }

    pub fn chords(&self) -> &[(u32, u32)] {
        &self.chords
    }
}

impl Magma for ChordDiagram {
    const ID: FamilyId = FamilyId::F3;

    fn generator() -> Self {
        ChordDiagram::default()
    }

    fn product(&self, rhs: &Self) -> Self {
        let shift = self.nodes + 1;
        let mut chords = self.chords.clone();
        chords.push((shift, shift + rhs.nodes + 1));
        chords.extend(rhs.chords.iter().map(|&(a, b)| (a + shift, b + shift)));
        chords.sort_unstable();
        ChordDiagram { nodes: self.nodes + rhs.nodes + 2, chords }
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        if self.nodes == 0 {
            return None;
        }
        let last = self.nodes;
        let &(s, _) = self.chords.iter().find(|c| c.1 == last)?;
        let left = self.chords.iter().copied().filter(|c| c.1 < s).collect();
        let right = self
            .chords
            .iter()
            .filter(|c| c.0 > s && c.1 < last)
            .map(|&(a, b)| (a - s, b - s))
            .collect();
        Some((
            ChordDiagram { nodes: s - 1, chords: left },
            ChordDiagram { nodes: last - s - 1, chords: right },
        ))
    }

    fn norm(&self) -> usize {
        self.chords.len() + 1
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        let (n, chords) = parse_count_and_pairs(s)?;
        let n = n as u32;
        if !n.is_multiple_of(2) {
            return Err(CodecError::invalid("node count must be even"));
        }
        check_matching(&chords, 1..=n, n)?;
        Ok(ChordDiagram { nodes: n, chords })
    }

    fn render(&self) -> String {
        format!("{}:{}", self.nodes, render_pairs(&self.chords))
    }

    element_glue!(Chords);
}
