//! F11: staircase (parallelogram) polygons as column heights and neighbour overlaps.
//!
//! `a * b` grows every column of `b` by one cell at the bottom and glues `a`
//! on its left with a one-cell neck. The generator is the bare edge, which
//! turns into a single cell when it is the right factor.

use crate::element_glue;
use crate::family::{CodecError, FamilyId, Magma};

use super::{join_numbers, Cursor, MAX_NODES};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StaircasePolygon {
    heights: Vec<u32>,
    /// `overlaps[i]` is the shared height of columns `i` and `i + 1`.
    overlaps: Vec<u32>,
}

impl StaircasePolygon {
    /// `None` unless overlaps satisfy `1 <= o_i <= min(h_i, h_{i+1})`.
    pub fn new(heights: Vec<u32>, overlaps: Vec<u32>) -> Option<Self> {
        validate(&heights, &overlaps).ok()?;
        Some(StaircasePolygon { heights, overlaps })
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn overlaps(&self) -> &[u32] {
        &self.overlaps
    }

    fn lifted(&self) -> StaircasePolygon {
        if self.heights.is_empty() {
            return StaircasePolygon { heights: vec![1], overlaps: Vec::new() };
        }
        StaircasePolygon {
            heights: self.heights.iter().map(|h| h + 1).collect(),
            overlaps: self.overlaps.iter().map(|o| o + 1).collect(),
        }
    }

    fn lowered(&self) -> StaircasePolygon {
        if self.heights == [1] {
            return StaircasePolygon::default();
        }
        StaircasePolygon {
            heights: self.heights.iter().map(|h| h - 1).collect(),
            overlaps: self.overlaps.iter().map(|o| o - 1).collect(),
        }
    }
}

fn validate(heights: &[u32], overlaps: &[u32]) -> Result<(), CodecError> {
    if heights.is_empty() {
        return if overlaps.is_empty() {
            Ok(())
        } else {
            Err(CodecError::invalid("overlaps without columns"))
        };
    }
    if overlaps.len() + 1 != heights.len() {
        return Err(CodecError::invalid(format!(
            "{} columns need {} overlaps, found {}",
            heights.len(),
            heights.len() - 1,
            overlaps.len()
        )));
    }
    if let Some(i) = heights.iter().position(|&h| h == 0) {
        return Err(CodecError::invalid(format!("column {} has height 0", i + 1)));
    }
    for (i, &o) in overlaps.iter().enumerate() {
        if o < 1 || o > heights[i].min(heights[i + 1]) {
            return Err(CodecError::invalid(format!(
                "overlap {o} between columns {} and {} is out of range",
                i + 1,
                i + 2
            )));
        }
    }
    Ok(())
}

impl Magma for StaircasePolygon {
    const ID: FamilyId = FamilyId::F11;

    fn generator() -> Self {
        StaircasePolygon::default()
    }

    fn product(&self, rhs: &Self) -> Self {
        let b = rhs.lifted();
        if self.heights.is_empty() {
            return b;
        }
        let mut heights = self.heights.clone();
        heights.extend_from_slice(&b.heights);
        let mut overlaps = self.overlaps.clone();
        overlaps.push(1);
        overlaps.extend_from_slice(&b.overlaps);
        StaircasePolygon { heights, overlaps }
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        if self.heights.is_empty() {
            return None;
        }
        // Cut at the rightmost neck; the left boundary counts as a neck.
        let (left, right) = match self.overlaps.iter().rposition(|&o| o == 1) {
            Some(j) => (
                StaircasePolygon {
                    heights: self.heights[..=j].to_vec(),
                    overlaps: self.overlaps[..j].to_vec(),
                },
                StaircasePolygon {
                    heights: self.heights[j + 1..].to_vec(),
                    overlaps: self.overlaps[j + 1..].to_vec(),
                },
            ),
            None => (StaircasePolygon::default(), self.clone()),
        };
        Some((left, right.lowered()))
    }

    /// Steps of one bounding path: columns plus vertical rise.
    fn norm(&self) -> usize {
        if self.heights.is_empty() {
            return 1;
        }
        let rise: u32 = self.heights[0]
            + self.overlaps.iter().zip(&self.heights[1..]).map(|(o, h)| h - o).sum::<u32>();
        self.heights.len() + rise as usize
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        if s == "_" {
            return Ok(StaircasePolygon::default());
        }
        let mut c = Cursor::new(s);
        let heights = c.list(b',', Some(b';'), |c| c.number())?;
        if heights.is_empty() {
            return Err(c.syntax("expected a column height"));
        }
        c.expect(b';')?;
        let overlaps = c.list(b',', None, |c| c.number())?;
        c.finish()?;
        if heights.len() as u64 > MAX_NODES || heights.iter().chain(&overlaps).any(|&v| v > MAX_NODES) {
            return Err(CodecError::invalid("polygon too large"));
        }
        let heights: Vec<u32> = heights.into_iter().map(|v| v as u32).collect();
        let overlaps: Vec<u32> = overlaps.into_iter().map(|v| v as u32).collect();
        validate(&heights, &overlaps)?;
        Ok(StaircasePolygon { heights, overlaps })
    }

    fn render(&self) -> String {
        if self.heights.is_empty() {
            return "_".into();
        }
        format!("{};{}", join_numbers(&self.heights), join_numbers(&self.overlaps))
    }

    element_glue!(Staircase);
}
