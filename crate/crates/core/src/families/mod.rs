//! The fourteen Catalan families with their products, factorizations and codecs.

mod avoid321;
mod brackets;
mod cartesian;
mod cbt;
mod chords;
mod dyck;
mod floorplan;
mod frieze;
mod matching;
mod ncpart;
mod planar;
mod staircase;
mod tableau;
mod triangulation;

pub use avoid321::{is_321_avoiding, Permutation};
pub use brackets::BracketWord;
pub use cartesian::CartesianFamily;
pub use cbt::{cbt_reflect, BinaryTree};
pub use chords::ChordDiagram;
pub use dyck::{dyck_left_product, dyck_peaks, dyck_reflect, DyckPath};
pub use floorplan::{FloorPlan, Room};
pub use frieze::{frieze_expand, frieze_from_triangulation, FriezeError, FriezeSequence};
pub use matching::NestedMatching;
pub use ncpart::NonCrossingPartition;
pub use planar::PlanarTree;
pub use staircase::StaircasePolygon;
pub use tableau::{tableau_to_dyck_direct, StandardTableau};
pub use triangulation::Triangulation;

use crate::family::CodecError;

/// Byte cursor shared by the codecs.
pub(crate) struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(s: &'a str) -> Self {
        Cursor { bytes: s.as_bytes(), pos: 0 }
    }

    pub fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    pub fn at_end(&self) -> bool {
        self.pos == self.bytes.len()
    }

    pub fn syntax(&self, msg: impl Into<String>) -> CodecError {
        CodecError::Syntax { pos: self.pos, msg: msg.into() }
    }

    pub fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, b: u8) -> Result<(), CodecError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{}`", b as char)))
        }
    }

    /// Unsigned decimal without leading zeros.
    pub fn number(&mut self) -> Result<u64, CodecError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a number"));
        }
        if self.bytes[start] == b'0' && self.pos - start > 1 {
            return Err(CodecError::Syntax { pos: start, msg: "leading zero".into() });
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse()
            .map_err(|_| CodecError::Syntax { pos: start, msg: "number too large".into() })
    }

    pub fn finish(&self) -> Result<(), CodecError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.syntax("trailing characters"))
        }
    }

    /// `item (sep item)*`, possibly empty when the cursor is already at `stop` or the end.
    pub fn list<T>(
        &mut self,
        sep: u8,
        stop: Option<u8>,
        mut item: impl FnMut(&mut Self) -> Result<T, CodecError>,
    ) -> Result<Vec<T>, CodecError> {
        let mut out = Vec::new();
        if self.at_end() || (stop.is_some() && self.peek() == stop) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if !self.eat(sep) {
                return Ok(out);
            }
        }
    }

    /// `a-b`
    pub fn pair(&mut self) -> Result<(u64, u64), CodecError> {
        let a = self.number()?;
        self.expect(b'-')?;
        let b = self.number()?;
        Ok((a, b))
    }
}

/// Renders `a-b` pairs joined by commas.
pub(crate) fn render_pairs(pairs: &[(u32, u32)]) -> String {
    pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(",")
}

pub(crate) fn join_numbers<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// True when two arcs `(a,b)`, `(c,d)` with `a<b`, `c<d` cross.
pub(crate) fn arcs_cross((a, b): (u32, u32), (c, d): (u32, u32)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Checks a set of arcs is a non-crossing perfect matching on `nodes`.
pub(crate) fn check_matching(
    arcs: &[(u32, u32)],
    nodes: impl Iterator<Item = u32>,
    max_node: u32,
) -> Result<(), CodecError> {
    let mut seen = vec![false; max_node as usize + 1];
    for &(a, b) in arcs {
        if a >= b {
            return Err(CodecError::invalid(format!("arc {a}-{b} must have a < b")));
        }
        if b > max_node || a == 0 {
            return Err(CodecError::invalid(format!("arc {a}-{b} out of range")));
        }
        for x in [a, b] {
            if std::mem::replace(&mut seen[x as usize], true) {
                return Err(CodecError::invalid(format!("node {x} used twice")));
            }
        }
    }
    for x in nodes {
        if !seen[x as usize] {
            return Err(CodecError::invalid(format!("node {x} is unmatched")));
        }
    }
    for (i, &p) in arcs.iter().enumerate() {
        for &q in &arcs[i + 1..] {
            if arcs_cross(p, q) {
                return Err(CodecError::invalid(format!(
                    "arcs {}-{} and {}-{} cross",
                    p.0, p.1, q.0, q.1
                )));
            }
        }
    }
    Ok(())
}

/// Upper bound on node counts accepted by the codecs.
pub(crate) const MAX_NODES: u64 = 1 << 20;

/// Parses `N:` followed by `a-b` pairs, returning the node count and sorted pairs.
pub(crate) fn parse_count_and_pairs(s: &str) -> Result<(u64, Vec<(u32, u32)>), CodecError> {
    let mut c = Cursor::new(s);
    let n = c.number()?;
    c.expect(b':')?;
    let pairs = c.list(b',', None, Cursor::pair)?;
    c.finish()?;
    if n > MAX_NODES {
        return Err(CodecError::invalid("node count too large"));
    }
    let mut out = Vec::with_capacity(pairs.len());
    for (a, b) in pairs {
        if a > n || b > n {
            return Err(CodecError::invalid(format!("pair {a}-{b} exceeds {n}")));
        }
        out.push((a as u32, b as u32));
    }
    out.sort_unstable();
    Ok((n, out))
}
