//! F13: floor plans, rectangles tiling a rectangle up to wall sliding.
//!
//! Legal plans have no horizontal wall ending against a vertical wall from
//! the left, so every inner horizontal wall runs to the right boundary. A
//! four-way crossing is read as one horizontal wall with two vertical stems.
//!
//! Plans are stored in a canonical form: every vertical wall sits at the
//! length of the longest left-to-right chain of rooms leading to it, and
//! likewise for horizontal walls bottom to top.

use std::collections::HashMap;

use crate::element_glue;
use crate::family::{CodecError, FamilyId, Magma};

use super::{Cursor, MAX_NODES};

/// Axis-aligned room `[x0, x1] x [y0, y1]`, `y` growing upward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Room {
    pub x0: u64,
    pub x1: u64,
    pub y0: u64,
    pub y1: u64,
}

impl Room {
    fn area(&self) -> u64 {
        (self.x1 - self.x0) * (self.y1 - self.y0)
    }

    fn overlaps(&self, o: &Room) -> bool {
        self.x0 < o.x1 && o.x0 < self.x1 && self.y0 < o.y1 && o.y0 < self.y1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FloorPlan {
    width: u64,
    height: u64,
    /// Sorted; empty for the generator.
    rooms: Vec<Room>,
}

/// Wall segment `coord; [a, b]` along one axis.
#[derive(Clone, Copy, Debug)]
struct Seg {
    coord: u64,
    a: u64,
    b: u64,
}

/// Unions of collinear segments that overlap or touch.
fn merge(mut segs: Vec<Seg>) -> Vec<Seg> {
    segs.sort_by_key(|s| (s.coord, s.a, s.b));
    let mut out: Vec<Seg> = Vec::new();
    for s in segs {
        match out.last_mut() {
            Some(t) if t.coord == s.coord && s.a <= t.b => t.b = t.b.max(s.b),
            _ => out.push(s),
        }
    }
    out
}

fn horizontal_walls(rooms: &[Room]) -> Vec<Seg> {
    merge(
        rooms
            .iter()
            .flat_map(|r| [r.y0, r.y1].map(|y| Seg { coord: y, a: r.x0, b: r.x1 }))
            .collect(),
    )
}

/// Vertical unions cut wherever a horizontal wall crosses straight through.
fn vertical_walls(rooms: &[Room], horizontal: &[Seg]) -> Vec<Seg> {
    let unions = merge(
        rooms
            .iter()
            .flat_map(|r| [r.x0, r.x1].map(|x| Seg { coord: x, a: r.y0, b: r.y1 }))
            .collect(),
    );
    let mut out = Vec::new();
    for u in unions {
        let mut cuts: Vec<u64> = horizontal
            .iter()
            .filter(|h| h.a < u.coord && u.coord < h.b && u.a < h.coord && h.coord < u.b)
            .map(|h| h.coord)
            .collect();
        cuts.sort_unstable();
        cuts.dedup();
        let mut start = u.a;
        for c in cuts.into_iter().chain([u.b]) {
            out.push(Seg { coord: u.coord, a: start, b: c });
            start = c;
        }
    }
    out
}

/// Index of the wall at `coord` covering `[a, b]`.
fn find_wall(index: &HashMap<u64, Vec<usize>>, walls: &[Seg], coord: u64, a: u64, b: u64) -> usize {
    index[&coord]
        .iter()
        .copied()
        .find(|&i| walls[i].a <= a && b <= walls[i].b)
        .expect("every room edge lies on a wall")
}

/// Longest-path level of each node; `edges` must form a DAG.
fn levels(nodes: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut succ = vec![Vec::new(); nodes];
    let mut indeg = vec![0usize; nodes];
    for &(u, v) in edges {
        succ[u].push(v);
        indeg[v] += 1;
    }
    let mut level = vec![0u64; nodes];
    let mut queue: Vec<usize> = (0..nodes).filter(|&v| indeg[v] == 0).collect();
    while let Some(u) = queue.pop() {
        for &v in &succ[u] {
            level[v] = level[v].max(level[u] + 1);
            indeg[v] -= 1;
            if indeg[v] == 0 {
                queue.push(v);
            }
        }
    }
    level
}

fn index_by_coord(walls: &[Seg]) -> HashMap<u64, Vec<usize>> {
    let mut map: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, w) in walls.iter().enumerate() {
        map.entry(w.coord).or_default().push(i);
    }
    map
}

/// Canonical representative of a legal tiling.
fn canonicalize(rooms: &[Room]) -> FloorPlan {
    if rooms.is_empty() {
        return FloorPlan::default();
    }
    let hw = horizontal_walls(rooms);
    let vw = vertical_walls(rooms, &hw);
    let (hi, vi) = (index_by_coord(&hw), index_by_coord(&vw));
    let sides: Vec<[usize; 4]> = rooms
        .iter()
        .map(|r| {
            [
                find_wall(&vi, &vw, r.x0, r.y0, r.y1),
                find_wall(&vi, &vw, r.x1, r.y0, r.y1),
                find_wall(&hi, &hw, r.y0, r.x0, r.x1),
                find_wall(&hi, &hw, r.y1, r.x0, r.x1),
            ]
        })
        .collect();
    let xs = levels(vw.len(), &sides.iter().map(|s| (s[0], s[1])).collect::<Vec<_>>());
    let ys = levels(hw.len(), &sides.iter().map(|s| (s[2], s[3])).collect::<Vec<_>>());
    let mut out: Vec<Room> = sides
        .iter()
        .map(|s| Room { x0: xs[s[0]], x1: xs[s[1]], y0: ys[s[2]], y1: ys[s[3]] })
        .collect();
    out.sort_unstable();
    let width = out.iter().map(|r| r.x1).max().unwrap_or(0);
    let height = out.iter().map(|r| r.y1).max().unwrap_or(0);
    FloorPlan { width, height, rooms: out }
}

/// Tiling and junction checks for user input.
fn validate(width: u64, height: u64, rooms: &[Room]) -> Result<(), CodecError> {
    if width == 0 || height == 0 {
        return Err(CodecError::invalid("the bounding rectangle must have positive size"));
    }
    for r in rooms {
        if !(r.x0 < r.x1 && r.x1 <= width && r.y0 < r.y1 && r.y1 <= height) {
            return Err(CodecError::invalid(format!(
                "room {}-{},{}-{} is empty or outside the {width}x{height} bound",
                r.x0, r.x1, r.y0, r.y1
            )));
        }
    }
    for (i, r) in rooms.iter().enumerate() {
        if let Some(o) = rooms[i + 1..].iter().find(|o| r.overlaps(o)) {
            return Err(CodecError::invalid(format!(
                "rooms {}-{},{}-{} and {}-{},{}-{} overlap",
                r.x0, r.x1, r.y0, r.y1, o.x0, o.x1, o.y0, o.y1
            )));
        }
    }
    let area: u128 = rooms.iter().map(|r| r.area() as u128).sum();
    if area != width as u128 * height as u128 {
        return Err(CodecError::invalid("rooms do not cover the bounding rectangle"));
    }
    for h in horizontal_walls(rooms) {
        if 0 < h.coord && h.coord < height && h.b != width {
            return Err(CodecError::invalid(format!(
                "horizontal wall at height {} stops against a vertical wall at {}",
                h.coord, h.b
            )));
        }
    }
    Ok(())
}

impl FloorPlan {
    pub fn rooms(&self) -> &[Room] {
        &self.rooms
    }

    pub fn width(&self) -> u64 {
        self.width
    }

    pub fn height(&self) -> u64 {
        self.height
    }

    /// Canonical plan of a legal tiling of `[0, width] x [0, height]`.
    pub fn from_rooms(width: u64, height: u64, rooms: Vec<Room>) -> Result<Self, CodecError> {
        validate(width, height, &rooms)?;
        Ok(canonicalize(&rooms))
    }

    /// The product region above the left factor: a new unit-wide room on the
    /// left with the right factor beside it.
    fn top_part(&self) -> (u64, u64, Vec<Room>) {
        if self.rooms.is_empty() {
            return (1, 1, vec![Room { x0: 0, x1: 1, y0: 0, y1: 1 }]);
        }
        let mut rooms = vec![Room { x0: 0, x1: 1, y0: 0, y1: self.height }];
        rooms.extend(self.rooms.iter().map(|r| Room { x0: r.x0 + 1, x1: r.x1 + 1, ..*r }));
        (self.width + 1, self.height, rooms)
    }
}

impl Magma for FloorPlan {
    const ID: FamilyId = FamilyId::F13;

    fn generator() -> Self {
        FloorPlan::default()
    }

    fn product(&self, rhs: &Self) -> Self {
        let (tw, th, top) = rhs.top_part();
        if self.rooms.is_empty() {
            return canonicalize(&top);
        }
        // Stretch both parts to the common width, left factor underneath.
        let (bw, bh) = (self.width, self.height);
        let mut rooms: Vec<Room> = self
            .rooms
            .iter()
            .map(|r| Room { x0: r.x0 * tw, x1: r.x1 * tw, ..*r })
            .collect();
        rooms.extend(top.iter().map(|r| Room {
            x0: r.x0 * bw,
            x1: r.x1 * bw,
            y0: r.y0 + bh,
            y1: r.y1 + bh,
        }));
        debug_assert_eq!(rooms.iter().map(Room::area).sum::<u64>(), bw * tw * (bh + th));
        canonicalize(&rooms)
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        let corner = *self.rooms.iter().find(|r| r.x0 == 0 && r.y1 == self.height)?;
        let cut = corner.y0;
        let below: Vec<Room> = self.rooms.iter().copied().filter(|r| r.y1 <= cut).collect();
        let beside: Vec<Room> = self
            .rooms
            .iter()
            .filter(|r| r.y0 >= cut && **r != corner)
            .map(|r| Room { x0: r.x0 - corner.x1, x1: r.x1 - corner.x1, y0: r.y0 - cut, y1: r.y1 - cut })
            .collect();
        Some((canonicalize(&below), canonicalize(&beside)))
    }

    fn norm(&self) -> usize {
        self.rooms.len() + 1
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        if s == "_" {
            return Ok(FloorPlan::default());
        }
        let mut c = Cursor::new(s);
        let width = c.number()?;
        c.expect(b',')?;
        let height = c.number()?;
        c.expect(b':')?;
        let rooms = c.list(b';', None, |c| {
            let (x0, x1) = c.pair()?;
            c.expect(b',')?;
            let (y0, y1) = c.pair()?;
            Ok(Room { x0, x1, y0, y1 })
        })?;
        c.finish()?;
        if rooms.is_empty() {
            return Err(c.syntax("expected a room"));
        }
        if width > MAX_NODES || height > MAX_NODES || rooms.len() as u64 > MAX_NODES {
            return Err(CodecError::invalid("plan too large"));
        }
        FloorPlan::from_rooms(width, height, rooms)
    }

    fn render(&self) -> String {
        if self.rooms.is_empty() {
            return "_".into();
        }
        let rooms: Vec<String> =
            self.rooms.iter().map(|r| format!("{}-{},{}-{}", r.x0, r.x1, r.y0, r.y1)).collect();
        format!("{},{}:{}", self.width, self.height, rooms.join(";"))
    }

    element_glue!(FloorPlan);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> FloorPlan {
        FloorPlan::parse(s).unwrap()
    }

    #[test]
    fn small_products() {
        let e = FloorPlan::generator();
        let one = e.product(&e);
        assert_eq!(one.render(), "1,1:0-1,0-1");
        assert_eq!(e.product(&one).render(), "2,1:0-1,0-1;1-2,0-1");
        assert_eq!(one.product(&e).render(), "1,2:0-1,0-1;0-1,1-2");
        assert_eq!(one.product(&one).render(), "2,2:0-1,1-2;0-2,0-1;1-2,1-2");
    }

    #[test]
    fn factorization_inverts_products() {
        let e = FloorPlan::generator();
        let one = e.product(&e);
        let two = one.product(&one);
        assert_eq!(two.factorize(), Some((one.clone(), one.clone())));
        assert_eq!(one.factorize(), Some((e.clone(), e.clone())));
        assert_eq!(e.factorize(), None);
    }

    #[test]
    fn canonical_form_forgets_sliding() {
        // Same plan as `one * one` with the upper wall slid to the right.
        assert_eq!(p("5,4:0-3,2-4;0-5,0-2;3-5,2-4"), p("2,2:0-1,1-2;0-2,0-1;1-2,1-2"));
        assert_eq!(p("3,1:0-3,0-1").render(), "1,1:0-1,0-1");
    }

    #[test]
    fn parse_rejects_illegal_plans() {
        // A wall stopping against a vertical wall from the left.
        assert!(FloorPlan::parse("2,2:0-1,0-1;0-1,1-2;1-2,0-2").is_err());
        // Overlap and gaps.
        assert!(FloorPlan::parse("2,1:0-2,0-1;1-2,0-1").is_err());
        assert!(FloorPlan::parse("2,1:0-1,0-1").is_err());
        assert!(FloorPlan::parse("2,1:0-1,0-1;").unwrap_err().is_syntax());
        assert!(FloorPlan::parse("2:0-1,0-1").unwrap_err().is_syntax());
    }

    #[test]
    fn four_way_crossing_reads_as_horizontal_through_wall() {
        let grid = p("2,2:0-1,0-1;0-1,1-2;1-2,0-1;1-2,1-2");
        assert_eq!(grid.norm(), 5);
        let (a, b) = grid.factorize().unwrap();
        assert_eq!(a.render(), "2,1:0-1,0-1;1-2,0-1");
        assert_eq!(b.render(), "1,1:0-1,0-1");
        assert_eq!(a.product(&b), grid);
    }
}
