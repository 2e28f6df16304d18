//! Factorization properties of integer product tables, checked up to a bound.
//!
//! The three built-in variants are infinite tables: a few explicit cells near
//! the corner, every other cell numbered along north-east diagonals.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Cell `(i, j)` holding `value = i * j` in the table's product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: u64,
    pub col: u64,
    pub value: u64,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}*{}", self.value, self.row, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    A,
    B,
    C,
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "a" | "A" => Ok(Variant::A),
            "b" | "B" => Ok(Variant::B),
            "c" | "C" => Ok(Variant::C),
            _ => Err(format!("unknown variant `{s}` (expected a, b or c)")),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::A => "a",
            Variant::B => "b",
            Variant::C => "c",
        })
    }
}

const EXPLICIT_A: [&[u64]; 6] = [
    &[5, 7, 10, 3, 16, 22],
    &[6, 9, 4, 15, 21],
    &[8, 4, 14, 20, 27],
    &[11, 13, 19, 26],
    &[12, 18, 25],
    &[17, 24],
];

const EXPLICIT_B: [&[u64]; 6] = [
    &[3, 4, 7, 11, 16, 22],
    &[5, 1, 10, 15, 21],
    &[6, 9, 14, 20, 27],
    &[3, 13, 19, 26],
    &[12, 18, 25],
    &[17, 24],
];

const EXPLICIT_C: [&[u64]; 6] = [
    &[3, 4, 7, 11, 16, 22],
    &[5, 1, 10, 15, 21],
    &[6, 9, 14, 20, 27],
    &[8, 13, 19, 26],
    &[12, 18, 25],
    &[17, 24],
];

impl Variant {
    fn explicit(self) -> &'static [&'static [u64]; 6] {
        match self {
            Variant::A => &EXPLICIT_A,
            Variant::B => &EXPLICIT_B,
            Variant::C => &EXPLICIT_C,
        }
    }

    fn entry(self, i: u64, j: u64) -> u64 {
        self.explicit()
            .get(i as usize - 1)
            .and_then(|row| row.get(j as usize - 1))
            .copied()
            .unwrap_or_else(|| diagonal_fill(i, j))
    }
}

/// Position of `(i, j)` when cells are numbered from 2 along successive
/// north-east diagonals, each read from its bottom-left end.
pub fn diagonal_fill(i: u64, j: u64) -> u64 {
    let d = i + j;
    (d - 2) * (d - 1) / 2 + j + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("entry ({row},{col}) is 0, entries must be positive")]
    ZeroEntry { row: usize, col: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Source {
    /// Row-major `size x size` entries; nothing is known outside.
    Explicit(Vec<u64>),
    Diagonal(Variant),
}

/// A product table on positive integers, `entry(i, j) = i * j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMagmaTable {
    size: usize,
    source: Source,
}

impl FiniteMagmaTable {
    /// A fully specified `size x size` table.
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self, TableError> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(TableError::Syntax {
                    line: r + 2,
                    msg: format!("expected {size} entries, found {}", row.len()),
                });
            }
            if let Some(c) = row.iter().position(|&v| v == 0) {
                return Err(TableError::ZeroEntry { row: r + 1, col: c + 1 });
            }
            entries.extend(row);
        }
        Ok(FiniteMagmaTable { size, source: Source::Explicit(entries) })
    }

    /// One of the built-in variants, shown through a `size x size` window.
    pub fn diagonal(variant: Variant, size: usize) -> Self {
        FiniteMagmaTable { size, source: Source::Diagonal(variant) }
    }

    /// First line `N`, then `N` whitespace-separated rows.
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or(TableError::Syntax { line: 1, msg: "empty table".into() })?;
        let size: usize = first.trim().parse().map_err(|_| TableError::Syntax {
            line: 1,
            msg: format!("expected the table size, found `{}`", first.trim()),
        })?;
        let mut rows = Vec::with_capacity(size);
        for (n, line) in lines {
            let row = line
                .split_whitespace()
                .map(|w| w.parse::<u64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| TableError::Syntax { line: n + 1, msg: e.to_string() })?;
            rows.push(row);
        }
        if rows.len() != size {
            return Err(TableError::Syntax {
                line: text.lines().count(),
                msg: format!("expected {size} rows, found {}", rows.len()),
            });
        }
        FiniteMagmaTable::from_rows(rows)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: u64, j: u64) -> Option<u64> {
        if i == 0 || j == 0 {
            return None;
        }
        match &self.source {
            Source::Diagonal(v) => Some(v.entry(i, j)),
            Source::Explicit(e) if i as usize <= self.size && j as usize <= self.size => {
                Some(e[(i as usize - 1) * self.size + j as usize - 1])
            }
            Source::Explicit(_) => None,
        }
    }

    /// Every cell whose value is at most `bound`, row-major.
    pub fn cells_up_to(&self, bound: u64) -> Vec<Cell> {
        let reach = match &self.source {
            Source::Explicit(_) => self.size as u64,
            // Past the explicit corner, diagonal `d` starts above `bound` once
            // (d - 2)(d - 1) / 2 + 2 > bound.
            Source::Diagonal(_) => {
                let mut d = 8;
                while (d - 2) * (d - 1) / 2 + 2 <= bound {
                    d += 1;
                }
                d
            }
        };
        let mut out = Vec::new();
        for row in 1..=reach {
            for col in 1..=reach {
                if let Some(value) = self.entry(row, col).filter(|&v| v <= bound) {
                    out.push(Cell { row, col, value });
                }
            }
        }
        out
    }

    /// `N` followed by the window rows.
    pub fn render(&self) -> String {
        let n = self.size as u64;
        let mut out = format!("{n}\n");
        for i in 1..=n {
            let row: Vec<String> = (1..=n).map(|j| self.entry(i, j).unwrap_or(0).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Largest value that can possibly repeat.
    fn duplicate_scan_bound(&self) -> u64 {
        match &self.source {
            Source::Explicit(e) => e.iter().copied().max().unwrap_or(0),
            // Fill values are distinct and never reuse an explicit value.
            Source::Diagonal(v) => v.explicit().iter().flat_map(|r| r.iter()).copied().max().unwrap_or(0),
        }
    }
}

/// Integers up to `bound` that no cell produces.
pub fn find_irreducibles(t: &FiniteMagmaTable, bound: u64) -> BTreeSet<u64> {
    let hit: BTreeSet<u64> = t.cells_up_to(bound).iter().map(|c| c.value).collect();
    (1..=bound).filter(|m| !hit.contains(m)).collect()
}

/// `Err` carries two cells with the same value.
pub fn check_unique_factorization(t: &FiniteMagmaTable) -> Result<(), (Cell, Cell)> {
    let mut seen: BTreeMap<u64, Cell> = BTreeMap::new();
    for c in t.cells_up_to(t.duplicate_scan_bound()) {
        if let Some(&first) = seen.get(&c.value) {
            return Err((first, c));
        }
        seen.insert(c.value, c);
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// Every chain from an element up to the bound ends at irreducibles.
    Yes,
    /// Cells `m = a*b` forming a cycle, each factor producing the next value.
    No { cycle: Vec<Cell> },
    /// A chain leaves the bound through this cell.
    Unknown { escape: Cell },
}

impl Decomposition {
    pub fn verdict(&self) -> &'static str {
        match self {
            Decomposition::Yes => "yes",
            Decomposition::No { .. } => "no",
            Decomposition::Unknown { .. } => "unknown",
        }
    }
}

/// Factorizations of each value up to `bound`, in row-major cell order.
fn factor_index(t: &FiniteMagmaTable, bound: u64) -> BTreeMap<u64, Vec<Cell>> {
    let mut index: BTreeMap<u64, Vec<Cell>> = BTreeMap::new();
    for c in t.cells_up_to(bound) {
        index.entry(c.value).or_default().push(c);
    }
    index
}

pub fn check_finite_decomposition(t: &FiniteMagmaTable, bound: u64) -> Decomposition {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    struct Walk<'a> {
        index: &'a BTreeMap<u64, Vec<Cell>>,
        bound: u64,
        mark: Vec<Mark>,
        path: Vec<Cell>,
        escape: Option<Cell>,
    }
    impl Walk<'_> {
        /// Returns the cycle through the active path, if one is reached.
        fn visit(&mut self, m: u64) -> Option<Vec<Cell>> {
            self.mark[m as usize] = Mark::Active;
            let index = self.index;
            for &c in index.get(&m).into_iter().flatten() {
                for x in [c.row, c.col] {
                    if x > self.bound {
                        self.escape.get_or_insert(c);
                        continue;
                    }
                    self.path.push(c);
                    match self.mark[x as usize] {
                        Mark::Active => {
                            let start = self.path.iter().position(|p| p.value == x).expect("x is on the path");
                            return Some(self.path[start..].to_vec());
                        }
                        Mark::New => {
                            if let Some(cycle) = self.visit(x) {
                                return Some(cycle);
                            }
                        }
                        Mark::Done => {}
                    }
                    self.path.pop();
                }
            }
            self.mark[m as usize] = Mark::Done;
            None
        }
    }

    let index = factor_index(t, bound);
    let mut walk = Walk { index: &index, bound, mark: vec![Mark::New; bound as usize + 1], path: Vec::new(), escape: None };
    for m in 1..=bound {
        if walk.mark[m as usize] == Mark::New {
            if let Some(cycle) = walk.visit(m) {
                return Decomposition::No { cycle };
            }
        }
    }
    match walk.escape {
        Some(escape) => Decomposition::Unknown { escape },
        None => Decomposition::Yes,
    }
}

/// Factorizations of one element whose factor norms sum differently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormConflict {
    pub element: u64,
    /// Each factorization with its norm sum.
    pub sums: Vec<(Cell, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedNorm {
    /// Irreducibles get 1; others the largest factor-norm sum.
    pub norms: BTreeMap<u64, u64>,
    pub conflicts: Vec<NormConflict>,
    /// In-bound cells with `norm(i*j) < norm(i) + norm(j)`.
    pub violations: Vec<Cell>,
}

impl DerivedNorm {
    pub fn is_additive(&self) -> bool {
        self.conflicts.is_empty()
    }

    pub fn is_super_additive(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no norm: finite decomposition is `{0}` at this bound")]
pub struct NormUndefined(pub &'static str);

/// Builds the norm from irreducibles upward.
pub fn derive_norm(t: &FiniteMagmaTable, bound: u64) -> Result<DerivedNorm, NormUndefined> {
    let verdict = check_finite_decomposition(t, bound);
    if verdict != Decomposition::Yes {
        return Err(NormUndefined(verdict.verdict()));
    }
    let index = factor_index(t, bound);
    let mut norms: BTreeMap<u64, u64> = BTreeMap::new();
    let mut conflicts = Vec::new();
    // Acyclic and closed under factors, so a post-order walk terminates.
    fn norm_of(
        m: u64,
        index: &BTreeMap<u64, Vec<Cell>>,
        norms: &mut BTreeMap<u64, u64>,
        conflicts: &mut Vec<NormConflict>,
    ) -> u64 {
        if let Some(&n) = norms.get(&m) {
            return n;
        }
        let n = match index.get(&m) {
            None => 1,
            Some(cells) => {
                let sums: Vec<(Cell, u64)> = cells
                    .iter()
                    .map(|&c| (c, norm_of(c.row, index, norms, conflicts) + norm_of(c.col, index, norms, conflicts)))
                    .collect();
                if sums.iter().any(|s| s.1 != sums[0].1) {
                    conflicts.push(NormConflict { element: m, sums: sums.clone() });
                }
                sums.iter().map(|s| s.1).max().expect("at least one factorization")
            }
        };
        norms.insert(m, n);
        n
    }
    for m in 1..=bound {
        norm_of(m, &index, &mut norms, &mut conflicts);
    }
    conflicts.sort_by_key(|c| c.element);
    let violations = index
        .values()
        .flatten()
        .filter(|c| norms[&c.value] < norms[&c.row] + norms[&c.col])
        .copied()
        .collect();
    Ok(DerivedNorm { norms, conflicts, violations })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub unique_factorization: bool,
    pub finite_decomposition: Decomposition,
    pub irreducibles: BTreeSet<u64>,
}

impl Classification {
    /// `(unique factorization, finite decomposition, irreducibles)` as text.
    pub fn summary(&self) -> (&'static str, &'static str, &BTreeSet<u64>) {
        let uf = if self.unique_factorization { "yes" } else { "no" };
        (uf, self.finite_decomposition.verdict(), &self.irreducibles)
    }
}

pub fn classify(t: &FiniteMagmaTable, bound: u64) -> Classification {
    Classification {
        unique_factorization: check_unique_factorization(t).is_ok(),
        finite_decomposition: check_finite_decomposition(t, bound),
        irreducibles: find_irreducibles(t, bound),
    }
}
