//! F8: Dyck paths, `d1 * d2 = d1 u d2 d`, plus the reflection and left product.

use crate::element_glue;
use crate::family::{CodecError, FamilyId, Magma};

use super::Cursor;

/// A balanced word over `u` (true) and `d` (false).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath {
    steps: Vec<bool>,
}

/// Index of the opening step of the last block that returns to height 0.
pub(crate) fn last_return(word: &[bool]) -> Option<usize> {
    if word.is_empty() {
        return None;
    }
    let mut height = 0i64;
    let mut start = 0;
    for (i, &up) in word.iter().enumerate() {
        if height == 0 {
            start = i;
        }
        height += if up { 1 } else { -1 };
    }
    Some(start)
}

/// Checks balance and nonnegative prefixes; `None` when valid, else the failing index.
pub(crate) fn balance_violation(word: &[bool]) -> Option<usize> {
    let mut height = 0i64;
    for (i, &up) in word.iter().enumerate() {
        height += if up { 1 } else { -1 };
        if height < 0 {
            return Some(i);
        }
    }
    (height != 0).then_some(word.len())
}

/// `a U b D` for balanced words.
pub(crate) fn wrap_product(a: &[bool], b: &[bool]) -> Vec<bool> {
    let mut w = Vec::with_capacity(a.len() + b.len() + 2);
    w.extend_from_slice(a);
    w.push(true);
    w.extend_from_slice(b);
    w.push(false);
    w
}

/// Inverse of [`wrap_product`].
pub(crate) fn unwrap_product(w: &[bool]) -> Option<(Vec<bool>, Vec<bool>)> {
    let s = last_return(w)?;
    Some((w[..s].to_vec(), w[s + 1..w.len() - 1].to_vec()))
}

pub(crate) fn parse_word(s: &str, up: u8, down: u8) -> Result<Vec<bool>, CodecError> {
    if s == "_" {
        return Ok(Vec::new());
    }
    let mut c = Cursor::new(s);
    let mut w = Vec::with_capacity(s.len());
    while let Some(b) = c.peek() {
        if b == up {
            w.push(true);
        } else if b == down {
            w.push(false);
        } else {
            return Err(c.syntax(format!("expected `{}` or `{}`", up as char, down as char)));
        }
        c.eat(b);
    }
    if w.is_empty() {
        return Err(c.syntax("empty word, use `_`"));
    }
    if let Some(i) = balance_violation(&w) {
        return Err(CodecError::invalid(if i == w.len() {
            "word is not balanced".to_string()
        } else {
            format!("prefix ending at step {} goes negative", i + 1)
        }));
    }
    Ok(w)
}

pub(crate) fn render_word(w: &[bool], up: char, down: char) -> String {
    if w.is_empty() {
        return "_".into();
    }
    w.iter().map(|&b| if b { up } else { down }).collect()
}

impl DyckPath {
    /// Builds a path from steps; `None` when unbalanced.
    pub fn from_steps(steps: Vec<bool>) -> Option<Self> {
        balance_violation(&steps).is_none().then_some(DyckPath { steps })
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    pub fn up_steps(&self) -> usize {
        self.steps.iter().filter(|&&u| u).count()
    }
}

impl Magma for DyckPath {
    const ID: FamilyId = FamilyId::F8;

    fn generator() -> Self {
        DyckPath::default()
    }

    fn product(&self, rhs: &Self) -> Self {
        DyckPath { steps: wrap_product(&self.steps, &rhs.steps) }
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        unwrap_product(&self.steps).map(|(a, b)| (DyckPath { steps: a }, DyckPath { steps: b }))
    }

    fn norm(&self) -> usize {
        self.up_steps() + 1
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        parse_word(s, b'u', b'd').map(|steps| DyckPath { steps })
    }

    fn render(&self) -> String {
        render_word(&self.steps, 'u', 'd')
    }

    element_glue!(Dyck);
}

/// The left product `u a d b`.
pub fn dyck_left_product(a: &DyckPath, b: &DyckPath) -> DyckPath {
    let mut steps = Vec::with_capacity(a.steps.len() + b.steps.len() + 2);
    steps.push(true);
    steps.extend_from_slice(&a.steps);
    steps.push(false);
    steps.extend_from_slice(&b.steps);
    DyckPath { steps }
}

/// Mirror image: reverse the word and swap `u` with `d`.
pub fn dyck_reflect(a: &DyckPath) -> DyckPath {
    DyckPath { steps: a.steps.iter().rev().map(|&u| !u).collect() }
}

/// Number of `ud` factors.
pub fn dyck_peaks(a: &DyckPath) -> usize {
    a.steps.windows(2).filter(|w| w[0] && !w[1]).count()
}
