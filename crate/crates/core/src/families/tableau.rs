//! F12: standard Young tableaux of shape `2 x m`.

use crate::element_glue;
use crate::family::{CodecError, FamilyId, Magma};

use super::dyck::{balance_violation, unwrap_product, DyckPath};
use super::{join_numbers, Cursor, MAX_NODES};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StandardTableau {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl StandardTableau {
    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// Step `i` is up when `i` sits in the top row.
    fn word(&self) -> Vec<bool> {
        let mut w = vec![false; self.top.len() * 2];
        for &t in &self.top {
            w[t as usize - 1] = true;
        }
        w
    }

    fn from_word(w: &[bool]) -> Self {
        let (mut top, mut bottom) = (Vec::new(), Vec::new());
        for (i, &up) in w.iter().enumerate() {
            if up { &mut top } else { &mut bottom }.push(i as u32 + 1);
        }
        StandardTableau { top, bottom }
    }
}

impl Magma for StandardTableau {
    const ID: FamilyId = FamilyId::F12;

    fn generator() -> Self {
        StandardTableau::default()
    }

    fn product(&self, rhs: &Self) -> Self {
        let k = 2 * self.top.len() as u32;
        let l = 2 * rhs.top.len() as u32;
        let mut top = self.top.clone();
        top.push(k + 1);
        top.extend(rhs.top.iter().map(|t| t + k + 1));
        let mut bottom = self.bottom.clone();
        bottom.extend(rhs.bottom.iter().map(|b| b + k + 1));
        bottom.push(k + l + 2);
        StandardTableau { top, bottom }
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        let (a, b) = unwrap_product(&self.word())?;
        Some((Self::from_word(&a), Self::from_word(&b)))
    }

    fn norm(&self) -> usize {
        self.top.len() + 1
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        if s == "_" {
            return Ok(StandardTableau::default());
        }
        let mut c = Cursor::new(s);
        let top = c.list(b',', Some(b'/'), |c| c.number())?;
        c.expect(b'/')?;
        let bottom = c.list(b',', None, |c| c.number())?;
        c.finish()?;
        if top.is_empty() {
            return Err(CodecError::Syntax { pos: 0, msg: "empty tableau, use `_`".into() });
        }
        if top.len() != bottom.len() {
            return Err(CodecError::invalid("rows must have equal length"));
        }
        let m = top.len() as u64;
        if m > MAX_NODES || top.iter().chain(&bottom).any(|&v| v == 0 || v > 2 * m) {
            return Err(CodecError::invalid(format!("entries must lie in 1..{}", 2 * m)));
        }
        let mut w = vec![None; 2 * m as usize];
        for (&v, up) in top.iter().map(|v| (v, true)).chain(bottom.iter().map(|v| (v, false))) {
            if w[v as usize - 1].replace(up).is_some() {
                return Err(CodecError::invalid(format!("entry {v} appears twice")));
            }
        }
        let increasing = |r: &[u64]| r.windows(2).all(|p| p[0] < p[1]);
        if !increasing(&top) || !increasing(&bottom) {
            return Err(CodecError::invalid("rows must increase"));
        }
        if top.iter().zip(&bottom).any(|(t, b)| t >= b) {
            return Err(CodecError::invalid("columns must increase downward"));
        }
        let word: Vec<bool> = w.into_iter().map(|x| x.expect("all entries placed")).collect();
        debug_assert!(balance_violation(&word).is_none());
        Ok(Self::from_word(&word))
    }

    fn render(&self) -> String {
        if self.top.is_empty() {
            return "_".into();
        }
        format!("{}/{}", join_numbers(&self.top), join_numbers(&self.bottom))
    }

    element_glue!(Tableau);
}

/// Up steps at the top-row entries, down steps at the bottom-row entries.
pub fn tableau_to_dyck_direct(t: &StandardTableau) -> DyckPath {
    DyckPath::from_steps(t.word()).expect("a standard tableau reads as a Dyck word")
}
