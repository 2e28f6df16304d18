//! F7: non-crossing partitions of `1..n`.
//!
//! `p1 * p2` lists the nodes of `p1`, a new node `x`, then the nodes of `p2`;
//! `x` joins the block holding the last node of `p2`, or stays alone when
//! `p2` is empty.

use crate::element_glue;
use crate::family::{CodecError, FamilyId, Magma};

use super::{join_numbers, Cursor, MAX_NODES};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NonCrossingPartition {
    n: u32,
    /// Sorted blocks, ordered by their minimum.
    blocks: Vec<Vec<u32>>,
}

impl NonCrossingPartition {
    pub fn nodes(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    fn normalized(n: u32, mut blocks: Vec<Vec<u32>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        NonCrossingPartition { n, blocks }
    }
}

/// Returns an error unless `blocks` partition `1..=n` without crossings.
fn validate(n: u32, blocks: &[Vec<u32>]) -> Result<(), CodecError> {
    let mut owner = vec![usize::MAX; n as usize + 1];
    let mut last = vec![0u32; blocks.len()];
    for (i, b) in blocks.iter().enumerate() {
        if b.is_empty() {
            return Err(CodecError::invalid("empty block"));
        }
        for &x in b {
            if x == 0 || x > n {
                return Err(CodecError::invalid(format!("node {x} out of range 1..{n}")));
            }
            if owner[x as usize] != usize::MAX {
                return Err(CodecError::invalid(format!("node {x} appears twice")));
            }
            owner[x as usize] = i;
            last[i] = last[i].max(x);
        }
    }
    if let Some(x) = (1..=n).find(|&x| owner[x as usize] == usize::MAX) {
        return Err(CodecError::invalid(format!("node {x} is in no block")));
    }
    // Blocks open while scanning must close in stack order.
    let mut open: Vec<usize> = Vec::new();
    let mut started = vec![false; blocks.len()];
    for x in 1..=n {
        let b = owner[x as usize];
        if started[b] {
            if open.last() != Some(&b) {
                return Err(CodecError::invalid(format!("blocks cross at node {x}")));
            }
        } else {
            started[b] = true;
            open.push(b);
        }
        if last[b] == x {
            open.pop();
        }
    }
    Ok(())
}

impl Magma for NonCrossingPartition {
    const ID: FamilyId = FamilyId::F7;

    fn generator() -> Self {
        NonCrossingPartition::default()
    }

    fn product(&self, rhs: &Self) -> Self {
        let x = self.n + 1;
        let mut blocks = self.blocks.clone();
        let mut joined = false;
        for b in &rhs.blocks {
            let mut nb: Vec<u32> = b.iter().map(|v| v + x).collect();
            if b.last() == Some(&rhs.n) {
                nb.insert(0, x);
                joined = true;
            }
            blocks.push(nb);
        }
        if !joined {
            blocks.push(vec![x]);
        }
        Self::normalized(self.n + rhs.n + 1, blocks)
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        if self.n == 0 {
            return None;
        }
        let x = self.blocks.iter().find(|b| b.last() == Some(&self.n))?[0];
        let mut left = Vec::new();
        let mut right = Vec::new();
        for b in &self.blocks {
            if b[0] < x {
                left.push(b.clone());
            } else {
                let rest: Vec<u32> = b.iter().filter(|&&v| v != x).map(|v| v - x).collect();
                if !rest.is_empty() {
                    right.push(rest);
                }
            }
        }
        Some((Self::normalized(x - 1, left), Self::normalized(self.n - x, right)))
    }

    fn norm(&self) -> usize {
        self.n as usize + 1
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        let mut c = Cursor::new(s);
        let n = c.number()?;
        if n > MAX_NODES {
            return Err(CodecError::invalid("node count too large"));
        }
        c.expect(b':')?;
        let mut blocks = Vec::new();
        while c.eat(b'{') {
            let b = c.list(b',', Some(b'}'), |c| c.number())?;
            c.expect(b'}')?;
            blocks.push(b.into_iter().map(|v| v.min(u32::MAX as u64) as u32).collect::<Vec<_>>());
        }
        c.finish()?;
        let n = n as u32;
        validate(n, &blocks)?;
        Ok(Self::normalized(n, blocks))
    }

    fn render(&self) -> String {
        let mut out = format!("{}:", self.n);
        for b in &self.blocks {
            out.push('{');
            out.push_str(&join_numbers(b));
            out.push('}');
        }
        out
    }

    element_glue!(Partition);
}
