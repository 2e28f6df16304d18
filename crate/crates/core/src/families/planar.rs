//! F5: planar rooted trees; the right factor becomes the new last child of the left root.

use crate::element_glue;
use crate::family::{CodecError, FamilyId, Magma};

use super::Cursor;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlanarTree {
    children: Vec<PlanarTree>,
}

impl PlanarTree {
    pub fn children(&self) -> &[PlanarTree] {
        &self.children
    }

    pub fn nodes(&self) -> usize {
        1 + self.children.iter().map(PlanarTree::nodes).sum::<usize>()
    }

    fn write(&self, out: &mut String) {
        out.push('(');
        for c in &self.children {
            c.write(out);
        }
        out.push(')');
    }
}

impl Magma for PlanarTree {
    const ID: FamilyId = FamilyId::F5;

    fn generator() -> Self {
        PlanarTree::default()
    }

    fn product(&self, rhs: &Self) -> Self {
        let mut t = self.clone();
        t.children.push(rhs.clone());
        t
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        let mut t = self.clone();
        let last = t.children.pop()?;
        Some((t, last))
    }

    /// Total node count; the single node has norm 1.
    fn norm(&self) -> usize {
        self.nodes()
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        if s == "_" {
            return Ok(PlanarTree::default());
        }
        let mut c = Cursor::new(s);
        let mut stack: Vec<PlanarTree> = Vec::new();
        c.expect(b'(')?;
        stack.push(PlanarTree::default());
        loop {
            if c.eat(b'(') {
                stack.push(PlanarTree::default());
            } else if c.eat(b')') {
                let done = stack.pop().expect("nonempty stack");
                match stack.last_mut() {
                    Some(parent) => parent.children.push(done),
                    None => {
                        c.finish()?;
                        return Ok(done);
                    }
                }
            } else {
                return Err(c.syntax("expected `(` or `)`"));
            }
        }
    }

    fn render(&self) -> String {
        if self.children.is_empty() {
            return "_".into();
        }
        let mut out = String::new();
        self.write(&mut out);
        out
    }

    element_glue!(Planar);
}
