//! F4: complete binary trees; the product grafts both factors under a new root.

use crate::element_glue;
use crate::family::{CodecError, FamilyId, Magma};
use crate::term::{expect_end, parse_nested, GeneratorId, Term, TermParseError};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Internal(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    fn from_term(t: &Term) -> BinaryTree {
        match t {
            Term::Leaf(_) => BinaryTree::Leaf,
            Term::Node(a, b) => {
                BinaryTree::Internal(Box::new(Self::from_term(a)), Box::new(Self::from_term(b)))
            }
        }
    }

    fn write(&self, out: &mut String) {
        match self {
            BinaryTree::Leaf => out.push('*'),
            BinaryTree::Internal(a, b) => {
                out.push('(');
                a.write(out);
                out.push(',');
                b.write(out);
                out.push(')');
            }
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Internal(a, b) => a.leaves() + b.leaves(),
        }
    }
}

impl Magma for BinaryTree {
    const ID: FamilyId = FamilyId::F4;

    fn generator() -> Self {
        BinaryTree::Leaf
    }

    fn product(&self, rhs: &Self) -> Self {
        BinaryTree::Internal(Box::new(self.clone()), Box::new(rhs.clone()))
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        match self {
            BinaryTree::Leaf => None,
            BinaryTree::Internal(a, b) => Some(((**a).clone(), (**b).clone())),
        }
    }

    fn norm(&self) -> usize {
        self.leaves()
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        let bytes = s.as_bytes();
        let syntax = |e: TermParseError| CodecError::Syntax { pos: e.pos, msg: e.msg };
        let mut pos = 0;
        let mut atom = |b: &[u8], pos: &mut usize| {
            if b.get(*pos) == Some(&b'*') {
                *pos += 1;
                Ok(GeneratorId::FIRST)
            } else {
                Err(TermParseError { pos: *pos, msg: "expected leaf `*`".into() })
            }
        };
        let t = parse_nested(bytes, &mut pos, b',', &mut atom).map_err(syntax)?;
        expect_end(bytes, pos).map_err(syntax)?;
        Ok(BinaryTree::from_term(&t))
    }

    fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out);
        out
    }

    element_glue!(BinaryTree);
}

/// Mirror image: swap left and right subtrees at every node.
pub fn cbt_reflect(t: &BinaryTree) -> BinaryTree {
    match t {
        BinaryTree::Leaf => BinaryTree::Leaf,
        BinaryTree::Internal(a, b) => {
            BinaryTree::Internal(Box::new(cbt_reflect(b)), Box::new(cbt_reflect(a)))
        }
    }
}
