//! F2: balanced brackets, `b1 * b2 = b1{b2}`.

use crate::element_glue;
use crate::family::{CodecError, FamilyId, Magma};

use super::dyck::{parse_word, render_word, unwrap_product, wrap_product};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BracketWord {
    open: Vec<bool>,
}

impl BracketWord {
    pub fn pairs(&self) -> usize {
        self.open.len() / 2
    }
}

impl Magma for BracketWord {
    const ID: FamilyId = FamilyId::F2;

    fn generator() -> Self {
        BracketWord::default()
    }

    fn product(&self, rhs: &Self) -> Self {
        BracketWord { open: wrap_product(&self.open, &rhs.open) }
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        unwrap_product(&self.open).map(|(a, b)| (BracketWord { open: a }, BracketWord { open: b }))
    }

    fn norm(&self) -> usize {
        self.pairs() + 1
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        parse_word(s, b'{', b'}').map(|open| BracketWord { open })
    }

    fn render(&self) -> String {
        render_word(&self.open, '{', '}')
    }

    element_glue!(Brackets);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BracketWord {
        BracketWord::parse(s).unwrap()
    }

    #[test]
    fn small_products() {
        let e = BracketWord::generator();
        assert_eq!(e.product(&e).render(), "{}");
        assert_eq!(b("{}").product(&e).render(), "{}{}");
        assert_eq!(e.product(&b("{}")).render(), "{{}}");
        assert_eq!(b("{}").product(&b("{}")).render(), "{}{{}}");
    }

    #[test]
    fn generator_is_irreducible() {
        assert_eq!(b("_").factorize(), None);
        assert_eq!(b("_").render(), "_");
        assert_eq!(b("{}{{}}").factorize(), Some((b("{}"), b("{}"))));
        assert!(BracketWord::parse("}{").is_err());
    }
}
