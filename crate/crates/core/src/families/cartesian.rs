//! F1: nested ordered pairs, the term algebra itself under the `(e,(e,e))` codec.

use crate::element_glue;
use crate::family::{CodecError, Element, FamilyDescriptor, FamilyId, Magma};
use crate::term::{expect_end, parse_nested, read_atom, GeneratorId, Term, TermParseError};
use crate::Error;

fn render_pairs(t: &Term, p: usize) -> String {
    let mut out = String::new();
    t.write_nested(&mut out, ',', &|g: GeneratorId, out: &mut String| {
        out.push('e');
        if p > 1 {
            out.push_str(&g.index().to_string());
        }
    });
    out
}

fn parse_pairs(s: &str, p: usize) -> Result<Term, CodecError> {
    let bytes = s.as_bytes();
    let syntax = |e: TermParseError| CodecError::Syntax { pos: e.pos, msg: e.msg };
    let mut pos = 0;
    let mut atom = |b: &[u8], pos: &mut usize| read_atom(b, pos);
    let t = parse_nested(bytes, &mut pos, b',', &mut atom).map_err(syntax)?;
    expect_end(bytes, pos).map_err(syntax)?;
    if t.max_generator() as usize > p {
        return Err(CodecError::invalid(format!(
            "generator e{} exceeds the generator count {p}",
            t.max_generator()
        )));
    }
    Ok(t)
}

impl Magma for Term {
    const ID: FamilyId = FamilyId::F1;

    fn generator() -> Self {
        Term::leaf()
    }

    fn product(&self, rhs: &Self) -> Self {
        Term::product(self.clone(), rhs.clone())
    }

    fn factorize(&self) -> Option<(Self, Self)> {
        Term::factorize(self).map(|(a, b)| (a.clone(), b.clone()))
    }

    fn norm(&self) -> usize {
        Term::norm(self)
    }

    fn parse(s: &str) -> Result<Self, CodecError> {
        parse_pairs(s, 1)
    }

    fn render(&self) -> String {
        render_pairs(self, self.max_generator() as usize)
    }

    element_glue!(Cartesian);
}

/// The Cartesian magma on `p` generators.
#[derive(Clone, Copy, Debug)]
pub struct CartesianFamily {
    p: usize,
}

impl CartesianFamily {
    /// # Panics
    /// When `p == 0`.
    pub const fn new(p: usize) -> Self {
        assert!(p >= 1, "a magma needs at least one generator");
        CartesianFamily { p }
    }

    fn get<'e>(&self, e: &'e Element) -> Result<&'e Term, Error> {
        match e {
            Element::Cartesian(t) if t.max_generator() as usize <= self.p => Ok(t),
            Element::Cartesian(t) => Err(Error::GeneratorOutOfRange {
                family: FamilyId::F1,
                index: t.max_generator(),
                count: self.p,
            }),
            other => Err(Error::WrongFamily { expected: FamilyId::F1, found: other.family() }),
        }
    }
}

impl FamilyDescriptor for CartesianFamily {
    fn id(&self) -> FamilyId {
        FamilyId::F1
    }

    fn generator_count(&self) -> usize {
        self.p
    }

    fn generator(&self, g: GeneratorId) -> Result<Element, Error> {
        if g.index() as usize > self.p {
            return Err(Error::GeneratorOutOfRange {
                family: FamilyId::F1,
                index: g.index(),
                count: self.p,
            });
        }
        Ok(Element::Cartesian(Term::Leaf(g)))
    }

    fn product(&self, a: &Element, b: &Element) -> Result<Element, Error> {
        Ok(Element::Cartesian(Term::product(self.get(a)?.clone(), self.get(b)?.clone())))
    }

    fn factorize(&self, e: &Element) -> Result<Option<(Element, Element)>, Error> {
        Ok(self
            .get(e)?
            .factorize()
            .map(|(a, b)| (Element::Cartesian(a.clone()), Element::Cartesian(b.clone()))))
    }

    fn norm(&self, e: &Element) -> Result<usize, Error> {
        Ok(self.get(e)?.norm())
    }

    fn parse(&self, s: &str) -> Result<Element, Error> {
        parse_pairs(s, self.p)
            .map(Element::Cartesian)
            .map_err(|source| Error::Codec { family: FamilyId::F1, source })
    }

    fn render(&self, e: &Element) -> Result<String, Error> {
        Ok(render_pairs(self.get(e)?, self.p))
    }
}
