//! Free-magma terms: binary trees whose leaves carry generator ids.
//!
//! A [`Term`] is an element of the Cartesian magma. Every other family is
//! connected to this type through `decompose`/`compose` in [`crate::bijection`].

use std::fmt;

use thiserror::Error;

/// Default cap on the norm accepted by enumeration routines.
pub const DEFAULT_CAP: usize = 12;

/// Index of a generator, always at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId(u32);

impl GeneratorId {
    /// The generator of every single-generator family.
    pub const FIRST: GeneratorId = GeneratorId(1);

    /// Returns `None` for index 0.
    pub fn new(index: u32) -> Option<Self> {
        (index >= 1).then_some(GeneratorId(index))
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

/// The three serializations of a product expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Notation {
    Prefix,
    Infix,
    Postfix,
}

impl Notation {
    pub const ALL: [Notation; 3] = [Notation::Prefix, Notation::Infix, Notation::Postfix];
}

impl fmt::Display for Notation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Notation::Prefix => "prefix",
            Notation::Infix => "infix",
            Notation::Postfix => "postfix",
        })
    }
}

impl std::str::FromStr for Notation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "prefix" => Ok(Notation::Prefix),
            "infix" => Ok(Notation::Infix),
            "postfix" => Ok(Notation::Postfix),
            other => Err(format!("unknown notation `{other}`")),
        }
    }
}

/// An element of the Cartesian magma.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Leaf(GeneratorId),
    Node(Box<Term>, Box<Term>),
}

/// Failure to read a term, with the byte offset where it went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("term parse error at position {pos}: {msg}")]
pub struct TermParseError {
    pub pos: usize,
    pub msg: String,
}

/// Enumeration was asked for a norm beyond the configured cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("norm {norm} exceeds the enumeration cap {cap}")]
pub struct CapExceeded {
    pub norm: usize,
    pub cap: usize,
}

impl Term {
    /// Leaf carrying the first generator.
    pub fn leaf() -> Term {
        Term::Leaf(GeneratorId::FIRST)
    }

    /// The Cartesian product `(a, b)`.
    pub fn product(a: Term, b: Term) -> Term {
        Term::Node(Box::new(a), Box::new(b))
    }

    /// Inverse of [`Term::product`]; `None` on leaves.
    pub fn factorize(&self) -> Option<(&Term, &Term)> {
        match self {
            Term::Leaf(_) => None,
            Term::Node(a, b) => Some((a, b)),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Term::Leaf(_))
    }

    /// Number of leaves.
    pub fn norm(&self) -> usize {
        match self {
            Term::Leaf(_) => 1,
            Term::Node(a, b) => a.norm() + b.norm(),
        }
    }

    /// Largest generator index used by a leaf.
    pub fn max_generator(&self) -> u32 {
        match self {
            Term::Leaf(g) => g.index(),
            Term::Node(a, b) => a.max_generator().max(b.max_generator()),
        }
    }

    /// The anti-isomorphism `rev(u * v) = rev(v) * rev(u)`.
    pub fn reverse(&self) -> Term {
        match self {
            Term::Leaf(g) => Term::Leaf(*g),
            Term::Node(a, b) => Term::product(b.reverse(), a.reverse()),
        }
    }

    /// Replaces every leaf generator through `sigma`.
    pub fn relabel(&self, sigma: &impl Fn(GeneratorId) -> GeneratorId) -> Term {
        match self {
            Term::Leaf(g) => Term::Leaf(sigma(*g)),
            Term::Node(a, b) => Term::product(a.relabel(sigma), b.relabel(sigma)),
        }
    }

    /// Count of products whose right factor is a generator.
    pub fn narayana_right(&self) -> usize {
        match self {
            Term::Leaf(_) => 0,
            Term::Node(a, b) => a.narayana_right() + b.narayana_right() + usize::from(b.is_leaf()),
        }
    }

    /// The complementary statistic `norm - narayana_right`.
    pub fn narayana_left(&self) -> usize {
        self.norm() - self.narayana_right()
    }

    /// Renders with atoms `e` when only the first generator occurs, `eK` otherwise.
    pub fn render(&self, notation: Notation) -> String {
        self.render_in(notation, self.max_generator() as usize)
    }

    /// Renders for an ambient magma with `p` generators.
    pub fn render_in(&self, notation: Notation, p: usize) -> String {
        let mut out = String::new();
        let atom = |g: GeneratorId, out: &mut String| push_atom(g, p, out);
        match notation {
            Notation::Infix => self.write_nested(&mut out, '*', &atom),
            Notation::Prefix => self.write_prefix(&mut out, &atom),
            Notation::Postfix => self.write_postfix(&mut out, &atom),
        }
        out
    }

    /// Writes `(l<sep>r)` recursively, calling `atom` on leaves.
    pub(crate) fn write_nested(
        &self,
        out: &mut String,
        sep: char,
        atom: &impl Fn(GeneratorId, &mut String),
    ) {
        match self {
            Term::Leaf(g) => atom(*g, out),
            Term::Node(a, b) => {
                out.push('(');
                a.write_nested(out, sep, atom);
                out.push(sep);
                b.write_nested(out, sep, atom);
                out.push(')');
            }
        }
    }

    fn write_prefix(&self, out: &mut String, atom: &impl Fn(GeneratorId, &mut String)) {
        match self {
            Term::Leaf(g) => atom(*g, out),
            Term::Node(a, b) => {
                out.push('*');
                a.write_prefix(out, atom);
                b.write_prefix(out, atom);
            }
        }
    }

    fn write_postfix(&self, out: &mut String, atom: &impl Fn(GeneratorId, &mut String)) {
        match self {
            Term::Leaf(g) => atom(*g, out),
            Term::Node(a, b) => {
                a.write_postfix(out, atom);
                b.write_postfix(out, atom);
                out.push('*');
            }
        }
    }

    /// Parses any of the three notations. Atoms are `e` or `eK` with `K >= 1`.
    pub fn parse(s: &str, notation: Notation) -> Result<Term, TermParseError> {
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(TermParseError { pos: 0, msg: "empty input".into() });
        }
        match notation {
            Notation::Infix => {
                let mut pos = 0;
                let t = parse_nested(bytes, &mut pos, b'*', &mut |b, p| read_atom(b, p))?;
                expect_end(bytes, pos)?;
                Ok(t)
            }
            Notation::Prefix => {
                let mut pos = 0;
                let t = parse_prefix(bytes, &mut pos)?;
                expect_end(bytes, pos)?;
                Ok(t)
            }
            Notation::Postfix => parse_postfix(bytes),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Notation::Infix))
    }
}

fn push_atom(g: GeneratorId, p: usize, out: &mut String) {
    out.push('e');
    if p > 1 {
        out.push_str(&g.index().to_string());
    }
}

fn err(pos: usize, msg: impl Into<String>) -> TermParseError {
    TermParseError { pos, msg: msg.into() }
}

pub(crate) fn expect_end(bytes: &[u8], pos: usize) -> Result<(), TermParseError> {
    if pos == bytes.len() {
        Ok(())
    } else {
        Err(err(pos, "trailing characters"))
    }
}

/// Reads `e` or `eK`, advancing `pos`.
pub(crate) fn read_atom(bytes: &[u8], pos: &mut usize) -> Result<GeneratorId, TermParseError> {
    let start = *pos;
    if bytes.get(start) != Some(&b'e') {
        return Err(err(start, "expected atom `e`"));
    }
    *pos += 1;
    let digits_start = *pos;
    while bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
        *pos += 1;
    }
    if *pos == digits_start {
        return Ok(GeneratorId::FIRST);
    }
    if bytes[digits_start] == b'0' {
        return Err(err(digits_start, "generator index must start with a nonzero digit"));
    }
    let text = std::str::from_utf8(&bytes[digits_start..*pos]).expect("ascii digits");
    text.parse::<u32>()
        .ok()
        .and_then(GeneratorId::new)
        .ok_or_else(|| err(digits_start, "generator index out of range"))
}

/// Parses `atom | (T<sep>T)`; shared with the nested-pair codecs.
pub(crate) fn parse_nested(
    bytes: &[u8],
    pos: &mut usize,
    sep: u8,
    atom: &mut impl FnMut(&[u8], &mut usize) -> Result<GeneratorId, TermParseError>,
) -> Result<Term, TermParseError> {
    // Explicit stack so deep inputs cannot overflow the call stack.
    enum Frame {
        Left,
        Right(Term),
    }
    let mut stack: Vec<Frame> = Vec::new();
    loop {
        let mut t = if bytes.get(*pos) == Some(&b'(') {
            *pos += 1;
            stack.push(Frame::Left);
            continue;
        } else {
            Term::Leaf(atom(bytes, pos)?)
        };
        loop {
            match stack.pop() {
                None => return Ok(t),
                Some(Frame::Left) => {
                    if bytes.get(*pos) != Some(&sep) {
                        return Err(err(*pos, format!("expected `{}`", sep as char)));
                    }
                    *pos += 1;
                    stack.push(Frame::Right(t));
                    break;
                }
                Some(Frame::Right(left)) => {
                    if bytes.get(*pos) != Some(&b')') {
                        return Err(err(*pos, "expected `)`"));
                    }
                    *pos += 1;
                    t = Term::product(left, t);
                }
            }
        }
    }
}

fn parse_prefix(bytes: &[u8], pos: &mut usize) -> Result<Term, TermParseError> {
    // Pending operators waiting for one or two operands.
    let mut stack: Vec<Option<Term>> = Vec::new();
    loop {
        if bytes.get(*pos) == Some(&b'*') {
            *pos += 1;
            stack.push(None);
            continue;
        }
        let mut t = Term::Leaf(read_atom(bytes, pos)?);
        loop {
            match stack.pop() {
                None => return Ok(t),
                Some(None) => {
                    stack.push(Some(t));
                    break;
                }
                Some(Some(left)) => t = Term::product(left, t),
            }
        }
    }
}

fn parse_postfix(bytes: &[u8]) -> Result<Term, TermParseError> {
    let mut stack: Vec<Term> = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos] == b'*' {
            let (Some(b), Some(a)) = (stack.pop(), stack.pop()) else {
                return Err(err(pos, "operator without two operands"));
            };
            stack.push(Term::product(a, b));
            pos += 1;
        } else {
            stack.push(Term::Leaf(read_atom(bytes, &mut pos)?));
        }
    }
    match stack.len() {
        1 => Ok(stack.pop().expect("one item")),
        0 => Err(err(0, "empty input")),
        _ => Err(err(bytes.len(), "missing operator")),
    }
}

/// All terms of norm `n` over `p` generators, sorted by infix rendering.
pub fn enumerate_terms(p: usize, n: usize) -> Result<Vec<Term>, CapExceeded> {
    enumerate_terms_capped(p, n, DEFAULT_CAP)
}

/// [`enumerate_terms`] with an explicit cap.
pub fn enumerate_terms_capped(p: usize, n: usize, cap: usize) -> Result<Vec<Term>, CapExceeded> {
    if n > cap {
        return Err(CapExceeded { norm: n, cap });
    }
    if n == 0 || p == 0 {
        return Ok(Vec::new());
    }
    let leaves: Vec<Term> = (1..=p as u32).map(|i| Term::Leaf(GeneratorId(i))).collect();
    let mut by_norm: Vec<Vec<Term>> = vec![Vec::new(), leaves];
    for k in 2..=n {
        let mut level = Vec::new();
        for i in 1..k {
            for a in &by_norm[i] {
                for b in &by_norm[k - i] {
                    level.push(Term::product(a.clone(), b.clone()));
                }
            }
        }
        by_norm.push(level);
    }
    let mut out = by_norm.swap_remove(n);
    let pp = p;
    out.sort_by_cached_key(|t| t.render_in(Notation::Infix, pp));
    Ok(out)
}
