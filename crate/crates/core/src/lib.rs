//! Catalan families realized as free normed magmas.
//!
//! Every family implements [`family::Magma`]: a generator, an injective
//! product, a factorization that inverts it, and an additive norm. Because
//! each family is free on one generator, any two of them are linked by a
//! unique isomorphism, computed by [`bijection::universal_convert`] as
//! decompose into a [`term::Term`], then recompose in the target family.
//!
//! ```
//! use catalan_magma::{bijection, family::{family, FamilyId}};
//!
//! let dyck = family(FamilyId::F8);
//! let brackets = family(FamilyId::F2);
//! let path = dyck.parse("uduudd").unwrap();
//! let word = bijection::universal_convert(dyck, brackets, &path).unwrap();
//! assert_eq!(brackets.render(&word).unwrap(), "{}{{}}");
//! ```

pub mod bijection;
pub mod cli;
pub mod families;
pub mod family;
pub mod magma_lab;
pub mod numbers;
pub mod stats;
pub mod term;
pub mod verify;

use thiserror::Error;

use family::{CodecError, FamilyId};
use term::{CapExceeded, TermParseError};

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("element of {found} passed to {expected}")]
    WrongFamily { expected: FamilyId, found: FamilyId },
    #[error("{family} has {count} generator(s), index {index} is out of range")]
    GeneratorOutOfRange { family: FamilyId, index: u32, count: usize },
    #[error("generator counts differ: {src} has {src_count}, {dst} has {dst_count}")]
    GeneratorCountMismatch { src: FamilyId, src_count: usize, dst: FamilyId, dst_count: usize },
    #[error("generator map is not a bijection on 1..={0}")]
    BadGeneratorMap(usize),
    #[error("{family}: {source}")]
    Codec { family: FamilyId, source: CodecError },
    #[error(transparent)]
    TermParse(#[from] TermParseError),
    #[error(transparent)]
    Cap(#[from] CapExceeded),
    #[error("{family}: element `{repr}` failed to factorize")]
    Factorization { family: FamilyId, repr: String },
}

impl Error {
    /// True for errors caused by malformed or invalid user text.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Codec { .. } | Error::TermParse(_) | Error::UnknownFamily(_))
    }
}
