//! The family contract and the registry of the fourteen families.

use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;


use crate::families::{
    BinaryTree, BracketWord, ChordDiagram, DyckPath, FloorPlan, FriezeSequence, NestedMatching,
    NonCrossingPartition, Permutation, PlanarTree, StaircasePolygon, StandardTableau,
    Triangulation,
};
use crate::term::{GeneratorId, Term};
use crate::Error;

/// Registry tag of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
}

impl FamilyId {
    pub const ALL: [FamilyId; 14] = [
        FamilyId::F1,
        FamilyId::F2,
        FamilyId::F3,
        FamilyId::F4,
        FamilyId::F5,
        FamilyId::F6,
        FamilyId::F7,
        FamilyId::F8,
        FamilyId::F9,
        FamilyId::F10,
        FamilyId::F11,
        FamilyId::F12,
        FamilyId::F13,
        FamilyId::F14,
    ];

    /// 1-based position in the registry.
    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn alias(self) -> &'static str {
        use FamilyId::*;
        match self {
            F1 => "cart",
            F2 => "brackets",
            F3 => "chords",
            F4 => "cbt",
            F5 => "planar",
            F6 => "matching",
            F7 => "ncpart",
            F8 => "dyck",
            F9 => "triang",
            F10 => "avoid321",
            F11 => "staircase",
            F12 => "tableau",
            F13 => "floorplan",
            F14 => "frieze",
        }
    }

    pub fn title(self) -> &'static str {
        use FamilyId::*;
        match self {
            F1 => "Cartesian magma (nested pairs)",
            F2 => "balanced bracket words",
            F3 => "non-crossing chord diagrams",
            F4 => "complete binary trees",
            F5 => "planar rooted trees",
            F6 => "nested matchings",
            F7 => "non-crossing partitions",
            F8 => "Dyck paths",
            F9 => "polygon triangulations",
            F10 => "321-avoiding permutations",
            F11 => "staircase polygons",
            F12 => "standard 2-row tableaux",
            F13 => "floor plans",
            F14 => "frieze sequences",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.number())
    }
}

impl std::str::FromStr for FamilyId {
    type Err = Error;

    /// Accepts `F8`, `f8`, `8` or the alias `dyck`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s.strip_prefix(['F', 'f']).unwrap_or(s);
        if let Ok(k) = digits.parse::<usize>() {
            if (1..=14).contains(&k) {
                return Ok(FamilyId::ALL[k - 1]);
            }
        }
        FamilyId::ALL
            .into_iter()
            .find(|f| f.alias() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Codec failure: malformed text versus well-formed text that is not an element.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodecError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid element: {0}")]
    Invalid(String),
}

impl CodecError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CodecError::Invalid(msg.into())
    }

    pub fn is_syntax(&self) -> bool {
        matches!(self, CodecError::Syntax { .. })
    }
}

/// A single-generator Catalan family over a native representation.
///
/// Implementations keep values in canonical form so that derived equality
/// is the family's element equality.
pub trait Magma: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    const ID: FamilyId;

    fn generator() -> Self;
    fn product(&self, rhs: &Self) -> Self;
    /// `None` exactly on the generator.
    fn factorize(&self) -> Option<(Self, Self)>;
    fn norm(&self) -> usize;
    fn parse(s: &str) -> Result<Self, CodecError>;
    fn render(&self) -> String;

    fn into_element(self) -> Element;
    fn from_element(e: &Element) -> Option<&Self>;
}

macro_rules! elements {
    ($($variant:ident($ty:ty) = $id:ident),* $(,)?) => {
        /// A family-tagged element in its native representation.
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Element {
            $($variant($ty),)*
        }

        impl Element {
            pub fn family(&self) -> FamilyId {
                match self {
                    $(Element::$variant(_) => FamilyId::$id,)*
                }
            }
        }

        $(
        impl From<$ty> for Element {
            fn from(v: $ty) -> Element {
                Element::$variant(v)
            }
        }
        )*
    };
}

elements! {
    Cartesian(Term) = F1,
    Brackets(BracketWord) = F2,
    Chords(ChordDiagram) = F3,
    BinaryTree(BinaryTree) = F4,
    Planar(PlanarTree) = F5,
    Matching(NestedMatching) = F6,
    Partition(NonCrossingPartition) = F7,
    Dyck(DyckPath) = F8,
    Triangulation(Triangulation) = F9,
    Permutation(Permutation) = F10,
    Staircase(StaircasePolygon) = F11,
    Tableau(StandardTableau) = F12,
    FloorPlan(FloorPlan) = F13,
    Frieze(FriezeSequence) = F14,
}

/// Helper for `Magma::from_element` implementations.
#[macro_export]
#[doc(hidden)]
macro_rules! element_glue {
    ($variant:ident) => {
        fn into_element(self) -> $crate::family::Element {
            $crate::family::Element::$variant(self)
        }
        fn from_element(e: &$crate::family::Element) -> Option<&Self> {
            match e {
                $crate::family::Element::$variant(v) => Some(v),
                _ => None,
            }
        }
    };
}

/// Object-safe magma contract used by the bijection engine and the CLI.
pub trait FamilyDescriptor: Send + Sync {
    fn id(&self) -> FamilyId;
    fn generator_count(&self) -> usize;
    fn generator(&self, g: GeneratorId) -> Result<Element, Error>;
    fn product(&self, a: &Element, b: &Element) -> Result<Element, Error>;
    fn factorize(&self, e: &Element) -> Result<Option<(Element, Element)>, Error>;
    fn norm(&self, e: &Element) -> Result<usize, Error>;
    fn parse(&self, s: &str) -> Result<Element, Error>;
    fn render(&self, e: &Element) -> Result<String, Error>;

    /// Equality of canonical native representations.
    fn equals(&self, a: &Element, b: &Element) -> Result<bool, Error> {
        self.check(a)?;
        self.check(b)?;
        Ok(a == b)
    }

    fn check(&self, e: &Element) -> Result<(), Error> {
        if e.family() == self.id() {
            Ok(())
        } else {
            Err(Error::WrongFamily { expected: self.id(), found: e.family() })
        }
    }
}

/// Descriptor for a [`Magma`] implementation.
pub struct Native<M>(PhantomData<fn() -> M>);

impl<M> Native<M> {
    pub const fn new() -> Self {
        Native(PhantomData)
    }
}

impl<M> Default for Native<M> {
    fn default() -> Self {
        Self::new()
    }
}

impl<M: Magma> Native<M> {
    fn get<'e>(&self, e: &'e Element) -> Result<&'e M, Error> {
        M::from_element(e).ok_or(Error::WrongFamily { expected: M::ID, found: e.family() })
    }
}

impl<M: Magma> FamilyDescriptor for Native<M> {
    fn id(&self) -> FamilyId {
        M::ID
    }

    fn generator_count(&self) -> usize {
        1
    }

    fn generator(&self, g: GeneratorId) -> Result<Element, Error> {
        if g != GeneratorId::FIRST {
            return Err(Error::GeneratorOutOfRange { family: M::ID, index: g.index(), count: 1 });
        }
        Ok(M::generator().into_element())
    }

    fn product(&self, a: &Element, b: &Element) -> Result<Element, Error> {
        Ok(self.get(a)?.product(self.get(b)?).into_element())
    }

    fn factorize(&self, e: &Element) -> Result<Option<(Element, Element)>, Error> {
        Ok(self.get(e)?.factorize().map(|(a, b)| (a.into_element(), b.into_element())))
    }

    fn norm(&self, e: &Element) -> Result<usize, Error> {
        Ok(self.get(e)?.norm())
    }

    fn parse(&self, s: &str) -> Result<Element, Error> {
        M::parse(s)
            .map(Magma::into_element)
            .map_err(|source| Error::Codec { family: M::ID, source })
    }

    fn render(&self, e: &Element) -> Result<String, Error> {
        Ok(self.get(e)?.render())
    }
}

static F1: crate::families::CartesianFamily = crate::families::CartesianFamily::new(1);
static F2: Native<BracketWord> = Native::new();
static F3: Native<ChordDiagram> = Native::new();
static F4: Native<BinaryTree> = Native::new();
static F5: Native<PlanarTree> = Native::new();
static F6: Native<NestedMatching> = Native::new();
static F7: Native<NonCrossingPartition> = Native::new();
static F8: Native<DyckPath> = Native::new();
static F9: Native<Triangulation> = Native::new();
static F10: Native<Permutation> = Native::new();
static F11: Native<StaircasePolygon> = Native::new();
static F12: Native<StandardTableau> = Native::new();
static F13: Native<FloorPlan> = Native::new();
static F14: Native<FriezeSequence> = Native::new();

/// The registered descriptor of a family (F1 with one generator).
pub fn family(id: FamilyId) -> &'static dyn FamilyDescriptor {
    use FamilyId as I;
    match id {
        I::F1 => &F1,
        I::F2 => &F2,
        I::F3 => &F3,
        I::F4 => &F4,
        I::F5 => &F5,
        I::F6 => &F6,
        I::F7 => &F7,
        I::F8 => &F8,
        I::F9 => &F9,
        I::F10 => &F10,
        I::F11 => &F11,
        I::F12 => &F12,
        I::F13 => &F13,
        I::F14 => &F14,
    }
}
