//! Additive decompositions `A + B = P_p` of the primitive elements.
//!
//! Sumsets are computed on bitsets by OR-ing rotations. The search fixes `B`
//! (translated so that `min B = 0`) and tests the largest compatible `A`,
//! `A_max = {a : a + B ⊆ P_p}`; any valid `A` for that `B` is a subset of
//! `A_max`, so a decomposition exists iff `A_max + B = P_p`.

mod bounds;
mod certificate;
mod search;

pub use bounds::{
    bound_report, squarefree_divisors_of_order, BoundInputs, BoundReport, Quantity, Theorem,
    Verdict,
};
pub use certificate::{
    certify, h_certificate, h_certificate_every_b1, h_values, r_certificate, CertificateDocument,
    HCertificate, HSummary, RCertificate, RSummary,
};
pub use search::{search, Budget, SearchConfig, SearchEntry, SearchReport};

use thiserror::Error;

use crate::bitset::Bitset;
use crate::field::{PrimeField, PrimitiveSet};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecompError {
    #[error("set {0} is empty")]
    EmptySet(&'static str),
    #[error("element {x} is not a residue modulo {p}")]
    OutOfRange { x: u64, p: u32 },
    #[error("B must contain 0")]
    ZeroNotInB,
    #[error("B needs a nonzero element")]
    TrivialB,
    #[error("A + B is not the set of primitive elements")]
    NotADecomposition,
    #[error("|A| = {a} and |B| = {b} differ")]
    SizesUnequal { a: usize, b: usize },
    #[error("k = {0} is outside 2..=4")]
    BadK(usize),
    #[error("span {span} must lie in 1..p = 1..{p}")]
    BadSpan { span: u32, p: u32 },
    #[error("search budget exhausted after {} of {} candidates", .partial.examined, .partial.total_candidates)]
    BudgetExceeded { partial: Box<SearchReport> },
    #[error("epsilon = {0} is outside (0, 1/2)")]
    BadEpsilon(f64),
    #[error("missing input: {0}")]
    MissingInput(&'static str),
    #[error("bad input: {0}")]
    BadInput(&'static str),
}

/// `X + Y = {x + y mod n}` via rotations of `X` by each element of `Y`.
pub fn sumset(x: &Bitset, y: &Bitset) -> Bitset {
    assert_eq!(x.universe(), y.universe());
    let mut acc = Bitset::new(x.universe());
    for shift in y.iter() {
        x.or_rotated_into(shift, &mut acc);
    }
    acc
}

/// `{a : a + B ⊆ P_p}` for a set `B` containing 0.
pub fn maximal_a(primitive: &PrimitiveSet, b: &Bitset) -> Result<Bitset, DecompError> {
    if !b.contains(0) {
        return Err(DecompError::ZeroNotInB);
    }
    Ok(maximal_a_unchecked(primitive.members(), b.iter()))
}

pub(crate) fn maximal_a_unchecked(
    primitive: &Bitset,
    b: impl IntoIterator<Item = usize>,
) -> Bitset {
    let n = primitive.universe();
    let mut acc = primitive.clone();
    for shift in b {
        if shift != 0 {
            // P - b is P rotated by n - b.
            acc.intersect_with(&primitive.rotated(n - shift));
        }
    }
    acc
}

/// A candidate pair `(A, B)` over `F_p`.
#[derive(Clone, Debug)]
pub struct Decomposition<'f> {
    field: &'f PrimeField,
    a: Bitset,
    b: Bitset,
}

impl<'f> Decomposition<'f> {
    pub fn new(field: &'f PrimeField, a: &[u64], b: &[u64]) -> Result<Self, DecompError> {
        let to_set = |xs: &[u64], name: &'static str| {
            if xs.is_empty() {
                return Err(DecompError::EmptySet(name));
            }
            let mut set = Bitset::new(field.p() as usize);
            for &x in xs {
                if x >= field.p() as u64 {
                    return Err(DecompError::OutOfRange { x, p: field.p() });
                }
                set.insert(x as usize);
            }
            Ok(set)
        };
        Ok(Self {
            field,
            a: to_set(a, "A")?,
            b: to_set(b, "B")?,
        })
    }

    pub fn from_sets(field: &'f PrimeField, a: Bitset, b: Bitset) -> Result<Self, DecompError> {
        assert_eq!(a.universe(), field.p() as usize);
        assert_eq!(b.universe(), field.p() as usize);
        if a.is_empty() {
            return Err(DecompError::EmptySet("A"));
        }
        if b.is_empty() {
            return Err(DecompError::EmptySet("B"));
        }
        Ok(Self { field, a, b })
    }

    pub fn field(&self) -> &'f PrimeField {
        self.field
    }

    pub fn a(&self) -> &Bitset {
        &self.a
    }

    pub fn b(&self) -> &Bitset {
        &self.b
    }

    pub fn a_elements(&self) -> Vec<u32> {
        self.a.iter().map(|x| x as u32).collect()
    }

    pub fn b_elements(&self) -> Vec<u32> {
        self.b.iter().map(|x| x as u32).collect()
    }

    /// `min B = 0`.
    pub fn is_normalized(&self) -> bool {
        self.b.min() == Some(0)
    }

    /// Both sets have at least two elements, as the decomposition problem
    /// requires. Singletons are accepted elsewhere but flagged here.
    pub fn has_nontrivial_sides(&self) -> bool {
        self.a.count() >= 2 && self.b.count() >= 2
    }

    pub fn sumset(&self) -> Bitset {
        sumset(&self.a, &self.b)
    }

    /// `A + B = P_p` exactly.
    pub fn verify(&self) -> bool {
        self.sumset() == *self.field.primitive_set().members()
    }

    /// `(A + y, B - y)` with `y = min B`.
    pub fn normalize(&self) -> Self {
        let y = self.b.min().expect("B is nonempty");
        let n = self.field.p() as usize;
        Self {
            field: self.field,
            a: self.a.rotated(y),
            b: self.b.rotated((n - y) % n),
        }
    }
}
