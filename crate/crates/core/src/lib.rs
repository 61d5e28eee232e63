//! Primitive elements of prime fields: character sums, correlation identities
//! and a search for additive decompositions `A + B` of the primitive set.
//!
//! The numeric layers are generic over [`Scalar`]; the aliases below fix the
//! common choices.

pub mod arith;
pub mod bitset;
pub mod characters;
pub mod correlation;
pub mod decomp;
pub mod field;
pub mod rng;
pub mod samples;
pub mod scalar;

pub use bitset::Bitset;
pub use field::{FieldError, PrimeField, PrimitiveSet};
pub use rng::Sampler;
pub use scalar::Scalar;

pub type Complex64 = num_complex::Complex<f64>;

/// Integer-valued function on `F_p`; identities hold exactly.
pub type IntFunction = correlation::FpFunction<i64>;
pub type RealFunction = correlation::FpFunction<f64>;
pub type ComplexFunction = correlation::FpFunction<Complex64>;
