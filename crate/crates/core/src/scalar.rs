//! Scalar types that functions on `F_p` may take values in.
//!
//! Integer scalars are exact: identities over them are checked with `==`.
//! Floating and complex scalars are compared with a relative tolerance.

use std::fmt::Debug;
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, NumAssign, NumCast};

/// A value type for [`FpFunction`](crate::FpFunction) and the identity checkers.
pub trait Scalar:
    Copy + Debug + PartialEq + NumAssign + std::ops::Neg<Output = Self> + Sum + Send + Sync + 'static
{
    /// `true` when arithmetic is exact, so identities must hold with equality.
    const EXACT: bool;

    /// Complex conjugate; the identity on real types.
    fn conj(self) -> Self;

    /// Embeds a small integer (character values, set indicators).
    fn from_int(v: i64) -> Self;

    /// Absolute value as `f64`, used for tolerance checks and reporting.
    fn magnitude(self) -> f64;

    /// Lossy view as a complex double, used for reporting.
    fn to_c64(self) -> Complex<f64>;

    /// Whether `lhs` and `rhs` agree: exactly for exact scalars, otherwise
    /// `|lhs - rhs| <= rel_tol * (1 + |lhs|)`.
    fn agrees(lhs: Self, rhs: Self, rel_tol: f64) -> bool {
        if Self::EXACT {
            lhs == rhs
        } else {
            (lhs - rhs).magnitude() <= rel_tol * (1.0 + lhs.magnitude())
        }
    }
}

macro_rules! int_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            const EXACT: bool = true;
            fn conj(self) -> Self {
                self
            }
            fn from_int(v: i64) -> Self {
                <$t as NumCast>::from(v).expect("integer out of range for scalar type")
            }
            fn magnitude(self) -> f64 {
                (self as f64).abs()
            }
            fn to_c64(self) -> Complex<f64> {
                Complex::new(self as f64, 0.0)
            }
        }
    )*};
}

int_scalar!(i32, i64, i128);

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            const EXACT: bool = false;
            fn conj(self) -> Self {
                self
            }
            fn from_int(v: i64) -> Self {
                v as $t
            }
            fn magnitude(self) -> f64 {
                Float::abs(self) as f64
            }
            fn to_c64(self) -> Complex<f64> {
                Complex::new(self as f64, 0.0)
            }
        }

        impl Scalar for Complex<$t> {
            const EXACT: bool = false;
            fn conj(self) -> Self {
                Complex::conj(&self)
            }
            fn from_int(v: i64) -> Self {
                Complex::new(v as $t, 0.0)
            }
            fn magnitude(self) -> f64 {
                self.norm() as f64
            }
            fn to_c64(self) -> Complex<f64> {
                Complex::new(self.re as f64, self.im as f64)
            }
        }
    )*};
}

float_scalar!(f32, f64);
