//! Seeded test inputs shared by the command line and the test suites.
//!
//! Every draw goes through [`Sampler`] in a fixed order, so a seed pins the
//! whole sequence of instances.

use crate::characters::{weil_check, CharacterError, CharacterSpec, PolynomialOverFp, WeilCheck};
use crate::correlation::FpFunction;
use crate::field::PrimeField;
use crate::rng::Sampler;
use crate::Complex64;

/// Integer values drawn uniformly from `lo..=hi`, in order `x = 0, 1, ...`.
pub fn int_function(field: &PrimeField, rng: &mut Sampler, lo: i64, hi: i64) -> FpFunction<i64> {
    FpFunction::from_fn(field, |_| rng.range_inclusive(lo, hi))
}

/// Real and imaginary parts uniform in `[-1, 1)`, real part drawn first.
pub fn complex_function(field: &PrimeField, rng: &mut Sampler) -> FpFunction<Complex64> {
    FpFunction::from_fn(field, |_| {
        let re = 2.0 * rng.unit() - 1.0;
        let im = 2.0 * rng.unit() - 1.0;
        Complex64::new(re, im)
    })
}

/// A character (by order and exponent), a polynomial and a scale satisfying
/// the hypotheses of [`weil_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct WeilInstance {
    pub order: u64,
    pub exponent: u64,
    pub poly: PolynomialOverFp,
    pub a: u32,
}

impl WeilInstance {
    pub fn check(&self, field: &PrimeField) -> Result<WeilCheck, CharacterError> {
        let psi = CharacterSpec::new(field, self.order, self.exponent)?;
        weil_check(&psi, &self.poly, self.a)
    }
}

/// Draws order `m > 1` dividing `p - 1`, a unit exponent mod `m`, a degree in
/// `1..=max_degree`, the non-leading coefficients from low to high and then
/// `a`. Polynomials that are `m`-th powers are redrawn.
pub fn weil_instance(field: &PrimeField, rng: &mut Sampler, max_degree: usize) -> WeilInstance {
    assert!(field.p() >= 3, "no nonprincipal characters for p = 2");
    assert!(max_degree >= 1);
    let p = field.p();
    let orders: Vec<u64> = field
        .order()
        .divisors(false)
        .into_iter()
        .filter(|&d| d > 1)
        .collect();
    let order = *rng.pick(&orders);
    let units: Vec<u64> = (1..=order)
        .filter(|&r| crate::arith::gcd(r, order) == 1)
        .collect();
    let exponent = *rng.pick(&units);
    let poly = loop {
        let degree = 1 + rng.below(max_degree as u64) as usize;
        let mut coeffs: Vec<u64> = (0..degree).map(|_| rng.below(p as u64)).collect();
        coeffs.push(1);
        let poly = PolynomialOverFp::new(p, coeffs);
        if poly.perfect_power_root(order).is_none() {
            break poly;
        }
    };
    let a = 1 + rng.below(p as u64 - 1) as u32;
    WeilInstance {
        order,
        exponent,
        poly,
        a,
    }
}
