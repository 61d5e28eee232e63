//! Multiplicative characters of `F_p` and the character sums built from them.
//!
//! A character of order `d` with exponent `r` (`gcd(r, d) = 1`) sends
//! `g^t` to `exp(2 pi i r t / d)` and `0` to `0`. Sums of character values
//! are accumulated exactly as multiplicity vectors over the `d`-th roots of
//! unity ([`RootSum`]) and only converted to floating point at the end.

mod poly;
mod weil;

pub use poly::{PolynomialOverFp, SquarefreeFactor};
pub use weil::{weil_check, WeilCheck};

use num_complex::Complex;
use num_traits::{Float, FloatConst};
use thiserror::Error;

use crate::arith::{self, Factored};
use crate::field::PrimeField;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharacterError {
    #[error("{d} does not divide p - 1 = {n}")]
    NotADivisor { d: u64, n: u64 },
    #[error("exponent {r} is not a unit modulo {d}")]
    BadExponent { r: u64, d: u64 },
    #[error("shift {0} appears more than once")]
    DuplicateShift(u32),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is a perfect {0}-th power")]
    IsPerfectPower(u64),
    #[error("character must be nonprincipal")]
    Principal,
    #[error("scale factor a must be nonzero")]
    ZeroScale,
}

/// A multiplicative character of exact order `d`.
#[derive(Clone, Copy, Debug)]
pub struct CharacterSpec<'f> {
    field: &'f PrimeField,
    order: u64,
    exponent: u64,
}

impl<'f> CharacterSpec<'f> {
    pub fn new(field: &'f PrimeField, order: u64, exponent: u64) -> Result<Self, CharacterError> {
        let n = field.p() as u64 - 1;
        if order == 0 || n % order != 0 {
            return Err(CharacterError::NotADivisor { d: order, n });
        }
        if exponent == 0 || exponent > order || arith::gcd(exponent, order) != 1 {
            return Err(CharacterError::BadExponent {
                r: exponent,
                d: order,
            });
        }
        Ok(Self {
            field,
            order,
            exponent,
        })
    }

    pub fn principal(field: &'f PrimeField) -> Self {
        Self {
            field,
            order: 1,
            exponent: 1,
        }
    }

    pub fn quadratic(field: &'f PrimeField) -> Self {
        Self {
            field,
            order: 2,
            exponent: 1,
        }
    }

    /// The generator of the character group, `g^t -> exp(2 pi i t / (p-1))`.
    pub fn generator(field: &'f PrimeField) -> Self {
        Self {
            field,
            order: field.p() as u64 - 1,
            exponent: 1,
        }
    }

    pub fn field(&self) -> &'f PrimeField {
        self.field
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    /// Exponent `e` with `chi(x) = zeta_d^e`; `None` at 0.
    pub fn root_exponent(&self, x: u32) -> Option<u64> {
        self.field
            .index(x)
            .map(|t| (self.exponent * t as u64) % self.order)
    }

    pub fn evaluate<F: Float + FloatConst>(&self, x: u32) -> Complex<F> {
        match self.root_exponent(x) {
            Some(e) => root_of_unity(e, self.order),
            None => Complex::new(F::zero(), F::zero()),
        }
    }
}

fn root_of_unity<F: Float + FloatConst>(e: u64, d: u64) -> Complex<F> {
    // Reduce to the exact values on the axes where possible.
    let e = e % d;
    if e == 0 {
        return Complex::new(F::one(), F::zero());
    }
    if 2 * e == d {
        return Complex::new(-F::one(), F::zero());
    }
    let angle = F::TAU() * F::from(e).unwrap() / F::from(d).unwrap();
    Complex::new(angle.cos(), angle.sin())
}

/// `G_d`: all characters of exact order `d`, one per unit `r` mod `d`.
pub fn characters_of_order(
    field: &PrimeField,
    d: u64,
) -> Result<Vec<CharacterSpec<'_>>, CharacterError> {
    let n = field.p() as u64 - 1;
    if d == 0 || n % d != 0 {
        return Err(CharacterError::NotADivisor { d, n });
    }
    Ok((1..=d)
        .filter(|&r| arith::gcd(r, d) == 1)
        .map(|r| CharacterSpec {
            field,
            order: d,
            exponent: r,
        })
        .collect())
}

/// An element of `Z[zeta_d]` stored as integer multiplicities of the powers
/// `zeta_d^0, ..., zeta_d^{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSum {
    order: u64,
    counts: Vec<i64>,
}

impl RootSum {
    pub fn zero(order: u64) -> Self {
        Self {
            order,
            counts: vec![0; order as usize],
        }
    }

    /// Adds `sign * zeta_d^e`.
    pub fn add_term(&mut self, e: u64, sign: i64) {
        self.counts[(e % self.order) as usize] += sign;
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    /// The value as an integer, when every term sits on `zeta^0` or on
    /// `zeta^{d/2} = -1`. Other representations of integers are not detected.
    pub fn as_integer(&self) -> Option<i64> {
        let half = (self.order % 2 == 0).then_some(self.order / 2);
        let mut acc = 0i64;
        for (e, &c) in self.counts.iter().enumerate() {
            match e as u64 {
                0 => acc += c,
                h if Some(h) == half => acc -= c,
                _ if c != 0 => return None,
                _ => {}
            }
        }
        Some(acc)
    }

    pub fn to_complex<F: Float + FloatConst>(&self) -> Complex<F> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(Complex::new(F::zero(), F::zero()), |acc, (e, &c)| {
                acc + root_of_unity::<F>(e as u64, self.order) * F::from(c).unwrap()
            })
    }
}

fn check_distinct(shifts: &[u32], p: u32) -> Result<Vec<u32>, CharacterError> {
    let mut seen = vec![false; p as usize];
    shifts
        .iter()
        .map(|&s| {
            let s = s % p;
            if std::mem::replace(&mut seen[s as usize], true) {
                Err(CharacterError::DuplicateShift(s))
            } else {
                Ok(s)
            }
        })
        .collect()
}

/// `sum_x chi(x) * prod_j chi_2(x + offsets_j)` accumulated exactly.
fn twisted_sum(chi: &CharacterSpec<'_>, offsets: &[u32]) -> RootSum {
    let field = chi.field;
    let mut acc = RootSum::zero(chi.order);
    for x in 1..field.p() {
        let e = chi.root_exponent(x).expect("x is nonzero");
        let sign: i64 = offsets
            .iter()
            .map(|&o| field.quadratic_character(field.add(x, o)) as i64)
            .product();
        if sign != 0 {
            acc.add_term(e, sign);
        }
    }
    acc
}

/// `A(chi) = sum_x chi_2(x + b1) chi(x)`.
pub fn sum_a(chi: &CharacterSpec<'_>, b1: u32) -> RootSum {
    twisted_sum(chi, &[b1 % chi.field.p()])
}

/// `B(chi) = sum_x chi(x) prod_j chi_2(x - b_j)` over distinct shifts `b_j`.
pub fn sum_b(chi: &CharacterSpec<'_>, shifts: &[u32]) -> Result<RootSum, CharacterError> {
    let field = chi.field;
    let offsets: Vec<u32> = check_distinct(shifts, field.p())?
        .into_iter()
        .map(|b| field.neg(b))
        .collect();
    Ok(twisted_sum(chi, &offsets))
}

/// `C(chi) = sum_x chi(x) chi_2(x + b1) prod_j chi_2(x - b_j)`.
pub fn sum_c(chi: &CharacterSpec<'_>, b1: u32, shifts: &[u32]) -> Result<RootSum, CharacterError> {
    let field = chi.field;
    let mut offsets = vec![b1 % field.p()];
    offsets.extend(
        check_distinct(shifts, field.p())?
            .into_iter()
            .map(|b| field.neg(b)),
    );
    Ok(twisted_sum(chi, &offsets))
}

/// Which of the three sum families a [`CharSumReport`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum SumKind {
    A,
    B,
    C,
}

/// The value of one sum together with the size the nonexistence argument
/// expects of it.
#[derive(Clone, Debug, PartialEq)]
pub struct CharSumReport {
    pub kind: SumKind,
    pub value: Complex<f64>,
    pub exact: Option<i64>,
    /// Upper bound on `|value|` (`sqrt p`, `i sqrt p` or `(i+1) sqrt p`).
    pub bound: Option<f64>,
    /// Exact value predicted for the cases evaluated in closed form.
    pub predicted: Option<i64>,
    /// `false` when `b1` or a shift is 0; the bounds are only claimed for
    /// nonzero shifts.
    pub in_scope: bool,
    pub ok: bool,
}

impl CharSumReport {
    fn build(
        kind: SumKind,
        sum: &RootSum,
        field: &PrimeField,
        bound: Option<f64>,
        predicted: Option<i64>,
        in_scope: bool,
    ) -> Self {
        let value = sum.to_complex::<f64>();
        let exact = sum.as_integer();
        let ok = if !in_scope {
            true
        } else if let Some(v) = predicted {
            exact == Some(v)
        } else {
            bound.is_some_and(|b| value.norm() <= b + field.eps_num())
        };
        Self {
            kind,
            value,
            exact,
            bound,
            predicted,
            in_scope,
            ok,
        }
    }
}

pub fn report_sum_a(chi: &CharacterSpec<'_>, b1: u32) -> CharSumReport {
    let field = chi.field;
    let b1 = b1 % field.p();
    let sum = sum_a(chi, b1);
    let sqrt_p = (field.p() as f64).sqrt();
    let predicted = match chi.order {
        1 => Some(-(field.quadratic_character(b1) as i64)),
        2 => Some(-1),
        _ => None,
    };
    CharSumReport::build(SumKind::A, &sum, field, Some(sqrt_p), predicted, b1 != 0)
}

pub fn report_sum_b(
    chi: &CharacterSpec<'_>,
    shifts: &[u32],
) -> Result<CharSumReport, CharacterError> {
    let field = chi.field;
    let sum = sum_b(chi, shifts)?;
    let i = shifts.len() as f64;
    let in_scope = !shifts.is_empty() && shifts.iter().all(|&s| s % field.p() != 0);
    let bound = i * (field.p() as f64).sqrt();
    Ok(CharSumReport::build(
        SumKind::B,
        &sum,
        field,
        Some(bound),
        None,
        in_scope,
    ))
}

pub fn report_sum_c(
    chi: &CharacterSpec<'_>,
    b1: u32,
    shifts: &[u32],
) -> Result<CharSumReport, CharacterError> {
    let field = chi.field;
    let p = field.p();
    let b1 = b1 % p;
    let sum = sum_c(chi, b1, shifts)?;
    let in_scope = b1 != 0 && !shifts.is_empty() && shifts.iter().all(|&s| s % p != 0);
    let degenerate = shifts.len() == 1 && shifts[0] % p == field.neg(b1) && chi.is_principal();
    let (bound, predicted) = if degenerate {
        (None, Some(p as i64 - 2))
    } else {
        (Some((shifts.len() as f64 + 1.0) * (p as f64).sqrt()), None)
    };
    Ok(CharSumReport::build(
        SumKind::C,
        &sum,
        field,
        bound,
        predicted,
        in_scope,
    ))
}

/// Number of characters summed over all `d | p - 1`; equals `p - 1`.
pub fn dual_group_size(field: &PrimeField) -> u64 {
    field
        .order()
        .divisors(false)
        .into_iter()
        .map(|d| Factored::new(d).unwrap().totient())
        .sum()
}
