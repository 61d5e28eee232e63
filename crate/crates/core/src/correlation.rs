//! Functions `F_p -> S` and the correlation algebra on them.
//!
//! The product used throughout is `(f o g)(x) = sum_y f(y) g(x + y)`. Note the
//! `x + y`: this is a correlation, not the convolution `g(x - y)`.

use thiserror::Error;

use crate::field::PrimeField;
use crate::scalar::Scalar;

/// Largest `k` accepted by the `C_{k+1}` routines by default.
pub const DEFAULT_MAX_K: usize = 3;

/// Relative tolerance for identity checks over floating scalars.
pub const IDENTITY_REL_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorrelationError {
    #[error("functions live on different fields (p = {0} vs p = {1})")]
    FieldMismatch(u32, u32),
    #[error("k = {k} is outside 1..={max}")]
    KTooLarge { k: usize, max: usize },
    #[error("point has {got} coordinates, expected {want}")]
    PointArity { got: usize, want: usize },
    #[error("shifts must be pairwise distinct")]
    NotDistinct,
    #[error("expected {want} values, got {got}")]
    Length { got: usize, want: usize },
}

/// A dense function on `F_p`, `values[x] = f(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FpFunction<S> {
    p: u32,
    values: Vec<S>,
}

impl<S: Scalar> FpFunction<S> {
    pub fn from_values(p: u32, values: Vec<S>) -> Result<Self, CorrelationError> {
        if values.len() != p as usize {
            return Err(CorrelationError::Length {
                got: values.len(),
                want: p as usize,
            });
        }
        Ok(Self { p, values })
    }

    pub fn from_fn(field: &PrimeField, f: impl FnMut(u32) -> S) -> Self {
        Self {
            p: field.p(),
            values: (0..field.p()).map(f).collect(),
        }
    }

    pub fn constant(field: &PrimeField, c: S) -> Self {
        Self::from_fn(field, |_| c)
    }

    /// Indicator of a set of residues (taken mod `p`).
    pub fn indicator<I: IntoIterator<Item = u32>>(field: &PrimeField, set: I) -> Self {
        let mut values = vec![S::zero(); field.p() as usize];
        for x in set {
            values[(x % field.p()) as usize] = S::one();
        }
        Self {
            p: field.p(),
            values,
        }
    }

    /// The quadratic character as a function.
    pub fn quadratic_character(field: &PrimeField) -> Self {
        Self::from_fn(field, |x| S::from_int(field.quadratic_character(x) as i64))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn at(&self, x: u32) -> S {
        self.values[(x % self.p) as usize]
    }

    pub fn conj(&self) -> Self {
        Self {
            p: self.p,
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    fn same_field(&self, other: &Self) -> Result<(), CorrelationError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(CorrelationError::FieldMismatch(self.p, other.p))
        }
    }

    /// `(f o g)(x) = sum_y f(y) g(x + y)`.
    pub fn circ(&self, g: &Self) -> Result<Self, CorrelationError> {
        self.same_field(g)?;
        let p = self.p as usize;
        let values = (0..p)
            .map(|x| {
                self.values
                    .iter()
                    .enumerate()
                    .filter(|(_, &fy)| fy != S::zero())
                    .map(|(y, &fy)| fy * g.values[(x + y) % p])
                    .sum()
            })
            .collect();
        Ok(Self { p: self.p, values })
    }

    /// `C_{k+1}(f)(x_1..x_k) = sum_x f(x) f(x + x_1) ... f(x + x_k)` with
    /// `k = point.len()`.
    pub fn correlation(&self, point: &[u32]) -> Result<S, CorrelationError> {
        self.correlation_capped(point, DEFAULT_MAX_K)
    }

    pub fn correlation_capped(&self, point: &[u32], max_k: usize) -> Result<S, CorrelationError> {
        let k = point.len();
        if k == 0 || k > max_k {
            return Err(CorrelationError::KTooLarge { k, max: max_k });
        }
        Ok(self.correlation_unchecked(point))
    }

    fn correlation_unchecked(&self, point: &[u32]) -> S {
        let p = self.p as usize;
        (0..p)
            .map(|x| {
                point.iter().fold(self.values[x], |acc, &s| {
                    acc * self.values[(x + s as usize) % p]
                })
            })
            .sum()
    }

    /// `<f, g> = sum_x f(x) conj(g(x))`.
    pub fn inner(&self, g: &Self) -> Result<S, CorrelationError> {
        self.same_field(g)?;
        Ok(self
            .values
            .iter()
            .zip(&g.values)
            .map(|(&a, &b)| a * b.conj())
            .sum())
    }

    /// `<f, f>`; its square root is the l2 norm.
    pub fn norm_sq(&self) -> S {
        self.values.iter().map(|&a| a * a.conj()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().magnitude().sqrt()
    }

    /// `<f, 1> = sum_x f(x)`.
    pub fn total(&self) -> S {
        self.values.iter().copied().sum()
    }
}

/// Two independently computed sides of an identity.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck<S> {
    pub lhs: S,
    pub rhs: S,
    pub ok: bool,
}

impl<S: Scalar> IdentityCheck<S> {
    fn new(lhs: S, rhs: S) -> Self {
        Self {
            lhs,
            rhs,
            ok: S::agrees(lhs, rhs, IDENTITY_REL_TOL),
        }
    }

    /// `|lhs - rhs| / (1 + |lhs|)`.
    pub fn relative_error(&self) -> f64 {
        (self.lhs - self.rhs).magnitude() / (1.0 + self.lhs.magnitude())
    }
}

/// Checks `sum_x (f o g)^{k+1}(x) = sum_{x_1..x_k} C_{k+1}(f) C_{k+1}(g)`.
///
/// The right side streams over the `p^k` grid without storing either tensor.
pub fn check_shkredov_identity<S: Scalar>(
    f: &FpFunction<S>,
    g: &FpFunction<S>,
    k: usize,
) -> Result<IdentityCheck<S>, CorrelationError> {
    f.same_field(g)?;
    if k == 0 || k > DEFAULT_MAX_K {
        return Err(CorrelationError::KTooLarge {
            k,
            max: DEFAULT_MAX_K,
        });
    }
    let fg = f.circ(g)?;
    let lhs: S = fg
        .values
        .iter()
        .map(|&v| (0..k).fold(v, |acc, _| acc * v))
        .sum();

    let p = f.p;
    let mut point = vec![0u32; k];
    let mut rhs = S::zero();
    loop {
        rhs += f.correlation_unchecked(&point) * g.correlation_unchecked(&point);
        // Odometer increment over F_p^k.
        let mut i = 0;
        loop {
            if i == k {
                return Ok(IdentityCheck::new(lhs, rhs));
            }
            point[i] += 1;
            if point[i] < p {
                break;
            }
            point[i] = 0;
            i += 1;
        }
    }
}

/// Checks `<f o chi_2, g o chi_2> = p <f, g> - <f, 1> <conj g, 1>`.
pub fn check_inner_identity<S: Scalar>(
    field: &PrimeField,
    f: &FpFunction<S>,
    g: &FpFunction<S>,
) -> Result<IdentityCheck<S>, CorrelationError> {
    f.same_field(g)?;
    if f.p != field.p() {
        return Err(CorrelationError::FieldMismatch(f.p, field.p()));
    }
    let chi2 = FpFunction::<S>::quadratic_character(field);
    let lhs = f.circ(&chi2)?.inner(&g.circ(&chi2)?)?;
    let p = S::from_int(field.p() as i64);
    let rhs = p * f.inner(g)? - f.total() * g.conj().total();
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `sum_x chi_2(x+a1) chi_2(x+a2) chi_2(x+a3) chi_2(x+a4)` against `1 + 2 sqrt p`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadrupleCheck {
    pub sum: i64,
    pub bound: f64,
    pub ok: bool,
}

pub fn check_quadruple_bound(
    field: &PrimeField,
    shifts: [u32; 4],
) -> Result<QuadrupleCheck, CorrelationError> {
    let p = field.p();
    let s = shifts.map(|a| a % p);
    for i in 0..4 {
        for j in i + 1..4 {
            if s[i] == s[j] {
                return Err(CorrelationError::NotDistinct);
            }
        }
    }
    let sum: i64 = (0..p)
        .map(|x| {
            s.iter()
                .map(|&a| field.quadratic_character(field.add(x, a)) as i64)
                .product::<i64>()
        })
        .sum();
    let bound = 1.0 + 2.0 * (p as f64).sqrt();
    let ok = sum.abs() as f64 <= bound + field.eps_num();
    Ok(QuadrupleCheck { sum, bound, ok })
}
