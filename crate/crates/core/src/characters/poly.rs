//! Dense univariate polynomials over `F_p`.

use std::fmt;

use crate::field::pow_mod;

/// Coefficients are stored constant term first with no trailing zeros; the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolynomialOverFp {
    p: u32,
    coeffs: Vec<u32>,
}

/// One block of a squarefree decomposition: `factor^multiplicity` with
/// `factor` monic and squarefree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeFactor {
    pub factor: PolynomialOverFp,
    pub multiplicity: u64,
}

impl PolynomialOverFp {
    pub fn new(p: u32, coeffs: impl IntoIterator<Item = u64>) -> Self {
        let mut out = Self {
            p,
            coeffs: coeffs.into_iter().map(|c| (c % p as u64) as u32).collect(),
        };
        out.trim();
        out
    }

    /// Builds from signed coefficients, constant term first.
    pub fn from_signed(p: u32, coeffs: &[i64]) -> Self {
        Self::new(p, coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u64))
    }

    pub fn zero(p: u32) -> Self {
        Self {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u32) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u32, c: u64) -> Self {
        Self::new(p, [c])
    }

    /// `x - root`.
    pub fn linear(p: u32, root: u32) -> Self {
        Self::new(p, [(p - root % p) as u64, 1])
    }

    /// `x^n`.
    pub fn monomial(p: u32, n: usize) -> Self {
        let mut c = vec![0u64; n + 1];
        c[n] = 1;
        Self::new(p, c)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient() == 1
    }

    pub fn evaluate(&self, x: u32) -> u32 {
        let p = self.p as u64;
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p) as u32
    }

    fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        pow_mod(a as u64, self.p as u64 - 2, self.p as u64) as u32
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.p as u64;
        Self::new(self.p, self.coeffs.iter().map(|&a| a as u64 * c as u64 % p))
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.inv(self.leading_coefficient()))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(0) as u64;
        Self::new(
            self.p,
            (0..n).map(|i| get(&self.coeffs, i) + get(&other.coeffs, i)),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(self.p - 1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        Self::new(self.p, out)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert_eq!(self.p, divisor.p);
        let dd = divisor.degree().expect("division by the zero polynomial");
        let p = self.p as u64;
        let lead_inv = self.inv(divisor.leading_coefficient()) as u64;
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        if rem.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] * lead_inv % p;
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = (rem[k] + p - c * b as u64 % p) % p;
            }
        }
        rem.truncate(dd);
        (Self::new(self.p, quot), Self::new(self.p, rem))
    }

    /// Exact quotient; panics if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn derivative(&self) -> Self {
        let p = self.p as u64;
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| (i as u64 % p) * c as u64 % p),
        )
    }

    /// For `f(x) = h(x^p)` returns `h`; coefficients of `F_p` are their own
    /// `p`-th roots.
    fn pth_root(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .step_by(self.p as usize)
                .map(|&c| c as u64),
        )
    }

    /// Squarefree decomposition of a monic polynomial in characteristic `p`:
    /// `f = prod factor_i^{m_i}` with pairwise coprime squarefree factors and
    /// distinct multiplicities. Constant input yields an empty list.
    pub fn squarefree_decomposition(&self) -> Vec<SquarefreeFactor> {
        assert!(
            self.is_monic(),
            "squarefree decomposition expects a monic polynomial"
        );
        let mut out = Vec::new();
        self.sff_into(1, &mut out);
        out.sort_by_key(|f| f.multiplicity);
        out
    }

    fn sff_into(&self, scale: u64, out: &mut Vec<SquarefreeFactor>) {
        if self.degree().unwrap_or(0) == 0 {
            return;
        }
        let fprime = self.derivative();
        if fprime.is_zero() {
            return self.pth_root().sff_into(scale * self.p as u64, out);
        }
        let mut c = self.gcd(&fprime);
        let mut w = self.div_exact(&c);
        let mut i = 1u64;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.div_exact(&y);
            if !fac.is_one() {
                out.push(SquarefreeFactor {
                    factor: fac,
                    multiplicity: i * scale,
                });
            }
            w = y;
            c = c.div_exact(&w);
            i += 1;
        }
        if !c.is_one() {
            c.pth_root().sff_into(scale * self.p as u64, out);
        }
    }

    /// Product of the distinct monic irreducible factors.
    pub fn radical(&self) -> Self {
        self.make_monic()
            .squarefree_decomposition()
            .iter()
            .fold(Self::one(self.p), |acc, f| acc.mul(&f.factor))
    }

    /// Number of distinct roots in the algebraic closure.
    pub fn distinct_root_count(&self) -> usize {
        self.radical().degree().unwrap_or(0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.make_monic()
            .squarefree_decomposition()
            .iter()
            .all(|f| f.multiplicity == 1)
    }

    /// `Some(g)` with `g^m = self` (`g` monic) if the monic polynomial `self`
    /// is a perfect `m`-th power.
    pub fn perfect_power_root(&self, m: u64) -> Option<Self> {
        assert!(m > 0);
        let deg = self.degree()? as u64;
        if !self.is_monic() || deg % m != 0 {
            return None;
        }
        let parts = self.squarefree_decomposition();
        if parts.iter().any(|f| f.multiplicity % m != 0) {
            return None;
        }
        let root = parts.iter().fold(Self::one(self.p), |acc, f| {
            acc.mul(&f.factor.pow(f.multiplicity / m))
        });
        (root.pow(m) == *self).then_some(root)
    }
}

impl fmt::Debug for PolynomialOverFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod {})", self.p)
    }
}

impl fmt::Display for PolynomialOverFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}
