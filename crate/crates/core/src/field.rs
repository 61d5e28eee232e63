//! Prime-field context: least primitive root, index table, the set of
//! primitive elements and its characteristic function.

use num_complex::Complex;
use num_traits::{Float, FloatConst};
use thiserror::Error;

use crate::arith::{self, Factored};
use crate::bitset::Bitset;

/// Default cap on `p` for the dense index table.
pub const DEFAULT_TABLE_CAP: u32 = 1 << 22;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FieldError {
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("p = {p} exceeds the index-table cap {cap}")]
    TooLarge { p: u64, cap: u32 },
    #[error("characteristic function at x = {x} is {value}, not within {tolerance:e} of 0 or 1")]
    ToleranceExceeded {
        x: u32,
        value: String,
        tolerance: f64,
    },
}

/// `F_p` together with its least primitive root `g` and the index table
/// `ind(g^t) = t`.
#[derive(Clone, Debug)]
pub struct PrimeField {
    p: u32,
    generator: u32,
    /// `ind[x]` for `x` in `1..p`; entry 0 is unused.
    ind: Vec<u32>,
    /// `pow[t] = g^t` for `t` in `0..p-1`.
    pow: Vec<u32>,
    /// Quadratic character, indexed by residue.
    chi2: Vec<i8>,
    order: Factored,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        Self::with_cap(p, DEFAULT_TABLE_CAP)
    }

    pub fn with_cap(p: u64, cap: u32) -> Result<Self, FieldError> {
        if p < 3 || !arith::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p > cap as u64 {
            return Err(FieldError::TooLarge { p, cap });
        }
        let p = p as u32;
        let order = Factored::new(p as u64 - 1).expect("p - 1 is below the factoring cap");
        let generator = least_primitive_root(p, &order);

        let n = p as usize;
        let mut pow = Vec::with_capacity(n - 1);
        let mut ind = vec![0u32; n];
        let mut x = 1u64;
        for t in 0..p - 1 {
            pow.push(x as u32);
            ind[x as usize] = t;
            x = x * generator as u64 % p as u64;
        }
        let chi2 = (0..n)
            .map(|x| match x {
                0 => 0,
                _ if ind[x] % 2 == 0 => 1,
                _ => -1,
            })
            .collect();
        Ok(Self {
            p,
            generator,
            ind,
            pow,
            chi2,
            order,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Least primitive root.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    /// Factorization of `p - 1`.
    pub fn order(&self) -> &Factored {
        &self.order
    }

    /// Discrete logarithm to base `g`; `None` at 0.
    pub fn index(&self, x: u32) -> Option<u32> {
        let x = self.reduce(x as u64);
        (x != 0).then(|| self.ind[x as usize])
    }

    /// `g^t`, with `t` taken mod `p - 1`.
    pub fn power_of_generator(&self, t: u64) -> u32 {
        self.pow[(t % (self.p as u64 - 1)) as usize]
    }

    pub fn reduce(&self, x: u64) -> u32 {
        (x % self.p as u64) as u32
    }

    /// Reduces a signed residue into `0..p`.
    pub fn reduce_signed(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64 % self.p as u64) % self.p as u64) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.p as u64) as u32
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        pow_mod(a as u64, e, self.p as u64) as u32
    }

    /// Multiplicative inverse; `None` at 0.
    pub fn inv(&self, a: u32) -> Option<u32> {
        let a = self.reduce(a as u64);
        (a != 0).then(|| self.pow(a, self.p as u64 - 2))
    }

    pub fn is_primitive(&self, x: u32) -> bool {
        match self.index(x) {
            Some(t) => arith::gcd(t as u64, self.p as u64 - 1) == 1,
            None => false,
        }
    }

    /// Legendre symbol, read off the parity of the index.
    pub fn quadratic_character(&self, x: u32) -> i8 {
        self.chi2[self.reduce(x as u64) as usize]
    }

    pub fn primitive_set(&self) -> PrimitiveSet {
        let members = Bitset::from_elements(
            self.p as usize,
            (1..self.p)
                .filter(|&x| self.is_primitive(x))
                .map(|x| x as usize),
        );
        PrimitiveSet { p: self.p, members }
    }

    /// Tolerance for floating character-sum evaluations:
    /// `1e-6 * W(p - 1)`.
    pub fn eps_num(&self) -> f64 {
        1e-6 * self.order.squarefree_divisor_count() as f64
    }

    /// The characteristic function of the primitive elements expanded over
    /// characters:
    /// `phi(p-1)/(p-1) * sum_{d | p-1} mu(d)/phi(d) * sum_{chi of order d} chi(x)`.
    ///
    /// Returns the raw floating value. Returns 0 at `x = 0`, where characters
    /// are not evaluated.
    pub fn characteristic_sum<F: Float + FloatConst>(&self, x: u32) -> Complex<F> {
        let Some(t) = self.index(x) else {
            return Complex::new(F::zero(), F::zero());
        };
        let n = self.p as u64 - 1;
        let mut total = Complex::new(F::zero(), F::zero());
        // Non-squarefree d carry mu(d) = 0.
        for d in self.order.divisors(true) {
            let fd = Factored::new(d).expect("divisor of p - 1");
            let mu = fd.moebius();
            let phi_d = fd.totient();
            let mut inner = Complex::new(F::zero(), F::zero());
            for r in (1..=d).filter(|&r| arith::gcd(r, d) == 1) {
                let e = (r * t as u64) % d;
                let angle = F::TAU() * F::from(e).unwrap() / F::from(d).unwrap();
                inner = inner + Complex::new(angle.cos(), angle.sin());
            }
            total = total + inner * (F::from(mu).unwrap() / F::from(phi_d).unwrap());
        }
        total * (F::from(self.order.totient()).unwrap() / F::from(n).unwrap())
    }

    /// [`characteristic_sum`](Self::characteristic_sum) rounded to 0 or 1,
    /// or `ToleranceExceeded` if it is not within `eps_num` of either.
    pub fn characteristic_via_characters(&self, x: u32) -> Result<bool, FieldError> {
        let v = self.characteristic_sum::<f64>(x);
        let tol = self.eps_num();
        let near = |target: f64| v.im.abs() < tol && (v.re - target).abs() < tol;
        if near(1.0) {
            Ok(true)
        } else if near(0.0) {
            Ok(false)
        } else {
            Err(FieldError::ToleranceExceeded {
                x,
                value: format!("{v}"),
                tolerance: tol,
            })
        }
    }
}

/// The primitive elements of `F_p` as a bitset over `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveSet {
    p: u32,
    members: Bitset,
}

impl PrimitiveSet {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn members(&self) -> &Bitset {
        &self.members
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.contains(x as usize)
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.members.iter().map(|x| x as u32).collect()
    }
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

fn least_primitive_root(p: u32, order: &Factored) -> u32 {
    let n = p as u64 - 1;
    (2..p as u64)
        .find(|&g| order.primes().all(|q| pow_mod(g, n / q, p as u64) != 1))
        .map(|g| g as u32)
        .expect("odd prime has a primitive root")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_field() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.generator(), 2);
        assert_eq!(f.index(1), Some(0));
        assert_eq!(f.index(2), Some(1));
        assert_eq!(f.primitive_set().to_vec(), vec![2]);
    }

    #[test]
    fn rejects_composites_and_oversized() {
        assert_eq!(PrimeField::new(25).unwrap_err(), FieldError::NotPrime(25));
        assert_eq!(PrimeField::new(2).unwrap_err(), FieldError::NotPrime(2));
        assert_eq!(PrimeField::new(1).unwrap_err(), FieldError::NotPrime(1));
        assert_eq!(
            PrimeField::with_cap(101, 100).unwrap_err(),
            FieldError::TooLarge { p: 101, cap: 100 }
        );
    }

    #[test]
    fn primitive_sets_of_small_examples() {
        let f13 = PrimeField::new(13).unwrap();
        assert_eq!(f13.primitive_set().to_vec(), vec![2, 6, 7, 11]);
        let f19 = PrimeField::new(19).unwrap();
        assert_eq!(f19.primitive_set().to_vec(), vec![2, 3, 10, 13, 14, 15]);
    }

    #[test]
    fn is_primitive_edge_cases() {
        let f = PrimeField::new(13).unwrap();
        assert!(!f.is_primitive(1));
        assert!(f.is_primitive(2));
        assert!(!f.is_primitive(0));
    }

    #[test]
    fn quadratic_character_values() {
        let f = PrimeField::new(13).unwrap();
        assert_eq!(f.quadratic_character(0), 0);
        assert_eq!(f.quadratic_character(4), 1);
        for x in f.primitive_set().to_vec() {
            assert_eq!(f.quadratic_character(x), -1);
        }
    }

    #[test]
    fn characteristic_sum_at_small_points() {
        let f = PrimeField::new(13).unwrap();
        assert_eq!(f.characteristic_via_characters(2), Ok(true));
        assert_eq!(f.characteristic_via_characters(1), Ok(false));
        assert_eq!(f.characteristic_via_characters(0), Ok(false));
        let v = f.characteristic_sum::<f64>(2);
        assert!((v.re - 1.0).abs() < 1e-12 && v.im.abs() < 1e-12);
    }

    #[test]
    fn characteristic_sum_matches_index_gcd_at_31() {
        let f = PrimeField::new(31).unwrap();
        for x in 1..31 {
            assert_eq!(
                f.characteristic_via_characters(x),
                Ok(f.is_primitive(x)),
                "x={x}"
            );
        }
    }

    #[test]
    fn single_precision_also_works_at_small_p() {
        let f = PrimeField::new(31).unwrap();
        for x in 1..31 {
            let v = f.characteristic_sum::<f32>(x);
            let want = if f.is_primitive(x) { 1.0 } else { 0.0 };
            assert!((v.re - want).abs() < 1e-4 && v.im.abs() < 1e-4);
        }
    }
}
