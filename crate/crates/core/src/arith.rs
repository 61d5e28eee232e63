//! Multiplicative arithmetic functions computed from a prime factorization.

use num_traits::{Float, FloatConst};
use thiserror::Error;

/// Largest integer we are willing to factor by trial division.
pub const FACTOR_CAP: u64 = 1 << 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("argument must be positive")]
    Zero,
    #[error("{0} exceeds the trial-division cap 2^40")]
    TooLarge(u64),
    #[error("domain error: {0}")]
    Domain(String),
}

/// A positive integer together with its prime factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factored {
    pub fn new(n: u64) -> Result<Self, ArithError> {
        if n == 0 {
            return Err(ArithError::Zero);
        }
        if n > FACTOR_CAP {
            return Err(ArithError::TooLarge(n));
        }
        let mut factors = Vec::new();
        let mut m = n;
        let mut q = 2u64;
        while q * q <= m {
            if m % q == 0 {
                let mut e = 0;
                while m % q == 0 {
                    m /= q;
                    e += 1;
                }
                factors.push((q, e));
            }
            q += if q == 2 { 1 } else { 2 };
        }
        if m > 1 {
            factors.push((m, 1));
        }
        Ok(Self { n, factors })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, multiplicity)` pairs sorted by prime.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(q, _)| q)
    }

    /// Number of distinct prime factors.
    pub fn omega(&self) -> u32 {
        self.factors.len() as u32
    }

    pub fn moebius(&self) -> i8 {
        if self.factors.iter().any(|&(_, e)| e > 1) {
            0
        } else if self.factors.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .fold(self.n, |acc, &(q, _)| acc / q * (q - 1))
    }

    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64 + 1).product()
    }

    /// `W(n) = 2^omega(n)`.
    pub fn squarefree_divisor_count(&self) -> u64 {
        1 << self.omega()
    }

    /// All divisors (or only the squarefree ones) in increasing order.
    pub fn divisors(&self, squarefree_only: bool) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(q, e) in &self.factors {
            let top = if squarefree_only { 1 } else { e };
            let base = out.clone();
            let mut pw = 1u64;
            for _ in 0..top {
                pw *= q;
                out.extend(base.iter().map(|d| d * pw));
            }
        }
        out.sort_unstable();
        out
    }
}

fn factored(n: u64) -> Factored {
    Factored::new(n).unwrap_or_else(|e| panic!("cannot factor {n}: {e}"))
}

/// Moebius function. Panics if `n == 0` or `n > 2^40`; likewise below.
pub fn moebius(n: u64) -> i8 {
    factored(n).moebius()
}

pub fn totient(n: u64) -> u64 {
    factored(n).totient()
}

pub fn squarefree_divisor_count(n: u64) -> u64 {
    factored(n).squarefree_divisor_count()
}

pub fn divisor_count(n: u64) -> u64 {
    factored(n).divisor_count()
}

pub fn divisors(n: u64, squarefree_only: bool) -> Vec<u64> {
    factored(n).divisors(squarefree_only)
}

/// `(log 2 / 2) * n / log n`, a lower bound for `phi(n)` valid for `n >= 3`
/// (natural logarithm).
pub fn totient_lower_bound<F: Float + FloatConst>(n: u64) -> Result<F, ArithError> {
    if n < 3 {
        return Err(ArithError::Domain(format!(
            "totient lower bound needs n >= 3, got {n}"
        )));
    }
    let n = F::from(n).expect("n fits in a float");
    let two = F::one() + F::one();
    Ok(F::LN_2() / two * n / n.ln())
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut q = 3;
    while q * q <= n {
        if n % q == 0 {
            return false;
        }
        q += 2;
    }
    true
}
