use num_complex::Complex;

use super::{CharacterError, CharacterSpec, PolynomialOverFp, RootSum};

/// Outcome of checking `|sum_x psi(a f(x))| <= (r - 1) sqrt p` on one instance.
#[derive(Clone, Debug, PartialEq)]
pub struct WeilCheck {
    pub sum: Complex<f64>,
    pub exact: RootSum,
    /// Distinct roots of `f` in the algebraic closure.
    pub distinct_roots: usize,
    pub bound: f64,
    pub ok: bool,
}

/// Evaluates `sum_x psi(a f(x))` exactly and compares it with the Weil bound.
///
/// `psi` must be nonprincipal of order `m`, `f` monic and not an `m`-th power
/// of a polynomial, and `a` nonzero.
pub fn weil_check(
    psi: &CharacterSpec<'_>,
    f: &PolynomialOverFp,
    a: u32,
) -> Result<WeilCheck, CharacterError> {
    let field = psi.field();
    let p = field.p();
    assert_eq!(f.modulus(), p, "polynomial over a different field");
    if psi.is_principal() {
        return Err(CharacterError::Principal);
    }
    if a % p == 0 {
        return Err(CharacterError::ZeroScale);
    }
    if !f.is_monic() {
        return Err(CharacterError::NotMonic);
    }
    let m = psi.order();
    if f.perfect_power_root(m).is_some() {
        return Err(CharacterError::IsPerfectPower(m));
    }

    let mut exact = RootSum::zero(m);
    for x in 0..p {
        if let Some(e) = psi.root_exponent(field.mul(a, f.evaluate(x))) {
            exact.add_term(e, 1);
        }
    }
    let sum = exact.to_complex::<f64>();
    let distinct_roots = f.distinct_root_count();
    let bound = (distinct_roots as f64 - 1.0) * (p as f64).sqrt();
    let ok = sum.norm() <= bound + field.eps_num();
    Ok(WeilCheck {
        sum,
        exact,
        distinct_roots,
        bound,
        ok,
    })
}
