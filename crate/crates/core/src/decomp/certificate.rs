use serde::Serialize;

use super::bounds::{bound_report, BoundInputs, BoundReport, Theorem, Verdict};
use super::{DecompError, Decomposition};
use crate::bitset::Bitset;
use crate::correlation::FpFunction;
use crate::field::PrimeField;

/// `H(x) = P(x) (chi_2(x + b1) + 1) prod_{b in B, b != 0} (chi_2(x - b) + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCertificate {
    pub b1: u32,
    pub values: Vec<i64>,
    pub max_abs: i64,
    pub all_zero: bool,
}

/// Evaluates `H` for every `x` without checking that `(A, B)` decomposes.
/// `H` depends only on `B` and the designated `b1`.
pub fn h_values(field: &PrimeField, b: &Bitset, b1: u32) -> HCertificate {
    let nonzero: Vec<u32> = b.iter().filter(|&x| x != 0).map(|x| x as u32).collect();
    let values: Vec<i64> = (0..field.p())
        .map(|x| {
            if !field.is_primitive(x) {
                return 0;
            }
            let first = field.quadratic_character(field.add(x, b1)) as i64 + 1;
            nonzero.iter().fold(first, |acc, &bj| {
                acc * (field.quadratic_character(field.sub(x, bj)) as i64 + 1)
            })
        })
        .collect();
    let max_abs = values.iter().map(|v| v.abs()).max().unwrap_or(0);
    HCertificate {
        b1,
        all_zero: max_abs == 0,
        max_abs,
        values,
    }
}

fn checked_nonzero_b(d: &Decomposition<'_>) -> Result<Vec<u32>, DecompError> {
    if !d.b().contains(0) {
        return Err(DecompError::ZeroNotInB);
    }
    let nonzero: Vec<u32> = d.b_elements().into_iter().filter(|&x| x != 0).collect();
    if nonzero.is_empty() {
        return Err(DecompError::TrivialB);
    }
    if !d.verify() {
        return Err(DecompError::NotADecomposition);
    }
    Ok(nonzero)
}

/// The `H`-certificate with `b1 = min(B \ {0})`. Requires `0 in B` and
/// `A + B = P_p`; use [`h_values`] to inspect non-decompositions.
pub fn h_certificate(d: &Decomposition<'_>) -> Result<HCertificate, DecompError> {
    let nonzero = checked_nonzero_b(d)?;
    Ok(h_values(d.field(), d.b(), nonzero[0]))
}

/// The certificate for every admissible choice of `b1`.
pub fn h_certificate_every_b1(d: &Decomposition<'_>) -> Result<Vec<HCertificate>, DecompError> {
    let nonzero = checked_nonzero_b(d)?;
    Ok(nonzero
        .into_iter()
        .map(|b1| h_values(d.field(), d.b(), b1))
        .collect())
}

/// `r(x) = (A o chi_2)(x) + a B(x)` for an equal-size decomposition, with
/// `||r||^2` compared against `p a - a^2 - a^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RCertificate {
    pub r_values: Vec<i64>,
    pub norm_sq: i64,
    pub predicted: i64,
    /// `r` vanishes on `B`.
    pub zero_on_b: bool,
    pub ok: bool,
}

pub fn r_certificate(d: &Decomposition<'_>) -> Result<RCertificate, DecompError> {
    let (na, nb) = (d.a().count(), d.b().count());
    if na != nb {
        return Err(DecompError::SizesUnequal { a: na, b: nb });
    }
    if !d.verify() {
        return Err(DecompError::NotADecomposition);
    }
    let field = d.field();
    let a = na as i64;
    let a_fn = FpFunction::<i64>::indicator(field, d.a_elements());
    let chi2 = FpFunction::<i64>::quadratic_character(field);
    let corr = a_fn.circ(&chi2).expect("same field");
    let r_values: Vec<i64> = (0..field.p())
        .map(|x| corr.at(x) + if d.b().contains(x as usize) { a } else { 0 })
        .collect();
    let norm_sq = r_values.iter().map(|v| v * v).sum();
    let predicted = field.p() as i64 * a - a * a - a * a * a;
    let zero_on_b = d.b().iter().all(|x| r_values[x] == 0);
    Ok(RCertificate {
        ok: zero_on_b && norm_sq == predicted,
        r_values,
        norm_sq,
        predicted,
        zero_on_b,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HSummary {
    pub all_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RSummary {
    pub norm_sq: i64,
    pub predicted: i64,
}

/// Serialized certificate; field order is part of the output format.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificateDocument {
    pub p: u32,
    pub generator: u32,
    #[serde(rename = "A")]
    pub a: Vec<u32>,
    #[serde(rename = "B")]
    pub b: Vec<u32>,
    pub normalized: bool,
    pub verified: bool,
    pub h_certificate: Option<HSummary>,
    pub r_certificate: Option<RSummary>,
    pub bounds: Vec<BoundReport>,
}

impl CertificateDocument {
    /// A bare verification record without certificates.
    pub fn verification(d: &Decomposition<'_>) -> Self {
        Self {
            p: d.field().p(),
            generator: d.field().generator(),
            a: d.a_elements(),
            b: d.b_elements(),
            normalized: d.is_normalized(),
            verified: d.verify(),
            h_certificate: None,
            r_certificate: None,
            bounds: Vec::new(),
        }
    }

    /// Every check passed: verified, `H` vanishes, `r` matches, and no bound
    /// report contradicts the existence of this decomposition.
    pub fn consistent(&self) -> bool {
        self.verified
            && self.h_certificate.as_ref().is_none_or(|h| h.all_zero)
            && self
                .r_certificate
                .as_ref()
                .is_none_or(|r| r.norm_sq == r.predicted)
            && !self.bounds.iter().any(|b| {
                matches!(
                    (b.theorem, b.verdict),
                    (Theorem::A, Some(Verdict::ConditionHolds)) | (_, Some(Verdict::BoundViolated))
                )
            })
    }
}

/// Normalizes the pair, verifies it and, when it is a decomposition, attaches
/// the `H`- and `r`-certificates and the bound reports that apply.
pub fn certify(d: &Decomposition<'_>) -> CertificateDocument {
    let d = d.normalize();
    let mut doc = CertificateDocument::verification(&d);
    if !doc.verified {
        return doc;
    }
    let field = d.field();
    let (na, nb) = (d.a().count() as u64, d.b().count() as u64);
    if nb >= 2 {
        let h = h_certificate(&d).expect("verified and normalized");
        doc.h_certificate = Some(HSummary {
            all_zero: h.all_zero,
        });
        let k_report = bound_report(
            Theorem::A,
            field,
            &BoundInputs {
                k: Some(nb as u32),
                ..Default::default()
            },
        );
        doc.bounds.push(k_report.expect("k >= 2"));
    }
    if na == nb {
        let r = r_certificate(&d).expect("equal sizes, verified");
        doc.r_certificate = Some(RSummary {
            norm_sq: r.norm_sq,
            predicted: r.predicted,
        });
        let c = bound_report(
            Theorem::C,
            field,
            &BoundInputs {
                a: Some(na),
                ..Default::default()
            },
        );
        doc.bounds.push(c.expect("a supplied"));
    }
    let s = bound_report(
        Theorem::Shparlinski,
        field,
        &BoundInputs {
            a: Some(na),
            b: Some(nb),
            ..Default::default()
        },
    );
    doc.bounds.push(s.expect("a supplied"));
    doc
}
