use serde::Serialize;

use super::DecompError;
use crate::arith::squarefree_divisor_count;
use crate::field::PrimeField;

/// Which statement a report evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// No decomposition with `|B| = k` once `phi/(W sqrt p) > k 2^(k-1)`.
    A,
    /// The quadratic dichotomy on `|A|` for `|B| >= 3`, given `epsilon`.
    B,
    /// Equal-size decompositions force `sqrt(phi) <= a < sqrt(p)`.
    C,
    /// Shparlinski-type size ratios; reported without a verdict.
    Shparlinski,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// The hypothesis of a nonexistence statement is met at this `p`.
    ConditionHolds,
    ConditionFails,
    /// The supplied size is incompatible with the bound.
    BoundViolated,
    BoundSatisfied,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct BoundInputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    /// `|A|`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u64>,
    /// `|B|`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Quantity {
    pub name: &'static str,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub theorem: Theorem,
    pub p: u32,
    pub inputs: BoundInputs,
    pub quantities: Vec<Quantity>,
    pub verdict: Option<Verdict>,
    pub note: Option<String>,
}

impl BoundReport {
    pub fn quantity(&self, name: &str) -> Option<f64> {
        self.quantities
            .iter()
            .find(|q| q.name == name)
            .map(|q| q.value)
    }
}

fn q(name: &'static str, value: f64) -> Quantity {
    Quantity { name, value }
}

/// Evaluates one statement's numeric side at the field's `p`.
pub fn bound_report(
    theorem: Theorem,
    field: &PrimeField,
    inputs: &BoundInputs,
) -> Result<BoundReport, DecompError> {
    let p = field.p();
    let pf = p as f64;
    let sqrt_p = pf.sqrt();
    let order = field.order();
    let phi = order.totient();
    let phi_f = phi as f64;
    let mut report = BoundReport {
        theorem,
        p,
        inputs: inputs.clone(),
        quantities: Vec::new(),
        verdict: None,
        note: None,
    };
    match theorem {
        Theorem::A => {
            let k = inputs.k.ok_or(DecompError::MissingInput("k"))?;
            if k < 2 {
                return Err(DecompError::BadInput("k must be at least 2"));
            }
            let w = order.squarefree_divisor_count() as f64;
            let t = phi_f / (w * sqrt_p);
            let threshold = k as f64 * 2f64.powi(k as i32 - 1);
            report.quantities = vec![
                q("phi", phi_f),
                q("squarefree_divisors", w),
                q("sqrt_p", sqrt_p),
                q("t", t),
                q("threshold", threshold),
            ];
            report.verdict = Some(if t > threshold {
                Verdict::ConditionHolds
            } else {
                Verdict::ConditionFails
            });
        }
        Theorem::B => {
            let eps = inputs.epsilon.ok_or(DecompError::MissingInput("epsilon"))?;
            if !(eps > 0.0 && eps < 0.5) {
                return Err(DecompError::BadEpsilon(eps));
            }
            let delta = phi_f * phi_f - 12.0 * pf * (1.0 + 2.0 * sqrt_p);
            report.quantities = vec![
                q("phi", phi_f),
                q("sqrt_p", sqrt_p),
                q("delta", delta),
                q("lower", pf.powf(0.5 - eps)),
                q("upper", 3.0 * sqrt_p),
            ];
            if delta >= 0.0 {
                let root = delta.sqrt();
                report
                    .quantities
                    .push(q("root_low", (phi_f - root) / (2.0 * pf)));
                report
                    .quantities
                    .push(q("root_high", (phi_f + root) / (2.0 * pf)));
                report.note = Some("asymptotic statement; quantities only".into());
            } else {
                report.note = Some("delta < 0: the dichotomy is vacuous at this p".into());
            }
        }
        Theorem::C => {
            let a = inputs.a.ok_or(DecompError::MissingInput("a"))?;
            let a_sq = a as u128 * a as u128;
            report.quantities = vec![
                q("sqrt_phi", phi_f.sqrt()),
                q("a", a as f64),
                q("sqrt_p", sqrt_p),
                q("norm_upper", ((1.0 + 4.0 * pf).sqrt() - 1.0) / 2.0),
            ];
            let inside = phi as u128 <= a_sq && a_sq < p as u128;
            report.verdict = Some(if inside {
                Verdict::BoundSatisfied
            } else {
                Verdict::BoundViolated
            });
        }
        Theorem::Shparlinski => {
            let a = inputs.a.ok_or(DecompError::MissingInput("a"))?;
            let af = a as f64;
            report.quantities = vec![
                q("a_sqrt_p_over_phi", af * sqrt_p / phi_f),
                q("a_over_sqrt_p", af / sqrt_p),
            ];
            if let Some(b) = inputs.b {
                let bf = b as f64;
                report
                    .quantities
                    .push(q("b_sqrt_p_over_phi", bf * sqrt_p / phi_f));
                report.quantities.push(q("b_over_sqrt_p", bf / sqrt_p));
            }
            report.note = Some("ratios are implied up to constants; no verdict".into());
        }
    }
    Ok(report)
}

/// `W(p - 1)`, the number of squarefree divisors of the group order.
pub fn squarefree_divisors_of_order(field: &PrimeField) -> u64 {
    squarefree_divisor_count(field.p() as u64 - 1)
}
