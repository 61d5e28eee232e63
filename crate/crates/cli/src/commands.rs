use std::io::{self, Write};
use std::time::Duration;

use num_complex::Complex;
use primdec::characters::{
    report_sum_a, report_sum_b, report_sum_c, CharSumReport, CharacterSpec, SumKind,
};
use primdec::correlation::{check_inner_identity, check_quadruple_bound, check_shkredov_identity};
use primdec::decomp::{
    bound_report, certify, search, BoundInputs, CertificateDocument, DecompError, Decomposition,
    SearchConfig, SearchReport, Theorem,
};
use primdec::field::DEFAULT_TABLE_CAP;
use primdec::samples::{complex_function, int_function, weil_instance};
use primdec::{PrimeField, Sampler};
use serde::Serialize;

use crate::{
    BoundsArgs, CharsumArgs, Command, Format, IdentityArgs, PairArgs, SearchArgs, TheoremArg,
    VerifyArgs, WeilArgs, Which,
};

pub enum Status {
    Ok,
    CheckFailed,
}

type CmdResult = Result<Status, String>;

const TABLE_CAP_VAR: &str = "PRIMDEC_TABLE_CAP";

/// Failing instances echoed in the output, at most.
const MAX_LISTED_FAILURES: usize = 20;

pub fn run(command: Command) -> CmdResult {
    match command {
        Command::Search(a) => run_search(a),
        Command::Verify(a) => run_verify(a),
        Command::Certify(a) => run_certify(a),
        Command::Bounds(a) => run_bounds(a),
        Command::Identity(a) => run_identity(a),
        Command::Weil(a) => run_weil(a),
        Command::Charsum(a) => run_charsum(a),
    }
}

fn field(p: u64) -> Result<PrimeField, String> {
    let cap = match std::env::var(TABLE_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u32>()
            .map_err(|_| format!("{TABLE_CAP_VAR}={v} is not a 32-bit unsigned integer"))?,
        Err(_) => DEFAULT_TABLE_CAP,
    };
    PrimeField::with_cap(p, cap).map_err(|e| format!("--p: {e}"))
}

fn emit_json<T: Serialize>(value: &T) -> Result<(), String> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| e.to_string())?;
    writeln!(out).map_err(|e| e.to_string())
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::CheckFailed
    }
}

fn residues(values: &[u64], p: u32, flag: &str) -> Result<Vec<u32>, String> {
    values
        .iter()
        .map(|&x| {
            if x < p as u64 {
                Ok(x as u32)
            } else {
                Err(format!("{flag}: {x} is not a residue in [0, {p})"))
            }
        })
        .collect()
}

fn pair<'f>(f: &'f PrimeField, args: &PairArgs) -> Result<Decomposition<'f>, String> {
    Decomposition::new(f, &args.a, &args.b).map_err(|e| match e {
        DecompError::OutOfRange { .. } if args.a.iter().any(|&x| x >= f.p() as u64) => {
            format!("--a: {e}")
        }
        DecompError::OutOfRange { .. } => format!("--b: {e}"),
        e => e.to_string(),
    })
}

fn run_search(args: SearchArgs) -> CmdResult {
    let f = field(args.p)?;
    let mut config = SearchConfig::new(args.k);
    config.span = args.span;
    config.budget.wall_clock = args.budget_ms.map(Duration::from_millis);
    let (report, exhausted) = match search(&f, &config) {
        Ok(r) => (r, false),
        Err(DecompError::BudgetExceeded { partial }) => (*partial, true),
        Err(e @ DecompError::BadK(_)) => return Err(format!("--k: {e}")),
        Err(e @ DecompError::BadSpan { .. }) => return Err(format!("--span: {e}")),
        Err(e) => return Err(e.to_string()),
    };
    match args.format {
        Format::Json => emit_json(&report)?,
        Format::Csv => write_csv(&report)?,
        Format::Text => write_text(&report)?,
    }
    if exhausted {
        return Err(format!(
            "budget exhausted after {} of {} candidates; output is partial",
            report.examined, report.total_candidates
        ));
    }
    Ok(Status::Ok)
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn write_csv(report: &SearchReport) -> Result<(), String> {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(["p", "B", "a_max_size", "covers"])
        .map_err(|e| e.to_string())?;
    for e in &report.entries {
        w.write_record([
            report.p.to_string(),
            join(&e.b),
            e.a_max_size.to_string(),
            e.covers.to_string(),
        ])
        .map_err(|e| e.to_string())?;
    }
    w.flush().map_err(|e| e.to_string())
}

fn write_text(report: &SearchReport) -> Result<(), String> {
    let mut out = io::stdout().lock();
    let hits: Vec<_> = report.hits().collect();
    let mut text = format!(
        "p = {}, k = {}, span = {}: {} of {} candidates examined{}, {} with a decomposition\n",
        report.p,
        report.k,
        report.span,
        report.examined,
        report.total_candidates,
        if report.complete { "" } else { " (partial)" },
        hits.len()
    );
    for e in hits {
        text.push_str(&format!(
            "B = {{{}}}  |A_max| = {}  A = {{{}}}\n",
            join(&e.b),
            e.a_max_size,
            join(e.witness.as_deref().unwrap_or_default())
        ));
    }
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

fn run_verify(args: VerifyArgs) -> CmdResult {
    let f = field(args.pair.p)?;
    let mut d = pair(&f, &args.pair)?;
    if args.normalize {
        d = d.normalize();
    }
    let doc = CertificateDocument::verification(&d);
    emit_json(&doc)?;
    Ok(status(doc.verified))
}

fn run_certify(args: PairArgs) -> CmdResult {
    let f = field(args.p)?;
    let d = pair(&f, &args)?;
    let doc = certify(&d);
    emit_json(&doc)?;
    Ok(status(doc.consistent()))
}

fn run_bounds(args: BoundsArgs) -> CmdResult {
    let f = field(args.p)?;
    let theorem = match args.theorem {
        TheoremArg::A => Theorem::A,
        TheoremArg::B => Theorem::B,
        TheoremArg::C => Theorem::C,
        TheoremArg::Shparlinski => Theorem::Shparlinski,
    };
    let inputs = BoundInputs {
        k: args.k,
        epsilon: args.epsilon,
        a: args.a,
        b: None,
    };
    let report = bound_report(theorem, &f, &inputs).map_err(|e| e.to_string())?;
    emit_json(&report)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct IdentitySummary {
    which: &'static str,
    p: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    trials: u64,
    seed: u64,
    passed: u64,
    failed: u64,
    /// Largest `|lhs - rhs| / (1 + |lhs|)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    max_relative_error: Option<f64>,
    /// Largest `|sum| / (1 + 2 sqrt p)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    max_bound_ratio: Option<f64>,
}

impl IdentitySummary {
    fn tally(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }
}

fn run_identity(args: IdentityArgs) -> CmdResult {
    let f = field(args.p)?;
    if args.k.is_some() && args.which != Which::Shkredov {
        return Err("--k only applies to --which shkredov".into());
    }
    let mut rng = Sampler::new(args.seed);
    let mut summary = IdentitySummary {
        which: "",
        p: f.p(),
        k: None,
        trials: args.trials,
        seed: args.seed,
        passed: 0,
        failed: 0,
        max_relative_error: None,
        max_bound_ratio: None,
    };
    let mut worst = 0.0f64;
    match args.which {
        Which::Shkredov => {
            let k = args.k.unwrap_or(2);
            if !(1..=primdec::correlation::DEFAULT_MAX_K).contains(&k) {
                return Err(format!(
                    "--k: {k} is outside 1..={}",
                    primdec::correlation::DEFAULT_MAX_K
                ));
            }
            summary.which = "shkredov";
            summary.k = Some(k);
            for _ in 0..args.trials {
                let a = int_function(&f, &mut rng, -3, 3);
                let b = int_function(&f, &mut rng, -3, 3);
                let c = check_shkredov_identity(&a, &b, k).map_err(|e| e.to_string())?;
                worst = worst.max(c.relative_error());
                summary.tally(c.ok);
            }
            summary.max_relative_error = Some(worst);
        }
        Which::Inner => {
            summary.which = "inner";
            for _ in 0..args.trials {
                let a = complex_function(&f, &mut rng);
                let b = complex_function(&f, &mut rng);
                let c = check_inner_identity(&f, &a, &b).map_err(|e| e.to_string())?;
                worst = worst.max(c.relative_error());
                summary.tally(c.ok);
            }
            summary.max_relative_error = Some(worst);
        }
        Which::Quadruple => {
            if f.p() < 5 {
                return Err("--p: four distinct shifts need p >= 5".into());
            }
            summary.which = "quadruple";
            for _ in 0..args.trials {
                let shifts = distinct_shifts(&mut rng, f.p());
                let q = check_quadruple_bound(&f, shifts).map_err(|e| e.to_string())?;
                worst = worst.max(q.sum.unsigned_abs() as f64 / q.bound);
                summary.tally(q.ok);
            }
            summary.max_bound_ratio = Some(worst);
        }
    }
    emit_json(&summary)?;
    Ok(status(summary.failed == 0))
}

/// Four distinct residues, drawn in order and redrawn on collision.
fn distinct_shifts(rng: &mut Sampler, p: u32) -> [u32; 4] {
    let mut out = [0u32; 4];
    let mut filled = 0;
    while filled < 4 {
        let x = rng.below(p as u64) as u32;
        if !out[..filled].contains(&x) {
            out[filled] = x;
            filled += 1;
        }
    }
    out
}

#[derive(Serialize)]
struct WeilFailure {
    order: u64,
    exponent: u64,
    a: u32,
    /// Constant term first.
    coefficients: Vec<u32>,
    abs_sum: f64,
    bound: f64,
}

#[derive(Serialize)]
struct WeilSummary {
    p: u32,
    trials: u64,
    seed: u64,
    max_degree: u64,
    passed: u64,
    failed: u64,
    /// Largest `|sum| / ((r - 1) sqrt p)` over instances with `r > 1`.
    max_bound_ratio: f64,
    failures: Vec<WeilFailure>,
}

fn run_weil(args: WeilArgs) -> CmdResult {
    let f = field(args.p)?;
    let mut rng = Sampler::new(args.seed);
    let mut s = WeilSummary {
        p: f.p(),
        trials: args.trials,
        seed: args.seed,
        max_degree: args.max_degree,
        passed: 0,
        failed: 0,
        max_bound_ratio: 0.0,
        failures: Vec::new(),
    };
    for _ in 0..args.trials {
        let inst = weil_instance(&f, &mut rng, args.max_degree as usize);
        let c = inst.check(&f).map_err(|e| e.to_string())?;
        if c.bound > 0.0 {
            s.max_bound_ratio = s.max_bound_ratio.max(c.sum.norm() / c.bound);
        }
        if c.ok {
            s.passed += 1;
        } else {
            s.failed += 1;
            if s.failures.len() < MAX_LISTED_FAILURES {
                s.failures.push(WeilFailure {
                    order: inst.order,
                    exponent: inst.exponent,
                    a: inst.a,
                    coefficients: inst.poly.coefficients().to_vec(),
                    abs_sum: c.sum.norm(),
                    bound: c.bound,
                });
            }
        }
    }
    emit_json(&s)?;
    Ok(status(s.failed == 0))
}

#[derive(Serialize)]
struct CharsumOutput {
    p: u32,
    d: u64,
    r: u64,
    kind: SumKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    b1: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shifts: Option<Vec<u32>>,
    re: f64,
    im: f64,
    abs: f64,
    exact: Option<i64>,
    bound: Option<f64>,
    predicted: Option<i64>,
    in_scope: bool,
    ok: bool,
}

fn run_charsum(args: CharsumArgs) -> CmdResult {
    let f = field(args.p)?;
    let chi = CharacterSpec::new(&f, args.d, args.r).map_err(|e| format!("--d/--r: {e}"))?;
    let b1 = match args.b1 {
        Some(b) if b >= f.p() => {
            return Err(format!("--b1: {b} is not a residue in [0, {})", f.p()))
        }
        b => b,
    };
    let shifts = args
        .shifts
        .as_deref()
        .map(|s| residues(s, f.p(), "--shifts"))
        .transpose()?;
    let report: CharSumReport = if args.sum_a {
        report_sum_a(&chi, b1.expect("clap requires --b1"))
    } else if args.sum_b {
        report_sum_b(&chi, shifts.as_deref().expect("clap requires --shifts"))
            .map_err(|e| format!("--shifts: {e}"))?
    } else {
        report_sum_c(
            &chi,
            b1.expect("clap requires --b1"),
            shifts.as_deref().expect("clap requires --shifts"),
        )
        .map_err(|e| format!("--shifts: {e}"))?
    };
    let value: Complex<f64> = report.value;
    let out = CharsumOutput {
        p: f.p(),
        d: args.d,
        r: args.r,
        kind: report.kind,
        b1: if args.sum_b { None } else { b1 },
        shifts: if args.sum_a { None } else { shifts },
        re: value.re,
        im: value.im,
        abs: value.norm(),
        exact: report.exact,
        bound: report.bound,
        predicted: report.predicted,
        in_scope: report.in_scope,
        ok: report.ok,
    };
    emit_json(&out)?;
    Ok(status(out.ok))
}
