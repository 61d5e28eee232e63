//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex;
use primdec::arith::is_prime;
use primdec::correlation::{check_inner_identity, check_quadruple_bound, check_shkredov_identity};
use primdec::decomp::{
    bound_report, h_certificate, r_certificate, search, BoundInputs, Decomposition, SearchConfig,
    Theorem, Verdict,
};
use primdec::samples::{complex_function, int_function, weil_instance};
use primdec::{PrimeField, Sampler};

const BIN: &str = env!("CARGO_BIN_EXE_primdec");

type Outcome = Result<String, String>;

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).expect("odd prime")
}

fn odd_primes(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo.max(3)..=hi).filter(|&p| is_prime(p))
}

fn run_bin(args: &[&str]) -> (Option<i32>, Vec<u8>, Duration) {
    let start = Instant::now();
    let out = Command::new(BIN)
        .args(args)
        .output()
        .expect("spawn primdec");
    (out.status.code(), out.stdout, start.elapsed())
}

fn printed_examples() -> Outcome {
    let cases: [&[&str]; 2] = [
        &["verify", "--p", "13", "--a", "0,5", "--b", "2,6"],
        &["verify", "--p", "19", "--a", "0,11,12", "--b", "2,3,10"],
    ];
    let mut detail = Vec::new();
    for args in cases {
        let (code, stdout, elapsed) = run_bin(args);
        let doc: serde_json::Value =
            serde_json::from_slice(&stdout).map_err(|e| format!("{args:?}: bad JSON: {e}"))?;
        if code != Some(0) || doc["verified"] != serde_json::Value::Bool(true) {
            return Err(format!(
                "{args:?}: exit {code:?}, verified = {}",
                doc["verified"]
            ));
        }
        if elapsed >= Duration::from_secs(1) {
            return Err(format!("{args:?} took {elapsed:?}"));
        }
        detail.push(format!("p={} in {:.0?}", doc["p"], elapsed));
    }
    Ok(detail.join(", "))
}

fn characteristic_function() -> Outcome {
    let mut points = 0u64;
    let mut worst = 0.0f64;
    for p in odd_primes(3, 1000) {
        let f = field(p);
        for x in 1..p as u32 {
            let v: Complex<f64> = f.characteristic_sum(x);
            let target = if f.is_primitive(x) { 1.0 } else { 0.0 };
            let err = (v - Complex::new(target, 0.0)).norm();
            if err >= f.eps_num() {
                return Err(format!(
                    "p={p}, x={x}: value {v}, error {err:e} >= {:e}",
                    f.eps_num()
                ));
            }
            worst = worst.max(err);
            points += 1;
        }
    }
    Ok(format!("{points} points, max error {worst:.1e}"))
}

fn weil_suite() -> Outcome {
    let fields: Vec<PrimeField> = odd_primes(3, 200).map(field).collect();
    let mut rng = Sampler::new(20_240_601);
    let n = 2000;
    for i in 0..n {
        let f = rng.pick(&fields);
        let inst = weil_instance(f, &mut rng, 4);
        let c = inst.check(f).map_err(|e| format!("instance {i}: {e}"))?;
        if c.sum.norm() > c.bound + f.eps_num() {
            return Err(format!(
                "instance {i}, p={}: {inst:?}, |sum| {} > {}",
                f.p(),
                c.sum.norm(),
                c.bound
            ));
        }
    }
    Ok(format!("{n} instances, p <= 200, degree <= 4"))
}

fn shkredov_identity() -> Outcome {
    let mut rng = Sampler::new(4_001);
    let mut pairs = 0;
    for p in [5u64, 7, 11, 13] {
        let f = field(p);
        for k in 1..=3 {
            for trial in 0..200 {
                let a = int_function(&f, &mut rng, -3, 3);
                let b = int_function(&f, &mut rng, -3, 3);
                let c = check_shkredov_identity(&a, &b, k).map_err(|e| e.to_string())?;
                if c.lhs != c.rhs {
                    return Err(format!(
                        "p={p}, k={k}, trial {trial}: {} != {}",
                        c.lhs, c.rhs
                    ));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} integer pairs, exact"))
}

fn inner_identity() -> Outcome {
    let mut rng = Sampler::new(5_001);
    let mut worst = 0.0f64;
    for p in [5u64, 7, 11, 13, 17, 19] {
        let f = field(p);
        for trial in 0..200 {
            let a = complex_function(&f, &mut rng);
            let b = complex_function(&f, &mut rng);
            let c = check_inner_identity(&f, &a, &b).map_err(|e| e.to_string())?;
            let err = c.relative_error();
            if err > 1e-9 {
                return Err(format!("p={p}, trial {trial}: relative error {err:e}"));
            }
            worst = worst.max(err);
        }
    }
    Ok(format!(
        "1200 complex pairs, max relative error {worst:.1e}"
    ))
}

fn quadruple_bound() -> Outcome {
    let mut count = 0u64;
    for p in odd_primes(5, 61) {
        let f = field(p);
        let n = p as u32;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let q =
                            check_quadruple_bound(&f, [a, b, c, d]).map_err(|e| e.to_string())?;
                        if !q.ok {
                            return Err(format!(
                                "p={p}, {:?}: |{}| > {}",
                                [a, b, c, d],
                                q.sum,
                                q.bound
                            ));
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} quadruples, p <= 61"))
}

fn rotate(mask: u32, s: u32, p: u32) -> u32 {
    let full = (1u32 << p) - 1;
    if s == 0 {
        mask
    } else {
        ((mask << s) | (mask >> (p - s))) & full
    }
}

fn primitive_mask(p: u32) -> u32 {
    (1..p)
        .filter(|&x| {
            let (mut y, mut ord) = (x, 1);
            while y != 1 {
                y = y * x % p;
                ord += 1;
            }
            ord == p - 1
        })
        .fold(0, |m, x| m | 1 << x)
}

fn normalized_bs(p: u32, k: usize) -> Vec<Vec<u32>> {
    let mut acc: Vec<Vec<u32>> = vec![vec![0]];
    for _ in 1..k {
        acc = acc
            .into_iter()
            .flat_map(|b| {
                let start = *b.last().unwrap() + 1;
                (start..p).map(move |x| {
                    let mut b = b.clone();
                    b.push(x);
                    b
                })
            })
            .collect();
    }
    acc
}

/// All `(A, B)` with normalized `B` of size `k`, `|A| >= 2`, `A + B = P_p`,
/// by trying every subset `A`.
fn brute_force(p: u32, k: usize) -> Vec<(Vec<u32>, Vec<u32>)> {
    let prim = primitive_mask(p);
    let mut out = Vec::new();
    for b in normalized_bs(p, k) {
        for a in 0u32..1 << p {
            if a.count_ones() >= 2 && b.iter().fold(0, |acc, &s| acc | rotate(a, s, p)) == prim {
                out.push(((0..p).filter(|i| a >> i & 1 == 1).collect(), b.clone()));
            }
        }
    }
    out
}

const SEARCHED: [(u32, usize); 8] = [
    (7, 2),
    (7, 3),
    (11, 2),
    (11, 3),
    (13, 2),
    (13, 3),
    (19, 2),
    (19, 3),
];

fn search_vs_oracle(oracle: &[(u32, usize, Vec<(Vec<u32>, Vec<u32>)>)]) -> Outcome {
    let mut hits = 0;
    for (p, k, pairs) in oracle {
        let want: BTreeSet<Vec<u32>> = pairs.iter().map(|(_, b)| b.clone()).collect();
        let report =
            search(&field(*p as u64), &SearchConfig::new(*k)).map_err(|e| e.to_string())?;
        let got: BTreeSet<Vec<u32>> = report.hits().map(|e| e.b.clone()).collect();
        if !report.complete || got != want {
            return Err(format!("p={p}, k={k}: search {got:?} vs oracle {want:?}"));
        }
        hits += got.len();
    }
    let has = |p: u32, b: &[u32]| {
        oracle
            .iter()
            .any(|(q, _, v)| *q == p && v.iter().any(|(_, x)| x == b))
    };
    if !has(13, &[0, 4]) || !has(19, &[0, 1, 8]) {
        return Err("printed examples missing".into());
    }
    Ok(format!(
        "{hits} decomposable B across {} (p, k) pairs",
        oracle.len()
    ))
}

fn certificates(oracle: &[(u32, usize, Vec<(Vec<u32>, Vec<u32>)>)]) -> Outcome {
    let mut checked = 0;
    let mut equal = 0;
    let mut p13 = None;
    for (p, _, pairs) in oracle {
        let f = field(*p as u64);
        for (a, b) in pairs {
            let a64: Vec<u64> = a.iter().map(|&x| x as u64).collect();
            let b64: Vec<u64> = b.iter().map(|&x| x as u64).collect();
            let d = Decomposition::new(&f, &a64, &b64).map_err(|e| e.to_string())?;
            let h = h_certificate(&d).map_err(|e| format!("p={p}, A={a:?}, B={b:?}: {e}"))?;
            if !h.all_zero {
                return Err(format!("p={p}, A={a:?}, B={b:?}: H not identically zero"));
            }
            checked += 1;
            if a.len() == b.len() {
                let r = r_certificate(&d).map_err(|e| e.to_string())?;
                let n = a.len() as i64;
                let predicted = *p as i64 * n - n * n - n * n * n;
                if r.norm_sq != predicted || r.predicted != predicted {
                    return Err(format!(
                        "p={p}, A={a:?}, B={b:?}: ||r||^2 = {} != {predicted}",
                        r.norm_sq
                    ));
                }
                if *p == 13 && *b == [0, 4] && *a == [2, 7] {
                    p13 = Some(r.norm_sq);
                }
                equal += 1;
            }
        }
    }
    match p13 {
        Some(14) => Ok(format!(
            "{checked} decompositions, {equal} equal-size; p=13 gives 14"
        )),
        other => Err(format!("p=13 instance gave {other:?}")),
    }
}

fn theorem_consistency(oracle: &[(u32, usize, Vec<(Vec<u32>, Vec<u32>)>)]) -> Outcome {
    let mut equal = 0;
    for (p, _, pairs) in oracle {
        let f = field(*p as u64);
        let phi = f.order().totient();
        for (a, _) in pairs.iter().filter(|(a, b)| a.len() == b.len()) {
            let n = a.len() as u64;
            let r = bound_report(
                Theorem::C,
                &f,
                &BoundInputs {
                    a: Some(n),
                    ..Default::default()
                },
            )
            .map_err(|e| e.to_string())?;
            if !(phi <= n * n && n * n < *p as u64) || r.verdict != Some(Verdict::BoundSatisfied) {
                return Err(format!("p={p}, a={n}: outside [sqrt(phi), sqrt(p))"));
            }
            equal += 1;
        }
    }
    // Whenever the size condition for k = 2 holds, the search finds nothing.
    let mut holds = Vec::new();
    for p in odd_primes(5, 2500) {
        let f = field(p);
        let inputs = BoundInputs {
            k: Some(2),
            ..Default::default()
        };
        let rep = bound_report(Theorem::A, &f, &inputs).map_err(|e| e.to_string())?;
        if rep.verdict == Some(Verdict::ConditionHolds) {
            let hits = search(&f, &SearchConfig::new(2))
                .map_err(|e| e.to_string())?
                .hits()
                .count();
            if hits != 0 {
                return Err(format!(
                    "p={p}: condition holds but search found {hits} hits"
                ));
            }
            holds.push(p);
        }
    }
    if !holds.contains(&1187) {
        return Err("p=1187 did not meet the k=2 condition".into());
    }
    // Delta < 0 must be reported without a verdict.
    let b = bound_report(
        Theorem::B,
        &field(13),
        &BoundInputs {
            epsilon: Some(0.1),
            ..Default::default()
        },
    )
    .map_err(|e| e.to_string())?;
    if b.verdict.is_some() || b.quantity("delta").is_none_or(|d| d >= 0.0) {
        return Err(format!("p=13 dichotomy report not vacuous: {b:?}"));
    }
    Ok(format!(
        "{equal} equal-size decompositions in range; k=2 condition met at {} primes <= 2500, all without hits",
        holds.len()
    ))
}

fn determinism() -> Outcome {
    let runs: [&[&str]; 12] = [
        &["verify", "--p", "13", "--a", "0,5", "--b", "2,6"],
        &[
            "verify",
            "--p",
            "19",
            "--a",
            "0,11,12",
            "--b",
            "2,3,10",
            "--normalize",
        ],
        &["certify", "--p", "13", "--a", "0,5", "--b", "2,6"],
        &["search", "--p", "31", "--k", "3", "--format", "json"],
        &["search", "--p", "31", "--k", "2", "--format", "csv"],
        &["bounds", "--p", "1187", "--theorem", "A", "--k", "2"],
        &["bounds", "--p", "13", "--theorem", "B", "--epsilon", "0.1"],
        &[
            "identity", "--which", "shkredov", "--p", "11", "--k", "2", "--trials", "50", "--seed",
            "3",
        ],
        &[
            "identity", "--which", "inner", "--p", "13", "--trials", "200", "--seed", "7",
        ],
        &[
            "identity",
            "--which",
            "quadruple",
            "--p",
            "31",
            "--trials",
            "100",
            "--seed",
            "9",
        ],
        &["weil", "--p", "97", "--trials", "200", "--seed", "11"],
        &[
            "charsum", "--p", "13", "--d", "4", "--r", "3", "--sumC", "--b1", "4", "--shifts",
            "1,5",
        ],
    ];
    for args in runs {
        let (c1, o1, _) = run_bin(args);
        let (c2, o2, _) = run_bin(args);
        if c1 != Some(0) || c1 != c2 {
            return Err(format!("{args:?}: exit codes {c1:?}, {c2:?}"));
        }
        if o1 != o2 || o1.is_empty() {
            return Err(format!("{args:?}: outputs differ"));
        }
    }
    Ok(format!(
        "{} subcommand invocations byte-identical",
        runs.len()
    ))
}

fn main() {
    let oracle: Vec<(u32, usize, Vec<(Vec<u32>, Vec<u32>)>)> = SEARCHED
        .iter()
        .map(|&(p, k)| (p, k, brute_force(p, k)))
        .collect();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("printed examples verify", Box::new(printed_examples)),
        (
            "characteristic function via characters, p <= 1000",
            Box::new(characteristic_function),
        ),
        (
            "Weil bound on random admissible instances",
            Box::new(weil_suite),
        ),
        (
            "correlation tensor identity, exact",
            Box::new(shkredov_identity),
        ),
        ("inner-product identity", Box::new(inner_identity)),
        (
            "four-shift quadratic character bound",
            Box::new(quadruple_bound),
        ),
        (
            "search matches brute force",
            Box::new(|| search_vs_oracle(&oracle)),
        ),
        ("H and r certificates", Box::new(|| certificates(&oracle))),
        (
            "size bounds consistent with search",
            Box::new(|| theorem_consistency(&oracle)),
        ),
        ("byte-identical output", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
