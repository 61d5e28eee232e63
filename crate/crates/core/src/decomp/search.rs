use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::{maximal_a_unchecked, sumset, DecompError, Decomposition};
use crate::bitset::Bitset;
use crate::field::PrimeField;

/// Candidates evaluated between budget checks.
const BATCH: usize = 4096;

pub const MAX_K: usize = 4;

/// Limits on a search. The candidate cap is deterministic; the wall-clock
/// limit is checked between batches, so the examined range is always a
/// lexicographic prefix of the candidate space.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    pub max_candidates: Option<u64>,
    pub wall_clock: Option<Duration>,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// `|B|`, between 2 and 4.
    pub k: usize,
    /// Largest element of `B`; defaults to `p - 1`.
    pub span: Option<u32>,
    pub budget: Budget,
}

impl SearchConfig {
    pub fn new(k: usize) -> Self {
        Self {
            k,
            span: None,
            budget: Budget::default(),
        }
    }
}

/// One normalized `B = {0 < b_2 < ... < b_k}` and its maximal partner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchEntry {
    #[serde(rename = "B")]
    pub b: Vec<u32>,
    pub a_max_size: usize,
    /// `A_max + B = P_p`.
    pub covers: bool,
    /// `A_max` itself, recorded only when it covers.
    pub a_max: Option<Vec<u32>>,
    /// A small covering subset of `A_max` (greedy, not necessarily minimum).
    pub witness: Option<Vec<u32>>,
}

impl SearchEntry {
    /// A decomposition with `|A|, |B| >= 2` exists for this `B`.
    pub fn is_decomposition(&self) -> bool {
        self.covers && self.a_max_size >= 2
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub p: u32,
    pub k: usize,
    pub span: u32,
    pub total_candidates: u64,
    pub examined: u64,
    pub complete: bool,
    pub entries: Vec<SearchEntry>,
}

impl SearchReport {
    pub fn hits(&self) -> impl Iterator<Item = &SearchEntry> {
        self.entries.iter().filter(|e| e.is_decomposition())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as u64
}

/// Enumerates every normalized `B` of size `k` with elements `<= span`.
///
/// Returns `BudgetExceeded` carrying the examined prefix when a limit trips.
pub fn search(field: &PrimeField, config: &SearchConfig) -> Result<SearchReport, DecompError> {
    let p = field.p();
    if !(2..=MAX_K).contains(&config.k) {
        return Err(DecompError::BadK(config.k));
    }
    let span = config.span.unwrap_or(p - 1);
    if span == 0 || span >= p {
        return Err(DecompError::BadSpan { span, p });
    }
    let primitive = field.primitive_set();
    let prim = primitive.members();
    let total = binomial(span as u64, config.k as u64 - 1);
    let started = Instant::now();

    let mut report = SearchReport {
        p,
        k: config.k,
        span,
        total_candidates: total,
        examined: 0,
        complete: false,
        entries: Vec::new(),
    };
    let limit = config.budget.max_candidates.unwrap_or(u64::MAX);
    let mut candidates = (1..=span).combinations(config.k - 1);
    loop {
        let room = limit.saturating_sub(report.examined).min(BATCH as u64) as usize;
        let batch: Vec<Vec<u32>> = candidates.by_ref().take(room).collect();
        if batch.is_empty() {
            if report.examined < total {
                return Err(DecompError::BudgetExceeded {
                    partial: Box::new(report),
                });
            }
            break;
        }
        let evaluated: Vec<SearchEntry> = batch
            .into_par_iter()
            .map(|tail| evaluate(field, prim, tail))
            .collect();
        report.examined += evaluated.len() as u64;
        report.entries.extend(evaluated);
        if report.examined >= total {
            break;
        }
        let out_of_time = config
            .budget
            .wall_clock
            .is_some_and(|t| started.elapsed() >= t);
        if report.examined >= limit || out_of_time {
            return Err(DecompError::BudgetExceeded {
                partial: Box::new(report),
            });
        }
    }
    report.complete = true;
    Ok(report)
}

fn evaluate(field: &PrimeField, prim: &Bitset, tail: Vec<u32>) -> SearchEntry {
    let mut b = Vec::with_capacity(tail.len() + 1);
    b.push(0);
    b.extend(tail);
    let a_max = maximal_a_unchecked(prim, b.iter().map(|&x| x as usize));
    let b_set = Bitset::from_elements(prim.universe(), b.iter().map(|&x| x as usize));
    let covers = !a_max.is_empty() && sumset(&a_max, &b_set) == *prim;
    let a_max_size = a_max.count();
    if !covers {
        return SearchEntry {
            b,
            a_max_size,
            covers,
            a_max: None,
            witness: None,
        };
    }
    let witness = greedy_cover(prim, &a_max, &b_set);
    // Re-verify both reported partners through the public path.
    for a in [&a_max, &witness] {
        let d = Decomposition::from_sets(field, a.clone(), b_set.clone()).expect("nonempty sets");
        assert!(
            d.verify(),
            "search produced an invalid decomposition for B = {b:?}"
        );
    }
    SearchEntry {
        b,
        a_max_size,
        covers,
        a_max: Some(a_max.iter().map(|x| x as u32).collect()),
        witness: Some(witness.iter().map(|x| x as u32).collect()),
    }
}

/// Greedy set cover of `target` by translates `a + B`, `a` in `pool`, then a
/// pass dropping redundant picks. Keeps at least two elements when the pool
/// allows it.
fn greedy_cover(target: &Bitset, pool: &Bitset, b: &Bitset) -> Bitset {
    let n = target.universe();
    let translates: Vec<(usize, Bitset)> = pool
        .iter()
        .map(|a| (a, sumset(&Bitset::from_elements(n, [a]), b)))
        .collect();
    let mut uncovered = target.clone();
    let mut chosen: Vec<usize> = Vec::new();
    while !uncovered.is_empty() {
        let (best, gain) = translates
            .iter()
            .enumerate()
            .map(|(i, (_, t))| (i, t.intersection_count(&uncovered)))
            .max_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)))
            .expect("pool is nonempty when it covers");
        assert!(gain > 0, "pool does not cover the target");
        uncovered.difference_with(&translates[best].1);
        chosen.push(best);
    }
    // Drop any pick whose translate is covered by the others, latest first.
    let mut i = chosen.len();
    while i > 0 && chosen.len() > 1 {
        i -= 1;
        let mut rest = Bitset::new(n);
        for (j, &c) in chosen.iter().enumerate() {
            if j != i {
                rest.union_with(&translates[c].1);
            }
        }
        if target.is_subset(&rest) {
            chosen.remove(i);
        }
    }
    let mut out = Bitset::from_elements(n, chosen.iter().map(|&c| translates[c].0));
    if out.count() < 2 {
        if let Some(extra) = pool.iter().find(|&a| !out.contains(a)) {
            out.insert(extra);
        }
    }
    out
}
