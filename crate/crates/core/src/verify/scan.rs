use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::mix64;
use crate::field::Context;
use crate::formula::{admissible_points, frobenius_prediction};
use crate::oracle::{expected_k_count, split_k, split_r};

/// One row of a scan; also the flat CSV/JSON schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub p: u64,
    pub ell: u64,
    pub a: u64,
    pub e_alpha: Option<u64>,
    pub e_beta: Option<u64>,
    pub a_ell: Option<u64>,
    pub predicted: Option<u64>,
    #[serde(rename = "oracle_K")]
    pub oracle_k: Option<u64>,
    #[serde(rename = "oracle_R")]
    pub oracle_r: Option<u64>,
    pub agree: bool,
    /// Run seed; the oracle uses [`task_seed`] of it and `(p, ell, a)`.
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    /// Predicted and oracle counts differ.
    Mismatch,
    /// Oracle count outside `{ell^3, ell^2}` (odd `ell`) or equal to 1 (`ell = 2`).
    Bound,
    /// K-prime count differs from `ell^2 / ord` of the symbol pair.
    KCount,
    /// Residue degrees at level R are not all equal.
    Degrees,
    /// The prediction or the oracle returned an error.
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanFailure {
    pub a: u64,
    pub kind: FailureKind,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub records: usize,
    pub agreements: usize,
    pub failures: usize,
    /// Oracle R-count -> number of `a` attaining it.
    pub counts: BTreeMap<u64, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanResult {
    pub p: u64,
    pub ell: u64,
    pub seed: u64,
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
    pub failures: Vec<ScanFailure>,
}

impl ScanResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Serial,
    /// On the current rayon pool.
    Parallel,
}

/// Per-task seed, a function of the run seed and `(p, ell, a)` only.
pub fn task_seed(seed: u64, p: u64, ell: u64, a: u64) -> u64 {
    mix64(mix64(mix64(seed ^ p) ^ ell) ^ a)
}

/// Prediction, oracle and structural checks at a single point.
pub fn scan_point(ctx: &Context, a: u64, seed: u64) -> (ScanRecord, Vec<ScanFailure>) {
    let (p, ell) = (ctx.p(), ctx.ell());
    let task = task_seed(seed, p, ell, a);
    let mut failures = Vec::new();
    let mut fail = |kind, detail: String| failures.push(ScanFailure { a, kind, detail });

    let pred = frobenius_prediction(ctx, a)
        .map_err(|e| fail(FailureKind::Error, format!("prediction: {e}")))
        .ok();
    let k = split_k(ctx, a, task)
        .map_err(|e| fail(FailureKind::Error, format!("split_K: {e}")))
        .ok();
    let r = split_r(ctx, a, task)
        .map_err(|e| fail(FailureKind::Error, format!("split_R: {e}")))
        .ok();

    if let Some(k) = &k {
        match expected_k_count(ctx, a) {
            Ok(want) if want == k.prime_count => {}
            Ok(want) => fail(
                FailureKind::KCount,
                format!("{} K-primes, symbols give {want}", k.prime_count),
            ),
            Err(e) => fail(FailureKind::Error, format!("K-count: {e}")),
        }
    }
    if let Some(r) = &r {
        let n = r.prime_count;
        let in_bounds = if ell == 2 {
            n > 1
        } else {
            n == ell.pow(3) || n == ell.pow(2)
        };
        if !in_bounds {
            fail(FailureKind::Bound, format!("{n} R-primes"));
        }
        if r.residue_degrees.windows(2).any(|w| w[0] != w[1]) {
            fail(
                FailureKind::Degrees,
                format!("degrees {:?}", r.residue_degrees),
            );
        }
    }
    let agree = match (&pred, &r) {
        (Some(pred), Some(r)) => {
            let agree = pred.predicted_count == r.prime_count;
            if !agree {
                fail(
                    FailureKind::Mismatch,
                    format!(
                        "class {} predicts {}, oracle finds {}",
                        pred.class, pred.predicted_count, r.prime_count
                    ),
                );
            }
            agree
        }
        _ => false,
    };
    let record = ScanRecord {
        p,
        ell,
        a,
        e_alpha: pred.as_ref().map(|x| x.e_alpha),
        e_beta: pred.as_ref().map(|x| x.e_beta),
        a_ell: pred.as_ref().and_then(|x| x.a_value),
        predicted: pred.as_ref().map(|x| x.predicted_count),
        oracle_k: k.map(|x| x.prime_count),
        oracle_r: r.map(|x| x.prime_count),
        agree,
        seed,
    };
    (record, failures)
}

/// Compare prediction and oracle at every admissible `a`, in parallel.
/// Mismatches and violated bounds are collected as data.
pub fn verify_theorems_scan(ctx: &Context, seed: u64) -> ScanResult {
    verify_theorems_scan_with(ctx, seed, Exec::Parallel)
}

pub fn verify_theorems_scan_with(ctx: &Context, seed: u64, exec: Exec) -> ScanResult {
    let points = admissible_points(ctx);
    let mut rows: Vec<(ScanRecord, Vec<ScanFailure>)> = match exec {
        Exec::Serial => points.iter().map(|&a| scan_point(ctx, a, seed)).collect(),
        Exec::Parallel => points
            .par_iter()
            .map(|&a| scan_point(ctx, a, seed))
            .collect(),
    };
    rows.sort_by_key(|(r, _)| r.a);

    let mut summary = ScanSummary::default();
    let mut records = Vec::with_capacity(rows.len());
    let mut failures = Vec::new();
    for (record, fs) in rows {
        summary.records += 1;
        summary.agreements += record.agree as usize;
        if let Some(n) = record.oracle_r {
            *summary.counts.entry(n).or_default() += 1;
        }
        records.push(record);
        failures.extend(fs);
    }
    summary.failures = failures.len();
    ScanResult {
        p: ctx.p(),
        ell: ctx.ell(),
        seed,
        records,
        summary,
        failures,
    }
}
