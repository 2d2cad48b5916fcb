use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::Context;
use crate::formula::{admissible_points, frobenius_prediction};
use crate::heisenberg::{conjugacy_classes, ClassLabel};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassBin {
    pub label: ClassLabel,
    pub class_size: u64,
    pub observed: usize,
    /// `class_size / ell^3`.
    pub expected_frequency: f64,
    pub expected_count: f64,
    /// `(observed - expected) / sqrt(expected)`.
    pub deviation: f64,
}

/// Predicted Frobenius classes over all admissible `a`, one bin per
/// conjugacy class. Informational only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassHistogram {
    pub p: u64,
    pub ell: u64,
    pub admissible: usize,
    pub bins: Vec<ClassBin>,
}

impl ClassHistogram {
    pub fn total(&self) -> usize {
        self.bins.iter().map(|b| b.observed).sum()
    }
}

pub fn chebotarev_stats(ctx: &Context) -> Result<ClassHistogram> {
    let ell = ctx.ell();
    let points = admissible_points(ctx);
    let mut observed: BTreeMap<ClassLabel, usize> = BTreeMap::new();
    for &a in &points {
        *observed
            .entry(frobenius_prediction(ctx, a)?.class)
            .or_default() += 1;
    }
    let group_order = ell.pow(3) as f64;
    let n = points.len() as f64;
    let bins = conjugacy_classes(ell)?
        .iter()
        .map(|c| {
            let label = c.label();
            let class_size = c.size() as u64;
            let seen = observed.get(&label).copied().unwrap_or(0);
            let expected_frequency = class_size as f64 / group_order;
            let expected_count = expected_frequency * n;
            let deviation = if expected_count > 0.0 {
                (seen as f64 - expected_count) / expected_count.sqrt()
            } else {
                0.0
            };
            ClassBin {
                label,
                class_size,
                observed: seen,
                expected_frequency,
                expected_count,
                deviation,
            }
        })
        .collect();
    Ok(ClassHistogram {
        p: ctx.p(),
        ell,
        admissible: points.len(),
        bins,
    })
}
