//! Checks binding the prediction side to the oracle and to the structural
//! lemmas: exhaustive scans, the block determinant identity, the discriminant
//! of the explicit integral basis, and Frobenius class statistics.

mod block_det;
mod chebotarev;
mod discriminant;
mod scan;

pub use block_det::{block_matrix, check_block_det, BlockDetCounterexample, BlockDetOutcome};
pub use chebotarev::{chebotarev_stats, ClassBin, ClassHistogram};
pub use discriminant::{
    discriminant_det_squared, discriminant_ratio_check, discriminant_ratio_check_any_ell,
    DiscriminantCheck, RootChoice,
};
pub use scan::{
    scan_point, task_seed, verify_theorems_scan, verify_theorems_scan_with, Exec, FailureKind,
    ScanFailure, ScanRecord, ScanResult, ScanSummary,
};
