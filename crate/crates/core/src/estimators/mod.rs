//! Baseline least-squares matched filter and the Khatri-Rao factorization
//! (KRF) estimator, with reconstruction and error metrics.

mod krf;
mod ls;
mod metrics;

pub use krf::{krf_decouple, KrfEstimate};
pub use ls::{ls_matched_filter, LsEstimate};
pub use metrics::{
    evaluate, nmse, reconstruct_combined, resolve_ambiguity, AlignedFactors, EstimateReport,
};
