use alloc::vec::Vec;

use super::{krf_decouple, ls_matched_filter, KrfEstimate, LsEstimate};
use crate::error::{Error, Result};
use crate::matcore::{dot_conj, norm_sqr, CMatrix, C64};
use crate::model::{
    combined_channel, combined_from_factors, ChannelPair, CombinedChannel, SystemConfig,
    TrainingDesign,
};

/// Rebuilds the combined channel from KRF factors. Per-group scalar
/// ambiguities cancel in each Kronecker product.
pub fn reconstruct_combined(kr: &KrfEstimate, cfg: &SystemConfig) -> CombinedChannel {
    combined_from_factors(cfg, &kr.h_hat, &kr.g_hat)
}

/// Single-trial normalized squared error `‖C - Ĉ‖²_F / ‖C‖²_F`.
pub fn nmse(truth: &CombinedChannel, estimate: &CombinedChannel) -> Result<f64> {
    if truth.c.len() != estimate.c.len() {
        return Err(Error::DimensionMismatch {
            op: "nmse",
            expected: truth.c_matrix.shape(),
            found: estimate.c_matrix.shape(),
        });
    }
    let reference = truth.c.norm_sqr();
    if reference == 0.0 {
        return Err(Error::ZeroReference);
    }
    let err: f64 = truth
        .c
        .iter()
        .zip(estimate.c.iter())
        .map(|(a, b)| (a - b).norm_sqr())
        .sum();
    Ok(err / reference)
}

/// KRF factors with the per-group scalar fixed against a reference.
#[derive(Debug, Clone, PartialEq)]
pub struct AlignedFactors {
    pub h: CMatrix,
    pub g: CMatrix,
    pub lambdas: Vec<C64>,
}

/// Aligns each group to the truth through the least-squares scalar of the
/// receive factor, `λ_q = g^(q)H ĝ^(q) / ‖g^(q)‖²`, then returns
/// `ĝ^(q)/λ_q` and `ĥ^(q) λ_q`. Diagnostic only; the combined channel does
/// not depend on it.
pub fn resolve_ambiguity(
    truth: &ChannelPair,
    kr: &KrfEstimate,
    cfg: &SystemConfig,
) -> Result<AlignedFactors> {
    for (op, a, b) in [
        ("resolve_ambiguity: h", &truth.h, &kr.h_hat),
        ("resolve_ambiguity: g", &truth.g, &kr.g_hat),
    ] {
        if a.shape() != b.shape() {
            return Err(Error::DimensionMismatch {
                op,
                expected: a.shape(),
                found: b.shape(),
            });
        }
    }
    let mut h = kr.h_hat.clone();
    let mut g = kr.g_hat.clone();
    let mut lambdas = Vec::with_capacity(cfg.q);
    let (h_run, g_run) = (cfg.mt * cfg.nbar, cfg.mr * cfg.nbar);
    for q in 0..cfg.q {
        let g_true = &truth.g.as_slice()[q * g_run..(q + 1) * g_run];
        let h_true = &truth.h.as_slice()[q * h_run..(q + 1) * h_run];
        let energy = norm_sqr(g_true);
        if energy == 0.0 || norm_sqr(h_true) == 0.0 {
            return Err(Error::ZeroGroup(q));
        }
        let g_est = &mut g.as_mut_slice()[q * g_run..(q + 1) * g_run];
        let lambda = dot_conj(g_true, g_est) / energy;
        if lambda.norm_sqr() == 0.0 {
            return Err(Error::UnalignableGroup(q));
        }
        let inv = lambda.inv();
        g_est.iter_mut().for_each(|z| *z *= inv);
        h.as_mut_slice()[q * h_run..(q + 1) * h_run]
            .iter_mut()
            .for_each(|z| *z *= lambda);
        lambdas.push(lambda);
    }
    Ok(AlignedFactors { h, g, lambdas })
}

/// Everything produced for one received training block.
#[derive(Debug, Clone)]
pub struct EstimateReport {
    pub ls: LsEstimate,
    pub krf: KrfEstimate,
    pub krf_combined: CombinedChannel,
    pub nmse_ls: f64,
    pub nmse_krf: f64,
    /// Factor-level diagnostics; `None` when a group cannot be aligned.
    pub aligned: Option<AlignedFactors>,
    /// Per-factor NMSE of `(h, g)` after alignment. Not the reported metric.
    pub factor_nmse: Option<(f64, f64)>,
}

/// Runs both estimators on `y` and scores them against `truth`.
pub fn evaluate(
    cfg: &SystemConfig,
    truth: &ChannelPair,
    td: &TrainingDesign,
    y: &[C64],
) -> Result<EstimateReport> {
    let reference = combined_channel(cfg, truth);
    let ls = ls_matched_filter(y, td, cfg)?;
    let ls_combined = CombinedChannel::from_vector(cfg, ls.c_hat.clone());
    let nmse_ls = nmse(&reference, &ls_combined)?;

    let krf = krf_decouple(&ls, cfg)?;
    let krf_combined = reconstruct_combined(&krf, cfg);
    let nmse_krf = nmse(&reference, &krf_combined)?;

    let aligned = resolve_ambiguity(truth, &krf, cfg).ok();
    let factor_nmse = aligned
        .as_ref()
        .map(|a| (matrix_nmse(&truth.h, &a.h), matrix_nmse(&truth.g, &a.g)));
    Ok(EstimateReport {
        ls,
        krf,
        krf_combined,
        nmse_ls,
        nmse_krf,
        aligned,
        factor_nmse,
    })
}

fn matrix_nmse(truth: &CMatrix, estimate: &CMatrix) -> f64 {
    let e = estimate.sub(truth).expect("aligned shapes").norm_sqr();
    e / truth.norm_sqr()
}
