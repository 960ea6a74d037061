use crate::error::{Error, Result};
use crate::matcore::{unvec, CVector, C64};
use crate::model::{SystemConfig, TrainingDesign};

/// Least-squares estimate of the stacked combined channel.
#[derive(Debug, Clone, PartialEq)]
pub struct LsEstimate {
    pub c_hat: CVector,
}

/// Matched filter `ĉ = (nbar/t) (Ω ⊗ I_mr)^H y`.
///
/// Evaluated as `vec(Y Ω*)` with `Y = unvec(y, mr, t)`, which costs
/// `O(mr · t · mt nbar² q)` and never forms the Kronecker product. Exact for
/// noise-free input because `Ω^H Ω = (t/nbar) I`.
pub fn ls_matched_filter(y: &[C64], td: &TrainingDesign, cfg: &SystemConfig) -> Result<LsEstimate> {
    if y.len() != cfg.mr * cfg.t {
        return Err(Error::DimensionMismatch {
            op: "ls_matched_filter: received signal",
            expected: (cfg.mr * cfg.t, 1),
            found: (y.len(), 1),
        });
    }
    if td.omega.shape() != (cfg.t, cfg.pilot_dim()) {
        return Err(Error::DimensionMismatch {
            op: "ls_matched_filter: combined pilot",
            expected: (cfg.t, cfg.pilot_dim()),
            found: td.omega.shape(),
        });
    }
    let ym = unvec(y, cfg.mr, cfg.t)?;
    let filtered = ym.matmul(&td.omega.conj())?;
    let scale = cfg.nbar as f64 / cfg.t as f64;
    let c_hat = filtered.as_slice().iter().map(|z| z * scale).collect();
    Ok(LsEstimate { c_hat })
}
