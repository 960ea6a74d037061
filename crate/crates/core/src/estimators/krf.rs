use alloc::vec::Vec;

use super::LsEstimate;
use crate::error::{Error, Result};
use crate::matcore::{kron_vec_permutation, rank_one_approx, unvec, CMatrix, RankOneMethod, C64};
use crate::model::SystemConfig;

/// Per-group factor estimates `Ĥ = [Ĥ^(1), …]` (`mt x n`) and
/// `Ĝ = [Ĝ^(1), …]` (`mr x n`). Each group is only identified up to a
/// scalar: `(λ Ĝ^(q), λ⁻¹ Ĥ^(q))` explains the data equally well.
#[derive(Debug, Clone, PartialEq)]
pub struct KrfEstimate {
    pub h_hat: CMatrix,
    pub g_hat: CMatrix,
    /// Dominant singular value of each group's rank-one matrix.
    pub sigmas: Vec<f64>,
    /// How each group's rank-one approximation was obtained.
    pub methods: Vec<RankOneMethod>,
}

/// Khatri-Rao factorization of a least-squares combined-channel estimate.
///
/// For each group `q`, the block `ĉ^(q) ≈ vec(H^(q) ⊗ G^(q))` is permuted to
/// `vec(H^(q)) ⊗ vec(G^(q))`, reshaped into the `mr*nbar x mt*nbar` matrix
/// `≈ g^(q) h^(q)T`, and split through its dominant singular triplet as
/// `ĝ = √σ u`, `ĥ = √σ v*`. A zero group yields zero factors.
pub fn krf_decouple(ls: &LsEstimate, cfg: &SystemConfig) -> Result<KrfEstimate> {
    if ls.c_hat.len() != cfg.combined_len() {
        return Err(Error::DimensionMismatch {
            op: "krf_decouple",
            expected: (cfg.combined_len(), 1),
            found: (ls.c_hat.len(), 1),
        });
    }
    let (mt, mr, nbar) = (cfg.mt, cfg.mr, cfg.nbar);
    let perm = kron_vec_permutation(mt, mr, nbar);
    let group_len = cfg.group_len();

    let mut h_hat = CMatrix::zeros(mt, cfg.n);
    let mut g_hat = CMatrix::zeros(mr, cfg.n);
    let mut sigmas = Vec::with_capacity(cfg.q);
    let mut methods = Vec::with_capacity(cfg.q);
    // Column-major storage makes each group's block a contiguous run.
    let (h_run, g_run) = (mt * nbar, mr * nbar);
    for q in 0..cfg.q {
        let permuted = perm.apply(&ls.c_hat[q * group_len..(q + 1) * group_len])?;
        let rank_one_input = unvec(&permuted, mr * nbar, mt * nbar)?;
        let r = rank_one_approx(&rank_one_input);
        let root = r.sigma.sqrt();

        let g_dst = &mut g_hat.as_mut_slice()[q * g_run..(q + 1) * g_run];
        for (dst, u) in g_dst.iter_mut().zip(r.u.iter()) {
            *dst = u * root;
        }
        let h_dst = &mut h_hat.as_mut_slice()[q * h_run..(q + 1) * h_run];
        for (dst, v) in h_dst.iter_mut().zip(r.v.iter()) {
            *dst = v.conj() * root;
        }
        sigmas.push(r.sigma);
        methods.push(r.method);
    }
    Ok(KrfEstimate {
        h_hat,
        g_hat,
        sigmas,
        methods,
    })
}

impl KrfEstimate {
    /// `vec(Ĝ^(q)) vec(Ĥ^(q))^T`, the only identifiable quantity of group `q`.
    pub fn group_product(&self, q: usize, nbar: usize) -> CMatrix {
        let g = self.g_hat.columns(q * nbar, (q + 1) * nbar);
        let h = self.h_hat.columns(q * nbar, (q + 1) * nbar);
        outer(g.as_slice(), h.as_slice())
    }
}

/// `a b^T`.
pub(crate) fn outer(a: &[C64], b: &[C64]) -> CMatrix {
    CMatrix::from_fn(a.len(), b.len(), |i, j| a[i] * b[j])
}
