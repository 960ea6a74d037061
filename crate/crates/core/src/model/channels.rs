use alloc::vec::Vec;

use rand::Rng;
use rand_distr::StandardNormal;

use super::SystemConfig;
use crate::matcore::{kron, unvec, vec, CMatrix, CVector, C64};

/// True TX-RIS channel `h` (`mt x n`) and RIS-RX channel `g` (`mr x n`).
/// Group `q` owns columns `[q*nbar, (q+1)*nbar)` of each.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelPair {
    pub h: CMatrix,
    pub g: CMatrix,
}

impl ChannelPair {
    pub fn group_h(&self, q: usize, nbar: usize) -> CMatrix {
        self.h.columns(q * nbar, (q + 1) * nbar)
    }

    pub fn group_g(&self, q: usize, nbar: usize) -> CMatrix {
        self.g.columns(q * nbar, (q + 1) * nbar)
    }
}

/// Draws one circularly-symmetric complex Gaussian sample with unit variance.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * core::f64::consts::FRAC_1_SQRT_2
}

/// i.i.d. CN(0, 1) entries for both channels. `h` is drawn first, column by
/// column, then `g`.
pub fn generate_channels<R: Rng + ?Sized>(cfg: &SystemConfig, rng: &mut R) -> ChannelPair {
    let h = CMatrix::from_fn(cfg.mt, cfg.n, |_, _| complex_gaussian(rng));
    let g = CMatrix::from_fn(cfg.mr, cfg.n, |_, _| complex_gaussian(rng));
    ChannelPair { h, g }
}

/// Stacked combined channel `c = [vec(H^(1) ⊗ G^(1)); …; vec(H^(Q) ⊗ G^(Q))]`
/// and its `mr*mt x nbar²*q` reshape used for error reporting.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinedChannel {
    pub c: CVector,
    pub c_matrix: CMatrix,
}

impl CombinedChannel {
    pub fn from_vector(cfg: &SystemConfig, c: CVector) -> Self {
        let c_matrix = unvec(&c, cfg.mr * cfg.mt, cfg.nbar * cfg.nbar * cfg.q)
            .expect("combined channel length");
        Self { c, c_matrix }
    }

    /// Block `q` of the stacked vector.
    pub fn group(&self, cfg: &SystemConfig, q: usize) -> &[C64] {
        let len = cfg.group_len();
        &self.c[q * len..(q + 1) * len]
    }
}

pub fn combined_channel(cfg: &SystemConfig, ch: &ChannelPair) -> CombinedChannel {
    combined_from_factors(cfg, &ch.h, &ch.g)
}

/// Same rule as [`combined_channel`] for any `mt x n` and `mr x n` factors.
pub fn combined_from_factors(cfg: &SystemConfig, h: &CMatrix, g: &CMatrix) -> CombinedChannel {
    let nbar = cfg.nbar;
    let mut c = Vec::with_capacity(cfg.combined_len());
    for q in 0..cfg.q {
        let block = kron(
            &h.columns(q * nbar, (q + 1) * nbar),
            &g.columns(q * nbar, (q + 1) * nbar),
        );
        c.extend_from_slice(&vec(&block));
    }
    CombinedChannel::from_vector(cfg, CVector::from(c))
}
