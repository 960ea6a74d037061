use alloc::vec;

use rand::Rng;

use super::{complex_gaussian, ChannelPair, SystemConfig, TrainingDesign};
use crate::error::{Error, Result};
use crate::matcore::{unvec, CVector, C64};

/// Received training signal `y = [y_1; …; y_T]`, slot by slot:
/// `y_t = Σ_q G^(q) S_t^(q) H^(q)T x_t + b_t` with `b_t ~ CN(0, σ² I)` and
/// `σ² = cfg.noise_variance()`. Noise is drawn slot-major after the
/// noise-free part; nothing is drawn when `σ² = 0`.
pub fn synthesize_rx<R: Rng + ?Sized>(
    cfg: &SystemConfig,
    ch: &ChannelPair,
    td: &TrainingDesign,
    rng: &mut R,
) -> Result<CVector> {
    check_shapes(cfg, ch, td)?;
    let (mr, nbar) = (cfg.mr, cfg.nbar);
    let mut y = CVector::zeros(mr * cfg.t);
    let mut scattered = vec![C64::new(0.0, 0.0); cfg.n];
    for t in 0..cfg.t {
        // H^T x_t, one entry per RIS element.
        let incident = ch.h.transpose_mul_vec(td.x.col(t))?;
        for (qq, block) in td.s_seq[t].iter().enumerate() {
            let out = block.mul_vec(&incident[qq * nbar..(qq + 1) * nbar])?;
            scattered[qq * nbar..(qq + 1) * nbar].copy_from_slice(&out);
        }
        let yt = ch.g.mul_vec(&scattered)?;
        y[t * mr..(t + 1) * mr].copy_from_slice(&yt);
    }

    let var = cfg.noise_variance();
    if var > 0.0 {
        let sigma = var.sqrt();
        for v in y.iter_mut() {
            *v += complex_gaussian(rng) * sigma;
        }
    }
    Ok(y)
}

/// Noise-free received signal through the stacked form `(Ω ⊗ I_mr) c`,
/// computed as `vec(C Ω^T)` with `C = unvec(c, mr, ·)`.
pub fn stacked_rx(cfg: &SystemConfig, td: &TrainingDesign, c: &[C64]) -> Result<CVector> {
    if c.len() != cfg.combined_len() {
        return Err(Error::DimensionMismatch {
            op: "stacked_rx",
            expected: (cfg.combined_len(), 1),
            found: (c.len(), 1),
        });
    }
    let cm = unvec(c, cfg.mr, cfg.pilot_dim())?;
    let y = cm.matmul(&td.omega.transpose())?;
    Ok(CVector::from(y.into_vec()))
}

fn check_shapes(cfg: &SystemConfig, ch: &ChannelPair, td: &TrainingDesign) -> Result<()> {
    let checks = [
        ("channel h", (cfg.mt, cfg.n), ch.h.shape()),
        ("channel g", (cfg.mr, cfg.n), ch.g.shape()),
        ("pilot matrix", (cfg.mt, cfg.t), td.x.shape()),
        ("combined pilot", (cfg.t, cfg.pilot_dim()), td.omega.shape()),
    ];
    for (op, expected, found) in checks {
        if expected != found {
            return Err(Error::DimensionMismatch {
                op,
                expected,
                found,
            });
        }
    }
    if td.s_seq.len() != cfg.t || td.s_seq.iter().any(|b| b.len() != cfg.q) {
        return Err(Error::DimensionMismatch {
            op: "scattering sequence",
            expected: (cfg.t, cfg.q),
            found: (td.s_seq.len(), td.s_seq.first().map_or(0, |b| b.len())),
        });
    }
    Ok(())
}
