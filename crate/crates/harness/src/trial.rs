use bdris_core::{
    build_training, evaluate, generate_channels, synthesize_rx, SystemConfig, TrainingDesign,
};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};

use crate::error::Result;

const STREAM_DOMAIN: &[u8] = b"bdris-krf/trial/v1";

/// Canonical little-endian encoding of everything that shapes a trial.
/// `cfg.seed` is not part of it; the master seed is passed separately.
pub fn config_fingerprint(cfg: &SystemConfig) -> Vec<u8> {
    let mut out = Vec::with_capacity(7 * 8);
    for v in [cfg.mt, cfg.mr, cfg.n, cfg.nbar, cfg.q, cfg.t] {
        out.extend_from_slice(&(v as u64).to_le_bytes());
    }
    out.extend_from_slice(&cfg.snr_db.to_bits().to_le_bytes());
    out
}

/// 256-bit stream key: SHA-256 of the domain tag, master seed, config
/// fingerprint and trial index.
pub fn trial_seed(master_seed: u64, cfg: &SystemConfig, trial_index: u64) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(STREAM_DOMAIN);
    h.update(master_seed.to_le_bytes());
    h.update(config_fingerprint(cfg));
    h.update(trial_index.to_le_bytes());
    h.finalize().into()
}

pub fn trial_rng(master_seed: u64, cfg: &SystemConfig, trial_index: u64) -> ChaCha20Rng {
    ChaCha20Rng::from_seed(trial_seed(master_seed, cfg, trial_index))
}

/// Single-trial NMSE of both estimators on one shared realization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialOutcome {
    pub nmse_ls: f64,
    pub nmse_krf: f64,
}

/// Draws channels and noise from the trial's own stream and runs both
/// estimators on the same received signal.
pub fn run_trial_with(
    cfg: &SystemConfig,
    td: &TrainingDesign,
    trial_index: u64,
    master_seed: u64,
) -> Result<TrialOutcome> {
    let mut rng = trial_rng(master_seed, cfg, trial_index);
    let channels = generate_channels(cfg, &mut rng);
    let y = synthesize_rx(cfg, &channels, td, &mut rng)?;
    let report = evaluate(cfg, &channels, td, &y)?;
    Ok(TrialOutcome {
        nmse_ls: report.nmse_ls,
        nmse_krf: report.nmse_krf,
    })
}

/// [`run_trial_with`] that builds the training design itself.
pub fn run_trial(cfg: &SystemConfig, trial_index: u64, master_seed: u64) -> Result<TrialOutcome> {
    let td = build_training(cfg)?;
    run_trial_with(cfg, &td, trial_index, master_seed)
}
