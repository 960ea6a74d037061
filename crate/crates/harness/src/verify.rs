use bdris_core::model::stacked_rx;
use bdris_core::{
    build_training, combined_channel, generate_channels, krf_decouple, ls_matched_filter,
    reconstruct_combined, synthesize_rx, SystemConfig,
};

use crate::trial::trial_rng;

pub const ORTHOGONALITY_TOL: f64 = 1e-9;
pub const UNITARITY_TOL: f64 = 1e-12;
pub const EXACTNESS_TOL: f64 = 1e-8;
const SIGNAL_TOL: f64 = 1e-10;
const VERIFY_SEED: u64 = 0x5eed;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Training orthogonality and block unitarity over
/// `mt ∈ {1,2}, nbar ∈ {1,2,4}, q ∈ {1,2,4}`.
pub fn check_training() -> CheckResult {
    let mut worst = (0.0f64, 0.0f64);
    let mut failures = Vec::new();
    for mt in [1, 2] {
        for nbar in [1, 2, 4] {
            for q in [1, 2, 4] {
                let cfg = SystemConfig::with_min_pilots(mt, 1, nbar, q, f64::INFINITY)
                    .expect("valid sweep config");
                let td = build_training(&cfg).expect("minimal design");
                let ortho = td.orthogonality_error(&cfg);
                let unit = td.max_unitarity_error();
                worst = (worst.0.max(ortho), worst.1.max(unit));
                if ortho >= ORTHOGONALITY_TOL || unit >= UNITARITY_TOL {
                    failures.push(format!("mt={mt} nbar={nbar} q={q}"));
                }
            }
        }
    }
    CheckResult {
        name: "training orthogonality".into(),
        passed: failures.is_empty(),
        detail: format!(
            "18 configs, worst gram error {:.2e}, worst unitarity error {:.2e}{}",
            worst.0,
            worst.1,
            fail_suffix(&failures)
        ),
    }
}

/// Noise-free LS, per-group KRF products and the reconstructed channel all
/// reproduce the truth over `mt, mr ∈ {1,2,3}, nbar ∈ {1,2,4}, q ∈ {1,2}`.
pub fn check_noise_free_exactness() -> CheckResult {
    let mut worst = [0.0f64; 4];
    let mut failures = Vec::new();
    for mt in [1, 2, 3] {
        for mr in [1, 2, 3] {
            for nbar in [1, 2, 4] {
                for q in [1, 2] {
                    let cfg = SystemConfig::with_min_pilots(mt, mr, nbar, q, f64::INFINITY)
                        .expect("valid sweep config");
                    let errs = exactness_errors(&cfg);
                    for (w, e) in worst.iter_mut().zip(errs) {
                        *w = w.max(e);
                    }
                    let exact =
                        errs[..3].iter().all(|&e| e < EXACTNESS_TOL) && errs[3] < SIGNAL_TOL;
                    if !exact {
                        failures.push(format!("mt={mt} mr={mr} nbar={nbar} q={q}"));
                    }
                }
            }
        }
    }
    CheckResult {
        name: "noise-free exactness".into(),
        passed: failures.is_empty(),
        detail: format!(
            "54 configs, worst LS {:.2e}, group product {:.2e}, reconstruction {:.2e}, slot-vs-stacked {:.2e}{}",
            worst[0],
            worst[1],
            worst[2],
            worst[3],
            fail_suffix(&failures)
        ),
    }
}

/// `[ls, worst group product, reconstruction, slot loop vs stacked form]`
/// relative errors for one noise-free realization.
pub fn exactness_errors(cfg: &SystemConfig) -> [f64; 4] {
    let td = build_training(cfg).expect("training");
    let mut rng = trial_rng(VERIFY_SEED, cfg, 0);
    let ch = generate_channels(cfg, &mut rng);
    let truth = combined_channel(cfg, &ch);
    let y = synthesize_rx(cfg, &ch, &td, &mut rng).expect("shapes");
    let stacked = stacked_rx(cfg, &td, &truth.c).expect("shapes");
    let ls = ls_matched_filter(&y, &td, cfg).expect("shapes");
    let kr = krf_decouple(&ls, cfg).expect("shapes");

    let mut group = 0.0f64;
    for q in 0..cfg.q {
        let g = ch.group_g(q, cfg.nbar);
        let h = ch.group_h(q, cfg.nbar);
        let expected =
            bdris_core::CMatrix::from_fn(cfg.mr * cfg.nbar, cfg.mt * cfg.nbar, |i, j| {
                g.as_slice()[i] * h.as_slice()[j]
            });
        group = group.max(kr.group_product(q, cfg.nbar).relative_error(&expected));
    }
    [
        ls.c_hat.relative_error(&truth.c),
        group,
        reconstruct_combined(&kr, cfg).c.relative_error(&truth.c),
        y.relative_error(&stacked),
    ]
}

pub fn run_self_checks() -> Vec<CheckResult> {
    vec![check_training(), check_noise_free_exactness()]
}

fn fail_suffix(failures: &[String]) -> String {
    if failures.is_empty() {
        String::new()
    } else {
        format!("; failing: {}", failures.join(", "))
    }
}
