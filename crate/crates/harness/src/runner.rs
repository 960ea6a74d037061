use std::fs::File;
use std::io::BufWriter;

use bdris_core::{build_training, SystemConfig, TrainingDesign};
use rayon::prelude::*;

use crate::error::{HarnessError, Result};
use crate::output::{to_db, write_csv, Method, ResultRow};
use crate::spec::ExperimentSpec;
use crate::trial::{run_trial_with, TrialOutcome};

/// Runs the experiment on the global rayon pool.
///
/// Each (sweep value, SNR) cell averages `spec.trials` paired trials and
/// yields an LS row followed by a KRF row; cells are ordered sweep-major,
/// then by SNR. Trials are reduced in index order, so the result does not
/// depend on how many workers executed them. When `spec.output_path` is set
/// the file is created before any trial runs and receives the CSV.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Vec<ResultRow>> {
    let configs = spec.configurations()?;
    let sink = match &spec.output_path {
        Some(path) => Some((
            path,
            File::create(path).map_err(|source| HarnessError::Io {
                path: path.clone(),
                source,
            })?,
        )),
        None => None,
    };

    let designs = configs
        .par_iter()
        .map(build_training)
        .collect::<std::result::Result<Vec<TrainingDesign>, _>>()?;

    let cells: Vec<(usize, SystemConfig)> = configs
        .iter()
        .enumerate()
        .flat_map(|(k, cfg)| {
            spec.snr_grid
                .iter()
                .map(move |&snr| (k, cfg.with_snr_db(snr).with_seed(spec.master_seed)))
        })
        .collect();
    let trials = spec.trials;
    let outcomes = (0..cells.len() * trials)
        .into_par_iter()
        .map(|job| {
            let (k, cfg) = &cells[job / trials];
            run_trial_with(cfg, &designs[*k], (job % trials) as u64, spec.master_seed)
        })
        .collect::<Result<Vec<TrialOutcome>>>()?;

    let mut rows = Vec::with_capacity(2 * cells.len());
    for (cell, (_, cfg)) in cells.iter().enumerate() {
        let chunk = &outcomes[cell * trials..(cell + 1) * trials];
        let ls = chunk.iter().map(|o| o.nmse_ls).sum::<f64>() / trials as f64;
        let krf = chunk.iter().map(|o| o.nmse_krf).sum::<f64>() / trials as f64;
        for (method, mean) in [(Method::Ls, ls), (Method::Krf, krf)] {
            rows.push(ResultRow {
                snr_db: cfg.snr_db,
                mt: cfg.mt,
                mr: cfg.mr,
                n: cfg.n,
                nbar: cfg.nbar,
                q: cfg.q,
                t: cfg.t,
                method,
                nmse_mean: mean,
                nmse_db: to_db(mean),
                trials,
                seed: spec.master_seed,
            });
        }
    }

    if let Some((path, file)) = sink {
        write_csv(&rows, BufWriter::new(file)).map_err(|source| HarnessError::Io {
            path: path.clone(),
            source,
        })?;
    }
    Ok(rows)
}

/// [`run_experiment`] on a dedicated pool of `workers` threads.
pub fn run_experiment_with_workers(
    spec: &ExperimentSpec,
    workers: usize,
) -> Result<Vec<ResultRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()?;
    pool.install(|| run_experiment(spec))
}
