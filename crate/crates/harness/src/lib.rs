//! Seeded Monte Carlo harness for comparing the least-squares combined
//! channel estimate with its Khatri-Rao factorization refinement.
//!
//! An [`ExperimentSpec`] names a base configuration, one swept axis, an SNR
//! grid and a trial count. [`run_experiment`] expands it into cells, runs
//! paired LS/KRF trials in parallel and returns one [`ResultRow`] per method
//! and cell. Every trial draws from its own ChaCha20 stream keyed by the
//! master seed, the configuration and the trial index, so results are
//! reproducible and independent of the worker count.

pub mod config;
pub mod error;
pub mod output;
pub mod runner;
pub mod spec;
pub mod trial;
pub mod verify;

pub use config::{load_config, parse_config, Overrides};
pub use error::{HarnessError, Result};
pub use output::{csv_string, emit_csv, parse_csv, write_csv, Method, ResultRow, CSV_HEADER};
pub use runner::{run_experiment, run_experiment_with_workers};
pub use spec::{ConfigTemplate, ExperimentSpec, PilotLength, Sweep, DEFAULT_TRIALS};
pub use trial::{run_trial, run_trial_with, trial_seed, TrialOutcome};
