use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use bdris_krf::config::{parse_count_list, parse_pilot_length, parse_snr_list};
use bdris_krf::{
    load_config, run_experiment_with_workers, verify, write_csv, ExperimentSpec, Overrides,
    PilotLength,
};
use clap::{Parser, Subcommand};

// Aliases keep clap from treating the parsed lists as repeated flags.
type SnrGrid = Vec<f64>;
type Counts = Vec<usize>;

/// Largest RIS that runs without `--full-scale`.
const DESK_MAX_N: usize = 32;

#[derive(Parser)]
#[command(
    name = "bdris-krf",
    version,
    about = "LS vs. Khatri-Rao factorization channel estimation for BD-RIS"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a Monte Carlo experiment and write CSV results.
    Run(Box<RunArgs>),
    /// Noise-free exactness and training orthogonality self-checks.
    Verify,
}

#[derive(Parser)]
struct RunArgs {
    /// Experiment file (flat `key = value` lines).
    #[arg(long)]
    config: Option<PathBuf>,
    /// SNR grid in dB: comma list or start:step:stop.
    #[arg(long, value_parser = parse_snr_list)]
    snr: Option<SnrGrid>,
    /// Number of BD-RIS elements.
    #[arg(long)]
    n: Option<usize>,
    /// Group size; a comma list sweeps it.
    #[arg(long, value_parser = parse_count_list)]
    nbar: Option<Counts>,
    #[arg(long)]
    mt: Option<usize>,
    #[arg(long)]
    mr: Option<usize>,
    /// Pilot length, or `min` for mt*nbar^2*q.
    #[arg(long, value_parser = parse_pilot_length)]
    t: Option<PilotLength>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long)]
    workers: Option<usize>,
    /// Allow RIS sizes above the desk-scale limit.
    #[arg(long)]
    full_scale: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run(*args),
        Command::Verify => verify_cmd(),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(args: RunArgs) -> anyhow::Result<ExitCode> {
    let mut spec = match &args.config {
        Some(path) => load_config(path)?,
        None => ExperimentSpec::default(),
    };
    Overrides {
        snr: args.snr,
        n: args.n,
        nbar: args.nbar,
        mt: args.mt,
        mr: args.mr,
        t: args.t,
        trials: args.trials,
        seed: args.seed,
        out: args.out,
    }
    .apply(&mut spec);
    spec.validate()?;
    if spec.max_ris_elements() > DESK_MAX_N && !args.full_scale {
        bail!(
            "n = {} exceeds the desk-scale limit of {DESK_MAX_N}; pass --full-scale to run it",
            spec.max_ris_elements()
        );
    }

    let workers = args
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let rows = run_experiment_with_workers(&spec, workers).context("experiment failed")?;
    match &spec.output_path {
        Some(path) => eprintln!("wrote {} rows to {}", rows.len(), path.display()),
        None => write_csv(&rows, io::stdout().lock())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd() -> anyhow::Result<ExitCode> {
    let checks = verify::run_self_checks();
    let mut out = io::stdout().lock();
    for c in &checks {
        writeln!(
            out,
            "[{}] {}: {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        )?;
    }
    Ok(if checks.iter().all(|c| c.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
