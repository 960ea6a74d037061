use std::fmt;
use std::path::PathBuf;

use bdris_core::SystemConfig;

use crate::error::{HarnessError, Result};

/// Trials averaged per cell unless the experiment says otherwise.
pub const DEFAULT_TRIALS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PilotLength {
    /// `mt * nbar² * q` for whichever configuration it is applied to.
    Min,
    Fixed(usize),
}

impl fmt::Display for PilotLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PilotLength::Min => f.write_str("min"),
            PilotLength::Fixed(t) => write!(f, "{t}"),
        }
    }
}

/// Dimensions shared by every cell of an experiment before the sweep is
/// applied. `q` is derived as `n / nbar`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfigTemplate {
    pub mt: usize,
    pub mr: usize,
    pub n: usize,
    pub nbar: usize,
    pub t: PilotLength,
}

impl Default for ConfigTemplate {
    fn default() -> Self {
        Self {
            mt: 2,
            mr: 2,
            n: 16,
            nbar: 2,
            t: PilotLength::Min,
        }
    }
}

impl ConfigTemplate {
    /// Concrete configuration at the given SNR.
    pub fn resolve(&self, snr_db: f64) -> Result<SystemConfig> {
        if self.nbar == 0 || self.n == 0 || !self.n.is_multiple_of(self.nbar) {
            return Err(HarnessError::InvalidSpec(format!(
                "n = {} is not a positive multiple of nbar = {}",
                self.n, self.nbar
            )));
        }
        let q = self.n / self.nbar;
        let t = match self.t {
            PilotLength::Min => self.mt * self.nbar * self.nbar * q,
            PilotLength::Fixed(t) => t,
        };
        SystemConfig::new(self.mt, self.mr, self.nbar, q, t, snr_db).map_err(|e| {
            HarnessError::InvalidSpec(format!(
                "mt={} mr={} n={} nbar={} t={}: {e}",
                self.mt, self.mr, self.n, self.nbar, t
            ))
        })
    }
}

/// The single axis an experiment varies.
#[derive(Debug, Clone, PartialEq)]
pub enum Sweep {
    GroupSize(Vec<usize>),
    PilotLength(Vec<PilotLength>),
    /// `(mt, mr)` pairs.
    Antennas(Vec<(usize, usize)>),
    RisElements(Vec<usize>),
}

impl Sweep {
    pub fn axis_name(&self) -> &'static str {
        match self {
            Sweep::GroupSize(_) => "group_size",
            Sweep::PilotLength(_) => "pilot_length",
            Sweep::Antennas(_) => "antennas",
            Sweep::RisElements(_) => "ris_elements",
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Sweep::GroupSize(v) => v.len(),
            Sweep::PilotLength(v) => v.len(),
            Sweep::Antennas(v) => v.len(),
            Sweep::RisElements(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Templates in sweep order.
    pub fn apply(&self, base: &ConfigTemplate) -> Vec<ConfigTemplate> {
        match self {
            Sweep::GroupSize(v) => v
                .iter()
                .map(|&nbar| ConfigTemplate { nbar, ..*base })
                .collect(),
            Sweep::PilotLength(v) => v.iter().map(|&t| ConfigTemplate { t, ..*base }).collect(),
            Sweep::Antennas(v) => v
                .iter()
                .map(|&(mt, mr)| ConfigTemplate { mt, mr, ..*base })
                .collect(),
            Sweep::RisElements(v) => v.iter().map(|&n| ConfigTemplate { n, ..*base }).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub base: ConfigTemplate,
    pub snr_grid: Vec<f64>,
    /// `None` runs the base configuration alone.
    pub sweep: Option<Sweep>,
    pub trials: usize,
    pub master_seed: u64,
    /// Where the CSV goes; `None` keeps the rows in memory only.
    pub output_path: Option<PathBuf>,
}

impl Default for ExperimentSpec {
    fn default() -> Self {
        let base = ConfigTemplate::default();
        Self {
            base,
            snr_grid: (0..=6).map(|k| 5.0 * k as f64).collect(),
            sweep: None,
            trials: DEFAULT_TRIALS,
            master_seed: 1,
            output_path: None,
        }
    }
}

impl ExperimentSpec {
    /// Every swept configuration (at the first SNR), in sweep order. Fails if
    /// any of them violates the system invariants.
    pub fn configurations(&self) -> Result<Vec<SystemConfig>> {
        if self.trials == 0 {
            return Err(HarnessError::InvalidSpec(
                "trials must be at least 1".into(),
            ));
        }
        if self.snr_grid.is_empty() {
            return Err(HarnessError::InvalidSpec("snr grid is empty".into()));
        }
        if let Some(sweep) = self.sweep.as_ref().filter(|s| s.is_empty()) {
            return Err(HarnessError::InvalidSpec(format!(
                "sweep over {} has no values",
                sweep.axis_name()
            )));
        }
        if let Some(bad) = self
            .snr_grid
            .iter()
            .find(|s| s.is_nan() || **s == f64::NEG_INFINITY)
        {
            return Err(HarnessError::InvalidSpec(format!(
                "invalid snr value {bad}"
            )));
        }
        self.templates()
            .iter()
            .map(|tpl| tpl.resolve(self.snr_grid[0]))
            .collect()
    }

    /// Swept templates in order, or just the base.
    pub fn templates(&self) -> Vec<ConfigTemplate> {
        match &self.sweep {
            Some(sweep) => sweep.apply(&self.base),
            None => vec![self.base],
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.configurations().map(|_| ())
    }

    /// Largest RIS size touched by the experiment.
    pub fn max_ris_elements(&self) -> usize {
        self.templates()
            .iter()
            .map(|t| t.n)
            .max()
            .unwrap_or(self.base.n)
    }
}
