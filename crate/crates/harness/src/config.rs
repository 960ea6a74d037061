//! Flat `key = value` experiment files.
//!
//! ```text
//! # comments start with '#'
//! mt = 2
//! mr = 2
//! n = 16
//! nbar = 1,2,4        # more than one value sweeps the group size
//! t = min             # or a whole multiple of mt*nbar^2*q
//! snr = 0:5:30        # start:step:stop, or a comma list; "inf" is noise-free
//! trials = 100
//! seed = 1
//! out = results.csv
//! ```
//!
//! Any other axis is swept with `sweep = group_size | pilot_length |
//! antennas | ris_elements` plus `values = …` (antenna pairs are written
//! `MTxMR`, e.g. `1x1,4x4`). Unknown or repeated keys are errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::error::{HarnessError, Result};
use crate::spec::{ExperimentSpec, PilotLength, Sweep};

const KEYS: &[&str] = &[
    "mt", "mr", "n", "nbar", "t", "snr", "trials", "seed", "out", "sweep", "values",
];

pub fn load_config(path: &Path) -> Result<ExperimentSpec> {
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text, path)
}

pub fn parse_config(text: &str, path: &Path) -> Result<ExperimentSpec> {
    let err = |line: usize, msg: String| HarnessError::Config {
        path: path.to_path_buf(),
        line,
        msg,
    };

    let mut entries: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err(line_no, format!("expected `key = value`, got {line:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        if !KEYS.contains(&key) {
            return Err(err(line_no, format!("unknown key {key:?}")));
        }
        if entries.insert(key, (line_no, value)).is_some() {
            return Err(err(line_no, format!("duplicate key {key:?}")));
        }
    }

    let mut spec = ExperimentSpec::default();
    let mut nbar_list = None;
    for (&key, &(line, value)) in &entries {
        let wrap = |msg: String| err(line, format!("{key}: {msg}"));
        match key {
            "mt" => spec.base.mt = parse_count(value).map_err(wrap)?,
            "mr" => spec.base.mr = parse_count(value).map_err(wrap)?,
            "n" => spec.base.n = parse_count(value).map_err(wrap)?,
            "nbar" => nbar_list = Some((line, parse_count_list(value).map_err(wrap)?)),
            "t" => spec.base.t = parse_pilot_length(value).map_err(wrap)?,
            "snr" => spec.snr_grid = parse_snr_list(value).map_err(wrap)?,
            "trials" => spec.trials = parse_count(value).map_err(wrap)?,
            "seed" => {
                spec.master_seed = value
                    .parse()
                    .map_err(|_| wrap(format!("invalid seed {value:?}")))?
            }
            "out" => spec.output_path = Some(PathBuf::from(value)),
            _ => {}
        }
    }

    match (entries.get("sweep"), entries.get("values")) {
        (Some(&(line, axis)), Some(&(_, values))) => {
            spec.sweep = Some(parse_sweep(axis, values).map_err(|m| err(line, m))?);
        }
        (Some(&(line, _)), None) => return Err(err(line, "sweep needs `values`".into())),
        (None, Some(&(line, _))) => return Err(err(line, "values given without `sweep`".into())),
        (None, None) => {}
    }

    if let Some((line, list)) = nbar_list {
        spec.base.nbar = list[0];
        if list.len() > 1 {
            if spec.sweep.is_some() {
                return Err(err(
                    line,
                    "an nbar list conflicts with an explicit sweep".into(),
                ));
            }
            spec.sweep = Some(Sweep::GroupSize(list));
        }
    }
    Ok(spec)
}

/// Inline overrides applied on top of a config file (or the defaults).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub snr: Option<Vec<f64>>,
    pub n: Option<usize>,
    pub nbar: Option<Vec<usize>>,
    pub mt: Option<usize>,
    pub mr: Option<usize>,
    pub t: Option<PilotLength>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
}

impl Overrides {
    /// A multi-value `nbar` replaces whatever sweep the file defined.
    pub fn apply(&self, spec: &mut ExperimentSpec) {
        if let Some(v) = &self.snr {
            spec.snr_grid = v.clone();
        }
        if let Some(v) = self.n {
            spec.base.n = v;
        }
        if let Some(v) = self.mt {
            spec.base.mt = v;
        }
        if let Some(v) = self.mr {
            spec.base.mr = v;
        }
        if let Some(v) = self.t {
            spec.base.t = v;
        }
        if let Some(v) = self.trials {
            spec.trials = v;
        }
        if let Some(v) = self.seed {
            spec.master_seed = v;
        }
        if let Some(v) = &self.out {
            spec.output_path = Some(v.clone());
        }
        if let Some(list) = self.nbar.as_ref().filter(|l| !l.is_empty()) {
            spec.base.nbar = list[0];
            if list.len() > 1 {
                spec.sweep = Some(Sweep::GroupSize(list.clone()));
            }
        }
    }
}

pub fn parse_count(s: &str) -> std::result::Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(_) => Err(format!("expected a positive integer, got {s:?}")),
    }
}

pub fn parse_count_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    split_list(s).map(parse_count).collect()
}

pub fn parse_pilot_length(s: &str) -> std::result::Result<PilotLength, String> {
    match s.trim() {
        "min" => Ok(PilotLength::Min),
        other => parse_count(other).map(PilotLength::Fixed),
    }
}

/// Comma list of dB values (`inf` allowed) or an inclusive `start:step:stop`
/// range.
pub fn parse_snr_list(s: &str) -> std::result::Result<Vec<f64>, String> {
    let s = s.trim();
    if s.contains(':') {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let [start, step, stop] = parts[..] else {
            return Err(format!("range must be start:step:stop, got {s:?}"));
        };
        let num = |x: &str| x.parse::<f64>().map_err(|_| format!("bad number {x:?}"));
        let (start, step, stop) = (num(start)?, num(step)?, num(stop)?);
        if step.is_nan() || step <= 0.0 || !start.is_finite() || !stop.is_finite() || stop < start {
            return Err(format!("invalid range {s:?}"));
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
        return Ok((0..count).map(|k| start + step * k as f64).collect());
    }
    let values: Vec<f64> = split_list(s)
        .map(|x| match x {
            "inf" | "+inf" => Ok(f64::INFINITY),
            _ => x
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("bad snr value {x:?}")),
        })
        .collect::<std::result::Result<_, _>>()?;
    if values.is_empty() {
        return Err("empty snr list".into());
    }
    Ok(values)
}

pub fn parse_sweep(axis: &str, values: &str) -> std::result::Result<Sweep, String> {
    Ok(match axis.trim() {
        "group_size" => Sweep::GroupSize(parse_count_list(values)?),
        "ris_elements" => Sweep::RisElements(parse_count_list(values)?),
        "pilot_length" => Sweep::PilotLength(
            split_list(values)
                .map(parse_pilot_length)
                .collect::<std::result::Result<_, _>>()?,
        ),
        "antennas" => Sweep::Antennas(
            split_list(values)
                .map(|pair| {
                    let (mt, mr) = pair.split_once(['x', 'X']).ok_or_else(|| {
                        format!("antenna pair must look like MTxMR, got {pair:?}")
                    })?;
                    Ok((parse_count(mt)?, parse_count(mr)?))
                })
                .collect::<std::result::Result<_, String>>()?,
        ),
        other => return Err(format!("unknown sweep axis {other:?}")),
    })
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty())
}
