use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{HarnessError, Result};

pub const CSV_HEADER: &str = "snr_db,mt,mr,n,nbar,q,t,method,nmse_mean,nmse_db,trials,seed";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Ls,
    Krf,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Ls => "LS",
            Method::Krf => "KRF",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "LS" => Ok(Method::Ls),
            "KRF" => Ok(Method::Krf),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

/// Mean NMSE of one method in one (configuration, SNR) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub snr_db: f64,
    pub mt: usize,
    pub mr: usize,
    pub n: usize,
    pub nbar: usize,
    pub q: usize,
    pub t: usize,
    pub method: Method,
    pub nmse_mean: f64,
    pub nmse_db: f64,
    pub trials: usize,
    pub seed: u64,
}

/// `10 log10(x)`.
pub fn to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

/// Writes the header and one line per row. Floats use Rust's shortest
/// round-trip formatting.
pub fn write_csv<W: Write>(rows: &[ResultRow], mut w: W) -> std::io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            r.snr_db,
            r.mt,
            r.mr,
            r.n,
            r.nbar,
            r.q,
            r.t,
            r.method,
            r.nmse_mean,
            r.nmse_db,
            r.trials,
            r.seed
        )?;
    }
    w.flush()
}

pub fn csv_string(rows: &[ResultRow]) -> String {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv is utf-8")
}

pub fn emit_csv(rows: &[ResultRow], path: &Path) -> Result<()> {
    if rows.is_empty() {
        return Err(HarnessError::InvalidSpec("no rows to write".into()));
    }
    let io_err = |source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    write_csv(rows, BufWriter::new(file)).map_err(io_err)
}

/// Parses CSV produced by [`write_csv`].
pub fn parse_csv(text: &str) -> std::result::Result<Vec<ResultRow>, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        other => return Err(format!("unexpected header {other:?}")),
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let f: Vec<&str> = line.split(',').collect();
            if f.len() != 12 {
                return Err(format!(
                    "line {}: expected 12 fields, got {}",
                    i + 2,
                    f.len()
                ));
            }
            let bad = |what: &str| format!("line {}: bad {what}", i + 2);
            let us = |k: usize, what: &str| f[k].parse::<usize>().map_err(|_| bad(what));
            let fl = |k: usize, what: &str| f[k].parse::<f64>().map_err(|_| bad(what));
            Ok(ResultRow {
                snr_db: fl(0, "snr_db")?,
                mt: us(1, "mt")?,
                mr: us(2, "mr")?,
                n: us(3, "n")?,
                nbar: us(4, "nbar")?,
                q: us(5, "q")?,
                t: us(6, "t")?,
                method: f[7].parse()?,
                nmse_mean: fl(8, "nmse_mean")?,
                nmse_db: fl(9, "nmse_db")?,
                trials: us(10, "trials")?,
                seed: f[11].parse().map_err(|_| bad("seed"))?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(method: Method, nmse: f64) -> ResultRow {
        ResultRow {
            snr_db: 12.5,
            mt: 2,
            mr: 3,
            n: 16,
            nbar: 4,
            q: 4,
            t: 128,
            method,
            nmse_mean: nmse,
            nmse_db: to_db(nmse),
            trials: 10,
            seed: u64::MAX,
        }
    }

    #[test]
    fn header_and_line_count() {
        let text = csv_string(&[row(Method::Ls, 0.1), row(Method::Krf, 0.01)]);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], CSV_HEADER);
        assert!(text.ends_with('\n'));
        assert_eq!(
            lines[1],
            "12.5,2,3,16,4,4,128,LS,0.1,-10,10,18446744073709551615"
        );
    }

    #[test]
    fn floats_round_trip_exactly() {
        let rows = [
            row(Method::Krf, 1.0 / 3.0),
            row(Method::Ls, 2.718281828459045e-7),
        ];
        let parsed = parse_csv(&csv_string(&rows)).unwrap();
        assert_eq!(parsed, rows);
        assert_eq!(parsed[0].nmse_mean.to_bits(), (1.0f64 / 3.0).to_bits());
    }

    #[test]
    fn infinite_snr_round_trips() {
        let mut r = row(Method::Ls, 0.0);
        r.snr_db = f64::INFINITY;
        let parsed = parse_csv(&csv_string(std::slice::from_ref(&r))).unwrap();
        assert_eq!(parsed[0].snr_db, f64::INFINITY);
        assert_eq!(parsed[0].nmse_db, f64::NEG_INFINITY);
    }

    #[test]
    fn empty_rows_rejected() {
        let dir = std::env::temp_dir().join("bdris-krf-empty-rows.csv");
        assert!(emit_csv(&[], &dir).is_err());
    }
}
