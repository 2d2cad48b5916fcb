//! Flat CSV and JSON output for scan-type results.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::verify::{ClassHistogram, ScanRecord};

/// Column order of [`ScanRecord`] rows.
pub const SCAN_COLUMNS: [&str; 11] = [
    "p",
    "ell",
    "a",
    "e_alpha",
    "e_beta",
    "a_ell",
    "predicted",
    "oracle_K",
    "oracle_R",
    "agree",
    "seed",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected csv or json)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.extension())
    }
}

fn out_err(e: impl fmt::Display) -> Error {
    Error::Output(e.to_string())
}

/// CSV with a header taken from the field names of `T`.
pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(out_err)?;
    }
    String::from_utf8(w.into_inner().map_err(out_err)?).map_err(out_err)
}

/// Pretty JSON followed by a newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(out_err)?;
    s.push('\n');
    Ok(s)
}

/// Scan records in the fixed schema; the header is written even with no rows.
pub fn scan_csv(records: &[ScanRecord]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(SCAN_COLUMNS).map_err(out_err)?;
    for r in records {
        w.serialize(r).map_err(out_err)?;
    }
    String::from_utf8(w.into_inner().map_err(out_err)?).map_err(out_err)
}

pub fn render_scan(records: &[ScanRecord], format: Format) -> Result<String> {
    match format {
        Format::Csv => scan_csv(records),
        Format::Json => to_json(records),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HistogramRow {
    pub p: u64,
    pub ell: u64,
    pub class: String,
    pub class_size: u64,
    pub observed: usize,
    pub expected_frequency: f64,
    pub expected_count: f64,
    pub deviation: f64,
}

pub fn histogram_rows(h: &ClassHistogram) -> Vec<HistogramRow> {
    h.bins
        .iter()
        .map(|b| HistogramRow {
            p: h.p,
            ell: h.ell,
            class: b.label.to_string(),
            class_size: b.class_size,
            observed: b.observed,
            expected_frequency: b.expected_frequency,
            expected_count: b.expected_count,
            deviation: b.deviation,
        })
        .collect()
}
