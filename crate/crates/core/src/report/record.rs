use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

/// One residual check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub check: String,
    pub params: BTreeMap<String, String>,
    #[serde(deserialize_with = "nullable_f64")]
    pub residual: f64,
    pub threshold: f64,
    pub pass: bool,
}

fn nullable_f64<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
}

impl CheckRecord {
    /// Sets `pass` from `residual <= threshold`; NaN fails.
    pub fn new(
        suite: &str,
        check: &str,
        params: impl IntoIterator<Item = (String, String)>,
        residual: f64,
        threshold: f64,
    ) -> Self {
        assert!(threshold > 0.0, "threshold must be positive");
        Self {
            suite: suite.to_owned(),
            check: check.to_owned(),
            params: params.into_iter().collect(),
            residual,
            threshold,
            pass: residual <= threshold,
        }
    }

    /// `k=v;k=v` in key order.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    fn sort_key(&self) -> (&str, &str, String) {
        (&self.suite, &self.check, self.params_string())
    }
}

/// Sorts by `(suite, check, params)`.
pub fn sort_records(records: &mut [CheckRecord]) {
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
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

/// Seventeen significant digits in scientific form, e.g.
/// `1.2500000000000000e-3`; zero prints as `0.0000000000000000e0`.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

pub fn to_csv(records: &[CheckRecord]) -> String {
    let mut out = String::from("suite,check,params,residual,threshold,pass\n");
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            csv_field(&r.suite),
            csv_field(&r.check),
            csv_field(&r.params_string()),
            format_float(r.residual),
            format_float(r.threshold),
            r.pass
        );
    }
    out
}

fn json_number(v: f64) -> String {
    if v.is_finite() {
        format_float(v)
    } else {
        "null".to_owned()
    }
}

pub fn to_json(records: &[CheckRecord]) -> String {
    let quote = |s: &str| serde_json::to_string(s).expect("strings serialize");
    let mut out = String::from("[\n");
    for (i, r) in records.iter().enumerate() {
        let params = serde_json::to_string(&r.params).expect("string maps serialize");
        let _ = write!(
            out,
            "  {{\"suite\":{},\"check\":{},\"params\":{},\"residual\":{},\"threshold\":{},\"pass\":{}}}",
            quote(&r.suite),
            quote(&r.check),
            params,
            json_number(r.residual),
            json_number(r.threshold),
            r.pass
        );
        out.push_str(if i + 1 < records.len() { ",\n" } else { "\n" });
    }
    out.push_str("]\n");
    out
}

pub fn parse_json(text: &str) -> Result<Vec<CheckRecord>> {
    serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("malformed report: {e}")))
}

pub fn render(records: &[CheckRecord], format: Format) -> String {
    match format {
        Format::Csv => to_csv(records),
        Format::Json => to_json(records),
    }
}

/// Writes the records to `path`.
pub fn emit(records: &[CheckRecord], format: Format, path: &Path) -> Result<()> {
    if records.is_empty() {
        return Err(Error::Usage("no records to emit".into()));
    }
    fs::write(path, render(records, format)).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}
