//! Signal file formats and machine-readable reports.
//!
//! Signals travel as CSV (`x,y` header, one row per sample) or JSON
//! (`{"period": "...", "samples": [...]}`). Periods serialize as exact
//! rational strings so commensurability survives round trips; the CSV
//! x-column is advisory and is validated against the grid on input.
//! Every float is emitted with 17 significant digits, which round-trips
//! `f64` exactly and keeps identical runs byte-identical.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::rational::{rationalize, Rational};
use crate::signal::Signal;

/// Serialized form of one signal: an exact rational period plus samples.
#[derive(Clone, PartialEq, Debug)]
pub struct SignalFile {
    pub period: Rational,
    pub samples: Vec<f64>,
}

/// On-disk encodings for signals.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(&self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }

    /// Pick a format from a file extension, if it names one.
    pub fn from_extension(path: &str) -> Option<Format> {
        match path.rsplit_once('.').map(|(_, ext)| ext) {
            Some("csv") => Some(Format::Csv),
            Some("json") => Some(Format::Json),
            _ => None,
        }
    }
}

/// `f64` with exactly 17 significant digits, scientific notation. This is
/// enough digits to reproduce the value bit for bit on parse.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

impl SignalFile {
    pub fn from_signal(signal: &Signal) -> SignalFile {
        SignalFile {
            period: signal.grid().period(),
            samples: signal.values().to_vec(),
        }
    }

    pub fn to_signal(&self) -> Result<Signal> {
        let grid = Grid::new(self.period, self.samples.len())?;
        Signal::new(grid, self.samples.clone())
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Csv => self.emit_csv(),
            Format::Json => self.emit_json(),
        }
    }

    /// CSV with an `x,y` header; `x` runs over `j * step` from 0.
    pub fn emit_csv(&self) -> String {
        let step = self.period / Rational::integer(self.samples.len() as i64);
        let mut out = String::from("x,y\n");
        for (j, v) in self.samples.iter().enumerate() {
            let x = step * Rational::integer(j as i64);
            let _ = writeln!(out, "{},{}", fmt_f64(x.to_f64()), fmt_f64(*v));
        }
        out
    }

    pub fn emit_json(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{{\"period\":\"{}\",\"samples\":[", self.period);
        for (j, v) in self.samples.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&fmt_f64(*v));
        }
        out.push_str("]}");
        out
    }

    /// Parse either encoding, sniffing JSON by its leading brace. An
    /// explicit `period` overrides (and is validated against) whatever
    /// the file implies.
    pub fn parse(text: &str, period: Option<Rational>) -> Result<SignalFile> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text, period)
        } else {
            Self::parse_csv(text, period)
        }
    }

    pub fn parse_json(text: &str, period_override: Option<Rational>) -> Result<SignalFile> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::ParseError(format!("bad JSON: {e}")))?;
        let object = value
            .as_object()
            .ok_or_else(|| Error::ParseError("expected a JSON object".into()))?;
        let period_text = object
            .get("period")
            .and_then(|v| v.as_str())
            .ok_or_else(|| Error::ParseError("missing string key \"period\"".into()))?;
        let period: Rational = period_text.parse()?;
        let samples = object
            .get("samples")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::ParseError("missing array key \"samples\"".into()))?
            .iter()
            .map(|v| {
                v.as_f64()
                    .ok_or_else(|| Error::ParseError(format!("non-numeric sample {v}")))
            })
            .collect::<Result<Vec<f64>>>()?;
        if samples.is_empty() {
            return Err(Error::ParseError("signal has no samples".into()));
        }
        if let Some(wanted) = period_override {
            if wanted != period {
                return Err(Error::ParseError(format!(
                    "file period {period} does not match requested {wanted}"
                )));
            }
        }
        Ok(SignalFile { period, samples })
    }

    /// CSV rows are `(j * step, value)`. The period is taken from the
    /// override when given, otherwise recovered by rationalizing the step;
    /// either way each x must match `j * step` within 1e-12.
    pub fn parse_csv(text: &str, period_override: Option<Rational>) -> Result<SignalFile> {
        let mut lines = text.lines();
        match lines.next().map(str::trim) {
            Some("x,y") => {}
            other => {
                return Err(Error::ParseError(format!(
                    "expected header \"x,y\", got {other:?}"
                )))
            }
        }
        let mut xs = Vec::new();
        let mut samples = Vec::new();
        for (i, line) in lines.enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (x, y) = line
                .split_once(',')
                .ok_or_else(|| Error::ParseError(format!("row {}: missing comma", i + 2)))?;
            let x: f64 = x
                .trim()
                .parse()
                .map_err(|_| Error::ParseError(format!("row {}: bad x {x:?}", i + 2)))?;
            let y: f64 = y
                .trim()
                .parse()
                .map_err(|_| Error::ParseError(format!("row {}: bad y {y:?}", i + 2)))?;
            xs.push(x);
            samples.push(y);
        }
        if samples.is_empty() {
            return Err(Error::ParseError("signal has no samples".into()));
        }
        let n = samples.len();
        let period = match period_override {
            Some(p) => p,
            None => {
                if n < 2 {
                    return Err(Error::ParseError(
                        "cannot infer a period from a single CSV row; pass one explicitly".into(),
                    ));
                }
                let step = rationalize(xs[1])?;
                if !step.is_positive() {
                    return Err(Error::ParseError(format!(
                        "x column must increase from 0, got step {step}"
                    )));
                }
                step * Rational::integer(n as i64)
            }
        };
        let step = period / Rational::integer(n as i64);
        for (j, &x) in xs.iter().enumerate() {
            let expected = (step * Rational::integer(j as i64)).to_f64();
            if (x - expected).abs() > 1e-12 {
                return Err(Error::ParseError(format!(
                    "x[{j}] = {x} does not match the grid point {expected}"
                )));
            }
        }
        Ok(SignalFile { period, samples })
    }
}

/// Hex SHA-256 of raw input bytes, for report provenance.
pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let mut out = String::with_capacity(2 * hash.len() + 7);
    out.push_str("sha256:");
    for byte in hash {
        let _ = write!(out, "{byte:02x}");
    }
    out
}

/// One emitted artifact in a report: a labeled file or inline samples.
#[derive(Clone, Debug)]
pub struct OutputEntry {
    pub label: String,
    pub file: Option<String>,
    pub values: Option<Vec<f64>>,
}

/// One membership check in a report.
#[derive(Clone, Debug)]
pub struct CheckEntry {
    pub label: String,
    pub predicate: String,
    pub tol: f64,
    pub residual: f64,
    pub pass: bool,
}

/// Machine-readable result of a CLI command. Field order is fixed and
/// floats carry 17 significant digits; identical invocations therefore
/// produce identical bytes unless `stamp` is set.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: String,
    pub input_digest: Option<String>,
    pub tolerance: Option<f64>,
    pub outputs: Vec<OutputEntry>,
    pub checks: Vec<CheckEntry>,
    pub residual_norms: Option<Vec<f64>>,
    pub reconstruction_residual: Option<f64>,
    pub converged: Option<bool>,
    pub levels_used: Option<u32>,
    pub result: Option<bool>,
    pub stamp: Option<u64>,
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn float_array(values: &[f64]) -> String {
    let mut out = String::from("[");
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&fmt_f64(*v));
    }
    out.push(']');
    out
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            ..Report::default()
        }
    }

    pub fn to_json(&self) -> String {
        let mut fields: Vec<(&str, String)> = Vec::new();
        fields.push(("command", json_string(&self.command)));
        if let Some(d) = &self.input_digest {
            fields.push(("input_digest", json_string(d)));
        }
        if let Some(t) = self.tolerance {
            fields.push(("tolerance", fmt_f64(t)));
        }
        if !self.outputs.is_empty() {
            let mut arr = String::from("[");
            for (i, o) in self.outputs.iter().enumerate() {
                if i > 0 {
                    arr.push(',');
                }
                let _ = write!(arr, "{{\"label\":{}", json_string(&o.label));
                if let Some(f) = &o.file {
                    let _ = write!(arr, ",\"file\":{}", json_string(f));
                }
                if let Some(v) = &o.values {
                    let _ = write!(arr, ",\"values\":{}", float_array(v));
                }
                arr.push('}');
            }
            arr.push(']');
            fields.push(("outputs", arr));
        }
        if !self.checks.is_empty() {
            let mut arr = String::from("[");
            for (i, c) in self.checks.iter().enumerate() {
                if i > 0 {
                    arr.push(',');
                }
                let _ = write!(
                    arr,
                    "{{\"label\":{},\"predicate\":{},\"tol\":{},\"residual\":{},\"pass\":{}}}",
                    json_string(&c.label),
                    json_string(&c.predicate),
                    fmt_f64(c.tol),
                    fmt_f64(c.residual),
                    c.pass
                );
            }
            arr.push(']');
            fields.push(("checks", arr));
        }
        if let Some(norms) = &self.residual_norms {
            fields.push(("residual_norms", float_array(norms)));
        }
        if let Some(r) = self.reconstruction_residual {
            fields.push(("reconstruction_residual", fmt_f64(r)));
        }
        if let Some(c) = self.converged {
            fields.push(("converged", c.to_string()));
        }
        if let Some(l) = self.levels_used {
            fields.push(("levels_used", l.to_string()));
        }
        if let Some(r) = self.result {
            fields.push(("result", r.to_string()));
        }
        if let Some(s) = self.stamp {
            fields.push(("stamp", s.to_string()));
        }

        let mut out = String::from("{");
        for (i, (key, value)) in fields.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}:{}", json_string(key), value);
        }
        out.push('}');
        out
    }
}
