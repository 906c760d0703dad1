//! Problem files: one or two comparison matrices plus labels.
//!
//! JSON is the native format:
//!
//! ```json
//! {"labels": ["x", "y"], "A": [[1, 3], ["1/3", 1]], "B": [[1, 2], [0.5, 1]]}
//! ```
//!
//! Entries are numbers or `"p/q"` strings. With `"log": true` entries are
//! natural logs of the comparison values and outputs are reported as logs.
//! A single matrix can also be read from CSV, optionally with a header row of
//! labels.

use std::fmt;
use std::path::Path;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::decision::{
    rate_bicriteria, BicriteriaRating, ComparisonMatrix, DecisionError, ValidateOptions,
};
use crate::tolerance::Tolerance;

/// A matrix entry as written in the file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Entry(pub f64);

fn parse_entry(s: &str) -> Option<f64> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (p.trim().parse::<f64>().ok()?, q.trim().parse::<f64>().ok()?);
            Some(p / q)
        }
        None => s.parse().ok(),
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct EntryVisitor;
        impl Visitor<'_> for EntryVisitor {
            type Value = Entry;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number or a \"p/q\" string")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Entry, E> {
                Ok(Entry(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Entry, E> {
                Ok(Entry(v as f64))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Entry, E> {
                Ok(Entry(v as f64))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Entry, E> {
                parse_entry(v)
                    .map(Entry)
                    .ok_or_else(|| E::invalid_value(de::Unexpected::Str(v), &self))
            }
        }
        d.deserialize_any(EntryVisitor)
    }
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.0)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    /// Log-domain slack for boundary comparisons.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    /// Symmetrize non-reciprocal matrices instead of rejecting them.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub repair: bool,
}

/// Problem file contents before validation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<Entry>>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Vec<Entry>>>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub options: Options,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub log: bool,
}

fn is_default(o: &Options) -> bool {
    *o == Options::default()
}

#[derive(Debug, Error)]
pub enum ProblemError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("malformed CSV at line {line}: {message}")]
    Csv { line: u64, message: String },
    #[error("matrix {field}: {source}")]
    Matrix {
        field: &'static str,
        source: DecisionError,
    },
    #[error("matrices A and B differ in size: {a} vs {b}")]
    SizeMismatch { a: usize, b: usize },
    #[error("tolerance {0} must be a non-negative finite number")]
    BadTolerance(f64),
}

impl From<serde_json::Error> for ProblemError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends its own " at line L column C"
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        ProblemError::Json {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

/// A validated problem. Without `B` it is a single-criterion problem.
#[derive(Debug, Clone)]
pub struct Problem {
    a: ComparisonMatrix,
    b: Option<ComparisonMatrix>,
    tol: Tolerance,
    log: bool,
}

impl Problem {
    /// `tol_override` (e.g. from the environment) wins over the file option.
    pub fn from_file(file: ProblemFile, tol_override: Option<f64>) -> Result<Self, ProblemError> {
        let log = file.log;
        let slack = tol_override
            .or(file.options.tolerance)
            .unwrap_or(Tolerance::DEFAULT_LOG);
        if !(slack.is_finite() && slack >= 0.0) {
            return Err(ProblemError::BadTolerance(slack));
        }
        let tol = Tolerance::with_log(slack);
        let opts = ValidateOptions {
            repair: file.options.repair,
        };
        let decode = |rows: Vec<Vec<Entry>>| -> Vec<Vec<f64>> {
            rows.into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|e| if log { e.0.exp() } else { e.0 })
                        .collect()
                })
                .collect()
        };
        let a = ComparisonMatrix::validate_with(decode(file.a), file.labels.clone(), &tol, opts)
            .map_err(|source| ProblemError::Matrix { field: "A", source })?;
        let b = match file.b {
            Some(rows) => {
                let rows = decode(rows);
                if rows.len() != a.n() {
                    return Err(ProblemError::SizeMismatch {
                        a: a.n(),
                        b: rows.len(),
                    });
                }
                Some(
                    ComparisonMatrix::validate_with(rows, Some(a.labels().to_vec()), &tol, opts)
                        .map_err(|source| ProblemError::Matrix { field: "B", source })?,
                )
            }
            None => None,
        };
        Ok(Problem { a, b, tol, log })
    }

    pub fn from_json(text: &str, tol_override: Option<f64>) -> Result<Self, ProblemError> {
        Self::from_file(serde_json::from_str(text)?, tol_override)
    }

    /// One matrix, comma separated, with an optional header row of labels.
    pub fn from_csv(text: &str, tol_override: Option<f64>) -> Result<Self, ProblemError> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .flexible(true)
            .from_reader(text.as_bytes());
        let mut labels = None;
        let mut rows = Vec::new();
        for (idx, record) in reader.records().enumerate() {
            let record = record.map_err(|e| ProblemError::Csv {
                line: e.position().map_or(0, |p| p.line()),
                message: e.to_string(),
            })?;
            let line = record.position().map_or(idx as u64 + 1, |p| p.line());
            let parsed: Option<Vec<f64>> = record.iter().map(parse_entry).collect();
            match parsed {
                Some(row) => rows.push(row.into_iter().map(Entry).collect()),
                None if idx == 0 => labels = Some(record.iter().map(str::to_string).collect()),
                None => {
                    let (col, bad) = record
                        .iter()
                        .enumerate()
                        .find(|(_, f)| parse_entry(f).is_none())
                        .expect("some field failed");
                    return Err(ProblemError::Csv {
                        line,
                        message: format!("field {} ({bad:?}) is not a number", col + 1),
                    });
                }
            }
        }
        let file = ProblemFile {
            labels,
            a: rows,
            b: None,
            options: Options::default(),
            log: false,
        };
        Self::from_file(file, tol_override)
    }

    pub fn load(path: &Path, csv: bool, tol_override: Option<f64>) -> Result<Self, ProblemError> {
        let text = std::fs::read_to_string(path).map_err(|source| ProblemError::Io {
            path: path.display().to_string(),
            source,
        })?;
        if csv {
            Self::from_csv(&text, tol_override)
        } else {
            Self::from_json(&text, tol_override)
        }
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn labels(&self) -> &[String] {
        self.a.labels()
    }

    pub fn a(&self) -> &ComparisonMatrix {
        &self.a
    }

    pub fn b(&self) -> Option<&ComparisonMatrix> {
        self.b.as_ref()
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }

    /// Outputs are reported as natural logs.
    pub fn log_output(&self) -> bool {
        self.log
    }

    pub fn set_log_output(&mut self, log: bool) {
        self.log = log;
    }

    /// The bi-criteria rating; a single-matrix problem pairs `A` with itself.
    pub fn rating(&self) -> Result<BicriteriaRating, DecisionError> {
        rate_bicriteria(&self.a, self.b.as_ref().unwrap_or(&self.a), &self.tol)
    }

    /// The validated problem as a file, in the max-times domain.
    pub fn to_file(&self) -> ProblemFile {
        let rows = |m: &ComparisonMatrix| {
            m.values()
                .iter()
                .map(|r| r.iter().map(|&v| Entry(v)).collect())
                .collect()
        };
        ProblemFile {
            labels: Some(self.labels().to_vec()),
            a: rows(&self.a),
            b: self.b.as_ref().map(rows),
            options: Options {
                tolerance: (self.tol.log != Tolerance::DEFAULT_LOG).then_some(self.tol.log),
                repair: false,
            },
            log: false,
        }
    }
}
