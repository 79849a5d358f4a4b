//! Knot tables in CSV or JSON.
//!
//! CSV needs a header with `name`, `variable` and `polynomial` columns and
//! may add `crossings`. JSON is an array of objects
//! `{"name": ..., "crossings": ..., "conway": ...}` or with `"alexander"`
//! in place of `"conway"`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use conway_core::{alexander_to_conway, AlexanderPolynomial, ConwayPolynomial};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;
use thiserror::Error;

use crate::parse::{parse_alexander, parse_conway, InputError, Variable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// Guesses from the file extension.
    pub fn from_path(path: &Path) -> Option<Format> {
        path.extension()?.to_str()?.parse().ok()
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown table format {other:?}, expected csv or json")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Conway,
    Alexander,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotPolynomial {
    Conway(ConwayPolynomial),
    Alexander(AlexanderPolynomial),
}

/// One validated table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub crossings: Option<u32>,
    /// The polynomial text as given.
    pub input: String,
    pub polynomial: KnotPolynomial,
    /// Conway form, converted from the Alexander polynomial when needed.
    pub conway: ConwayPolynomial,
}

impl KnotRecord {
    pub fn new(name: &str, crossings: Option<u32>, var: Variable, text: &str) -> Result<Self, InputError> {
        let polynomial = match var {
            Variable::Z => KnotPolynomial::Conway(parse_conway(text)?),
            Variable::T => KnotPolynomial::Alexander(parse_alexander(text)?),
        };
        let conway = match &polynomial {
            KnotPolynomial::Conway(c) => c.clone(),
            KnotPolynomial::Alexander(a) => alexander_to_conway(a),
        };
        Ok(KnotRecord {
            name: name.to_string(),
            crossings,
            input: text.trim().to_string(),
            polynomial,
            conway,
        })
    }

    pub fn source(&self) -> Source {
        match self.polynomial {
            KnotPolynomial::Conway(_) => Source::Conway,
            KnotPolynomial::Alexander(_) => Source::Alexander,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProblemKind {
    /// Missing fields, bad crossing numbers and the like.
    Row,
    /// The polynomial text does not parse.
    Syntax,
    /// The polynomial parses but is not a valid Conway or Alexander polynomial.
    Form,
}

/// A rejected row, by 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub line: usize,
    pub kind: ProblemKind,
    pub message: String,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl Problem {
    fn row(line: usize, message: impl Into<String>) -> Self {
        Problem {
            line,
            kind: ProblemKind::Row,
            message: message.into(),
        }
    }

    fn input(line: usize, err: InputError) -> Self {
        let kind = match err {
            InputError::Syntax(_) => ProblemKind::Syntax,
            InputError::Form(_) => ProblemKind::Form,
        };
        Problem {
            line,
            kind,
            message: err.to_string(),
        }
    }
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    UnknownFormat(String),
    #[error("CSV header must name the columns name, variable and polynomial; missing {0}")]
    Header(&'static str),
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("{0}")]
    Strict(Problem),
}

/// Good records plus the rows that were skipped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub records: Vec<KnotRecord>,
    pub problems: Vec<Problem>,
}

impl Table {
    fn push(&mut self, strict: bool, row: Result<KnotRecord, Problem>) -> Result<(), TableError> {
        match row {
            Ok(record) => self.records.push(record),
            Err(problem) if strict => return Err(TableError::Strict(problem)),
            Err(problem) => self.problems.push(problem),
        }
        Ok(())
    }
}

/// Reads a table from disk. Without an explicit `format` the extension decides.
pub fn load_table(path: &Path, format: Option<Format>, strict: bool) -> Result<Table, TableError> {
    let format = match format.or_else(|| Format::from_path(path)) {
        Some(f) => f,
        None => {
            return Err(TableError::UnknownFormat(format!(
                "cannot tell the format of {} from its extension; pass --format",
                path.display()
            )))
        }
    };
    let text = std::fs::read_to_string(path).map_err(|source| TableError::Io {
        path: path.display().to_string(),
        source,
    })?;
    read_table(&text, format, strict)
}

pub fn read_table(text: &str, format: Format, strict: bool) -> Result<Table, TableError> {
    match format {
        Format::Csv => read_csv(text, strict),
        Format::Json => read_json(text, strict),
    }
}

fn read_csv(text: &str, strict: bool) -> Result<Table, TableError> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader.headers()?.clone();
    let column = |name: &'static str| {
        headers
            .iter()
            .position(|h| h.eq_ignore_ascii_case(name))
            .ok_or(TableError::Header(name))
    };
    let (name_at, var_at, poly_at) = (column("name")?, column("variable")?, column("polynomial")?);
    let crossings_at = column("crossings").ok();

    let mut table = Table::default();
    for row in reader.records() {
        let row = row?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        let parsed = (|| {
            let field = |at: usize, what: &str| {
                row.get(at)
                    .filter(|v| !v.is_empty())
                    .ok_or_else(|| Problem::row(line, format!("missing {what}")))
            };
            let name = field(name_at, "name")?;
            let var: Variable = field(var_at, "variable")?.parse().map_err(|e: String| Problem::row(line, e))?;
            let text = field(poly_at, "polynomial")?;
            let crossings = match crossings_at.and_then(|at| row.get(at)).filter(|v| !v.is_empty()) {
                Some(v) => Some(
                    v.parse::<u32>()
                        .map_err(|_| Problem::row(line, format!("crossing number {v:?} is not a nonnegative integer")))?,
                ),
                None => None,
            };
            KnotRecord::new(name, crossings, var, text).map_err(|e| Problem::input(line, e))
        })();
        table.push(strict, parsed)?;
    }
    Ok(table)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonRow {
    name: String,
    #[serde(default)]
    crossings: Option<u32>,
    #[serde(default)]
    conway: Option<String>,
    #[serde(default)]
    alexander: Option<String>,
}

fn read_json(text: &str, strict: bool) -> Result<Table, TableError> {
    let rows: Vec<&RawValue> = serde_json::from_str(text).map_err(|e| TableError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut table = Table::default();
    for raw in rows {
        let offset = raw.get().as_ptr() as usize - text.as_ptr() as usize;
        let line = text[..offset].matches('\n').count() + 1;
        let parsed = serde_json::from_str::<JsonRow>(raw.get())
            .map_err(|e| Problem::row(line, e.to_string()))
            .and_then(|row| {
                let (var, poly) = match (&row.conway, &row.alexander) {
                    (Some(c), None) => (Variable::Z, c),
                    (None, Some(a)) => (Variable::T, a),
                    _ => return Err(Problem::row(line, "exactly one of \"conway\" and \"alexander\" is required")),
                };
                KnotRecord::new(&row.name, row.crossings, var, poly).map_err(|e| Problem::input(line, e))
            });
        table.push(strict, parsed)?;
    }
    Ok(table)
}
