//! Machine-readable result records and their plain, JSON-lines and CSV forms.

use std::fmt::Write as _;
use std::io::{self, Write};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: &str = "n,d,k,mu_or_lambda,result,method";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Theorem1,
    Theorem2,
    Series,
    Count,
    Ternary,
    OracleStrip,
    OracleCayleySylvester,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Theorem1 => "theorem1",
            Method::Theorem2 => "theorem2",
            Method::Series => "series",
            Method::Count => "count",
            Method::Ternary => "ternary",
            Method::OracleStrip => "oracle-strip",
            Method::OracleCayleySylvester => "oracle-cayley-sylvester",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: usize,
    pub d: u32,
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<i64>>,
    pub result: String,
    pub elapsed_ms: f64,
    pub method: Method,
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

impl OutputRecord {
    pub fn csv_row(&self) -> String {
        let weight = self
            .lambda
            .as_deref()
            .or(self.mu.as_deref())
            .map(|w| format!("\"{}\"", join(w)))
            .unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            self.n,
            self.d,
            self.k,
            weight,
            self.result,
            self.method.tag()
        )
    }
}

/// Writes records in the requested format. Plain output shows only results,
/// prefixed by `k` when there is more than one record.
pub fn write_records<W: Write>(
    out: &mut W,
    format: Format,
    records: &[OutputRecord],
    keyed: bool,
) -> io::Result<()> {
    match format {
        Format::Plain => {
            for r in records {
                if keyed {
                    writeln!(out, "{} {}", r.k, r.result)?;
                } else {
                    writeln!(out, "{}", r.result)?;
                }
            }
        }
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                writeln!(out, "{}", r.csv_row())?;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct OrbitRecord<'a> {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<&'a [i64]>,
    weight: &'a [i64],
    coefficient: i64,
}

pub fn write_orbit<W: Write>(
    out: &mut W,
    format: Format,
    n: usize,
    lambda: Option<&[i64]>,
    terms: &[nary_core::SignedOrbitTerm],
) -> io::Result<()> {
    match format {
        Format::Plain => {
            for t in terms {
                writeln!(out, "{t}")?;
            }
        }
        Format::Json => {
            for t in terms {
                let rec = OrbitRecord {
                    n,
                    lambda,
                    weight: t.dominant.components(),
                    coefficient: t.coefficient,
                };
                serde_json::to_writer(&mut *out, &rec)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,lambda,weight,coefficient")?;
            let lambda = lambda
                .map(|l| format!("\"{}\"", join(l)))
                .unwrap_or_default();
            for t in terms {
                let mut row = String::new();
                write!(
                    row,
                    "{n},{lambda},\"{}\",{}",
                    join(t.dominant.components()),
                    t.coefficient
                )
                .unwrap();
                writeln!(out, "{row}")?;
            }
        }
    }
    Ok(())
}
