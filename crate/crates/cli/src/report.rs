//! Command output in the three formats, plus run manifests.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// The result of one command. `json` is canonical: its compact encoding is
/// what the digest covers.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
}

/// A table whose rows become JSON objects keyed by column name.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn json_rows(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> = self.columns.iter().cloned().zip(r.iter().cloned()).collect();
                Value::Object(obj)
            })
            .collect()
    }

    /// Aligned columns; numbers are right-aligned.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(cell).collect()).collect();
        let mut width: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for r in &cells {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let numeric: Vec<bool> = (0..self.columns.len())
            .map(|j| !self.rows.is_empty() && self.rows.iter().all(|r| r[j].is_number()))
            .collect();
        let line = |r: &[String]| {
            let parts: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    if numeric[j] {
                        format!("{c:>w$}", w = width[j])
                    } else {
                        format!("{c:<w$}", w = width[j])
                    }
                })
                .collect();
            parts.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&self.columns);
        for r in &cells {
            out += &line(r);
        }
        out
    }

    pub fn to_csv(&self) -> Result<String, Failure> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).map_err(io)?;
        for r in &self.rows {
            w.write_record(r.iter().map(cell)).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Failure::Usage(e.to_string()))
    }
}

fn io(e: csv::Error) -> Failure {
    Failure::Usage(e.to_string())
}

pub fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

impl Report {
    /// `meta` must be an object; the table rows go under `rows`.
    pub fn tabular(meta: Value, table: &Table, heading: Option<String>) -> Result<Report, Failure> {
        let mut json = meta;
        json["rows"] = Value::Array(table.json_rows());
        let mut text = heading.map(|h| h + "\n").unwrap_or_default();
        text += &table.to_text();
        Ok(Report {
            json,
            text,
            csv: Some(table.to_csv()?),
        })
    }

    pub fn plain(json: Value, text: String) -> Report {
        Report { json, text, csv: None }
    }

    pub fn render(&self, format: Format) -> Result<String, Failure> {
        match format {
            Format::Text => {
                let mut t = self.text.clone();
                if !t.ends_with('\n') {
                    t.push('\n');
                }
                Ok(t)
            }
            Format::Json => Ok(serde_json::to_string_pretty(&self.json).expect("json") + "\n"),
            Format::Csv => self
                .csv
                .clone()
                .ok_or_else(|| Failure::Usage("this output has no csv form; use text or json".into())),
        }
    }

    pub fn digest(&self) -> String {
        digest_of(&self.json)
    }
}

/// SHA-256 of the compact encoding. Object keys are sorted, so equal values
/// give equal digests.
pub fn digest_of(v: &Value) -> String {
    let bytes = serde_json::to_vec(v).expect("json");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub wall_time_secs: f64,
    pub digest: String,
    pub version: String,
}
