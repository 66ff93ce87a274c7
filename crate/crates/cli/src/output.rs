//! Tabular results and their JSON, CSV and text renderings.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Map, Value};

/// Version of the JSON layout, written as the top-level `"schema"` field.
pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format '{other}' (expected json, csv or text)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        })
    }
}

/// Integers that fit in an `i64` become JSON numbers; larger ones are
/// written as decimal strings so no precision is lost.
pub fn int_value(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(i) => Value::from(i),
        Err(_) => Value::String(v.to_string()),
    }
}

/// A command result: named columns and rows of JSON scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub command: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(command: &str, columns: &[&'static str]) -> Table {
        Table {
            command: command.to_string(),
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .map(|c| c.to_string())
                    .zip(row.iter().cloned())
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut top = Map::new();
        top.insert("schema".into(), Value::from(SCHEMA_VERSION));
        top.insert("command".into(), Value::from(self.command.clone()));
        top.insert("rows".into(), Value::Array(rows));
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(cell)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(cell).collect()).collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = |fields: Vec<&str>| {
            let padded: Vec<String> = fields
                .iter()
                .zip(&widths)
                .map(|(f, w)| format!("{f:<w$}"))
                .collect();
            out.push_str(padded.join("  ").trim_end());
            out.push('\n');
        };
        line(self.columns.clone());
        for row in &cells {
            line(row.iter().map(String::as_str).collect());
        }
        out
    }
}

/// Plain rendering of a scalar for CSV and text output.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new("demo", &["x", "label"]);
        t.push(vec![int_value(&BigInt::from(-3)), Value::from("a,b")]);
        t.push(vec![int_value(&(BigInt::from(i64::MAX) + 1)), Value::Null]);
        t
    }

    #[test]
    fn json_carries_schema_and_big_strings() {
        let v: Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["command"], "demo");
        assert_eq!(v["rows"][0]["x"], -3);
        assert_eq!(v["rows"][1]["x"], "9223372036854775808");
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(sample().to_csv(), "x,label\n-3,\"a,b\"\n9223372036854775808,\n");
    }

    #[test]
    fn text_aligns_columns() {
        let t = sample().to_text();
        let lines: Vec<_> = t.lines().collect();
        assert_eq!(lines[0], "x                    label");
        assert_eq!(lines[1], "-3                   a,b");
    }

    #[test]
    fn format_parsing() {
        assert_eq!("csv".parse::<Format>(), Ok(Format::Csv));
        assert!("xml".parse::<Format>().is_err());
    }
}
