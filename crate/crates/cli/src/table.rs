use std::io::Write;

use serde_json::{Map, Value};

use subspace_cpd::calibration::ResultEnvelope;
use subspace_cpd::io::fmt_sig;

use crate::config::Format;
use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(usize),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => fmt_sig(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => round_number(*x),
            Cell::Int(i) => Value::from(*i),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

/// 9 significant digits; non-finite values become strings since JSON has
/// no representation for them.
fn round_number(x: f64) -> Value {
    let s = fmt_sig(x);
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Value::from(v),
        _ => Value::from(s),
    }
}

/// Result rows plus any extra JSON-only sections.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Emitted next to `rows` in JSON and in the header line of CSV output.
    pub extra: Map<String, Value>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write<W: Write>(&self, mut out: W, format: Format, config: Value) -> Result<(), CliError> {
        match format {
            Format::Csv => {
                let mut header = serde_json::to_value(ResultEnvelope::new(config, ()))
                    .expect("envelope serializes");
                header.as_object_mut().expect("object").remove("result");
                if !self.extra.is_empty() {
                    header["extra"] = round_all(Value::Object(self.extra.clone()));
                }
                writeln!(out, "# {header}")?;
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for r in &self.rows {
                    w.write_record(r.iter().map(Cell::csv))?;
                }
                w.flush()?;
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let obj: Map<String, Value> = self
                            .columns
                            .iter()
                            .zip(r)
                            .map(|(c, v)| (c.to_string(), v.json()))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                let mut result = round_all(Value::Object(self.extra.clone()));
                result["rows"] = Value::Array(rows);
                serde_json::to_writer_pretty(&mut out, &ResultEnvelope::new(config, result))
                    .map_err(|e| CliError::Runtime(e.to_string()))?;
                writeln!(out)?;
            }
        }
        Ok(())
    }
}

/// Rounds every float inside `v` to 9 significant digits.
pub fn round_all(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => round_number(n.as_f64().expect("f64")),
        Value::Array(a) => Value::Array(a.into_iter().map(round_all).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_all(v))).collect()),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(&["name", "value", "n", "missing"]);
        t.push(vec!["a".into(), Cell::Num(1.0 / 3.0), Cell::Int(7), Cell::Empty]);
        t.extra.insert("ratio".into(), Value::from(1.0 / 7.0));
        t
    }

    #[test]
    fn csv_has_header_line_and_fixed_precision() {
        let mut buf = Vec::new();
        sample().write(&mut buf, Format::Csv, serde_json::json!({"k": 3})).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        let meta: Value = serde_json::from_str(lines.next().unwrap().strip_prefix("# ").unwrap()).unwrap();
        assert_eq!(meta["config"]["k"], 3);
        assert_eq!(meta["extra"]["ratio"], 0.142857143);
        assert_eq!(lines.next().unwrap(), "name,value,n,missing");
        assert_eq!(lines.next().unwrap(), "a,0.333333333,7,");
    }

    #[test]
    fn json_rows_are_objects() {
        let mut buf = Vec::new();
        sample().write(&mut buf, Format::Json, Value::Null).unwrap();
        let v: Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["tool"], "subspace-cpd");
        assert_eq!(v["result"]["rows"][0]["value"], 0.333333333);
        assert_eq!(v["result"]["rows"][0]["missing"], Value::Null);
        assert_eq!(v["result"]["ratio"], 0.142857143);
    }

    #[test]
    fn non_finite_numbers_survive_json() {
        assert_eq!(round_number(f64::INFINITY), Value::from("inf"));
    }
}
