use std::io::Write;

use serde_json::{Map, Number};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(u64),
    Text(String),
}

impl Value {
    fn csv_field(&self) -> String {
        match self {
            // Shortest round-trip representation: deterministic and lossless.
            Value::Num(x) => x.to_string(),
            Value::Int(n) => n.to_string(),
            Value::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Value::Num(x) => Number::from_f64(*x).map_or(serde_json::Value::Null, serde_json::Value::Number),
            Value::Int(n) => serde_json::Value::from(*n),
            Value::Text(s) => serde_json::Value::from(s.as_str()),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Value::Num(x) => Some(*x),
            Value::Int(n) => Some(*n as f64),
            Value::Text(_) => None,
        }
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<u64> for Value {
    fn from(n: u64) -> Self {
        Value::Int(n)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as u64)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_owned())
    }
}

/// Rectangular result table with a fixed column order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Value>> {
        let i = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| &r[i]).collect())
    }

    /// Numeric column; non-numeric cells become NaN.
    pub fn column_f64(&self, name: &str) -> Option<Vec<f64>> {
        Some(self.column(name)?.into_iter().map(|v| v.as_f64().unwrap_or(f64::NAN)).collect())
    }

    /// CSV with `# key: value` comment lines ahead of the header.
    pub fn write_csv<W: Write>(&self, out: &mut W, metadata: &[(&str, String)]) -> Result<()> {
        for (k, v) in metadata {
            writeln!(out, "# {k}: {v}")?;
        }
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Value::csv_field)).map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }

    /// JSON array of row objects; `metadata` keys are added to every row.
    pub fn write_json<W: Write>(&self, out: &mut W, metadata: &[(&str, String)]) -> Result<()> {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (k, v) in metadata {
                    obj.insert((*k).to_owned(), serde_json::Value::from(v.as_str()));
                }
                for (c, v) in self.columns.iter().zip(row) {
                    obj.insert((*c).to_owned(), v.json());
                }
                serde_json::Value::Object(obj)
            })
            .collect();
        serde_json::to_writer_pretty(&mut *out, &rows).map_err(|e| Error::Io(e.to_string()))?;
        writeln!(out)?;
        Ok(())
    }
}
