use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Number, Value};

use crate::args::Format;

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Int(i64),
    Real(f64),
    Text(String),
    Bool(bool),
    Object(BTreeMap<String, Field>),
    Null,
}

impl Field {
    fn to_json(&self) -> Value {
        match self {
            Field::Int(i) => Value::from(*i),
            Field::Real(x) => Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Field::Text(s) => Value::from(s.as_str()),
            Field::Bool(b) => Value::from(*b),
            Field::Object(m) => Value::Object(m.iter().map(|(k, v)| (k.clone(), v.to_json())).collect()),
            Field::Null => Value::Null,
        }
    }

    fn to_text(&self) -> String {
        match self {
            Field::Int(i) => i.to_string(),
            Field::Real(x) => fmt_real(*x),
            Field::Text(s) => s.clone(),
            Field::Bool(b) => b.to_string(),
            Field::Object(m) => m
                .iter()
                .map(|(k, v)| format!("{k}={}", v.to_text()))
                .collect::<Vec<_>>()
                .join(" "),
            Field::Null => "-".into(),
        }
    }
}

impl From<i64> for Field {
    fn from(v: i64) -> Self {
        Field::Int(v)
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as i64)
    }
}

impl From<u32> for Field {
    fn from(v: u32) -> Self {
        Field::Int(v as i64)
    }
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Real(v)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.into())
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Text(v)
    }
}

impl<T: Into<Field>> From<Option<T>> for Field {
    fn from(v: Option<T>) -> Self {
        v.map_or(Field::Null, Into::into)
    }
}

/// Shortest round-trip form, switching to exponent notation for very
/// small or very large magnitudes.
pub fn fmt_real(x: f64) -> String {
    let a = x.abs();
    if x != 0.0 && (a < 1e-4 || a >= 1e16) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

pub type Row = BTreeMap<String, Field>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A command's full output: echoed parameters, result rows and a verdict.
#[derive(Debug, Clone)]
pub struct Document {
    pub command: &'static str,
    pub parameters: Row,
    /// Column order for text and CSV output.
    pub columns: Vec<&'static str>,
    pub results: Vec<Row>,
    pub verdict: Verdict,
    /// Extra lines printed after the table in text mode.
    pub notes: Vec<String>,
    /// Text mode prints only this line when set.
    pub plain: Option<String>,
    pub csv: bool,
}

impl Document {
    pub fn new(command: &'static str, columns: &[&'static str]) -> Self {
        Self {
            command,
            parameters: Row::new(),
            columns: columns.to_vec(),
            results: Vec::new(),
            verdict: Verdict::Pass,
            notes: Vec::new(),
            plain: None,
            csv: false,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Field>) {
        self.parameters.insert(key.into(), value.into());
    }

    pub fn push(&mut self, row: Row) {
        self.results.push(row);
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> Value {
        let to_obj = |row: &Row| Field::Object(row.clone()).to_json();
        let mut top = Map::new();
        top.insert("command".into(), Value::from(self.command));
        top.insert("parameters".into(), to_obj(&self.parameters));
        top.insert("results".into(), Value::Array(self.results.iter().map(to_obj).collect()));
        top.insert("verdict".into(), serde_json::to_value(self.verdict).expect("plain enum"));
        Value::Object(top)
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).map_err(|e| e.to_string())?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv if !self.csv => {
                Err(format!("csv output is only available for `table`, not `{}`", self.command))
            }
            Format::Csv => self.render_csv(),
            Format::Text => Ok(self.render_text()),
        }
    }

    fn render_csv(&self) -> Result<String, String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).map_err(|e| e.to_string())?;
        for row in &self.results {
            let cells: Vec<String> = self
                .columns
                .iter()
                .map(|c| match row.get(*c) {
                    None | Some(Field::Null) => String::new(),
                    Some(f) => f.to_text(),
                })
                .collect();
            w.write_record(&cells).map_err(|e| e.to_string())?;
        }
        let bytes = w.into_inner().map_err(|e| e.to_string())?;
        String::from_utf8(bytes).map_err(|e| e.to_string())
    }

    fn render_text(&self) -> String {
        if let Some(plain) = &self.plain {
            return format!("{plain}\n");
        }
        let cells: Vec<Vec<String>> = self
            .results
            .iter()
            .map(|row| {
                self.columns
                    .iter()
                    .map(|c| row.get(*c).map_or_else(|| "-".into(), Field::to_text))
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        let line = |out: &mut String, items: &[String]| {
            let padded: Vec<String> =
                items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        let header: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        line(&mut out, &header);
        for row in &cells {
            line(&mut out, row);
        }
        for note in &self.notes {
            let _ = writeln!(out, "{note}");
        }
        let verdict = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
        };
        let _ = writeln!(out, "verdict: {verdict}");
        out
    }
}
