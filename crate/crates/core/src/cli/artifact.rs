//! Output artifacts: a config header, scalar metrics and named tables,
//! rendered as CSV or JSON.

use serde_json::{json, Map, Value};
use std::fmt::Write as _;
use std::io::{self, Write};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Text(String),
    Bool(bool),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Self::Float(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Self::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Self::Int(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Self::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Self::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Self::Text(v)
    }
}

/// 17 significant digits, which round-trips every `f64`.
pub fn format_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Self::Float(v) => format_float(*v),
            Self::Int(v) => v.to_string(),
            Self::Bool(v) => v.to_string(),
            Self::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Self::Float(v) => json!(v),
            Self::Int(v) => json!(v),
            Self::Bool(v) => json!(v),
            Self::Text(s) => json!(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Artifact {
    pub command: String,
    pub config: Vec<(String, Cell)>,
    pub metrics: Vec<(String, Cell)>,
    pub tables: Vec<Table>,
}

impl Artifact {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            config: Vec::new(),
            metrics: Vec::new(),
            tables: Vec::new(),
        }
    }

    pub fn config(&mut self, key: &str, v: impl Into<Cell>) -> &mut Self {
        self.config.push((key.into(), v.into()));
        self
    }

    pub fn metric(&mut self, key: &str, v: impl Into<Cell>) -> &mut Self {
        self.metrics.push((key.into(), v.into()));
        self
    }

    pub fn table(&mut self, t: Table) -> &mut Self {
        self.tables.push(t);
        self
    }

    pub fn metric_value(&self, key: &str) -> Option<&Cell> {
        self.metrics.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    /// CSV with `# key=value` header lines. Each table follows a
    /// `# table=<name>` line and a column header; tables are separated by a
    /// blank line. `timestamp` adds a `# generated_unix=` line.
    pub fn to_csv(&self, timestamp: Option<u64>) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# command={}", self.command);
        if let Some(t) = timestamp {
            let _ = writeln!(out, "# generated_unix={t}");
        }
        for (k, v) in &self.config {
            let _ = writeln!(out, "# {k}={}", v.csv());
        }
        for (k, v) in &self.metrics {
            let _ = writeln!(out, "# metric.{k}={}", v.csv());
        }
        for (i, t) in self.tables.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "# table={}", t.name);
            let _ = writeln!(out, "{}", t.columns.join(","));
            for row in &t.rows {
                let line: Vec<String> = row.iter().map(Cell::csv).collect();
                let _ = writeln!(out, "{}", line.join(","));
            }
        }
        out
    }

    pub fn to_json_value(&self, timestamp: Option<u64>) -> Value {
        let pairs = |v: &[(String, Cell)]| -> Value {
            Value::Object(v.iter().map(|(k, c)| (k.clone(), c.json())).collect::<Map<_, _>>())
        };
        let mut tables = Map::new();
        for t in &self.tables {
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
                .collect();
            tables.insert(t.name.clone(), json!({ "columns": t.columns, "rows": rows }));
        }
        let mut root = Map::new();
        root.insert("command".into(), json!(self.command));
        if let Some(t) = timestamp {
            root.insert("generated_unix".into(), json!(t));
        }
        root.insert("config".into(), pairs(&self.config));
        root.insert("metrics".into(), pairs(&self.metrics));
        root.insert("tables".into(), Value::Object(tables));
        Value::Object(root)
    }

    pub fn to_json(&self, timestamp: Option<u64>) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value(timestamp)).expect("artifact serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format, timestamp: Option<u64>) -> String {
        match format {
            Format::Csv => self.to_csv(timestamp),
            Format::Json => self.to_json(timestamp),
        }
    }

    pub fn write_to<W: Write>(&self, w: &mut W, format: Format, timestamp: Option<u64>) -> io::Result<()> {
        w.write_all(self.render(format, timestamp).as_bytes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Artifact {
        let mut a = Artifact::new("demo");
        a.config("n", 9usize).config("a", 2.0);
        a.metric("kappa", 1.0 / 3.0);
        let mut t = Table::new("profile", &["x", "value"]);
        t.push(vec![0.1.into(), (-2.5e-300).into()]);
        a.table(t);
        a
    }

    #[test]
    fn csv_layout() {
        let csv = sample().to_csv(None);
        let want = "# command=demo\n# n=9\n# a=2.0000000000000000e0\n# metric.kappa=3.3333333333333331e-1\n\
                    # table=profile\nx,value\n1.0000000000000001e-1,-2.5000000000000000e-300\n";
        assert_eq!(csv, want);
        assert!(sample().to_csv(Some(7)).contains("# generated_unix=7\n"));
    }

    #[test]
    fn floats_round_trip() {
        for v in [0.1, 1.0 / 3.0, 7.365039583712829, -2.5e-300, 1e300, f64::MIN_POSITIVE] {
            assert_eq!(format_float(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn json_round_trip() {
        let a = sample();
        let v: Value = serde_json::from_str(&a.to_json(None)).unwrap();
        assert_eq!(v["metrics"]["kappa"].as_f64().unwrap(), 1.0 / 3.0);
        assert_eq!(v["tables"]["profile"]["rows"][0][1].as_f64().unwrap(), -2.5e-300);
        assert!(v.get("generated_unix").is_none());
    }
}
