//! The uniform result record and its renderings. Numbers are always
//! decimal strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::args::Format;

pub const OPEN_NOTE: &str = "formula value; enumerativity open";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Integral,
    Oracle,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Integral => "integral",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    pub fn equal(name: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        Check { name: name.into(), pass: lhs == rhs, lhs, rhs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeRow {
    pub shape: String,
    pub red: String,
    pub blue: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub problem: BTreeMap<String, String>,
    pub value: String,
    pub regime: Option<String>,
    pub proven: bool,
    pub method: Method,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shapes: Option<Vec<ShapeRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fillings: Option<Vec<String>>,
}

impl Report {
    pub fn new(problem: &[(&str, String)], value: impl ToString, method: Method) -> Self {
        Report {
            problem: problem.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            value: value.to_string(),
            regime: None,
            proven: true,
            method,
            checks: Vec::new(),
            note: None,
            shapes: None,
            fillings: None,
        }
    }

    /// Marks the value as unproven and attaches the standard note.
    pub fn set_proven(&mut self, proven: bool) {
        self.proven = proven;
        self.note = (!proven).then(|| OPEN_NOTE.to_string());
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Plain => self.plain(),
            Format::Csv => csv_table(&["field", "value"], &self.fields()),
            Format::Markdown => markdown_table(&["field", "value"], &self.fields()),
        }
    }

    fn problem_line(&self) -> String {
        self.problem.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        let star = if self.proven { "" } else { "*" };
        writeln!(out, "problem: {}", self.problem_line()).unwrap();
        writeln!(out, "value: {}{star}", self.value).unwrap();
        if let Some(regime) = &self.regime {
            writeln!(out, "regime: {regime}").unwrap();
        }
        writeln!(out, "proven: {}", self.proven).unwrap();
        writeln!(out, "method: {}", self.method.as_str()).unwrap();
        if let Some(note) = &self.note {
            writeln!(out, "note: {note}").unwrap();
        }
        if let Some(shapes) = &self.shapes {
            writeln!(out, "shapes:").unwrap();
            for s in shapes {
                writeln!(out, "  [{}] red={} blue={}", s.shape, s.red, s.blue).unwrap();
            }
        }
        if let Some(fillings) = &self.fillings {
            for (i, f) in fillings.iter().enumerate() {
                writeln!(out, "filling {}:", i + 1).unwrap();
                for line in f.lines() {
                    writeln!(out, "  {line}").unwrap();
                }
            }
        }
        for c in &self.checks {
            writeln!(out, "{}", plain_check(c)).unwrap();
        }
        out
    }

    fn fields(&self) -> Vec<Vec<String>> {
        let mut rows = Vec::new();
        for (k, v) in &self.problem {
            rows.push(vec![format!("problem.{k}"), v.clone()]);
        }
        rows.push(vec!["value".into(), self.value.clone()]);
        rows.push(vec!["regime".into(), self.regime.clone().unwrap_or_default()]);
        rows.push(vec!["proven".into(), self.proven.to_string()]);
        rows.push(vec!["method".into(), self.method.as_str().into()]);
        if let Some(note) = &self.note {
            rows.push(vec!["note".into(), note.clone()]);
        }
        for s in self.shapes.iter().flatten() {
            rows.push(vec![format!("shape[{}]", s.shape), format!("red={} blue={}", s.red, s.blue)]);
        }
        for (i, f) in self.fillings.iter().flatten().enumerate() {
            rows.push(vec![format!("filling.{}", i + 1), f.trim_end().replace('\n', " / ")]);
        }
        for c in &self.checks {
            let status = if c.pass { "pass" } else { "FAIL" };
            rows.push(vec![format!("check.{}", c.name), format!("{status}: {} vs {}", c.lhs, c.rhs)]);
        }
        rows
    }
}

pub fn plain_check(c: &Check) -> String {
    if c.pass {
        format!("check {}: pass ({})", c.name, c.lhs)
    } else {
        format!("check {}: FAIL ({} != {})", c.name, c.lhs, c.rhs)
    }
}

/// Pretty JSON with object keys in sorted order, so that any parser that
/// re-renders the document reproduces it exactly.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let tree = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&tree).expect("serializable");
    s.push('\n');
    s
}

pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let cell = |s: &str| s.replace('|', "\\|");
    let mut out = String::new();
    writeln!(out, "| {} |", header.iter().map(|h| cell(h)).collect::<Vec<_>>().join(" | ")).unwrap();
    writeln!(out, "|{}", header.iter().map(|_| " --- |").collect::<String>()).unwrap();
    for row in rows {
        writeln!(out, "| {} |", row.iter().map(|c| cell(c)).collect::<Vec<_>>().join(" | ")).unwrap();
    }
    out
}

/// Whitespace-aligned columns.
pub fn plain_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        padded.join("  ")
    };
    let mut out = String::new();
    writeln!(out, "{}", line(header.to_vec())).unwrap();
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
    }
    out
}
