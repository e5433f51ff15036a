//! Output formats for command reports.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use crate::kernel::{BasisKey, Family, LinComb, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

/// Rows for the tabular formats.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// What a subcommand produced.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub passed: bool,
    pub body: Value,
    pub table: Table,
    pub lines: Vec<String>,
    /// Cells of `table` that hold basis keys or vectors, for LaTeX.
    pub latex_columns: Vec<usize>,
}

impl Report {
    pub fn new(command: &str, passed: bool, body: Value, table: Table) -> Self {
        Report {
            command: command.to_string(),
            passed,
            body,
            table,
            lines: Vec::new(),
            latex_columns: Vec::new(),
        }
    }

    pub fn line(mut self, l: impl Into<String>) -> Self {
        self.lines.push(l.into());
        self
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => {
                let v = serde_json::json!({
                    "command": self.command,
                    "passed": self.passed,
                    "report": self.body,
                });
                let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
            Format::Latex => self.latex(),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        let _ = writeln!(out, "{}: {}", self.command, self.verdict());
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.table.headers).expect("in-memory write");
        for r in &self.table.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    fn latex(&self) -> String {
        let mut out = String::new();
        let cols = "l".repeat(self.table.headers.len().max(1));
        let _ = writeln!(out, "\\begin{{tabular}}{{{cols}}}");
        let _ = writeln!(out, "\\hline");
        let head: Vec<String> = self.table.headers.iter().map(|h| latex_text(h)).collect();
        let _ = writeln!(out, "{} \\\\", head.join(" & "));
        let _ = writeln!(out, "\\hline");
        for r in &self.table.rows {
            let cells: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if self.latex_columns.contains(&i) {
                        format!("${}$", latex_math(c))
                    } else {
                        latex_text(c)
                    }
                })
                .collect();
            let _ = writeln!(out, "{} \\\\", cells.join(" & "));
        }
        let _ = writeln!(out, "\\hline");
        let _ = writeln!(out, "\\end{{tabular}}");
        out
    }
}

fn latex_text(s: &str) -> String {
    s.replace('\\', "\\textbackslash{}")
        .replace('_', "\\_")
        .replace('&', "\\&")
        .replace('%', "\\%")
        .replace('#', "\\#")
}

fn family_tex(f: Family) -> &'static str {
    match f {
        Family::Phi => "\\varphi",
        Family::Eps => "\\varepsilon",
        Family::ModPhi => "\\phi",
        Family::ModGamma => "\\gamma",
        other => other.symbol(),
    }
}

pub fn key_tex(k: &BasisKey) -> String {
    format!("{}_{{{}}}", family_tex(k.family), k.index)
}

pub fn scalar_tex(c: &Scalar) -> String {
    c.to_string().replace("*r2", "\\sqrt{2}")
}

pub fn vector_tex(v: &LinComb<BasisKey>) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = v
        .iter()
        .map(|(k, c)| {
            if c.is_one() {
                key_tex(k)
            } else if c.as_rational().is_some() {
                format!("{} {}", scalar_tex(c), key_tex(k))
            } else {
                format!("({}) {}", scalar_tex(c), key_tex(k))
            }
        })
        .collect();
    terms.join(" + ")
}

/// Converts cells written with [`BasisKey`] display syntax.
fn latex_math(cell: &str) -> String {
    if let Ok(k) = cell.parse::<BasisKey>() {
        return key_tex(&k);
    }
    let mut v = LinComb::zero();
    for term in cell.split(" + ") {
        let (c, k) = match term.rsplit_once('*') {
            Some((c, k)) => (c.trim_matches(|ch| ch == '(' || ch == ')'), k),
            None => ("1", term),
        };
        match (c.parse::<Scalar>(), k.parse::<BasisKey>()) {
            (Ok(c), Ok(k)) => v.add_term(k, &c),
            _ => return latex_text(cell),
        }
    }
    vector_tex(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_cells() {
        assert_eq!(latex_math("phi_-1/2"), "\\varphi_{-1/2}");
        assert_eq!(latex_math("2*G_-2 + G_0"), "2 G_{-2} + G_{0}");
        assert_eq!(latex_math("(1/2*r2)*a_1/2"), "(1/2\\sqrt{2}) a_{1/2}");
        assert_eq!(latex_math("0"), "0");
    }

    #[test]
    fn csv_quotes_commas() {
        let mut t = Table::new(&["a", "b"]);
        t.push(vec!["x, y".into(), "1".into()]);
        let r = Report::new("t", true, Value::Null, t);
        assert_eq!(r.render(Format::Csv), "a,b\n\"x, y\",1\n");
    }
}
