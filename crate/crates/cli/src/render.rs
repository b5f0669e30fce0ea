//! Row types and the three output formats.
//!
//! CSV has a header row and never needs quoting: every field is a number, a
//! bare identifier, or a space-separated list of numbers. JSON is an array of
//! flat objects whose keys follow field order.

use fengrao_core::{Int, NumericalSemigroup};
use serde::{Deserialize, Serialize};

use crate::args::Format;

pub trait Record: Serialize {
    fn header(timing: bool) -> Vec<&'static str>;
    fn cells(&self) -> Vec<String>;
}

fn list(xs: &[Int]) -> String {
    xs.iter().map(Int::to_string).collect::<Vec<_>>().join(" ")
}

fn opt(x: Option<Int>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn elapsed(cells: &mut Vec<String>, ms: Option<f64>) {
    if let Some(ms) = ms {
        cells.push(format!("{ms:.3}"));
    }
}

fn with_timing(mut cols: Vec<&'static str>, timing: bool) -> Vec<&'static str> {
    if timing {
        cols.push("elapsed_ms");
    }
    cols
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorRow {
    pub x: Int,
    pub count: usize,
    pub divisors: Vec<Int>,
}

impl Record for DivisorRow {
    fn header(_: bool) -> Vec<&'static str> {
        vec!["x", "count", "divisors"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.x.to_string(),
            self.count.to_string(),
            list(&self.divisors),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceRow {
    pub r: usize,
    pub m: Int,
    pub delta: Int,
    #[serde(rename = "E")]
    pub e: Int,
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Record for DistanceRow {
    fn header(timing: bool) -> Vec<&'static str> {
        with_timing(vec!["r", "m", "delta", "E", "method"], timing)
    }

    fn cells(&self) -> Vec<String> {
        let mut c = vec![
            self.r.to_string(),
            self.m.to_string(),
            self.delta.to_string(),
            self.e.to_string(),
            self.method.clone(),
        ];
        elapsed(&mut c, self.elapsed_ms);
        c
    }
}

/// One row of `--method all`: the E value from each route and whether they agree.
/// `interval` is empty for semigroups not generated by an interval.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossCheckRow {
    pub r: usize,
    pub m: Int,
    pub delta: Int,
    #[serde(rename = "E")]
    pub e: Int,
    pub generic: Int,
    pub interval: Option<Int>,
    pub brute: Int,
    pub agree: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Record for CrossCheckRow {
    fn header(timing: bool) -> Vec<&'static str> {
        with_timing(
            vec![
                "r", "m", "delta", "E", "generic", "interval", "brute", "agree",
            ],
            timing,
        )
    }

    fn cells(&self) -> Vec<String> {
        let mut c = vec![
            self.r.to_string(),
            self.m.to_string(),
            self.delta.to_string(),
            self.e.to_string(),
            self.generic.to_string(),
            opt(self.interval),
            self.brute.to_string(),
            self.agree.to_string(),
        ];
        elapsed(&mut c, self.elapsed_ms);
        c
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridRow {
    pub a: Int,
    pub b: Int,
    pub r: usize,
    #[serde(rename = "E")]
    pub e: Int,
    pub rho: Int,
    pub e_equals_rho: bool,
    pub rho_predicted: bool,
}

impl Record for GridRow {
    fn header(_: bool) -> Vec<&'static str> {
        vec!["a", "b", "r", "E", "rho", "e_equals_rho", "rho_predicted"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.a.to_string(),
            self.b.to_string(),
            self.r.to_string(),
            self.e.to_string(),
            self.rho.to_string(),
            self.e_equals_rho.to_string(),
            self.rho_predicted.to_string(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmenableRow {
    pub index: usize,
    pub elements: Vec<Int>,
    pub shadow: Vec<Int>,
    pub nu: usize,
}

impl Record for AmenableRow {
    fn header(_: bool) -> Vec<&'static str> {
        vec!["index", "elements", "shadow", "nu"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.index.to_string(),
            list(&self.elements),
            list(&self.shadow),
            self.nu.to_string(),
        ]
    }
}

pub fn csv<R: Record>(rows: &[R], timing: bool) -> String {
    let mut out = R::header(timing).join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.cells().join(","));
        out.push('\n');
    }
    out
}

pub fn json<R: Record>(rows: &[R]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
    out.push('\n');
    out
}

/// Right-aligned columns with a rule under the header.
pub fn ascii_table<R: Record>(rows: &[R], timing: bool) -> String {
    let header: Vec<String> = R::header(timing).into_iter().map(String::from).collect();
    let body: Vec<Vec<String>> = rows.iter().map(Record::cells).collect();
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for cells in &body {
        for (w, c) in widths.iter_mut().zip(cells) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&header);
    let total = widths.iter().sum::<usize>() + 2 * widths.len().saturating_sub(1);
    out.push_str(&"-".repeat(total));
    out.push('\n');
    for cells in &body {
        out.push_str(&line(cells));
    }
    out
}

pub fn table<R: Record>(rows: &[R], format: Format, timing: bool) -> String {
    match format {
        Format::Csv => csv(rows, timing),
        Format::Json => json(rows),
        Format::Ascii => ascii_table(rows, timing),
    }
}

/// The integers in `[lo, hi]` laid out in rows of width `a` (the multiplicity),
/// one column per residue modulo `a`, highest row first. Each element gets the
/// marker returned by `mark`; gaps print as `.`.
pub fn helix(s: &NumericalSemigroup, lo: Int, hi: Int, mark: impl Fn(Int) -> char) -> String {
    let a = s.multiplicity();
    let w = hi.max(1).to_string().len();
    let first_row = lo.div_euclid(a);
    let last_row = hi.div_euclid(a);
    let mut out = String::new();
    for row in (first_row..=last_row).rev() {
        let mut line = String::new();
        for col in 0..a {
            let x = row * a + col;
            let cell = if x < lo || x > hi {
                " ".repeat(w + 1)
            } else if s.contains(x) {
                format!("{x:>w$}{}", mark(x))
            } else {
                format!("{:>w$} ", ".")
            };
            if col > 0 {
                line.push(' ');
            }
            line.push_str(&cell);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
