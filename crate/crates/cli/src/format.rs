//! Text formats.
//!
//! Time graph:
//! ```text
//! n 5
//! # comment
//! 0 1 0
//! 1 2 1
//! ```
//!
//! Basis:
//! ```text
//! n 5
//! rows 61
//! certified true
//! perm: 1 5 2 3 4 ; pivot: 1 5 1
//! ```

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use timegraph_core::basis::UpperTriangularBasis;
use timegraph_core::{Edge, Order, TimeGraph};

use crate::CliError;

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(path: &Path, line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { path: path.to_path_buf(), line, message: message.into() }
}

fn numbers(path: &Path, line: usize, text: &str) -> Result<Vec<usize>, CliError> {
    text.split_whitespace()
        .map(|w| w.parse::<usize>().map_err(|_| parse_err(path, line, format!("not a non-negative integer: {w:?}"))))
        .collect()
}

fn header<'a>(
    path: &Path,
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
) -> Result<(usize, &'a str), CliError> {
    let (line, text) = lines.next().ok_or_else(|| parse_err(path, 0, format!("missing `{key}` header")))?;
    match text.split_once(char::is_whitespace) {
        Some((k, v)) if k == key => Ok((line, v.trim())),
        _ => Err(parse_err(path, line, format!("expected `{key} <value>`, found {text:?}"))),
    }
}

fn parse_order(path: &Path, line: usize, value: &str) -> Result<Order, CliError> {
    let n = value.parse::<usize>().map_err(|_| parse_err(path, line, format!("bad order {value:?}")))?;
    Order::new(n).map_err(|e| parse_err(path, line, e.to_string()))
}

pub fn parse_time_graph(path: &Path, text: &str) -> Result<TimeGraph, CliError> {
    let mut lines = meaningful_lines(text);
    let (line, value) = header(path, &mut lines, "n")?;
    let order = parse_order(path, line, value)?;
    let mut g = TimeGraph::empty(order);
    for (line, text) in lines {
        let v = numbers(path, line, text)?;
        let [i, j, t] = v[..] else {
            return Err(parse_err(path, line, format!("expected `i j t`, found {text:?}")));
        };
        g.insert(Edge::new(i, j, t)).map_err(|e| parse_err(path, line, e.to_string()))?;
    }
    Ok(g)
}

pub fn write_time_graph(g: &TimeGraph) -> String {
    let mut out = format!("n {}\n", g.order());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.from, e.to, e.day);
    }
    out
}

pub fn write_basis(b: &UpperTriangularBasis) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {}", b.order);
    let _ = writeln!(out, "rows {}", b.rows.len());
    let _ = writeln!(out, "certified {}", b.is_certified());
    for r in &b.rows {
        let p = r.pivot;
        let _ = writeln!(out, "perm: {} ; pivot: {} {} {}", r.htp, p.from, p.to, p.day);
    }
    out
}

/// A basis file as written, before any validation of its rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisFile {
    pub path: PathBuf,
    pub order: Order,
    pub declared_rows: usize,
    pub declared_certified: bool,
    /// Raw permutation and pivot per row; the permutation may be invalid.
    pub rows: Vec<(Vec<usize>, Edge)>,
}

pub fn parse_basis(path: &Path, text: &str) -> Result<BasisFile, CliError> {
    let mut lines = meaningful_lines(text);
    let (line, value) = header(path, &mut lines, "n")?;
    let order = parse_order(path, line, value)?;
    let (line, value) = header(path, &mut lines, "rows")?;
    let declared_rows = value.parse().map_err(|_| parse_err(path, line, format!("bad row count {value:?}")))?;
    let (line, value) = header(path, &mut lines, "certified")?;
    let declared_certified = match value {
        "true" => true,
        "false" => false,
        _ => return Err(parse_err(path, line, format!("expected true or false, found {value:?}"))),
    };
    let mut rows = Vec::new();
    for (line, text) in lines {
        let malformed = || parse_err(path, line, format!("expected `perm: p1 .. pn ; pivot: i j t`, found {text:?}"));
        let (perm, pivot) = text.split_once(';').ok_or_else(malformed)?;
        let perm = perm.trim().strip_prefix("perm:").ok_or_else(malformed)?;
        let pivot = pivot.trim().strip_prefix("pivot:").ok_or_else(malformed)?;
        let perm = numbers(path, line, perm)?;
        let [i, j, t] = numbers(path, line, pivot)?[..] else {
            return Err(malformed());
        };
        rows.push((perm, Edge::new(i, j, t)));
    }
    Ok(BasisFile { path: path.to_path_buf(), order, declared_rows, declared_certified, rows })
}

pub fn read_to_string(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn load_time_graph(path: &Path) -> Result<TimeGraph, CliError> {
    parse_time_graph(path, &read_to_string(path)?)
}

pub fn load_basis(path: &Path) -> Result<BasisFile, CliError> {
    parse_basis(path, &read_to_string(path)?)
}
