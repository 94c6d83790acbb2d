//! The two line-based file formats.
//!
//! `BETTI v1`: optional `codim <c>`, then sparse triples
//! `<column> <degree> <value>` with positive integer or `p/q` values.
//! `COHTAB v1`: a `range <d_min> <d_max>` line, then triples
//! `<row> <twist> <value>`. `#` starts a comment; duplicate keys are
//! errors. Writing is canonical: sorted keys, lowest-terms values, so
//! parse/write round-trips are byte-identical on canonical files.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use boijsoderberg::{parse_rational, BettiDiagram, CohomologyTable};
use num_traits::Signed;

/// A parse failure with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Lines that carry content: strip comments and blanks.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if stripped.is_empty() {
            None
        } else {
            Some((idx + 1, stripped))
        }
    })
}

/// A parsed Betti diagram file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiFile {
    pub codim: Option<usize>,
    pub diagram: BettiDiagram,
}

pub fn parse_betti(text: &str) -> Result<BettiFile, ParseError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "BETTI v1")) => {}
        Some((n, other)) => return fail(n, format!("expected header `BETTI v1`, found `{other}`")),
        None => return fail(1, "empty file, expected header `BETTI v1`"),
    }
    let mut codim = None;
    let mut diagram = BettiDiagram::new();
    let mut seen: BTreeSet<(usize, i64)> = BTreeSet::new();
    for (n, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "codim" {
            if codim.is_some() {
                return fail(n, "duplicate codim line");
            }
            if fields.len() != 2 {
                return fail(n, "expected `codim <c>`");
            }
            match fields[1].parse::<usize>() {
                Ok(c) => codim = Some(c),
                Err(_) => return fail(n, format!("bad codimension `{}`", fields[1])),
            }
            continue;
        }
        if fields.len() != 3 {
            return fail(n, "expected `<column> <degree> <value>`");
        }
        let Ok(i) = fields[0].parse::<usize>() else {
            return fail(n, format!("bad column index `{}`", fields[0]));
        };
        let Ok(j) = fields[1].parse::<i64>() else {
            return fail(n, format!("bad degree `{}`", fields[1]));
        };
        let Some(value) = parse_rational(fields[2]) else {
            return fail(n, format!("bad value `{}`", fields[2]));
        };
        if !value.is_positive() {
            return fail(n, format!("value must be positive, found `{}`", fields[2]));
        }
        if !seen.insert((i, j)) {
            return fail(n, format!("duplicate entry for column {i}, degree {j}"));
        }
        diagram.set(i, j, value);
    }
    Ok(BettiFile { codim, diagram })
}

pub fn write_betti(file: &BettiFile) -> String {
    let mut out = String::from("BETTI v1\n");
    if let Some(c) = file.codim {
        let _ = writeln!(out, "codim {c}");
    }
    for (&(i, j), v) in file.diagram.iter() {
        let _ = writeln!(out, "{i} {j} {v}");
    }
    out
}

/// A parsed cohomology table file.
#[derive(Debug, Clone, PartialEq)]
pub struct CohFile {
    pub table: CohomologyTable,
}

pub fn parse_coh(text: &str) -> Result<CohFile, ParseError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "COHTAB v1")) => {}
        Some((n, other)) => return fail(n, format!("expected header `COHTAB v1`, found `{other}`")),
        None => return fail(1, "empty file, expected header `COHTAB v1`"),
    }
    let mut range: Option<(i64, i64)> = None;
    let mut triples: Vec<(usize, usize, i64, boijsoderberg::Rational)> = Vec::new();
    let mut seen: BTreeSet<(usize, i64)> = BTreeSet::new();
    for (n, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "range" {
            if range.is_some() {
                return fail(n, "duplicate range line");
            }
            if fields.len() != 3 {
                return fail(n, "expected `range <d_min> <d_max>`");
            }
            let (Ok(lo), Ok(hi)) = (fields[1].parse::<i64>(), fields[2].parse::<i64>()) else {
                return fail(n, "bad range bounds");
            };
            if lo > hi {
                return fail(n, format!("inverted range {lo} > {hi}"));
            }
            range = Some((lo, hi));
            continue;
        }
        let Some((lo, hi)) = range else {
            return fail(n, "the `range <d_min> <d_max>` line must precede entries");
        };
        if fields.len() != 3 {
            return fail(n, "expected `<row> <twist> <value>`");
        }
        let Ok(i) = fields[0].parse::<usize>() else {
            return fail(n, format!("bad row index `{}`", fields[0]));
        };
        let Ok(d) = fields[1].parse::<i64>() else {
            return fail(n, format!("bad twist `{}`", fields[1]));
        };
        if d < lo || d > hi {
            return fail(n, format!("twist {d} outside declared range {lo}..{hi}"));
        }
        let Some(value) = parse_rational(fields[2]) else {
            return fail(n, format!("bad value `{}`", fields[2]));
        };
        if !value.is_positive() {
            return fail(n, format!("value must be positive, found `{}`", fields[2]));
        }
        if !seen.insert((i, d)) {
            return fail(n, format!("duplicate entry for row {i}, twist {d}"));
        }
        triples.push((n, i, d, value));
    }
    let Some((lo, hi)) = range else {
        return fail(1, "missing `range <d_min> <d_max>` line");
    };
    let nrows = triples.iter().map(|&(_, i, _, _)| i + 1).max().unwrap_or(1);
    let mut table = CohomologyTable::new(nrows, lo, hi);
    for (_, i, d, v) in triples {
        table.set(i, d, v);
    }
    Ok(CohFile { table })
}

pub fn write_coh(file: &CohFile) -> String {
    let (lo, hi) = file.table.range();
    let mut out = String::from("COHTAB v1\n");
    let _ = writeln!(out, "range {lo} {hi}");
    for (&(i, d), v) in file.table.iter() {
        let _ = writeln!(out, "{i} {d} {v}");
    }
    out
}
