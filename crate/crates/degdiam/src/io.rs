//! Structured-text readers and writers.  Digraph files carry an "n d"
//! header and one out-neighbor row per vertex; factor files carry "n d"
//! and one permutation per line; groupoid files carry "n d e", a
//! generator-index line, and the n partial-table rows.  Permutation lines
//! accept cycle notation or the image-array form "p: 3 4 5 0 1 2".
//! Everything written here parses back to an equal value.

use crate::cdd::CddParams;
use crate::digraph::{Digraph, DigraphError};
use crate::groupoid::PartialGroupoid;
use crate::perm::{PermError, Permutation};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {source}")]
    BadPermutation {
        line: usize,
        #[source]
        source: PermError,
    },
    #[error(transparent)]
    Digraph(#[from] DigraphError),
    #[error(transparent)]
    Groupoid(#[from] crate::groupoid::GroupoidError),
    #[error(transparent)]
    Cdd(#[from] crate::cdd::CddError),
}

fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Lines of a file with comments (#) and blanks dropped, keeping original
/// 1-based line numbers for error reporting.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_fields(line: usize, text: &str, want: usize, what: &str) -> Result<Vec<usize>, IoError> {
    let vals: Result<Vec<usize>, _> = text.split_whitespace().map(str::parse).collect();
    let vals = vals.map_err(|e| parse_err(line, format!("{what}: {e}")))?;
    if vals.len() != want {
        return Err(parse_err(
            line,
            format!("{what}: expected {want} fields, found {}", vals.len()),
        ));
    }
    Ok(vals)
}

/// A permutation in either cycle notation or "p: <images>" form.
pub fn parse_permutation(line: usize, text: &str, n: usize) -> Result<Permutation, IoError> {
    if let Some(rest) = text.strip_prefix("p:") {
        let images = parse_fields(line, rest, n, "image array")?;
        Permutation::from_images(images).map_err(|e| IoError::BadPermutation { line, source: e })
    } else {
        Permutation::parse_cycles(text, n).map_err(|e| IoError::BadPermutation { line, source: e })
    }
}

pub fn write_digraph(g: &Digraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.degree());
    for v in 0..g.n() {
        let row: Vec<String> = g.ports(v).iter().map(|w| w.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn parse_digraph(text: &str) -> Result<Digraph, IoError> {
    let lines = content_lines(text);
    let Some(&(hline, header)) = lines.first() else {
        return Err(parse_err(1, "empty digraph file"));
    };
    let h = parse_fields(hline, header, 2, "header")?;
    let (n, d) = (h[0], h[1]);
    if lines.len() != n + 1 {
        return Err(parse_err(
            lines.last().map_or(hline, |&(l, _)| l),
            format!("expected {n} vertex rows, found {}", lines.len() - 1),
        ));
    }
    let mut ports = Vec::with_capacity(n);
    for &(lno, text) in &lines[1..] {
        let row = parse_fields(lno, text, d, "out-neighbor row")?;
        if let Some(&w) = row.iter().find(|&&w| w >= n) {
            return Err(parse_err(lno, format!("vertex {w} out of range (n = {n})")));
        }
        ports.push(row);
    }
    Ok(Digraph::from_ports(ports)?)
}

pub fn write_factors(n: usize, factors: &[Permutation]) -> String {
    let mut out = format!("{} {}\n", n, factors.len());
    for f in factors {
        let _ = writeln!(out, "{f}");
    }
    out
}

pub fn parse_factors(text: &str) -> Result<(usize, Vec<Permutation>), IoError> {
    let lines = content_lines(text);
    let Some(&(hline, header)) = lines.first() else {
        return Err(parse_err(1, "empty factor file"));
    };
    let h = parse_fields(hline, header, 2, "header")?;
    let (n, d) = (h[0], h[1]);
    if lines.len() != d + 1 {
        return Err(parse_err(
            lines.last().map_or(hline, |&(l, _)| l),
            format!("expected {d} factor lines, found {}", lines.len() - 1),
        ));
    }
    let mut factors = Vec::with_capacity(d);
    for &(lno, text) in &lines[1..] {
        factors.push(parse_permutation(lno, text, n)?);
    }
    Ok((n, factors))
}

pub fn write_groupoid(g: &PartialGroupoid) -> String {
    let e = g.identity().map_or("-".into(), |e| e.to_string());
    let mut out = format!("{} {} {}\n", g.n(), g.degree(), e);
    let gens: Vec<String> = g.generators().iter().map(|s| s.to_string()).collect();
    let _ = writeln!(out, "{}", gens.join(" "));
    for x in 0..g.n() {
        let row: Vec<String> = (0..g.degree())
            .map(|s| g.product(x, s).to_string())
            .collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn parse_groupoid(text: &str) -> Result<PartialGroupoid, IoError> {
    let lines = content_lines(text);
    let Some(&(hline, header)) = lines.first() else {
        return Err(parse_err(1, "empty groupoid file"));
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(parse_err(hline, "header: expected \"n d e\""));
    }
    let h = parse_fields(hline, &fields[..2].join(" "), 2, "header")?;
    let (n, d) = (h[0], h[1]);
    let e = if fields[2] == "-" {
        None
    } else {
        Some(
            fields[2]
                .parse()
                .map_err(|err| parse_err(hline, format!("identity index: {err}")))?,
        )
    };
    if lines.len() != n + 2 {
        return Err(parse_err(
            lines.last().map_or(hline, |&(l, _)| l),
            format!("expected generator line plus {n} rows, found {}", lines.len() - 1),
        ));
    }
    let (gline, gtext) = lines[1];
    let gens = parse_fields(gline, gtext, d, "generator line")?;
    let mut rows = Vec::with_capacity(n);
    for &(lno, text) in &lines[2..] {
        let row = parse_fields(lno, text, d, "table row")?;
        if let Some(&w) = row.iter().find(|&&w| w >= n) {
            return Err(parse_err(lno, format!("entry {w} out of range (n = {n})")));
        }
        rows.push(row);
    }
    Ok(PartialGroupoid::new(rows, gens, e)?)
}

pub fn write_cdd(p: &CddParams) -> String {
    let t: Vec<String> = p.offsets().iter().map(|x| x.to_string()).collect();
    format!("{} {} / pi={} / t={}\n", p.a(), p.b(), p.pi(), t.join(","))
}

pub fn parse_cdd(text: &str) -> Result<CddParams, IoError> {
    let lines = content_lines(text);
    let Some(&(lno, line)) = lines.first() else {
        return Err(parse_err(1, "empty parameter file"));
    };
    let mut parts = line.split('/').map(str::trim);
    let dims = parts
        .next()
        .ok_or_else(|| parse_err(lno, "missing dimensions"))?;
    let dims = parse_fields(lno, dims, 2, "dimensions")?;
    let (a, b) = (dims[0], dims[1]);
    let pi_part = parts
        .next()
        .and_then(|s| s.strip_prefix("pi="))
        .ok_or_else(|| parse_err(lno, "missing pi=<cycles> section"))?;
    let pi = parse_permutation(lno, pi_part.trim(), a)?;
    let t_part = parts
        .next()
        .and_then(|s| s.strip_prefix("t="))
        .ok_or_else(|| parse_err(lno, "missing t=<comma list> section"))?;
    let t: Result<Vec<usize>, _> = t_part.split(',').map(|s| s.trim().parse()).collect();
    let t = t.map_err(|e| parse_err(lno, format!("offset list: {e}")))?;
    Ok(CddParams::new(a, b, pi, t)?)
}

/// GraphViz rendering; multi-edges appear as parallel arrows.
pub fn write_dot(g: &Digraph, name: &str) -> String {
    let mut out = format!("digraph {name} {{\n");
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}
