//! Edge-list files, switch-set files and benchmark CSV rows.
//!
//! An edge-list file starts with `n m d|u` and lists `m` lines `u v`. For
//! `u` every undirected edge appears once; for `d` every arc does.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Lines that are neither blank nor `#` comments, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("{what} {tok:?} is not a non-negative integer")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let mut toks = header.split_whitespace();
    let n = number(hl, toks.next(), "n")?;
    let m = number(hl, toks.next(), "m")?;
    let directed = match toks.next() {
        Some("d") => true,
        Some("u") => false,
        other => return Err(parse_err(hl, format!("direction flag must be d or u, got {other:?}"))),
    };
    if toks.next().is_some() {
        return Err(parse_err(hl, "trailing tokens in header"));
    }
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        let mut toks = line.split_whitespace();
        let u = number(ln, toks.next(), "u")?;
        let v = number(ln, toks.next(), "v")?;
        if toks.next().is_some() {
            return Err(parse_err(ln, "expected exactly two vertex ids"));
        }
        if u >= n || v >= n {
            return Err(parse_err(ln, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(parse_err(ln, "self-loop"));
        }
        let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
        if !seen.insert(key) {
            return Err(parse_err(ln, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(hl, format!("header says {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges, directed)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    if g.is_directed() {
        out.push_str(&format!("{} {} d\n", g.n(), g.m()));
        for (u, v) in g.arcs() {
            out.push_str(&format!("{u} {v}\n"));
        }
    } else {
        out.push_str(&format!("{} {} u\n", g.n(), g.m() / 2));
        for (u, v) in g.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
    }
    out
}

pub fn read_edge_list_file(path: &Path) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

pub fn write_edge_list_file(path: &Path, g: &Graph) -> Result<()> {
    std::fs::write(path, write_edge_list(g))?;
    Ok(())
}

/// One vertex id per line.
pub fn parse_switch_set(text: &str, n: usize) -> Result<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (ln, line) in content_lines(text) {
        let v = number(ln, Some(line), "vertex id")?;
        if v >= n {
            return Err(parse_err(ln, format!("vertex {v} out of range for n = {n}")));
        }
        if !seen.insert(v) {
            return Err(parse_err(ln, format!("vertex {v} listed twice")));
        }
        out.push(v);
    }
    Ok(out)
}

/// Benchmark CSV row. Column order is the field order below.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub instance_id: String,
    pub model: String,
    pub n: usize,
    pub m: usize,
    pub m_tilde: usize,
    pub algorithm: String,
    pub vertex_charge: u64,
    pub pclist_element_charge: u64,
    pub queue_op: u64,
    pub ledger_misc: u64,
    pub ledger_total: u64,
    pub phases: Option<usize>,
    pub wall_time_ns: u64,
    pub result: String,
    pub seed: u64,
}

pub const BENCH_HEADER: [&str; 15] = [
    "instance_id",
    "model",
    "n",
    "m",
    "m_tilde",
    "algorithm",
    "vertex_charge",
    "pclist_element_charge",
    "queue_op",
    "ledger_misc",
    "ledger_total",
    "phases",
    "wall_time_ns",
    "result",
    "seed",
];

pub fn write_bench_csv<W: std::io::Write>(out: W, rows: &[BenchRow]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(BENCH_HEADER).map_err(|e| Error::Io(e.to_string()))?;
    for row in rows {
        w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_bench_csv<R: std::io::Read>(input: R) -> Result<Vec<BenchRow>> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r
        .headers()
        .map_err(|e| Error::Io(e.to_string()))?
        .iter()
        .map(str::to_string)
        .collect();
    if header != BENCH_HEADER {
        return Err(Error::Input(format!("unexpected CSV header {header:?}")));
    }
    r.deserialize()
        .map(|row| row.map_err(|e| Error::Io(e.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn round_trip() {
        for g in [complete(4), petersen(), Graph::empty(3, false)] {
            assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
        let d = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 1)], true).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&d)).unwrap(), d);
        assert!(write_edge_list(&complete(4)).starts_with("4 6 u\n"));
    }

    #[test]
    fn parse_errors() {
        let bad = |s: &str| matches!(parse_edge_list(s), Err(Error::Parse { .. }));
        assert!(bad(""));
        assert!(bad("3 1 x\n0 1\n"));
        assert!(bad("3 1 u\n0 3\n"));
        assert!(bad("3 1 u\n1 1\n"));
        assert!(bad("3 2 u\n0 1\n1 0\n"));
        assert!(bad("3 2 u\n0 1\n"));
        assert!(bad("3 1 u\n0 one\n"));
        assert!(!bad("# comment\n3 2 d\n0 1\n1 0\n"));
    }

    #[test]
    fn switch_sets() {
        assert_eq!(parse_switch_set("2\n0\n\n", 3).unwrap(), vec![2, 0]);
        assert!(parse_switch_set("3\n", 3).is_err());
        assert!(parse_switch_set("1\n1\n", 3).is_err());
    }

    #[test]
    fn csv_header_and_round_trip() {
        let row = BenchRow {
            instance_id: "x-1".into(),
            model: "gnp".into(),
            n: 4,
            m: 12,
            m_tilde: 0,
            algorithm: "bfs".into(),
            vertex_charge: 8,
            pclist_element_charge: 0,
            queue_op: 4,
            ledger_misc: 4,
            ledger_total: 16,
            phases: None,
            wall_time_ns: 10,
            result: "reached 4, depth 1".into(),
            seed: 1,
        };
        let mut buf = Vec::new();
        write_bench_csv(&mut buf, std::slice::from_ref(&row)).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text.lines().next().unwrap(), BENCH_HEADER.join(","));
        assert_eq!(read_bench_csv(&buf[..]).unwrap(), vec![row]);
    }
}
