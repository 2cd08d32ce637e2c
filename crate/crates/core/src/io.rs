//! Text formats for graphs and affiliations.
//!
//! Both formats are line oriented, comma separated and UTF-8. Blank lines and
//! lines whose first non-blank character is `#` are skipped.

use std::io::{BufRead, Write};

use crate::graph::{AffiliationMatrix, Graph};
use crate::{Error, Result};

/// Tolerance within which a vector-mode row is silently renormalised.
pub const RENORMALIZE_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    /// One more than the largest id seen (0 for an empty file).
    pub node_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl EdgeList {
    /// Builds the graph, returning it with the number of duplicate edges dropped.
    pub fn into_graph(self, min_nodes: usize) -> Result<(Graph, usize)> {
        Graph::from_edges_counted(self.node_count.max(min_nodes), &self.edges)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffiliationMode {
    /// `node,v` with `v` in `[-1, 1]`, mapped to `((1-v)/2, (1+v)/2)`.
    Scalar,
    /// `node,q1,...,qk`.
    Vector { k: usize },
}

fn data_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, String)>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(idx, line)| match line {
            Err(e) => Some(Err(Error::Io(e))),
            Ok(line) => {
                let trimmed = line.trim();
                if trimmed.is_empty() || trimmed.starts_with('#') {
                    None
                } else {
                    Some(Ok((idx + 1, trimmed.to_owned())))
                }
            }
        })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_id(field: &str, line: usize) -> Result<usize> {
    field
        .trim()
        .parse()
        .map_err(|_| parse_err(line, format!("bad node id {:?}", field.trim())))
}

fn parse_value(field: &str, line: usize) -> Result<f64> {
    let v: f64 = field
        .trim()
        .parse()
        .map_err(|_| parse_err(line, format!("bad number {:?}", field.trim())))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(parse_err(line, "non-finite value"))
    }
}

pub fn load_edge_list<R: BufRead>(reader: R) -> Result<EdgeList> {
    let mut edges = Vec::new();
    let mut node_count = 0;
    for item in data_lines(reader) {
        let (line, text) = item?;
        let mut fields = text.split(',');
        let (Some(src), Some(dst), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_err(line, "expected \"src,dst\""));
        };
        let (src, dst) = (parse_id(src, line)?, parse_id(dst, line)?);
        node_count = node_count.max(src + 1).max(dst + 1);
        edges.push((src, dst));
    }
    Ok(EdgeList { node_count, edges })
}

/// Number of non-comment, non-blank lines. Used to size a graph whose highest
/// ids are isolated and so never appear in the edge list.
pub fn count_data_lines<R: BufRead>(reader: R) -> Result<usize> {
    let mut count = 0;
    for item in data_lines(reader) {
        item?;
        count += 1;
    }
    Ok(count)
}

/// Reads one affiliation row per node `0..n`.
pub fn load_affiliations<R: BufRead>(
    reader: R,
    n: usize,
    mode: AffiliationMode,
) -> Result<AffiliationMatrix> {
    let k = match mode {
        AffiliationMode::Scalar => 2,
        AffiliationMode::Vector { k } if k >= 1 => k,
        AffiliationMode::Vector { .. } => {
            return Err(Error::BadParams("need at least one community".into()))
        }
    };
    let mut weights = vec![0.0; n * k];
    let mut seen = vec![false; n];
    for item in data_lines(reader) {
        let (line, text) = item?;
        let fields: Vec<&str> = text.split(',').collect();
        let expected = if mode == AffiliationMode::Scalar { 2 } else { k + 1 };
        if fields.len() != expected {
            return Err(parse_err(
                line,
                format!("expected {expected} fields, found {}", fields.len()),
            ));
        }
        let node = parse_id(fields[0], line)?;
        if node >= n {
            return Err(Error::OutOfRangeNode { node, n });
        }
        if std::mem::replace(&mut seen[node], true) {
            return Err(Error::DuplicateNode(node));
        }
        let row = &mut weights[node * k..(node + 1) * k];
        match mode {
            AffiliationMode::Scalar => {
                let v = parse_value(fields[1], line)?;
                if !(-1.0..=1.0).contains(&v) {
                    return Err(parse_err(line, format!("scalar affiliation {v} outside [-1, 1]")));
                }
                row[0] = (1.0 - v) / 2.0;
                row[1] = (1.0 + v) / 2.0;
            }
            AffiliationMode::Vector { .. } => {
                for (slot, field) in row.iter_mut().zip(&fields[1..]) {
                    *slot = parse_value(field, line)?;
                }
                let sum: f64 = row.iter().sum();
                if row.iter().any(|&x| x < 0.0) || (sum - 1.0).abs() > RENORMALIZE_TOLERANCE {
                    return Err(Error::BadSimplex { node, sum });
                }
                row.iter_mut().for_each(|x| *x /= sum);
            }
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(Error::MissingNode(missing));
    }
    AffiliationMatrix::new(k, weights)
}

pub fn write_edge_list<W: Write>(g: &Graph, mut w: W) -> std::io::Result<()> {
    writeln!(w, "# src,dst")?;
    for (src, dst) in g.edges() {
        writeln!(w, "{src},{dst}")?;
    }
    Ok(())
}

/// Writes vector-mode rows `node,q1,...,qk`.
pub fn write_affiliations<W: Write>(a: &AffiliationMatrix, mut w: W) -> std::io::Result<()> {
    let header: Vec<String> = (1..=a.k()).map(|c| format!("q{c}")).collect();
    writeln!(w, "# node,{}", header.join(","))?;
    for (node, row) in a.rows().enumerate() {
        write!(w, "{node}")?;
        for x in row {
            write!(w, ",{x}")?;
        }
        writeln!(w)?;
    }
    Ok(())
}
