//! Text and JSON formats.
//!
//! * `.scx`: one set per line, comma-separated labels, `#` starts a comment.
//! * complex JSON: `{"sets": [[..], ..]}` or `{"facets": [[..], ..]}`.
//! * `.edg`: a header `n <count>`, then one `a b` edge per line (indices).
//! * graph JSON: `{"n": .., "edges": [[i, j], ..], "labels": [..]}` where
//!   edges use vertex indices and `labels[i]` is the label of vertex `i`
//!   (omitted when labels are `0..n`).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Label;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Reads `.scx` text. With `facets` the sets are closed downward,
/// otherwise the family must already be a complex.
pub fn parse_scx(text: &str, facets: bool) -> Result<Complex> {
    let mut sets: Vec<Vec<Label>> = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let set = line
            .split(',')
            .map(|t| t.trim().parse::<Label>().map_err(|e| parse_err(no + 1, format!("'{}': {e}", t.trim()))))
            .collect::<Result<Vec<_>>>()?;
        sets.push(set);
    }
    if facets {
        Complex::from_facets(sets)
    } else {
        Complex::validate(sets)
    }
}

pub fn write_scx(g: &Complex) -> String {
    let mut out = String::new();
    for s in g.sets() {
        let parts: Vec<String> = s.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&parts.join(","));
        out.push('\n');
    }
    out
}

#[derive(Debug, Default, Serialize, Deserialize)]
pub struct ComplexJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sets: Option<Vec<Vec<Label>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<Label>>>,
}

impl ComplexJson {
    pub fn from_complex(g: &Complex) -> Self {
        ComplexJson { sets: Some(g.sets().iter().map(|s| s.vertices().to_vec()).collect()), facets: None }
    }

    pub fn into_complex(self) -> Result<Complex> {
        match (self.sets, self.facets) {
            (Some(s), None) => Complex::validate(s),
            (None, Some(f)) => Complex::from_facets(f),
            _ => Err(Error::InvalidInput("expected exactly one of \"sets\" or \"facets\"".into())),
        }
    }
}

pub fn parse_complex_json(text: &str) -> Result<Complex> {
    let j: ComplexJson = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    j.into_complex()
}

/// Reads `.edg` text.
pub fn parse_edg(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |t: &str| t.parse::<usize>().map_err(|e| parse_err(no + 1, format!("'{t}': {e}")));
        match (n, fields.as_slice()) {
            (None, ["n", count]) => n = Some(num(count)?),
            (None, _) => return Err(parse_err(no + 1, "expected header 'n <count>'")),
            (Some(_), [a, b]) => edges.push((num(a)?, num(b)?)),
            (Some(_), _) => return Err(parse_err(no + 1, "expected 'a b'")),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing header 'n <count>'"))?;
    Graph::from_edges(n, edges)
}

pub fn write_edg(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

/// DOT text; vertices are named by label.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for &l in g.labels() {
        let _ = writeln!(out, "  {l};");
    }
    for (a, b) in g.labeled_edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Label>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        let dense = g.labels().iter().enumerate().all(|(i, &l)| l as usize == i);
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(i, j)| [i, j]).collect(),
            labels: if dense { None } else { Some(g.labels().to_vec()) },
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let g = Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1])))?;
        match &self.labels {
            Some(l) => g.with_labels(l.clone()),
            None => Ok(g),
        }
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from_graph(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        GraphJson::deserialize(d)?.to_graph().map_err(serde::de::Error::custom)
    }
}

/// Reads a graph from `.edg` or graph JSON, deciding by the first
/// non-blank character.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))
    } else {
        parse_edg(text)
    }
}

/// Reads a complex from `.scx` or JSON.
pub fn parse_complex(text: &str, facets: bool) -> Result<Complex> {
    if text.trim_start().starts_with('{') {
        parse_complex_json(text)
    } else {
        parse_scx(text, facets)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn scx_round_trip() {
        let g = catalog::figure8_complex();
        assert_eq!(parse_scx(&write_scx(&g), false).unwrap(), g);
        let text = "# triangle\n1,2\n2, 3\n3,1 # last\n";
        assert_eq!(parse_scx(text, true).unwrap().f_vector().0, vec![3, 3]);
        assert!(matches!(parse_scx(text, false), Err(Error::MissingFace { .. })));
        assert!(matches!(parse_scx("1,x\n", true), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn complex_json() {
        let g = parse_complex_json(r#"{"facets": [[1,2],[2,3]]}"#).unwrap();
        assert_eq!(g, catalog::complex("interval").unwrap());
        let text = serde_json::to_string(&ComplexJson::from_complex(&g)).unwrap();
        assert_eq!(parse_complex(&text, false).unwrap(), g);
        assert!(parse_complex_json(r#"{}"#).is_err());
    }

    #[test]
    fn edg_and_json_round_trip() {
        let g = catalog::wheel(5);
        assert_eq!(parse_graph(&write_edg(&g)).unwrap(), g);
        let h = g.add_vertex(40, &[0, 3]).unwrap();
        let text = serde_json::to_string(&h).unwrap();
        assert!(text.contains("labels"));
        assert_eq!(parse_graph(&text).unwrap(), h);
        assert!(parse_edg("1 2\n").is_err());
        assert!(parse_edg("n 2\n0 5\n").is_err());
    }

    #[test]
    fn dot_lists_edges() {
        let dot = to_dot(&catalog::path(3), "p");
        assert!(dot.contains("0 -- 1;") && dot.contains("1 -- 2;"));
    }
}
