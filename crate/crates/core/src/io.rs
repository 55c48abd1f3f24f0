//! Graph file formats: edge-list text, JSON, and DOT (export only).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Json,
    Dot,
}

impl Format {
    pub fn from_name(name: &str) -> Option<Format> {
        match name {
            "edgelist" | "edges" | "txt" => Some(Format::EdgeList),
            "json" | "data" => Some(Format::Json),
            "dot" => Some(Format::Dot),
            _ => None,
        }
    }

    /// Format implied by a file extension; unknown extensions are edge lists.
    pub fn from_path(path: &str) -> Format {
        match std::path::Path::new(path).extension().and_then(|e| e.to_str()) {
            Some("json") => Format::Json,
            Some("dot" | "gv") => Format::Dot,
            _ => Format::EdgeList,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// Parses either format, detected from the first non-blank character.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let head = text.trim_start();
    if head.starts_with('{') {
        parse_json(text)
    } else if head.starts_with("graph") || head.starts_with("strict") || head.starts_with("digraph")
    {
        Err(Error::input("DOT is an export-only format"))
    } else {
        parse_edge_list(text)
    }
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let g: JsonGraph =
        serde_json::from_str(text).map_err(|e| Error::input(format!("bad graph JSON: {e}")))?;
    Graph::new(g.n, g.edges.into_iter().map(|[u, v]| (u, v)))
}

/// `n m` on the first line, then `m` lines `u v`. Blank lines and `#`
/// comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or_else(|| Error::input("empty graph file"))?;
    let [n, m] = numbers::<2>(header).ok_or_else(|| Error::input("header must be `n m`"))?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let [u, v] = numbers::<2>(line)
            .ok_or_else(|| Error::input(format!("line {lineno}: expected `u v`")))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::input(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}

fn numbers<const K: usize>(line: &str) -> Option<[usize; K]> {
    let mut out = [0; K];
    let mut it = line.split_whitespace();
    for slot in &mut out {
        *slot = it.next()?.parse().ok()?;
    }
    it.next().is_none().then_some(out)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn write_json(g: &Graph) -> String {
    let doc = JsonGraph {
        n: g.order(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

/// DOT text. With `labels`, node `i` is labeled by `labels[i]`.
pub fn write_dot(g: &Graph, labels: Option<&[VertexSet]>) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.order() {
        match labels {
            Some(l) => {
                let _ = writeln!(s, "  {v} [label=\"{}\"];", l[v]);
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Json => write_json(g) + "\n",
        Format::Dot => write_dot(g, None),
    }
}

pub fn read_graph_file(path: &str) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    parse_graph(&text)
}

/// Parses `0,3,5` (no spaces) into a set over `universe` vertices; the
/// empty string is the empty set.
pub fn parse_set(text: &str, universe: usize) -> Result<VertexSet> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(VertexSet::empty(universe));
    }
    let members = text
        .split(',')
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::input(format!("bad vertex `{t}` in set `{text}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    VertexSet::new(universe, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn round_trips() {
        let h = families::h_graph();
        let text = write_edge_list(&h);
        assert_eq!(parse_graph(&text).unwrap(), h);
        let json = write_json(&h);
        let back = parse_graph(&json).unwrap();
        assert_eq!(write_edge_list(&back), text);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::empty(0);
        assert_eq!(write_edge_list(&g), "0 0\n");
        assert_eq!(write_json(&g), r#"{"n":0,"edges":[]}"#);
        assert_eq!(parse_graph("0 0").unwrap(), g);
    }

    #[test]
    fn canonical_edge_order() {
        let g = parse_edge_list("3 2\n2 1\n1 0\n").unwrap();
        assert_eq!(write_edge_list(&g), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn dot_export() {
        let dot = write_dot(&families::h_graph(), None);
        assert_eq!(dot.matches(" -- ").count(), 5);
        let nodes = dot.lines().filter(|l| l.ends_with(';') && !l.contains("--"));
        assert_eq!(nodes.count(), 6);
        let labels = [VertexSet::new(6, [0, 3]).unwrap()];
        assert!(write_dot(&Graph::empty(1), Some(&labels)).contains("label=\"{0,3}\""));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_graph("graph G { 0 -- 1; }").is_err());
        assert!(parse_graph("3 2\n0 1\n").is_err());
        assert!(parse_graph("2 1\n0 0\n").is_err());
        assert!(parse_graph("2 1\n0 5\n").is_err());
        assert!(parse_graph("x y").is_err());
        assert!(parse_graph(r#"{"n":2,"edges":[[0,1]],"extra":1}"#).is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# C3\n3 3\n\n0 1\n1 2 # spoke\n0 2\n").unwrap();
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn sets() {
        assert_eq!(parse_set("3,0", 4).unwrap().members(), &[0, 3]);
        assert!(parse_set("", 4).unwrap().is_empty());
        assert!(parse_set("0, 1", 4).is_err());
        assert!(parse_set("4", 4).is_err());
    }
}
