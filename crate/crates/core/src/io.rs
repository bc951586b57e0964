//! Edge-list and DIMACS-like text formats.
//!
//! Edge list: a header `n m`, then `m` lines `u v`. Lines starting with `#`
//! are comments. Endpoints are 0-indexed integers, or arbitrary labels which
//! are mapped to dense ids in order of first appearance.
//!
//! DIMACS-like: `c` comment lines, a `p edge n m` header and `e u v` lines
//! with 1-indexed endpoints.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    EdgeList,
    Dimacs,
}

/// A graph together with the external name of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    pub fn unlabeled(graph: Graph) -> Self {
        let labels = graph.vertices().map(|v| v.to_string()).collect();
        Self { graph, labels }
    }

    /// True when every label is just the vertex id.
    pub fn has_identity_labels(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, l)| *l == i.to_string())
    }

    pub fn vertex_of(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().position(|l| l == label)
    }
}

pub fn parse(text: &str, format: Format) -> Result<LabeledGraph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("{what} `{tok}` is not a non-negative integer")))
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut toks = header.split_whitespace();
    let n = parse_count(toks.next(), hline, "vertex count")?;
    let m = parse_count(toks.next(), hline, "edge count")?;
    if toks.next().is_some() {
        return Err(syntax(hline, "header must be `n m`"));
    }

    let mut raw = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(syntax(lineno, "expected `u v`"));
        }
        raw.push((lineno, toks[0], toks[1]));
    }
    if raw.len() != m {
        return Err(ParseError::EdgeCount {
            declared: m,
            found: raw.len(),
        });
    }

    let numeric = raw
        .iter()
        .all(|(_, a, b)| [a, b].iter().all(|t| t.parse::<usize>().is_ok_and(|v| v < n)));
    let mut labels: Vec<String>;
    let mut pairs = Vec::with_capacity(m);
    if numeric {
        labels = (0..n).map(|v| v.to_string()).collect();
        for (_, a, b) in &raw {
            pairs.push((a.parse().unwrap(), b.parse().unwrap()));
        }
    } else {
        labels = Vec::with_capacity(n);
        let mut index: HashMap<&str, Vertex> = HashMap::new();
        for &(lineno, a, b) in &raw {
            let mut ends = [0; 2];
            for (slot, t) in ends.iter_mut().zip([a, b]) {
                *slot = match index.get(t) {
                    Some(&v) => v,
                    None => {
                        if labels.len() == n {
                            return Err(syntax(lineno, format!("more than {n} distinct labels")));
                        }
                        labels.push(t.to_string());
                        index.insert(t, labels.len() - 1);
                        labels.len() - 1
                    }
                };
            }
            pairs.push((ends[0], ends[1]));
        }
        // vertices never named by an edge keep a synthetic label
        while labels.len() < n {
            let v = labels.len();
            labels.push(format!("_{v}"));
        }
    }
    let graph = Graph::new(n, &pairs)?;
    Ok(LabeledGraph { graph, labels })
}

pub fn parse_dimacs(text: &str) -> Result<LabeledGraph, ParseError> {
    let mut n = None;
    let mut declared = 0;
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = line.trim();
        let mut toks = line.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(syntax(lineno, "second `p` line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    _ => return Err(syntax(lineno, "expected `p edge n m`")),
                }
                n = Some(parse_count(toks.next(), lineno, "vertex count")?);
                declared = parse_count(toks.next(), lineno, "edge count")?;
            }
            Some("e") => {
                let n = n.ok_or_else(|| syntax(lineno, "`e` line before `p` header"))?;
                let u = parse_count(toks.next(), lineno, "endpoint")?;
                let v = parse_count(toks.next(), lineno, "endpoint")?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(syntax(lineno, format!("endpoint {w} outside 1..={n}")));
                    }
                }
                pairs.push((u - 1, v - 1));
            }
            Some(other) => return Err(syntax(lineno, format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or(ParseError::MissingHeader)?;
    if pairs.len() != declared {
        return Err(ParseError::EdgeCount {
            declared,
            found: pairs.len(),
        });
    }
    Ok(LabeledGraph::unlabeled(Graph::new(n, &pairs)?))
}

/// Writes the 0-indexed edge-list format, preceded by `# ` comment lines.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Edge list using the graph's labels in place of ids.
pub fn write_labeled_edge_list(lg: &LabeledGraph) -> String {
    if lg.has_identity_labels() {
        return write_edge_list(&lg.graph, &[]);
    }
    let mut out = format!("{} {}\n", lg.graph.vertex_count(), lg.graph.edge_count());
    for &(u, v) in lg.graph.edges() {
        let _ = writeln!(out, "{} {}", lg.labels[u], lg.labels[v]);
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GraphError;
    use crate::generators::{make_named, random_connected_graph, NamedGraph};
    use proptest::prelude::*;

    #[test]
    fn numeric_edge_list() {
        let lg = parse("# a path\n3 2\n0 1\n1 2\n", Format::EdgeList).unwrap();
        assert_eq!(lg.graph, Graph::new(3, &[(0, 1), (1, 2)]).unwrap());
        assert!(lg.has_identity_labels());
    }

    #[test]
    fn labeled_edge_list() {
        let lg = parse("4 3\nalice bob\nbob carol\ncarol dave\n", Format::EdgeList).unwrap();
        assert_eq!(lg.labels, vec!["alice", "bob", "carol", "dave"]);
        assert_eq!(lg.graph.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(lg.vertex_of("carol"), Some(2));
        let back = parse(&write_labeled_edge_list(&lg), Format::EdgeList).unwrap();
        assert_eq!(back, lg);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse("", Format::EdgeList), Err(ParseError::MissingHeader));
        assert!(matches!(
            parse("2 2\n0 1\n", Format::EdgeList),
            Err(ParseError::EdgeCount { declared: 2, found: 1 })
        ));
        assert_eq!(
            parse("2 2\n0 1\n1 0\n", Format::EdgeList),
            Err(ParseError::Graph(GraphError::DuplicateEdge(0, 1)))
        );
        assert!(matches!(
            parse("2 1\n0 1 5\n", Format::EdgeList),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse("2 2\na b\nb c\n", Format::EdgeList),
            Err(ParseError::Syntax { line: 3, .. })
        ));
    }

    #[test]
    fn dimacs() {
        let lg = parse("c hi\np edge 3 2\ne 1 2\ne 2 3\n", Format::Dimacs).unwrap();
        assert_eq!(lg.graph, Graph::new(3, &[(0, 1), (1, 2)]).unwrap());
        assert!(parse("p edge 2 1\ne 0 1\n", Format::Dimacs).is_err());
        assert!(parse("e 1 2\n", Format::Dimacs).is_err());
        let ico = make_named(NamedGraph::Icosahedron).unwrap();
        assert_eq!(parse(&write_dimacs(&ico), Format::Dimacs).unwrap().graph, ico);
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(n in 1usize..30, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = random_connected_graph(n, p, seed).unwrap();
            let text = write_edge_list(&g, &["generated".to_string()]);
            prop_assert_eq!(parse(&text, Format::EdgeList).unwrap().graph, g);
        }
    }
}
