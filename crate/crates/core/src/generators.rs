//! Named graph families and seeded random connected graphs.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::{Edge, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    /// Star with the given number of leaves; the centre is vertex 0.
    Star(usize),
    Grid(usize, usize),
    Icosahedron,
    /// K5 minus the edge 3-4.
    K5Minus,
    Petersen,
}

impl NamedGraph {
    pub const NAMES: &'static [&'static str] = &[
        "complete",
        "complete_bipartite",
        "cycle",
        "path",
        "star",
        "grid",
        "icosahedron",
        "k5_minus",
        "petersen",
    ];

    /// Resolves a family name with up to two size parameters.
    pub fn from_name(name: &str, a: Option<usize>, b: Option<usize>) -> Result<Self, GraphError> {
        let need = |p: Option<usize>, what: &str| {
            p.ok_or_else(|| GraphError::BadParams(format!("`{name}` needs {what}")))
        };
        Ok(match name {
            "complete" => NamedGraph::Complete(need(a, "n")?),
            "complete_bipartite" => {
                NamedGraph::CompleteBipartite(need(a, "two side sizes")?, need(b, "two side sizes")?)
            }
            "cycle" => NamedGraph::Cycle(need(a, "n")?),
            "path" => NamedGraph::Path(need(a, "n")?),
            "star" => NamedGraph::Star(need(a, "a leaf count")?),
            "grid" => NamedGraph::Grid(need(a, "rows and columns")?, need(b, "rows and columns")?),
            "icosahedron" => NamedGraph::Icosahedron,
            "k5_minus" => NamedGraph::K5Minus,
            "petersen" => NamedGraph::Petersen,
            other => return Err(GraphError::UnknownName(other.to_string())),
        })
    }
}

impl FromStr for NamedGraph {
    type Err = GraphError;

    /// Accepts `name`, `name:a` or `name:a:b`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let mut num = || -> Result<Option<usize>, GraphError> {
            parts
                .next()
                .map(|p| {
                    p.parse()
                        .map_err(|_| GraphError::BadParams(format!("`{p}` is not a size")))
                })
                .transpose()
        };
        let a = num()?;
        let b = num()?;
        NamedGraph::from_name(name, a, b)
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Complete(n) => write!(f, "complete:{n}"),
            NamedGraph::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a}:{b}"),
            NamedGraph::Cycle(n) => write!(f, "cycle:{n}"),
            NamedGraph::Path(n) => write!(f, "path:{n}"),
            NamedGraph::Star(n) => write!(f, "star:{n}"),
            NamedGraph::Grid(r, c) => write!(f, "grid:{r}:{c}"),
            NamedGraph::Icosahedron => f.write_str("icosahedron"),
            NamedGraph::K5Minus => f.write_str("k5_minus"),
            NamedGraph::Petersen => f.write_str("petersen"),
        }
    }
}

const ICOSAHEDRON: [Edge; 30] = [
    // top vertex 0, upper ring 1..=5, lower ring 6..=10, bottom 11
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
    (1, 6), (2, 6), (2, 7), (3, 7), (3, 8),
    (4, 8), (4, 9), (5, 9), (5, 10), (1, 10),
    (6, 7), (7, 8), (8, 9), (9, 10), (6, 10),
    (6, 11), (7, 11), (8, 11), (9, 11), (10, 11),
];

pub fn make_named(which: NamedGraph) -> Result<Graph, GraphError> {
    let bad = |msg: &str| Err(GraphError::BadParams(format!("{which}: {msg}")));
    match which {
        NamedGraph::Complete(n) => {
            if n == 0 {
                return bad("n must be at least 1");
            }
            let pairs: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            Graph::new(n, &pairs)
        }
        NamedGraph::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return bad("both sides must be non-empty");
            }
            let pairs: Vec<Edge> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
            Graph::new(a + b, &pairs)
        }
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return bad("a cycle needs at least 3 vertices");
            }
            let pairs: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &pairs)
        }
        NamedGraph::Path(n) => {
            if n == 0 {
                return bad("n must be at least 1");
            }
            let pairs: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &pairs)
        }
        NamedGraph::Star(leaves) => {
            let pairs: Vec<Edge> = (1..=leaves).map(|i| (0, i)).collect();
            Graph::new(leaves + 1, &pairs)
        }
        NamedGraph::Grid(rows, cols) => {
            if rows == 0 || cols == 0 {
                return bad("rows and columns must be positive");
            }
            let id = |r: usize, c: usize| r * cols + c;
            let mut pairs = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        pairs.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        pairs.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            Graph::new(rows * cols, &pairs)
        }
        NamedGraph::Icosahedron => Graph::new(12, &ICOSAHEDRON),
        NamedGraph::K5Minus => {
            let pairs: Vec<Edge> = (0..5)
                .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
                .filter(|&e| e != (3, 4))
                .collect();
            Graph::new(5, &pairs)
        }
        NamedGraph::Petersen => {
            let mut pairs = Vec::new();
            for i in 0..5 {
                pairs.push((i, (i + 1) % 5));
                pairs.push((i, i + 5));
                pairs.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::new(10, &pairs)
        }
    }
}

pub(crate) fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph: a uniformly shuffled random spanning tree plus
/// every other pair independently with probability `edge_probability`.
pub fn random_connected_graph(n: usize, edge_probability: f64, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadParams("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(GraphError::BadParams(format!(
            "edge probability {edge_probability} outside [0, 1]"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut present = vec![false; n * n];
    let mut pairs = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let child = order[i];
        present[parent * n + child] = true;
        present[child * n + parent] = true;
        pairs.push((parent, child));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u * n + v] && rng.gen_bool(edge_probability) {
                pairs.push((u, v));
            }
        }
    }
    Graph::new(n, &pairs)
}

/// Random connected graph with exactly `m` edges: a random spanning tree,
/// then uniformly random extra pairs. Suited to large sparse inputs.
pub fn random_connected_graph_with_edges(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::BadParams("n must be at least 1".into()));
    }
    let max = n * (n - 1) / 2;
    if m + 1 < n || m > max {
        return Err(GraphError::BadParams(format!(
            "{m} edges infeasible for a connected graph on {n} vertices"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut pairs = Vec::with_capacity(m);
    for i in 1..n {
        let e = crate::graph::normalize(order[rng.gen_range(0..i)], order[i]);
        seen.insert(e);
        pairs.push(e);
    }
    while pairs.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && seen.insert(crate::graph::normalize(u, v)) {
            pairs.push((u, v));
        }
    }
    Graph::new(n, &pairs)
}
