//! Simple undirected graphs, matchings, and the matching vertex-cutset check.
//!
//! A [`Graph`] is immutable once built. Vertices are dense ids `0..n`, each
//! adjacency list is sorted ascending, and the edge list holds every edge
//! once as `(u, v)` with `u < v`, sorted lexicographically.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub type Vertex = usize;

/// An unordered vertex pair, stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

#[inline]
pub fn normalize(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges)
    }
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting self-loops, repeated edges
    /// (in either orientation) and ids outside `0..n`.
    pub fn new(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push(normalize(u, v));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self { adjacency, edges })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count()
            && v < self.vertex_count()
            && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// δ(H); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || components_excluding(self, &[]).len() == 1
    }

    /// Subgraph induced by `keep`. Vertex `i` of the result is `keep[i]` in
    /// `self`; the returned vector is that mapping.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let mut adjacency = vec![Vec::new(); keep.len()];
        let mut edges = Vec::new();
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adjacency[v] {
                let j = local[w];
                if j != usize::MAX {
                    adjacency[i].push(j);
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
            adjacency[i].sort_unstable();
        }
        edges.sort_unstable();
        (Graph { adjacency, edges }, keep.to_vec())
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        let pairs: Vec<Edge> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.vertex_count(), &pairs).expect("relabeling preserves simplicity")
    }

    /// Proper 2-colouring as a side flag per vertex, or `None` when an odd
    /// cycle exists. Each component's smallest vertex gets side `false`.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adjacency[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }
}

/// Connected components of `g`, ordered by smallest member, each sorted.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    components_excluding(g, &[])
}

/// Components of `g - removed`.
pub fn components_excluding(g: &Graph, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &v in removed {
        seen[v] = true;
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut comp = Vec::new();
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A set of pairwise vertex-disjoint edges, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Normalizes and sorts `pairs`, rejecting any vertex used twice.
    pub fn new(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut edges: Vec<Edge> = pairs.into_iter().map(|(u, v)| normalize(u, v)).collect();
        edges.sort_unstable();
        let mut ends: Vec<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        ends.sort_unstable();
        if let Some(w) = ends.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::SharedEndpoint(w[0]));
        }
        Ok(Self { edges })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// V(M), sorted.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }

    /// Partner of `v`, if `v` is covered.
    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.binary_search(&normalize(u, v)).is_ok()
    }

    /// Checks every edge is present in `g`.
    pub fn validate_in(&self, g: &Graph) -> Result<(), GraphError> {
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return Err(GraphError::EdgeNotInGraph(u, v));
            }
        }
        Ok(())
    }

    /// Union with `other`; fails if the result is not a matching.
    pub fn union(&self, other: &Matching) -> Result<Matching, GraphError> {
        Matching::new(self.edges.iter().chain(other.edges.iter()).copied())
    }

    pub fn without(&self, drop: &[Edge]) -> Matching {
        let drop: Vec<Edge> = drop.iter().map(|&(u, v)| normalize(u, v)).collect();
        Matching {
            edges: self.edges.iter().copied().filter(|e| !drop.contains(e)).collect(),
        }
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Structural class relevant to the exclusions on K_{2n} and K_{n,n}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpecialClass {
    /// K_n with n even; carries n.
    CompleteEven(usize),
    /// K_n with n odd; carries n.
    CompleteOdd(usize),
    /// K_{n,n}; carries the side size n.
    BalancedCompleteBipartite(usize),
    General,
}

impl SpecialClass {
    /// True for the classes that have no matching vertex-cutset.
    pub fn is_excluded(self) -> bool {
        matches!(
            self,
            SpecialClass::CompleteEven(_) | SpecialClass::BalancedCompleteBipartite(_)
        )
    }
}

impl fmt::Display for SpecialClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialClass::CompleteEven(n) | SpecialClass::CompleteOdd(n) => write!(f, "K{n}"),
            SpecialClass::BalancedCompleteBipartite(n) => write!(f, "K{n},{n}"),
            SpecialClass::General => f.write_str("general"),
        }
    }
}

pub fn classify_special(g: &Graph) -> SpecialClass {
    let n = g.vertex_count();
    if g.is_complete() {
        return if n.is_multiple_of(2) {
            SpecialClass::CompleteEven(n)
        } else {
            SpecialClass::CompleteOdd(n)
        };
    }
    if n.is_multiple_of(2) && g.edge_count() == (n / 2) * (n / 2) && g.is_connected() {
        if let Some(side) = g.two_coloring() {
            let left = side.iter().filter(|&&s| s).count();
            // sides a + b = n with a*b >= (n/2)^2 forces a = b and completeness
            if left * 2 == n {
                return SpecialClass::BalancedCompleteBipartite(n / 2);
            }
        }
    }
    SpecialClass::General
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Disconnected,
    Trivial,
    NotACutset,
}

impl Verdict {
    pub fn is_cutset(self) -> bool {
        !matches!(self, Verdict::NotACutset)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutsetCertificate {
    pub removed: Vec<Vertex>,
    pub components_after: Vec<Vec<Vertex>>,
    pub verdict: Verdict,
}

impl CutsetCertificate {
    pub fn is_cutset(&self) -> bool {
        self.verdict.is_cutset()
    }
}

/// Verdict for an arbitrary removed vertex set.
pub fn verdict_for(components: &[Vec<Vertex>]) -> Verdict {
    match components {
        [] => Verdict::NotACutset,
        [only] if only.len() == 1 => Verdict::Trivial,
        [_] => Verdict::NotACutset,
        _ => Verdict::Disconnected,
    }
}

/// Deletes V(m) from `g` and reports whether the remainder is disconnected
/// or a single vertex. An empty remainder is not a cutset.
pub fn check_cutset(g: &Graph, m: &Matching) -> Result<CutsetCertificate, GraphError> {
    m.validate_in(g)?;
    let removed = m.vertices();
    let components_after = components_excluding(g, &removed);
    let verdict = verdict_for(&components_after);
    Ok(CutsetCertificate {
        removed,
        components_after,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_named, random_connected_graph, NamedGraph};

    fn path(n: usize) -> Graph {
        make_named(NamedGraph::Path(n)).unwrap()
    }

    #[test]
    fn build_rejects_malformed_input() {
        assert_eq!(
            Graph::new(2, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn build_small_graphs() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.neighbors(1), &[0, 2]);
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.vertex_count(), 1);
        assert!(k1.is_connected());
    }

    #[test]
    fn components_examples() {
        assert_eq!(connected_components(&path(3)), vec![vec![0, 1, 2]]);
        assert_eq!(connected_components(&Graph::empty(2)), vec![vec![0], vec![1]]);
    }

    #[test]
    fn classify_examples() {
        let k4 = make_named(NamedGraph::Complete(4)).unwrap();
        assert_eq!(classify_special(&k4), SpecialClass::CompleteEven(4));
        let k33 = make_named(NamedGraph::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(classify_special(&k33), SpecialClass::BalancedCompleteBipartite(3));
        let c5 = make_named(NamedGraph::Cycle(5)).unwrap();
        assert_eq!(classify_special(&c5), SpecialClass::General);
        // K2 is complete, and also K_{1,1}
        let k2 = make_named(NamedGraph::Complete(2)).unwrap();
        assert_eq!(classify_special(&k2), SpecialClass::CompleteEven(2));
        // C4 = K_{2,2}
        let c4 = make_named(NamedGraph::Cycle(4)).unwrap();
        assert_eq!(classify_special(&c4), SpecialClass::BalancedCompleteBipartite(2));
        let k23 = make_named(NamedGraph::CompleteBipartite(2, 3)).unwrap();
        assert_eq!(classify_special(&k23), SpecialClass::General);
    }

    #[test]
    fn classify_complete_graphs_by_parity() {
        for n in 1..=12 {
            let kn = make_named(NamedGraph::Complete(n)).unwrap();
            let expected = if n % 2 == 0 {
                SpecialClass::CompleteEven(n)
            } else {
                SpecialClass::CompleteOdd(n)
            };
            assert_eq!(classify_special(&kn), expected, "K{n}");
        }
    }

    #[test]
    fn check_cutset_examples() {
        let p4 = path(4);
        let cert = check_cutset(&p4, &Matching::new([(1, 2)]).unwrap()).unwrap();
        assert_eq!(cert.verdict, Verdict::Disconnected);
        assert_eq!(cert.components_after, vec![vec![0], vec![3]]);

        let k4 = make_named(NamedGraph::Complete(4)).unwrap();
        let cert = check_cutset(&k4, &Matching::new([(0, 3)]).unwrap()).unwrap();
        assert_eq!(cert.verdict, Verdict::NotACutset);

        let k3 = make_named(NamedGraph::Complete(3)).unwrap();
        let cert = check_cutset(&k3, &Matching::new([(0, 1)]).unwrap()).unwrap();
        assert_eq!(cert.verdict, Verdict::Trivial);

        // perfect matching empties K4
        let cert = check_cutset(&k4, &Matching::new([(0, 1), (2, 3)]).unwrap()).unwrap();
        assert_eq!(cert.verdict, Verdict::NotACutset);
        assert!(cert.components_after.is_empty());
    }

    #[test]
    fn check_cutset_rejects_foreign_edges() {
        let p4 = path(4);
        assert_eq!(
            check_cutset(&p4, &Matching::new([(0, 2)]).unwrap()),
            Err(GraphError::EdgeNotInGraph(0, 2))
        );
        assert_eq!(
            Matching::new([(0, 1), (1, 2)]),
            Err(GraphError::SharedEndpoint(1))
        );
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let c5 = make_named(NamedGraph::Cycle(5)).unwrap();
        let (sub, map) = c5.induced_subgraph(&[1, 2, 4]);
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(sub.edges(), &[(0, 1)]);
    }

    #[test]
    fn random_graph_components_partition() {
        for seed in 0..20 {
            let g = random_connected_graph(9, 0.3, seed).unwrap();
            let h = Graph::new(9, &g.edges()[..g.edge_count() / 2]).unwrap();
            let comps = connected_components(&h);
            let mut all: Vec<Vertex> = comps.iter().flatten().copied().collect();
            all.sort_unstable();
            assert_eq!(all, (0..9).collect::<Vec<_>>());
            let mut which = [0; 9];
            for (i, c) in comps.iter().enumerate() {
                for &v in c {
                    which[v] = i;
                }
                let (sub, _) = h.induced_subgraph(c);
                assert!(sub.is_connected());
            }
            for &(u, v) in h.edges() {
                assert_eq!(which[u], which[v]);
            }
            let firsts: Vec<Vertex> = comps.iter().map(|c| c[0]).collect();
            let mut sorted = firsts.clone();
            sorted.sort_unstable();
            assert_eq!(firsts, sorted);
        }
    }
}
