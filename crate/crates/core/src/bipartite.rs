//! Bipartite views, Hopcroft–Karp, and Hall-condition witnesses.

use std::collections::VecDeque;

use crate::error::BipartiteError;
use crate::graph::{normalize, Edge, Graph, Matching, Vertex};

const NIL: usize = usize::MAX;

/// The bipartite subgraph between two disjoint vertex sets, keeping only
/// edges that cross. Vertex ids stay those of the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteView {
    left: Vec<Vertex>,
    right: Vec<Vertex>,
    /// left index -> sorted right indices
    adj: Vec<Vec<usize>>,
}

impl BipartiteView {
    /// Maximal bipartite subgraph of `g` with sides `left`, `right`.
    pub fn from_graph(g: &Graph, left: &[Vertex], right: &[Vertex]) -> Self {
        let mut edges = Vec::new();
        for &u in left {
            for &w in g.neighbors(u) {
                if right.contains(&w) {
                    edges.push((u, w));
                }
            }
        }
        Self::from_edges(left, right, &edges)
    }

    /// View over explicit `(left, right)` pairs; pairs not crossing the
    /// sides are dropped.
    pub fn from_edges(left: &[Vertex], right: &[Vertex], edges: &[(Vertex, Vertex)]) -> Self {
        let mut left = left.to_vec();
        let mut right = right.to_vec();
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        assert!(
            left.iter().all(|v| right.binary_search(v).is_err()),
            "sides of a bipartite view must be disjoint"
        );
        let mut adj = vec![Vec::new(); left.len()];
        for &(a, b) in edges {
            let (l, r) = match (left.binary_search(&a), right.binary_search(&b)) {
                (Ok(l), Ok(r)) => (l, r),
                _ => match (left.binary_search(&b), right.binary_search(&a)) {
                    (Ok(l), Ok(r)) => (l, r),
                    _ => continue,
                },
            };
            adj[l].push(r);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Self { left, right, adj }
    }

    pub fn left(&self) -> &[Vertex] {
        &self.left
    }

    pub fn right(&self) -> &[Vertex] {
        &self.right
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        let probe = |l: Vertex, r: Vertex| match (self.left.binary_search(&l), self.right.binary_search(&r)) {
            (Ok(li), Ok(ri)) => self.adj[li].binary_search(&ri).is_ok(),
            _ => false,
        };
        probe(a, b) || probe(b, a)
    }

    /// Right-side neighbours of left vertex `v`.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        match self.left.binary_search(&v) {
            Ok(i) => self.adj[i].iter().map(|&r| self.right[r]).collect(),
            Err(_) => Vec::new(),
        }
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (l, list) in self.adj.iter().enumerate() {
            for &r in list {
                out.push(normalize(self.left[l], self.right[r]));
            }
        }
        out.sort_unstable();
        out
    }

    /// The view with the given vertices deleted from either side.
    pub fn without(&self, drop: &[Vertex]) -> Self {
        let left: Vec<Vertex> = self.left.iter().copied().filter(|v| !drop.contains(v)).collect();
        let right: Vec<Vertex> = self.right.iter().copied().filter(|v| !drop.contains(v)).collect();
        let edges: Vec<Edge> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(l, list)| list.iter().map(move |&r| (l, r)))
            .map(|(l, r)| (self.left[l], self.right[r]))
            .collect();
        Self::from_edges(&left, &right, &edges)
    }
}

struct HopcroftKarp<'a> {
    view: &'a BipartiteView,
    mate_left: Vec<usize>,
    mate_right: Vec<usize>,
    dist: Vec<usize>,
}

impl<'a> HopcroftKarp<'a> {
    fn new(view: &'a BipartiteView) -> Self {
        Self {
            view,
            mate_left: vec![NIL; view.left.len()],
            mate_right: vec![NIL; view.right.len()],
            dist: vec![NIL; view.left.len()],
        }
    }

    /// Layers the free-left BFS; true if some free right vertex is reached.
    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for (l, d) in self.dist.iter_mut().enumerate() {
            if self.mate_left[l] == NIL {
                *d = 0;
                queue.push_back(l);
            } else {
                *d = NIL;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &self.view.adj[l] {
                let next = self.mate_right[r];
                if next == NIL {
                    found = true;
                } else if self.dist[next] == NIL {
                    self.dist[next] = self.dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        found
    }

    fn dfs(&mut self, l: usize) -> bool {
        for i in 0..self.view.adj[l].len() {
            let r = self.view.adj[l][i];
            let next = self.mate_right[r];
            if next == NIL || (self.dist[next] == self.dist[l] + 1 && self.dfs(next)) {
                self.mate_left[l] = r;
                self.mate_right[r] = l;
                return true;
            }
        }
        self.dist[l] = NIL;
        false
    }

    fn run(mut self) -> Self {
        while self.bfs() {
            for l in 0..self.view.left.len() {
                if self.mate_left[l] == NIL {
                    self.dfs(l);
                }
            }
        }
        self
    }

    fn matching(&self) -> Matching {
        let pairs = self
            .mate_left
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r != NIL)
            .map(|(l, &r)| (self.view.left[l], self.view.right[r]));
        Matching::new(pairs).expect("Hopcroft-Karp mates are disjoint")
    }

    /// Left and right vertices reachable by alternating paths from the
    /// exposed left vertices, once no augmenting path remains.
    fn alternating_reach(&self) -> (Vec<Vertex>, Vec<Vertex>) {
        let mut seen_left = vec![false; self.view.left.len()];
        let mut seen_right = vec![false; self.view.right.len()];
        let mut queue: VecDeque<usize> = (0..self.view.left.len())
            .filter(|&l| self.mate_left[l] == NIL)
            .collect();
        for &l in &queue {
            seen_left[l] = true;
        }
        while let Some(l) = queue.pop_front() {
            for &r in &self.view.adj[l] {
                if !seen_right[r] {
                    seen_right[r] = true;
                    let next = self.mate_right[r];
                    if next != NIL && !seen_left[next] {
                        seen_left[next] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
        let pick = |seen: &[bool], ids: &[Vertex]| -> Vec<Vertex> {
            seen.iter().zip(ids).filter(|(s, _)| **s).map(|(_, &v)| v).collect()
        };
        (
            pick(&seen_left, &self.view.left),
            pick(&seen_right, &self.view.right),
        )
    }
}

/// Maximum matching of the view.
pub fn hopcroft_karp(view: &BipartiteView) -> Matching {
    HopcroftKarp::new(view).run().matching()
}

/// A left subset `W` with `|N(W)| < |W|`, if Hall's condition fails.
pub fn hall_violator(view: &BipartiteView) -> Option<Vec<Vertex>> {
    hall_witness(view).map(|(w, _)| w)
}

fn hall_witness(view: &BipartiteView) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let hk = HopcroftKarp::new(view).run();
    if hk.mate_left.iter().all(|&r| r != NIL) {
        return None;
    }
    // every reached right vertex is matched to a reached left vertex, and at
    // least one reached left vertex is exposed
    Some(hk.alternating_reach())
}

/// A matching of the view that contains every `forced` edge and covers the
/// whole left side.
///
/// The forced edges' endpoints are deleted, the residual view is matched
/// with Hopcroft–Karp, and the forced edges are added back; augmentation
/// therefore never re-routes a forced vertex.
pub fn saturating_matching_forced(
    view: &BipartiteView,
    forced: &Matching,
) -> Result<Matching, BipartiteError> {
    for &(a, b) in forced.edges() {
        let crossing = (view.left.binary_search(&a).is_ok() && view.right.binary_search(&b).is_ok())
            || (view.left.binary_search(&b).is_ok() && view.right.binary_search(&a).is_ok());
        if !crossing || !view.has_edge(a, b) {
            return Err(BipartiteError::ForcedEdgeOutsideView(a, b));
        }
    }
    let residual = view.without(&forced.vertices());
    if let Some((witness, neighborhood)) = hall_witness(&residual) {
        return Err(BipartiteError::HallViolation {
            witness,
            neighborhood,
        });
    }
    let rest = hopcroft_karp(&residual);
    Ok(rest.union(forced)?)
}
