//! Vertex connectivity through unit-capacity max-flow on the vertex-split
//! network.
//!
//! Every vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1` joined by an
//! internal arc of capacity 1. An undirected edge `uv` becomes the arcs
//! `u_out -> v_in` and `v_out -> u_in`, whose capacity exceeds any possible
//! flow so that a minimum cut only ever severs internal arcs. Augmentation
//! follows shortest paths (Edmonds–Karp).

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{FlowError, GraphError};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    rev: usize,
    cap: u32,
    initial: u32,
}

/// Residual network over the split graph.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    arcs: Vec<Vec<Arc>>,
    source: usize,
    sink: usize,
}

#[inline]
fn v_in(v: Vertex) -> usize {
    2 * v
}

#[inline]
fn v_out(v: Vertex) -> usize {
    2 * v + 1
}

impl FlowNetwork {
    /// Split network of `g`, with source `s_out` and sink `t_in`.
    pub fn split(g: &Graph, s: Vertex, t: Vertex) -> Self {
        let n = g.vertex_count();
        let big = u32::try_from(n + 1).unwrap_or(u32::MAX);
        let mut net = FlowNetwork {
            arcs: vec![Vec::new(); 2 * n],
            source: v_out(s),
            sink: v_in(t),
        };
        for v in g.vertices() {
            net.add_arc(v_in(v), v_out(v), 1);
        }
        for &(u, v) in g.edges() {
            net.add_arc(v_out(u), v_in(v), big);
            net.add_arc(v_out(v), v_in(u), big);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let rf = self.arcs[to].len();
        let rt = self.arcs[from].len();
        self.arcs[from].push(Arc {
            to,
            rev: rf,
            cap,
            initial: cap,
        });
        self.arcs[to].push(Arc {
            to: from,
            rev: rt,
            cap: 0,
            initial: 0,
        });
    }

    pub fn node_count(&self) -> usize {
        self.arcs.len()
    }

    /// Restores all capacities and moves the terminals.
    pub fn reset(&mut self, s: Vertex, t: Vertex) {
        for list in &mut self.arcs {
            for a in list.iter_mut() {
                a.cap = a.initial;
            }
        }
        self.source = v_out(s);
        self.sink = v_in(t);
    }

    /// Pushes unit augmenting paths until none remain or `limit` units flow.
    pub fn max_flow(&mut self, limit: usize) -> usize {
        let nodes = self.node_count();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; nodes];
        let mut queue = VecDeque::new();
        let mut flow = 0;
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = None);
            queue.clear();
            queue.push_back(self.source);
            let mut reached = false;
            'bfs: while let Some(x) = queue.pop_front() {
                for (i, a) in self.arcs[x].iter().enumerate() {
                    if a.cap > 0 && a.to != self.source && parent[a.to].is_none() {
                        parent[a.to] = Some((x, i));
                        if a.to == self.sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(a.to);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut y = self.sink;
            while let Some((x, i)) = parent[y] {
                let rev = self.arcs[x][i].rev;
                self.arcs[x][i].cap -= 1;
                self.arcs[y][rev].cap += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }

    fn residual_reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        let mut stack = vec![self.source];
        seen[self.source] = true;
        while let Some(x) = stack.pop() {
            for a in &self.arcs[x] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }

    /// Vertices whose internal arc crosses the residual cut, after a
    /// maximum flow has been pushed.
    pub fn cut_vertices(&self) -> Vec<Vertex> {
        let seen = self.residual_reachable();
        (0..self.node_count() / 2)
            .filter(|&v| seen[v_in(v)] && !seen[v_out(v)])
            .collect()
    }

    /// Decomposes the current flow into source-to-sink vertex paths.
    pub fn flow_paths(&self) -> Vec<Vec<Vertex>> {
        let mut used: Vec<Vec<u32>> = self
            .arcs
            .iter()
            .map(|l| l.iter().map(|a| a.initial.saturating_sub(a.cap)).collect())
            .collect();
        let mut paths = Vec::new();
        loop {
            let mut node = self.source;
            let mut path = vec![node / 2];
            let mut advanced = true;
            while node != self.sink && advanced {
                advanced = false;
                for (i, a) in self.arcs[node].iter().enumerate() {
                    if a.initial > 0 && used[node][i] > 0 {
                        used[node][i] -= 1;
                        node = a.to;
                        if node.is_multiple_of(2) {
                            path.push(node / 2);
                        }
                        advanced = true;
                        break;
                    }
                }
            }
            if node != self.sink {
                break;
            }
            paths.push(path);
        }
        paths
    }
}

fn check_pair(g: &Graph, s: Vertex, t: Vertex) -> Result<(), FlowError> {
    let n = g.vertex_count();
    for v in [s, t] {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n }.into());
        }
    }
    if s == t {
        return Err(FlowError::SameVertex(s));
    }
    if g.has_edge(s, t) {
        return Err(FlowError::Adjacent(s, t));
    }
    Ok(())
}

/// Minimum set of vertices, avoiding `s` and `t`, whose removal separates
/// the non-adjacent pair `s`, `t`.
pub fn min_st_vertex_cut(g: &Graph, s: Vertex, t: Vertex) -> Result<Vec<Vertex>, FlowError> {
    check_pair(g, s, t)?;
    let mut net = FlowNetwork::split(g, s, t);
    net.max_flow(usize::MAX);
    Ok(net.cut_vertices())
}

/// A maximum family of internally vertex-disjoint `s`–`t` paths.
pub fn disjoint_paths(g: &Graph, s: Vertex, t: Vertex) -> Result<Vec<Vec<Vertex>>, FlowError> {
    check_pair(g, s, t)?;
    let mut net = FlowNetwork::split(g, s, t);
    net.max_flow(usize::MAX);
    Ok(net.flow_paths())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CutKind {
    /// Removal disconnects the graph.
    ProperCut,
    /// The graph is complete; the set is `n - 1` vertices.
    CompleteGraphConvention,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCut {
    pub vertices: Vec<Vertex>,
    pub kind: CutKind,
}

impl VertexCut {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Global minimum vertex cut of a connected graph, so `|result| = κ(g)`.
///
/// With `s` a minimum-degree vertex, some minimum cut misses either `s` or
/// one of its neighbours (a cut of size κ ≤ δ cannot hold all of `N[s]`).
/// Trying every non-adjacent partner of `s` and of each neighbour of `s`
/// therefore finds one.
pub fn min_vertex_cut(g: &Graph) -> Result<VertexCut, FlowError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(FlowError::TooSmall);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    if g.is_complete() {
        return Ok(VertexCut {
            vertices: (0..n - 1).collect(),
            kind: CutKind::CompleteGraphConvention,
        });
    }
    let s = g
        .vertices()
        .min_by_key(|&v| (g.degree(v), v))
        .expect("non-empty");
    let mut best: Vec<Vertex> = g.neighbors(s).to_vec();
    let mut net = FlowNetwork::split(g, s, s);
    let mut sources = vec![s];
    sources.extend_from_slice(g.neighbors(s));
    for &a in &sources {
        for b in g.vertices() {
            if b == a || g.has_edge(a, b) {
                continue;
            }
            // pairs already tried from the other end
            if a != s && sources.contains(&b) && b < a {
                continue;
            }
            net.reset(a, b);
            if net.max_flow(best.len()) < best.len() {
                best = net.cut_vertices();
            }
        }
    }
    best.sort_unstable();
    Ok(VertexCut {
        vertices: best,
        kind: CutKind::ProperCut,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_named, NamedGraph};
    use crate::graph::components_excluding;

    #[test]
    fn st_cut_examples() {
        let p3 = make_named(NamedGraph::Path(3)).unwrap();
        assert_eq!(min_st_vertex_cut(&p3, 0, 2).unwrap(), vec![1]);
        let c4 = make_named(NamedGraph::Cycle(4)).unwrap();
        assert_eq!(min_st_vertex_cut(&c4, 0, 2).unwrap(), vec![1, 3]);
        assert_eq!(min_st_vertex_cut(&p3, 0, 1), Err(FlowError::Adjacent(0, 1)));
        assert_eq!(min_st_vertex_cut(&p3, 1, 1), Err(FlowError::SameVertex(1)));
    }

    #[test]
    fn petersen_pairs_need_three() {
        let pet = make_named(NamedGraph::Petersen).unwrap();
        for s in pet.vertices() {
            for t in s + 1..10 {
                if !pet.has_edge(s, t) {
                    let cut = min_st_vertex_cut(&pet, s, t).unwrap();
                    assert_eq!(cut.len(), 3);
                    let comps = components_excluding(&pet, &cut);
                    let side = |v| comps.iter().position(|c| c.contains(&v));
                    assert_ne!(side(s), side(t));
                    assert_eq!(disjoint_paths(&pet, s, t).unwrap().len(), 3);
                }
            }
        }
    }

    #[test]
    fn global_cut_examples() {
        let ico = make_named(NamedGraph::Icosahedron).unwrap();
        let cut = min_vertex_cut(&ico).unwrap();
        assert_eq!(cut.len(), 5);
        assert_eq!(cut.kind, CutKind::ProperCut);

        let p3 = make_named(NamedGraph::Path(3)).unwrap();
        assert_eq!(
            min_vertex_cut(&p3).unwrap(),
            VertexCut {
                vertices: vec![1],
                kind: CutKind::ProperCut
            }
        );

        let k5 = make_named(NamedGraph::Complete(5)).unwrap();
        let cut = min_vertex_cut(&k5).unwrap();
        assert_eq!(cut.len(), 4);
        assert_eq!(cut.kind, CutKind::CompleteGraphConvention);

        assert_eq!(min_vertex_cut(&Graph::empty(1)), Err(FlowError::TooSmall));
        assert_eq!(
            min_vertex_cut(&Graph::empty(3)),
            Err(FlowError::Graph(GraphError::Disconnected))
        );
    }

    #[test]
    fn paths_are_internally_disjoint() {
        let grid = make_named(NamedGraph::Grid(4, 4)).unwrap();
        let paths = disjoint_paths(&grid, 0, 15).unwrap();
        assert_eq!(paths.len(), 2);
        let mut inner: Vec<Vertex> = Vec::new();
        for p in &paths {
            assert_eq!((p[0], *p.last().unwrap()), (0, 15));
            for w in p.windows(2) {
                assert!(grid.has_edge(w[0], w[1]));
            }
            inner.extend(&p[1..p.len() - 1]);
        }
        let count = inner.len();
        inner.sort_unstable();
        inner.dedup();
        assert_eq!(inner.len(), count);
    }
}
