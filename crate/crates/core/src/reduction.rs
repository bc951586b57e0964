//! The edge-domination gadget: from a bipartite `H` with sides `X`, `Y`,
//! build `H'` by adding stable mirror sets `X'`, `Y'` completely joined to
//! `X` and `Y` respectively. `H` has an independent edge dominating set of
//! at most `k` edges exactly when `H'` has a matching vertex-cutset of at
//! most `k` edges (for `k ≤ min(|X|, |Y|)`).

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{ExactError, GraphError};
use crate::exact;
use crate::generators::rng_from_seed;
use crate::graph::{classify_special, Edge, Graph, SpecialClass, Vertex};
use crate::io;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("(X, Y) is not a bipartition of the source graph: {0}")]
    NotBipartite(String),
    #[error("budget {k} outside 1..={max}")]
    BudgetOutOfRange { k: usize, max: usize },
    #[error("infeasible generator parameters: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionInstance {
    pub source: Graph,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    pub gadget: Graph,
    /// X' in gadget ids; the source keeps ids `0..n`.
    pub x_mirror: Vec<Vertex>,
    pub y_mirror: Vec<Vertex>,
    pub budget: usize,
}

impl ReductionInstance {
    /// Gadget edge list with a comment header recording the parts and `k`.
    pub fn to_edge_list(&self) -> String {
        let list = |vs: &[Vertex]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        let comments = vec![
            "matching vertex-cutset reduction gadget".to_string(),
            format!("X: {}", list(&self.x)),
            format!("Y: {}", list(&self.y)),
            format!("X': {}", list(&self.x_mirror)),
            format!("Y': {}", list(&self.y_mirror)),
            format!("k: {}", self.budget),
        ];
        io::write_edge_list(&self.gadget, &comments)
    }
}

fn check_bipartition(h: &Graph, x: &[Vertex], y: &[Vertex]) -> Result<(), ReductionError> {
    let n = h.vertex_count();
    let mut side = vec![None; n];
    for (vs, tag) in [(x, false), (y, true)] {
        for &v in vs {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n }.into());
            }
            if side[v].replace(tag).is_some() {
                return Err(ReductionError::NotBipartite(format!("vertex {v} listed twice")));
            }
        }
    }
    if let Some(v) = side.iter().position(Option::is_none) {
        return Err(ReductionError::NotBipartite(format!("vertex {v} in neither side")));
    }
    if let Some(&(u, v)) = h.edges().iter().find(|&&(u, v)| side[u] == side[v]) {
        return Err(ReductionError::NotBipartite(format!("edge {u}-{v} inside one side")));
    }
    Ok(())
}

pub fn build_reduction(h: &Graph, x: &[Vertex], y: &[Vertex], k: usize) -> Result<ReductionInstance, ReductionError> {
    check_bipartition(h, x, y)?;
    if !h.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let max = x.len().min(y.len());
    if k == 0 || k > max {
        return Err(ReductionError::BudgetOutOfRange { k, max });
    }
    let mut x = x.to_vec();
    let mut y = y.to_vec();
    x.sort_unstable();
    y.sort_unstable();
    let n = h.vertex_count();
    let x_mirror: Vec<Vertex> = (n..n + x.len()).collect();
    let y_mirror: Vec<Vertex> = (n + x.len()..2 * n).collect();
    let mut pairs: Vec<Edge> = h.edges().to_vec();
    for (side, mirror) in [(&x, &x_mirror), (&y, &y_mirror)] {
        for &a in side.iter() {
            for &b in mirror {
                pairs.push((a, b));
            }
        }
    }
    let gadget = Graph::new(2 * n, &pairs)?;
    Ok(ReductionInstance {
        source: h.clone(),
        x,
        y,
        gadget,
        x_mirror,
        y_mirror,
        budget: k,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceRow {
    pub k: usize,
    /// min-IEDS(H) ≤ k
    pub source_side: bool,
    /// H' has a matching vertex-cutset of at most k edges
    pub gadget_side: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub min_ieds: usize,
    pub min_eds: usize,
    /// κ_M of the gadget, when it is at most the largest budget checked
    pub gadget_kappa_m: Option<usize>,
    pub gadget_class: SpecialClass,
    pub rows: Vec<EquivalenceRow>,
}

impl EquivalenceReport {
    pub fn discrepancies(&self) -> usize {
        self.rows.iter().filter(|r| r.source_side != r.gadget_side).count()
    }

    pub fn holds(&self) -> bool {
        self.discrepancies() == 0
    }
}

/// Compares both sides of the reduction for every `k` in `1..=k_max`,
/// capped at `min(|X|, |Y|)`.
pub fn verify_equivalence(h: &Graph, x: &[Vertex], y: &[Vertex], k_max: usize) -> Result<EquivalenceReport, ReductionError> {
    let cap = k_max.min(x.len()).min(y.len());
    // the gadget does not depend on k; build it once at the smallest budget
    let inst = build_reduction(h, x, y, 1)?;
    let ieds = exact::min_independent_edge_dominating_set(h)?;
    let eds = exact::min_edge_dominating_set(h)?;
    let kappa_m = exact::cutset_up_to(&inst.gadget, cap, exact::DEFAULT_BUDGET)?.map(|m| m.len());
    let rows = (1..=cap)
        .map(|k| EquivalenceRow {
            k,
            source_side: ieds.len() <= k,
            gadget_side: kappa_m.is_some_and(|km| km <= k),
        })
        .collect();
    Ok(EquivalenceReport {
        min_ieds: ieds.len(),
        min_eds: eds.len(),
        gadget_kappa_m: kappa_m,
        gadget_class: classify_special(&inst.gadget),
        rows,
    })
}

/// Connected bipartite graph on sides of `nx` and `ny` vertices with maximum
/// degree at most `max_degree`. X is `0..nx`, Y is `nx..nx+ny`.
///
/// A random spanning tree comes first (retrying a few orders if the greedy
/// attachment paints itself into a corner), then random extra X–Y pairs
/// are kept with probability one half while both degrees allow.
pub fn random_bipartite_bounded_degree(
    nx: usize,
    ny: usize,
    max_degree: usize,
    seed: u64,
) -> Result<(Graph, Vec<Vertex>, Vec<Vertex>), ReductionError> {
    if nx == 0 || ny == 0 || max_degree == 0 {
        return Err(ReductionError::Infeasible("sides and degree bound must be positive".into()));
    }
    // a spanning tree has nx + ny - 1 edges, each with one end per side
    if nx + ny - 1 > max_degree * nx.min(ny) {
        return Err(ReductionError::Infeasible(format!(
            "no spanning tree with max degree {max_degree} on sides {nx}, {ny}"
        )));
    }
    let n = nx + ny;
    let is_x = |v: Vertex| v < nx;
    let mut rng = rng_from_seed(seed);
    for _ in 0..64 {
        let mut deg = vec![0usize; n];
        let mut in_tree = vec![false; n];
        let mut pairs: Vec<Edge> = Vec::with_capacity(n);
        let root = rng.gen_range(0..n);
        in_tree[root] = true;
        let mut stuck = false;
        for _ in 1..n {
            let mut options: Vec<Edge> = Vec::new();
            for a in (0..n).filter(|&a| in_tree[a] && deg[a] < max_degree) {
                for b in (0..n).filter(|&b| !in_tree[b] && is_x(a) != is_x(b)) {
                    options.push((a, b));
                }
            }
            let Some(&(a, b)) = options.choose(&mut rng) else {
                stuck = true;
                break;
            };
            in_tree[b] = true;
            deg[a] += 1;
            deg[b] += 1;
            pairs.push((a, b));
        }
        if stuck {
            continue;
        }
        let mut extra: Vec<Edge> = (0..nx)
            .flat_map(|a| (nx..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !pairs.contains(&(a, b)) && !pairs.contains(&(b, a)))
            .collect();
        extra.shuffle(&mut rng);
        for (a, b) in extra {
            if deg[a] < max_degree && deg[b] < max_degree && rng.gen_bool(0.5) {
                deg[a] += 1;
                deg[b] += 1;
                pairs.push((a, b));
            }
        }
        let g = Graph::new(n, &pairs)?;
        return Ok((g, (0..nx).collect(), (nx..n).collect()));
    }
    Err(ReductionError::Infeasible(format!(
        "could not grow a spanning tree with max degree {max_degree} on sides {nx}, {ny}"
    )))
}
