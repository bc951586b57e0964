//! Brute-force oracles: minimum matching vertex-cutset, its decision
//! version, and minimum (independent) edge dominating sets.
//!
//! Everything here enumerates. Matchings of a fixed size are produced by
//! backtracking over the sorted edge list with increasing indices, so the
//! first witness found is the lexicographically least one.

use serde::{Deserialize, Serialize};

use crate::error::ExactError;
use crate::graph::{Edge, Graph, Matching};

/// Default cap on enumeration nodes (partial or complete matchings).
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExactAnswer {
    Found { size: usize, witness: Matching },
    NoSolution,
}

impl ExactAnswer {
    pub fn size(&self) -> Option<usize> {
        match self {
            ExactAnswer::Found { size, .. } => Some(*size),
            ExactAnswer::NoSolution => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(n: usize) -> Self {
        Self {
            words: vec![0; n.div_ceil(64).max(1)],
        }
    }

    fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    #[inline]
    fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    fn len(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// Reusable verdict test for "delete these vertices".
struct CutTester {
    n: usize,
    adj: Vec<BitSet>,
}

impl CutTester {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let adj = g
            .vertices()
            .map(|v| {
                let mut s = BitSet::new(n);
                for &w in g.neighbors(v) {
                    s.insert(w);
                }
                s
            })
            .collect();
        Self { n, adj }
    }

    /// True when the vertices outside `removed` form a disconnected graph
    /// or a single vertex.
    fn separates(&self, removed: &BitSet) -> bool {
        let mut left = BitSet::full(self.n);
        for (w, r) in left.words.iter_mut().zip(&removed.words) {
            *w &= !r;
        }
        let total = left.len();
        let Some(start) = left.first() else {
            return false;
        };
        if total == 1 {
            return true;
        }
        let mut reached = BitSet::new(self.n);
        reached.insert(start);
        let mut frontier = vec![start];
        let mut count = 1;
        while let Some(v) = frontier.pop() {
            for (i, (&a, r)) in self.adj[v].words.iter().zip(&left.words).enumerate() {
                let mut fresh = a & r & !reached.words[i];
                while fresh != 0 {
                    let b = fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    let w = i * 64 + b;
                    reached.insert(w);
                    frontier.push(w);
                    count += 1;
                }
            }
        }
        count < total
    }
}

/// Backtracking enumerator over matchings of one fixed size.
struct Enumerator<'a> {
    edges: &'a [Edge],
    used: BitSet,
    chosen: Vec<Edge>,
    nodes: u64,
    budget: u64,
}

impl<'a> Enumerator<'a> {
    fn new(g: &'a Graph, budget: u64) -> Self {
        Self {
            edges: g.edges(),
            used: BitSet::new(g.vertex_count()),
            chosen: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    /// Calls `visit` on every matching of exactly `k` edges until it
    /// returns true. Returns whether it did.
    fn search(
        &mut self,
        k: usize,
        from: usize,
        visit: &mut dyn FnMut(&[Edge], &BitSet) -> bool,
    ) -> Result<bool, ExactError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(ExactError::BudgetExceeded(self.budget));
        }
        if self.chosen.len() == k {
            return Ok(visit(&self.chosen, &self.used));
        }
        let need = k - self.chosen.len();
        for i in from..self.edges.len() {
            if self.edges.len() - i < need {
                break;
            }
            let (u, v) = self.edges[i];
            if self.used.contains(u) || self.used.contains(v) {
                continue;
            }
            self.used.insert(u);
            self.used.insert(v);
            self.chosen.push((u, v));
            let hit = self.search(k, i + 1, visit)?;
            self.chosen.pop();
            self.used.remove(u);
            self.used.remove(v);
            if hit {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn first_with(
        &mut self,
        k: usize,
        mut accept: impl FnMut(&[Edge], &BitSet) -> bool,
    ) -> Result<Option<Matching>, ExactError> {
        let mut found = None;
        let mut visit = |m: &[Edge], used: &BitSet| {
            if accept(m, used) {
                found = Some(m.to_vec());
                true
            } else {
                false
            }
        };
        self.search(k, 0, &mut visit)?;
        Ok(found.map(|m| Matching::new(m).expect("enumerated edges are disjoint")))
    }
}

/// Smallest matching vertex-cutset with at most `max_size` edges.
fn smallest_cutset_up_to(g: &Graph, max_size: usize, budget: u64) -> Result<ExactAnswer, ExactError> {
    let tester = CutTester::new(g);
    let mut en = Enumerator::new(g, budget);
    for k in 1..=max_size.min(g.vertex_count() / 2) {
        if let Some(witness) = en.first_with(k, |_, used| tester.separates(used))? {
            return Ok(ExactAnswer::Found { size: k, witness });
        }
    }
    Ok(ExactAnswer::NoSolution)
}

/// κ_M(g) with a witness, or `NoSolution` when no matching of any size
/// leaves `g` disconnected or trivial.
pub fn exact_min_matching_vertex_cutset(g: &Graph) -> Result<ExactAnswer, ExactError> {
    exact_min_matching_vertex_cutset_with_budget(g, DEFAULT_BUDGET)
}

pub fn exact_min_matching_vertex_cutset_with_budget(
    g: &Graph,
    budget: u64,
) -> Result<ExactAnswer, ExactError> {
    smallest_cutset_up_to(g, usize::MAX, budget)
}

/// Some matching vertex-cutset of at most `max_size` edges, if one exists.
pub fn cutset_up_to(g: &Graph, max_size: usize, budget: u64) -> Result<Option<Matching>, ExactError> {
    Ok(match smallest_cutset_up_to(g, max_size, budget)? {
        ExactAnswer::Found { witness, .. } => Some(witness),
        ExactAnswer::NoSolution => None,
    })
}

/// Does `g` have a matching vertex-cutset of size at most `k`?
pub fn decide_matching_vertex_cutset(g: &Graph, k: usize) -> Result<bool, ExactError> {
    Ok(cutset_up_to(g, k, DEFAULT_BUDGET)?.is_some())
}

/// Minimum maximal matching, which is the same thing as a minimum
/// independent edge dominating set.
pub fn min_independent_edge_dominating_set(g: &Graph) -> Result<Matching, ExactError> {
    if g.edge_count() == 0 {
        return Err(ExactError::Edgeless);
    }
    let edges = g.edges();
    let mut en = Enumerator::new(g, DEFAULT_BUDGET);
    for k in 1..=g.vertex_count() / 2 {
        let maximal = |_: &[Edge], used: &BitSet| {
            edges.iter().all(|&(u, v)| used.contains(u) || used.contains(v))
        };
        if let Some(m) = en.first_with(k, maximal)? {
            return Ok(m);
        }
    }
    unreachable!("a maximum matching is maximal")
}

/// Minimum edge set dominating every edge, by subsets of increasing size.
pub fn min_edge_dominating_set(g: &Graph) -> Result<Vec<Edge>, ExactError> {
    if g.edge_count() == 0 {
        return Err(ExactError::Edgeless);
    }
    let edges = g.edges();
    let n = g.vertex_count();
    let mut nodes = 0u64;
    for k in 1..=edges.len() {
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            nodes += 1;
            if nodes > DEFAULT_BUDGET {
                return Err(ExactError::BudgetExceeded(DEFAULT_BUDGET));
            }
            let mut covered = BitSet::new(n);
            for &i in &pick {
                covered.insert(edges[i].0);
                covered.insert(edges[i].1);
            }
            if edges.iter().all(|&(u, v)| covered.contains(u) || covered.contains(v)) {
                return Ok(pick.iter().map(|&i| edges[i]).collect());
            }
            // next k-combination in lexicographic order
            let Some(pos) = (0..k).rev().find(|&j| pick[j] < edges.len() - k + j) else {
                break;
            };
            pick[pos] += 1;
            for j in pos + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    unreachable!("the full edge set dominates itself")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_named, NamedGraph};
    use crate::graph::{check_cutset, Verdict};

    fn named(which: NamedGraph) -> Graph {
        make_named(which).unwrap()
    }

    #[test]
    fn cutset_examples() {
        let ico = named(NamedGraph::Icosahedron);
        let ans = exact_min_matching_vertex_cutset(&ico).unwrap();
        assert_eq!(ans.size(), Some(3));
        if let ExactAnswer::Found { witness, .. } = &ans {
            assert!(check_cutset(&ico, witness).unwrap().is_cutset());
        }
        assert_eq!(
            exact_min_matching_vertex_cutset(&named(NamedGraph::K5Minus)).unwrap().size(),
            Some(2)
        );
        assert_eq!(
            exact_min_matching_vertex_cutset(&named(NamedGraph::Complete(4))).unwrap(),
            ExactAnswer::NoSolution
        );
        assert_eq!(
            exact_min_matching_vertex_cutset(&named(NamedGraph::Cycle(5))).unwrap().size(),
            Some(2)
        );
    }

    #[test]
    fn decision_examples() {
        let ico = named(NamedGraph::Icosahedron);
        assert!(!decide_matching_vertex_cutset(&ico, 2).unwrap());
        assert!(decide_matching_vertex_cutset(&ico, 3).unwrap());
        assert!(decide_matching_vertex_cutset(&named(NamedGraph::Path(4)), 1).unwrap());
        let k23 = named(NamedGraph::CompleteBipartite(2, 3));
        assert!(decide_matching_vertex_cutset(&k23, 2).unwrap());
        let w = cutset_up_to(&k23, 2, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(check_cutset(&k23, &w).unwrap().verdict, Verdict::Trivial);
    }

    #[test]
    fn domination_examples() {
        let p4 = named(NamedGraph::Path(4));
        assert_eq!(min_independent_edge_dominating_set(&p4).unwrap().edges(), &[(1, 2)]);
        assert_eq!(min_edge_dominating_set(&p4).unwrap(), vec![(1, 2)]);
        let star = named(NamedGraph::Star(3));
        assert_eq!(min_independent_edge_dominating_set(&star).unwrap().len(), 1);
        let c7 = named(NamedGraph::Cycle(7));
        assert_eq!(min_independent_edge_dominating_set(&c7).unwrap().len(), 3);
        assert_eq!(min_edge_dominating_set(&c7).unwrap().len(), 3);
        assert_eq!(
            min_edge_dominating_set(&Graph::empty(3)),
            Err(ExactError::Edgeless)
        );
    }

    #[test]
    fn budget_guard_trips() {
        let ico = named(NamedGraph::Icosahedron);
        assert_eq!(
            exact_min_matching_vertex_cutset_with_budget(&ico, 50),
            Err(ExactError::BudgetExceeded(50))
        );
    }

    #[test]
    fn bitset_spans_words() {
        let mut s = BitSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.len(), 3);
        s.remove(0);
        assert_eq!(s.first(), Some(64));
        assert!(s.contains(129));
    }
}
