//! Maximum cardinality matching in general graphs.
//!
//! Edmonds' augmenting-path search with blossom contraction, in the simple
//! O(n^3) form: a BFS grows an alternating forest from one exposed root,
//! odd cycles are shrunk by re-pointing `base`, and the first exposed vertex
//! reached yields an augmenting path. Roots and neighbours are scanned in
//! ascending id order, so the result is deterministic.

use std::collections::VecDeque;

use crate::graph::{Graph, Matching, Vertex};

const NONE: usize = usize::MAX;

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<Vertex>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        Self {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_base(&self, mut a: Vertex, mut b: Vertex) -> Vertex {
        let mut on_path = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: Vertex, stem: Vertex, mut child: Vertex) {
        while self.base[v] != stem {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Exposed vertex at the end of an augmenting path from `root`, if any.
    fn find_path(&mut self, root: Vertex) -> Option<Vertex> {
        let n = self.mate.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract it onto its stem
                    let stem = self.lowest_common_base(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, stem, to);
                    self.mark_path(to, stem, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = stem;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: Vertex) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn run(mut self) -> Vec<usize> {
        // greedy start; augmentation fixes any suboptimal choice
        for &(u, v) in self.g.edges() {
            if self.mate[u] == NONE && self.mate[v] == NONE {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
        for root in self.g.vertices() {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// A maximum matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mate = Blossom::new(g).run();
    let pairs = mate
        .iter()
        .enumerate()
        .filter(|&(v, &w)| w != NONE && v < w)
        .map(|(v, &w)| (v, w));
    Matching::new(pairs).expect("mate array is symmetric")
}

/// Maximum matching of the subgraph induced by `vertices`, in `g`'s ids.
pub fn maximum_matching_within(g: &Graph, vertices: &[Vertex]) -> Matching {
    let (sub, map) = g.induced_subgraph(vertices);
    let local = maximum_matching(&sub);
    Matching::new(local.edges().iter().map(|&(a, b)| (map[a], map[b])))
        .expect("image of a matching under an injective map")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_named, NamedGraph};

    #[test]
    fn examples() {
        let c5 = make_named(NamedGraph::Cycle(5)).unwrap();
        assert_eq!(maximum_matching(&c5).len(), 2);
        let k4 = make_named(NamedGraph::Complete(4)).unwrap();
        assert_eq!(maximum_matching(&k4).len(), 2);
        let pet = make_named(NamedGraph::Petersen).unwrap();
        let m = maximum_matching(&pet);
        assert_eq!(m.len(), 5);
        m.validate_in(&pet).unwrap();
        assert_eq!(maximum_matching(&Graph::empty(3)).len(), 0);
    }

    #[test]
    fn greedy_trap_needs_augmentation() {
        // greedy picks (0,1), leaving 2 and 3 exposed with path 2-0-1-3
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 3)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 2);
    }

    #[test]
    fn blossom_is_contracted() {
        // triangle 0-1-2 with pendants 3 (on 0) and 4 (on 2) and 5 (on 1)
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (2, 4), (1, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 3);
    }

    #[test]
    fn within_maps_back() {
        let c5 = make_named(NamedGraph::Cycle(5)).unwrap();
        let m = maximum_matching_within(&c5, &[2, 3, 4]);
        assert_eq!(m.len(), 1);
        m.validate_in(&c5).unwrap();
        assert!(m.vertices().iter().all(|v| [2, 3, 4].contains(v)));
    }
}
