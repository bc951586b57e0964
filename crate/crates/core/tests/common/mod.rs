//! Brute-force reference implementations, independent of the library's
//! algorithms. Everything here enumerates vertex subsets or matchings
//! directly and is only meant for graphs with at most a dozen vertices.

#![allow(dead_code)]

use mvcut::graph::{Edge, Graph, Vertex};

/// Number of connected components of `g` restricted to the vertices whose
/// bit is set in `alive`.
pub fn component_count(g: &Graph, alive: u64) -> usize {
    let mut seen = 0u64;
    let mut count = 0;
    for start in 0..g.vertex_count() {
        if alive >> start & 1 == 0 || seen >> start & 1 == 1 {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen |= 1 << start;
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if alive >> w & 1 == 1 && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
    }
    count
}

fn all_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// κ(g): smallest vertex set whose removal disconnects, n − 1 for K_n.
pub fn brute_kappa(g: &Graph) -> usize {
    let n = g.vertex_count();
    let full = all_mask(n);
    let mut best = n.saturating_sub(1);
    for removed in 0..=full {
        let size = removed.count_ones() as usize;
        if size < best && component_count(g, full & !removed) >= 2 {
            best = size;
        }
    }
    best
}

/// Smallest vertex set separating non-adjacent `s` and `t`.
pub fn brute_st_cut(g: &Graph, s: Vertex, t: Vertex) -> usize {
    let n = g.vertex_count();
    let full = all_mask(n);
    let mut best = usize::MAX;
    for removed in 0..=full {
        if removed >> s & 1 == 1 || removed >> t & 1 == 1 {
            continue;
        }
        let size = removed.count_ones() as usize;
        if size >= best {
            continue;
        }
        let alive = full & !removed;
        // flood from s
        let mut seen = 1u64 << s;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if alive >> w & 1 == 1 && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        if seen >> t & 1 == 0 {
            best = size;
        }
    }
    best
}

/// Calls `visit` with every matching of `g` (including the empty one).
pub fn for_each_matching(g: &Graph, visit: &mut dyn FnMut(&[Edge])) {
    fn rec(edges: &[Edge], i: usize, used: u64, cur: &mut Vec<Edge>, visit: &mut dyn FnMut(&[Edge])) {
        if i == edges.len() {
            visit(cur);
            return;
        }
        rec(edges, i + 1, used, cur, visit);
        let (u, v) = edges[i];
        if used >> u & 1 == 0 && used >> v & 1 == 0 {
            cur.push((u, v));
            rec(edges, i + 1, used | 1 << u | 1 << v, cur, visit);
            cur.pop();
        }
    }
    rec(g.edges(), 0, 0, &mut Vec::new(), visit);
}

pub fn brute_max_matching(g: &Graph) -> usize {
    let mut best = 0;
    for_each_matching(g, &mut |m| best = best.max(m.len()));
    best
}

fn removal_verdict_ok(g: &Graph, m: &[Edge]) -> bool {
    let n = g.vertex_count();
    let mut alive = all_mask(n);
    for &(u, v) in m {
        alive &= !(1 << u) & !(1 << v);
    }
    let remaining = alive.count_ones();
    remaining == 1 || (remaining >= 2 && component_count(g, alive) >= 2)
}

/// κ_M(g) by enumerating every matching, or `None` if no cutset exists.
pub fn brute_kappa_m(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for_each_matching(g, &mut |m| {
        if !m.is_empty() && removal_verdict_ok(g, m) && best.is_none_or(|b| m.len() < b) {
            best = Some(m.len());
        }
    });
    best
}

/// Minimum maximal matching size, by full enumeration.
pub fn brute_min_maximal_matching(g: &Graph) -> usize {
    let mut best = usize::MAX;
    for_each_matching(g, &mut |m| {
        let covered: Vec<Vertex> = m.iter().flat_map(|&(u, v)| [u, v]).collect();
        let maximal = g
            .edges()
            .iter()
            .all(|(u, v)| covered.contains(u) || covered.contains(v));
        if maximal && !m.is_empty() {
            best = best.min(m.len());
        }
    });
    best
}

/// Searches simple paths for an augmenting path relative to `matching`.
pub fn has_augmenting_path(g: &Graph, matching: &[Edge]) -> bool {
    let n = g.vertex_count();
    let mut mate = vec![usize::MAX; n];
    for &(u, v) in matching {
        mate[u] = v;
        mate[v] = u;
    }
    fn extend(g: &Graph, mate: &[usize], v: Vertex, want_matched: bool, on_path: &mut Vec<bool>) -> bool {
        for &w in g.neighbors(v) {
            if on_path[w] || (mate[v] == w) != want_matched {
                continue;
            }
            if !want_matched && mate[w] == usize::MAX {
                return true;
            }
            on_path[w] = true;
            if extend(g, mate, w, !want_matched, on_path) {
                return true;
            }
            on_path[w] = false;
        }
        false
    }
    (0..n).filter(|&v| mate[v] == usize::MAX).any(|v| {
        let mut on_path = vec![false; n];
        on_path[v] = true;
        extend(g, &mate, v, false, &mut on_path)
    })
}

/// Does a matching covering all of `left` exist among `edges`?
pub fn brute_saturating(left: &[Vertex], edges: &[Edge]) -> bool {
    fn rec(left: &[Vertex], i: usize, edges: &[Edge], used: &mut Vec<Vertex>) -> bool {
        if i == left.len() {
            return true;
        }
        let l = left[i];
        for &(a, b) in edges {
            let r = if a == l {
                b
            } else if b == l {
                a
            } else {
                continue;
            };
            if !used.contains(&r) {
                used.push(r);
                if rec(left, i + 1, edges, used) {
                    return true;
                }
                used.pop();
            }
        }
        false
    }
    rec(left, 0, edges, &mut Vec::new())
}

/// Simple deterministic generator for test corpora (xorshift64*).
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1)
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        lo + self.below(hi_inclusive - lo + 1)
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// A random connected graph on `min_n..=max_n` vertices drawn through the
/// library generator with a varied density.
pub fn corpus_graph(rng: &mut TestRng, min_n: usize, max_n: usize) -> Graph {
    let n = rng.range(min_n, max_n);
    let p = 0.1 + 0.8 * rng.unit();
    mvcut::generators::random_connected_graph(n, p, rng.next_u64()).unwrap()
}
