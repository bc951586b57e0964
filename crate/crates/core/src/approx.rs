//! Approximating the minimum matching vertex-cutset within a factor of two.
//!
//! Start from a minimum vertex cut `S` (size κ). A maximum matching `M1` of
//! `H[S]` covers `S1`; the exposed rest `S2` is independent. Every vertex of
//! `S2` has at least `|S2|` neighbours outside `S`, so `S2` can be matched
//! into the two sides `U` (one component of `H - S`) and `V` (the others)
//! with at least one edge going each way. The case analysis below then
//! trades edges so that the deleted vertices still leave the graph
//! disconnected or trivial, never using more than κ edges. Since any
//! matching vertex-cutset of `k` edges deletes `2k` vertices,
//! κ ≤ 2·κ_M and the output is within a factor of two.
//!
//! Every output is checked with [`check_cutset`]. If the main path yields
//! an invalid set (possible only where the case analysis is
//! under-determined), a fixed ladder of alternatives is tried, and the
//! [`CaseTrace`] records which rung produced the answer.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bipartite::{saturating_matching_forced, BipartiteView};
use crate::error::{BipartiteError, FlowError, GraphError};
use crate::exact;
use crate::flow::{min_vertex_cut, CutKind};
use crate::graph::{
    check_cutset, classify_special, components_excluding, CutsetCertificate, Graph, Matching,
    SpecialClass, Vertex,
};
use crate::matching::maximum_matching_within;

/// Enumeration cap for the exhaustive last rung of the fallback ladder.
pub const EXHAUSTIVE_FALLBACK_BUDGET: u64 = 20_000_000;

/// Which branch of the algorithm produced the output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTrace {
    /// K_{2n+1}: any `n` disjoint edges leave one vertex.
    #[serde(rename = "complete-odd")]
    CompleteOdd,
    /// `M1` already covers the whole cut.
    #[serde(rename = "M1-covers-S")]
    M1CoversCut,
    #[serde(rename = "S2-singleton")]
    S2Singleton,
    #[serde(rename = "Case1")]
    Case1,
    #[serde(rename = "Subcase2.1")]
    Subcase2_1,
    #[serde(rename = "Subcase2.2-MB")]
    Subcase2_2NoEdge,
    #[serde(rename = "Subcase2.2-edge-swap")]
    Subcase2_2EdgeSwap,
    #[serde(rename = "Subcase3.1")]
    Subcase3_1,
    #[serde(rename = "Subcase3.2-MA")]
    Subcase3_2NoEdge,
    #[serde(rename = "Subcase3.2-edge-swap")]
    Subcase3_2EdgeSwap,
    #[serde(rename = "Case4.2")]
    Case4_2,
    /// `M1 ∪ M2` itself, tried after the main path failed validation.
    #[serde(rename = "fallback-union")]
    FallbackUnion,
    /// Some other edge of `E[A, V2]` (or `E[A, U2]`) in the edge swap.
    #[serde(rename = "fallback-edge-scan")]
    FallbackEdgeScan,
    /// The case machine rerun with the roles of `U` and `V` exchanged.
    #[serde(rename = "fallback-swap")]
    FallbackSwap,
    /// Exhaustive search for a cutset of at most κ edges.
    #[serde(rename = "fallback-k")]
    FallbackExhaustive,
}

impl CaseTrace {
    pub fn is_fallback(self) -> bool {
        matches!(
            self,
            CaseTrace::FallbackUnion
                | CaseTrace::FallbackEdgeScan
                | CaseTrace::FallbackSwap
                | CaseTrace::FallbackExhaustive
        )
    }

    pub fn label(self) -> &'static str {
        match self {
            CaseTrace::CompleteOdd => "complete-odd",
            CaseTrace::M1CoversCut => "M1-covers-S",
            CaseTrace::S2Singleton => "S2-singleton",
            CaseTrace::Case1 => "Case1",
            CaseTrace::Subcase2_1 => "Subcase2.1",
            CaseTrace::Subcase2_2NoEdge => "Subcase2.2-MB",
            CaseTrace::Subcase2_2EdgeSwap => "Subcase2.2-edge-swap",
            CaseTrace::Subcase3_1 => "Subcase3.1",
            CaseTrace::Subcase3_2NoEdge => "Subcase3.2-MA",
            CaseTrace::Subcase3_2EdgeSwap => "Subcase3.2-edge-swap",
            CaseTrace::Case4_2 => "Case4.2",
            CaseTrace::FallbackUnion => "fallback-union",
            CaseTrace::FallbackEdgeScan => "fallback-edge-scan",
            CaseTrace::FallbackSwap => "fallback-swap",
            CaseTrace::FallbackExhaustive => "fallback-k",
        }
    }
}

impl fmt::Display for CaseTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutsetResult {
    pub matching: Matching,
    pub certificate: CutsetCertificate,
    /// Size of the minimum vertex cut the construction started from.
    pub kappa: usize,
    pub case_trace: CaseTrace,
}

/// Every set the case analysis talks about, for one choice of `U`, `V`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseState {
    pub s: Vec<Vertex>,
    pub s1: Vec<Vertex>,
    pub s2: Vec<Vertex>,
    pub u: Vec<Vertex>,
    pub v: Vec<Vertex>,
    pub m1: Matching,
    pub m2: Matching,
    pub u1: Vec<Vertex>,
    pub u2: Vec<Vertex>,
    pub v1: Vec<Vertex>,
    pub v2: Vec<Vertex>,
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    pub m_a: Matching,
    pub m_b: Matching,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApproxError {
    #[error("{0} has no matching vertex-cutset")]
    NoSolution(SpecialClass),
    #[error("graph needs at least two vertices")]
    TooSmall,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Flow(#[from] FlowError),
    #[error(transparent)]
    Bipartite(#[from] BipartiteError),
    #[error("case state invariant violated: {0}")]
    CaseState(String),
    #[error("every construction failed validation")]
    InternalInvariantViolation(Box<CaseState>),
}

fn minus(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    a.iter().copied().filter(|x| !b.contains(x)).collect()
}

fn meet(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    a.iter().copied().filter(|x| b.contains(x)).collect()
}

fn sorted(mut v: Vec<Vertex>) -> Vec<Vertex> {
    v.sort_unstable();
    v
}

/// Splits the cut and the two matchings into the named parts, checking each
/// structural invariant the case analysis relies on.
pub fn derive_case_state(
    g: &Graph,
    s: &[Vertex],
    m1: &Matching,
    m2: &Matching,
    u: &[Vertex],
    v: &[Vertex],
) -> Result<CaseState, ApproxError> {
    let bad = |msg: String| Err(ApproxError::CaseState(msg));
    let s = sorted(s.to_vec());
    let u = sorted(u.to_vec());
    let v = sorted(v.to_vec());
    m1.validate_in(g)?;
    m2.validate_in(g)?;

    let covered1 = m1.vertices();
    if covered1.iter().any(|x| !s.contains(x)) {
        return bad("M1 leaves H[S]".into());
    }
    let s1 = meet(&s, &covered1);
    let s2 = minus(&s, &s1);
    for (i, &x) in s2.iter().enumerate() {
        if let Some(&y) = s2[i + 1..].iter().find(|&&y| g.has_edge(x, y)) {
            return bad(format!("S2 not independent: {x}-{y}, so M1 is not maximum"));
        }
    }

    let outside: Vec<Vertex> = sorted(u.iter().chain(&v).copied().collect());
    for &(p, q) in m2.edges() {
        let crosses = (s2.contains(&p) && outside.contains(&q)) || (s2.contains(&q) && outside.contains(&p));
        if !crosses {
            return bad(format!("M2 edge {p}-{q} does not join S2 to U ∪ V"));
        }
    }
    let covered2 = m2.vertices();
    let u1 = meet(&u, &covered2);
    let u2 = minus(&u, &u1);
    let v1 = meet(&v, &covered2);
    let v2 = minus(&v, &v1);
    let a = meet(&s2, &covered2);
    let b = minus(&s2, &a);
    let touches = |side: &[Vertex]| {
        Matching::new(
            m2.edges()
                .iter()
                .copied()
                .filter(|&(p, q)| side.contains(&p) || side.contains(&q)),
        )
        .expect("subset of a matching")
    };
    let m_a = touches(&u);
    let m_b = touches(&v);

    if !m2.is_empty() {
        if !b.is_empty() {
            return bad(format!("M2 leaves {b:?} of S2 uncovered"));
        }
        if m_a.is_empty() || m_b.is_empty() {
            return bad("M2 must reach both U and V".into());
        }
    }
    Ok(CaseState {
        s,
        s1,
        s2,
        u,
        v,
        m1: m1.clone(),
        m2: m2.clone(),
        u1,
        u2,
        v1,
        v2,
        a,
        b,
        m_a,
        m_b,
    })
}

/// One pass of the case machine for a fixed `U`, `V`.
struct Attempt {
    candidate: Option<(Matching, CaseTrace)>,
    state: Option<CaseState>,
}

fn union(a: &Matching, b: &Matching) -> Matching {
    a.union(b).expect("parts of one construction are disjoint")
}

fn with_edge(m: &Matching, add: (Vertex, Vertex), drop: &[(Vertex, Vertex)]) -> Option<Matching> {
    m.without(drop).union(&Matching::new([add]).ok()?).ok()
}

/// Steps from the forced matching `M2` onwards. `S2` has at least two
/// vertices here.
fn run_cases(g: &Graph, s: &[Vertex], m1: &Matching, u: &[Vertex], v: &[Vertex]) -> Result<Attempt, ApproxError> {
    let covered1 = m1.vertices();
    let s2: Vec<Vertex> = minus(s, &covered1);
    let outside: Vec<Vertex> = sorted(u.iter().chain(v).copied().collect());

    // x into U and a different y into V; every vertex of a minimum cut has
    // neighbours in every component
    let into = |x: Vertex, side: &[Vertex]| g.neighbors(x).iter().copied().find(|w| side.contains(w));
    let (x, x_to) = s2
        .iter()
        .find_map(|&x| into(x, u).map(|w| (x, w)))
        .ok_or_else(|| ApproxError::CaseState("no S2 vertex sees U".into()))?;
    let (y, y_to) = s2
        .iter()
        .filter(|&&y| y != x)
        .find_map(|&y| into(y, v).map(|w| (y, w)))
        .ok_or_else(|| ApproxError::CaseState("no second S2 vertex sees V".into()))?;
    let forced = Matching::new([(x, x_to), (y, y_to)])?;
    let view = BipartiteView::from_graph(g, &s2, &outside);
    let m2 = saturating_matching_forced(&view, &forced)?;
    let st = derive_case_state(g, s, m1, &m2, u, v)?;

    let m12 = union(m1, &st.m2);
    let candidate = match (st.u2.is_empty(), st.v2.is_empty()) {
        (false, false) => Some((m12, CaseTrace::Case1)),
        (true, false) => one_side_full(g, &st, Side::U),
        (false, true) => one_side_full(g, &st, Side::V),
        (true, true) => {
            // an edge inside U, else inside V; both ends are M2-matched
            let inner = |side: &[Vertex]| {
                g.edges()
                    .iter()
                    .copied()
                    .find(|&(p, q)| side.contains(&p) && side.contains(&q))
            };
            inner(&st.u).or_else(|| inner(&st.v)).and_then(|(p, q)| {
                let pm = (p, st.m2.mate(p)?);
                let qm = (q, st.m2.mate(q)?);
                with_edge(&m12, (p, q), &[pm, qm]).map(|m| (m, CaseTrace::Case4_2))
            })
        }
    };
    Ok(Attempt {
        candidate,
        state: Some(st),
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    U,
    V,
}

/// Cases 2 and 3: side `full` is entirely matched by `M2`, the other side
/// still has exposed vertices.
fn one_side_full(g: &Graph, st: &CaseState, full: Side) -> Option<(Matching, CaseTrace)> {
    let (full_set, open2, m_open) = match full {
        Side::U => (&st.u, &st.v2, &st.m_b),
        Side::V => (&st.v, &st.u2, &st.m_a),
    };
    let (t_trivial, t_no_edge, t_swap) = match full {
        Side::U => (
            CaseTrace::Subcase2_1,
            CaseTrace::Subcase2_2NoEdge,
            CaseTrace::Subcase2_2EdgeSwap,
        ),
        Side::V => (
            CaseTrace::Subcase3_1,
            CaseTrace::Subcase3_2NoEdge,
            CaseTrace::Subcase3_2EdgeSwap,
        ),
    };
    let m12 = union(&st.m1, &st.m2);
    if open2.len() == 1 {
        return Some((m12, t_trivial));
    }
    let edges = swap_edges(g, st, open2);
    if edges.is_empty() {
        return Some((union(&st.m1, m_open), t_no_edge));
    }
    // the S2 endpoint must be matched into the full side
    edges
        .iter()
        .find_map(|&(x, y)| {
            let mate = st.m2.mate(x)?;
            full_set.contains(&mate).then_some((x, y, mate))
        })
        .and_then(|(x, y, mate)| with_edge(&m12, (x, y), &[(x, mate)]))
        .map(|m| (m, t_swap))
}

/// `E[A, open2]` as `(a, w)` pairs in ascending order.
fn swap_edges(g: &Graph, st: &CaseState, open2: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    st.a.iter()
        .flat_map(|&x| {
            g.neighbors(x)
                .iter()
                .copied()
                .filter(|w| open2.contains(w))
                .map(move |w| (x, w))
        })
        .collect()
}

/// Rung two: every edge swap in Cases 2 and 3, U-side-matched endpoints
/// first, validating each.
fn edge_scan(g: &Graph, st: &CaseState) -> Option<Matching> {
    let (full_set, open2) = match (st.u2.is_empty(), st.v2.is_empty()) {
        (true, false) => (&st.u, &st.v2),
        (false, true) => (&st.v, &st.u2),
        _ => return None,
    };
    let m12 = union(&st.m1, &st.m2);
    let mut edges = swap_edges(g, st, open2);
    edges.sort_by_key(|&(x, w)| {
        let into_full = st.m2.mate(x).is_some_and(|m| full_set.contains(&m));
        (!into_full, x, w)
    });
    edges.into_iter().find_map(|(x, w)| {
        let mate = st.m2.mate(x)?;
        let m = with_edge(&m12, (x, w), &[(x, mate)])?;
        is_valid(g, &m).then_some(m)
    })
}

fn is_valid(g: &Graph, m: &Matching) -> bool {
    check_cutset(g, m).is_ok_and(|c| c.is_cutset())
}

fn finish(g: &Graph, m: Matching, kappa: usize, case_trace: CaseTrace) -> Result<CutsetResult, ApproxError> {
    let certificate = check_cutset(g, &m)?;
    Ok(CutsetResult {
        matching: m,
        certificate,
        kappa,
        case_trace,
    })
}

/// A matching vertex-cutset of `g` with at most κ(g) edges.
pub fn approx_min_matching_vertex_cutset(g: &Graph) -> Result<CutsetResult, ApproxError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(ApproxError::TooSmall);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    match classify_special(g) {
        class @ (SpecialClass::CompleteEven(_) | SpecialClass::BalancedCompleteBipartite(_)) => {
            return Err(ApproxError::NoSolution(class));
        }
        SpecialClass::CompleteOdd(_) => {
            let m = Matching::new((0..n / 2).map(|i| (2 * i, 2 * i + 1)))?;
            return finish(g, m, n - 1, CaseTrace::CompleteOdd);
        }
        SpecialClass::General => {}
    }

    let cut = min_vertex_cut(g)?;
    debug_assert_eq!(cut.kind, CutKind::ProperCut);
    let s = cut.vertices;
    let kappa = s.len();
    let comps = components_excluding(g, &s);
    let u_idx = comps
        .iter()
        .enumerate()
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
        .expect("a proper cut leaves at least two components");
    let u = comps[u_idx].clone();
    let v: Vec<Vertex> = sorted(
        comps
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != u_idx)
            .flat_map(|(_, c)| c.iter().copied())
            .collect(),
    );

    let m1 = maximum_matching_within(g, &s);
    let s2 = minus(&s, &m1.vertices());
    if s2.is_empty() {
        return finish(g, m1, kappa, CaseTrace::M1CoversCut);
    }
    if s2.len() == 1 {
        let x = s2[0];
        let side = if u.len() >= 2 { &u } else { &v };
        let to = g
            .neighbors(x)
            .iter()
            .copied()
            .find(|w| side.contains(w))
            .ok_or_else(|| ApproxError::CaseState(format!("{x} has no neighbour on the chosen side")))?;
        let m = union(&m1, &Matching::new([(x, to)])?);
        return finish(g, m, kappa, CaseTrace::S2Singleton);
    }

    let main = run_cases(g, &s, &m1, &u, &v)?;
    if let Some((m, trace)) = &main.candidate {
        if is_valid(g, m) {
            return finish(g, m.clone(), kappa, *trace);
        }
    }
    let state = main.state.unwrap_or_default();

    let m12 = union(&state.m1, &state.m2);
    if is_valid(g, &m12) {
        return finish(g, m12, kappa, CaseTrace::FallbackUnion);
    }
    if let Some(m) = edge_scan(g, &state) {
        return finish(g, m, kappa, CaseTrace::FallbackEdgeScan);
    }
    if let Ok(swapped) = run_cases(g, &s, &m1, &v, &u) {
        let mut options: Vec<Matching> = swapped.candidate.into_iter().map(|(m, _)| m).collect();
        if let Some(st) = &swapped.state {
            options.push(union(&st.m1, &st.m2));
            options.extend(edge_scan(g, st));
        }
        if let Some(m) = options.into_iter().find(|m| is_valid(g, m)) {
            return finish(g, m, kappa, CaseTrace::FallbackSwap);
        }
    }
    if let Ok(Some(m)) = exact::cutset_up_to(g, kappa, EXHAUSTIVE_FALLBACK_BUDGET) {
        return finish(g, m, kappa, CaseTrace::FallbackExhaustive);
    }
    Err(ApproxError::InternalInvariantViolation(Box::new(state)))
}
