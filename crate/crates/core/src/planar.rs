//! Planar corpora built planar-by-construction, and the bound suite that
//! checks 2 ≤ κ_M ≤ 3 on maximal planar graphs and κ_M ≤ 3 on connected
//! planar graphs other than K2 and K4.
//!
//! Triangulations are stacked: start from a triangle (two faces) and keep
//! dropping a new vertex into a uniformly random face, joined to its three
//! corners. Sparser planar graphs come from deleting random non-bridge
//! edges of a triangulation. Neither step can leave the plane, so no
//! planarity test is needed, at the price of sampling only this subclass.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::approx::{approx_min_matching_vertex_cutset, CaseTrace};
use crate::error::{ExactError, GraphError};
use crate::exact::{exact_min_matching_vertex_cutset, ExactAnswer};
use crate::flow::min_vertex_cut;
use crate::generators::{make_named, rng_from_seed, NamedGraph};
use crate::graph::{check_cutset, classify_special, Edge, Graph, SpecialClass, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarError {
    #[error("a triangulation needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("{target} edges infeasible for a connected planar graph on {n} vertices")]
    InfeasibleEdgeCount { n: usize, target: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    pub graph: Graph,
    pub faces: Vec<[Vertex; 3]>,
}

impl Triangulation {
    /// m = 3n - 6, 2n - 4 faces, every face a triangle of the graph.
    pub fn check_invariants(&self) -> Result<(), String> {
        let n = self.graph.vertex_count();
        if self.graph.edge_count() != 3 * n - 6 {
            return Err(format!("{} edges, expected {}", self.graph.edge_count(), 3 * n - 6));
        }
        if self.faces.len() != 2 * n - 4 {
            return Err(format!("{} faces, expected {}", self.faces.len(), 2 * n - 4));
        }
        for f in &self.faces {
            let [a, b, c] = *f;
            if !(self.graph.has_edge(a, b) && self.graph.has_edge(b, c) && self.graph.has_edge(a, c)) {
                return Err(format!("face {f:?} is not a triangle"));
            }
        }
        Ok(())
    }
}

pub fn random_maximal_planar(n: usize, seed: u64) -> Result<Triangulation, PlanarError> {
    if n < 3 {
        return Err(PlanarError::TooSmall(n));
    }
    let mut rng = rng_from_seed(seed);
    let mut pairs: Vec<Edge> = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        faces[i] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([a, c, v]);
        pairs.extend([(a, v), (b, v), (c, v)]);
    }
    Ok(Triangulation {
        graph: Graph::new(n, &pairs)?,
        faces,
    })
}

/// Connected planar graph with exactly `target_m` edges, obtained by
/// deleting random non-bridge edges from a stacked triangulation.
pub fn random_connected_planar(n: usize, target_m: usize, seed: u64) -> Result<Graph, PlanarError> {
    let max_m = match n {
        0 => return Err(PlanarError::TooSmall(0)),
        1 => 0,
        2 => 1,
        _ => 3 * n - 6,
    };
    if target_m + 1 < n || target_m > max_m {
        return Err(PlanarError::InfeasibleEdgeCount { n, target: target_m });
    }
    if n < 3 {
        let pairs: Vec<Edge> = if n == 2 { vec![(0, 1)] } else { vec![] };
        return Ok(Graph::new(n, &pairs)?);
    }
    let tri = random_maximal_planar(n, seed)?;
    let mut rng = rng_from_seed(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut kept: Vec<Edge> = tri.graph.edges().to_vec();
    let mut order = kept.clone();
    order.shuffle(&mut rng);
    // one pass suffices: a bridge stays a bridge as edges disappear
    for e in order {
        if kept.len() == target_m {
            break;
        }
        let trial: Vec<Edge> = kept.iter().copied().filter(|&f| f != e).collect();
        if Graph::new(n, &trial)?.is_connected() {
            kept = trial;
        }
    }
    Ok(Graph::new(n, &kept)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Fixture,
    MaximalPlanar,
    ConnectedPlanar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub family: Family,
    pub name: String,
    pub seed: Option<u64>,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub kappa: usize,
    /// `None` when the graph has no matching vertex-cutset.
    pub kappa_m: Option<usize>,
    pub class: SpecialClass,
    pub approx_size: Option<usize>,
    pub approx_trace: Option<CaseTrace>,
    pub violations: Vec<String>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub maximal_count: usize,
    pub maximal_n: RangeInclusive<usize>,
    pub connected_count: usize,
    pub connected_n: RangeInclusive<usize>,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            maximal_count: 200,
            maximal_n: 5..=12,
            connected_count: 200,
            connected_n: 3..=10,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub graphs: usize,
    pub maximal: usize,
    pub connected: usize,
    pub violations: usize,
    pub upper_tight: usize,
    pub lower_tight: usize,
    pub trace_counts: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub records: Vec<GraphRecord>,
    /// `name: message` for every failed check.
    pub violations: Vec<String>,
    /// Names of graphs meeting a bound with equality.
    pub tight_examples: Vec<String>,
    pub summary: SuiteSummary,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// One JSON object per graph, then a final summary object.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        let tail = serde_json::json!({
            "summary": self.summary,
            "config": self.config,
            "violations": self.violations,
            "tight_examples": self.tight_examples,
        });
        out.push_str(&tail.to_string());
        out.push('\n');
        out
    }

    pub fn human_summary(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "{} graphs ({} maximal planar, {} connected planar, fixtures): {} violations\n",
            s.graphs, s.maximal, s.connected, s.violations
        );
        let _ = writeln!(
            out,
            "upper bound 3 met by {} graphs, lower bound 2 met by {} maximal planar graphs",
            s.upper_tight, s.lower_tight
        );
        for (trace, count) in &s.trace_counts {
            let _ = writeln!(out, "  approx path {trace}: {count}");
        }
        for v in &self.violations {
            let _ = writeln!(out, "VIOLATION {v}");
        }
        out
    }
}

struct Job {
    family: Family,
    name: String,
    seed: Option<u64>,
    graph: Graph,
    tri: Option<Triangulation>,
}

fn evaluate(job: Job) -> Result<GraphRecord, PlanarError> {
    let g = &job.graph;
    let mut violations = Vec::new();
    let class = classify_special(g);
    let kappa = match min_vertex_cut(g) {
        Ok(c) => c.len(),
        Err(_) => 0,
    };
    let kappa_m = match exact_min_matching_vertex_cutset(g)? {
        ExactAnswer::Found { size, witness } => {
            let ok = check_cutset(g, &witness).is_ok_and(|c| c.is_cutset());
            if !ok {
                violations.push("exact witness fails the cutset check".to_string());
            }
            Some(size)
        }
        ExactAnswer::NoSolution => None,
    };
    let delta = g.min_degree();
    if let Some(tri) = &job.tri {
        if let Err(e) = tri.check_invariants() {
            violations.push(format!("triangulation: {e}"));
        }
    }
    let excluded = matches!(class, SpecialClass::CompleteEven(2) | SpecialClass::CompleteEven(4));
    match (job.family, kappa_m) {
        (_, None) if !excluded => violations.push("no matching vertex-cutset".into()),
        (Family::MaximalPlanar, Some(k)) if g.vertex_count() >= 5 && !(2..=3).contains(&k) => {
            violations.push(format!("maximal planar with kappa_M = {k}, outside [2, 3]"))
        }
        (_, Some(k)) if !excluded && k > 3 => violations.push(format!("kappa_M = {k} exceeds 3")),
        _ => {}
    }
    if let Some(k) = kappa_m {
        if k > delta {
            violations.push(format!("kappa_M = {k} exceeds min degree {delta}"));
        }
        if kappa > 2 * k {
            violations.push(format!("kappa = {kappa} exceeds 2 kappa_M = {}", 2 * k));
        }
    }
    if job.name == "icosahedron" && kappa_m != Some(3) {
        violations.push(format!("icosahedron kappa_M = {kappa_m:?}, expected 3"));
    }
    if job.name == "k5_minus" && kappa_m != Some(2) {
        violations.push(format!("k5_minus kappa_M = {kappa_m:?}, expected 2"));
    }

    let (approx_size, approx_trace) = if class.is_excluded() {
        (None, None)
    } else {
        match approx_min_matching_vertex_cutset(g) {
            Ok(res) => {
                if !res.certificate.is_cutset() {
                    violations.push("approx output is not a cutset".into());
                }
                if res.matching.len() > res.kappa {
                    violations.push(format!("approx size {} exceeds kappa {}", res.matching.len(), res.kappa));
                }
                (Some(res.matching.len()), Some(res.case_trace))
            }
            Err(e) => {
                violations.push(format!("approx failed: {e}"));
                (None, None)
            }
        }
    };

    Ok(GraphRecord {
        family: job.family,
        name: job.name,
        seed: job.seed,
        n: g.vertex_count(),
        m: g.edge_count(),
        min_degree: delta,
        kappa,
        kappa_m,
        class,
        approx_size,
        approx_trace,
        violations,
        edges: g.edges().to_vec(),
    })
}

/// Generates the corpus described by `config`, plus the icosahedron and
/// K5-minus-an-edge fixtures, and checks every bound on every graph.
/// Records come out in generation order whatever the thread schedule.
pub fn run_planar_suite(config: &SuiteConfig) -> Result<SuiteReport, PlanarError> {
    let mut rng = rng_from_seed(config.seed);
    let mut jobs = Vec::new();
    for (which, name) in [(NamedGraph::Icosahedron, "icosahedron"), (NamedGraph::K5Minus, "k5_minus")] {
        jobs.push(Job {
            family: Family::Fixture,
            name: name.to_string(),
            seed: None,
            graph: make_named(which)?,
            tri: None,
        });
    }
    let (lo, hi) = (*config.maximal_n.start(), *config.maximal_n.end());
    for i in 0..config.maximal_count {
        let n = rng.gen_range(lo.max(3)..=hi.max(lo.max(3)));
        let seed: u64 = rng.gen();
        let tri = random_maximal_planar(n, seed)?;
        jobs.push(Job {
            family: Family::MaximalPlanar,
            name: format!("maximal#{i}"),
            seed: Some(seed),
            graph: tri.graph.clone(),
            tri: Some(tri),
        });
    }
    let (lo, hi) = (*config.connected_n.start(), *config.connected_n.end());
    let lo = lo.max(3);
    for i in 0..config.connected_count {
        // K4 is the only excluded graph reachable from n >= 3; redraw it
        let (graph, seed) = loop {
            let n = rng.gen_range(lo..=hi.max(lo));
            let m = rng.gen_range(n - 1..=3 * n - 6);
            let seed: u64 = rng.gen();
            let g = random_connected_planar(n, m, seed)?;
            if !classify_special(&g).is_excluded() {
                break (g, seed);
            }
        };
        jobs.push(Job {
            family: Family::ConnectedPlanar,
            name: format!("connected#{i}"),
            seed: Some(seed),
            graph,
            tri: None,
        });
    }

    let records: Vec<GraphRecord> = jobs
        .into_par_iter()
        .map(evaluate)
        .collect::<Result<_, _>>()?;

    let mut summary = SuiteSummary {
        graphs: records.len(),
        ..SuiteSummary::default()
    };
    let mut violations = Vec::new();
    let mut tight_examples = Vec::new();
    for r in &records {
        match r.family {
            Family::MaximalPlanar => summary.maximal += 1,
            Family::ConnectedPlanar => summary.connected += 1,
            Family::Fixture => {}
        }
        violations.extend(r.violations.iter().map(|v| format!("{}: {v}", r.name)));
        if r.kappa_m == Some(3) {
            summary.upper_tight += 1;
            tight_examples.push(format!("{} (kappa_M = 3)", r.name));
        }
        let maximal = r.family == Family::MaximalPlanar || r.name == "k5_minus";
        if maximal && r.kappa_m == Some(2) && r.n >= 5 {
            summary.lower_tight += 1;
            tight_examples.push(format!("{} (kappa_M = 2)", r.name));
        }
        if let Some(t) = r.approx_trace {
            *summary.trace_counts.entry(t.label().to_string()).or_default() += 1;
        }
    }
    summary.violations = violations.len();
    Ok(SuiteReport {
        config: config.clone(),
        records,
        violations,
        tight_examples,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_triangulations() {
        let t3 = random_maximal_planar(3, 1).unwrap();
        assert_eq!((t3.graph.edge_count(), t3.faces.len()), (3, 2));
        let t4 = random_maximal_planar(4, 1).unwrap();
        assert_eq!(classify_special(&t4.graph), SpecialClass::CompleteEven(4));
        for seed in 0..10 {
            let t5 = random_maximal_planar(5, seed).unwrap();
            assert_eq!(t5.graph.edge_count(), 9);
            t5.check_invariants().unwrap();
        }
        assert_eq!(random_maximal_planar(2, 0), Err(PlanarError::TooSmall(2)));
    }

    #[test]
    fn triangulation_invariants_hold() {
        for seed in 0..30 {
            let n = 3 + (seed as usize % 20);
            let t = random_maximal_planar(n, seed).unwrap();
            t.check_invariants().unwrap();
            assert_eq!(t, random_maximal_planar(n, seed).unwrap());
        }
    }

    #[test]
    fn thinned_planar_graphs() {
        let full = random_connected_planar(8, 18, 4).unwrap();
        assert_eq!(full, random_maximal_planar(8, 4).unwrap().graph);
        let tree = random_connected_planar(8, 7, 4).unwrap();
        assert_eq!(tree.edge_count(), 7);
        assert!(tree.is_connected());
        for seed in 0..20 {
            let g = random_connected_planar(9, 12, seed).unwrap();
            assert_eq!(g.edge_count(), 12);
            assert!(g.is_connected());
        }
        assert!(random_connected_planar(5, 10, 0).is_err());
        assert!(random_connected_planar(5, 3, 0).is_err());
    }

    #[test]
    fn fixtures_only_suite() {
        let cfg = SuiteConfig {
            maximal_count: 0,
            connected_count: 0,
            ..SuiteConfig::default()
        };
        let rep = run_planar_suite(&cfg).unwrap();
        assert_eq!(rep.records.len(), 2);
        assert!(rep.passed(), "{:?}", rep.violations);
        assert_eq!(rep.records[0].kappa_m, Some(3));
        assert_eq!(rep.records[1].kappa_m, Some(2));
        assert!(rep.tight_examples.iter().any(|t| t.starts_with("icosahedron")));
        assert!(rep.tight_examples.iter().any(|t| t.starts_with("k5_minus")));
    }

    #[test]
    fn small_suite_is_deterministic() {
        let cfg = SuiteConfig {
            maximal_count: 10,
            connected_count: 10,
            seed: 11,
            ..SuiteConfig::default()
        };
        let a = run_planar_suite(&cfg).unwrap();
        assert!(a.passed(), "{:?}", a.violations);
        assert_eq!(a.to_jsonl(), run_planar_suite(&cfg).unwrap().to_jsonl());
    }
}
