mod common;

use common::*;
use mvcut::approx::{derive_case_state, ApproxError};
use mvcut::exact::{
    cutset_up_to, decide_matching_vertex_cutset, min_edge_dominating_set, min_independent_edge_dominating_set,
};
use mvcut::flow::min_vertex_cut;
use mvcut::generators::{make_named, random_connected_graph, NamedGraph};
use mvcut::graph::{components_excluding, Verdict};
use mvcut::matching::maximum_matching_within;
use mvcut::{approx_min_matching_vertex_cutset, check_cutset, classify_special, exact_min_matching_vertex_cutset};
use proptest::prelude::*;

#[test]
fn exact_agrees_with_full_enumeration() {
    let mut rng = TestRng::new(11);
    for _ in 0..300 {
        let g = corpus_graph(&mut rng, 2, 8);
        let exact = exact_min_matching_vertex_cutset(&g).unwrap();
        assert_eq!(exact.size(), brute_kappa_m(&g), "{g:?}");
    }
}

#[test]
fn excluded_families_have_no_cutset() {
    for n in 1..=5 {
        let even = make_named(NamedGraph::Complete(2 * n)).unwrap();
        assert_eq!(brute_kappa_m(&even), None);
        assert!(classify_special(&even).is_excluded());
        assert!(matches!(approx_min_matching_vertex_cutset(&even), Err(ApproxError::NoSolution(_))));
        let kb = make_named(NamedGraph::CompleteBipartite(n, n)).unwrap();
        assert_eq!(brute_kappa_m(&kb), None);
        assert!(matches!(approx_min_matching_vertex_cutset(&kb), Err(ApproxError::NoSolution(_))));
    }
}

#[test]
fn odd_complete_graphs_need_half_the_vertices() {
    for n in 1..=4 {
        let g = make_named(NamedGraph::Complete(2 * n + 1)).unwrap();
        assert_eq!(brute_kappa_m(&g), Some(n));
        let r = approx_min_matching_vertex_cutset(&g).unwrap();
        assert_eq!(r.matching.len(), n);
        assert_eq!(r.certificate.verdict, Verdict::Trivial);
    }
}

#[test]
fn approx_is_total_and_within_bounds() {
    let mut rng = TestRng::new(12);
    let mut done = 0;
    while done < 500 {
        let g = corpus_graph(&mut rng, 2, 9);
        if classify_special(&g).is_excluded() {
            continue;
        }
        done += 1;
        let r = approx_min_matching_vertex_cutset(&g).unwrap_or_else(|e| panic!("{e} on {g:?}"));
        r.matching.validate_in(&g).unwrap();
        assert_ne!(check_cutset(&g, &r.matching).unwrap().verdict, Verdict::NotACutset);
        let kappa = brute_kappa(&g);
        let km = brute_kappa_m(&g).expect("non-excluded graphs have a cutset");
        assert_eq!(r.kappa, kappa);
        assert!(r.matching.len() >= km);
        assert!(r.matching.len() <= kappa, "{} > {kappa} via {}", r.matching.len(), r.case_trace);
        assert!(kappa <= 2 * km);
        assert!(km <= g.min_degree());
    }
}

#[test]
fn approx_is_deterministic() {
    let g = random_connected_graph(30, 0.2, 99).unwrap();
    assert_eq!(
        approx_min_matching_vertex_cutset(&g).unwrap(),
        approx_min_matching_vertex_cutset(&g).unwrap()
    );
}

#[test]
fn cut_leftovers_are_independent_after_maximum_matching() {
    let mut rng = TestRng::new(13);
    let mut done = 0;
    while done < 200 {
        let g = corpus_graph(&mut rng, 4, 9);
        if g.is_complete() {
            continue;
        }
        let cut = min_vertex_cut(&g).unwrap();
        let comps = components_excluding(&g, &cut.vertices);
        let u = comps[0].clone();
        let v: Vec<usize> = comps[1..].concat();
        let m1 = maximum_matching_within(&g, &cut.vertices);
        // an empty M2 is enough to exercise the cut-side invariants
        match derive_case_state(&g, &cut.vertices, &m1, &mvcut::Matching::empty(), &u, &v) {
            Ok(state) => {
                for (i, &a) in state.s2.iter().enumerate() {
                    assert!(state.s2[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
                }
                done += 1;
            }
            Err(ApproxError::CaseState(msg)) => assert!(!msg.contains("independent"), "{msg}"),
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn edge_dominating_sets_match_minimum_maximal_matchings() {
    let mut rng = TestRng::new(14);
    for _ in 0..200 {
        let g = corpus_graph(&mut rng, 2, 8);
        let ieds = min_independent_edge_dominating_set(&g).unwrap();
        let eds = min_edge_dominating_set(&g).unwrap();
        assert_eq!(ieds.len(), brute_min_maximal_matching(&g));
        assert_eq!(eds.len(), ieds.len());
        for &(a, b) in g.edges() {
            assert!(eds.iter().any(|&(c, d)| a == c || a == d || b == c || b == d));
        }
    }
}

#[test]
fn named_graph_values() {
    let ico = make_named(NamedGraph::Icosahedron).unwrap();
    assert_eq!(brute_kappa(&ico), 5);
    assert_eq!(brute_kappa_m(&ico), Some(3));
    let k5m = make_named(NamedGraph::K5Minus).unwrap();
    assert_eq!(brute_kappa_m(&k5m), Some(2));
    assert_eq!(exact_min_matching_vertex_cutset(&k5m).unwrap().size(), Some(2));
    let pet = make_named(NamedGraph::Petersen).unwrap();
    assert_eq!(brute_kappa(&pet), 3);
    assert_eq!(exact_min_matching_vertex_cutset(&pet).unwrap().size(), brute_kappa_m(&pet));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decision_is_monotone_in_k(n in 2usize..9, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_connected_graph(n, p, seed).unwrap();
        let answers: Vec<bool> = (0..=n / 2).map(|k| decide_matching_vertex_cutset(&g, k).unwrap()).collect();
        prop_assert!(answers.windows(2).all(|w| !w[0] || w[1]));
        let km = brute_kappa_m(&g);
        for (k, &yes) in answers.iter().enumerate() {
            prop_assert_eq!(yes, km.is_some_and(|km| km <= k));
        }
    }

    #[test]
    fn cutset_witnesses_are_valid(n in 2usize..10, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_connected_graph(n, p, seed).unwrap();
        if let Some(m) = cutset_up_to(&g, n / 2, mvcut::exact::DEFAULT_BUDGET).unwrap() {
            m.validate_in(&g).unwrap();
            prop_assert_ne!(check_cutset(&g, &m).unwrap().verdict, Verdict::NotACutset);
        }
    }
}
