use p6mwis::chordal::{clique_tree, is_chordal_fast, is_minimal_completion, minimal_completion};
use p6mwis::graph::{components, enumerate_minimal_separators_exhaustive, is_minimal_separator, is_p6_free, SEPARATOR_GUARD};
use p6mwis::io::{emit_graph, parse_graph};
use p6mwis::modular::{is_module, modular_partition};
use p6mwis::pmc::{enumerate_all_pmcs_exhaustive, is_pmc, PMC_GUARD};
use p6mwis::solver::{brute_force_mwis, solve, Mode, SolveOptions, BRUTE_GUARD};
use p6mwis::{Graph, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (proptest::collection::vec(any::<bool>(), pairs), proptest::collection::vec(1u64..20, n)).prop_map(
            move |(bits, weights)| {
                let mut g = Graph::new(n);
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            g.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                g.with_weights(&weights)
            },
        )
    })
}

fn best(g: &Graph) -> u64 {
    brute_force_mwis(g, BRUTE_GUARD).unwrap().weight
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn oracle_mode_is_exact(g in graph_strategy(9)) {
        let sol = solve(&g, SolveOptions::new(Mode::Oracle)).unwrap();
        prop_assert_eq!(sol.weight, best(&g));
        prop_assert!(g.is_independent(&sol.vertices));
        prop_assert_eq!(g.weight_of(&sol.vertices), sol.weight);
    }

    #[test]
    fn paper_mode_is_exact_on_p6_free(g in graph_strategy(8)) {
        prop_assume!(is_p6_free(&g));
        let sol = solve(&g, SolveOptions::new(Mode::Paper)).unwrap();
        prop_assert_eq!(sol.weight, best(&g));
        prop_assert!(sol.warnings.is_empty());
    }

    #[test]
    fn heavier_vertex_never_lowers_optimum(g in graph_strategy(9), v in 0usize..9, extra in 1u64..10) {
        let v = v % g.n();
        let mut h = g.clone();
        h.set_weight(v, g.weight(v) + extra);
        prop_assert!(best(&h) >= best(&g));
    }

    #[test]
    fn dropping_an_edge_never_lowers_optimum(g in graph_strategy(9), pick in any::<usize>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick % edges.len()];
        let mut h = g.clone();
        h.remove_edge(u, v);
        prop_assert!(best(&h) >= best(&g));
    }

    #[test]
    fn components_partition_the_rest(g in graph_strategy(10), mask in any::<u64>()) {
        let removed = g.vertices().subset_by_mask(mask);
        let comps = components(&g, &removed);
        let union = comps.iter().fold(VertexSet::new(), |a, c| a | *c);
        prop_assert_eq!(union, g.vertices() - removed);
        prop_assert_eq!(comps.iter().map(|c| c.len()).sum::<usize>(), union.len());
        for c in &comps {
            prop_assert!(g.open_nbhd(c).is_subset(&removed));
        }
    }

    #[test]
    fn text_round_trip(g in graph_strategy(12)) {
        let text = emit_graph(&g);
        let h = parse_graph(&text).unwrap();
        prop_assert_eq!(h.edges(), g.edges());
        prop_assert_eq!(h.weights(), g.weights());
    }

    #[test]
    fn exhaustive_enumerations_are_sound(g in graph_strategy(8)) {
        for omega in enumerate_all_pmcs_exhaustive(&g, PMC_GUARD).unwrap().iter() {
            prop_assert!(is_pmc(&g, omega).is_some());
        }
        for s in enumerate_minimal_separators_exhaustive(&g, SEPARATOR_GUARD).unwrap() {
            prop_assert!(is_minimal_separator(&g, &s).is_some());
        }
    }

    #[test]
    fn minimal_completions_yield_minimal_separators(g in graph_strategy(9)) {
        let c = minimal_completion(&g, None);
        let h = c.apply(&g);
        prop_assert!(is_chordal_fast(&h));
        prop_assert!(is_minimal_completion(&g, &c.fill));
        for a in clique_tree(&h).unwrap().adhesions {
            prop_assert!(is_minimal_separator(&g, &a).is_some());
        }
    }

    #[test]
    fn modular_partition_is_a_partition_into_modules(g in graph_strategy(9)) {
        let scope = g.vertices();
        prop_assume!(scope.len() >= 2);
        let part = modular_partition(&g, &scope).unwrap();
        let union = part.modules.iter().fold(VertexSet::new(), |a, m| a | *m);
        prop_assert_eq!(union, scope);
        prop_assert_eq!(part.modules.iter().map(|m| m.len()).sum::<usize>(), scope.len());
        for m in &part.modules {
            prop_assert!(is_module(&g, &scope, m));
        }
    }
}
