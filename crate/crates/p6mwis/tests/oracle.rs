use p6mwis::gen::{gen_cograph, gen_rejection_p6free, gen_split, random_weights};
use p6mwis::graph::set;
use p6mwis::solver::{brute_force_mwis, solve, Mode, SolveOptions, BRUTE_GUARD};
use p6mwis::Graph;

fn all_modes(g: &Graph) -> [u64; 3] {
    [Mode::Brute, Mode::Oracle, Mode::Paper].map(|m| solve(g, SolveOptions::new(m)).unwrap().weight)
}

#[test]
fn named_graphs() {
    let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
    let cases: Vec<(Graph, u64)> = vec![
        (Graph::path(5), 3),
        (Graph::cycle(5), 2),
        (Graph::cycle(4), 2),
        (Graph::complete(6), 1),
        (k33.clone(), 3),
        (k33.with_weights(&[1, 1, 1, 2, 2, 2]), 6),
        (Graph::path(4).with_weights(&[3, 1, 1, 5]), 8),
        (Graph::new(4), 4),
    ];
    for (g, want) in cases {
        assert_eq!(all_modes(&g), [want; 3], "{:?}", g.edges());
    }
}

#[test]
fn frozen_generated_values() {
    let cases: [(&str, usize, u64, u64); 12] = [
        ("cograph", 7, 1, 22),
        ("cograph", 8, 2, 39),
        ("cograph", 9, 3, 45),
        ("cograph", 10, 4, 29),
        ("split", 7, 1, 55),
        ("split", 8, 2, 33),
        ("split", 9, 3, 41),
        ("split", 10, 4, 74),
        ("reject", 7, 1, 36),
        ("reject", 8, 2, 75),
        ("reject", 9, 3, 34),
        ("reject", 10, 4, 100),
    ];
    for (kind, n, seed, want) in cases {
        let g = match kind {
            "cograph" => gen_cograph(seed, n),
            "split" => gen_split(seed, n, 0.5),
            _ => gen_rejection_p6free(seed, n, 0.5).unwrap(),
        };
        let g = random_weights(seed, &g, 30);
        assert_eq!(all_modes(&g), [want; 3], "{kind} n={n} seed={seed}");
    }
}

#[test]
fn disconnected_input_sums_components() {
    let mut g = Graph::new(8);
    for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 5)] {
        g.add_edge(u, v);
    }
    let sol = solve(&g, SolveOptions::new(Mode::Paper)).unwrap();
    assert_eq!(sol.weight, 4);
    assert!(g.is_independent(&sol.vertices));
    assert!(set(&[0, 2, 4]).is_subset(&sol.vertices));
}

#[test]
fn brute_force_guard() {
    assert!(brute_force_mwis(&Graph::new(BRUTE_GUARD + 1), BRUTE_GUARD).is_err());
}
