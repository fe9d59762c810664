use crate::error::{Error, Result};
use crate::graph::{find_induced_path, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected cograph built by random joins and unions, the last merge a join.
pub fn gen_cograph(seed: u64, n: usize) -> Graph {
    let mut r = rng(seed);
    let mut g = Graph::new(n);
    if n < 2 {
        return g;
    }
    let mut parts: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    while parts.len() > 1 {
        parts.shuffle(&mut r);
        let a = parts.pop().unwrap();
        let b = parts.pop().unwrap();
        if parts.is_empty() || r.gen_bool(0.5) {
            for &x in &a {
                for &y in &b {
                    g.add_edge(x, y);
                }
            }
        }
        parts.push([a, b].concat());
    }
    g
}

/// Connected split graph: a clique plus an independent set, each independent
/// vertex with at least one clique neighbour.
pub fn gen_split(seed: u64, n: usize, p: f64) -> Graph {
    let mut r = rng(seed);
    let mut g = Graph::new(n);
    if n < 2 {
        return g;
    }
    let k = r.gen_range(1..n);
    for x in 0..k {
        for y in x + 1..k {
            g.add_edge(x, y);
        }
    }
    for v in k..n {
        let mut any = false;
        for x in 0..k {
            if r.gen_bool(p) {
                g.add_edge(v, x);
                any = true;
            }
        }
        if !any {
            g.add_edge(v, r.gen_range(0..k));
        }
    }
    g
}

/// G(n, p) made connected by joining consecutive components with one edge.
pub fn gen_connected(seed: u64, n: usize, p: f64) -> Graph {
    let mut r = rng(seed);
    let mut g = Graph::new(n);
    for x in 0..n {
        for y in x + 1..n {
            if r.gen_bool(p) {
                g.add_edge(x, y);
            }
        }
    }
    let comps = crate::graph::components(&g, &crate::graph::VertexSet::new());
    for w in comps.windows(2) {
        let a = w[0].to_vec();
        let b = w[1].to_vec();
        g.add_edge(*a.choose(&mut r).unwrap(), *b.choose(&mut r).unwrap());
    }
    g
}

pub const REJECTION_ATTEMPTS: usize = 10_000;

/// Connected P6-free graph by rejection sampling over `gen_connected`.
pub fn gen_rejection_p6free(seed: u64, n: usize, p: f64) -> Result<Graph> {
    let mut r = rng(seed);
    for _ in 0..REJECTION_ATTEMPTS {
        let g = gen_connected(r.gen(), n, p);
        if find_induced_path(&g, 6).is_none() {
            return Ok(g);
        }
    }
    Err(Error::WitnessNotFound(format!("no P6-free sample in {REJECTION_ATTEMPTS} attempts")))
}

/// Random weights in 1..=max.
pub fn random_weights(seed: u64, g: &Graph, max: u64) -> Graph {
    let mut r = rng(seed);
    let w: Vec<u64> = (0..g.n()).map(|_| r.gen_range(1..=max)).collect();
    g.clone().with_weights(&w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_p6_free;

    #[test]
    fn generators_are_connected_and_p6_free() {
        for seed in 0..20 {
            for n in 1..10 {
                let c = gen_cograph(seed, n);
                assert!(c.is_connected() && find_induced_path(&c, 4).is_none());
                let s = gen_split(seed, n, 0.4);
                assert!(s.is_connected() && is_p6_free(&s));
                assert!(gen_connected(seed, n, 0.2).is_connected());
            }
            let g = gen_rejection_p6free(seed, 8, 0.4).unwrap();
            assert!(g.is_connected() && is_p6_free(&g));
        }
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(gen_cograph(7, 9).edges(), gen_cograph(7, 9).edges());
        assert_eq!(gen_connected(7, 9, 0.3).edges(), gen_connected(7, 9, 0.3).edges());
    }
}
