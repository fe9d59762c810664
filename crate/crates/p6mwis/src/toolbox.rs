use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::modular::{modular_partition, ModularPartition, NodeKind};
use std::collections::BTreeMap;

/// Two quasi-orders over `universe`, given as relation matrices indexed by position.
#[derive(Clone, Debug)]
pub struct QuasiOrderPair {
    pub universe: Vec<usize>,
    pub leq1: Vec<Vec<bool>>,
    pub leq2: Vec<Vec<bool>>,
}

impl QuasiOrderPair {
    pub fn from_fns(universe: Vec<usize>, leq1: impl Fn(usize, usize) -> bool, leq2: impl Fn(usize, usize) -> bool) -> Self {
        let rel = |f: &dyn Fn(usize, usize) -> bool| -> Vec<Vec<bool>> {
            universe.iter().map(|&a| universe.iter().map(|&b| f(a, b)).collect()).collect()
        };
        let leq1 = rel(&leq1);
        let leq2 = rel(&leq2);
        QuasiOrderPair { universe, leq1, leq2 }
    }

    fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq1[i][j] || self.leq1[j][i] || self.leq2[i][j] || self.leq2[j][i]
    }
}

// Breaks ties inside each equivalence class by position.
fn linearize(rel: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let k = rel.len();
    (0..k).map(|i| (0..k).map(|j| rel[i][j] && (!rel[j][i] || i <= j)).collect()).collect()
}

/// Arcs (a, b) with a above-or-incomparable to b in both linearized orders.
pub fn biranking_digraph(q: &QuasiOrderPair) -> Vec<Vec<bool>> {
    let l1 = linearize(&q.leq1);
    let l2 = linearize(&q.leq2);
    let k = q.universe.len();
    (0..k).map(|a| (0..k).map(|b| a != b && !l1[a][b] && !l2[a][b]).collect()).collect()
}

/// An element below every other one in at least one of the two orders.
pub fn biranking_select(q: &QuasiOrderPair) -> Result<usize> {
    let k = q.universe.len();
    if k == 0 {
        return Err(Error::PreconditionViolated("empty universe".into()));
    }
    for i in 0..k {
        for j in i + 1..k {
            if !q.comparable(i, j) {
                return Err(Error::ComparabilityViolated);
            }
        }
    }
    let arcs = biranking_digraph(q);
    let sink = (0..k).find(|&a| !arcs[a].iter().any(|&x| x)).ok_or(Error::ComparabilityViolated)?;
    Ok(q.universe[sink])
}

/// Split of N(D) by how each neighbour attaches to D.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodClassification {
    pub p: usize,
    pub q: usize,
    pub p4_class: VertexSet,
    pub pq_class: VertexSet,
    pub tricky: VertexSet,
    /// For each member u of `p4_class`, an induced path u, a, b, c with a, b, c in D.
    pub p4_witness: BTreeMap<usize, [usize; 4]>,
}

/// Induced path u, a, b, c with a, b, c in `d`, lowest ids first.
pub fn find_sticking_p4(g: &Graph, u: usize, d: &VertexSet) -> Option<[usize; 4]> {
    let nu = g.neighbors(u);
    for a in (nu & *d).iter() {
        for b in ((g.neighbors(a) & *d) - nu).iter() {
            let c = (((g.neighbors(b) & *d) - nu) - g.neighbors(a)).without(a).first();
            if let Some(c) = c {
                return Some([u, a, b, c]);
            }
        }
    }
    None
}

pub fn check_pq(part: &ModularPartition, p: usize, q: usize) -> Result<()> {
    match (part.module_of(p), part.module_of(q)) {
        (Some(i), Some(j)) if i != j && part.adjacent(i, j) => Ok(()),
        _ => Err(Error::BadPqChoice),
    }
}

/// Lowest-id pair p, q in distinct adjacent modules of G[d].
pub fn default_pq(g: &Graph, d: &VertexSet) -> Result<(usize, usize)> {
    let part = modular_partition(g, d)?;
    for i in 0..part.modules.len() {
        for j in i + 1..part.modules.len() {
            if part.adjacent(i, j) {
                let (a, b) = (part.modules[i].first().unwrap(), part.modules[j].first().unwrap());
                return Ok((a.min(b), a.max(b)));
            }
        }
    }
    Err(Error::BadPqChoice)
}

pub fn neighborhood_decomposition(g: &Graph, d: &VertexSet, p: usize, q: usize) -> Result<NeighborhoodClassification> {
    if d.len() < 2 || g.component_of(d.first().unwrap(), d) != *d {
        return Err(Error::PreconditionViolated("D must be connected with at least two vertices".into()));
    }
    let part = modular_partition(g, d)?;
    check_pq(&part, p, q)?;
    let npq = g.neighbors(p) | g.neighbors(q);
    let mut out = NeighborhoodClassification {
        p,
        q,
        p4_class: VertexSet::new(),
        pq_class: VertexSet::new(),
        tricky: VertexSet::new(),
        p4_witness: BTreeMap::new(),
    };
    for u in g.open_nbhd(d).iter() {
        if npq.contains(u) {
            out.pq_class.insert(u);
        } else if let Some(w) = find_sticking_p4(g, u, d) {
            out.p4_class.insert(u);
            out.p4_witness.insert(u, w);
        } else {
            out.tricky.insert(u);
        }
    }
    if !out.tricky.is_empty() && part.kind != NodeKind::Clique {
        return Err(Error::Invariant("tricky vertex toward a non-mesh component".into()));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverMode {
    Simplified,
    General { p1: usize, q1: usize, p2: usize, q2: usize },
}

fn check_full_pair(g: &Graph, s: &VertexSet, d1: &VertexSet, d2: &VertexSet) -> Result<()> {
    for d in [d1, d2] {
        let Some(v) = d.first() else {
            return Err(Error::InvalidWitness("empty component".into()));
        };
        if !d.is_disjoint(s) || g.component_of(v, &(g.vertices() - *s)) != *d || g.open_nbhd(d) != *s {
            return Err(Error::InvalidWitness("not a full component of G - S".into()));
        }
    }
    if d1 == d2 {
        return Err(Error::InvalidWitness("full components must differ".into()));
    }
    Ok(())
}

/// Sets A1 in D1 and A2 in D2 of size at most three whose closed neighbourhood covers S.
pub fn separator_cover(
    g: &Graph,
    s: &VertexSet,
    d1: &VertexSet,
    d2: &VertexSet,
    mode: CoverMode,
) -> Result<(VertexSet, VertexSet)> {
    check_full_pair(g, s, d1, d2)?;
    let (p1, q1, p2, q2) = match mode {
        CoverMode::Simplified => {
            if d1.len() == 1 {
                return Ok((*d1, VertexSet::new()));
            }
            if d2.len() == 1 {
                return Ok((VertexSet::new(), *d2));
            }
            let (p1, q1) = default_pq(g, d1)?;
            let (p2, q2) = default_pq(g, d2)?;
            (p1, q1, p2, q2)
        }
        CoverMode::General { p1, q1, p2, q2 } => {
            if d1.len() < 2 || d2.len() < 2 {
                return Err(Error::InvalidWitness("general covering needs components of size at least two".into()));
            }
            check_pq(&modular_partition(g, d1)?, p1, q1).map_err(|_| Error::InvalidWitness("p1, q1".into()))?;
            check_pq(&modular_partition(g, d2)?, p2, q2).map_err(|_| Error::InvalidWitness("p2, q2".into()))?;
            (p1, q1, p2, q2)
        }
    };
    let base1 = VertexSet::singleton(p1).with(q1);
    let base2 = VertexSet::singleton(p2).with(q2);
    let rest = *s - g.closed_nbhd(&(base1 | base2));
    if rest.is_empty() {
        return Ok((base1, base2));
    }
    let m1 = modular_partition(g, d1)?.kind == NodeKind::Clique;
    let m2 = modular_partition(g, d2)?.kind == NodeKind::Clique;
    if !(m1 && m2) {
        return Err(Error::NotP6Free);
    }
    let on = |d: VertexSet| move |a: usize, b: usize| (g.neighbors(a) & d).is_subset(&g.neighbors(b));
    let q = QuasiOrderPair::from_fns(rest.to_vec(), on(*d1), on(*d2));
    let r = biranking_select(&q).map_err(|_| Error::NotP6Free)?;
    let r1 = (g.neighbors(r) & *d1).first().ok_or(Error::NotP6Free)?;
    let r2 = (g.neighbors(r) & *d2).first().ok_or(Error::NotP6Free)?;
    let a1 = base1.with(r1);
    let a2 = base2.with(r2);
    if !s.is_subset(&g.closed_nbhd(&(a1 | a2))) {
        return Err(Error::NotP6Free);
    }
    Ok((a1, a2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::set;

    #[test]
    fn biranking_examples() {
        let q = QuasiOrderPair::from_fns(vec![1], |_, _| true, |_, _| true);
        assert_eq!(biranking_select(&q).unwrap(), 1);

        let l1 = |a: usize, b: usize| a == b || (a == 2 && (b == 1 || b == 3));
        let l2 = |a: usize, b: usize| a == b || (a == 3 && b == 1);
        let q = QuasiOrderPair::from_fns(vec![1, 2, 3], l1, l2);
        assert_eq!(biranking_select(&q).unwrap(), 2);

        let q = QuasiOrderPair::from_fns(vec![4, 2, 7, 5], |a, b| a <= b, |a, b| a == b);
        assert_eq!(biranking_select(&q).unwrap(), 2);
    }

    #[test]
    fn biranking_rejects_incomparable() {
        let q = QuasiOrderPair::from_fns(vec![0, 1], |a, b| a == b, |a, b| a == b);
        assert_eq!(biranking_select(&q), Err(Error::ComparabilityViolated));
    }

    #[test]
    fn decomposition_on_p5() {
        // u=0, D = {1,2,3,4} on the path 0-1-2-3-4.
        let g = Graph::path(5);
        let d = set(&[1, 2, 3, 4]);
        let c = neighborhood_decomposition(&g, &d, 3, 4).unwrap();
        assert!(c.p4_class.contains(0));
        assert_eq!(c.p4_witness[&0], [0, 1, 2, 3]);
        let c = neighborhood_decomposition(&g, &d, 1, 2).unwrap();
        assert!(c.pq_class.contains(0));
        assert!(matches!(neighborhood_decomposition(&g, &d, 1, 3), Err(Error::BadPqChoice)));
    }

    #[test]
    fn tricky_vertex_on_mesh() {
        // D = K2,2,2 with modules {0,1},{2,3},{4,5}; vertex 6 sees exactly {4,5}.
        let mut g = Graph::new(7);
        for u in 0..6 {
            for v in u + 1..6 {
                if u / 2 != v / 2 {
                    g.add_edge(u, v);
                }
            }
        }
        g.add_edge(6, 4);
        g.add_edge(6, 5);
        let d = set(&[0, 1, 2, 3, 4, 5]);
        let c = neighborhood_decomposition(&g, &d, 0, 2).unwrap();
        assert_eq!(c.tricky, set(&[6]));
        let c = neighborhood_decomposition(&g, &d, 0, 4).unwrap();
        assert_eq!(c.pq_class, set(&[6]));
    }

    #[test]
    fn cover_examples() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let (a1, a2) = separator_cover(&star, &set(&[0]), &set(&[1]), &set(&[2]), CoverMode::Simplified).unwrap();
        assert_eq!((a1, a2), (set(&[1]), VertexSet::new()));

        let c6 = Graph::cycle(6);
        let s = set(&[0, 3]);
        let (a1, a2) = separator_cover(&c6, &s, &set(&[1, 2]), &set(&[4, 5]), CoverMode::Simplified).unwrap();
        assert_eq!(a1, set(&[1, 2]));
        assert!(s.is_subset(&c6.closed_nbhd(&(a1 | a2))));

        assert!(matches!(
            separator_cover(&c6, &s, &set(&[1]), &set(&[4, 5]), CoverMode::Simplified),
            Err(Error::InvalidWitness(_))
        ));
    }
}
