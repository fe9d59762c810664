use crate::error::{Error, Result};
use crate::family::{Budget, FastSet, SetFamily};
use crate::graph::{components, is_minimal_separator_fast, Graph, VertexSet};

/// Components of G - Omega and a covering component for each internal non-edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmcWitness {
    pub omega: VertexSet,
    pub components: Vec<(VertexSet, VertexSet)>,
    pub cover_map: Vec<((usize, usize), usize)>,
}

pub fn is_pmc(g: &Graph, omega: &VertexSet) -> Option<PmcWitness> {
    if !omega.is_subset(&g.vertices()) {
        return None;
    }
    let comps: Vec<(VertexSet, VertexSet)> = components(g, omega).into_iter().map(|c| (c, g.open_nbhd(&c))).collect();
    if comps.iter().any(|(_, nb)| nb == omega) {
        return None;
    }
    let mut cover_map = Vec::new();
    let vs = omega.to_vec();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let (x, y) = (vs[i], vs[j]);
            if g.has_edge(x, y) {
                continue;
            }
            let c = comps.iter().position(|(_, nb)| nb.contains(x) && nb.contains(y))?;
            cover_map.push(((x, y), c));
        }
    }
    Some(PmcWitness { omega: *omega, components: comps, cover_map })
}

/// Boolean PMC test used in hot loops.
pub fn is_pmc_fast(g: &Graph, omega: &VertexSet) -> bool {
    if !omega.is_subset(&g.vertices()) {
        return false;
    }
    let mut nbhds: [VertexSet; 64] = [VertexSet::new(); 64];
    let mut spill = Vec::new();
    let mut k = 0;
    let mut rest = g.vertices() - *omega;
    while let Some(v) = rest.first() {
        let c = g.component_of(v, &rest);
        rest = rest - c;
        let nb = g.open_nbhd(&c);
        if nb == *omega {
            return false;
        }
        if k < 64 {
            nbhds[k] = nb;
        } else {
            spill.push(nb);
        }
        k += 1;
    }
    for x in omega.iter() {
        let mut cov = g.neighbors(x).with(x);
        for nb in nbhds[..k.min(64)].iter().chain(spill.iter()) {
            if nb.contains(x) {
                cov |= *nb;
            }
        }
        if !omega.is_subset(&cov) {
            return false;
        }
    }
    true
}

pub const PMC_GUARD: usize = 16;

pub fn enumerate_all_pmcs_exhaustive(g: &Graph, max_n: usize) -> Result<SetFamily> {
    let k = g.order();
    if k > max_n {
        return Err(Error::GuardExceeded { what: "PMC enumeration", limit: max_n, n: k });
    }
    let vs = g.vertices();
    let mut out = SetFamily::new();
    for mask in 0..(1u64 << k) {
        let s = vs.subset_by_mask(mask);
        if is_pmc_fast(g, &s) {
            out.insert(s, "oracle");
        }
    }
    Ok(out)
}

/// Separator N(D) and the full component on the Omega side.
pub fn pmc_block(g: &Graph, omega: &VertexSet, d: &VertexSet) -> Result<(VertexSet, VertexSet)> {
    if !is_pmc_fast(g, omega) {
        return Err(Error::PreconditionViolated("not a PMC".into()));
    }
    let comps = components(g, omega);
    if !comps.contains(d) {
        return Err(Error::PreconditionViolated("D is not a component of G - Omega".into()));
    }
    let s = g.open_nbhd(d);
    let mut side = *omega - s;
    for c in &comps {
        if !g.open_nbhd(c).is_subset(&s) {
            side |= *c;
        }
    }
    let full = side.first().map(|v| g.component_of(v, &(g.vertices() - s)) == side).unwrap_or(false)
        && g.open_nbhd(&side) == s;
    if !full || !is_minimal_separator_fast(g, &s) {
        return Err(Error::Invariant("block side is not a full component".into()));
    }
    Ok((s, side))
}

/// Graphs G - {w_1..w_k} for k = 0..=len.
pub fn prefix_graphs(g: &Graph, order: &[usize]) -> Vec<Graph> {
    let mut out = Vec::with_capacity(order.len() + 1);
    let mut removed = VertexSet::new();
    out.push(g.clone());
    for &w in order {
        removed.insert(w);
        out.push(g.remove(&removed));
    }
    out
}

/// Reintroduces `order[k-1], .., order[0]` into a PMC of `graphs[k]`.
pub fn lift_through(graphs: &[Graph], order: &[usize], k: usize, omega_small: VertexSet) -> Result<VertexSet> {
    let mut cur = omega_small;
    for i in (0..k).rev() {
        let gi = &graphs[i];
        let keep = is_pmc_fast(gi, &cur);
        let grow = is_pmc_fast(gi, &cur.with(order[i]));
        match (keep, grow) {
            (true, false) => {}
            (false, true) => cur.insert(order[i]),
            (a, b) => return Err(Error::AlternativeAmbiguity(a as usize + b as usize)),
        }
    }
    Ok(cur)
}

/// The unique PMC of G whose survival sequence `removal_order` ends in `omega_small`.
pub fn lift_pmc(g: &Graph, removal_order: &[usize], omega_small: &VertexSet) -> Result<VertexSet> {
    let graphs = prefix_graphs(g, removal_order);
    if !is_pmc_fast(&graphs[removal_order.len()], omega_small) {
        return Err(Error::PreconditionViolated("not a PMC of the reduced graph".into()));
    }
    lift_through(&graphs, removal_order, removal_order.len(), *omega_small)
}

/// N(D0) + N(D1) + N(D2) + (common neighbours of t1, t2 outside D0).
pub fn deduce_social(g: &Graph, d0: &VertexSet, d1: &VertexSet, d2: &VertexSet, t1: usize, t2: usize) -> VertexSet {
    g.open_nbhd(d0) | g.open_nbhd(d1) | g.open_nbhd(d2) | ((g.neighbors(t1) & g.neighbors(t2)) - *d0)
}

/// (N(t1) - D0) + N(D0).
pub fn deduce_solitary(g: &Graph, t1: usize, d0: &VertexSet) -> VertexSet {
    (g.neighbors(t1) - *d0) | g.open_nbhd(d0)
}

/// Whether D is connected and a full component of G - N(D) with N(D) a minimal separator.
pub fn is_separator_full_component(g: &Graph, d: &VertexSet) -> bool {
    let Some(v) = d.first() else { return false };
    if !d.is_subset(&g.vertices()) {
        return false;
    }
    let nd = g.open_nbhd(d);
    g.component_of(v, &(g.vertices() - nd)) == *d && is_minimal_separator_fast(g, &nd)
}

/// Components of each member after deleting `removed`, deduplicated.
pub fn split_components(g: &Graph, family: &[VertexSet], removed: &VertexSet) -> Vec<VertexSet> {
    let mut seen = FastSet::default();
    let mut out = Vec::new();
    for d in family {
        let mut rest = *d - *removed;
        while let Some(v) = rest.first() {
            let c = g.component_of(v, &rest);
            rest = rest - c;
            if seen.insert(c) {
                out.push(c);
            }
        }
    }
    out
}

/// Every PMC whose components of G - Omega all lie in `x`.
pub fn recover_from_components(g: &Graph, x: &SetFamily, budget: &Budget) -> Result<SetFamily> {
    let order = g.vertices().to_vec();
    let m = order.len();
    let mut out = SetFamily::new();
    if m == 0 {
        return Ok(out);
    }
    if m == 1 {
        out.insert(g.vertices(), "recover:single");
        return Ok(out);
    }
    let raw: Vec<VertexSet> = x.iter().copied().collect();
    let xs: Vec<VertexSet> = raw.iter().copied().filter(|d| is_separator_full_component(g, d)).collect();
    let graphs = prefix_graphs(g, &order);
    let mut removed = VertexSet::new();
    let mut tried: FastSet<(usize, VertexSet)> = FastSet::default();
    let mut emit = |k: usize, omega_k: VertexSet, tag: &'static str, out: &mut SetFamily| -> Result<()> {
        if !tried.insert((k, omega_k)) {
            return Ok(());
        }
        budget.tick(1 + k as u64)?;
        if is_pmc_fast(&graphs[k], &omega_k) {
            let omega = lift_through(&graphs, &order, k, omega_k)?;
            out.insert(omega, tag);
        }
        Ok(())
    };
    emit(m, VertexSet::new(), "recover:lift-empty", &mut out)?;
    for k in 0..m {
        let gk = &graphs[k];
        let v = order[k];
        for d in split_components(g, &raw, &removed) {
            emit(k, gk.open_nbhd(&d).with(v), "recover:vertex-in-omega", &mut out)?;
        }
        let xk = split_components(g, &xs, &removed);
        let nbs: Vec<VertexSet> = xk.iter().map(|d| gk.open_nbhd(d)).collect();
        for (i0, d0) in xk.iter().enumerate() {
            if !d0.contains(v) {
                continue;
            }
            let n0 = nbs[i0];
            let far0 = gk.closed_nbhd(d0);
            for t1 in n0.iter() {
                emit(k, deduce_solitary(gk, t1, d0), "recover:solitary", &mut out)?;
            }
            let others: Vec<usize> = (0..xk.len()).filter(|&i| xk[i].is_disjoint(&far0)).collect();
            for t1 in n0.iter() {
                for t2 in n0.iter().filter(|&t2| t2 > t1 && !gk.has_edge(t1, t2)) {
                    let common = (gk.neighbors(t1) & gk.neighbors(t2)) - *d0;
                    for &i1 in &others {
                        if !nbs[i1].contains(t1) || nbs[i1].contains(t2) {
                            continue;
                        }
                        let far1 = gk.closed_nbhd(&xk[i1]);
                        for &i2 in &others {
                            if !nbs[i2].contains(t2) || nbs[i2].contains(t1) || xk[i2].intersects(&far1) {
                                continue;
                            }
                            let omega_k = n0 | nbs[i1] | nbs[i2] | common;
                            if omega_k.intersects(&xk[i1]) || omega_k.intersects(&xk[i2]) || omega_k.intersects(d0) {
                                continue;
                            }
                            emit(k, omega_k, "recover:social", &mut out)?;
                        }
                    }
                }
            }
        }
        removed.insert(v);
    }
    Ok(out)
}

/// For each X and s in X: (N[s] & X) + union of N(C) over components C of G - X.
pub fn recover_from_union(g: &Graph, x: &SetFamily) -> SetFamily {
    let mut out = SetFamily::new();
    for xs in x {
        let outer = components(g, xs).iter().fold(VertexSet::new(), |acc, c| acc | g.open_nbhd(c));
        for s in xs.iter() {
            out.insert((g.neighbors(s).with(s) & *xs) | outer, "recover-union");
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WingsReport {
    pub first_complete: bool,
    pub second_complete: bool,
    pub nonadjacent_pairs: usize,
}

pub fn wings(g: &Graph, omega: &VertexSet, d1: &VertexSet, d2: &VertexSet) -> Result<WingsReport> {
    let comps = components(g, omega);
    if !is_pmc_fast(g, omega) || !comps.contains(d1) || !comps.contains(d2) {
        return Err(Error::PreconditionViolated("need a PMC and two of its components".into()));
    }
    let (n1, n2) = (g.open_nbhd(d1), g.open_nbhd(d2));
    let (only1, only2) = (n1 - n2, n2 - n1);
    let first_complete = g.complete_to(&only1, d1);
    let second_complete = g.complete_to(&only2, d2);
    if !first_complete && !second_complete {
        return Err(Error::ClaimViolated("neither private neighbourhood is complete to its component".into()));
    }
    let mut pairs = 0;
    for v1 in only1.iter() {
        for v2 in (only2 - g.neighbors(v1)).iter() {
            pairs += 1;
            if !d1.is_subset(&g.neighbors(v1)) || !d2.is_subset(&g.neighbors(v2)) {
                return Err(Error::ClaimViolated(format!("non-adjacent pair {v1}, {v2} is not complete")));
            }
        }
    }
    Ok(WingsReport { first_complete, second_complete, nonadjacent_pairs: pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::set;

    #[test]
    fn pmc_examples() {
        let c4 = Graph::cycle(4);
        let w = is_pmc(&c4, &set(&[0, 1, 2])).unwrap();
        assert_eq!(w.cover_map, vec![((0, 2), 0)]);
        let p4 = Graph::path(4);
        assert!(is_pmc(&p4, &set(&[0, 2])).is_none());
        assert!(is_pmc(&p4, &set(&[1, 2])).is_some());
    }

    #[test]
    fn exhaustive_pmc_examples() {
        let p4 = enumerate_all_pmcs_exhaustive(&Graph::path(4), PMC_GUARD).unwrap();
        assert_eq!(p4.sorted(), vec![set(&[0, 1]), set(&[1, 2]), set(&[2, 3])]);
        let c4 = enumerate_all_pmcs_exhaustive(&Graph::cycle(4), PMC_GUARD).unwrap();
        assert_eq!(c4.sorted(), vec![set(&[0, 1, 2]), set(&[0, 1, 3]), set(&[0, 2, 3]), set(&[1, 2, 3])]);
        let k3 = enumerate_all_pmcs_exhaustive(&Graph::complete(3), PMC_GUARD).unwrap();
        assert_eq!(k3.sorted(), vec![set(&[0, 1, 2])]);
    }

    #[test]
    fn block_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(pmc_block(&c4, &set(&[0, 1, 2]), &set(&[3])).unwrap(), (set(&[0, 2]), set(&[1])));
        let p4 = Graph::path(4);
        assert_eq!(pmc_block(&p4, &set(&[1, 2]), &set(&[0])).unwrap(), (set(&[1]), set(&[2, 3])));
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(pmc_block(&claw, &set(&[0, 1]), &set(&[2])).unwrap(), (set(&[0]), set(&[1])));
    }

    #[test]
    fn lift_examples() {
        let p4 = Graph::path(4);
        assert_eq!(lift_pmc(&p4, &[3], &set(&[1, 2])).unwrap(), set(&[1, 2]));
        assert_eq!(lift_pmc(&p4, &[], &set(&[1, 2])).unwrap(), set(&[1, 2]));
        let c4 = Graph::cycle(4);
        let lifted = lift_pmc(&c4, &[3], &set(&[0, 1, 2])).unwrap_err();
        assert_eq!(lifted, Error::PreconditionViolated("not a PMC of the reduced graph".into()));
        assert_eq!(lift_pmc(&c4, &[3], &set(&[0, 1])).unwrap(), set(&[0, 1, 3]));
    }

    #[test]
    fn deduction_examples() {
        let p4 = Graph::path(4);
        assert_eq!(deduce_solitary(&p4, 2, &set(&[3])), set(&[1, 2]));
    }

    #[test]
    fn recovery_examples() {
        let p4 = Graph::path(4);
        let singles = SetFamily::from_sets((0..4).map(VertexSet::singleton), "x");
        let fam = recover_from_components(&p4, &singles, &Budget::unlimited()).unwrap();
        for omega in [set(&[0, 1]), set(&[1, 2]), set(&[2, 3])] {
            assert!(fam.contains(&omega));
        }
        let k1 = Graph::new(1);
        let fam = recover_from_components(&k1, &SetFamily::new(), &Budget::unlimited()).unwrap();
        assert_eq!(fam.sets(), &[set(&[0])]);

        let x = SetFamily::from_sets([set(&[0, 1, 2])], "x");
        assert!(recover_from_union(&p4, &x).contains(&set(&[1, 2])));
        assert!(recover_from_union(&p4, &SetFamily::new()).is_empty());
    }

    #[test]
    fn wings_examples() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let r = wings(&claw, &set(&[0, 1]), &set(&[2]), &set(&[3])).unwrap();
        assert!(r.first_complete && r.second_complete);
    }
}
