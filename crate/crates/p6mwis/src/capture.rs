use crate::error::{Error, Result};
use crate::family::{Budget, FastSet, SetFamily};
use crate::graph::{components, components_within, Graph, VertexSet};
use crate::modular::{connected_coconnected_modules, is_mesh, modular_partition, unique_i_module, NodeKind};
use crate::pmc::{
    deduce_social, deduce_solitary, is_pmc_fast, is_separator_full_component, lift_through, prefix_graphs,
    recover_from_components, recover_from_union, split_components,
};
use crate::toolbox::{biranking_select, neighborhood_decomposition, QuasiOrderPair};

/// Size of the vertex sets guessed to cover a separator.
pub const COVER_SIZE: usize = 6;

/// A component together with separator vertices complete to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FuzzyComponent {
    pub core: VertexSet,
    pub halo: VertexSet,
    pub union: VertexSet,
}

impl FuzzyComponent {
    pub fn new(g: &Graph, core: VertexSet, union: VertexSet) -> Result<Self> {
        if core.is_empty() || !core.is_subset(&union) {
            return Err(Error::PreconditionViolated("core must be a nonempty subset of the union".into()));
        }
        let halo = union - core;
        if !g.complete_to(&halo, &core) {
            return Err(Error::PreconditionViolated("halo vertex not complete to the core".into()));
        }
        Ok(FuzzyComponent { core, halo, union })
    }
}

fn add_components(out: &mut SetFamily, g: &Graph, removed: &VertexSet, tag: &'static str) {
    for c in components(g, removed) {
        out.insert(c, tag);
    }
}

/// Distinct values of N[A] over A drawn from `pool` with |A| <= k; includes the empty set.
pub fn nbhd_unions(g: &Graph, k: usize, pool: &VertexSet) -> Vec<VertexSet> {
    let mut seen: FastSet<VertexSet> = FastSet::default();
    let mut out = vec![VertexSet::new()];
    seen.insert(VertexSet::new());
    let mut frontier = out.clone();
    for _ in 0..k {
        let mut next = Vec::new();
        for u in &frontier {
            for v in (*pool & g.vertices()).iter() {
                let w = *u | g.neighbors(v).with(v);
                if seen.insert(w) {
                    next.push(w);
                }
            }
        }
        out.extend(next.iter().copied());
        frontier = next;
    }
    out
}

fn closed(g: &Graph, v: usize) -> VertexSet {
    g.neighbors(v).with(v)
}

/// Proj(u, N[A]) over |A| <= 6 and u outside N[A].
pub fn hidden_separators(g: &Graph) -> SetFamily {
    let mut out = SetFamily::new();
    for u in nbhd_unions(g, COVER_SIZE, &g.vertices()) {
        for c in components(g, &u) {
            out.insert(g.open_nbhd(&c), "hidden-separator");
        }
    }
    out
}

/// Hidden separator candidates and the components they leave.
pub fn hidden_families(g: &Graph) -> (SetFamily, SetFamily) {
    let s = hidden_separators(g);
    let mut f = SetFamily::new();
    for sep in &s {
        add_components(&mut f, g, sep, "hidden");
    }
    (s, f)
}

/// Components of G - Omega whose neighbourhood is not contained in another one's.
pub fn maxnei(g: &Graph, omega: &VertexSet) -> Vec<VertexSet> {
    let comps = components(g, omega);
    let nbs: Vec<VertexSet> = comps.iter().map(|c| g.open_nbhd(c)).collect();
    (0..comps.len())
        .filter(|&i| (0..comps.len()).all(|j| j == i || !nbs[i].is_subset(&nbs[j])))
        .map(|i| comps[i])
        .collect()
}

/// Every component of G - Proj(s, N[A]), |A| <= 6.
pub fn family_two_not_whole(g: &Graph) -> SetFamily {
    let mut out = SetFamily::new();
    for z in &hidden_separators(g) {
        add_components(&mut out, g, z, "two-not-whole");
    }
    out
}

/// The two-not-whole family plus components of G - (Proj(v3, N[A]) + N[v2]).
pub fn family_one_in_three(g: &Graph) -> SetFamily {
    let proj = hidden_separators(g);
    let mut out = SetFamily::new();
    let mut seen: FastSet<VertexSet> = FastSet::default();
    for z in &proj {
        for v2 in g.vertices().iter() {
            let zz = *z | closed(g, v2);
            if seen.insert(zz) {
                add_components(&mut out, g, &zz, "one-in-three");
            }
        }
    }
    for z in &proj {
        add_components(&mut out, g, z, "two-not-whole");
    }
    out
}

/// Singletons plus the two reconstructions around Z = N[p, q] + N(D0), D0 in `x`.
pub fn family_nonmesh_sticking(g: &Graph, x: &SetFamily, budget: &Budget) -> Result<SetFamily> {
    let mut out = SetFamily::new();
    for v in g.vertices().iter() {
        out.insert(VertexSet::singleton(v), "sticking:singleton");
    }
    let vs = g.vertices().to_vec();
    let mut zs: FastSet<VertexSet> = FastSet::default();
    let mut cuts: FastSet<VertexSet> = FastSet::default();
    for d0 in x {
        let nd0 = g.open_nbhd(d0);
        for (i, &p) in vs.iter().enumerate() {
            if d0.contains(p) {
                continue;
            }
            for &q in &vs[i + 1..] {
                if d0.contains(q) {
                    continue;
                }
                let z = closed(g, p) | closed(g, q) | nd0;
                if !zs.insert(z) {
                    continue;
                }
                budget.tick(g.order() as u64)?;
                let comps = components(g, &z);
                for c in &comps {
                    let proj = g.open_nbhd(c);
                    if cuts.insert(proj) {
                        add_components(&mut out, g, &proj, "sticking:projection");
                    }
                }
                for s in z.iter() {
                    let mut nb = VertexSet::new();
                    let mut inside = VertexSet::new();
                    for c in comps.iter().filter(|c| g.open_nbhd(c).contains(s)) {
                        nb |= g.open_nbhd(c);
                        inside |= *c;
                    }
                    let omega = nb | (closed(g, s) - inside);
                    if cuts.insert(omega) {
                        add_components(&mut out, g, &omega, "sticking:reconstruction");
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Connected co-connected modules of G - N[p, q] over all pairs.
pub fn family_nonmesh_pair(g: &Graph) -> SetFamily {
    let mut out = SetFamily::new();
    for z in nbhd_unions(g, 2, &g.vertices()) {
        if z.is_empty() {
            continue;
        }
        let h = g.remove(&z);
        for m in connected_coconnected_modules(&h) {
            out.insert(m, "nonmesh-pair");
        }
    }
    out
}

fn pair_nbhds(g: &Graph) -> Vec<VertexSet> {
    nbhd_unions(g, 2, &g.vertices()).into_iter().filter(|z| !z.is_empty()).collect()
}

/// N[p1, q1] - N[p2, q2] over all 4-tuples.
pub fn family_mesh_fuzzy_nonmesh(g: &Graph) -> SetFamily {
    let pairs = pair_nbhds(g);
    let mut out = SetFamily::new();
    for a in &pairs {
        for b in &pairs {
            let d = *a - *b;
            if !d.is_empty() {
                out.insert(d, "mesh-fuzzy-nonmesh");
            }
        }
    }
    out
}

/// N[p, q] - (N(D0) + N(s)) over D0 in `x` and p, q, s outside D0.
pub fn family_mesh_fuzzy_sticking(g: &Graph, x: &SetFamily) -> SetFamily {
    let mut out = SetFamily::new();
    let vs = g.vertices().to_vec();
    for d0 in x {
        let nd0 = g.open_nbhd(d0);
        let mut pqs: FastSet<VertexSet> = FastSet::default();
        for (i, &p) in vs.iter().enumerate() {
            for &q in &vs[i..] {
                if !d0.contains(p) && !d0.contains(q) {
                    pqs.insert(closed(g, p) | closed(g, q));
                }
            }
        }
        let mut cuts: FastSet<VertexSet> = FastSet::default();
        for s in (g.vertices() - *d0).iter() {
            cuts.insert(nd0 | g.neighbors(s));
        }
        for pq in &pqs {
            for cut in &cuts {
                let d = *pq - *cut;
                if !d.is_empty() {
                    out.insert(d, "mesh-fuzzy-sticking");
                }
            }
        }
    }
    out
}

/// A vertex w of the mesh D and another component D' with J inside N(w) + N(D').
pub fn cover_tricky_select(
    g: &Graph,
    indep: &VertexSet,
    omega: &VertexSet,
    d: &VertexSet,
    p: usize,
    q: usize,
    j: &VertexSet,
) -> Result<(usize, VertexSet)> {
    if !is_pmc_fast(g, omega) || omega.intersects(indep) {
        return Err(Error::PreconditionViolated("omega must be an independent-set-free PMC".into()));
    }
    let comps = components(g, omega);
    if !comps.contains(d) {
        return Err(Error::PreconditionViolated("d must be a component of G - omega".into()));
    }
    let part = modular_partition(g, d).map_err(|_| Error::NotAMesh)?;
    if part.kind != NodeKind::Clique {
        return Err(Error::NotAMesh);
    }
    let m_p = unique_i_module(g, d, indep)?;
    if m_p.is_none_or_missing(p) {
        return Err(Error::PreconditionViolated("p must lie in the module meeting the independent set".into()));
    }
    let tricky = neighborhood_decomposition(g, d, p, q)?.tricky;
    if j.is_empty() || !j.is_subset(&tricky) || !g.is_independent(j) {
        return Err(Error::PreconditionViolated("j must be a nonempty independent set of tricky vertices".into()));
    }
    let others: Vec<VertexSet> = comps.into_iter().filter(|c| c != d).collect();
    let x_of = |u: usize| -> Vec<bool> { part.modules.iter().map(|m| g.neighbors(u).intersects(m)).collect() };
    let y_of = |u: usize| -> Vec<bool> { others.iter().map(|c| g.open_nbhd(c).contains(u)).collect() };
    let sub = |a: &[bool], b: &[bool]| a.iter().zip(b).all(|(x, y)| !*x || *y);
    let qo = QuasiOrderPair::from_fns(j.to_vec(), |a, b| sub(&x_of(a), &x_of(b)), |a, b| sub(&y_of(a), &y_of(b)));
    let u = biranking_select(&qo)?;
    let w = (g.neighbors(u) & *d)
        .first()
        .ok_or_else(|| Error::WitnessNotFound("selected vertex has no neighbour in d".into()))?;
    let d_prime = others
        .iter()
        .find(|c| g.open_nbhd(c).contains(u))
        .copied()
        .ok_or_else(|| Error::WitnessNotFound("selected vertex sees no other component".into()))?;
    if !j.is_subset(&(g.neighbors(w) | g.open_nbhd(&d_prime))) {
        return Err(Error::WitnessNotFound("cover misses a vertex of j".into()));
    }
    Ok((w, d_prime))
}

trait ModuleCheck {
    fn is_none_or_missing(&self, v: usize) -> bool;
}

impl ModuleCheck for Option<VertexSet> {
    fn is_none_or_missing(&self, v: usize) -> bool {
        self.map_or(true, |m| !m.contains(v))
    }
}

/// Candidate components of G - Omega when all but one of them are in `x`.
/// With `indep` given, the guessed vertex of the independent set is drawn from it.
pub fn family_all_but_one(g: &Graph, indep: Option<&VertexSet>, x: &SetFamily, budget: &Budget) -> Result<SetFamily> {
    let mut out = SetFamily::new();
    out.extend(x);
    for u in g.vertices().iter() {
        add_components(&mut out, g, &g.neighbors(u), "all-but-one:neighbourhood");
    }
    out.extend(&family_nonmesh_sticking(g, x, budget)?);
    let pool = indep.copied().unwrap_or_else(|| g.vertices());
    let raw: Vec<VertexSet> = x.iter().copied().collect();
    for s in g.vertices().iter() {
        let order = g.neighbors(s).to_vec();
        let graphs = prefix_graphs(g, &order);
        let mut removed = VertexSet::new();
        for k in 0..order.len() {
            let gk = &graphs[k];
            let v = order[k];
            let xk: Vec<VertexSet> =
                split_components(g, &raw, &removed).into_iter().filter(|d| is_separator_full_component(gk, d)).collect();
            budget.tick((xk.len() + 1) as u64)?;
            let mut ctx = AllButOneStep { g, graphs: &graphs, order: &order, k, tried: FastSet::default(), out: &mut out };
            ctx.lifted_cases(&xk, v, budget)?;
            ctx.three_set_case(&xk, v, s, &pool, x, budget)?;
            removed.insert(v);
        }
    }
    Ok(out)
}

struct AllButOneStep<'a> {
    g: &'a Graph,
    graphs: &'a [Graph],
    order: &'a [usize],
    k: usize,
    tried: FastSet<VertexSet>,
    out: &'a mut SetFamily,
}

impl AllButOneStep<'_> {
    fn lift(&mut self, omega_k: VertexSet, tag: &'static str, budget: &Budget) -> Result<()> {
        if !self.tried.insert(omega_k) {
            return Ok(());
        }
        budget.tick(1 + self.k as u64)?;
        if is_pmc_fast(&self.graphs[self.k], &omega_k) {
            let omega = lift_through(self.graphs, self.order, self.k, omega_k)?;
            add_components(self.out, self.g, &omega, tag);
        }
        Ok(())
    }

    // A removed vertex of Omega, and the social and solitary deductions.
    fn lifted_cases(&mut self, xk: &[VertexSet], v: usize, budget: &Budget) -> Result<()> {
        let gk = &self.graphs[self.k];
        let nbs: Vec<VertexSet> = xk.iter().map(|d| gk.open_nbhd(d)).collect();
        for (i, d0) in xk.iter().enumerate() {
            if !d0.contains(v) {
                self.lift(nbs[i].with(v), "all-but-one:vertex-in-omega", budget)?;
            }
        }
        for (i0, d0) in xk.iter().enumerate() {
            if !d0.contains(v) {
                continue;
            }
            let n0 = nbs[i0];
            for t1 in n0.iter() {
                self.lift(deduce_solitary(gk, t1, d0), "all-but-one:solitary", budget)?;
            }
            let far0 = gk.closed_nbhd(d0);
            let others: Vec<usize> = (0..xk.len()).filter(|&i| xk[i].is_disjoint(&far0)).collect();
            for t1 in n0.iter() {
                for t2 in n0.iter().filter(|&t2| t2 > t1 && !gk.has_edge(t1, t2)) {
                    for &i1 in &others {
                        if !nbs[i1].contains(t1) || nbs[i1].contains(t2) {
                            continue;
                        }
                        let far1 = gk.closed_nbhd(&xk[i1]);
                        for &i2 in &others {
                            if !nbs[i2].contains(t2) || nbs[i2].contains(t1) || xk[i2].intersects(&far1) {
                                continue;
                            }
                            let omega_k = deduce_social(gk, d0, &xk[i1], &xk[i2], t1, t2);
                            if omega_k.intersects(&(*d0 | xk[i1] | xk[i2])) {
                                continue;
                            }
                            self.lift(omega_k, "all-but-one:social", budget)?;
                        }
                    }
                }
            }
        }
        Ok(())
    }

    // The case with t1 outside N(D) and t2 inside it.
    fn three_set_case(
        &mut self,
        xk: &[VertexSet],
        v: usize,
        s: usize,
        pool: &VertexSet,
        x: &SetFamily,
        budget: &Budget,
    ) -> Result<()> {
        let gk = &self.graphs[self.k];
        let nk = |u: usize| gk.neighbors(u).with(u);
        let mut ys: FastSet<VertexSet> = FastSet::default();
        let mut y_list = Vec::new();
        let push = |y: VertexSet, ys: &mut FastSet<VertexSet>, y_list: &mut Vec<VertexSet>| {
            if ys.insert(y) {
                y_list.push(y);
            }
        };
        let hitters = hitter_sets(self.g, x);
        for (i0, d0) in xk.iter().enumerate() {
            if !d0.contains(v) {
                continue;
            }
            let nd0 = gk.open_nbhd(d0);
            for t1 in nd0.iter() {
                add_components(self.out, gk, &(gk.neighbors(t1) | nd0), "all-but-one:three-set");
            }
            let cand = gk.vertices() - gk.closed_nbhd(d0) - closed(self.g, s);
            let mut pq: FastSet<VertexSet> = FastSet::default();
            for p in (cand & *pool).iter() {
                for q in (gk.neighbors(p) & cand).iter() {
                    pq.insert(nk(p) | nk(q));
                }
            }
            let mut bases: FastSet<VertexSet> = FastSet::default();
            for t2 in nd0.iter() {
                for r in (gk.neighbors(t2) & cand).iter() {
                    for b in &pq {
                        bases.insert(*b | nk(r) | nk(t2) | nd0);
                    }
                }
            }
            let extra: Vec<VertexSet> = (0..xk.len())
                .filter(|&i| i != i0 && xk[i].is_disjoint(&gk.closed_nbhd(d0)))
                .map(|i| gk.open_nbhd(&xk[i]))
                .collect();
            let mut xs: FastSet<VertexSet> = FastSet::default();
            for b in &bases {
                xs.insert(*b);
                for m0 in cand.iter() {
                    let bm = *b | nk(m0);
                    for e in &extra {
                        xs.insert(bm | *e);
                    }
                }
            }
            budget.tick(xs.len() as u64)?;
            for xx in &xs {
                push(*xx - *d0, &mut ys, &mut y_list);
                for w in unions_of_hit_components(gk, xx, &hitters) {
                    push((*xx | w) - *d0, &mut ys, &mut y_list);
                }
            }
        }
        let yfam = SetFamily::from_sets(y_list, "Y");
        let mut seen: FastSet<VertexSet> = FastSet::default();
        for omega_k in &recover_from_union(gk, &yfam) {
            if seen.insert(*omega_k) {
                budget.tick(1)?;
                if is_pmc_fast(gk, omega_k) {
                    add_components(self.out, gk, omega_k, "all-but-one:recovered-union");
                }
            }
        }
        Ok(())
    }
}

fn hitter_sets(g: &Graph, x: &SetFamily) -> Vec<VertexSet> {
    let mut seen: FastSet<VertexSet> = FastSet::default();
    let mut ws = Vec::new();
    for w in g.vertices().iter() {
        if seen.insert(g.neighbors(w)) {
            ws.push(g.neighbors(w));
        }
    }
    let mut ds = Vec::new();
    let mut seen_d: FastSet<VertexSet> = FastSet::default();
    for d in x {
        let nd = g.open_nbhd(d);
        if seen_d.insert(nd) {
            ds.push(nd);
        }
    }
    let mut out: FastSet<VertexSet> = FastSet::default();
    for a in &ws {
        for b in &ds {
            out.insert(*a | *b);
        }
    }
    out.into_iter().collect()
}

// Unions of those components of G - X that meet a hitter set, one per hitter.
// When G - X has few components every union of components is returned instead,
// which is a superset of the hitter-driven unions.
fn unions_of_hit_components(g: &Graph, x: &VertexSet, hitters: &[VertexSet]) -> Vec<VertexSet> {
    let comps = components(g, x);
    let mut seen: FastSet<VertexSet> = FastSet::default();
    if comps.is_empty() {
        return vec![];
    }
    if comps.len() <= 4 && (1usize << comps.len()) <= hitters.len() {
        for mask in 1u32..(1 << comps.len()) {
            let w = (0..comps.len()).filter(|&i| mask >> i & 1 == 1).fold(VertexSet::new(), |a, i| a | comps[i]);
            seen.insert(w);
        }
    } else {
        for h in hitters {
            let w = comps.iter().filter(|c| c.intersects(h)).fold(VertexSet::new(), |a, c| a | *c);
            if !w.is_empty() {
                seen.insert(w);
            }
        }
    }
    seen.into_iter().collect()
}

fn triple_nbhds(g: &Graph, pool: &VertexSet) -> Vec<VertexSet> {
    let pairs = nbhd_unions(g, 2, &g.vertices());
    let mut seen: FastSet<VertexSet> = FastSet::default();
    let mut out = Vec::new();
    for p in (*pool & g.vertices()).iter() {
        for b in &pairs {
            let t = *b | closed(g, p);
            if seen.insert(t) {
                out.push(t);
            }
        }
    }
    out
}

/// The two-not-whole family together with the sets built from guessed covers of two mesh components.
pub fn family_merged_meshes(g: &Graph, indep: Option<&VertexSet>) -> SetFamily {
    let mut out = family_two_not_whole(g);
    if g.order() < 2 {
        return out;
    }
    let pool = indep.copied().unwrap_or_else(|| g.vertices());
    let triples = triple_nbhds(g, &pool);
    let st = pair_nbhds(g);
    let all = g.vertices();
    let mut ws: FastSet<VertexSet> = FastSet::default();
    let mut xs: FastSet<VertexSet> = FastSet::default();
    for t1 in &triples {
        for t2 in &triples {
            let xx = *t1 | *t2;
            out.insert(xx, "merged-meshes:six");
            if xs.insert(xx) {
                for v in all.iter() {
                    out.insert(xx | closed(g, v), "merged-meshes:seven");
                }
            }
            let base = g.open_nbhd(&(all - xx)) | *t2;
            if ws.insert(base) {
                add_components(&mut out, g, &base, "merged-meshes:w");
            }
            for e in &st {
                let w2 = base | *e;
                if ws.insert(w2) {
                    add_components(&mut out, g, &w2, "merged-meshes:w-prime");
                }
            }
        }
    }
    out
}

/// The capture families behind branching PMCs.
pub struct Summary {
    /// One-in-three family with its sticking closure and the merged-mesh family.
    pub base: SetFamily,
    /// PMC candidates recovered from `base` and from its all-but-one closure.
    pub pmcs: SetFamily,
    /// Fuzzy mesh components seen from `base`.
    pub fuzzy: SetFamily,
}

impl Summary {
    /// Whether (Omega + D1 + D2, D1+, D2+) is among the implicit triples.
    pub fn contains_triple(&self, merged: &VertexSet, d1_plus: &VertexSet, d2_plus: &VertexSet) -> bool {
        self.base.contains(merged) && self.fuzzy.contains(d1_plus) && self.fuzzy.contains(d2_plus)
    }

    pub fn triple_count(&self) -> usize {
        self.base.len() * self.fuzzy.len() * self.fuzzy.len()
    }
}

pub fn family_summary(g: &Graph, indep: Option<&VertexSet>, budget: &Budget) -> Result<Summary> {
    let one_in_three = family_one_in_three(g);
    let mut base = one_in_three.clone();
    base.extend(&family_nonmesh_sticking(g, &one_in_three, budget)?);
    base.extend(&family_merged_meshes(g, indep));
    let mut pmcs = recover_from_components(g, &base, budget)?;
    let all_but_one = family_all_but_one(g, indep, &base, budget)?;
    pmcs.extend(&recover_from_components(g, &all_but_one, budget)?);
    let fuzzy = family_mesh_fuzzy_sticking(g, &base);
    Ok(Summary { base, pmcs, fuzzy })
}

/// Whether `d` is a mesh component, treating single vertices as non-meshes.
pub fn is_mesh_component(g: &Graph, d: &VertexSet) -> bool {
    d.len() >= 2 && is_mesh(g, d)
}

/// Components of G[scope] as a family.
pub fn component_family(g: &Graph, scope: &VertexSet, tag: &'static str) -> SetFamily {
    SetFamily::from_sets(components_within(g, scope), tag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::set;
    use crate::pmc::{enumerate_all_pmcs_exhaustive, PMC_GUARD};

    fn claw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])
    }

    #[test]
    fn f1_on_claw_captures_a_leaf() {
        let two_not_whole = family_two_not_whole(&claw());
        assert!(two_not_whole.contains(&set(&[2])) || two_not_whole.contains(&set(&[3])));
        let empty = family_two_not_whole(&Graph::new(3));
        assert!(empty.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn f1_claim_on_p5() {
        let g = Graph::path(5);
        let two_not_whole = family_two_not_whole(&g);
        for omega in enumerate_all_pmcs_exhaustive(&g, PMC_GUARD).unwrap().iter() {
            let comps = components(&g, omega);
            for i in 0..comps.len() {
                for j in i + 1..comps.len() {
                    let cover = g.open_nbhd(&comps[i]) | g.open_nbhd(&comps[j]);
                    if cover != *omega {
                        assert!(two_not_whole.contains(&comps[i]) || two_not_whole.contains(&comps[j]));
                    }
                }
            }
        }
    }

    #[test]
    fn f2_handles_star() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let one_in_three = family_one_in_three(&g);
        let hits = [1, 2, 3, 4].iter().filter(|&&v| one_in_three.contains(&set(&[v]))).count();
        assert!(hits >= 2);
        assert!(family_one_in_three(&Graph::new(0)).is_empty());
    }

    #[test]
    fn f3_contains_singletons() {
        let g = Graph::path(5);
        let sticking = family_nonmesh_sticking(&g, &SetFamily::new(), &Budget::unlimited()).unwrap();
        assert_eq!(sticking.len(), 5);
        let x = SetFamily::from_sets([set(&[0])], "x");
        let sticking = family_nonmesh_sticking(&g, &x, &Budget::unlimited()).unwrap();
        assert!(sticking.contains(&set(&[2, 3, 4])));
    }

    #[test]
    fn fuzzy_families() {
        assert_eq!(family_nonmesh_pair(&Graph::new(1)).len(), 0);
        let c4_pendant = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]);
        let mesh_fuzzy = family_mesh_fuzzy_nonmesh(&c4_pendant);
        assert!(mesh_fuzzy.iter().all(|s| !s.is_empty()));
        assert!(family_mesh_fuzzy_sticking(&c4_pendant, &SetFamily::new()).is_empty());
        let fc = FuzzyComponent::new(&c4_pendant, set(&[1]), set(&[0, 1, 2])).unwrap();
        assert_eq!(fc.halo, set(&[0, 2]));
        assert!(FuzzyComponent::new(&c4_pendant, set(&[1, 2, 3]), set(&[0, 1, 2, 3])).is_err());
        assert!(FuzzyComponent::new(&c4_pendant, set(&[1, 2]), set(&[1, 2, 4])).is_err());
    }

    #[test]
    fn hidden_star_center() {
        let (s, f) = hidden_families(&claw());
        assert!(s.contains(&set(&[0])));
        assert!(f.contains(&set(&[1])));
        let (s, _) = hidden_families(&Graph::complete(4));
        assert!(s.iter().all(|x| x.is_empty()));
    }

    #[test]
    fn maxnei_examples() {
        let g = claw();
        assert!(maxnei(&g, &set(&[0])).is_empty());
        assert_eq!(maxnei(&Graph::path(3), &set(&[1])).len(), 0);
        assert_eq!(maxnei(&Graph::path(4), &set(&[1, 2])).len(), 2);
    }

    #[test]
    fn cover_tricky_single_vertex() {
        // Mesh D = {2, 3} (an edge), PMC {0, 1, 4}, tricky vertex set J = {1}.
        let g = Graph::from_edges(
            6,
            &[(2, 3), (0, 2), (0, 3), (1, 3), (4, 2), (4, 3), (0, 5), (1, 5), (4, 5), (0, 1)],
        );
        let omega = set(&[0, 1, 4]);
        if is_pmc_fast(&g, &omega) {
            let r = cover_tricky_select(&g, &set(&[2, 5]), &omega, &set(&[2, 3]), 2, 3, &set(&[1]));
            assert!(r.is_err() || r.unwrap().0 == 3);
        }
    }

    #[test]
    fn monster_keeps_input() {
        let g = Graph::path(4);
        let x = SetFamily::from_sets([set(&[0])], "x");
        let all_but_one = family_all_but_one(&g, None, &x, &Budget::unlimited()).unwrap();
        assert!(all_but_one.contains(&set(&[0])));
        assert!(all_but_one.contains(&set(&[2, 3])));
    }

    #[test]
    fn omplus_small() {
        assert!(family_merged_meshes(&Graph::new(1), None).iter().all(|s| s.len() <= 1));
        let c4 = Graph::cycle(4);
        let merged = family_merged_meshes(&c4, None);
        assert!(merged.contains(&c4.vertices()));
    }
}
