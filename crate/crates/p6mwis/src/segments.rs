use crate::capture::{
    family_mesh_fuzzy_nonmesh, family_all_but_one, family_nonmesh_pair, family_merged_meshes, family_one_in_three,
    is_mesh_component,
};
use crate::chordal::{
    add_edges, clique_tree, force_separators_completion, is_chordal_fast, is_minimal_completion, maximal_cliques_chordal,
    minimal_completion, Completion, Edge,
};
use crate::error::{Error, Result};
use crate::family::{Budget, FastMap, FastSet, SetFamily};
use crate::graph::{components, is_minimal_separator_fast, Graph, VertexSet};
use crate::modular::{modular_partition, NodeKind};
use crate::pmc::recover_from_components;
use std::collections::BTreeSet;

/// A potential segment with its interior, torso and closure edges.
#[derive(Clone, Debug)]
pub struct Segment {
    pub gamma: VertexSet,
    pub interior: VertexSet,
    pub torso: Graph,
    pub closure_edges: Vec<Edge>,
}

/// N(V - N[A]): the part of N[A] seen from outside.
pub fn boundary(g: &Graph, a: &VertexSet) -> VertexSet {
    g.open_nbhd(&(g.vertices() - g.closed_nbhd(a)))
}

pub fn interior(g: &Graph, gamma: &VertexSet) -> VertexSet {
    g.vertices() - g.closed_nbhd(&(g.vertices() - *gamma))
}

/// G[gamma] with the neighbourhood of every outside component turned into a clique.
pub fn torso(g: &Graph, gamma: &VertexSet) -> (Graph, Vec<Edge>) {
    let mut t = g.induced(gamma);
    let mut cl = BTreeSet::new();
    for c in components(g, gamma) {
        let nb = g.open_nbhd(&c).to_vec();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if !t.has_edge(nb[i], nb[j]) {
                    t.add_edge(nb[i], nb[j]);
                    cl.insert((nb[i], nb[j]));
                }
            }
        }
    }
    (t, cl.into_iter().collect())
}

pub fn segment(g: &Graph, gamma: &VertexSet) -> Option<Segment> {
    if gamma.is_empty() || !gamma.is_subset(&g.vertices()) {
        return None;
    }
    if components(g, gamma).iter().any(|c| !is_minimal_separator_fast(g, &g.open_nbhd(c))) {
        return None;
    }
    let (torso, closure_edges) = torso(g, gamma);
    Some(Segment { gamma: *gamma, interior: interior(g, gamma), torso, closure_edges })
}

/// Whether every fill edge leaving an outside component D ends in N[D].
pub fn respects(g: &Graph, fill: &[Edge], seg: &Segment) -> bool {
    let comps = components(g, &seg.gamma);
    fill.iter().all(|&(a, b)| {
        comps.iter().all(|c| {
            let nd = g.closed_nbhd(c);
            !(c.contains(a) && !nd.contains(b) || c.contains(b) && !nd.contains(a))
        })
    })
}

/// F with the edges inside gamma replaced by closure edges plus `inner`.
pub fn substitute(g: &Graph, f: &Completion, seg: &Segment, inner: &Completion) -> Result<Completion> {
    if !respects(g, &f.fill, seg) {
        return Err(Error::NotRespecting);
    }
    let inside = |&(a, b): &Edge| seg.gamma.contains(a) && seg.gamma.contains(b);
    let mut fill: BTreeSet<Edge> = f.fill.iter().copied().filter(|e| !inside(e)).collect();
    fill.extend(seg.closure_edges.iter().copied());
    fill.extend(inner.fill.iter().copied());
    let fill: Vec<Edge> = fill.into_iter().collect();
    let minimal = is_minimal_completion(g, &fill);
    Ok(Completion { fill, minimal, avoids: None })
}

/// Maximal cliques of a minimal completion of the torso, optionally keeping `avoid` simplicial.
pub fn torso_cliques(seg: &Segment, avoid: Option<usize>) -> Result<Vec<VertexSet>> {
    let c = minimal_completion(&seg.torso, avoid);
    maximal_cliques_chordal(&c.apply(&seg.torso))
}

/// For every u, the maximal cliques of a u-free minimal completion of torso(N[u]).
pub fn closed_nbhd_cliques(g: &Graph) -> Result<SetFamily> {
    let mut out = SetFamily::new();
    for u in g.vertices().iter() {
        let gamma = g.neighbors(u).with(u);
        let (t, closure_edges) = torso(g, &gamma);
        let seg = Segment { gamma, interior: interior(g, &gamma), torso: t, closure_edges };
        for k in torso_cliques(&seg, Some(u))? {
            out.insert(k, "closed-nbhd-cliques");
        }
    }
    Ok(out)
}

/// Separator of a completion closest to the module of a mesh component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Footprint {
    pub sep: VertexSet,
    pub bag: VertexSet,
    pub module: VertexSet,
    pub anchor: usize,
    /// D(S') over the candidate separators, largest first.
    pub chain: Vec<VertexSet>,
}

pub fn mesh_footprint(g: &Graph, h: &Graph, s: &VertexSet, d: &VertexSet) -> Result<Footprint> {
    if !is_chordal_fast(h) || g.edges().iter().any(|&(a, b)| !h.has_edge(a, b)) {
        return Err(Error::PreconditionViolated("h must be a chordal supergraph of g".into()));
    }
    if !is_minimal_separator_fast(h, s) {
        return Err(Error::PreconditionViolated("s must be a minimal separator of h".into()));
    }
    let full = d.first().map_or(false, |v| g.component_of(v, &(g.vertices() - *s)) == *d) && g.open_nbhd(d) == *s;
    if !full || !is_mesh_component(g, d) {
        return Err(Error::PreconditionViolated("d must be a full mesh component of g - s".into()));
    }
    let part = modular_partition(g, d)?;
    let tree = clique_tree(h)?;
    let nd = g.closed_nbhd(d);
    let mut seps: Vec<VertexSet> = tree.adhesions.clone();
    seps.sort();
    seps.dedup();
    let mut cands: Vec<(VertexSet, VertexSet)> = seps
        .into_iter()
        .filter(|t| t.is_subset(&nd) && !(t.is_subset(s) && t != s))
        .map(|t| (t, *d - t))
        .filter(|(_, rest)| !part.modules.iter().any(|m| rest.is_subset(m)))
        .collect();
    if !cands.iter().any(|(t, _)| t == s) {
        return Err(Error::ClaimViolated("s is missing from the mesh-direction separators".into()));
    }
    cands.sort_by_key(|(_, rest)| std::cmp::Reverse(rest.len()));
    for w in cands.windows(2) {
        if !w[1].1.is_subset(&w[0].1) {
            return Err(Error::ClaimViolated("mesh-direction components are not nested".into()));
        }
    }
    let (sep, side) = *cands.last().unwrap();
    if g.component_of(side.first().unwrap(), &(g.vertices() - sep)) != side {
        return Err(Error::ClaimViolated("D - S' is not a component".into()));
    }
    let within = sep | side;
    let bag = tree
        .bags
        .iter()
        .copied()
        .find(|b| sep.is_subset(b) && b.is_subset(&within) && b.intersects(&side))
        .ok_or_else(|| Error::ClaimViolated("no bag extends the separator into its component".into()))?;
    let mut module = None;
    for c in components(g, &bag) {
        if g.open_nbhd(&c).is_subset(&sep) {
            continue;
        }
        let m = part.modules.iter().copied().find(|m| c.is_subset(m));
        match (m, module) {
            (None, _) => return Err(Error::ClaimViolated("component leaves every module".into())),
            (Some(m), Some(prev)) if m != prev => {
                return Err(Error::ClaimViolated("components lie in two modules".into()))
            }
            (Some(m), _) => module = Some(m),
        }
    }
    let module = match module {
        Some(m) => m,
        None => part.modules.iter().copied().find(|m| m.intersects(&side)).unwrap(),
    };
    let anchor = (side - module).first().ok_or_else(|| Error::ClaimViolated("no vertex outside the module".into()))?;
    let a = (module & side).with(anchor);
    if boundary(g, &a) != sep {
        return Err(Error::ClaimViolated("separator differs from the boundary of its footprint".into()));
    }
    let chain = cands.into_iter().map(|(_, r)| r).collect();
    Ok(Footprint { sep, bag, module, anchor, chain })
}

/// Replaces the completion inside S + S_FD so that the boundary of M + q becomes a separator.
pub fn footprint_replacement(g: &Graph, f: &Completion, s: &VertexSet, fp: &Footprint) -> Result<Completion> {
    let gamma = *s | fp.sep;
    let seg = segment(g, &gamma).ok_or_else(|| Error::PreconditionViolated("S + S_FD is not a segment".into()))?;
    let target = boundary(g, &fp.module.with(fp.anchor));
    if !target.is_subset(&gamma) {
        return Err(Error::ClaimViolated("new separator leaves the segment".into()));
    }
    let inner = forced_torso_completion(g, &seg, &[target])?;
    substitute(g, f, &seg, &inner)
}

/// Completion of the torso keeping the given noncrossing separators of G inside gamma.
pub fn forced_torso_completion(g: &Graph, seg: &Segment, seps: &[VertexSet]) -> Result<Completion> {
    let mut all: Vec<VertexSet> = seps.to_vec();
    for c in components(g, &seg.gamma) {
        let nb = g.open_nbhd(&c);
        if !all.contains(&nb) {
            all.push(nb);
        }
    }
    let whole = force_separators_completion(g, &all)?;
    let fill: Vec<Edge> = whole
        .fill
        .into_iter()
        .filter(|&(a, b)| seg.gamma.contains(a) && seg.gamma.contains(b) && !seg.torso.has_edge(a, b))
        .collect();
    let minimal = is_minimal_completion(&seg.torso, &fill);
    Ok(Completion { fill, minimal, avoids: None })
}

/// Two anticomplete connected sets around a separator with two mesh sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SplitPair {
    pub z1: VertexSet,
    pub z2: VertexSet,
    pub tuple: [usize; 6],
}

fn core_module(g: &Graph, scope: &VertexSet, p: usize, cache: &mut FastMap<VertexSet, Option<Vec<VertexSet>>>) -> VertexSet {
    let mods = cache.entry(*scope).or_insert_with(|| match modular_partition(g, scope) {
        Ok(part) if part.kind == NodeKind::Clique => Some(part.modules),
        _ => None,
    });
    match mods {
        Some(ms) => ms.iter().copied().find(|m| m.contains(p)).unwrap_or(*scope),
        None => *scope,
    }
}

/// Pairs (Z1, Z2) over 6-tuples of distinct vertices (p1, q1, r1, p2, q2, r2).
pub fn split_pairs(g: &Graph) -> Vec<SplitPair> {
    let vs = g.vertices().to_vec();
    let all = g.vertices();
    let nk = |v: usize| g.neighbors(v).with(v);
    let mut triples: Vec<(VertexSet, usize, usize, usize)> = Vec::new();
    let mut seen_t: FastSet<(VertexSet, usize, usize)> = FastSet::default();
    for &p in &vs {
        for &q in &vs {
            for &r in &vs {
                if p == q || p == r || q == r {
                    continue;
                }
                let t = nk(p) | nk(q) | nk(r);
                if seen_t.insert((t, p, q)) {
                    triples.push((t, p, q, r));
                }
            }
        }
    }
    let mut cache = FastMap::default();
    let mut seen: FastSet<(VertexSet, VertexSet)> = FastSet::default();
    let mut out = Vec::new();
    for &(t1, p1, q1, r1) in &triples {
        let own1 = VertexSet::new().with(p1).with(q1).with(r1);
        for &(t2, p2, q2, r2) in &triples {
            let own2 = VertexSet::new().with(p2).with(q2).with(r2);
            if own1.intersects(&t2) || own2.intersects(&t1) {
                continue;
            }
            let rest = all - (t1 | t2);
            let o_s = (t1 & t2) | g.open_nbhd(&rest);
            let (x1, x2) = (t1 - o_s, t2 - o_s);
            if !x1.contains(p1) || !x2.contains(p2) {
                continue;
            }
            let n1 = core_module(g, &x1, p1, &mut cache);
            let n2 = core_module(g, &x2, p2, &mut cache);
            let z1 = g.component_of(p1, &(n1.with(q1) - g.closed_nbhd(&n2)));
            let z2 = g.component_of(p2, &(n2.with(q2) - g.closed_nbhd(&n1)));
            if !z1.contains(q1) || !z2.contains(q2) || z1.intersects(&g.closed_nbhd(&z2)) {
                continue;
            }
            if seen.insert((z1, z2)) {
                out.push(SplitPair { z1, z2, tuple: [p1, q1, r1, p2, q2, r2] });
            }
        }
    }
    out
}

/// Candidate minimal separators with the components they cut off.
pub struct SeparatorFamily {
    pub seps: SetFamily,
    pub comps: SetFamily,
}

pub fn separator_family(g: &Graph, indep: Option<&VertexSet>) -> Result<SeparatorFamily> {
    let mut raw = SetFamily::new();
    let nbhd_of = |fam: &SetFamily, tag: &'static str, raw: &mut SetFamily| {
        for d in fam {
            raw.insert(g.open_nbhd(d), tag);
        }
    };
    let merged = family_merged_meshes(g, indep);
    nbhd_of(&family_one_in_three(g), "sep:one-in-three", &mut raw);
    nbhd_of(&family_nonmesh_pair(g), "sep:nonmesh-pair", &mut raw);
    nbhd_of(&merged, "sep:merged-meshes", &mut raw);
    let outside = |gamma: &VertexSet, tag: &'static str, raw: &mut SetFamily| {
        for c in components(g, gamma) {
            raw.insert(g.open_nbhd(&c), tag);
        }
    };
    for gamma in &merged {
        outside(gamma, "sep:merged-meshes-segment", &mut raw);
    }
    for gamma in &closed_nbhd_cliques(g)? {
        outside(gamma, "sep:closed-nbhd-segment", &mut raw);
    }
    let mut anchors: FastSet<VertexSet> = FastSet::default();
    for d in &family_mesh_fuzzy_nonmesh(g) {
        if !is_mesh_component(g, d) {
            continue;
        }
        for m in modular_partition(g, d)?.modules {
            for q in (*d - m).iter() {
                anchors.insert(m.with(q));
            }
        }
    }
    for sp in split_pairs(g) {
        anchors.insert(sp.z1);
        anchors.insert(sp.z2);
    }
    let mut ring: FastSet<VertexSet> = FastSet::default();
    for a in &anchors {
        let na = g.closed_nbhd(a);
        if ring.insert(na) {
            outside(&na, "S:anchor", &mut raw);
        }
    }
    let mut seps = raw;
    seps.retain(|s| !s.is_empty() && is_minimal_separator_fast(g, s));
    let mut comps = SetFamily::new();
    for s in &seps {
        for c in components(g, s) {
            comps.insert(c, "separated");
        }
    }
    Ok(SeparatorFamily { seps, comps })
}

/// Candidate segments built from `seeds`, plus N[u] for every u.
pub fn segment_family(
    g: &Graph,
    indep: Option<&VertexSet>,
    seeds: &SetFamily,
    budget: &Budget,
) -> Result<SetFamily> {
    let mut out = recover_from_components(g, seeds, budget)?;
    let all_but_one = family_all_but_one(g, indep, seeds, budget)?;
    out.extend(&recover_from_components(g, &all_but_one, budget)?);
    let mut with_empty: Vec<VertexSet> = vec![VertexSet::new()];
    with_empty.extend(seeds.iter().copied());
    for d1 in &all_but_one {
        let nd1 = g.closed_nbhd(d1);
        for dg in with_empty.iter().filter(|dg| dg.is_subset(d1)) {
            let x = nd1 - *dg;
            if !x.is_empty() {
                out.insert(x, "segment:end");
            }
        }
    }
    for a in &family_merged_meshes(g, indep) {
        let inside: Vec<VertexSet> = with_empty.iter().copied().filter(|d| d.is_subset(a)).collect();
        budget.tick((inside.len() * inside.len()) as u64)?;
        for (i, d1) in inside.iter().enumerate() {
            let far1 = g.closed_nbhd(d1);
            for d2 in &inside[i..] {
                if !d2.is_disjoint(&far1) && !d2.is_empty() {
                    continue;
                }
                let x = *a - (*d1 | *d2);
                if !x.is_empty() {
                    out.insert(x, "segment:two-mesh");
                }
            }
        }
    }
    let quads = crate::capture::nbhd_unions(g, 4, &g.vertices());
    let mut pairs: FastSet<(VertexSet, VertexSet)> = FastSet::default();
    for (i, d1) in with_empty.iter().enumerate() {
        let far1 = g.closed_nbhd(d1);
        for d2 in &with_empty[i..] {
            if d2.is_empty() || d2.is_disjoint(&far1) {
                pairs.insert((*d1 | *d2, far1 | g.closed_nbhd(d2)));
            }
        }
    }
    budget.tick((quads.len() * pairs.len()) as u64)?;
    for q in quads.iter().filter(|q| !q.is_empty()) {
        for (ds, nds) in &pairs {
            let x = (*q | *nds) - *ds;
            if !x.is_empty() {
                out.insert(x, "segment:non-mesh");
            }
        }
    }
    for u in g.vertices().iter() {
        out.insert(g.neighbors(u).with(u), "segment:closed-nbhd");
    }
    Ok(out)
}

/// Maximal cliques of minimal completions of the torsos of valid segments in `x`.
pub fn segment_bags(g: &Graph, x: &SetFamily) -> Result<SetFamily> {
    let mut out = SetFamily::new();
    for gamma in x {
        let Some(seg) = segment(g, gamma) else { continue };
        if seg.interior.is_empty() {
            for k in torso_cliques(&seg, None)? {
                out.insert(k, "segment-bags");
            }
        } else {
            for u in seg.interior.iter() {
                for k in torso_cliques(&seg, Some(u))? {
                    out.insert(k, "segment-bags");
                }
            }
        }
    }
    Ok(out)
}

/// Whether the completion F of G makes every fill edge avoid `indep`.
pub fn is_free_of(fill: &[Edge], indep: &VertexSet) -> bool {
    fill.iter().all(|&(a, b)| !indep.contains(a) && !indep.contains(b))
}

/// Chordal supergraph G + F.
pub fn completed(g: &Graph, f: &Completion) -> Graph {
    add_edges(g, &f.fill)
}
