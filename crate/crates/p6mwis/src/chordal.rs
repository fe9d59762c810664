use crate::error::{Error, Result};
use crate::graph::{components, enumerate_minimal_separators_exhaustive, is_minimal_separator_fast, Graph, VertexSet};
use std::collections::BTreeSet;

pub type Edge = (usize, usize);

fn norm(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

/// Fill edges making a graph chordal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub fill: Vec<Edge>,
    pub minimal: bool,
    pub avoids: Option<usize>,
}

impl Completion {
    pub fn apply(&self, g: &Graph) -> Graph {
        add_edges(g, &self.fill)
    }
}

pub fn add_edges(g: &Graph, edges: &[Edge]) -> Graph {
    let mut h = g.clone();
    for &(u, v) in edges {
        h.add_edge(u, v);
    }
    h
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<Edge>,
    pub adhesions: Vec<VertexSet>,
}

/// Maximum cardinality search visiting order.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let mut weight = vec![0usize; g.n()];
    let mut left = g.vertices();
    let mut order = Vec::with_capacity(left.len());
    while !left.is_empty() {
        let v = left.iter().max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        left.remove(v);
        order.push(v);
        for u in (g.neighbors(v) & left).iter() {
            weight[u] += 1;
        }
    }
    order
}

/// A perfect elimination ordering if `g` is chordal.
pub fn peo(g: &Graph) -> Option<Vec<usize>> {
    let mut order = mcs_order(g);
    order.reverse();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) {
            for &u in &later {
                if u != parent && !g.has_edge(u, parent) {
                    return None;
                }
            }
        }
    }
    Some(order)
}

pub fn is_chordal_fast(g: &Graph) -> bool {
    peo(g).is_some()
}

/// None when chordal, otherwise an induced cycle of length at least four.
pub fn is_chordal(g: &Graph) -> Option<Vec<usize>> {
    if is_chordal_fast(g) {
        return None;
    }
    for v in g.vertices().iter() {
        let nv = g.neighbors(v);
        for x in nv.iter() {
            for y in nv.iter().filter(|&y| y > x && !g.has_edge(x, y)) {
                let allowed = (g.vertices() - g.closed_nbhd(&VertexSet::singleton(v))).with(x).with(y);
                if let Some(p) = shortest_path(g, x, y, &allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(p);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, allowed: &VertexSet) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::singleton(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut c = to;
            while c != from {
                c = prev[c];
                path.push(c);
            }
            path.reverse();
            return Some(path);
        }
        for u in ((g.neighbors(v) & *allowed) - seen).iter() {
            seen.insert(u);
            prev[u] = v;
            queue.push_back(u);
        }
    }
    None
}

/// Maximal cliques of a chordal graph, sorted.
pub fn maximal_cliques_chordal(g: &Graph) -> Result<Vec<VertexSet>> {
    let order = peo(g).ok_or(Error::NotChordal)?;
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let cands: Vec<VertexSet> = order
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect::<VertexSet>().with(v))
        .collect();
    let mut out: Vec<VertexSet> = Vec::new();
    for (i, c) in cands.iter().enumerate() {
        let dominated = cands.iter().enumerate().any(|(j, d)| j != i && c.is_subset(d) && (c != d || j < i));
        if !dominated {
            out.push(*c);
        }
    }
    out.sort();
    Ok(out)
}

pub fn clique_tree(g: &Graph) -> Result<CliqueTree> {
    let bags = maximal_cliques_chordal(g)?;
    let k = bags.len();
    let mut in_tree = vec![false; k];
    let mut best: Vec<(usize, usize)> = vec![(0, usize::MAX); k];
    let mut edges = Vec::new();
    let mut adhesions = Vec::new();
    if k > 0 {
        in_tree[0] = true;
        for j in 1..k {
            best[j] = ((bags[0] & bags[j]).len(), 0);
        }
        for _ in 1..k {
            let j = (0..k).filter(|&j| !in_tree[j]).max_by_key(|&j| (best[j].0, std::cmp::Reverse(j))).unwrap();
            in_tree[j] = true;
            let p = best[j].1;
            edges.push((p, j));
            adhesions.push(bags[p] & bags[j]);
            for t in 0..k {
                if !in_tree[t] {
                    let w = (bags[j] & bags[t]).len();
                    if w > best[t].0 {
                        best[t] = (w, j);
                    }
                }
            }
        }
    }
    Ok(CliqueTree { bags, edges, adhesions })
}

fn min_degree_fill(h: &mut Graph, first: Option<usize>) -> Vec<Edge> {
    let mut alive = h.vertices();
    let mut fill = Vec::new();
    let mut work = h.clone();
    while !alive.is_empty() {
        let v = match first {
            Some(u) if alive == h.vertices() && alive.contains(u) => u,
            _ => alive.iter().min_by_key(|&v| ((work.neighbors(v) & alive).len(), v)).unwrap(),
        };
        let nb = (work.neighbors(v) & alive).to_vec();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if !work.has_edge(nb[i], nb[j]) {
                    work.add_edge(nb[i], nb[j]);
                    fill.push(norm(nb[i], nb[j]));
                }
            }
        }
        alive.remove(v);
    }
    for &(a, b) in &fill {
        h.add_edge(a, b);
    }
    fill
}

// Drops fill edges one at a time while chordality survives.
fn refine(h: &mut Graph, fill: &mut Vec<Edge>, protected: &BTreeSet<Edge>) {
    fill.sort();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < fill.len() {
            let (a, b) = fill[i];
            if protected.contains(&(a, b)) {
                i += 1;
                continue;
            }
            h.remove_edge(a, b);
            if is_chordal_fast(h) {
                fill.remove(i);
                changed = true;
            } else {
                h.add_edge(a, b);
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
}

/// Whether G+F is chordal and no single fill edge can be dropped.
pub fn is_minimal_completion(g: &Graph, fill: &[Edge]) -> bool {
    let mut h = add_edges(g, fill);
    if !is_chordal_fast(&h) {
        return false;
    }
    for &(a, b) in fill {
        h.remove_edge(a, b);
        let ok = is_chordal_fast(&h);
        h.add_edge(a, b);
        if ok {
            return false;
        }
    }
    true
}

pub fn minimal_completion(g: &Graph, avoid: Option<usize>) -> Completion {
    let mut h = g.clone();
    let mut fill = min_degree_fill(&mut h, avoid);
    refine(&mut h, &mut fill, &BTreeSet::new());
    Completion { fill, minimal: true, avoids: avoid }
}

pub const FORCE_GUARD: usize = 16;

/// Whether `s2` meets at least two components of G - `s1`.
pub fn crossing(g: &Graph, s1: &VertexSet, s2: &VertexSet) -> Result<bool> {
    if !is_minimal_separator_fast(g, s1) || !is_minimal_separator_fast(g, s2) {
        return Err(Error::NotASeparator);
    }
    Ok(crosses(g, s1, s2))
}

pub fn crosses(g: &Graph, s1: &VertexSet, s2: &VertexSet) -> bool {
    components(g, s1).iter().filter(|c| c.intersects(s2)).count() >= 2
}

/// Minimal completion in which every given separator is a clique.
pub fn force_separators_completion(g: &Graph, seps: &[VertexSet]) -> Result<Completion> {
    for s in seps {
        if !is_minimal_separator_fast(g, s) {
            return Err(Error::NotASeparator);
        }
    }
    for i in 0..seps.len() {
        for j in i + 1..seps.len() {
            if crosses(g, &seps[i], &seps[j]) {
                return Err(Error::CrossingSeparators);
            }
        }
    }
    let mut family: Vec<VertexSet> = seps.to_vec();
    if g.order() <= FORCE_GUARD {
        for s in enumerate_minimal_separators_exhaustive(g, FORCE_GUARD)? {
            if !family.contains(&s) && family.iter().all(|t| !crosses(g, t, &s)) {
                family.push(s);
            }
        }
    }
    let mut h = g.clone();
    let mut protected = BTreeSet::new();
    for s in &family {
        let vs = s.to_vec();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if !h.has_edge(vs[i], vs[j]) {
                    h.add_edge(vs[i], vs[j]);
                    protected.insert(norm(vs[i], vs[j]));
                }
            }
        }
    }
    let mut rest = min_degree_fill(&mut h, None);
    refine(&mut h, &mut rest, &BTreeSet::new());
    let mut fill: Vec<Edge> = protected.iter().copied().chain(rest).collect();
    fill.sort();
    let minimal = is_minimal_completion(g, &fill);
    Ok(Completion { fill, minimal, avoids: None })
}

/// Clique-tree edge with adhesion S whose D-side bag lies in N[D],
/// together with that bag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinsepTools {
    pub tree: CliqueTree,
    pub edge: usize,
    pub d_side_bag: usize,
    pub omega: VertexSet,
}

pub fn chordal_minsep_tools(h: &Graph, s: &VertexSet, d: &VertexSet) -> Result<MinsepTools> {
    let full = match d.first() {
        Some(v) => h.component_of(v, &(h.vertices() - *s)) == *d && h.open_nbhd(d) == *s,
        None => false,
    };
    if !full || !is_minimal_separator_fast(h, s) {
        return Err(Error::WitnessNotFound("S is not a minimal separator with full component D".into()));
    }
    let tree = clique_tree(h)?;
    let nd = h.closed_nbhd(d);
    for (i, &(a, b)) in tree.edges.iter().enumerate() {
        if tree.adhesions[i] != *s {
            continue;
        }
        for (x, y) in [(a, b), (b, a)] {
            if tree.bags[x].is_subset(&nd) && tree.bags[x].intersects(d) && !tree.bags[y].intersects(d) {
                let omega = tree.bags[x];
                return Ok(MinsepTools { tree, edge: i, d_side_bag: x, omega });
            }
        }
    }
    Err(Error::WitnessNotFound("no clique-tree edge carries S".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_minimal_separator, set};

    #[test]
    fn chordality_examples() {
        assert!(is_chordal(&Graph::path(6)).is_none());
        let hole = is_chordal(&Graph::cycle(4)).unwrap();
        assert_eq!(hole.len(), 4);
        let mut c5 = Graph::cycle(5);
        c5.add_edge(0, 2);
        let hole = is_chordal(&c5).unwrap();
        assert_eq!(set(&hole), set(&[0, 2, 3, 4]));
    }

    #[test]
    fn clique_tree_examples() {
        let t = clique_tree(&Graph::path(4)).unwrap();
        assert_eq!(t.bags, vec![set(&[0, 1]), set(&[1, 2]), set(&[2, 3])]);
        let mut ad = t.adhesions.clone();
        ad.sort();
        assert_eq!(ad, vec![set(&[1]), set(&[2])]);
        assert_eq!(clique_tree(&Graph::complete(4)).unwrap().bags.len(), 1);
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        let t = clique_tree(&diamond).unwrap();
        assert_eq!(t.bags.len(), 2);
        assert_eq!(t.adhesions, vec![set(&[1, 2])]);
        assert_eq!(clique_tree(&Graph::cycle(4)), Err(Error::NotChordal));
    }

    #[test]
    fn completion_examples() {
        assert!(minimal_completion(&Graph::path(5), None).fill.is_empty());
        let c = minimal_completion(&Graph::cycle(4), None);
        assert_eq!(c.fill.len(), 1);
        // Vertex 0 plays the role of vertex 1 in the 1-indexed cycle.
        let c = minimal_completion(&Graph::cycle(4), Some(0));
        assert_eq!(c.fill, vec![(1, 3)]);
        let c6 = Graph::cycle(6);
        for u in 0..6 {
            let c = minimal_completion(&c6, Some(u));
            assert!(c.fill.iter().all(|&(a, b)| a != u && b != u));
            assert!(is_minimal_completion(&c6, &c.fill));
        }
    }

    #[test]
    fn forced_separator_examples() {
        let c4 = Graph::cycle(4);
        let c = force_separators_completion(&c4, &[]).unwrap();
        assert_eq!(c.fill.len(), 1);
        let c = force_separators_completion(&c4, &[set(&[0, 2])]).unwrap();
        assert_eq!(c.fill, vec![(0, 2)]);
        assert!(c.minimal);
        assert!(is_minimal_separator(&c.apply(&c4), &set(&[0, 2])).is_some());
        assert_eq!(
            force_separators_completion(&c4, &[set(&[0, 2]), set(&[1, 3])]),
            Err(Error::CrossingSeparators)
        );
    }

    #[test]
    fn crossing_examples() {
        let c4 = Graph::cycle(4);
        assert!(crossing(&c4, &set(&[0, 2]), &set(&[1, 3])).unwrap());
        let p5 = Graph::path(5);
        assert!(!crossing(&p5, &set(&[1]), &set(&[3])).unwrap());
        assert!(!crossing(&p5, &set(&[1]), &set(&[1])).unwrap());
        assert_eq!(crossing(&p5, &set(&[0]), &set(&[1])), Err(Error::NotASeparator));
    }

    #[test]
    fn minsep_tools_examples() {
        let p4 = Graph::path(4);
        let t = chordal_minsep_tools(&p4, &set(&[1]), &set(&[0])).unwrap();
        assert_eq!(t.omega, set(&[0, 1]));
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        let t = chordal_minsep_tools(&diamond, &set(&[1, 2]), &set(&[3])).unwrap();
        assert_eq!(t.omega, set(&[1, 2, 3]));
        assert!(chordal_minsep_tools(&Graph::complete(4), &set(&[0]), &set(&[1])).is_err());
    }
}
