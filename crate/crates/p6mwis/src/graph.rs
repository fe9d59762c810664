use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

pub const MAX_VERTICES: usize = 256;
const WORDS: usize = MAX_VERTICES / 64;

/// Fixed-width bitset over vertex ids. Equality and hashing are structural.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet([u64; WORDS]);

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet([0; WORDS])
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// The set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        let mut s = Self::new();
        for (i, w) in s.0.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = !0;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.0[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.0.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    pub fn iter(&self) -> Iter {
        Iter { words: self.0, idx: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Subset of `self` selected by the low bits of `mask`, in member order.
    pub fn subset_by_mask(&self, mask: u64) -> VertexSet {
        let mut out = VertexSet::new();
        for (i, v) in self.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out.insert(v);
            }
        }
        out
    }
}

pub struct Iter {
    words: [u64; WORDS],
    idx: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.idx < WORDS {
            let w = self.words[self.idx];
            if w != 0 {
                let t = w.trailing_zeros() as usize;
                self.words[self.idx] = w & (w - 1);
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
        }
        None
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(mut self, rhs: VertexSet) -> VertexSet {
        for i in 0..WORDS {
            self.0[i] |= rhs.0[i];
        }
        self
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(mut self, rhs: VertexSet) -> VertexSet {
        for i in 0..WORDS {
            self.0[i] &= rhs.0[i];
        }
        self
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(mut self, rhs: VertexSet) -> VertexSet {
        for i in 0..WORDS {
            self.0[i] &= !rhs.0[i];
        }
        self
    }
}

impl std::ops::BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        for i in 0..WORDS {
            self.0[i] |= rhs.0[i];
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if v.iter().any(|&x| x >= MAX_VERTICES) {
            return Err(serde::de::Error::custom("vertex id out of range"));
        }
        Ok(v.into_iter().collect())
    }
}

/// Builds a set from a slice literal.
pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().collect()
}

/// Undirected simple graph on the vertex set `vertices` (ids below `n`).
/// Induced subgraphs keep the original ids.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    vertices: VertexSet,
    adj: Vec<VertexSet>,
    weights: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices supported");
        Graph { n, vertices: VertexSet::full(n), adj: vec![VertexSet::new(); n], weights: vec![1; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn set_weight(&mut self, v: usize, w: u64) {
        self.weights[v] = w;
    }

    pub fn with_weights(mut self, weights: &[u64]) -> Self {
        self.weights[..weights.len()].copy_from_slice(weights);
        self
    }

    /// Id bound; every vertex id is below it.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight_of(&self, s: &VertexSet) -> u64 {
        s.iter().map(|v| self.weights[v]).sum()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices.iter() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|v| self.adj[v].len()).sum::<usize>() / 2
    }

    /// N[X].
    #[inline]
    pub fn closed_nbhd(&self, x: &VertexSet) -> VertexSet {
        let mut out = *x;
        for v in x.iter() {
            out |= self.adj[v];
        }
        out
    }

    /// N(X) = N[X] minus X.
    #[inline]
    pub fn open_nbhd(&self, x: &VertexSet) -> VertexSet {
        self.closed_nbhd(x) - *x
    }

    pub fn closed_nbhd_of(&self, vs: &[usize]) -> VertexSet {
        self.closed_nbhd(&set(vs))
    }

    /// G[keep], with original ids.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let keep = *keep & self.vertices;
        let mut adj = vec![VertexSet::new(); self.n];
        for v in keep.iter() {
            adj[v] = self.adj[v] & keep;
        }
        Graph { n: self.n, vertices: keep, adj, weights: self.weights.clone() }
    }

    /// G - X.
    pub fn remove(&self, x: &VertexSet) -> Graph {
        self.induced(&(self.vertices - *x))
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for v in self.vertices.iter() {
            g.adj[v] = (self.vertices - self.adj[v]).without(v);
        }
        g
    }

    pub fn is_clique(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| (*x - self.adj[v]).without(v).is_empty())
    }

    pub fn is_independent(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| self.adj[v].is_disjoint(x))
    }

    /// Whether every vertex of `x` is adjacent to all of `to`.
    pub fn complete_to(&self, x: &VertexSet, to: &VertexSet) -> bool {
        x.iter().all(|v| to.is_subset(&self.adj[v]))
    }

    pub fn is_connected(&self) -> bool {
        components(self, &VertexSet::new()).len() <= 1
    }

    /// Connected component of G[within] containing `start`.
    pub fn component_of(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            next = (next & *within) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }
}

/// Full components of a minimal separator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorWitness {
    pub separator: VertexSet,
    pub full_components: Vec<VertexSet>,
}

/// Connected components of G - removed, sorted by smallest vertex.
pub fn components(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    components_within(g, &(g.vertices() - *removed))
}

/// Connected components of G[within], sorted by smallest vertex.
pub fn components_within(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let mut rest = *within & g.vertices();
    let mut out = Vec::new();
    while let Some(v) = rest.first() {
        let c = g.component_of(v, &rest);
        rest = rest - c;
        out.push(c);
    }
    out
}

/// Reach(X, Y): union of components of G - Y meeting X, and its neighborhood.
pub fn reach_proj(g: &Graph, x: &VertexSet, y: &VertexSet) -> (VertexSet, VertexSet) {
    let within = g.vertices() - *y;
    let mut reach = VertexSet::new();
    for v in (*x & within).iter() {
        if !reach.contains(v) {
            reach |= g.component_of(v, &within);
        }
    }
    let proj = g.open_nbhd(&reach);
    (reach, proj)
}

/// An induced path on `k` vertices, if any.
pub fn find_induced_path(g: &Graph, k: usize) -> Option<Vec<usize>> {
    assert!(k >= 1);
    let mut path = Vec::with_capacity(k);
    for s in g.vertices().iter() {
        path.push(s);
        if extend_path(g, k, &mut path, VertexSet::singleton(s), VertexSet::new()) {
            return Some(path);
        }
        path.pop();
    }
    None
}

fn extend_path(g: &Graph, k: usize, path: &mut Vec<usize>, on: VertexSet, blocked: VertexSet) -> bool {
    if path.len() == k {
        return true;
    }
    let last = *path.last().unwrap();
    let cand = g.neighbors(last) - on - blocked;
    // Neighbours of earlier vertices (except last) are forbidden.
    let blocked_next = blocked | g.neighbors(last) | VertexSet::singleton(last);
    for v in cand.iter() {
        path.push(v);
        if extend_path(g, k, path, on.with(v), blocked_next) {
            return true;
        }
        path.pop();
    }
    false
}

pub fn is_p6_free(g: &Graph) -> bool {
    find_induced_path(g, 6).is_none()
}

pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> Option<SeparatorWitness> {
    if !s.is_subset(&g.vertices()) {
        return None;
    }
    let full: Vec<VertexSet> =
        components(g, s).into_iter().filter(|c| g.open_nbhd(c) == *s).collect();
    if full.len() >= 2 {
        Some(SeparatorWitness { separator: *s, full_components: full })
    } else {
        None
    }
}

/// Faster boolean variant used in hot loops.
pub fn is_minimal_separator_fast(g: &Graph, s: &VertexSet) -> bool {
    let mut rest = g.vertices() - *s;
    let mut full = 0;
    while let Some(v) = rest.first() {
        let c = g.component_of(v, &rest);
        rest = rest - c;
        if g.open_nbhd(&c) == *s {
            full += 1;
            if full == 2 {
                return true;
            }
        }
    }
    false
}

pub const SEPARATOR_GUARD: usize = 18;

/// All minimal separators by testing every vertex subset.
pub fn enumerate_minimal_separators_exhaustive(g: &Graph, max_n: usize) -> Result<Vec<VertexSet>> {
    let k = g.order();
    if k > max_n {
        return Err(Error::GuardExceeded { what: "minimal separator enumeration", limit: max_n, n: k });
    }
    let vs = g.vertices();
    let mut out = Vec::new();
    for mask in 0..(1u64 << k) {
        let s = vs.subset_by_mask(mask);
        if is_minimal_separator_fast(g, &s) {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra_basics() {
        let a = set(&[1, 3, 70, 200]);
        let b = set(&[3, 4, 200]);
        assert_eq!((a | b).to_vec(), vec![1, 3, 4, 70, 200]);
        assert_eq!((a & b).to_vec(), vec![3, 200]);
        assert_eq!((a - b).to_vec(), vec![1, 70]);
        assert_eq!(a.first(), Some(1));
        assert_eq!(VertexSet::full(65).len(), 65);
        assert!(set(&[3]).is_subset(&b));
    }

    #[test]
    fn neighborhoods_are_consistent() {
        let g = Graph::path(5);
        let x = set(&[1, 2]);
        assert_eq!(g.open_nbhd(&x), set(&[0, 3]));
        assert_eq!(g.closed_nbhd(&x), set(&[0, 1, 2, 3]));
    }

    #[test]
    fn components_examples() {
        let p4 = Graph::path(4);
        assert_eq!(components(&p4, &set(&[1])), vec![set(&[0]), set(&[2, 3])]);
        assert!(components(&p4, &p4.vertices()).is_empty());
        let c6 = Graph::cycle(6);
        assert_eq!(components(&c6, &set(&[0, 3])), vec![set(&[1, 2]), set(&[4, 5])]);
    }

    #[test]
    fn reach_proj_examples() {
        let p4 = Graph::path(4);
        assert_eq!(reach_proj(&p4, &set(&[0]), &set(&[2])), (set(&[0, 1]), set(&[2])));
        assert_eq!(reach_proj(&p4, &set(&[0]), &VertexSet::new()), (p4.vertices(), VertexSet::new()));
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(reach_proj(&claw, &set(&[1]), &set(&[0])), (set(&[1]), set(&[0])));
    }

    #[test]
    fn induced_path_examples() {
        let p6 = Graph::path(6);
        assert_eq!(find_induced_path(&p6, 6).map(|p| p.len()), Some(6));
        assert!(find_induced_path(&Graph::cycle(6), 6).is_none());
        let c7 = Graph::cycle(7);
        let p = find_induced_path(&c7, 6).unwrap();
        for i in 0..6 {
            for j in i + 1..6 {
                assert_eq!(c7.has_edge(p[i], p[j]), j == i + 1);
            }
        }
    }

    #[test]
    fn minimal_separator_examples() {
        let p4 = Graph::path(4);
        let w = is_minimal_separator(&p4, &set(&[1])).unwrap();
        assert_eq!(w.full_components, vec![set(&[0]), set(&[2, 3])]);
        assert!(is_minimal_separator(&p4, &set(&[0])).is_none());
        let c4 = Graph::cycle(4);
        let w = is_minimal_separator(&c4, &set(&[0, 2])).unwrap();
        assert_eq!(w.full_components, vec![set(&[1]), set(&[3])]);
    }

    #[test]
    fn exhaustive_separator_examples() {
        assert_eq!(
            enumerate_minimal_separators_exhaustive(&Graph::path(4), 18).unwrap(),
            vec![set(&[1]), set(&[2])]
        );
        assert!(enumerate_minimal_separators_exhaustive(&Graph::complete(4), 18).unwrap().is_empty());
        let mut c4 = enumerate_minimal_separators_exhaustive(&Graph::cycle(4), 18).unwrap();
        c4.sort_by_key(|s| s.to_vec());
        assert_eq!(c4, vec![set(&[0, 2]), set(&[1, 3])]);
        assert!(matches!(
            enumerate_minimal_separators_exhaustive(&Graph::path(20), 18),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn induced_subgraph_keeps_ids() {
        let g = Graph::cycle(5).induced(&set(&[0, 1, 2, 4]));
        assert_eq!(g.order(), 4);
        assert!(g.has_edge(4, 0));
        assert!(!g.has_edge(2, 3));
        assert_eq!(components(&g, &set(&[0])), vec![set(&[1, 2]), set(&[4])]);
    }
}
