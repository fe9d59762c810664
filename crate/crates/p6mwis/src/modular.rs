use crate::error::{Error, Result};
use crate::graph::{components_within, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Clique,
    Independent,
    Prime,
    Leaf,
}

/// Maximal proper strong modules of G[scope] with their quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularPartition {
    pub scope: VertexSet,
    pub modules: Vec<VertexSet>,
    pub quotient_adjacency: Vec<Vec<bool>>,
    pub kind: NodeKind,
}

impl ModularPartition {
    pub fn module_of(&self, v: usize) -> Option<usize> {
        self.modules.iter().position(|m| m.contains(v))
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.quotient_adjacency[i][j]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdNode {
    pub label: VertexSet,
    pub kind: NodeKind,
    pub children: Vec<usize>,
}

/// Modular decomposition tree; node 0 is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdTree {
    pub nodes: Vec<MdNode>,
}

/// Smallest module of G[scope] containing `seed`.
pub fn module_closure(g: &Graph, scope: &VertexSet, seed: &VertexSet) -> VertexSet {
    let mut m = *seed;
    loop {
        let mut grew = false;
        for x in (*scope - m).iter() {
            let seen = g.neighbors(x) & m;
            if !seen.is_empty() && seen != m {
                m.insert(x);
                grew = true;
            }
        }
        if !grew {
            return m;
        }
    }
}

pub fn is_module(g: &Graph, scope: &VertexSet, m: &VertexSet) -> bool {
    (*scope - *m).iter().all(|x| {
        let seen = g.neighbors(x) & *m;
        seen.is_empty() || seen == *m
    })
}

pub fn modular_partition(g: &Graph, scope: &VertexSet) -> Result<ModularPartition> {
    let scope = *scope & g.vertices();
    if scope.len() < 2 {
        return Err(Error::ScopeTooSmall);
    }
    let (modules, kind) = {
        let comps = components_within(g, &scope);
        if comps.len() > 1 {
            (comps, NodeKind::Independent)
        } else {
            let co = components_within(&g.induced(&scope).complement(), &scope);
            if co.len() > 1 {
                (co, NodeKind::Clique)
            } else {
                (prime_partition(g, &scope), NodeKind::Prime)
            }
        }
    };
    let k = modules.len();
    let mut quotient_adjacency = vec![vec![false; k]; k];
    for i in 0..k {
        let reach = g.open_nbhd(&modules[i]);
        for j in 0..k {
            if i != j && reach.contains(modules[j].first().unwrap()) {
                quotient_adjacency[i][j] = true;
            }
        }
    }
    Ok(ModularPartition { scope, modules, quotient_adjacency, kind })
}

// In a connected, co-connected scope the maximal proper modules are strong
// and every proper module lies inside one of them.
fn prime_partition(g: &Graph, scope: &VertexSet) -> Vec<VertexSet> {
    let mut rest = *scope;
    let mut out = Vec::new();
    while let Some(v) = rest.first() {
        let mut m = VertexSet::singleton(v);
        for u in scope.without(v).iter() {
            let c = module_closure(g, scope, &VertexSet::singleton(v).with(u));
            if c != *scope {
                m |= c;
            }
        }
        rest = rest - m;
        out.push(m);
    }
    out
}

pub fn md_tree(g: &Graph) -> MdTree {
    md_tree_of(g, &g.vertices())
}

pub fn md_tree_of(g: &Graph, scope: &VertexSet) -> MdTree {
    let mut tree = MdTree { nodes: Vec::new() };
    build(g, *scope, &mut tree);
    tree
}

fn build(g: &Graph, scope: VertexSet, tree: &mut MdTree) -> usize {
    let id = tree.nodes.len();
    if scope.len() <= 1 {
        tree.nodes.push(MdNode { label: scope, kind: NodeKind::Leaf, children: vec![] });
        return id;
    }
    let part = modular_partition(g, &scope).expect("scope has two vertices");
    tree.nodes.push(MdNode { label: scope, kind: part.kind, children: vec![] });
    for m in part.modules {
        let c = build(g, m, tree);
        tree.nodes[id].children.push(c);
    }
    id
}

pub fn is_mesh(g: &Graph, scope: &VertexSet) -> bool {
    match modular_partition(g, scope) {
        Ok(p) => p.kind == NodeKind::Clique,
        Err(_) => false,
    }
}

/// Modules inducing a connected and co-connected subgraph; at most 2n-1.
pub fn connected_coconnected_modules(g: &Graph) -> Vec<VertexSet> {
    if g.vertices().is_empty() {
        return vec![];
    }
    let tree = md_tree(g);
    let mut out: Vec<VertexSet> = tree
        .nodes
        .iter()
        .filter(|nd| matches!(nd.kind, NodeKind::Leaf | NodeKind::Prime))
        .map(|nd| nd.label)
        .collect();
    out.sort();
    out
}

/// The maximal proper strong module of a mesh meeting an independent set.
pub fn unique_i_module(g: &Graph, mesh_scope: &VertexSet, indep: &VertexSet) -> Result<Option<VertexSet>> {
    let part = modular_partition(g, mesh_scope).map_err(|_| Error::NotAMesh)?;
    if part.kind != NodeKind::Clique {
        return Err(Error::NotAMesh);
    }
    let hits: Vec<VertexSet> = part.modules.into_iter().filter(|m| m.intersects(indep)).collect();
    match hits.len() {
        0 => Ok(None),
        1 => Ok(Some(hits[0])),
        _ => Err(Error::PreconditionViolated("set meets two modules of a mesh, so it is not independent".into())),
    }
}
