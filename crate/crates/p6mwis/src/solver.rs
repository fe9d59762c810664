use crate::capture::family_summary;
use crate::error::{Error, Result};
use crate::family::{Budget, FastMap, SetFamily};
use crate::graph::{components, find_induced_path, Graph, VertexSet};
use crate::pmc::{enumerate_all_pmcs_exhaustive, is_pmc_fast, PMC_GUARD};
use crate::segments::{segment_bags, closed_nbhd_cliques, segment_family, separator_family};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

pub const BRUTE_GUARD: usize = 24;
pub const MIS_GUARD: usize = 24;
pub const DEFAULT_BUDGET: u64 = 2_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Brute,
    Oracle,
    Paper,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Mode::Brute),
            "oracle" | "oracle_allpmc" => Ok(Mode::Oracle),
            "paper" => Ok(Mode::Paper),
            _ => Err(Error::PreconditionViolated(format!("unknown mode {s}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Brute => "brute",
            Mode::Oracle => "oracle",
            Mode::Paper => "paper",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub family_sizes: BTreeMap<String, usize>,
    pub pmc_count: usize,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub weight: u64,
    pub vertices: VertexSet,
    pub mode: Mode,
    /// False when the family admits no decomposition of the graph.
    pub realized: bool,
    pub stats: Stats,
    pub warnings: Vec<String>,
}

impl Solution {
    fn empty(mode: Mode) -> Self {
        Solution { weight: 0, vertices: VertexSet::new(), mode, realized: true, stats: Stats::default(), warnings: vec![] }
    }
}

/// Verified PMCs for the dynamic program.
#[derive(Clone, Debug, Default)]
pub struct CandidateFamily {
    pub pmcs: SetFamily,
    pub family_sizes: BTreeMap<String, usize>,
}

impl CandidateFamily {
    pub fn from_candidates(g: &Graph, cands: &SetFamily, mut family_sizes: BTreeMap<String, usize>) -> Self {
        let mut pmcs = cands.clone();
        pmcs.retain(|s| is_pmc_fast(g, s));
        family_sizes.insert("candidates".into(), cands.len());
        family_sizes.insert("pmcs".into(), pmcs.len());
        CandidateFamily { pmcs, family_sizes }
    }
}

/// Every PMC, by exhaustive search.
pub fn oracle_family(g: &Graph) -> Result<CandidateFamily> {
    let pmcs = enumerate_all_pmcs_exhaustive(g, PMC_GUARD)?;
    let mut sizes = BTreeMap::new();
    sizes.insert("exhaustive".to_string(), pmcs.len());
    Ok(CandidateFamily::from_candidates(g, &pmcs, sizes))
}

/// Candidate PMCs of a connected graph built from the capture and segment families.
pub fn assemble_family(g: &Graph, budget: &Budget) -> Result<CandidateFamily> {
    let mut sizes = BTreeMap::new();
    let sep = separator_family(g, None)?;
    sizes.insert("separators".to_string(), sep.seps.len());
    sizes.insert("separated_components".to_string(), sep.comps.len());
    let segments = segment_family(g, None, &sep.comps, budget)?;
    sizes.insert("segments".to_string(), segments.len());
    let mut cands = segment_bags(g, &segments)?;
    sizes.insert("completed".to_string(), cands.len());
    let nbhd_cliques = closed_nbhd_cliques(g)?;
    sizes.insert("closed_nbhd_cliques".to_string(), nbhd_cliques.len());
    cands.extend(&nbhd_cliques);
    let summary = family_summary(g, None, budget)?;
    sizes.insert("summary".to_string(), summary.pmcs.len());
    cands.extend(&summary.pmcs);
    Ok(CandidateFamily::from_candidates(g, &cands, sizes))
}

const NONE: usize = usize::MAX;

struct Bag {
    omega: VertexSet,
    subs: Vec<(VertexSet, VertexSet)>,
}

struct Dp<'a> {
    g: &'a Graph,
    bags: Vec<Bag>,
    memo: FastMap<(VertexSet, usize), Option<(u64, usize, usize)>>,
}

impl Dp<'_> {
    // Best weight inside `c` given the chosen vertex `u` of N(c), with the bag and pick used.
    fn best(&mut self, c: VertexSet, u: usize) -> Option<(u64, usize, usize)> {
        if let Some(&v) = self.memo.get(&(c, u)) {
            return v;
        }
        let s = self.g.open_nbhd(&c);
        let within = s | c;
        let mut best: Option<(u64, usize, usize)> = None;
        for i in 0..self.bags.len() {
            let omega = self.bags[i].omega;
            if !s.is_subset(&omega) || !omega.is_subset(&within) || !omega.intersects(&c) {
                continue;
            }
            let picks: Vec<usize> = if u != NONE { vec![u] } else { std::iter::once(NONE).chain((omega - s).iter()).collect() };
            for x in picks {
                let mut total = if x != NONE && c.contains(x) { self.g.weight(x) } else { 0 };
                let mut ok = true;
                for j in 0..self.bags[i].subs.len() {
                    let (sub, nb) = self.bags[i].subs[j];
                    if !sub.is_subset(&c) {
                        continue;
                    }
                    let ux = if x != NONE && nb.contains(x) { x } else { NONE };
                    match self.best(sub, ux) {
                        Some((w, _, _)) => total += w,
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok && best.map_or(true, |(b, _, _)| total > b) {
                    best = Some((total, i, x));
                }
            }
        }
        self.memo.insert((c, u), best);
        best
    }

    fn collect(&mut self, c: VertexSet, u: usize, out: &mut VertexSet) {
        let (_, i, x) = self.best(c, u).expect("reconstruction follows a realized value");
        if x != NONE && c.contains(x) {
            out.insert(x);
        }
        let subs = self.bags[i].subs.clone();
        for (sub, nb) in subs {
            if sub.is_subset(&c) {
                let ux = if x != NONE && nb.contains(x) { x } else { NONE };
                self.collect(sub, ux, out);
            }
        }
    }
}

/// Maximum weight independent set realizable by a tree decomposition into bags of `pmcs`,
/// each bag holding at most one chosen vertex. `g` must be connected.
pub fn dp_mwis(g: &Graph, pmcs: &SetFamily) -> Result<Solution> {
    let mut sol = Solution::empty(Mode::Oracle);
    if g.vertices().is_empty() {
        return Ok(sol);
    }
    let bags = pmcs
        .iter()
        .filter(|o| !o.is_empty() && o.is_subset(&g.vertices()))
        .map(|&omega| Bag { omega, subs: components(g, &omega).into_iter().map(|c| (c, g.open_nbhd(&c))).collect() })
        .collect();
    let mut dp = Dp { g, bags, memo: FastMap::default() };
    let root = g.vertices();
    match dp.best(root, NONE) {
        None => {
            sol.realized = false;
            sol.warnings.push("family admits no decomposition; returning the empty set".into());
        }
        Some((w, _, _)) => {
            let mut set = VertexSet::new();
            dp.collect(root, NONE, &mut set);
            if !g.is_independent(&set) || g.weight_of(&set) != w {
                return Err(Error::Invariant("reconstructed set is not a matching independent set".into()));
            }
            sol.weight = w;
            sol.vertices = set;
        }
    }
    sol.stats.pmc_count = pmcs.len();
    Ok(sol)
}

/// Exact optimum by branch and bound.
pub fn brute_force_mwis(g: &Graph, max_n: usize) -> Result<Solution> {
    let n = g.order();
    if n > max_n {
        return Err(Error::GuardExceeded { what: "brute force", limit: max_n, n });
    }
    fn go(g: &Graph, cand: VertexSet, cur: VertexSet, cur_w: u64, best: &mut (u64, VertexSet)) {
        if cur_w + g.weight_of(&cand) <= best.0 {
            return;
        }
        match cand.iter().max_by_key(|&v| ((g.neighbors(v) & cand).len(), g.weight(v))) {
            Some(v) if g.neighbors(v).intersects(&cand) => {
                go(g, cand - g.neighbors(v).with(v), cur.with(v), cur_w + g.weight(v), best);
                go(g, cand.without(v), cur, cur_w, best);
            }
            _ => *best = (cur_w + g.weight_of(&cand), cur | cand),
        }
    }
    let mut best = (0, VertexSet::new());
    go(g, g.vertices(), VertexSet::new(), 0, &mut best);
    let mut sol = Solution::empty(Mode::Brute);
    sol.weight = best.0;
    sol.vertices = best.1;
    Ok(sol)
}

/// All maximal independent sets, by pivoting on the complement.
pub fn enumerate_maximal_independent_sets(g: &Graph, guard: usize) -> Result<Vec<VertexSet>> {
    let n = g.order();
    if n > guard {
        return Err(Error::GuardExceeded { what: "maximal independent sets", limit: guard, n });
    }
    let non = |v: usize| g.vertices() - g.neighbors(v).with(v);
    fn bk(r: VertexSet, p: VertexSet, x: VertexSet, non: &dyn Fn(usize) -> VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = (p | x).iter().max_by_key(|&u| (non(u) & p).len()).unwrap();
        let mut p = p;
        let mut x = x;
        for v in (p - non(pivot)).iter() {
            bk(r.with(v), p & non(v), x & non(v), non, out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    if !g.vertices().is_empty() {
        bk(VertexSet::new(), g.vertices(), VertexSet::new(), &non, &mut out);
    }
    out.sort_by_key(|s| s.to_vec());
    Ok(out)
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub mode: Mode,
    pub budget: u64,
    pub validate_p6: bool,
}

impl SolveOptions {
    pub fn new(mode: Mode) -> Self {
        SolveOptions { mode, budget: DEFAULT_BUDGET, validate_p6: true }
    }
}

fn merge_sizes(into: &mut BTreeMap<String, usize>, from: &BTreeMap<String, usize>) {
    for (k, v) in from {
        *into.entry(k.clone()).or_default() += v;
    }
}

/// Solves each connected component separately and sums the results.
pub fn solve(g: &Graph, opts: SolveOptions) -> Result<Solution> {
    let start = Instant::now();
    let mut total = Solution::empty(opts.mode);
    if opts.mode == Mode::Paper && opts.validate_p6 {
        if let Some(path) = find_induced_path(g, 6) {
            total.warnings.push(format!("graph contains an induced P6 {path:?}; the result may be suboptimal"));
        }
    }
    let budget = Budget::new(opts.budget);
    for comp in components(g, &VertexSet::new()) {
        let h = g.induced(&comp);
        let part = match opts.mode {
            Mode::Brute => brute_force_mwis(&h, BRUTE_GUARD)?,
            Mode::Oracle => {
                let fam = oracle_family(&h)?;
                let mut s = dp_mwis(&h, &fam.pmcs)?;
                s.stats.family_sizes = fam.family_sizes;
                s
            }
            Mode::Paper => {
                let fam = assemble_family(&h, &budget)?;
                let mut s = dp_mwis(&h, &fam.pmcs)?;
                s.stats.family_sizes = fam.family_sizes;
                s
            }
        };
        total.weight += part.weight;
        total.vertices |= part.vertices;
        total.realized &= part.realized;
        total.stats.pmc_count += part.stats.pmc_count;
        merge_sizes(&mut total.stats.family_sizes, &part.stats.family_sizes);
        total.warnings.extend(part.warnings);
    }
    if !g.is_independent(&total.vertices) || g.weight_of(&total.vertices) != total.weight {
        return Err(Error::Invariant("combined solution failed verification".into()));
    }
    total.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::set;

    #[test]
    fn dp_with_all_pmcs() {
        let p4 = Graph::path(4);
        let fam = oracle_family(&p4).unwrap();
        assert_eq!(dp_mwis(&p4, &fam.pmcs).unwrap().weight, 2);
        let w = Graph::path(4).with_weights(&[3, 1, 1, 3]);
        let s = dp_mwis(&w, &fam.pmcs).unwrap();
        assert_eq!((s.weight, s.vertices), (6, set(&[0, 3])));
        let k3 = Graph::complete(3).with_weights(&[2, 7, 5]);
        assert_eq!(dp_mwis(&k3, &oracle_family(&k3).unwrap().pmcs).unwrap().weight, 7);
    }

    #[test]
    fn dp_empty_family_is_unrealized() {
        let s = dp_mwis(&Graph::path(3), &SetFamily::new()).unwrap();
        assert!(!s.realized);
        assert_eq!(s.weight, 0);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_mwis(&Graph::path(4), 24).unwrap().weight, 2);
        assert_eq!(brute_force_mwis(&Graph::cycle(5), 24).unwrap().weight, 2);
        assert_eq!(brute_force_mwis(&Graph::new(3), 24).unwrap().weight, 3);
        assert!(brute_force_mwis(&Graph::new(25), 24).is_err());
        let zero = Graph::path(2).with_weights(&[0, 0]);
        assert_eq!(brute_force_mwis(&zero, 24).unwrap().weight, 0);
    }

    #[test]
    fn maximal_independent_sets() {
        let p3 = Graph::path(3);
        assert_eq!(enumerate_maximal_independent_sets(&p3, 24).unwrap(), vec![set(&[0, 2]), set(&[1])]);
        let c4 = Graph::cycle(4);
        assert_eq!(enumerate_maximal_independent_sets(&c4, 24).unwrap(), vec![set(&[0, 2]), set(&[1, 3])]);
    }

    #[test]
    fn solve_is_additive_over_components() {
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)]);
        for mode in [Mode::Brute, Mode::Oracle, Mode::Paper] {
            assert_eq!(solve(&g, SolveOptions::new(mode)).unwrap().weight, 4);
        }
    }

    #[test]
    fn paper_mode_on_p5() {
        let s = solve(&Graph::path(5), SolveOptions::new(Mode::Paper)).unwrap();
        assert_eq!(s.weight, 3);
        assert!(s.warnings.is_empty());
    }
}
