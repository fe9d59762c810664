use clap::{Parser, Subcommand, ValueEnum};
use p6mwis::capture::{
    family_mesh_fuzzy_nonmesh, family_all_but_one, family_nonmesh_pair, family_merged_meshes, family_one_in_three,
    family_summary, family_two_not_whole, hidden_families,
};
use p6mwis::gen::{gen_cograph, gen_rejection_p6free, gen_split, random_weights};
use p6mwis::graph::{enumerate_minimal_separators_exhaustive, find_induced_path, SEPARATOR_GUARD};
use p6mwis::io::{emit_graph, parse_graph, solution_json};
use p6mwis::pmc::{enumerate_all_pmcs_exhaustive, PMC_GUARD};
use p6mwis::segments::{segment_bags, closed_nbhd_cliques, segment_family, split_pairs, separator_family};
use p6mwis::solver::{assemble_family, solve, Mode, SolveOptions, DEFAULT_BUDGET};
use p6mwis::{Budget, Error, Graph, SetFamily, VertexSet};
use serde_json::json;
use std::io::{Read, Write};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "p6mwis", version, about = "Exact maximum weight independent set on P6-free graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve MWIS and print a JSON report.
    Solve {
        #[arg(long)]
        input: String,
        #[arg(long, default_value = "paper")]
        mode: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Warn when the input contains an induced P6.
        #[arg(long)]
        validate_p6: bool,
    },
    /// Dump one candidate family as JSON.
    Families {
        #[arg(long)]
        input: String,
        #[arg(long)]
        lemma: FamilyKind,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Report an induced P6 if there is one.
    CheckP6 {
        #[arg(long)]
        input: String,
    },
    /// Print a random P6-free graph.
    Gen {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.4)]
        p: f64,
        /// Draw weights uniformly from 1..=MAX_WEIGHT.
        #[arg(long)]
        max_weight: Option<u64>,
    },
    /// Exhaustive reference enumerations.
    Oracle {
        what: OracleKind,
        #[arg(long)]
        input: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    TwoNotWhole,
    OneInThree,
    NonmeshPair,
    MeshFuzzyNonmesh,
    AllButOne,
    MergedMeshes,
    Summary,
    HiddenSeparators,
    Hidden,
    ClosedNbhdCliques,
    Separators,
    Segments,
    Complete,
    Splits,
    Candidates,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cograph,
    Split,
    Reject,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Pmcs,
    Seps,
}

fn read_graph(path: &str) -> Result<Graph, Error> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Error::Parse { line: 0, msg: format!("cannot read {path}: {e}") })?;
    parse_graph(&text)
}

fn ids(s: &VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

fn dump(name: &str, fam: &SetFamily) -> serde_json::Value {
    let sets: Vec<_> = fam.sorted().iter().map(ids).collect();
    json!({ "family": name, "count": fam.len(), "sets": sets })
}

fn families(g: &Graph, lemma: FamilyKind, budget: u64) -> Result<serde_json::Value, Error> {
    let b = Budget::new(budget);
    Ok(match lemma {
        FamilyKind::TwoNotWhole => dump("two-not-whole", &family_two_not_whole(g)),
        FamilyKind::OneInThree => dump("one-in-three", &family_one_in_three(g)),
        FamilyKind::NonmeshPair => dump("nonmesh-pair", &family_nonmesh_pair(g)),
        FamilyKind::MeshFuzzyNonmesh => dump("mesh-fuzzy-nonmesh", &family_mesh_fuzzy_nonmesh(g)),
        FamilyKind::AllButOne => dump("all-but-one", &family_all_but_one(g, None, &family_one_in_three(g), &b)?),
        FamilyKind::MergedMeshes => dump("merged-meshes", &family_merged_meshes(g, None)),
        FamilyKind::Summary => dump("summary", &family_summary(g, None, &b)?.pmcs),
        FamilyKind::HiddenSeparators => dump("hidden-separators", &hidden_families(g).0),
        FamilyKind::Hidden => dump("hidden", &hidden_families(g).1),
        FamilyKind::ClosedNbhdCliques => dump("closed-nbhd-cliques", &closed_nbhd_cliques(g)?),
        FamilyKind::Separators => dump("separators", &separator_family(g, None)?.seps),
        FamilyKind::Segments => dump("segments", &segment_family(g, None, &separator_family(g, None)?.comps, &b)?),
        FamilyKind::Complete => {
            let segments = segment_family(g, None, &separator_family(g, None)?.comps, &b)?;
            dump("complete", &segment_bags(g, &segments)?)
        }
        FamilyKind::Splits => {
            let pairs: Vec<_> = split_pairs(g).iter().map(|p| json!([ids(&p.z1), ids(&p.z2)])).collect();
            json!({ "family": "splits", "count": pairs.len(), "sets": pairs })
        }
        FamilyKind::Candidates => dump("candidates", &assemble_family(g, &b)?.pmcs),
    })
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.cmd {
        Cmd::Solve { input, mode, budget, validate_p6 } => {
            let g = read_graph(&input)?;
            let mode: Mode = mode.parse()?;
            let sol = solve(&g, SolveOptions { mode, budget, validate_p6 })?;
            Ok(solution_json(&sol))
        }
        Cmd::Families { input, lemma, budget } => {
            let g = read_graph(&input)?;
            Ok(serde_json::to_string_pretty(&families(&g, lemma, budget)?).unwrap())
        }
        Cmd::CheckP6 { input } => {
            let g = read_graph(&input)?;
            let path = find_induced_path(&g, 6);
            let witness = path.as_ref().map(|p| p.iter().map(|v| v + 1).collect::<Vec<_>>());
            Ok(json!({ "p6_free": path.is_none(), "witness": witness }).to_string())
        }
        Cmd::Gen { kind, n, seed, p, max_weight } => {
            let g = match kind {
                Kind::Cograph => gen_cograph(seed, n),
                Kind::Split => gen_split(seed, n, p),
                Kind::Reject => gen_rejection_p6free(seed, n, p)?,
            };
            let g = match max_weight {
                Some(m) => random_weights(seed, &g, m.max(1)),
                None => g,
            };
            Ok(emit_graph(&g).trim_end().to_string())
        }
        Cmd::Oracle { what, input } => {
            let g = read_graph(&input)?;
            let fam = match what {
                OracleKind::Pmcs => enumerate_all_pmcs_exhaustive(&g, PMC_GUARD)?,
                OracleKind::Seps => {
                    SetFamily::from_sets(enumerate_minimal_separators_exhaustive(&g, SEPARATOR_GUARD)?, "oracle")
                }
            };
            let name = match what {
                OracleKind::Pmcs => "pmcs",
                OracleKind::Seps => "seps",
            };
            Ok(serde_json::to_string_pretty(&dump(name, &fam)).unwrap())
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::GuardExceeded { .. } | Error::Budget(_) => 3,
        _ => 4,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
