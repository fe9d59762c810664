use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::solver::{Solution, Stats};
use serde::Serialize;

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    tok.ok_or_else(|| err(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| err(line, format!("bad {what}")))
}

/// Parses `p <n> <m>` (or `p edge <n> <m>`), `w <v> <weight>`, `e <u> <v>` and `c` lines.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    let mut header = (0, 0);
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_ascii_whitespace();
        let Some(kind) = toks.next() else { continue };
        match kind {
            "c" => continue,
            "p" => {
                if g.is_some() {
                    return Err(err(line, "duplicate header"));
                }
                let mut first = toks.next();
                if first.is_some_and(|t| t.parse::<usize>().is_err()) {
                    first = toks.next();
                }
                let n: usize = num(first, line, "vertex count")?;
                let m: usize = num(toks.next(), line, "edge count")?;
                if n > MAX_VERTICES {
                    return Err(err(line, format!("at most {MAX_VERTICES} vertices are supported")));
                }
                g = Some(Graph::new(n));
                header = (line, m);
            }
            "e" | "w" => {
                let gr = g.as_mut().ok_or_else(|| err(line, "header must come first"))?;
                let u: usize = num(toks.next(), line, "vertex")?;
                if u == 0 || u > gr.n() {
                    return Err(err(line, format!("vertex {u} out of range")));
                }
                if kind == "w" {
                    let w: u64 = num(toks.next(), line, "weight")?;
                    gr.set_weight(u - 1, w);
                } else {
                    let v: usize = num(toks.next(), line, "vertex")?;
                    if v == 0 || v > gr.n() {
                        return Err(err(line, format!("vertex {v} out of range")));
                    }
                    if u == v {
                        return Err(err(line, "self loop"));
                    }
                    if gr.has_edge(u - 1, v - 1) {
                        return Err(err(line, "duplicate edge"));
                    }
                    gr.add_edge(u - 1, v - 1);
                }
            }
            other => return Err(err(line, format!("unknown line type {other:?}"))),
        }
        if toks.next().is_some() {
            return Err(err(line, "trailing tokens"));
        }
    }
    let g = g.ok_or_else(|| err(0, "missing header"))?;
    if g.edge_count() != header.1 {
        return Err(err(header.0, format!("header announces {} edges, found {}", header.1, g.edge_count())));
    }
    Ok(g)
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    for v in 0..g.n() {
        if g.weight(v) != 1 {
            out.push_str(&format!("w {} {}\n", v + 1, g.weight(v)));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[derive(Serialize)]
pub struct SolutionReport<'a> {
    pub weight: u64,
    pub solution: Vec<usize>,
    pub mode: String,
    pub stats: &'a Stats,
    pub warnings: &'a [String],
}

pub fn solution_json(sol: &Solution) -> String {
    let report = SolutionReport {
        weight: sol.weight,
        solution: sol.vertices.iter().map(|v| v + 1).collect(),
        mode: sol.mode.to_string(),
        stats: &sol.stats,
        warnings: &sol.warnings,
    };
    serde_json::to_string_pretty(&report).expect("report serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::path(4).with_weights(&[3, 1, 1, 5]);
        let text = emit_graph(&g);
        let h = parse_graph(&text).unwrap();
        assert_eq!(h.edges(), g.edges());
        assert_eq!(h.weights(), g.weights());
        assert_eq!(emit_graph(&h), text);
    }

    #[test]
    fn dimacs_header_and_comments() {
        let g = parse_graph("c hello\np edge 3 2\ne 1 2\n\ne 2 3\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("e 1 2\n", 1),
            ("p 3 1\ne 1 1\n", 2),
            ("p 3 2\ne 1 2\ne 2 1\n", 3),
            ("p 3 1\ne 1 4\n", 2),
            ("p 3 2\ne 1 2\n", 1),
            ("p 3 0\nw 2 x\n", 2),
            ("p 3 0\nq\n", 2),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }
}
