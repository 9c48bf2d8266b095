//! The line-oriented digraph file format.
//!
//! ```text
//! # comment
//! digraph example
//! vertices 3
//! arc a1 1 2 tau=1 upsilon=1/2
//! arc a2 2 1
//! inverse a1 a2
//! ```
//!
//! Undirected files use `graph <name>` and `edge <u> <v>` lines instead.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use ihara_core::algebra::{parse_rational, render_rational};
use ihara_core::digraph::{canonical_inverse_pairing, GraphError, InversePairing};
use ihara_core::{Digraph, Rational, UndirectedGraph, WeightScheme};
use num_traits::One;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FileKind {
    Digraph,
    Graph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcLine {
    pub line: usize,
    pub id: String,
    pub tail: usize,
    pub head: usize,
    pub tau: Option<Rational>,
    pub upsilon: Option<Rational>,
}

/// Parsed but not yet validated against the core model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigraphFile {
    pub kind: FileKind,
    pub name: Option<String>,
    pub vertices: usize,
    pub arcs: Vec<ArcLine>,
    /// `(line, id, id)`
    pub inverses: Vec<(usize, String, String)>,
    pub edges: Vec<(usize, usize)>,
}

fn parse_count(line: usize, what: &str, s: &str) -> Result<usize, ParseError> {
    s.parse().map_err(|_| {
        syntax(
            line,
            format!("{what} must be a non-negative integer, got `{s}`"),
        )
    })
}

fn parse_vertex(line: usize, s: &str, vertices: Option<usize>) -> Result<usize, ParseError> {
    let v = parse_count(line, "vertex", s)?;
    match vertices {
        None => Err(syntax(line, "`vertices` must come before arcs and edges")),
        Some(n) if v == 0 || v > n => Err(syntax(line, format!("vertex {v} is not in 1..={n}"))),
        Some(_) => Ok(v),
    }
}

/// Parses the text of a digraph or graph file. Every error carries its line number.
pub fn parse_digraph_file(text: &str) -> Result<DigraphFile, ParseError> {
    let mut kind = None;
    let mut name = None;
    let mut vertices = None;
    let mut arcs: Vec<ArcLine> = Vec::new();
    let mut arc_index: HashMap<String, usize> = HashMap::new();
    let mut inverses = Vec::new();
    let mut paired: HashSet<String> = HashSet::new();
    let mut edges = Vec::new();
    let mut set_kind = |line: usize, k: FileKind| -> Result<(), ParseError> {
        match &kind {
            Some(existing) if *existing != k => Err(syntax(
                line,
                "cannot mix digraph (arc/inverse) and graph (edge) lines",
            )),
            _ => {
                kind = Some(k);
                Ok(())
            }
        }
    };

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = content.split_whitespace().collect();
        let Some((&directive, args)) = words.split_first() else {
            continue;
        };
        match directive {
            "digraph" | "graph" => {
                if args.len() > 1 {
                    return Err(syntax(
                        line,
                        format!("`{directive}` takes at most one name"),
                    ));
                }
                if name.is_some() {
                    return Err(syntax(line, "duplicate header"));
                }
                let k = if directive == "digraph" {
                    FileKind::Digraph
                } else {
                    FileKind::Graph
                };
                set_kind(line, k)?;
                name = Some(args.first().copied().unwrap_or("").to_string());
            }
            "vertices" => {
                let [n] = args else {
                    return Err(syntax(line, "usage: vertices <n>"));
                };
                if vertices.is_some() {
                    return Err(syntax(line, "duplicate `vertices` line"));
                }
                vertices = Some(parse_count(line, "vertex count", n)?);
            }
            "arc" => {
                set_kind(line, FileKind::Digraph)?;
                if !(3..=5).contains(&args.len()) {
                    return Err(syntax(
                        line,
                        "usage: arc <id> <tail> <head> [tau=<rat>] [upsilon=<rat>]",
                    ));
                }
                let id = args[0].to_string();
                if arc_index.contains_key(&id) {
                    return Err(syntax(line, format!("duplicate arc id `{id}`")));
                }
                let tail = parse_vertex(line, args[1], vertices)?;
                let head = parse_vertex(line, args[2], vertices)?;
                let (mut tau, mut upsilon) = (None, None);
                for opt in &args[3..] {
                    let (key, value) = opt
                        .split_once('=')
                        .ok_or_else(|| syntax(line, format!("expected key=value, got `{opt}`")))?;
                    let slot = match key {
                        "tau" => &mut tau,
                        "upsilon" => &mut upsilon,
                        _ => return Err(syntax(line, format!("unknown arc option `{key}`"))),
                    };
                    if slot.is_some() {
                        return Err(syntax(line, format!("`{key}` given twice")));
                    }
                    *slot = Some(parse_rational(value).map_err(|e| syntax(line, e.to_string()))?);
                }
                arc_index.insert(id.clone(), arcs.len());
                arcs.push(ArcLine {
                    line,
                    id,
                    tail,
                    head,
                    tau,
                    upsilon,
                });
            }
            "inverse" => {
                set_kind(line, FileKind::Digraph)?;
                let [a, b] = args else {
                    return Err(syntax(line, "usage: inverse <id> <id>"));
                };
                let lookup = |id: &str| {
                    arc_index
                        .get(id)
                        .map(|&k| &arcs[k])
                        .ok_or_else(|| syntax(line, format!("unknown arc `{id}`")))
                };
                let (x, y) = (lookup(a)?, lookup(b)?);
                if (x.tail, x.head) != (y.head, y.tail) {
                    return Err(syntax(
                        line,
                        format!(
                            "inverse must join opposite arcs: {a} is {}->{}, {b} is {}->{}",
                            x.tail, x.head, y.tail, y.head
                        ),
                    ));
                }
                if a == b {
                    // a loop's self-inverse declaration is redundant
                    continue;
                }
                if x.tail == x.head {
                    return Err(syntax(line, format!("loop `{a}` is its own inverse")));
                }
                for id in [a, b] {
                    if !paired.insert(id.to_string()) {
                        return Err(syntax(line, format!("arc `{id}` already has an inverse")));
                    }
                }
                inverses.push((line, a.to_string(), b.to_string()));
            }
            "edge" => {
                set_kind(line, FileKind::Graph)?;
                let [u, v] = args else {
                    return Err(syntax(line, "usage: edge <u> <v>"));
                };
                edges.push((
                    parse_vertex(line, u, vertices)?,
                    parse_vertex(line, v, vertices)?,
                ));
            }
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }

    Ok(DigraphFile {
        kind: kind.unwrap_or(FileKind::Digraph),
        name,
        vertices: vertices
            .ok_or_else(|| syntax(text.lines().count().max(1), "missing `vertices` line"))?,
        arcs,
        inverses,
        edges,
    })
}

impl DigraphFile {
    pub fn digraph(&self) -> Result<Digraph, ParseError> {
        Ok(Digraph::new(
            self.vertices,
            self.arcs.iter().map(|a| (a.id.as_str(), a.tail, a.head)),
        )?)
    }

    /// The file's pairing completed by the canonical rule.
    pub fn pairing(&self, d: &Digraph) -> Result<InversePairing, ParseError> {
        let pairs: Vec<(&str, &str)> = self
            .inverses
            .iter()
            .map(|(_, a, b)| (a.as_str(), b.as_str()))
            .collect();
        Ok(canonical_inverse_pairing(d, &pairs)?)
    }

    /// Weights written in the file; anything unspecified is 1.
    pub fn weights(&self, d: &Digraph) -> WeightScheme {
        WeightScheme::from_fn(d, |i| {
            let a = &self.arcs[i];
            (
                a.tau.clone().unwrap_or_else(Rational::one),
                a.upsilon.clone().unwrap_or_else(Rational::one),
            )
        })
    }

    pub fn undirected(&self) -> Result<UndirectedGraph, ParseError> {
        if self.kind != FileKind::Graph {
            return Err(syntax(
                1,
                "expected an undirected file (`graph` header and `edge` lines)",
            ));
        }
        Ok(UndirectedGraph::new(self.vertices, self.edges.clone())?)
    }
}

/// Renders a digraph in the file format. Weights equal to 1 are omitted.
pub fn write_digraph_file(
    name: Option<&str>,
    d: &Digraph,
    p: &InversePairing,
    w: Option<&WeightScheme>,
) -> String {
    let mut out = String::new();
    match name {
        Some(n) if !n.is_empty() => writeln!(out, "digraph {n}").unwrap(),
        _ => writeln!(out, "digraph").unwrap(),
    }
    writeln!(out, "vertices {}", d.vertex_count()).unwrap();
    for (i, a) in d.arcs().iter().enumerate() {
        write!(out, "arc {} {} {}", a.id, a.tail, a.head).unwrap();
        if let Some(w) = w {
            if !w.tau(i).is_one() {
                write!(out, " tau={}", render_rational(w.tau(i))).unwrap();
            }
            if !w.upsilon(i).is_one() {
                write!(out, " upsilon={}", render_rational(w.upsilon(i))).unwrap();
            }
        }
        out.push('\n');
    }
    for (a, b) in p.id_pairs(d) {
        writeln!(out, "inverse {a} {b}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "\
digraph example
vertices 3
arc a1 1 2
arc a2 2 1
arc a3 2 1
arc a4 2 3
arc a5 3 2
arc a6 3 1
arc a7 1 1
arc a8 1 1
inverse a1 a2
inverse a4 a5
";

    #[test]
    fn parses_example() {
        let f = parse_digraph_file(EXAMPLE).unwrap();
        assert_eq!(f.name.as_deref(), Some("example"));
        assert_eq!(f.arcs.len(), 8);
        assert_eq!(f.inverses.len(), 2);
        let d = f.digraph().unwrap();
        assert_eq!(d.arcs_between(2, 1).len(), 2);
        let p = f.pairing(&d).unwrap();
        assert_eq!(p.inverse_of(0), Some(1));
        assert_eq!(p.inverse_of(6), Some(6));
    }

    #[test]
    fn same_direction_inverse_is_rejected() {
        let text = "vertices 2\narc a1 1 2\narc a3 1 2\ninverse a1 a3\n";
        let err = parse_digraph_file(text).unwrap_err();
        assert!(
            err.to_string()
                .starts_with("line 4: inverse must join opposite arcs"),
            "{err}"
        );
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("vertices 2\n\narc a 1 3\n", "line 3:"),
            ("vertices 2\narc a 1 2 tau=1/0\n", "line 2:"),
            ("vertices x\n", "line 1:"),
            ("vertices 2\nfoo\n", "line 2: unknown directive"),
            (
                "vertices 2\narc a 1 2\ninverse a b\n",
                "line 3: unknown arc `b`",
            ),
            ("arc a 1 2\n", "line 1:"),
            ("vertices 2\narc a 1 2\narc a 2 1\n", "line 3: duplicate"),
            ("vertices 2\narc a 1 2\nedge 1 2\n", "line 3: cannot mix"),
            (
                "vertices 2\narc a 1 2\narc b 2 1\narc c 2 1\ninverse a b\ninverse a c\n",
                "line 6: arc `a` already",
            ),
        ];
        for (text, prefix) in cases {
            let err = parse_digraph_file(text).unwrap_err().to_string();
            assert!(err.starts_with(prefix), "{text:?}: {err}");
        }
    }

    #[test]
    fn empty_file_with_vertices_has_no_arcs() {
        let f = parse_digraph_file("# nothing\nvertices 1\n").unwrap();
        assert!(f.digraph().unwrap().arcs().is_empty());
    }

    #[test]
    fn weights_default_to_one() {
        let f = parse_digraph_file("vertices 1\narc l 1 1 tau=2 upsilon=1/2\narc m 1 1\n").unwrap();
        let d = f.digraph().unwrap();
        let w = f.weights(&d);
        assert_eq!(w.tau(0), &Rational::from_integer(2.into()));
        assert_eq!(w.upsilon(0), &Rational::new(1.into(), 2.into()));
        assert!(w.tau(1).is_one() && w.upsilon(1).is_one());
    }

    #[test]
    fn write_then_parse_round_trips() {
        let f = parse_digraph_file(EXAMPLE).unwrap();
        let d = f.digraph().unwrap();
        let p = f.pairing(&d).unwrap();
        let text = write_digraph_file(f.name.as_deref(), &d, &p, Some(&f.weights(&d)));
        let g = parse_digraph_file(&text).unwrap();
        assert_eq!(g.digraph().unwrap(), d);
        assert_eq!(g.pairing(&d).unwrap(), p);
    }
}
