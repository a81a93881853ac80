//! Line-oriented text format:
//!
//! ```text
//! layered-graph v1
//! height <n>
//! vertex <name> <level>
//! edge <tail> <head>
//! distinguished <tail> <head>
//! ```
//!
//! `distinguished` lines are optional; a vertex without one uses the edge
//! to the least head name.
//!
//! Blank lines are ignored and `#` starts a comment.

use std::fmt::Write;

use crate::error::{Error, Result};

use super::{GraphBuilder, LayeredGraph};

const HEADER: &str = "layered-graph v1";

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses and validates a graph.
pub fn parse(text: &str) -> Result<LayeredGraph> {
    let g = parse_unvalidated(text)?;
    let v = g.validate();
    if v.is_empty() {
        Ok(g)
    } else {
        Err(Error::InvalidGraph(v))
    }
}

/// Parses a graph without checking the layering hypotheses. Syntax errors,
/// duplicate vertices and edges naming unknown vertices are still errors.
pub fn parse_unvalidated(text: &str) -> Result<LayeredGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    match lines.next() {
        Some((_, HEADER)) => {}
        Some((n, other)) => return Err(perr(n, format!("expected `{HEADER}`, found `{other}`"))),
        None => return Err(perr(0, "empty input")),
    }
    let mut builder: Option<GraphBuilder> = None;
    for (n, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["height", h] => {
                if builder.is_some() {
                    return Err(perr(n, "height given twice"));
                }
                let h = h
                    .parse()
                    .map_err(|_| perr(n, format!("bad height `{h}`")))?;
                builder = Some(GraphBuilder::new(h));
            }
            ["vertex", name, level] => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| perr(n, "vertex before height"))?;
                let level = level
                    .parse()
                    .map_err(|_| perr(n, format!("bad level `{level}`")))?;
                b.vertex(name, level).map_err(|e| perr(n, e.to_string()))?;
            }
            ["edge", tail, head] => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| perr(n, "edge before height"))?;
                b.edge_by_name(tail, head)
                    .map_err(|e| perr(n, e.to_string()))?;
            }
            ["distinguished", tail, head] => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| perr(n, "distinguished before height"))?;
                b.distinguish_by_name(tail, head)
                    .map_err(|e| perr(n, e.to_string()))?;
            }
            _ => return Err(perr(n, format!("unrecognized line `{line}`"))),
        }
    }
    let b = builder.ok_or_else(|| perr(0, "missing height line"))?;
    Ok(b.build_unvalidated())
}

/// Canonical serialization: vertices in canonical order, edges by
/// `(tail, head)`, then distinguished edges that differ from the default.
pub fn to_text(g: &LayeredGraph) -> String {
    let mut s = String::new();
    writeln!(s, "{HEADER}").unwrap();
    writeln!(s, "height {}", g.height()).unwrap();
    for v in g.vertices() {
        writeln!(s, "vertex {} {}", g.name(v), g.level(v)).unwrap();
    }
    for e in g.edges() {
        let e = g.edge(e);
        writeln!(s, "edge {} {}", g.name(e.tail), g.name(e.head)).unwrap();
    }
    for v in g.vertices() {
        let Some(d) = g.distinguished(v) else {
            continue;
        };
        let head = g.name(g.edge(d).head);
        let default = g.out_edges(v).iter().map(|&e| g.name(g.edge(e).head)).min();
        if default != Some(head) {
            writeln!(s, "distinguished {} {head}", g.name(v)).unwrap();
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{chain, hypercube, non_uniform_witness, Violation};

    #[test]
    fn round_trip_is_exact() {
        for g in [
            hypercube(3).unwrap(),
            chain(4).unwrap(),
            non_uniform_witness(),
        ] {
            let t = to_text(&g);
            let g2 = parse(&t).unwrap();
            assert_eq!(to_text(&g2), t);
            assert_eq!(g2, g);
        }
    }

    #[test]
    fn hypercube_text() {
        let t = to_text(&hypercube(2).unwrap());
        assert_eq!(
            t,
            "layered-graph v1\nheight 2\nvertex {1,2} 2\nvertex {1} 1\nvertex {2} 1\nvertex * 0\n\
             edge {1,2} {1}\nedge {1,2} {2}\nedge {1} *\nedge {2} *\ndistinguished {1,2} {2}\n"
        );
    }

    #[test]
    fn comments_and_blank_lines() {
        let t = "# a chain\nlayered-graph v1\n\nheight 1 # one level\nvertex * 0\nvertex a 1\nedge a *\n";
        let g = parse(t).unwrap();
        assert_eq!(g.num_vertices(), 2);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let bad = "layered-graph v1\nheight 1\nvertex * 0\nvertx a 1\n";
        assert!(matches!(parse(bad), Err(Error::Parse { line: 4, .. })));
        let unknown = "layered-graph v1\nheight 1\nvertex * 0\nedge a *\n";
        assert!(matches!(parse(unknown), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(
            parse("graph\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse("").is_err());
    }

    #[test]
    fn invalid_graphs_are_rejected_but_inspectable() {
        let t =
            "layered-graph v1\nheight 2\nvertex * 0\nvertex a 1\nvertex t 2\nedge a *\nedge t *\n";
        assert!(matches!(parse(t), Err(Error::InvalidGraph(_))));
        let g = parse_unvalidated(t).unwrap();
        assert!(matches!(g.validate()[0], Violation::LevelGap { .. }));
    }
}
