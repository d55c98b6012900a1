//! Graphviz export in the style of hand-drawn bipartite figures: lefts in one
//! column, rights in another, edges red/blue when colored and black when not.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::Result;
use crate::graph::{BipartiteGraph, EdgeColoring, InducedCopyWitness, RightLabel};

/// Renders `graph` as DOT. Witness vertices and the edges between them are
/// drawn bold; with a witness present, all other edges are dotted.
pub fn export_dot(
    graph: &BipartiteGraph,
    coloring: Option<&EdgeColoring>,
    witness: Option<&InducedCopyWitness>,
) -> Result<String> {
    if let Some(c) = coloring {
        c.check_matches(graph)?;
    }
    let (lefts, rights): (BTreeSet<usize>, BTreeSet<usize>) = match witness {
        Some(w) => (w.host_left.iter().copied().collect(), w.resolve(graph)?.into_iter().collect()),
        None => Default::default(),
    };

    let mut out = String::new();
    out.push_str("graph bipartite {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=circle];\n");

    out.push_str("  subgraph left {\n    rank=same;\n");
    for l in 1..=graph.left_count() {
        let bold = if lefts.contains(&l) { ", style=bold, penwidth=2" } else { "" };
        writeln!(out, "    l{l} [label=\"{l}\"{bold}];").unwrap();
    }
    out.push_str("  }\n");

    out.push_str("  subgraph right {\n    rank=same;\n");
    for r in 1..=graph.right_count() {
        let label = match graph.label(r) {
            RightLabel::Id(id) => id.to_string(),
            RightLabel::Set(s) => s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "),
        };
        let bold = if rights.contains(&r) { ", style=bold, penwidth=2" } else { "" };
        writeln!(out, "    r{r} [label=\"{label}\"{bold}];").unwrap();
    }
    out.push_str("  }\n");

    for (l, r) in graph.edges() {
        let color = coloring.map_or("black", |c| c.color(l, r).name());
        let style = match witness {
            Some(_) if lefts.contains(&l) && rights.contains(&r) => ", penwidth=2",
            Some(_) => ", style=dotted",
            None => "",
        };
        writeln!(out, "  l{l} -- r{r} [color={color}{style}];").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
