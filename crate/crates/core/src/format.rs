//! Line-oriented text formats.
//!
//! All formats skip blank lines and lines starting with `#`. Sets are written
//! as comma-separated elements (`2,3,4`), or `-` for the empty set.
//!
//! ```text
//! bipartite 3 2          graph header: left count, right count
//! rlabel 1 1,2           optional set label per right (all or none)
//! e 1 1                  edge: left, right index
//!
//! c 1 1 R                coloring entry: left, right index, R|B
//!
//! subsetcoloring 5 2 2   subset coloring header: n, arity, palette
//! sc 1,2 0               value of one subset
//!
//! homogeneous 1,2,3      homogeneous set
//! value 0                optional shared value
//! ```
//!
//! A witness document is a pattern graph followed by a `witness` section
//! with `color R|B`, `wleft <pattern left> <host left>`,
//! `wright <pattern right> <host right>` and optionally
//! `host setgraph <n> <k>` or `host complete <n> <k>`.

use std::fmt::Write;
use std::str::FromStr;

use crate::constructions::{complete_bipartite, set_bipartite};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Color, EdgeColoring, InducedCopyWitness, RightLabel, RightLabels};
use crate::hyper::{HomogeneousSet, SubsetColoring};
use crate::subset::{binomial, lex_rank0, Subset};

/// Adjacency words a parsed graph may allocate (64 MiB).
pub const MAX_PARSED_WORDS: usize = 1 << 23;
/// Subsets a parsed subset coloring may hold.
pub const MAX_PARSED_SUBSETS: u64 = 1 << 24;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty, non-comment lines as `(1-based line number, tokens)`.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        (!line.is_empty() && !line.starts_with('#')).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn number<T: FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found {token:?}")))
}

fn arity(line: usize, tokens: &[&str], n: usize) -> Result<()> {
    if tokens.len() != n {
        return Err(parse_err(
            line,
            format!("{:?} takes {} fields, found {}", tokens[0], n - 1, tokens.len() - 1),
        ));
    }
    Ok(())
}

pub fn parse_set(line: usize, token: &str) -> Result<Subset> {
    if token == "-" {
        return Ok(Subset::EMPTY);
    }
    let elements = token
        .split(',')
        .map(|t| number::<usize>(line, t, "a set element"))
        .collect::<Result<Vec<_>>>()?;
    Subset::from_elements(elements).map_err(|e| parse_err(line, e.to_string()))
}

pub fn format_set(set: Subset) -> String {
    if set.is_empty() {
        "-".into()
    } else {
        set.to_string()
    }
}

fn parse_color(line: usize, token: &str) -> Result<Color> {
    let mut chars = token.chars();
    match (chars.next().and_then(Color::from_char), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(parse_err(line, format!("expected R or B, found {token:?}"))),
    }
}

/// Accumulates graph records; shared by graph files and witness documents.
#[derive(Default)]
struct GraphBuilder {
    header: Option<(usize, usize)>,
    labels: Vec<Option<Subset>>,
    label_count: usize,
    edges: Vec<(usize, usize)>,
    last_line: usize,
}

impl GraphBuilder {
    /// Consumes a graph record; false if the keyword is not a graph keyword.
    fn accept(&mut self, line: usize, tokens: &[&str]) -> Result<bool> {
        self.last_line = line;
        match tokens[0] {
            "bipartite" => {
                arity(line, tokens, 3)?;
                if self.header.is_some() {
                    return Err(parse_err(line, "second bipartite header"));
                }
                let l: usize = number(line, tokens[1], "a left count")?;
                let r: usize = number(line, tokens[2], "a right count")?;
                if l.div_ceil(64).saturating_mul(r) > MAX_PARSED_WORDS || (l == 0 && r > MAX_PARSED_WORDS) {
                    return Err(parse_err(line, format!("graph {l} x {r} is too large")));
                }
                self.header = Some((l, r));
                self.labels = vec![None; r];
            }
            "rlabel" => {
                arity(line, tokens, 3)?;
                let (_, r) = self.require_header(line)?;
                let idx: usize = number(line, tokens[1], "a right index")?;
                if idx == 0 || idx > r {
                    return Err(parse_err(line, format!("right index {idx} out of 1..={r}")));
                }
                let set = parse_set(line, tokens[2])?;
                if self.labels[idx - 1].replace(set).is_some() {
                    return Err(parse_err(line, format!("right {idx} labelled twice")));
                }
                self.label_count += 1;
            }
            "e" => {
                arity(line, tokens, 3)?;
                let (l, r) = self.require_header(line)?;
                let left: usize = number(line, tokens[1], "a left vertex")?;
                let right: usize = number(line, tokens[2], "a right index")?;
                if left == 0 || left > l || right == 0 || right > r {
                    return Err(parse_err(line, format!("edge ({left}, {right}) outside {l} x {r}")));
                }
                self.edges.push((left, right));
            }
            _ => return Ok(false),
        }
        Ok(true)
    }

    fn require_header(&self, line: usize) -> Result<(usize, usize)> {
        self.header
            .ok_or_else(|| parse_err(line, "expected a bipartite header first"))
    }

    fn finish(self) -> Result<BipartiteGraph> {
        let (l, r) = self.require_header(self.last_line)?;
        let labels = match self.label_count {
            0 => RightLabels::Opaque(r),
            n if n == r => RightLabels::Sets(self.labels.into_iter().map(Option::unwrap).collect()),
            n => {
                return Err(parse_err(
                    self.last_line,
                    format!("{n} of {r} rights labelled; label all or none"),
                ))
            }
        };
        BipartiteGraph::new(l, labels, self.edges).map_err(|e| parse_err(self.last_line, e.to_string()))
    }
}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph> {
    let mut builder = GraphBuilder::default();
    for (line, tokens) in records(text) {
        if !builder.accept(line, &tokens)? {
            return Err(parse_err(line, format!("unknown record {:?}", tokens[0])));
        }
    }
    builder.finish()
}

pub fn write_graph(graph: &BipartiteGraph) -> String {
    let mut out = format!("bipartite {} {}\n", graph.left_count(), graph.right_count());
    if let RightLabels::Sets(sets) = graph.labels() {
        for (i, s) in sets.iter().enumerate() {
            writeln!(out, "rlabel {} {}", i + 1, format_set(*s)).unwrap();
        }
    }
    for (l, r) in graph.edges() {
        writeln!(out, "e {l} {r}").unwrap();
    }
    out
}

/// Parses a coloring of `graph`; every edge must be colored exactly once.
pub fn parse_coloring(text: &str, graph: &BipartiteGraph) -> Result<EdgeColoring> {
    let mut entries = Vec::with_capacity(graph.edge_count());
    let mut last = 0;
    for (line, tokens) in records(text) {
        last = line;
        if tokens[0] != "c" {
            return Err(parse_err(line, format!("unknown record {:?}", tokens[0])));
        }
        arity(line, &tokens, 4)?;
        let l: usize = number(line, tokens[1], "a left vertex")?;
        let r: usize = number(line, tokens[2], "a right index")?;
        if !graph.has_edge(l, r) {
            return Err(parse_err(line, format!("({l}, {r}) is not an edge")));
        }
        entries.push((l, r, parse_color(line, tokens[3])?));
    }
    EdgeColoring::from_entries(graph, entries).map_err(|e| parse_err(last, e.to_string()))
}

pub fn write_coloring(graph: &BipartiteGraph, coloring: &EdgeColoring) -> String {
    let mut out = String::new();
    for (l, r, c) in coloring.entries(graph) {
        writeln!(out, "c {l} {r} {c}").unwrap();
    }
    out
}

pub fn parse_subset_coloring(text: &str) -> Result<SubsetColoring> {
    let mut records = records(text);
    let (line, tokens) = records
        .next()
        .ok_or_else(|| parse_err(0, "empty subset coloring"))?;
    if tokens[0] != "subsetcoloring" {
        return Err(parse_err(line, "expected a subsetcoloring header"));
    }
    arity(line, &tokens, 4)?;
    let n: usize = number(line, tokens[1], "n")?;
    let k: usize = number(line, tokens[2], "an arity")?;
    let palette: u64 = number(line, tokens[3], "a palette size")?;
    let total = binomial(n as u64, k as u64)
        .filter(|&t| t <= MAX_PARSED_SUBSETS && n <= 64)
        .ok_or_else(|| parse_err(line, format!("C({n}, {k}) subsets is too many")))?;
    let mut values: Vec<Option<u64>> = vec![None; total as usize];
    let mut last = line;
    for (line, tokens) in records {
        last = line;
        if tokens[0] != "sc" {
            return Err(parse_err(line, format!("unknown record {:?}", tokens[0])));
        }
        arity(line, &tokens, 3)?;
        let set = parse_set(line, tokens[1])?;
        if set.len() != k || set.max().is_some_and(|m| m > n) {
            return Err(parse_err(line, format!("{{{set}}} is not a {k}-subset of [{n}]")));
        }
        let v: u64 = number(line, tokens[2], "a value")?;
        if values[lex_rank0(set, n) as usize].replace(v).is_some() {
            return Err(parse_err(line, format!("{{{set}}} colored twice")));
        }
    }
    let values = values
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| parse_err(last, format!("coloring is not total over the {k}-subsets of [{n}]")))?;
    SubsetColoring::new(n, k, palette, values).map_err(|e| parse_err(last, e.to_string()))
}

pub fn write_subset_coloring(coloring: &SubsetColoring) -> String {
    let mut out = format!(
        "subsetcoloring {} {} {}\n",
        coloring.n(),
        coloring.arity(),
        coloring.palette()
    );
    for (set, v) in coloring.entries() {
        writeln!(out, "sc {} {v}", format_set(set)).unwrap();
    }
    out
}

pub fn parse_homogeneous(text: &str) -> Result<HomogeneousSet> {
    let mut set = None;
    let mut value = None;
    for (line, tokens) in records(text) {
        arity(line, &tokens, 2)?;
        match tokens[0] {
            "homogeneous" if set.is_none() => set = Some(parse_set(line, tokens[1])?),
            "value" if value.is_none() => value = Some(number(line, tokens[1], "a value")?),
            other => return Err(parse_err(line, format!("unexpected record {other:?}"))),
        }
    }
    let set = set.ok_or_else(|| parse_err(0, "missing homogeneous record"))?;
    Ok(HomogeneousSet { set, value })
}

pub fn write_homogeneous(h: &HomogeneousSet) -> String {
    let mut out = format!("homogeneous {}\n", format_set(h.set));
    if let Some(v) = h.value {
        writeln!(out, "value {v}").unwrap();
    }
    out
}

/// A standard host named inside a witness document.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HostSpec {
    SetGraph { n: usize, k: usize },
    Complete { n: usize, k: usize },
}

impl HostSpec {
    pub fn build(self) -> Result<BipartiteGraph> {
        match self {
            HostSpec::SetGraph { n, k } => set_bipartite(n, k),
            HostSpec::Complete { n, k } => {
                if n.div_ceil(64).saturating_mul(k) > MAX_PARSED_WORDS {
                    return Err(Error::InvalidParameter(format!("K_{{{n},{k}}} is too large")));
                }
                complete_bipartite(n, k)
            }
        }
    }
}

/// A parsed witness document. Host rights stay as raw sets until resolved
/// against a host, since `3` is either opaque right 3 or the set `{3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessDocument {
    pub pattern: BipartiteGraph,
    pub claimed_color: Option<Color>,
    pub host_left: Vec<usize>,
    pub host_right: Vec<Subset>,
    pub host: Option<HostSpec>,
}

impl WitnessDocument {
    pub fn resolve(&self, host: &BipartiteGraph) -> Result<InducedCopyWitness> {
        let host_right = self
            .host_right
            .iter()
            .map(|&s| match host.labels() {
                RightLabels::Sets(_) => Ok(RightLabel::Set(s)),
                RightLabels::Opaque(_) => match s.to_vec()[..] {
                    [id] => Ok(RightLabel::Id(id)),
                    _ => Err(Error::MalformedWitness(format!(
                        "host right {{{s}}} is a set but the host has opaque rights"
                    ))),
                },
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(InducedCopyWitness {
            pattern: self.pattern.clone(),
            host_left: self.host_left.clone(),
            host_right,
            claimed_color: self.claimed_color,
        })
    }
}

pub fn parse_witness(text: &str) -> Result<WitnessDocument> {
    let mut builder = GraphBuilder::default();
    let mut in_witness = false;
    let mut color = None;
    let mut host = None;
    let mut lefts: Vec<(usize, usize, usize)> = Vec::new();
    let mut rights: Vec<(usize, usize, Subset)> = Vec::new();
    for (line, tokens) in records(text) {
        if !in_witness {
            if tokens == ["witness"] {
                in_witness = true;
            } else if !builder.accept(line, &tokens)? {
                return Err(parse_err(line, format!("unknown record {:?}", tokens[0])));
            }
            continue;
        }
        match tokens[0] {
            "color" => {
                arity(line, &tokens, 2)?;
                if color.replace(parse_color(line, tokens[1])?).is_some() {
                    return Err(parse_err(line, "color given twice"));
                }
            }
            "wleft" => {
                arity(line, &tokens, 3)?;
                lefts.push((line, number(line, tokens[1], "a pattern left")?, number(line, tokens[2], "a host left")?));
            }
            "wright" => {
                arity(line, &tokens, 3)?;
                rights.push((line, number(line, tokens[1], "a pattern right")?, parse_set(line, tokens[2])?));
            }
            "host" => {
                arity(line, &tokens, 4)?;
                let n = number(line, tokens[2], "n")?;
                let k = number(line, tokens[3], "k")?;
                let parsed = match tokens[1] {
                    "setgraph" => HostSpec::SetGraph { n, k },
                    "complete" => HostSpec::Complete { n, k },
                    other => return Err(parse_err(line, format!("unknown host kind {other:?}"))),
                };
                if host.replace(parsed).is_some() {
                    return Err(parse_err(line, "host given twice"));
                }
            }
            other => return Err(parse_err(line, format!("unknown witness record {other:?}"))),
        }
    }
    if !in_witness {
        return Err(parse_err(builder.last_line, "missing witness section"));
    }
    let pattern = builder.finish()?;
    let host_left = place(lefts, pattern.left_count(), "left")?;
    let host_right = place(rights, pattern.right_count(), "right")?;
    Ok(WitnessDocument {
        pattern,
        claimed_color: color,
        host_left,
        host_right,
        host,
    })
}

/// Orders `(line, pattern index, image)` records by pattern index, requiring
/// each of `1..=count` exactly once.
fn place<T: Copy>(records: Vec<(usize, usize, T)>, count: usize, side: &str) -> Result<Vec<T>> {
    let mut slots: Vec<Option<T>> = vec![None; count];
    let mut last = 0;
    for (line, idx, image) in records {
        last = line;
        if idx == 0 || idx > count {
            return Err(parse_err(line, format!("pattern {side} {idx} out of 1..={count}")));
        }
        if slots[idx - 1].replace(image).is_some() {
            return Err(parse_err(line, format!("pattern {side} {idx} mapped twice")));
        }
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| parse_err(last, format!("pattern {side} {} is unmapped", i + 1))))
        .collect()
}

pub fn write_witness(witness: &InducedCopyWitness, host: Option<HostSpec>) -> String {
    let mut out = write_graph(&witness.pattern);
    out.push_str("witness\n");
    match host {
        Some(HostSpec::SetGraph { n, k }) => writeln!(out, "host setgraph {n} {k}").unwrap(),
        Some(HostSpec::Complete { n, k }) => writeln!(out, "host complete {n} {k}").unwrap(),
        None => {}
    }
    if let Some(c) = witness.claimed_color {
        writeln!(out, "color {c}").unwrap();
    }
    for (i, l) in witness.host_left.iter().enumerate() {
        writeln!(out, "wleft {} {l}", i + 1).unwrap();
    }
    for (j, r) in witness.host_right.iter().enumerate() {
        let token = match r {
            RightLabel::Id(id) => id.to_string(),
            RightLabel::Set(s) => format_set(*s),
        };
        writeln!(out, "wright {} {token}", j + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_witness;

    #[test]
    fn graph_round_trip() {
        let g = set_bipartite(4, 2).unwrap();
        let text = write_graph(&g);
        assert!(text.starts_with("bipartite 4 6\nrlabel 1 1,2\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);

        let opaque = BipartiteGraph::with_opaque_rights(3, 2, [(1, 1), (3, 2)]).unwrap();
        assert_eq!(parse_graph(&write_graph(&opaque)).unwrap(), opaque);
    }

    #[test]
    fn graph_errors_carry_lines() {
        assert_eq!(
            parse_graph("# c\nbipartite 2 2\ne 3 1\n"),
            Err(parse_err(3, "edge (3, 1) outside 2 x 2"))
        );
        assert!(matches!(parse_graph("e 1 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_graph("bipartite 2 2\nrlabel 1 1\n").is_err());
        assert!(parse_graph("bipartite 2 1\ne 1 1\ne 1 1\n").is_err());
        assert!(parse_graph("bipartite 99999999999 99999999999\n").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn coloring_round_trip_and_totality() {
        let g = set_bipartite(4, 2).unwrap();
        let c = EdgeColoring::from_fn(&g, |l, r| if (l + r) % 3 == 0 { Color::Blue } else { Color::Red });
        let text = write_coloring(&g, &c);
        assert_eq!(parse_coloring(&text, &g).unwrap(), c);
        let partial: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
        assert!(matches!(parse_coloring(&partial, &g), Err(Error::Parse { .. })));
        assert!(parse_coloring("c 1 1 G\n", &g).is_err());
    }

    #[test]
    fn subset_coloring_round_trip() {
        let c = SubsetColoring::from_fn(5, 2, 3, |s| s.bits() % 3).unwrap();
        assert_eq!(parse_subset_coloring(&write_subset_coloring(&c)).unwrap(), c);
        assert!(parse_subset_coloring("subsetcoloring 3 2 2\nsc 1,2 0\n").is_err());
        assert!(parse_subset_coloring("subsetcoloring 3 2 2\nsc 1,2 0\nsc 1,3 0\nsc 2,3 2\n").is_err());
        assert!(parse_subset_coloring("subsetcoloring 7 144444444444444 740\n").is_err());
    }

    #[test]
    fn homogeneous_round_trip() {
        let h = HomogeneousSet {
            set: Subset::prefix(9),
            value: Some(4),
        };
        assert_eq!(parse_homogeneous(&write_homogeneous(&h)).unwrap(), h);
        assert!(parse_homogeneous("value 1\n").is_err());
    }

    #[test]
    fn witness_round_trip_against_both_host_kinds() {
        let host = BipartiteGraph::with_opaque_rights(3, 3, [(1, 1), (1, 2), (1, 3), (2, 2), (3, 1), (3, 2), (3, 3)])
            .unwrap();
        let coloring = EdgeColoring::from_fn(&host, |_, r| if r == 3 { Color::Red } else { Color::Blue });
        let w = InducedCopyWitness {
            pattern: BipartiteGraph::with_opaque_rights(3, 2, [(1, 1), (1, 2), (2, 2), (3, 1), (3, 2)]).unwrap(),
            host_left: vec![1, 2, 3],
            host_right: vec![RightLabel::Id(1), RightLabel::Id(2)],
            claimed_color: Some(Color::Blue),
        };
        let doc = parse_witness(&write_witness(&w, None)).unwrap();
        let back = doc.resolve(&host).unwrap();
        assert_eq!(back, w);
        assert_eq!(verify_witness(&host, Some(&coloring), &back), Ok(true));

        let text = "bipartite 1 1\ne 1 1\nwitness\nhost setgraph 4 2\ncolor R\nwleft 1 2\nwright 1 2,3\n";
        let doc = parse_witness(text).unwrap();
        assert_eq!(doc.host, Some(HostSpec::SetGraph { n: 4, k: 2 }));
        let host = doc.host.unwrap().build().unwrap();
        let w = doc.resolve(&host).unwrap();
        assert_eq!(verify_witness(&host, None, &w), Ok(true));
        assert!(doc.resolve(&complete_bipartite(4, 4).unwrap()).is_err());
    }

    #[test]
    fn witness_errors() {
        assert!(parse_witness("bipartite 1 1\n").is_err());
        assert!(parse_witness("bipartite 1 1\nwitness\nwleft 1 1\n").is_err());
        assert!(parse_witness("bipartite 1 1\nwitness\nwleft 1 1\nwleft 1 2\nwright 1 1\n").is_err());
        assert!(parse_witness("bipartite 1 1\nwitness\nwleft 2 1\nwright 1 1\n").is_err());
    }
}
