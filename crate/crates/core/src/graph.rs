//! Bipartite graphs, two-colorings of their edges, and induced-copy
//! certificates.
//!
//! Left vertices are `1..=left_count`. Right vertices are addressed by a
//! 1-based index into the graph's right labels; a label is either an opaque
//! id (equal to the index) or a subset of `[n]` for set-membership graphs.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::subset::Subset;

/// Hard cap on adjacency storage (in 64-bit words) for a single graph.
pub const MAX_ADJACENCY_WORDS: usize = 1 << 27;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::Red, Color::Blue];

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'R' | 'r' => Some(Color::Red),
            'B' | 'b' => Some(Color::Blue),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
        }
    }

    pub(crate) fn index(self) -> usize {
        match self {
            Color::Red => 0,
            Color::Blue => 1,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Identity of a right vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RightLabel {
    /// Opaque id in `1..=right_count`.
    Id(usize),
    /// A subset of `[n]` in a set-membership graph.
    Set(Subset),
}

impl fmt::Display for RightLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RightLabel::Id(id) => write!(f, "{id}"),
            RightLabel::Set(s) => write!(f, "{s}"),
        }
    }
}

impl From<Subset> for RightLabel {
    fn from(s: Subset) -> Self {
        RightLabel::Set(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RightLabels {
    /// Rights are `1..=count` with no further structure.
    Opaque(usize),
    /// Pairwise distinct sets, one per right vertex, in index order.
    Sets(Vec<Subset>),
}

impl RightLabels {
    pub fn len(&self) -> usize {
        match self {
            RightLabels::Opaque(n) => *n,
            RightLabels::Sets(sets) => sets.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Fingerprint tying an [`EdgeColoring`] to the graph it colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphShape {
    pub left_count: usize,
    pub right_count: usize,
    pub edge_count: usize,
    pub digest: u64,
}

#[derive(Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_count: usize,
    labels: RightLabels,
    /// Right-major adjacency rows, `words` u64s each; bit `l - 1` is left `l`.
    adjacency: Vec<u64>,
    words: usize,
    edge_count: usize,
    /// For set labels not already in sorted order: indices sorted by label.
    set_order: Option<Vec<u32>>,
    digest: u64,
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BipartiteGraph")
            .field("left_count", &self.left_count)
            .field("right_count", &self.right_count())
            .field("edge_count", &self.edge_count)
            .finish()
    }
}

impl BipartiteGraph {
    /// Builds a graph from an explicit edge list of `(left, right_index)`
    /// pairs. Duplicate or dangling edges are rejected.
    pub fn new<I>(left_count: usize, labels: RightLabels, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut graph = Self::empty_with(left_count, labels)?;
        for (left, right) in edges {
            graph.check_left(left)?;
            graph.check_right(right)?;
            let (word, bit) = graph.slot(left, right);
            if graph.adjacency[word] & bit != 0 {
                return Err(Error::InvalidGraph(format!("duplicate edge ({left}, {right})")));
            }
            graph.adjacency[word] |= bit;
            graph.edge_count += 1;
        }
        graph.finish();
        Ok(graph)
    }

    /// Builds a graph whose edges are exactly the pairs accepted by `adjacent`.
    pub fn from_fn<F>(left_count: usize, labels: RightLabels, mut adjacent: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut graph = Self::empty_with(left_count, labels)?;
        for right in 1..=graph.right_count() {
            for left in 1..=left_count {
                if adjacent(left, right) {
                    let (word, bit) = graph.slot(left, right);
                    graph.adjacency[word] |= bit;
                    graph.edge_count += 1;
                }
            }
        }
        graph.finish();
        Ok(graph)
    }

    /// Graph with opaque rights `1..=right_count` and the given edges.
    pub fn with_opaque_rights<I>(left_count: usize, right_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(left_count, RightLabels::Opaque(right_count), edges)
    }

    /// Assembles a set-labelled graph directly from precomputed rows.
    pub(crate) fn from_set_rows(left_count: usize, sets: Vec<Subset>, rows: Vec<u64>) -> Result<Self> {
        debug_assert!(left_count <= 64 && rows.len() == sets.len());
        let mut graph = Self::empty_with(left_count, RightLabels::Sets(sets))?;
        let words = graph.words;
        for (r, row) in rows.into_iter().enumerate() {
            if words > 0 {
                graph.adjacency[r * words] = row;
            }
            graph.edge_count += row.count_ones() as usize;
        }
        graph.finish();
        Ok(graph)
    }

    fn empty_with(left_count: usize, labels: RightLabels) -> Result<Self> {
        let words = left_count.div_ceil(64);
        let right_count = labels.len();
        let total = words
            .checked_mul(right_count)
            .filter(|&t| t <= MAX_ADJACENCY_WORDS)
            .ok_or_else(|| {
                Error::InvalidGraph(format!(
                    "{left_count} x {right_count} adjacency exceeds storage limit"
                ))
            })?;
        if let RightLabels::Sets(sets) = &labels {
            if right_count > u32::MAX as usize {
                return Err(Error::InvalidGraph("too many right vertices".into()));
            }
            let mut seen = std::collections::HashSet::with_capacity(sets.len());
            for s in sets {
                if !seen.insert(*s) {
                    return Err(Error::InvalidGraph(format!("right label {{{s}}} repeated")));
                }
            }
        }
        Ok(BipartiteGraph {
            left_count,
            labels,
            adjacency: vec![0; total],
            words,
            edge_count: 0,
            set_order: None,
            digest: 0,
        })
    }

    fn finish(&mut self) {
        if let RightLabels::Sets(sets) = &self.labels {
            if !sets.windows(2).all(|w| w[0] < w[1]) {
                let mut order: Vec<u32> = (0..sets.len() as u32).collect();
                order.sort_by_key(|&i| sets[i as usize]);
                self.set_order = Some(order);
            }
        }
        let mut h = DefaultHasher::new();
        self.left_count.hash(&mut h);
        self.labels.hash(&mut h);
        self.adjacency.hash(&mut h);
        self.digest = h.finish();
    }

    #[inline]
    fn slot(&self, left: usize, right: usize) -> (usize, u64) {
        let l = left - 1;
        ((right - 1) * self.words + l / 64, 1u64 << (l % 64))
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &RightLabels {
        &self.labels
    }

    pub fn shape(&self) -> GraphShape {
        GraphShape {
            left_count: self.left_count,
            right_count: self.right_count(),
            edge_count: self.edge_count,
            digest: self.digest,
        }
    }

    pub fn check_left(&self, left: usize) -> Result<()> {
        if left == 0 || left > self.left_count {
            Err(Error::InvalidGraph(format!(
                "left vertex {left} outside 1..={}",
                self.left_count
            )))
        } else {
            Ok(())
        }
    }

    pub fn check_right(&self, right: usize) -> Result<()> {
        if right == 0 || right > self.right_count() {
            Err(Error::InvalidGraph(format!(
                "right index {right} outside 1..={}",
                self.right_count()
            )))
        } else {
            Ok(())
        }
    }

    /// Whether `(left, right_index)` is an edge. Out-of-range ids are not.
    #[inline]
    pub fn has_edge(&self, left: usize, right: usize) -> bool {
        if left == 0 || left > self.left_count || right == 0 || right > self.right_count() {
            return false;
        }
        let (word, bit) = self.slot(left, right);
        self.adjacency[word] & bit != 0
    }

    /// Left neighbors of a right vertex, ascending.
    pub fn right_neighbors(&self, right: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adjacency[(right - 1) * self.words..right * self.words];
        row.iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b + 1)
            })
        })
    }

    /// Degree of a left vertex.
    pub fn left_degree(&self, left: usize) -> usize {
        (1..=self.right_count()).filter(|&r| self.has_edge(left, r)).count()
    }

    /// All edges as `(left, right_index)`, sorted by right then left.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.right_count()).flat_map(move |r| self.right_neighbors(r).map(move |l| (l, r)))
    }

    pub fn label(&self, right: usize) -> RightLabel {
        match &self.labels {
            RightLabels::Opaque(_) => RightLabel::Id(right),
            RightLabels::Sets(sets) => RightLabel::Set(sets[right - 1]),
        }
    }

    /// Set label of a right vertex, when the graph is set-labelled.
    pub fn set_label(&self, right: usize) -> Option<Subset> {
        match &self.labels {
            RightLabels::Sets(sets) => sets.get(right.wrapping_sub(1)).copied(),
            RightLabels::Opaque(_) => None,
        }
    }

    /// 1-based index of the right vertex carrying `label`.
    pub fn right_index(&self, label: &RightLabel) -> Option<usize> {
        match (&self.labels, label) {
            (RightLabels::Opaque(n), RightLabel::Id(id)) => (1..=*n).contains(id).then_some(*id),
            (RightLabels::Sets(sets), RightLabel::Set(s)) => match &self.set_order {
                None => sets.binary_search(s).ok().map(|i| i + 1),
                Some(order) => order
                    .binary_search_by(|&i| sets[i as usize].cmp(s))
                    .ok()
                    .map(|pos| order[pos] as usize + 1),
            },
            _ => None,
        }
    }

    /// Whether every left is adjacent to every right.
    pub fn is_complete(&self) -> bool {
        self.edge_count == self.left_count * self.right_count()
    }

    /// `Some(k)` when this graph is exactly `B_{n,k}` with `n = left_count`:
    /// every k-subset of `[n]` appears once, in lexicographic order, and
    /// adjacency is membership.
    pub fn set_graph_arity(&self) -> Option<usize> {
        let RightLabels::Sets(sets) = &self.labels else {
            return None;
        };
        let n = self.left_count;
        if n == 0 || n > crate::subset::MAX_ELEMENT || self.set_order.is_some() {
            return None;
        }
        let k = sets.first()?.len();
        let expected = crate::subset::binomial(n as u64, k as u64)?;
        if sets.len() as u64 != expected {
            return None;
        }
        let ground = Subset::prefix(n);
        let consistent = sets
            .iter()
            .enumerate()
            .all(|(r, s)| s.len() == k && s.is_subset_of(ground) && self.adjacency[r] == s.bits());
        consistent.then_some(k)
    }
}

/// A total map from the edges of one graph to {RED, BLUE}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    shape: GraphShape,
    /// Same layout as the graph's adjacency; a set bit means BLUE.
    blue: Vec<u64>,
    words: usize,
}

impl EdgeColoring {
    pub fn constant(graph: &BipartiteGraph, color: Color) -> Self {
        Self::from_fn(graph, |_, _| color)
    }

    /// Colors every edge `(left, right)` with `color(left, right)`.
    pub fn from_fn<F>(graph: &BipartiteGraph, mut color: F) -> Self
    where
        F: FnMut(usize, usize) -> Color,
    {
        let mut blue = vec![0u64; graph.adjacency.len()];
        for (left, right) in graph.edges() {
            if color(left, right) == Color::Blue {
                let (word, bit) = graph.slot(left, right);
                blue[word] |= bit;
            }
        }
        EdgeColoring {
            shape: graph.shape(),
            blue,
            words: graph.words,
        }
    }

    /// Builds a coloring from explicit entries, requiring exactly one entry
    /// per edge.
    pub fn from_entries<I>(graph: &BipartiteGraph, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Color)>,
    {
        let mut blue = vec![0u64; graph.adjacency.len()];
        let mut seen = vec![0u64; graph.adjacency.len()];
        let mut count = 0usize;
        for (left, right, color) in entries {
            if !graph.has_edge(left, right) {
                return Err(Error::InvalidColoring(format!("({left}, {right}) is not an edge")));
            }
            let (word, bit) = graph.slot(left, right);
            if seen[word] & bit != 0 {
                return Err(Error::InvalidColoring(format!("edge ({left}, {right}) colored twice")));
            }
            seen[word] |= bit;
            count += 1;
            if color == Color::Blue {
                blue[word] |= bit;
            }
        }
        if count != graph.edge_count() {
            let (left, right) = graph
                .edges()
                .find(|&(l, r)| {
                    let (word, bit) = graph.slot(l, r);
                    seen[word] & bit == 0
                })
                .expect("an uncolored edge exists");
            return Err(Error::InvalidColoring(format!(
                "coloring is not total: edge ({left}, {right}) has no color ({count} of {} colored)",
                graph.edge_count()
            )));
        }
        Ok(EdgeColoring {
            shape: graph.shape(),
            blue,
            words: graph.words,
        })
    }

    pub fn shape(&self) -> GraphShape {
        self.shape
    }

    pub fn check_matches(&self, graph: &BipartiteGraph) -> Result<()> {
        if self.shape == graph.shape() {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "coloring was built for a {}x{} graph with {} edges, not this {}x{} graph with {} edges",
                self.shape.left_count,
                self.shape.right_count,
                self.shape.edge_count,
                graph.left_count(),
                graph.right_count(),
                graph.edge_count()
            )))
        }
    }

    /// Color of edge `(left, right)`. Only meaningful for actual edges of the
    /// colored graph.
    #[inline]
    pub fn color(&self, left: usize, right: usize) -> Color {
        let l = left - 1;
        let word = (right - 1) * self.words + l / 64;
        if self.blue[word] >> (l % 64) & 1 == 1 {
            Color::Blue
        } else {
            Color::Red
        }
    }

    /// Color of `(left, right)` in `graph`, or `None` for a non-edge.
    pub fn get(&self, graph: &BipartiteGraph, left: usize, right: usize) -> Option<Color> {
        graph.has_edge(left, right).then(|| self.color(left, right))
    }

    /// Entries `(left, right, color)` in the graph's edge order.
    pub fn entries<'a>(&'a self, graph: &'a BipartiteGraph) -> impl Iterator<Item = (usize, usize, Color)> + 'a {
        graph.edges().map(move |(l, r)| (l, r, self.color(l, r)))
    }
}

/// Certificate that `pattern` occurs as an induced (optionally monochromatic)
/// subgraph of a host: pattern left `i` maps to `host_left[i - 1]`, pattern
/// right `j` to the host right labelled `host_right[j - 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedCopyWitness {
    pub pattern: BipartiteGraph,
    pub host_left: Vec<usize>,
    pub host_right: Vec<RightLabel>,
    pub claimed_color: Option<Color>,
}

impl InducedCopyWitness {
    /// Resolves the witness against `host`, returning host right indices.
    /// Fails on wrong lengths, repeats or dangling references.
    pub fn resolve(&self, host: &BipartiteGraph) -> Result<Vec<usize>> {
        let p = &self.pattern;
        if self.host_left.len() != p.left_count() {
            return Err(Error::MalformedWitness(format!(
                "{} host lefts for a pattern with {} lefts",
                self.host_left.len(),
                p.left_count()
            )));
        }
        if self.host_right.len() != p.right_count() {
            return Err(Error::MalformedWitness(format!(
                "{} host rights for a pattern with {} rights",
                self.host_right.len(),
                p.right_count()
            )));
        }
        let mut lefts = BTreeSet::new();
        for &l in &self.host_left {
            if l == 0 || l > host.left_count() {
                return Err(Error::MalformedWitness(format!("host left {l} does not exist")));
            }
            if !lefts.insert(l) {
                return Err(Error::MalformedWitness(format!("host left {l} used twice")));
            }
        }
        let mut rights = Vec::with_capacity(self.host_right.len());
        let mut seen = BTreeSet::new();
        for label in &self.host_right {
            let idx = host
                .right_index(label)
                .ok_or_else(|| Error::MalformedWitness(format!("host right {label} does not exist")))?;
            if !seen.insert(idx) {
                return Err(Error::MalformedWitness(format!("host right {label} used twice")));
            }
            rights.push(idx);
        }
        Ok(rights)
    }
}

/// Checks an induced-copy certificate.
///
/// Returns `Ok(true)` iff adjacency between mapped vertices matches the
/// pattern exactly, and, when both a claimed color and a coloring are given,
/// every mapped host edge has the claimed color. Ill-formed witnesses are
/// errors, not `false`.
pub fn verify_witness(
    host: &BipartiteGraph,
    coloring: Option<&EdgeColoring>,
    witness: &InducedCopyWitness,
) -> Result<bool> {
    let rights = witness.resolve(host)?;
    if let Some(c) = coloring {
        c.check_matches(host)?;
    }
    let pattern = &witness.pattern;
    let claim = coloring.and(witness.claimed_color);
    for (i, &hl) in witness.host_left.iter().enumerate() {
        for (j, &hr) in rights.iter().enumerate() {
            let host_edge = host.has_edge(hl, hr);
            if pattern.has_edge(i + 1, j + 1) != host_edge {
                return Ok(false);
            }
            if let (true, Some(color), Some(coloring)) = (host_edge, claim, coloring) {
                if coloring.color(hl, hr) != color {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The subgraph of `host` on the given vertices, containing every host edge
/// between them.
///
/// Lefts are renumbered `1..` in increasing host order and rights keep host
/// order. Set labels are preserved; opaque ids are positional and therefore
/// renumbered as well.
pub fn induced_subgraph<L, R>(host: &BipartiteGraph, lefts: L, rights: R) -> Result<BipartiteGraph>
where
    L: IntoIterator<Item = usize>,
    R: IntoIterator<Item = RightLabel>,
{
    let mut left_set = BTreeSet::new();
    for l in lefts {
        host.check_left(l)?;
        left_set.insert(l);
    }
    let mut right_set = BTreeSet::new();
    for label in rights {
        let idx = host
            .right_index(&label)
            .ok_or_else(|| Error::InvalidGraph(format!("right vertex {label} not in host")))?;
        right_set.insert(idx);
    }
    let lefts: Vec<usize> = left_set.into_iter().collect();
    let rights: Vec<usize> = right_set.into_iter().collect();
    let labels = match host.labels() {
        RightLabels::Opaque(_) => RightLabels::Opaque(rights.len()),
        RightLabels::Sets(sets) => RightLabels::Sets(rights.iter().map(|&r| sets[r - 1]).collect()),
    };
    BipartiteGraph::from_fn(lefts.len(), labels, |l, r| host.has_edge(lefts[l - 1], rights[r - 1]))
}
