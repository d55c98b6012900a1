//! Builders for `K_{n,k}` and `B_{n,k}`, and the embedding of an arbitrary
//! bipartite graph as an induced subgraph of some `B_{a,b}`.

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, InducedCopyWitness, RightLabel, RightLabels};
use crate::subset::{binomial, k_subsets, Subset, MAX_ELEMENT};

/// `K_{n,k}`: `n` lefts, `k` opaque rights, every pair adjacent.
pub fn complete_bipartite(n: usize, k: usize) -> Result<BipartiteGraph> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParameter(format!("K_{{{n},{k}}} needs both sides non-empty")));
    }
    BipartiteGraph::from_fn(n, RightLabels::Opaque(k), |_, _| true)
}

/// `B_{n,k}`: lefts `[n]`, rights all k-subsets of `[n]` in lexicographic
/// order, `(x, X)` an edge iff `x ∈ X`.
pub fn set_bipartite(n: usize, k: usize) -> Result<BipartiteGraph> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("B_{{{n},{k}}} needs 1 <= k <= n")));
    }
    if n > MAX_ELEMENT {
        return Err(Error::InvalidParameter(format!("B_{{{n},{k}}}: n is limited to {MAX_ELEMENT}")));
    }
    let count = binomial(n as u64, k as u64)
        .filter(|&c| c <= crate::graph::MAX_ADJACENCY_WORDS as u64)
        .ok_or_else(|| Error::InvalidParameter(format!("B_{{{n},{k}}} has too many right vertices")))?;
    let mut sets = Vec::with_capacity(count as usize);
    let mut rows = Vec::with_capacity(count as usize);
    for s in k_subsets(n, k) {
        sets.push(s);
        rows.push(s.bits());
    }
    BipartiteGraph::from_set_rows(n, sets, rows)
}

/// A pattern embedded as an induced subgraph of `B_{a,b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingResult {
    pub a: usize,
    pub b: usize,
    /// Pattern left `i` maps to `left_map[i - 1]` in `[a]`.
    pub left_map: Vec<usize>,
    /// Pattern right `j` maps to the b-subset `right_map[j - 1]` of `[a]`.
    pub right_map: Vec<Subset>,
    /// The same map as a certificate against `B_{a,b}`.
    pub witness: InducedCopyWitness,
}

impl EmbeddingResult {
    /// Materializes the host `B_{a,b}`.
    pub fn host(&self) -> Result<BipartiteGraph> {
        set_bipartite(self.a, self.b)
    }
}

/// Embeds `pattern` (with `c` lefts and `d` rights) into `B_{a,b}` with
/// `a = 2c + d`, `b = c + 1`.
///
/// Left-vertex numbering inside `[a]`: pattern lefts keep their ids `1..=c`,
/// the padding vertices `1'..c'` are `c+1..=2c`, and the distinguishing
/// vertices `1''..d''` are `2c+1..=2c+d`. Right `j` with neighbors
/// `z_1..z_L` becomes `{z_1..z_L} ∪ {2c+j} ∪ {c+1, ..., c+(b-L-1)}`.
pub fn embed_into_set_bipartite(pattern: &BipartiteGraph) -> Result<EmbeddingResult> {
    let c = pattern.left_count();
    let d = pattern.right_count();
    if c == 0 || d == 0 {
        return Err(Error::InvalidGraph(format!(
            "pattern needs at least one vertex on each side, got {c} lefts and {d} rights"
        )));
    }
    let a = 2 * c + d;
    let b = c + 1;
    if a > MAX_ELEMENT {
        return Err(Error::InvalidParameter(format!(
            "embedding needs a = 2c + d = {a} <= {MAX_ELEMENT}"
        )));
    }
    let left_map: Vec<usize> = (1..=c).collect();
    let mut right_map = Vec::with_capacity(d);
    for j in 1..=d {
        let neighbors: Vec<usize> = pattern.right_neighbors(j).collect();
        let fillers = b - neighbors.len() - 1;
        let image = Subset::from_elements(
            neighbors
                .iter()
                .copied()
                .chain(std::iter::once(2 * c + j))
                .chain((1..=fillers).map(|f| c + f)),
        )?;
        debug_assert_eq!(image.len(), b);
        right_map.push(image);
    }

    // The image left i lies in image set j exactly when (i, j) is a pattern
    // edge; fillers and distinguishers are all above c.
    for (j, image) in right_map.iter().enumerate() {
        for i in 1..=c {
            assert_eq!(pattern.has_edge(i, j + 1), image.contains(left_map[i - 1]));
        }
    }

    let witness = InducedCopyWitness {
        pattern: pattern.clone(),
        host_left: left_map.clone(),
        host_right: right_map.iter().map(|&s| RightLabel::Set(s)).collect(),
        claimed_color: None,
    };
    Ok(EmbeddingResult {
        a,
        b,
        left_map,
        right_map,
        witness,
    })
}
