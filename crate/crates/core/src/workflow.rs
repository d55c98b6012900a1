//! End-to-end pipeline: any bipartite pattern, found induced and
//! monochromatic inside a two-colored `B_{n,2b-1}`.

use crate::budget::Budget;
use crate::constructions::embed_into_set_bipartite;
use crate::error::{Error, Result};
use crate::graph::{verify_witness, BipartiteGraph, EdgeColoring, InducedCopyWitness};
use crate::hyper::{derive_coloring, find_homogeneous_set, DerivedColor};
use crate::induced::extract_induced;
use crate::subset::{binomial_u128, lex_rank0};

/// Constants the construction needs for a pattern with `c` lefts and `d`
/// rights. The host size `n` is a hypergraph Ramsey number and is only
/// reported symbolically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterReport {
    pub c: usize,
    pub d: usize,
    /// `2c + d`
    pub a: usize,
    /// `c + 1`
    pub b: usize,
    /// `2b - 1`, the right-vertex size of the host `B_{n,k}`.
    pub k: usize,
    /// `ab + b - 1`, the homogeneous set size.
    pub s: usize,
    /// `2 * C(2b-1, b)`, the derived palette size.
    pub palette: u128,
    /// `R_{k,palette}(s)` with the numbers filled in.
    pub n_formula: String,
    /// Always `None`: the Ramsey number is not computable at this scale.
    pub n_value: Option<u128>,
}

pub fn required_parameters(pattern: &BipartiteGraph) -> Result<ParameterReport> {
    let c = pattern.left_count();
    let d = pattern.right_count();
    if c == 0 || d == 0 {
        return Err(Error::InvalidGraph(format!(
            "pattern needs at least one vertex on each side, got {c} lefts and {d} rights"
        )));
    }
    let a = 2 * c + d;
    let b = c + 1;
    let k = 2 * b - 1;
    let s = a * b + b - 1;
    let palette = binomial_u128(k as u128, b as u128)
        .and_then(|x| x.checked_mul(2))
        .ok_or_else(|| Error::InvalidParameter(format!("palette 2*C({k},{b}) overflows")))?;
    Ok(ParameterReport {
        c,
        d,
        a,
        b,
        k,
        s,
        palette,
        n_formula: format!("R_{{{k},{palette}}}({s})"),
        n_value: None,
    })
}

/// Finds an induced monochromatic copy of `pattern` in the two-colored host
/// `B_{n,2b-1}` (with `b = c + 1`) by embedding the pattern in `B_{a,b}`,
/// deriving the hypergraph coloring, searching for a homogeneous `s`-set,
/// extracting an induced monochromatic `B_{a,b}` and composing.
///
/// Returns `Ok(None)` when `[n]` holds no homogeneous `s`-set, which is
/// always the case below the (uncomputable) Ramsey threshold for small `n`.
pub fn find_induced_mono_pattern(
    pattern: &BipartiteGraph,
    host: &BipartiteGraph,
    coloring: &EdgeColoring,
    budget: Budget,
) -> Result<Option<InducedCopyWitness>> {
    let params = required_parameters(pattern)?;
    let embedding = embed_into_set_bipartite(pattern)?;
    let (a, b) = (embedding.a, embedding.b);
    let derived = derive_coloring(host, coloring, b)?;
    if derived.n() < params.s {
        return Ok(None);
    }
    let Some(homogeneous) = find_homogeneous_set(&derived, params.s, budget)? else {
        return Ok(None);
    };
    let value = homogeneous.value.expect("s >= 2b - 1, so the value is defined");
    let derived_color = DerivedColor::from_index(value, b).expect("derived palette value");
    let copy = extract_induced(homogeneous.set, derived_color, a, b, host, coloring)?;

    // Pattern right j -> its b-subset T_j of [a] -> copy right at rank(T_j).
    let witness = InducedCopyWitness {
        pattern: pattern.clone(),
        host_left: embedding.left_map.iter().map(|&l| copy.host_left[l - 1]).collect(),
        host_right: embedding
            .right_map
            .iter()
            .map(|&t| copy.host_right[lex_rank0(t, a) as usize])
            .collect(),
        claimed_color: copy.claimed_color,
    };
    // Every edge of the extracted copy has one color, so the sub-copy does too.
    assert_eq!(
        verify_witness(host, Some(coloring), &witness),
        Ok(true),
        "composed witness failed verification"
    );
    Ok(Some(witness))
}
