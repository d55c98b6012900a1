//! Induced monochromatic `B_{a,b}` inside a two-colored `B_{n,2b-1}`.
//!
//! Given a set `H` of size `s = ab + b - 1` that is homogeneous for the
//! derived coloring with value `(c, I)`, the lefts are the elements of `H` at
//! ranks `b, 2b, ..., ab`. A pattern right `T ⊆ [a]` becomes a
//! `(2b-1)`-subset of `H` whose sorted positions `I` hold exactly the chosen
//! lefts `{t·b : t ∈ T}`; the remaining `b - 1` positions are fillers drawn
//! from the gaps between chosen ranks. Homogeneity makes every edge at a
//! position in `I` colored `c`, and fillers never coincide with chosen lefts,
//! so the copy is induced and monochromatic.

use crate::constructions::set_bipartite;
use crate::error::{Error, Result};
use crate::graph::{verify_witness, BipartiteGraph, Color, EdgeColoring, InducedCopyWitness, RightLabel};
use crate::hyper::{derived_color_of, require_derivation_host, DerivedColor};
use crate::subset::{k_subsets, k_subsets_of, Subset, MAX_ELEMENT};

/// Parameters of one extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractionPlan {
    pub a: usize,
    pub b: usize,
    /// `a·b + b - 1`.
    pub s: usize,
    /// `{b, 2b, ..., ab}`.
    pub chosen_ranks: Subset,
    pub positions: Subset,
    pub color: Color,
}

impl ExtractionPlan {
    pub fn new(a: usize, b: usize, derived: DerivedColor) -> Result<Self> {
        let s = check_ab(a, b)?;
        derived.validate(b)?;
        Ok(ExtractionPlan {
            a,
            b,
            s,
            chosen_ranks: chosen_ranks(a, b),
            positions: derived.positions,
            color: derived.color,
        })
    }
}

/// Validates `1 <= b <= a` and returns `s = ab + b - 1`.
fn check_ab(a: usize, b: usize) -> Result<usize> {
    if b == 0 || b > a {
        return Err(Error::InvalidParameter(format!("need 1 <= b <= a, got a = {a}, b = {b}")));
    }
    let s = a
        .checked_mul(b)
        .and_then(|ab| ab.checked_add(b - 1))
        .filter(|&s| s <= MAX_ELEMENT)
        .ok_or_else(|| Error::InvalidParameter(format!("s = ab + b - 1 exceeds {MAX_ELEMENT} for a = {a}, b = {b}")))?;
    Ok(s)
}

fn chosen_ranks(a: usize, b: usize) -> Subset {
    (1..=a).map(|t| t * b).collect()
}

/// The `(2b-1)`-subset of `[ab + b - 1]` whose sorted positions `I` carry the
/// chosen ranks `S`, with fillers placed in the gaps.
///
/// Filler rule: the `i_1 - 1` slots before `s_1` take `s_1 - g, ..., s_1 - 1`;
/// the slots after `s_j` (up to the next position in `I`, or to `2b - 1`)
/// take `s_j + 1, s_j + 2, ...`.
pub fn build_right_vertex(chosen: Subset, positions: Subset, a: usize, b: usize) -> Result<Subset> {
    let s_max = check_ab(a, b)?;
    let ranks = chosen_ranks(a, b);
    if chosen.len() != b || !chosen.is_subset_of(ranks) {
        return Err(Error::InvalidParameter(format!(
            "{{{chosen}}} is not a {b}-subset of the chosen ranks {{{ranks}}}"
        )));
    }
    DerivedColor { color: Color::Red, positions }.validate(b)?;

    let s: Vec<usize> = chosen.to_vec();
    let i: Vec<usize> = positions.to_vec();
    let k = 2 * b - 1;
    let mut x = chosen;

    let before = i[0] - 1;
    assert!(before < b && s[0] > before, "gap before s_1 does not fit");
    for f in s[0] - before..s[0] {
        x.insert(f);
    }
    for j in 0..b {
        let gap = if j + 1 < b { i[j + 1] - i[j] - 1 } else { k - i[j] };
        assert!(gap < b, "gap of {gap} exceeds b - 1");
        let limit = if j + 1 < b { s[j + 1] } else { s_max + 1 };
        assert!(s[j] + gap < limit, "fillers after s_{} collide", j + 1);
        for f in s[j] + 1..=s[j] + gap {
            x.insert(f);
        }
    }

    debug_assert_eq!(x.len(), k);
    debug_assert_eq!(x.intersection(ranks), chosen);
    debug_assert!(i.iter().zip(&s).all(|(&p, &v)| x.nth(p) == Some(v)));
    Ok(x)
}

/// Extracts an induced monochromatic `B_{a,b}` from `B_{n,2b-1}` given a set
/// `h` (at least `ab + b - 1` elements, of which the first `ab + b - 1` are
/// used) homogeneous for the derived coloring with value `derived`.
///
/// Homogeneity is re-verified against the edge coloring before anything is
/// built; a failure is a [`Error::Precondition`].
pub fn extract_induced(
    h: Subset,
    derived: DerivedColor,
    a: usize,
    b: usize,
    host: &BipartiteGraph,
    coloring: &EdgeColoring,
) -> Result<InducedCopyWitness> {
    let plan = ExtractionPlan::new(a, b, derived)?;
    let n = require_derivation_host(host, coloring, b)?;
    if h.len() < plan.s {
        return Err(Error::Precondition(format!(
            "homogeneous set has {} elements, need s = ab + b - 1 = {}",
            h.len(),
            plan.s
        )));
    }
    if !h.is_subset_of(Subset::prefix(n)) {
        return Err(Error::InvalidSet(format!("{{{h}}} is not a subset of [{n}]")));
    }
    let elems: Vec<usize> = h.iter().take(plan.s).collect();
    let ground: Subset = elems.iter().copied().collect();
    let through_h = |ranks: Subset| -> Subset { ranks.iter().map(|r| elems[r - 1]).collect() };

    for x in k_subsets_of(ground, 2 * b - 1) {
        let right = host
            .right_index(&RightLabel::Set(x))
            .expect("B_{n,2b-1} contains every (2b-1)-subset");
        let got = derived_color_of(coloring, right, x, b);
        if got != derived {
            return Err(Error::Precondition(format!(
                "{{{x}}} has derived color ({}, {{{}}}), not ({}, {{{}}})",
                got.color, got.positions, derived.color, derived.positions
            )));
        }
    }

    let pattern = set_bipartite(a, b)?;
    let host_left: Vec<usize> = (1..=a).map(|t| elems[t * b - 1]).collect();
    let mut host_right = Vec::with_capacity(pattern.right_count());
    for t in k_subsets(a, b) {
        let chosen: Subset = t.iter().map(|v| v * b).collect();
        let ranks = build_right_vertex(chosen, plan.positions, a, b)?;
        host_right.push(RightLabel::Set(through_h(ranks)));
    }
    let witness = InducedCopyWitness {
        pattern,
        host_left,
        host_right,
        claimed_color: Some(plan.color),
    };
    assert_eq!(
        verify_witness(host, Some(coloring), &witness),
        Ok(true),
        "extracted copy failed verification"
    );
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> Subset {
        Subset::from_elements(xs.iter().copied()).unwrap()
    }

    #[test]
    fn right_vertices_for_b_two() {
        assert_eq!(build_right_vertex(set(&[2, 4]), set(&[1, 3]), 4, 2), Ok(set(&[2, 3, 4])));
        assert_eq!(build_right_vertex(set(&[2, 8]), set(&[1, 2]), 4, 2), Ok(set(&[2, 8, 9])));
        assert_eq!(build_right_vertex(set(&[6, 8]), set(&[2, 3]), 4, 2), Ok(set(&[5, 6, 8])));
        assert_eq!(build_right_vertex(set(&[2, 6]), set(&[1, 3]), 4, 2), Ok(set(&[2, 3, 6])));
        assert_eq!(build_right_vertex(set(&[4, 6]), set(&[2, 3]), 4, 2), Ok(set(&[3, 4, 6])));
    }

    #[test]
    fn build_right_vertex_rejects_bad_input() {
        assert!(build_right_vertex(set(&[2, 5]), set(&[1, 3]), 4, 2).is_err());
        assert!(build_right_vertex(set(&[2]), set(&[1, 3]), 4, 2).is_err());
        assert!(build_right_vertex(set(&[2, 4]), set(&[1, 4]), 4, 2).is_err());
        assert!(build_right_vertex(set(&[2, 4]), set(&[1]), 4, 2).is_err());
        assert!(build_right_vertex(set(&[2, 4]), set(&[1, 2]), 1, 2).is_err());
    }

    #[test]
    fn plan_fields() {
        let plan = ExtractionPlan::new(
            4,
            2,
            DerivedColor {
                color: Color::Blue,
                positions: set(&[1, 3]),
            },
        )
        .unwrap();
        assert_eq!(plan.s, 9);
        assert_eq!(plan.chosen_ranks, set(&[2, 4, 6, 8]));
        assert!(ExtractionPlan::new(
            4,
            2,
            DerivedColor {
                color: Color::Blue,
                positions: set(&[1, 4]),
            }
        )
        .is_err());
    }

    #[test]
    fn extraction_rejects_non_homogeneous_set() {
        let host = set_bipartite(9, 3).unwrap();
        let red = EdgeColoring::constant(&host, Color::Red);
        let wrong = DerivedColor {
            color: Color::Red,
            positions: set(&[1, 3]),
        };
        let err = extract_induced(Subset::prefix(9), wrong, 4, 2, &host, &red).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        let right = DerivedColor {
            color: Color::Red,
            positions: set(&[1, 2]),
        };
        let err = extract_induced(Subset::prefix(8), right, 4, 2, &host, &red).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn blue_extraction() {
        let host = set_bipartite(9, 3).unwrap();
        let blue = EdgeColoring::constant(&host, Color::Blue);
        let derived = DerivedColor {
            color: Color::Blue,
            positions: set(&[1, 2]),
        };
        let w = extract_induced(Subset::prefix(9), derived, 4, 2, &host, &blue).unwrap();
        assert_eq!(w.claimed_color, Some(Color::Blue));
        assert_eq!(verify_witness(&host, Some(&blue), &w), Ok(true));
    }
}
