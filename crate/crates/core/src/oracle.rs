//! Brute-force search for induced monochromatic copies.
//!
//! This is the trusted reference every constructive algorithm is tested
//! against, so it stays simple: enumerate ordered left assignments, and for
//! each one match pattern rights to host rights with identical adjacency.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Color, EdgeColoring, InducedCopyWitness};
use crate::subset::k_subsets;

/// Searches `host` for an induced copy of `pattern` whose edges all share one
/// color.
///
/// Order: left combinations in lexicographic order, each combination's
/// arrangements in lexicographic order, RED before BLUE; rights are then the
/// lexicographically smallest valid choice. A pattern with no edges is
/// reported RED. Each host right examined costs one unit of `budget`.
pub fn find_induced_monochromatic(
    host: &BipartiteGraph,
    coloring: &EdgeColoring,
    pattern: &BipartiteGraph,
    budget: Budget,
) -> Result<Option<InducedCopyWitness>> {
    coloring.check_matches(host)?;
    let pl = pattern.left_count();
    let pr = pattern.right_count();
    if pl > 64 {
        return Err(Error::InvalidParameter(format!("pattern has {pl} lefts; at most 64 supported")));
    }
    if host.left_count() > 64 {
        return Err(Error::InvalidParameter(format!(
            "host has {} lefts; the oracle supports at most 64",
            host.left_count()
        )));
    }
    if pl > host.left_count() || pr > host.right_count() {
        return Ok(None);
    }

    // Pattern right j's adjacency as a mask over pattern lefts.
    let columns: Vec<u64> = (1..=pr)
        .map(|j| pattern.right_neighbors(j).fold(0u64, |m, i| m | 1 << (i - 1)))
        .collect();

    let mut meter = budget.meter("induced copy search");
    let hr = host.right_count();
    let mut masks = vec![0u64; hr];
    let mut mono = vec![[true; 2]; hr];
    let mut used = vec![false; hr];

    for combo in k_subsets(host.left_count(), pl) {
        let mut arrangement: Vec<usize> = combo.to_vec();
        loop {
            meter.spend(hr as u64)?;
            for r in 0..hr {
                let mut mask = 0u64;
                let mut m = [true; 2];
                for (p, &l) in arrangement.iter().enumerate() {
                    if host.has_edge(l, r + 1) {
                        mask |= 1 << p;
                        match coloring.color(l, r + 1) {
                            Color::Red => m[1] = false,
                            Color::Blue => m[0] = false,
                        }
                    }
                }
                masks[r] = mask;
                mono[r] = m;
            }
            for color in Color::BOTH {
                if let Some(rights) = assign_rights(&columns, &masks, &mono, color, &mut used) {
                    return Ok(Some(InducedCopyWitness {
                        pattern: pattern.clone(),
                        host_left: arrangement.clone(),
                        host_right: rights.into_iter().map(|r| host.label(r)).collect(),
                        claimed_color: Some(color),
                    }));
                }
            }
            if !next_permutation(&mut arrangement) {
                break;
            }
        }
    }
    Ok(None)
}

/// Greedy matching: rights with the same required column are interchangeable,
/// so taking the smallest unused host right per pattern right is exact.
fn assign_rights(
    columns: &[u64],
    masks: &[u64],
    mono: &[[bool; 2]],
    color: Color,
    used: &mut [bool],
) -> Option<Vec<usize>> {
    used.iter_mut().for_each(|u| *u = false);
    let mut chosen = Vec::with_capacity(columns.len());
    for &col in columns {
        let r = (0..masks.len()).find(|&r| !used[r] && masks[r] == col && mono[r][color.index()])?;
        used[r] = true;
        chosen.push(r + 1);
    }
    Some(chosen)
}

/// Rearranges into the next lexicographic permutation; false when wrapped.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_bipartite, set_bipartite};
    use crate::graph::{verify_witness, RightLabel};

    #[test]
    fn permutations_in_order() {
        let mut v = vec![1, 2, 3];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], vec![1, 3, 2]);
        assert_eq!(seen[5], vec![3, 2, 1]);
    }

    #[test]
    fn single_edge_in_k22() {
        let host = complete_bipartite(2, 2).unwrap();
        let red = EdgeColoring::constant(&host, Color::Red);
        let pattern = complete_bipartite(1, 1).unwrap();
        let w = find_induced_monochromatic(&host, &red, &pattern, Budget::default())
            .unwrap()
            .unwrap();
        assert_eq!(w.host_left, vec![1]);
        assert_eq!(w.host_right, vec![RightLabel::Id(1)]);
        assert_eq!(w.claimed_color, Some(Color::Red));
    }

    #[test]
    fn b42_not_in_complete_host() {
        let host = complete_bipartite(6, 6).unwrap();
        let c = EdgeColoring::from_fn(&host, |l, r| if (l + r) % 2 == 0 { Color::Red } else { Color::Blue });
        let pattern = set_bipartite(4, 2).unwrap();
        assert_eq!(find_induced_monochromatic(&host, &c, &pattern, Budget::default()), Ok(None));
    }

    #[test]
    fn b42_in_constant_b93() {
        let host = set_bipartite(9, 3).unwrap();
        let red = EdgeColoring::constant(&host, Color::Red);
        let pattern = set_bipartite(4, 2).unwrap();
        let w = find_induced_monochromatic(&host, &red, &pattern, Budget::default())
            .unwrap()
            .unwrap();
        assert_eq!(verify_witness(&host, Some(&red), &w), Ok(true));
    }

    #[test]
    fn blue_found_when_red_impossible() {
        let host = complete_bipartite(3, 3).unwrap();
        let blue = EdgeColoring::constant(&host, Color::Blue);
        let pattern = complete_bipartite(2, 2).unwrap();
        let w = find_induced_monochromatic(&host, &blue, &pattern, Budget::default())
            .unwrap()
            .unwrap();
        assert_eq!(w.claimed_color, Some(Color::Blue));
    }

    #[test]
    fn edgeless_pattern_is_red() {
        let host = BipartiteGraph::with_opaque_rights(2, 2, []).unwrap();
        let c = EdgeColoring::constant(&host, Color::Blue);
        let pattern = BipartiteGraph::with_opaque_rights(1, 2, []).unwrap();
        let w = find_induced_monochromatic(&host, &c, &pattern, Budget::default())
            .unwrap()
            .unwrap();
        assert_eq!(w.claimed_color, Some(Color::Red));
        assert_eq!(w.host_right, vec![RightLabel::Id(1), RightLabel::Id(2)]);
    }

    #[test]
    fn oversized_pattern_is_absent_and_budget_trips() {
        let host = complete_bipartite(2, 2).unwrap();
        let c = EdgeColoring::constant(&host, Color::Red);
        assert_eq!(
            find_induced_monochromatic(&host, &c, &complete_bipartite(3, 1).unwrap(), Budget::default()),
            Ok(None)
        );
        let host = set_bipartite(9, 3).unwrap();
        let c = EdgeColoring::from_fn(&host, |l, _| if l % 2 == 0 { Color::Red } else { Color::Blue });
        let err = find_induced_monochromatic(&host, &c, &set_bipartite(4, 2).unwrap(), Budget::new(1000)).unwrap_err();
        assert!(err.is_budget());
    }
}
