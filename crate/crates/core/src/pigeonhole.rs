//! Monochromatic `K_{a,b}` extraction from a two-colored `K_{n,k}`.
//!
//! Each left vertex `x` gets the signature `(COL(x,1), ..., COL(x,k))`. Some
//! signature is shared by at least `⌈n / 2^k⌉ >= a` lefts, and within it one
//! color occurs at least `⌈k / 2⌉ >= b` times. Those lefts and positions span
//! a monochromatic complete bipartite graph.

use std::collections::BTreeMap;

use crate::constructions::complete_bipartite;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Color, EdgeColoring, InducedCopyWitness};

/// Row of colors a left vertex sees, one entry per right position.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorSignature(pub Vec<Color>);

impl ColorSignature {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, color: Color) -> usize {
        self.0.iter().filter(|&&c| c == color).count()
    }

    /// 1-based positions carrying `color`, ascending.
    pub fn positions(&self, color: Color) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == color)
            .map(|(p, _)| p + 1)
    }
}

fn require_complete(host: &BipartiteGraph, coloring: &EdgeColoring) -> Result<()> {
    if !host.is_complete() {
        return Err(Error::ShapeMismatch(format!(
            "host has {} of {} possible edges; a complete bipartite host is required",
            host.edge_count(),
            host.left_count() * host.right_count()
        )));
    }
    coloring.check_matches(host)
}

pub fn signature_of(host: &BipartiteGraph, coloring: &EdgeColoring, x: usize) -> Result<ColorSignature> {
    require_complete(host, coloring)?;
    host.check_left(x)?;
    Ok(ColorSignature(
        (1..=host.right_count()).map(|p| coloring.color(x, p)).collect(),
    ))
}

/// The signature class extraction uses: a largest class, ties broken toward
/// the lexicographically least signature (RED < BLUE). Members ascending.
pub fn largest_signature_class(
    host: &BipartiteGraph,
    coloring: &EdgeColoring,
) -> Result<(ColorSignature, Vec<usize>)> {
    require_complete(host, coloring)?;
    let mut classes: BTreeMap<ColorSignature, Vec<usize>> = BTreeMap::new();
    for x in 1..=host.left_count() {
        let sig = ColorSignature((1..=host.right_count()).map(|p| coloring.color(x, p)).collect());
        classes.entry(sig).or_default().push(x);
    }
    let best = classes.values().map(Vec::len).max().unwrap_or(0);
    classes
        .into_iter()
        .find(|(_, members)| members.len() == best)
        .ok_or_else(|| Error::InvalidGraph("host has no left vertices".into()))
}

/// Extracts a monochromatic `K_{a,b}` from a two-colored `K_{n,k}` with
/// `n >= a * 2^k` and `k >= 2b`.
///
/// Deterministic: the class from [`largest_signature_class`], its `a`
/// smallest members, RED when it occurs at least `b` times in the signature
/// (BLUE otherwise), and the `b` smallest positions of that color.
pub fn extract_monochromatic_complete(
    host: &BipartiteGraph,
    coloring: &EdgeColoring,
    a: usize,
    b: usize,
) -> Result<InducedCopyWitness> {
    require_complete(host, coloring)?;
    let n = host.left_count();
    let k = host.right_count();
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(format!("a = {a}, b = {b} must both be positive")));
    }
    if k < 2 * b {
        return Err(Error::InvalidParameter(format!("need k >= 2b, got k = {k}, b = {b}")));
    }
    let needed = 1usize
        .checked_shl(k as u32)
        .filter(|_| k < usize::BITS as usize)
        .and_then(|p| p.checked_mul(a));
    match needed {
        Some(needed) if n >= needed => {}
        _ => {
            return Err(Error::InvalidParameter(format!(
                "need n >= a * 2^k = {a} * 2^{k}, got n = {n}"
            )))
        }
    }

    let (signature, members) = largest_signature_class(host, coloring)?;
    // ⌈n / 2^k⌉ >= a members and ⌈k / 2⌉ >= b occurrences by pigeonhole.
    assert!(members.len() >= a, "pigeonhole bound violated");
    let color = if signature.count(Color::Red) >= b {
        Color::Red
    } else {
        Color::Blue
    };
    let positions: Vec<usize> = signature.positions(color).take(b).collect();
    assert_eq!(positions.len(), b, "pigeonhole bound violated");

    Ok(InducedCopyWitness {
        pattern: complete_bipartite(a, b)?,
        host_left: members[..a].to_vec(),
        host_right: positions.iter().map(|&p| host.label(p)).collect(),
        claimed_color: Some(color),
    })
}
