//! Colorings of the a-subsets of `[n]`, homogeneous sets, and exact Ramsey
//! numbers at micro scale.
//!
//! The bridge from edge colorings is [`derive_coloring`]: a two-coloring of
//! `B_{n,2b-1}` induces a coloring of the `(2b-1)`-subsets of `[n]` whose
//! palette is pairs (majority color, b positions carrying it).

use rayon::prelude::*;

use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Color, EdgeColoring};
use crate::subset::{binomial, binomials, k_subsets, k_subsets_of, lex_rank0, lex_unrank0, Subset, MAX_ELEMENT};

/// Total map from the `arity`-subsets of `[n]` to `0..palette`, stored by
/// 0-based lexicographic rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetColoring {
    n: usize,
    arity: usize,
    palette: u64,
    values: Vec<u64>,
}

impl SubsetColoring {
    pub fn new(n: usize, arity: usize, palette: u64, values: Vec<u64>) -> Result<Self> {
        Self::check_shape(n, arity, palette)?;
        let expected = binomial(n as u64, arity as u64).unwrap_or(u64::MAX);
        if values.len() as u64 != expected {
            return Err(Error::InvalidColoring(format!(
                "{} values for the {expected} {arity}-subsets of [{n}]",
                values.len()
            )));
        }
        if let Some((i, v)) = values.iter().enumerate().find(|(_, &v)| v >= palette) {
            let s = lex_unrank0(i as u64, n, arity).unwrap_or_default();
            return Err(Error::InvalidColoring(format!(
                "value {v} for {{{s}}} outside palette of size {palette}"
            )));
        }
        Ok(SubsetColoring { n, arity, palette, values })
    }

    pub fn from_fn<F>(n: usize, arity: usize, palette: u64, mut color: F) -> Result<Self>
    where
        F: FnMut(Subset) -> u64,
    {
        Self::check_shape(n, arity, palette)?;
        let values = k_subsets(n, arity).map(&mut color).collect();
        Self::new(n, arity, palette, values)
    }

    pub fn constant(n: usize, arity: usize, palette: u64, value: u64) -> Result<Self> {
        Self::from_fn(n, arity, palette, |_| value)
    }

    fn check_shape(n: usize, arity: usize, palette: u64) -> Result<()> {
        if n > MAX_ELEMENT {
            return Err(Error::InvalidParameter(format!("ground set [{n}] exceeds [{MAX_ELEMENT}]")));
        }
        if arity == 0 || arity > MAX_ELEMENT {
            return Err(Error::InvalidParameter(format!("arity {arity} must be in 1..={MAX_ELEMENT}")));
        }
        if palette == 0 {
            return Err(Error::InvalidParameter("palette must be non-empty".into()));
        }
        let count = binomial(n as u64, arity as u64).unwrap_or(u64::MAX);
        if count > crate::graph::MAX_ADJACENCY_WORDS as u64 {
            return Err(Error::InvalidParameter(format!(
                "C({n}, {arity}) = {count} subsets exceed the storage limit"
            )));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn palette(&self) -> u64 {
        self.palette
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Value of an `arity`-subset of `[n]`. Panics if `set` is not one.
    #[inline]
    pub fn value(&self, set: Subset) -> u64 {
        debug_assert_eq!(set.len(), self.arity);
        self.values[lex_rank0(set, self.n) as usize]
    }

    /// `(subset, value)` pairs in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Subset, u64)> + '_ {
        k_subsets(self.n, self.arity).zip(self.values.iter().copied())
    }
}

/// The value the derived coloring assigns to a `(2b-1)`-subset: a color that
/// occurs on at least `b` of its edges, and the `b` sorted positions (within
/// the subset) realizing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DerivedColor {
    pub color: Color,
    pub positions: Subset,
}

impl DerivedColor {
    /// `2 * C(2b-1, b)`.
    pub fn palette_size(b: usize) -> Option<u64> {
        binomial(2 * b as u64 - 1, b as u64)?.checked_mul(2)
    }

    /// Palette index: `color * C(2b-1, b) + lexrank(positions)`, with RED = 0.
    pub fn to_index(self, b: usize) -> u64 {
        let per_color = binomials().get(2 * b - 1, b);
        self.color.index() as u64 * per_color + lex_rank0(self.positions, 2 * b - 1)
    }

    pub fn from_index(index: u64, b: usize) -> Option<Self> {
        if b == 0 || 2 * b - 1 > MAX_ELEMENT {
            return None;
        }
        let per_color = binomials().get(2 * b - 1, b);
        let color = match index / per_color {
            0 => Color::Red,
            1 => Color::Blue,
            _ => return None,
        };
        let positions = lex_unrank0(index % per_color, 2 * b - 1, b)?;
        Some(DerivedColor { color, positions })
    }

    /// Checks `|positions| = b` and `positions ⊆ [2b-1]`.
    pub fn validate(self, b: usize) -> Result<()> {
        if b == 0 || self.positions.len() != b || !self.positions.is_subset_of(Subset::prefix((2 * b - 1).min(MAX_ELEMENT))) {
            return Err(Error::InvalidParameter(format!(
                "positions {{{}}} are not a {b}-subset of [{}]",
                self.positions,
                (2 * b).saturating_sub(1)
            )));
        }
        Ok(())
    }
}

/// Derived color of the right vertex `right` of `B_{n,2b-1}` whose label is
/// `set`: the majority color among its `2b-1` edges and the `b` smallest
/// positions carrying it.
pub(crate) fn derived_color_of(coloring: &EdgeColoring, right: usize, set: Subset, b: usize) -> DerivedColor {
    let mut red = Subset::EMPTY;
    let mut blue = Subset::EMPTY;
    for (p, z) in set.iter().enumerate() {
        match coloring.color(z, right) {
            Color::Red => red.insert(p + 1),
            Color::Blue => blue.insert(p + 1),
        }
    }
    // Counts sum to 2b - 1, so exactly one color reaches b.
    assert!(
        (red.len() >= b) != (blue.len() >= b),
        "majority color is not unique for {{{set}}}"
    );
    let (color, positions) = if red.len() >= b {
        (Color::Red, red)
    } else {
        (Color::Blue, blue)
    };
    DerivedColor {
        color,
        positions: positions.iter().take(b).collect(),
    }
}

/// Checks that `host` is `B_{n,2b-1}` and `coloring` colors it; returns `n`.
pub(crate) fn require_derivation_host(host: &BipartiteGraph, coloring: &EdgeColoring, b: usize) -> Result<usize> {
    if b == 0 {
        return Err(Error::InvalidParameter("b must be positive".into()));
    }
    let k = 2 * b - 1;
    match host.set_graph_arity() {
        Some(arity) if arity == k => {}
        _ => {
            return Err(Error::ShapeMismatch(format!(
                "host must be B_{{n,{k}}} with all {k}-subsets of [n] as rights in lexicographic order"
            )))
        }
    }
    coloring.check_matches(host)?;
    Ok(host.left_count())
}

/// The coloring of `(2b-1)`-subsets of `[n]` induced by a two-coloring of
/// `B_{n,2b-1}`, with palette `2 * C(2b-1, b)` indexed per
/// [`DerivedColor::to_index`].
pub fn derive_coloring(host: &BipartiteGraph, coloring: &EdgeColoring, b: usize) -> Result<SubsetColoring> {
    let n = require_derivation_host(host, coloring, b)?;
    let k = 2 * b - 1;
    let palette = DerivedColor::palette_size(b)
        .ok_or_else(|| Error::InvalidParameter(format!("palette for b = {b} overflows")))?;
    // Rights are in lexicographic order, so right index r has rank r - 1.
    let values: Vec<u64> = (1..=host.right_count())
        .into_par_iter()
        .map(|r| {
            let set = host.set_label(r).expect("set-labelled host");
            derived_color_of(coloring, r, set, b).to_index(b)
        })
        .collect();
    SubsetColoring::new(n, k, palette, values)
}

/// Whether every `arity`-subset of `h` has the same value. Vacuously true
/// when `|h| < arity`.
pub fn is_homogeneous(coloring: &SubsetColoring, h: Subset) -> Result<bool> {
    if !h.is_subset_of(Subset::prefix(coloring.n)) {
        return Err(Error::InvalidSet(format!("{{{h}}} is not a subset of [{}]", coloring.n)));
    }
    let mut values = k_subsets_of(h, coloring.arity).map(|s| coloring.value(s));
    Ok(match values.next() {
        None => true,
        Some(first) => values.all(|v| v == first),
    })
}

/// A homogeneous set and the value shared by its subsets (`None` when the set
/// is smaller than the arity).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomogeneousSet {
    pub set: Subset,
    pub value: Option<u64>,
}

/// Depth-first search for the lexicographically first homogeneous `s`-subset
/// of `[n]`. Each candidate element is checked against all `(arity-1)`-subsets
/// of the current prefix, which prunes whole subtrees of the lexicographic
/// enumeration at once.
struct HomogeneousSearch<'a, F> {
    n: usize,
    arity: usize,
    size: usize,
    lookup: &'a F,
}

impl<F> HomogeneousSearch<'_, F>
where
    F: Fn(Subset) -> u64,
{
    fn run(&self, meter: &mut Option<&mut Meter>) -> Result<Option<HomogeneousSet>> {
        self.extend(1, Subset::EMPTY, None, meter)
    }

    fn extend(
        &self,
        start: usize,
        chosen: Subset,
        value: Option<u64>,
        meter: &mut Option<&mut Meter>,
    ) -> Result<Option<HomogeneousSet>> {
        let have = chosen.len();
        if have == self.size {
            return Ok(Some(HomogeneousSet { set: chosen, value }));
        }
        let last = self.n + 1 - (self.size - have);
        for v in start..=last {
            let mut shared = value;
            let mut ok = true;
            if have + 1 >= self.arity {
                for rest in k_subsets_of(chosen, self.arity - 1) {
                    if let Some(m) = meter.as_deref_mut() {
                        m.spend(1)?;
                    }
                    let mut set = rest;
                    set.insert(v);
                    let x = (self.lookup)(set);
                    match shared {
                        None => shared = Some(x),
                        Some(y) if y != x => {
                            ok = false;
                            break;
                        }
                        Some(_) => {}
                    }
                }
            }
            if ok {
                let mut next = chosen;
                next.insert(v);
                if let Some(found) = self.extend(v + 1, next, shared, meter)? {
                    return Ok(Some(found));
                }
            }
        }
        Ok(None)
    }
}

/// The lexicographically first homogeneous `s`-subset of `[n]`, if any.
///
/// Each subset-value lookup counts against `budget`.
pub fn find_homogeneous_set(coloring: &SubsetColoring, s: usize, budget: Budget) -> Result<Option<HomogeneousSet>> {
    if s == 0 || s > coloring.n {
        return Err(Error::InvalidParameter(format!(
            "homogeneous set size {s} must be in 1..={}",
            coloring.n
        )));
    }
    let lookup = |set: Subset| coloring.value(set);
    let search = HomogeneousSearch {
        n: coloring.n,
        arity: coloring.arity,
        size: s,
        lookup: &lookup,
    };
    let mut meter = budget.meter("homogeneous set search");
    search.run(&mut Some(&mut meter))
}

fn has_homogeneous(n: usize, arity: usize, s: usize, values: &[u64]) -> bool {
    if s > n {
        return false;
    }
    let lookup = |set: Subset| values[lex_rank0(set, n) as usize];
    let search = HomogeneousSearch {
        n,
        arity,
        size: s,
        lookup: &lookup,
    };
    matches!(search.run(&mut None), Ok(Some(_)))
}

/// Decodes coloring number `index` in odometer order: the subset of rank `r`
/// receives digit `r` of `index` in base `palette`, least significant first.
fn odometer_values(mut index: u64, palette: u64, count: usize) -> Vec<u64> {
    let mut values = Vec::with_capacity(count);
    for _ in 0..count {
        values.push(index % palette);
        index /= palette;
    }
    values
}

/// Checked `palette^count`.
fn coloring_count(palette: u64, count: u64) -> Option<u64> {
    palette.checked_pow(u32::try_from(count).ok()?)
}

/// Upper bound on checks for exhausting all colorings at one `n`.
fn enumeration_estimate(arity: usize, palette: u64, s: usize, n: usize) -> u64 {
    let m = binomial(n as u64, arity as u64).unwrap_or(u64::MAX);
    let per_coloring = binomial(n as u64, s as u64)
        .unwrap_or(u64::MAX)
        .saturating_mul(binomial(s as u64, arity as u64).unwrap_or(u64::MAX).max(1));
    coloring_count(palette, m)
        .unwrap_or(u64::MAX)
        .saturating_mul(per_coloring.max(1))
}

/// First coloring of the `arity`-subsets of `[n]` (in odometer order) with no
/// homogeneous `s`-set, or `None` if every coloring has one.
///
/// Refuses with [`Error::BudgetExceeded`] when the enumeration estimate is
/// over `budget`. Work is split across threads; the reported coloring is the
/// first in odometer order regardless of scheduling.
pub fn first_coloring_without_homogeneous(
    arity: usize,
    palette: u64,
    s: usize,
    n: usize,
    budget: Budget,
) -> Result<Option<SubsetColoring>> {
    SubsetColoring::check_shape(n, arity, palette)?;
    if s == 0 {
        return Err(Error::InvalidParameter("homogeneous set size must be positive".into()));
    }
    let m = binomial(n as u64, arity as u64).unwrap_or(u64::MAX);
    if s > n {
        // No s-subset exists at all.
        return SubsetColoring::constant(n, arity, palette, 0).map(Some);
    }
    budget.admit("Ramsey enumeration", enumeration_estimate(arity, palette, s, n))?;
    let total = coloring_count(palette, m).ok_or(Error::BudgetExceeded {
        task: "Ramsey enumeration",
        needed: u64::MAX,
        limit: budget.limit(),
    })?;
    let count = m as usize;
    let found = (0..total)
        .into_par_iter()
        .find_first(|&idx| !has_homogeneous(n, arity, s, &odometer_values(idx, palette, count)));
    found
        .map(|idx| SubsetColoring::new(n, arity, palette, odometer_values(idx, palette, count)))
        .transpose()
}

/// Outcome of an exact Ramsey-number search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyOutcome {
    /// Least `n <= max_n` at which every coloring has a homogeneous set.
    pub value: Option<usize>,
    /// A coloring at the largest failing `n` with no homogeneous set.
    pub lower_bound: Option<SubsetColoring>,
}

/// `R_{arity,palette}(s)` if it is at most `max_n`, by exhaustive
/// enumeration of all `palette^C(n, arity)` colorings for each candidate `n`.
///
/// The budget covers the whole run; each `n` is admitted against what remains.
/// After a success at `n`, the next size is also enumerated when it is within
/// `max_n` and the budget, and must not yield a counterexample.
pub fn ramsey_number_exact(
    arity: usize,
    palette: u64,
    s: usize,
    max_n: usize,
    budget: Budget,
) -> Result<RamseyOutcome> {
    if arity == 0 || palette == 0 || s == 0 || max_n == 0 {
        return Err(Error::InvalidParameter(
            "arity, palette, size and max_n must all be positive".into(),
        ));
    }
    if max_n > MAX_ELEMENT {
        return Err(Error::InvalidParameter(format!("max_n is limited to {MAX_ELEMENT}")));
    }
    let mut remaining = budget.limit();
    let mut lower_bound = None;
    for n in 1..=max_n {
        let estimate = if s > n { 0 } else { enumeration_estimate(arity, palette, s, n) };
        if estimate > remaining {
            return Err(Error::BudgetExceeded {
                task: "Ramsey enumeration",
                needed: estimate,
                limit: budget.limit(),
            });
        }
        remaining -= estimate;
        match first_coloring_without_homogeneous(arity, palette, s, n, Budget::new(estimate))? {
            Some(counterexample) => lower_bound = Some(counterexample),
            None => {
                if n < max_n {
                    let next = enumeration_estimate(arity, palette, s, n + 1);
                    if next <= remaining {
                        let later = first_coloring_without_homogeneous(arity, palette, s, n + 1, Budget::new(next))?;
                        assert!(later.is_none(), "monotonicity violated at n = {}", n + 1);
                    }
                }
                return Ok(RamseyOutcome {
                    value: Some(n),
                    lower_bound,
                });
            }
        }
    }
    Ok(RamseyOutcome {
        value: None,
        lower_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::set_bipartite;

    fn set(xs: &[usize]) -> Subset {
        Subset::from_elements(xs.iter().copied()).unwrap()
    }

    /// Pentagon two-coloring of the pairs of [5]: cycle edges get 0.
    fn pentagon() -> SubsetColoring {
        SubsetColoring::from_fn(5, 2, 2, |p| {
            let v = p.to_vec();
            let d = v[1] - v[0];
            u64::from(!(d == 1 || d == 4))
        })
        .unwrap()
    }

    #[test]
    fn derived_palette_sizes() {
        assert_eq!(DerivedColor::palette_size(2), Some(6));
        assert_eq!(DerivedColor::palette_size(4), Some(70));
        for b in 1..=4 {
            let p = DerivedColor::palette_size(b).unwrap();
            for i in 0..p {
                let d = DerivedColor::from_index(i, b).unwrap();
                d.validate(b).unwrap();
                assert_eq!(d.to_index(b), i);
            }
            assert_eq!(DerivedColor::from_index(p, b), None);
        }
    }

    #[test]
    fn constant_host_derives_first_positions() {
        let host = set_bipartite(9, 3).unwrap();
        let red = EdgeColoring::constant(&host, Color::Red);
        let derived = derive_coloring(&host, &red, 2).unwrap();
        assert_eq!(derived.palette(), 6);
        let expected = DerivedColor {
            color: Color::Red,
            positions: set(&[1, 2]),
        }
        .to_index(2);
        assert!(derived.values().iter().all(|&v| v == expected));
    }

    #[test]
    fn derived_color_reads_positions() {
        let host = set_bipartite(5, 3).unwrap();
        let x = set(&[1, 2, 3]);
        let c = EdgeColoring::from_fn(&host, |l, r| {
            if host.set_label(r) == Some(x) && l == 2 {
                Color::Red
            } else if host.set_label(r) == Some(x) {
                Color::Blue
            } else {
                Color::Red
            }
        });
        let derived = derive_coloring(&host, &c, 2).unwrap();
        let got = DerivedColor::from_index(derived.value(x), 2).unwrap();
        assert_eq!(
            got,
            DerivedColor {
                color: Color::Blue,
                positions: set(&[1, 3])
            }
        );
    }

    #[test]
    fn derivation_rejects_wrong_hosts() {
        let host = set_bipartite(6, 2).unwrap();
        let c = EdgeColoring::constant(&host, Color::Red);
        assert!(matches!(derive_coloring(&host, &c, 2), Err(Error::ShapeMismatch(_))));
        let k = crate::constructions::complete_bipartite(4, 4).unwrap();
        let c = EdgeColoring::constant(&k, Color::Red);
        assert!(matches!(derive_coloring(&k, &c, 1), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn homogeneity_examples() {
        let c = SubsetColoring::from_fn(4, 2, 2, |p| if p.is_subset_of(set(&[1, 2, 3])) { 1 } else { 0 }).unwrap();
        assert_eq!(is_homogeneous(&c, set(&[1, 2, 3])), Ok(true));
        assert_eq!(is_homogeneous(&c, set(&[1, 2, 4])), Ok(false));
        assert_eq!(is_homogeneous(&c, set(&[4])), Ok(true));
        assert!(is_homogeneous(&c, set(&[5])).is_err());
        let constant = SubsetColoring::constant(7, 3, 4, 2).unwrap();
        assert_eq!(is_homogeneous(&constant, Subset::prefix(7)), Ok(true));
    }

    #[test]
    fn pentagon_has_no_homogeneous_triple() {
        let c = pentagon();
        // Oracle: check all 10 triples directly.
        for t in k_subsets(5, 3) {
            assert_eq!(is_homogeneous(&c, t), Ok(false));
        }
        assert_eq!(find_homogeneous_set(&c, 3, Budget::default()), Ok(None));
        let pair = find_homogeneous_set(&c, 2, Budget::default()).unwrap().unwrap();
        assert_eq!(pair.set, set(&[1, 2]));
    }

    #[test]
    fn search_returns_lexicographically_first() {
        // Oracle: scan all s-subsets in lexicographic order.
        let c = SubsetColoring::from_fn(7, 2, 3, |p| (p.bits().wrapping_mul(2654435761) >> 7) % 3).unwrap();
        for s in 1..=7 {
            let brute = k_subsets(7, s).find(|&h| is_homogeneous(&c, h).unwrap());
            let found = find_homogeneous_set(&c, s, Budget::default()).unwrap();
            assert_eq!(found.map(|h| h.set), brute, "s = {s}");
        }
    }

    #[test]
    fn search_respects_budget() {
        let c = SubsetColoring::constant(12, 3, 2, 0).unwrap();
        let err = find_homogeneous_set(&c, 12, Budget::new(10)).unwrap_err();
        assert!(err.is_budget());
        assert!(find_homogeneous_set(&c, 13, Budget::default()).is_err());
    }

    #[test]
    fn tiny_ramsey_numbers() {
        let r = ramsey_number_exact(1, 2, 3, 10, Budget::default()).unwrap();
        assert_eq!(r.value, Some(5));
        let r = ramsey_number_exact(2, 2, 2, 5, Budget::default()).unwrap();
        assert_eq!(r.value, Some(2));
        let r = ramsey_number_exact(2, 2, 3, 5, Budget::default()).unwrap();
        assert_eq!(r.value, None);
        let lb = r.lower_bound.unwrap();
        assert_eq!(lb.n(), 5);
        assert_eq!(find_homogeneous_set(&lb, 3, Budget::default()), Ok(None));
    }

    #[test]
    fn ramsey_refuses_over_budget() {
        let err = ramsey_number_exact(2, 2, 3, 6, Budget::new(1000)).unwrap_err();
        assert!(err.is_budget());
        let err = ramsey_number_exact(3, 6, 9, 12, Budget::default()).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn odometer_is_little_endian() {
        assert_eq!(odometer_values(5, 2, 4), vec![1, 0, 1, 0]);
        assert_eq!(odometer_values(7, 3, 3), vec![1, 2, 0]);
    }

    #[test]
    fn subset_coloring_validation() {
        assert!(SubsetColoring::new(4, 2, 2, vec![0; 5]).is_err());
        assert!(SubsetColoring::new(4, 2, 2, vec![0, 0, 0, 0, 0, 2]).is_err());
        assert!(SubsetColoring::new(4, 0, 2, vec![]).is_err());
        assert!(SubsetColoring::new(4, 2, 0, vec![]).is_err());
        // n < arity: a single empty coloring.
        assert!(SubsetColoring::new(1, 2, 2, vec![]).is_ok());
    }
}
