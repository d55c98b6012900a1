//! Small finite sets over `[64] = {1, ..., 64}` and lexicographic k-subset
//! combinatorics.
//!
//! A [`Subset`] is a bitmask where bit `x - 1` encodes membership of `x`.
//! Ordering follows the lexicographic order of the sorted element lists, so
//! `{1,2} < {1,2,3} < {1,3} < {2}`. Ranks are 1-based positions among all
//! k-subsets of `[n]` in that order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// Largest ground-set element a [`Subset`] can hold.
pub const MAX_ELEMENT: usize = 64;

/// A set of integers drawn from `1..=64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// `{1, ..., n}`.
    pub fn prefix(n: usize) -> Subset {
        assert!(n <= MAX_ELEMENT, "prefix({n}) exceeds {MAX_ELEMENT}");
        if n == MAX_ELEMENT {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Subset {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Builds a set from elements, rejecting zero, out-of-range values and
    /// repeats.
    pub fn from_elements<I>(elements: I) -> Result<Subset, Error>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u64;
        for x in elements {
            if x == 0 || x > MAX_ELEMENT {
                return Err(Error::InvalidSet(format!(
                    "element {x} outside 1..={MAX_ELEMENT}"
                )));
            }
            let bit = 1u64 << (x - 1);
            if bits & bit != 0 {
                return Err(Error::InvalidSet(format!("element {x} repeated")));
            }
            bits |= bit;
        }
        Ok(Subset(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: usize) -> bool {
        (1..=MAX_ELEMENT).contains(&x) && self.0 & (1u64 << (x - 1)) != 0
    }

    pub fn insert(&mut self, x: usize) {
        assert!((1..=MAX_ELEMENT).contains(&x));
        self.0 |= 1u64 << (x - 1);
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The element at 1-based sorted position `position`.
    pub fn nth(self, position: usize) -> Option<usize> {
        if position == 0 {
            return None;
        }
        self.iter().nth(position - 1)
    }

    /// `{ map(x) : x in self }`, where `map` is applied to each element.
    pub fn map<F>(self, mut map: F) -> Result<Subset, Error>
    where
        F: FnMut(usize) -> usize,
    {
        Subset::from_elements(self.iter().map(&mut map))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff.trailing_zeros();
        // Both sets agree below `low`; whichever contains `low` continues its
        // sorted list with a smaller element, unless the other has run out.
        let (holder, other_set) = if self.0 >> low & 1 == 1 {
            (Ordering::Less, other.0)
        } else {
            (Ordering::Greater, self.0)
        };
        let other_continues = low < 63 && other_set >> (low + 1) != 0;
        if other_continues {
            holder
        } else {
            holder.reverse()
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Comma-separated elements, e.g. `2,3,4`.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromIterator<usize> for Subset {
    /// Panics on out-of-range elements; use [`Subset::from_elements`] for
    /// untrusted input.
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = Subset::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// `C(n, k)`, or `None` on `u64` overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// `C(n, k)` as `u128`, or `None` on overflow.
pub fn binomial_u128(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1); divide first where possible.
        let num = n - i;
        let den = i + 1;
        let g = gcd(acc, den);
        acc = (acc / g).checked_mul(num / (den / g))?;
    }
    Some(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Pascal triangle for `C(i, j)` with `i, j <= 64`, all of which fit in `u64`
/// except where saturated.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    rows: Vec<[u64; MAX_ELEMENT + 1]>,
}

impl BinomialTable {
    pub fn new() -> Self {
        let mut rows = vec![[0u64; MAX_ELEMENT + 1]; MAX_ELEMENT + 1];
        for i in 0..=MAX_ELEMENT {
            rows[i][0] = 1;
            for j in 1..=i {
                rows[i][j] = rows[i - 1][j - 1].saturating_add(rows[i - 1][j]);
            }
        }
        BinomialTable { rows }
    }

    #[inline]
    pub fn get(&self, n: usize, k: usize) -> u64 {
        if k > n {
            0
        } else {
            self.rows[n][k]
        }
    }
}

impl Default for BinomialTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Shared table; the ranking functions below are on the hot path of every
/// homogeneous-set search.
pub fn binomials() -> &'static BinomialTable {
    use std::sync::OnceLock;
    static TABLE: OnceLock<BinomialTable> = OnceLock::new();
    TABLE.get_or_init(BinomialTable::new)
}

/// 0-based lexicographic rank of `set` among the `|set|`-subsets of `[n]`.
///
/// Caller guarantees `set ⊆ [n]`.
pub fn lex_rank0(set: Subset, n: usize) -> u64 {
    let table = binomials();
    let k = set.len();
    let mut rank = 0u64;
    let mut prev = 0usize;
    for (i, x) in set.iter().enumerate() {
        // Count subsets that agree on the first i elements and put a smaller
        // value t in position i + 1.
        let remaining = k - i - 1;
        for t in prev + 1..x {
            rank += table.get(n - t, remaining);
        }
        prev = x;
    }
    rank
}

/// 1-based lexicographic rank, the convention used in file formats.
pub fn lex_rank(set: Subset, n: usize) -> u64 {
    lex_rank0(set, n) + 1
}

/// Inverse of [`lex_rank0`]: the `rank0`-th k-subset of `[n]`.
pub fn lex_unrank0(mut rank0: u64, n: usize, k: usize) -> Option<Subset> {
    let table = binomials();
    if k > n || n > MAX_ELEMENT || rank0 >= table.get(n, k) {
        return None;
    }
    let mut set = Subset::EMPTY;
    let mut next = 1usize;
    for i in 0..k {
        let remaining = k - i - 1;
        loop {
            let block = table.get(n - next, remaining);
            if rank0 < block {
                break;
            }
            rank0 -= block;
            next += 1;
        }
        set.insert(next);
        next += 1;
    }
    Some(set)
}

/// All k-subsets of `[n]` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    assert!(n <= MAX_ELEMENT, "ground set [{n}] exceeds {MAX_ELEMENT}");
    KSubsets::over((1..=n).collect(), k)
}

/// All k-subsets of `ground` (taken in increasing order) in lexicographic
/// order.
pub fn k_subsets_of(ground: Subset, k: usize) -> KSubsets {
    KSubsets::over(ground.to_vec(), k)
}

/// Lexicographic k-combination iterator over a sorted slice of elements.
#[derive(Clone, Debug)]
pub struct KSubsets {
    ground: Vec<usize>,
    positions: Vec<usize>,
    done: bool,
}

impl KSubsets {
    fn over(ground: Vec<usize>, k: usize) -> Self {
        let done = k > ground.len();
        KSubsets {
            positions: if done { Vec::new() } else { (0..k).collect() },
            ground,
            done,
        }
    }
}

impl Iterator for KSubsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        if self.done {
            return None;
        }
        let current: Subset = self.positions.iter().map(|&p| self.ground[p]).collect();
        let k = self.positions.len();
        let m = self.ground.len();
        // Advance the rightmost position that still has room.
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.positions[i] < m - k + i {
                self.positions[i] += 1;
                for j in i + 1..k {
                    self.positions[j] = self.positions[j - 1] + 1;
                }
                break;
            }
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> Subset {
        Subset::from_elements(xs.iter().copied()).unwrap()
    }

    #[test]
    fn ordering_is_lexicographic_on_sorted_lists() {
        let mut sets = vec![set(&[2]), set(&[1, 3]), set(&[1, 2, 3]), set(&[1, 2]), Subset::EMPTY];
        sets.sort();
        assert_eq!(
            sets,
            vec![Subset::EMPTY, set(&[1, 2]), set(&[1, 2, 3]), set(&[1, 3]), set(&[2])]
        );
    }

    #[test]
    fn ordering_matches_vec_ordering() {
        // Oracle: compare the sorted element vectors directly.
        let all: Vec<Subset> = (0u64..256).map(Subset::from_bits).collect();
        for &a in &all {
            for &b in &all {
                assert_eq!(a.cmp(&b), a.to_vec().cmp(&b.to_vec()), "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn high_bit_ordering() {
        assert!(set(&[63, 64]) > set(&[63]));
        assert!(set(&[64]) > set(&[63, 64]));
        assert!(set(&[1, 64]) < set(&[2]));
    }

    #[test]
    fn b42_right_vertices_in_order() {
        let rights: Vec<Vec<usize>> = k_subsets(4, 2).map(Subset::to_vec).collect();
        assert_eq!(
            rights,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
    }

    #[test]
    fn rank_matches_enumeration_position() {
        for n in 0..=9 {
            for k in 0..=n {
                let mut count = 0u64;
                for (pos, s) in k_subsets(n, k).enumerate() {
                    assert_eq!(lex_rank0(s, n), pos as u64);
                    assert_eq!(lex_unrank0(pos as u64, n, k), Some(s));
                    count += 1;
                }
                assert_eq!(count, binomial(n as u64, k as u64).unwrap());
                assert_eq!(lex_unrank0(count, n, k), None);
            }
        }
    }

    #[test]
    fn subsets_of_ground_follow_ground_order() {
        let ground = set(&[2, 4, 6, 8]);
        let pairs: Vec<Subset> = k_subsets_of(ground, 2).collect();
        assert_eq!(pairs.len(), 6);
        assert_eq!(pairs[0], set(&[2, 4]));
        assert_eq!(pairs[5], set(&[6, 8]));
        assert!(pairs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn binomials_agree() {
        assert_eq!(binomial(35, 7), Some(6_724_520));
        assert_eq!(binomial(9, 3), Some(84));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial_u128(41, 21), Some(269_128_937_220));
        for n in 0..=64u64 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n, k).unwrap(),
                    binomials().get(n as usize, k as usize)
                );
                assert_eq!(u128::from(binomial(n, k).unwrap()), binomial_u128(n.into(), k.into()).unwrap());
            }
        }
    }

    #[test]
    fn from_elements_rejects_bad_input() {
        assert!(Subset::from_elements([0]).is_err());
        assert!(Subset::from_elements([65]).is_err());
        assert!(Subset::from_elements([3, 3]).is_err());
        assert_eq!(set(&[3, 1]).to_string(), "1,3");
        assert_eq!(set(&[5, 9]).nth(2), Some(9));
        assert_eq!(set(&[5, 9]).max(), Some(9));
        assert_eq!(Subset::prefix(64).len(), 64);
    }

    #[test]
    fn oversized_k_yields_nothing_without_allocating() {
        assert_eq!(k_subsets(7, usize::MAX / 2).count(), 0);
        assert_eq!(k_subsets_of(set(&[1, 2]), 3).count(), 0);
    }
}
