//! Subsets of the ground set `[m] = {1, ..., m}` packed into a machine word.

use std::cmp::Ordering;
use std::fmt;

/// Largest ground set that fits in a [`VertexSet`].
pub const MAX_VERTICES: usize = 63;

/// A subset of `{1, ..., 63}` stored as a bit mask (vertex `v` is bit `v - 1`).
///
/// Ordering is lexicographic on the sorted vertex lists, so `[] < [1] < [1, 2] < [1, 3] < [2]`.
/// Every canonical ordering in the crate (faces, monomials, cells) is built on it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full ground set `{1, ..., m}`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_VERTICES, "ground set too large: {m}");
        if m == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - m))
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        vs.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | VertexSet::singleton(v).0)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !VertexSet::singleton(v).0)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest vertex, if any.
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    /// Number of elements strictly smaller than `v`.
    pub fn count_below(self, v: usize) -> usize {
        debug_assert!(v >= 1);
        (self.0 & ((1u64 << (v - 1)) - 1)).count_ones() as usize
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing order of their bit masks.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask { None } else { Some((cur.wrapping_sub(mask)) & mask) };
            Some(VertexSet(cur))
        })
    }

    /// Subsets of `self` with exactly `k` elements.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = VertexSet> {
        self.subsets().filter(move |s| s.len() == k)
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            let (ta, tb) = (a.trailing_zeros(), b.trailing_zeros());
            if ta != tb {
                // smaller leading vertex sorts first
                return ta.cmp(&tb);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// `true` when the number of pairs `(p, q)` in `left x right` with `p > q` is odd.
///
/// This is the Koszul sign of reordering `u_left u_right` into ascending order, and also the sign
/// of shuffling the odd cells of a tensor coproduct. Both the algebraic and the cellular model call
/// this one function.
pub fn inversion_parity(left: VertexSet, right: VertexSet) -> bool {
    let mut parity = 0u32;
    for q in right.iter() {
        // elements of `left` above q
        parity += (left.0 >> q).count_ones();
    }
    parity % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn lexicographic_order() {
        let mut sets = vec![vs(&[2]), vs(&[1, 3]), vs(&[]), vs(&[1, 2]), vs(&[1]), vs(&[2, 3])];
        sets.sort();
        assert_eq!(sets, vec![vs(&[]), vs(&[1]), vs(&[1, 2]), vs(&[1, 3]), vs(&[2]), vs(&[2, 3])]);
    }

    #[test]
    fn subsets_enumerates_powerset() {
        let s = vs(&[1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
        assert_eq!(s.subsets_of_size(2).count(), 3);
    }

    #[test]
    fn inversion_parity_brute_force() {
        for a in VertexSet::full(5).subsets() {
            for b in VertexSet::full(5).subsets() {
                let mut n = 0;
                for p in a.iter() {
                    for q in b.iter() {
                        if p > q {
                            n += 1;
                        }
                    }
                }
                assert_eq!(inversion_parity(a, b), n % 2 == 1, "{a} {b}");
            }
        }
    }

    #[test]
    fn count_below_and_max() {
        let s = vs(&[2, 5, 7]);
        assert_eq!(s.count_below(5), 1);
        assert_eq!(s.count_below(8), 3);
        assert_eq!(s.max(), Some(7));
        assert_eq!(VertexSet::full(63).len(), 63);
    }
}
