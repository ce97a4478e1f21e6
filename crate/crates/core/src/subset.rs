//! Fixed-width subsets of a ground set.
//!
//! Every ground set in this crate has at most [`MAX_ELEMENTS`] elements, so a
//! subset is a single `u64` keyed to the ground set's declared order. The
//! ordering on [`Subset`] is lexicographic on the sorted index sequence,
//! which is also the tie-breaking order used by every search in the crate.

use std::cmp::Ordering;
use std::fmt;

/// Largest ground set that fits in a [`Subset`].
pub const MAX_ELEMENTS: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(Subset::EMPTY, |acc, i| acc.with(i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 & (1u64 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Shift the elements of `self` that lie in `mask` down so that the
    /// k-th element of `mask` becomes index k.
    pub fn compress(self, mask: Subset) -> Subset {
        let mut out = 0u64;
        for (k, i) in mask.iter().enumerate() {
            if self.contains(i) {
                out |= 1u64 << k;
            }
        }
        Subset(out)
    }

    /// Inverse of [`Subset::compress`]: index k maps to the k-th element of `mask`.
    pub fn expand(self, mask: Subset) -> Subset {
        let mut out = 0u64;
        for (k, i) in mask.iter().enumerate() {
            if self.contains(k) {
                out |= 1u64 << i;
            }
        }
        Subset(out)
    }

    /// All subsets of `self`, in increasing numeric order of their bits.
    pub fn subsets(self) -> Submasks {
        Submasks {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Lexicographic comparison of the sorted index sequences.
    pub fn lex_cmp(self, other: Subset) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let i = diff.trailing_zeros();
        let above = !((2u64 << i).wrapping_sub(1));
        // `i` belongs to exactly one side; the other side continues with an
        // element greater than `i` or ends there.
        let (holder, other_side) = if self.0 & (1u64 << i) != 0 {
            (Ordering::Less, other.0)
        } else {
            (Ordering::Greater, self.0)
        };
        if other_side & above == 0 {
            holder.reverse()
        } else {
            holder
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(*other)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Subset::from_indices(iter)
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Iterator over the elements of a subset in increasing order.
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct Submasks {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(Subset(cur))
    }
}

/// All `k`-element subsets of `{0..n}` in increasing numeric order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Subset> {
    assert!(n <= MAX_ELEMENTS);
    let limit: u128 = 1u128 << n;
    let mut cur: Option<u128> = if k > n {
        None
    } else {
        Some((1u128 << k) - 1)
    };
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 {
            None
        } else {
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            let next = (((ripple ^ c) >> 2) / low) | ripple;
            (next < limit).then_some(next)
        };
        Some(Subset(c as u64))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: Subset) -> Vec<usize> {
        s.iter().collect()
    }

    #[test]
    fn lex_order_matches_sequence_order() {
        let all: Vec<Subset> = Subset::full(5).subsets().collect();
        for &a in &all {
            for &b in &all {
                assert_eq!(a.cmp(&b), seq(a).cmp(&seq(b)), "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn lex_order_at_top_bit() {
        let a = Subset::from_indices([0, 63]);
        let b = Subset::from_indices([0]);
        assert_eq!(a.cmp(&b), Ordering::Greater);
        assert_eq!(Subset::singleton(63).cmp(&Subset::singleton(62)), Ordering::Greater);
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(6, 0).count(), 1);
        assert_eq!(k_subsets(6, 3).count(), 20);
        assert_eq!(k_subsets(6, 6).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert!(k_subsets(7, 3).all(|s| s.len() == 3 && s.is_subset_of(Subset::full(7))));
    }

    #[test]
    fn compress_expand_roundtrip() {
        let mask = Subset::from_indices([1, 4, 5, 9]);
        let s = Subset::from_indices([4, 9]);
        assert_eq!(seq(s.compress(mask)), vec![1, 3]);
        assert_eq!(s.compress(mask).expand(mask), s);
    }

    #[test]
    fn submask_enumeration() {
        let m = Subset::from_indices([0, 2, 3]);
        let subs: Vec<_> = m.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset_of(m)));
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }
}
