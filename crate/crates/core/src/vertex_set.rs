//! Small vertex sets packed into a single machine word.
//!
//! Every structure in this crate works over a dense universe of at most
//! [`VertexSet::CAPACITY`] vertices, so a set is one `u64` and all set algebra
//! is a handful of bit operations.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Not, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A set of vertex ids in `0..64`.
///
/// Iteration is always ascending. The [`Ord`] implementation is the
/// lexicographic order on the ascending element sequences, so sorting a list
/// of sets gives the same order as sorting their element lists.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const CAPACITY: usize = 64;

    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < Self::CAPACITY);
        VertexSet(1u64 << v)
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Self::CAPACITY);
        if n == Self::CAPACITY {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < Self::CAPACITY && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < Self::CAPACITY);
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < Self::CAPACITY);
        self.0 &= !(1u64 << v);
    }

    #[inline]
    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement inside `{0, ..., n-1}`.
    #[inline]
    pub fn complement_in(self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image of the set under a relabelling `map[old] = new`.
    pub fn map(self, map: &[usize]) -> Self {
        self.iter().map(|v| map[v]).collect()
    }

    /// All subsets of `self`, including `self` and the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// All `k`-element subsets of `self`, in increasing numeric order of their bit patterns.
    pub fn k_subsets(self, k: usize) -> KSubsets {
        KSubsets::new(self, k)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // The ascending sequences agree below the lowest differing element m.
        // The set holding m is smaller unless the other one has already ended.
        let low = diff & diff.wrapping_neg();
        let above = !(low - 1) & !low;
        if self.0 & low != 0 {
            if other.0 & above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl BitOr for VertexSet {
    type Output = Self;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = Self;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl BitXor for VertexSet {
    type Output = Self;
    #[inline]
    fn bitxor(self, rhs: Self) -> Self {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        self.0 &= !rhs.0;
    }
}

impl Not for VertexSet {
    type Output = Self;
    #[inline]
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = ids.iter().find(|&&v| v >= VertexSet::CAPACITY) {
            return Err(serde::de::Error::custom(format!(
                "vertex id {bad} exceeds the supported capacity of {}",
                VertexSet::CAPACITY
            )));
        }
        Ok(ids.into_iter().collect())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Submask enumeration.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(VertexSet(cur))
    }
}

/// Fixed-size subsets of a set, via Gosper's hack on the rank space.
pub struct KSubsets {
    members: Vec<usize>,
    current: Option<u64>,
    limit: u64,
}

impl KSubsets {
    fn new(set: VertexSet, k: usize) -> Self {
        let members = set.to_vec();
        let m = members.len();
        let current = if k > m {
            None
        } else if k == 0 {
            Some(0)
        } else {
            Some(u64::MAX >> (64 - k))
        };
        let limit = if m >= 64 { u64::MAX } else { 1u64 << m };
        KSubsets {
            members,
            current,
            limit,
        }
    }
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.current?;
        let mut out = VertexSet::EMPTY;
        let mut c = cur;
        while c != 0 {
            let i = c.trailing_zeros() as usize;
            out.insert(self.members[i]);
            c &= c - 1;
        }
        self.current = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur.wrapping_add(low);
            if ripple == 0 {
                None
            } else {
                let next = (((ripple ^ cur) >> 2) / low) | ripple;
                (next < self.limit || (self.limit == u64::MAX && next != 0)).then_some(next)
            }
        };
        Some(out)
    }
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_algebra() {
        let a: VertexSet = [0, 2, 5].iter().collect();
        let b: VertexSet = [2, 3].iter().collect();
        assert_eq!((a | b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!((a & b).to_vec(), vec![2]);
        assert_eq!((a - b).to_vec(), vec![0, 5]);
        assert_eq!(a.complement_in(6).to_vec(), vec![1, 3, 4]);
        assert!(VertexSet::singleton(2).is_subset(a));
        assert_eq!(a.min(), Some(0));
        assert_eq!(a.max(), Some(5));
        assert_eq!(VertexSet::EMPTY.min(), None);
        assert_eq!(format!("{a}"), "{0,2,5}");
    }

    #[test]
    fn k_subsets_counts() {
        let s = VertexSet::full(7);
        for k in 0..=8 {
            let subs: Vec<_> = s.k_subsets(k).collect();
            assert_eq!(subs.len() as u64, binomial(7, k));
            assert!(subs.iter().all(|x| x.len() == k && x.is_subset(s)));
        }
        let sparse: VertexSet = [1, 4, 9, 63].iter().collect();
        let pairs: Vec<_> = sparse.k_subsets(2).collect();
        assert_eq!(pairs.len(), 6);
        assert!(pairs.contains(&[9, 63].iter().collect()));
        assert_eq!(VertexSet::full(64).k_subsets(64).count(), 1);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s: VertexSet = [1, 3, 4].iter().collect();
        let mut all: Vec<_> = s.subsets().collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 8);
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    proptest! {
        #[test]
        fn ord_matches_lexicographic_element_order(a in any::<u64>(), b in any::<u64>()) {
            let (x, y) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
            prop_assert_eq!(x.cmp(&y), x.to_vec().cmp(&y.to_vec()));
        }

        #[test]
        fn serde_round_trip(a in any::<u64>()) {
            let x = VertexSet::from_bits(a);
            let json = serde_json::to_string(&x).unwrap();
            prop_assert_eq!(serde_json::from_str::<VertexSet>(&json).unwrap(), x);
        }
    }
}
