//! Subsets of a ground set of at most 64 elements, stored as bitmasks.
//!
//! Bit `i` stands for the element with 0-based position `i`. Everything that
//! faces a user (display, JSON) uses 1-based labels.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

pub const MAX_GROUND: usize = 64;

#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND);
        if n == MAX_GROUND {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Subset::EMPTY, |s, i| s.with(i))
    }

    /// Builds a subset from 1-based labels, as written in the literature.
    pub fn from_one_based(labels: &[usize]) -> Self {
        Self::from_indices(labels.iter().map(|&l| {
            assert!(l >= 1, "labels are 1-based");
            l - 1
        }))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_GROUND && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1u64 << i)
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

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(0) }
    }

    /// All `k`-element subsets of `self`, in lexicographic order.
    pub fn combinations(self, k: usize) -> Combinations {
        let elems: Vec<usize> = self.iter().collect();
        let idx = (k <= elems.len()).then(|| (0..k).collect());
        Combinations { elems, idx }
    }

    /// Lexicographic order on the increasing element lists.
    pub fn lex_cmp(self, other: Subset) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

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
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Elements {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        // standard submask successor
        let succ = cur.wrapping_sub(self.mask) & self.mask;
        self.next = (succ != 0).then_some(succ);
        Some(Subset(cur))
    }
}

pub struct Combinations {
    elems: Vec<usize>,
    idx: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let idx = self.idx.as_mut()?;
        let out = idx.iter().map(|&j| self.elems[j]).collect();
        let (k, n) = (idx.len(), self.elems.len());
        match (0..k).rev().find(|&j| idx[j] < n - k + j) {
            Some(j) => {
                idx[j] += 1;
                for t in j + 1..k {
                    idx[t] = idx[t - 1] + 1;
                }
            }
            None => self.idx = None,
        }
        Some(out)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (j, i) in self.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}
