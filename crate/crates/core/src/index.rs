//! Multi-indexes: multisets of positive integers labelling basis columns.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Multiset of positive integers stored in non-increasing order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn empty() -> Self {
        MultiIndex(Vec::new())
    }

    pub fn singleton(s: u32) -> Self {
        assert!(s >= 1, "multi-index entries must be positive");
        MultiIndex(vec![s])
    }

    /// Builds from arbitrary-order entries, rejecting nonpositive ones.
    pub fn new(entries: &[i64]) -> Result<Self, Error> {
        let mut v = Vec::with_capacity(entries.len());
        for &e in entries {
            if e < 1 {
                return Err(Error::NonPositiveEntry(e));
            }
            v.push(u32::try_from(e).map_err(|_| Error::InvalidInput(format!("entry {e} too large")))?);
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(MultiIndex(v))
    }

    /// Infallible constructor for literal indexes. Panics on a zero entry.
    pub fn of(entries: &[u32]) -> Self {
        assert!(entries.iter().all(|&e| e >= 1), "multi-index entries must be positive");
        let mut v = entries.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        MultiIndex(v)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of entries.
    pub fn d(&self) -> u32 {
        self.0.len() as u32
    }

    /// Sum of entries.
    pub fn s(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn degree_stats(&self) -> (u32, u32) {
        (self.d(), self.s())
    }

    /// The single entry of a singleton index.
    pub fn as_singleton(&self) -> Option<u32> {
        match self.0.as_slice() {
            [s] => Some(*s),
            _ => None,
        }
    }

    /// Multiset union.
    pub fn union(&self, other: &MultiIndex) -> MultiIndex {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        MultiIndex(v)
    }

    /// Multiset containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MultiIndex) -> bool {
        let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
        for &e in &other.0 {
            *counts.entry(e).or_default() += 1;
        }
        for &e in &self.0 {
            let c = counts.entry(e).or_default();
            *c -= 1;
            if *c < 0 {
                return false;
            }
        }
        true
    }

    /// Sub-multisets obtained by deleting one entry, without repeats.
    pub fn maximal_proper_subsets(&self) -> Vec<MultiIndex> {
        let mut out: Vec<MultiIndex> = Vec::new();
        for k in 0..self.0.len() {
            if k > 0 && self.0[k] == self.0[k - 1] {
                continue;
            }
            let mut v = self.0.clone();
            v.remove(k);
            out.push(MultiIndex(v));
        }
        out
    }
}

/// `g - s(I) - 2 d(I)`: the largest `m` with `λ_I^[m]` in range. Negative
/// means the column is empty.
pub fn admissible_top(g: u32, index: &MultiIndex) -> i64 {
    g as i64 - index.s() as i64 - 2 * index.d() as i64
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for MultiIndex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiIndex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(deserializer)?;
        MultiIndex::new(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_and_top() {
        assert_eq!(MultiIndex::empty().degree_stats(), (0, 0));
        assert_eq!(MultiIndex::of(&[1, 2]).degree_stats(), (2, 3));
        assert_eq!(MultiIndex::of(&[3, 1]).degree_stats(), (2, 4));
        assert_eq!(admissible_top(7, &MultiIndex::of(&[1, 1])), 1);
        assert_eq!(admissible_top(8, &MultiIndex::of(&[3, 1])), 0);
        assert_eq!(admissible_top(5, &MultiIndex::of(&[1, 1])), -1);
    }

    #[test]
    fn rejects_nonpositive() {
        assert_eq!(MultiIndex::new(&[2, 0]), Err(Error::NonPositiveEntry(0)));
        assert_eq!(MultiIndex::new(&[-1]), Err(Error::NonPositiveEntry(-1)));
    }

    #[test]
    fn containment() {
        let a = MultiIndex::of(&[2, 1, 1]);
        assert!(MultiIndex::of(&[1, 1]).is_subset_of(&a));
        assert!(!MultiIndex::of(&[2, 2]).is_subset_of(&a));
        assert_eq!(a.maximal_proper_subsets(), vec![MultiIndex::of(&[1, 1]), MultiIndex::of(&[2, 1])]);
        assert_eq!(a.to_string(), "{2,1,1}");
    }
}
