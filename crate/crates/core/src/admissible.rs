//! Admissible index sets: the columns a model may contain.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::index::MultiIndex;

/// One failed admissibility clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingEmpty,
    TooHeavy { index: MultiIndex, weight: u32, genus: u32 },
    NotDownwardClosed { index: MultiIndex, missing: MultiIndex },
    SingletonGap { index: MultiIndex, missing: MultiIndex },
    AboveGenusBound { index: MultiIndex, bound: u32 },
    AboveGonalityBound { index: MultiIndex, bound: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingEmpty => write!(f, "∅ is missing"),
            Violation::TooHeavy { index, weight, genus } => {
                write!(f, "{index}: s+2d = {weight} exceeds g = {genus}")
            }
            Violation::NotDownwardClosed { index, missing } => {
                write!(f, "{index}: sub-multiset {missing} is missing")
            }
            Violation::SingletonGap { index, missing } => {
                write!(f, "{index}: smaller singleton {missing} is missing")
            }
            Violation::AboveGenusBound { index, bound } => {
                write!(f, "{index}: singleton exceeds floor((g-1)/2) = {bound}")
            }
            Violation::AboveGonalityBound { index, bound } => {
                write!(f, "{index}: singleton exceeds gonality bound {bound}")
            }
        }
    }
}

/// Largest `s` allowed for a nonzero singleton column.
pub fn singleton_bound(genus: u32, gonality: Option<u32>) -> i64 {
    let general = (genus as i64 - 1).div_euclid(2);
    match gonality {
        Some(m) => general.min(m as i64 - 2),
        None => general,
    }
}

/// Lists every violated clause; an empty list means admissible.
pub fn check_admissible(
    genus: u32,
    gonality: Option<u32>,
    indexes: &BTreeSet<MultiIndex>,
) -> Vec<Violation> {
    let mut out = Vec::new();
    if !indexes.contains(&MultiIndex::empty()) {
        out.push(Violation::MissingEmpty);
    }
    let general = (genus as i64 - 1).div_euclid(2);
    for index in indexes {
        let weight = index.s() + 2 * index.d();
        if weight > genus {
            out.push(Violation::TooHeavy { index: index.clone(), weight, genus });
        }
        for sub in index.maximal_proper_subsets() {
            if !indexes.contains(&sub) {
                out.push(Violation::NotDownwardClosed { index: index.clone(), missing: sub });
            }
        }
        if let Some(s) = index.as_singleton() {
            for j in 1..s {
                let missing = MultiIndex::singleton(j);
                if !indexes.contains(&missing) {
                    out.push(Violation::SingletonGap { index: index.clone(), missing });
                }
            }
            if s as i64 > general {
                out.push(Violation::AboveGenusBound { index: index.clone(), bound: general.max(0) as u32 });
            }
            if let Some(m) = gonality {
                if s as i64 > m as i64 - 2 {
                    out.push(Violation::AboveGonalityBound { index: index.clone(), bound: m as i64 - 2 });
                }
            }
        }
    }
    out
}

/// A validated admissible set of multi-indexes for a fixed genus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibleSet {
    genus: u32,
    gonality: Option<u32>,
    indexes: BTreeSet<MultiIndex>,
}

impl AdmissibleSet {
    pub fn new(
        genus: u32,
        gonality: Option<u32>,
        indexes: impl IntoIterator<Item = MultiIndex>,
    ) -> Result<Self, Error> {
        if genus == 0 {
            return Err(Error::InvalidGenus(0));
        }
        let indexes: BTreeSet<MultiIndex> = indexes.into_iter().collect();
        let violations = check_admissible(genus, gonality, &indexes);
        if !violations.is_empty() {
            return Err(Error::NotAdmissible(violations.iter().map(|v| v.to_string()).collect()));
        }
        Ok(AdmissibleSet { genus, gonality, indexes })
    }

    /// The largest admissible set: every multiset whose entries respect the
    /// singleton bound and whose weight `s+2d` is at most `g`.
    pub fn maximal(genus: u32, gonality: Option<u32>) -> Result<Self, Error> {
        if genus == 0 {
            return Err(Error::InvalidGenus(0));
        }
        let bound = singleton_bound(genus, gonality).max(0) as u32;
        let mut indexes = BTreeSet::new();
        let mut stack = vec![Vec::<u32>::new()];
        while let Some(v) = stack.pop() {
            let max_entry = v.last().copied().unwrap_or(bound).min(bound);
            let weight: u32 = v.iter().sum::<u32>() + 2 * v.len() as u32;
            for e in 1..=max_entry {
                if weight + e + 2 <= genus {
                    let mut w = v.clone();
                    w.push(e);
                    stack.push(w);
                }
            }
            indexes.insert(MultiIndex::of(&v));
        }
        AdmissibleSet::new(genus, gonality, indexes)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn gonality(&self) -> Option<u32> {
        self.gonality
    }

    pub fn contains(&self, index: &MultiIndex) -> bool {
        self.indexes.contains(index)
    }

    pub fn iter(&self) -> impl Iterator<Item = &MultiIndex> {
        self.indexes.iter()
    }

    pub fn len(&self) -> usize {
        self.indexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indexes.is_empty()
    }

    /// Non-empty members that are singletons, in increasing order.
    pub fn singletons(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.indexes.iter().filter_map(MultiIndex::as_singleton).collect();
        v.sort_unstable();
        v
    }

    /// Removes `index` together with everything the closure rules force out:
    /// every superset, and for a singleton `{s}` every `{s'}` with `s' > s`.
    pub fn without(&self, index: &MultiIndex) -> AdmissibleSet {
        if index.is_empty() {
            panic!("∅ cannot be removed from an admissible set");
        }
        let mut removed: Vec<MultiIndex> = vec![index.clone()];
        if let Some(s) = index.as_singleton() {
            removed.extend(self.singletons().into_iter().filter(|&t| t > s).map(MultiIndex::singleton));
        }
        let indexes = self
            .indexes
            .iter()
            .filter(|i| !removed.iter().any(|r| r.is_subset_of(i)))
            .cloned()
            .collect();
        AdmissibleSet { genus: self.genus, gonality: self.gonality, indexes }
    }

    /// Columns in display order: by `d`, then `s`, then larger entries first.
    pub fn display_order(&self) -> Vec<MultiIndex> {
        let mut v: Vec<MultiIndex> = self.indexes.iter().cloned().collect();
        v.sort_by(|a, b| (a.d(), a.s()).cmp(&(b.d(), b.s())).then_with(|| b.cmp(a)));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[&[u32]]) -> BTreeSet<MultiIndex> {
        v.iter().map(|e| MultiIndex::of(e)).collect()
    }

    #[test]
    fn examples() {
        assert!(check_admissible(6, None, &set(&[&[], &[1], &[2], &[1, 1]])).is_empty());
        let v = check_admissible(5, None, &set(&[&[], &[1, 1]]));
        assert!(v.contains(&Violation::NotDownwardClosed {
            index: MultiIndex::of(&[1, 1]),
            missing: MultiIndex::of(&[1])
        }));
        assert!(v.contains(&Violation::TooHeavy { index: MultiIndex::of(&[1, 1]), weight: 6, genus: 5 }));
        let v = check_admissible(8, None, &set(&[&[], &[1], &[2], &[3], &[4]]));
        assert_eq!(v, vec![Violation::AboveGenusBound { index: MultiIndex::of(&[4]), bound: 3 }]);
    }

    #[test]
    fn singleton_gap_and_gonality() {
        let v = check_admissible(9, None, &set(&[&[], &[2]]));
        assert_eq!(v, vec![Violation::SingletonGap { index: MultiIndex::of(&[2]), missing: MultiIndex::of(&[1]) }]);
        let v = check_admissible(9, Some(3), &set(&[&[], &[1], &[2]]));
        assert_eq!(v, vec![Violation::AboveGonalityBound { index: MultiIndex::of(&[2]), bound: 1 }]);
    }

    #[test]
    fn maximal_sets() {
        let g8 = AdmissibleSet::maximal(8, None).unwrap();
        let names: Vec<String> = g8.display_order().iter().map(|i| i.to_string()).collect();
        assert_eq!(names, ["∅", "{1}", "{2}", "{3}", "{1,1}", "{2,1}", "{3,1}", "{2,2}"]);
        assert_eq!(AdmissibleSet::maximal(5, None).unwrap().len(), 3);
    }

    #[test]
    fn removal_closure() {
        let g8 = AdmissibleSet::maximal(8, None).unwrap();
        let r = g8.without(&MultiIndex::of(&[2]));
        let names: Vec<String> = r.display_order().iter().map(|i| i.to_string()).collect();
        assert_eq!(names, ["∅", "{1}", "{1,1}"]);
        assert!(check_admissible(8, None, &r.iter().cloned().collect()).is_empty());
    }
}
