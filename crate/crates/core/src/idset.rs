use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of `0..universe`, used for class sets and point sets alike.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IdSet(FixedBitSet);

impl IdSet {
    pub fn empty(universe: usize) -> Self {
        IdSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut b = FixedBitSet::with_capacity(universe);
        b.insert_range(..);
        IdSet(b)
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Self {
        let mut s = Self::empty(universe);
        for i in ids {
            s.insert(i);
        }
        s
    }

    pub fn singleton(universe: usize, id: usize) -> Self {
        Self::from_ids(universe, [id])
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, id: usize) {
        self.0.insert(id);
    }

    pub fn remove(&mut self, id: usize) {
        self.0.set(id, false);
    }

    pub fn contains(&self, id: usize) -> bool {
        self.0.contains(id)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &IdSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &IdSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &IdSet) -> IdSet {
        let mut b = self.0.clone();
        b.union_with(&other.0);
        IdSet(b)
    }

    pub fn intersection(&self, other: &IdSet) -> IdSet {
        let mut b = self.0.clone();
        b.intersect_with(&other.0);
        IdSet(b)
    }

    pub fn difference(&self, other: &IdSet) -> IdSet {
        let mut b = self.0.clone();
        b.difference_with(&other.0);
        IdSet(b)
    }

    pub fn complement(&self) -> IdSet {
        let mut b = self.0.clone();
        b.toggle_range(..);
        IdSet(b)
    }

    pub fn union_with(&mut self, other: &IdSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &IdSet) {
        self.0.intersect_with(&other.0);
    }
}

/// Canonical order: by size, then lexicographically on sorted members.
impl Ord for IdSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.universe().cmp(&other.universe()))
    }
}

impl PartialOrd for IdSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IdSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
