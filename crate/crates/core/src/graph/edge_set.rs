use fixedbitset::FixedBitSet;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::EdgeId;

/// A set of edge ids of one parent graph. Iterates in increasing id order.
#[derive(Clone, Debug, Default)]
pub struct EdgeSet {
    bits: FixedBitSet,
}

impl EdgeSet {
    pub fn with_capacity(capacity: usize) -> EdgeSet {
        EdgeSet { bits: FixedBitSet::with_capacity(capacity) }
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> EdgeSet {
        EdgeSet { bits }
    }

    pub fn from_ids(capacity: usize, ids: impl IntoIterator<Item = EdgeId>) -> EdgeSet {
        let mut set = EdgeSet::with_capacity(capacity);
        set.extend(ids);
        set
    }

    /// Returns `true` if `e` was not already a member.
    pub fn insert(&mut self, e: EdgeId) -> bool {
        if e.0 >= self.bits.len() {
            self.bits.grow(e.0 + 1);
        }
        !self.bits.put(e.0)
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        let had = self.contains(e);
        if had {
            self.bits.set(e.0, false);
        }
        had
    }

    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        self.bits.contains(e.0)
    }

    pub fn clear(&mut self) {
        self.bits.clear();
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits.ones().map(EdgeId)
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &EdgeSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }
}

// Membership equality; capacity is irrelevant.
impl PartialEq for EdgeSet {
    fn eq(&self, other: &Self) -> bool {
        self.iter().eq(other.iter())
    }
}

impl Eq for EdgeSet {}

impl Extend<EdgeId> for EdgeSet {
    fn extend<I: IntoIterator<Item = EdgeId>>(&mut self, iter: I) {
        for e in iter {
            self.insert(e);
        }
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for e in self.iter() {
            seq.serialize_element(&e)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordered_iteration_and_growth() {
        let mut s = EdgeSet::with_capacity(4);
        assert!(s.insert(EdgeId(3)));
        assert!(s.insert(EdgeId(9)));
        assert!(!s.insert(EdgeId(3)));
        s.insert(EdgeId(0));
        assert_eq!(s.to_vec(), vec![EdgeId(0), EdgeId(3), EdgeId(9)]);
        assert!(s.remove(EdgeId(3)));
        assert_eq!(s.len(), 2);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,9]");
    }
}
