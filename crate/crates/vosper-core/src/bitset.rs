//! Dense index sets over a fixed universe `0..n`.
//!
//! One set type backs both vertex sets of a digraph and element subsets of a
//! finite group, so a generator set `S` of a group can be used directly as a
//! vertex set of the Cayley digraph it defines. Sets over universes of at
//! most 128 indices stay inline; larger universes spill to the heap.

use serde::ser::{Serialize, SerializeSeq, Serializer};
use smallvec::SmallVec;
use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of `{0, 1, .., universe-1}` stored as a bit mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    universe: usize,
    words: SmallVec<[u64; 2]>,
}

/// Vertex subset of a digraph on `n` vertices.
pub type VertexSet = BitSet;

/// Subset of the elements of a finite group.
pub type GroupSubset = BitSet;

fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD_BITS).max(1)
}

impl BitSet {
    /// The empty set over `0..universe`.
    pub fn empty(universe: usize) -> Self {
        BitSet {
            universe,
            words: SmallVec::from_elem(0, word_count(universe)),
        }
    }

    /// The full set `{0, .., universe-1}`.
    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    /// `{index}` as a subset of `0..universe`.
    pub fn singleton(universe: usize, index: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(index);
        s
    }

    /// Builds a set from member indices. Panics if an index is out of range.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Builds a set over `universe <= 64` from a raw mask.
    pub(crate) fn from_word(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= WORD_BITS);
        let mut s = Self::empty(universe);
        s.words[0] = mask & Self::universe_mask(universe);
        s
    }

    fn universe_mask(universe: usize) -> u64 {
        if universe >= WORD_BITS {
            !0
        } else {
            (1u64 << universe) - 1
        }
    }

    /// First word of the mask; the whole set when `universe <= 64`.
    pub(crate) fn word0(&self) -> u64 {
        self.words[0]
    }

    fn trim(&mut self) {
        let last = self.words.len() - 1;
        let used = self.universe - last * WORD_BITS;
        if used < WORD_BITS {
            self.words[last] &= (1u64 << used) - 1;
        }
        if self.universe == 0 {
            self.words[0] = 0;
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe && self.words[index / WORD_BITS] & (1 << (index % WORD_BITS)) != 0
    }

    pub fn insert(&mut self, index: usize) {
        assert!(
            index < self.universe,
            "index {index} out of universe {}",
            self.universe
        );
        self.words[index / WORD_BITS] |= 1 << (index % WORD_BITS);
    }

    pub fn remove(&mut self, index: usize) {
        if index < self.universe {
            self.words[index / WORD_BITS] &= !(1 << (index % WORD_BITS));
        }
    }

    /// Smallest member, if any.
    pub fn min_index(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(k * WORD_BITS + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "set operation across different universes"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    /// Members of `self` not in `other`.
    pub fn difference(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the sorted member lists, so `{0,3} < {1,2}` and
/// `{0} < {0,1}`. Used wherever a canonical report order is required.
impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Display for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for BitSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for i in self.iter() {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_membership() {
        let mut s = BitSet::empty(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(69);
        assert!(s.contains(0) && s.contains(69) && !s.contains(33));
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_vec(), vec![0, 69]);
        s.remove(0);
        assert_eq!(s.min_index(), Some(69));
    }

    #[test]
    fn complement_respects_universe() {
        let s = BitSet::from_indices(5, [1, 3]);
        assert_eq!(s.complement().to_vec(), vec![0, 2, 4]);
        assert_eq!(BitSet::full(5).len(), 5);
        assert!(BitSet::empty(0).complement().is_empty());
    }

    #[test]
    fn canonical_order_is_lex_on_members() {
        let a = BitSet::from_indices(6, [0, 3]);
        let b = BitSet::from_indices(6, [1, 2]);
        let c = BitSet::from_indices(6, [0, 3, 5]);
        assert!(a < b);
        assert!(a < c);
        assert!(c < b);
    }

    proptest! {
        #[test]
        fn set_algebra_laws(xs in prop::collection::vec(0usize..100, 0..40),
                            ys in prop::collection::vec(0usize..100, 0..40)) {
            let a = BitSet::from_indices(100, xs.iter().copied());
            let b = BitSet::from_indices(100, ys.iter().copied());
            let u = a.union(&b);
            let i = a.intersection(&b);
            prop_assert_eq!(u.len() + i.len(), a.len() + b.len());
            prop_assert!(i.is_subset_of(&a) && i.is_subset_of(&u));
            prop_assert_eq!(a.difference(&b).union(&i), a.clone());
            prop_assert_eq!(a.complement().complement(), a.clone());
            prop_assert!(a.difference(&b).is_disjoint(&b));
        }

        #[test]
        fn iter_matches_contains(xs in prop::collection::vec(0usize..70, 0..30)) {
            let s = BitSet::from_indices(70, xs.iter().copied());
            let listed: Vec<usize> = s.iter().collect();
            for &i in &listed {
                prop_assert!(s.contains(i));
            }
            prop_assert_eq!(listed.len(), s.len());
            let mut sorted = listed.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, listed);
        }
    }
}
