//! Growable bit sets over `0..len`.
//!
//! Sets whose members are all below 64 live in a single inline word; wider
//! sets spill to the heap. Element `i` is bit `i % 64` of word `i / 64`.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

const WORD: usize = 64;

#[derive(Clone, Default)]
pub struct BitSet {
    words: SmallVec<[u64; 1]>,
}

impl BitSet {
    fn trimmed(&self) -> &[u64] {
        let end = self
            .words
            .iter()
            .rposition(|&w| w != 0)
            .map_or(0, |i| i + 1);
        &self.words[..end]
    }
}

impl PartialEq for BitSet {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for BitSet {}

impl std::hash::Hash for BitSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl BitSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// A set with room for `len` members without reallocating.
    pub fn with_capacity(len: usize) -> Self {
        let mut words = SmallVec::new();
        words.resize(len.div_ceil(WORD), 0);
        Self { words }
    }

    /// The set `{0, 1, .., len-1}`.
    pub fn full(len: usize) -> Self {
        let mut s = Self::with_capacity(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = Self::new();
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / WORD)
            .is_some_and(|w| (w >> (i % WORD)) & 1 == 1)
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let w = i / WORD;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let mask = 1u64 << (i % WORD);
        let fresh = self.words[w] & mask == 0;
        self.words[w] |= mask;
        fresh
    }

    pub fn remove(&mut self, i: usize) -> bool {
        match self.words.get_mut(i / WORD) {
            Some(w) => {
                let mask = 1u64 << (i % WORD);
                let had = *w & mask != 0;
                *w &= !mask;
                had
            }
            None => false,
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (i, a) in self.words.iter_mut().enumerate() {
            *a &= other.words.get(i).copied().unwrap_or(0);
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    /// `'0'`/`'1'` string of membership for positions `0..len`, position 0 first.
    pub fn to_bit_string(&self, len: usize) -> String {
        (0..len)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }

    /// Cardinality first, then lexicographic on the bit string
    /// `b0 b1 .. b(len-1)` with `'0' < '1'`.
    pub fn canonical_cmp(&self, other: &BitSet) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            // The lowest differing position decides: the set lacking it sorts first.
            let n = self.words.len().max(other.words.len());
            for i in 0..n {
                let a = self.words.get(i).copied().unwrap_or(0);
                let b = other.words.get(i).copied().unwrap_or(0);
                let diff = a ^ b;
                if diff != 0 {
                    let low = diff & diff.wrapping_neg();
                    return if a & low == 0 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn wide_sets_spill_past_one_word() {
        let mut s = BitSet::new();
        s.insert(3);
        s.insert(70);
        s.insert(130);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 70, 130]);
        assert_eq!(s.len(), 3);
        assert!(s.remove(70));
        assert!(!s.contains(70));
        assert!(!s.remove(500));
    }

    #[test]
    fn equality_ignores_trailing_zero_words() {
        let mut a = BitSet::new();
        a.insert(100);
        a.remove(100);
        a.insert(1);
        let b = BitSet::from_indices([1]);
        assert_eq!(a, b);
        let mut set = std::collections::HashSet::new();
        set.insert(a);
        assert!(set.contains(&b));
    }

    #[test]
    fn canonical_order_matches_bit_strings() {
        let sets = [
            BitSet::from_indices([0]),
            BitSet::from_indices([1]),
            BitSet::from_indices([0, 2]),
            BitSet::from_indices([1, 2]),
            BitSet::new(),
        ];
        let mut sorted = sets.to_vec();
        sorted.sort_by(|a, b| a.canonical_cmp(b));
        let strings: Vec<_> = sorted.iter().map(|s| s.to_bit_string(3)).collect();
        assert_eq!(strings, ["000", "010", "100", "011", "101"]);
    }

    proptest! {
        #[test]
        fn canonical_cmp_agrees_with_string_order(
            a in proptest::collection::btree_set(0usize..80, 0..10),
            b in proptest::collection::btree_set(0usize..80, 0..10),
        ) {
            let sa = BitSet::from_indices(a.iter().copied());
            let sb = BitSet::from_indices(b.iter().copied());
            let expect = sa.len().cmp(&sb.len())
                .then_with(|| sa.to_bit_string(80).cmp(&sb.to_bit_string(80)));
            prop_assert_eq!(sa.canonical_cmp(&sb), expect);
        }

        #[test]
        fn set_algebra_matches_btreeset(
            a in proptest::collection::btree_set(0usize..150, 0..20),
            b in proptest::collection::btree_set(0usize..150, 0..20),
        ) {
            let sa = BitSet::from_indices(a.iter().copied());
            let sb = BitSet::from_indices(b.iter().copied());
            prop_assert_eq!(sa.union(&sb).iter().collect::<Vec<_>>(), a.union(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.intersection(&sb).iter().collect::<Vec<_>>(), a.intersection(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.difference(&sb).iter().collect::<Vec<_>>(), a.difference(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.is_disjoint(&sb), a.is_disjoint(&b));
        }
    }
}
