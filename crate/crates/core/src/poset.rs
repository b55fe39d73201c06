//! Finite posets given by their cover relation.
//!
//! Elements are stored by position `0..n`; each position carries a label
//! (the `i` of `x_i`). Public operations that name an element take its label.
//! Fences and S-fences use labels `1..=n`.

use std::fmt;
use std::str::FromStr;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Largest poset whose filters [`Poset::enumerate_filters`] will list.
pub const MAX_FILTER_ELEMENTS: usize = 32;

#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<u32>,
    /// `(a, b)` by position: `a` covers `b`. Sorted, no duplicates.
    covers: Vec<(usize, usize)>,
    /// Strict up-sets by position.
    above: Vec<BitSet>,
    /// Strict down-sets by position.
    below: Vec<BitSet>,
}

/// An up-closed subset of a poset's ground set, by position.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FilterSet(BitSet);

impl FilterSet {
    pub fn members(&self) -> &BitSet {
        &self.0
    }

    pub fn into_members(self) -> BitSet {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Poset {
    /// Empty poset.
    pub fn empty() -> Self {
        Self::from_labelled_covers(Vec::new(), Vec::new()).expect("empty poset is valid")
    }

    /// Build from cover pairs `(a, b)` meaning `x_a ≻ x_b`, labels `1..=n`.
    ///
    /// The pairs must form a transitively reduced acyclic relation.
    pub fn from_covers(n: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        let labels = (1..=n as u32).collect::<Vec<_>>();
        let mut covers = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for x in [a, b] {
                if x == 0 || x as usize > n {
                    return Err(Error::UnknownElement(x));
                }
            }
            if a == b {
                return Err(Error::InvalidPoset(format!("x{a} covers itself")));
            }
            covers.push((a as usize - 1, b as usize - 1));
        }
        Self::from_labelled_covers(labels, covers)
    }

    fn from_labelled_covers(labels: Vec<u32>, mut covers: Vec<(usize, usize)>) -> Result<Self> {
        covers.sort_unstable();
        covers.dedup();
        let n = labels.len();
        let (above, below) = closures(n, &covers)?;
        for &(a, b) in &covers {
            // A cover is redundant when some other element sits strictly between.
            if !below[a].is_disjoint(&above[b]) {
                return Err(Error::InvalidPoset(format!(
                    "x{} > x{} is implied by a longer chain",
                    labels[a], labels[b]
                )));
            }
        }
        Ok(Self {
            labels,
            covers,
            above,
            below,
        })
    }

    /// Build from an arbitrary strict order relation, keeping only covers.
    fn from_relation(labels: Vec<u32>, relation: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let (above, below) = closures(n, relation)?;
        let mut covers = Vec::new();
        for a in 0..n {
            for b in below[a].iter() {
                if below[a].intersection(&above[b]).is_empty() {
                    covers.push((a, b));
                }
            }
        }
        Ok(Self {
            labels,
            covers,
            above,
            below,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Cover pairs by position.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Cover pairs by label, `(a, b)` meaning `x_a ≻ x_b`.
    pub fn cover_labels(&self) -> Vec<(u32, u32)> {
        self.covers
            .iter()
            .map(|&(a, b)| (self.labels[a], self.labels[b]))
            .collect()
    }

    pub fn position(&self, label: u32) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::UnknownElement(label))
    }

    /// Positions strictly above position `p`.
    pub fn above(&self, p: usize) -> &BitSet {
        &self.above[p]
    }

    /// Positions strictly below position `p`.
    pub fn below(&self, p: usize) -> &BitSet {
        &self.below[p]
    }

    /// `x ≤ y` by position.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.above[x].contains(y)
    }

    /// Same shape with labels renumbered `1..=n` in position order.
    pub fn relabeled(&self) -> Self {
        Self {
            labels: (1..=self.len() as u32).collect(),
            ..self.clone()
        }
    }

    pub fn dual(&self) -> Self {
        let mut covers: Vec<_> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        covers.sort_unstable();
        Self {
            labels: self.labels.clone(),
            covers,
            above: self.below.clone(),
            below: self.above.clone(),
        }
    }

    /// Induced subposet on the kept positions, labels preserved.
    pub fn induced(&self, keep: &BitSet) -> Self {
        let kept: Vec<usize> = keep.iter().filter(|&p| p < self.len()).collect();
        let mut new_pos = vec![usize::MAX; self.len()];
        for (i, &p) in kept.iter().enumerate() {
            new_pos[p] = i;
        }
        let labels = kept.iter().map(|&p| self.labels[p]).collect();
        let mut relation = Vec::new();
        for &a in &kept {
            for b in self.below[a].iter() {
                if new_pos[b] != usize::MAX {
                    relation.push((new_pos[a], new_pos[b]));
                }
            }
        }
        Self::from_relation(labels, &relation).expect("induced order of a poset is a poset")
    }

    /// Induced subposet on the first `n` positions.
    pub fn prefix(&self, n: usize) -> Self {
        self.induced(&BitSet::full(n.min(self.len())))
    }

    /// `P − x`: the induced subposet without `x`.
    pub fn remove_element(&self, label: u32) -> Result<Self> {
        let p = self.position(label)?;
        let mut keep = BitSet::full(self.len());
        keep.remove(p);
        Ok(self.induced(&keep))
    }

    /// `P * x`: the induced subposet on elements incomparable to `x`.
    pub fn star_remove(&self, label: u32) -> Result<Self> {
        let p = self.position(label)?;
        let mut keep = BitSet::full(self.len());
        keep.difference_with(&self.above[p]);
        keep.difference_with(&self.below[p]);
        keep.remove(p);
        Ok(self.induced(&keep))
    }

    pub fn is_filter(&self, s: &BitSet) -> bool {
        s.iter()
            .all(|p| p < self.len() && self.above[p].is_subset(s))
    }

    pub fn enumerate_filters(&self) -> Result<Vec<FilterSet>> {
        self.enumerate_filters_bounded(MAX_FILTER_ELEMENTS)
    }

    /// Every filter exactly once, sorted by cardinality then bit string.
    ///
    /// Elements are decided top-down along a linear extension, so each
    /// element's up-set is settled when it is reached: it may join the
    /// filter only if its whole up-set already has.
    pub fn enumerate_filters_bounded(&self, limit: usize) -> Result<Vec<FilterSet>> {
        if self.len() > limit {
            return Err(Error::Capacity {
                what: "poset for filter enumeration",
                size: self.len(),
                limit,
            });
        }
        let order = self.top_down_order();
        let mut out = Vec::new();
        let mut current = BitSet::with_capacity(self.len());
        self.split(&order, 0, &mut current, &mut out);
        out.sort_by(|a, b| a.canonical_cmp(b));
        Ok(out.into_iter().map(FilterSet).collect())
    }

    fn split(&self, order: &[usize], i: usize, current: &mut BitSet, out: &mut Vec<BitSet>) {
        let Some(&e) = order.get(i) else {
            out.push(current.clone());
            return;
        };
        self.split(order, i + 1, current, out);
        if self.above[e].is_subset(current) {
            current.insert(e);
            self.split(order, i + 1, current, out);
            current.remove(e);
        }
    }

    /// Positions ordered so every element follows all elements above it.
    fn top_down_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&p| (self.above[p].len(), p));
        order
    }

    /// Text form: `n`, then one `a b` line per cover `x_a ≻ x_b`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.len());
        for (a, b) in self.relabeled().cover_labels() {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }
}

/// Strict up- and down-closures of a relation; rejects cycles.
fn closures(n: usize, relation: &[(usize, usize)]) -> Result<(Vec<BitSet>, Vec<BitSet>)> {
    let mut succ = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(a, b) in relation {
        succ[a].push(b);
        indeg[b] += 1;
    }
    // Kahn's algorithm from the maximal elements downward.
    let mut queue: Vec<usize> = (0..n).filter(|&p| indeg[p] == 0).collect();
    let mut topo = Vec::with_capacity(n);
    while let Some(p) = queue.pop() {
        topo.push(p);
        for &q in &succ[p] {
            indeg[q] -= 1;
            if indeg[q] == 0 {
                queue.push(q);
            }
        }
    }
    if topo.len() != n {
        return Err(Error::InvalidPoset("cover relation has a cycle".into()));
    }
    let mut above = vec![BitSet::with_capacity(n); n];
    for &p in &topo {
        for &q in &succ[p] {
            let mut up = above[p].clone();
            up.insert(p);
            above[q].union_with(&up);
        }
    }
    let mut below = vec![BitSet::with_capacity(n); n];
    for q in 0..n {
        for p in above[q].iter() {
            below[p].insert(q);
        }
    }
    Ok((above, below))
}

/// The fence `Z_n`: `x_{2i}` covers `x_{2i-1}` and `x_{2i+1}`.
pub fn make_fence(n: usize) -> Poset {
    let mut pairs = Vec::new();
    for top in (2..=n).step_by(2) {
        pairs.push((top as u32, top as u32 - 1));
        if top < n {
            pairs.push((top as u32, top as u32 + 1));
        }
    }
    Poset::from_covers(n, &pairs).expect("fence covers are valid")
}

/// The S-fence `φ_n`: `x_1 ≻ x_2 ≻ x_3`, `x_4 ≻ x_2`, `x_4 ≻ x_5`, and
/// `x_{2i} ≻ x_{2i-1}`, `x_{2i} ≻ x_{2i+1}` for `i ≥ 3`, keeping only the
/// pairs with both indices at most `n`.
pub fn make_sfence(n: usize) -> Poset {
    let mut pairs: Vec<(u32, u32)> = vec![(1, 2), (2, 3), (4, 2), (4, 5)];
    for top in (6..=n + 1).step_by(2) {
        pairs.push((top as u32, top as u32 - 1));
        pairs.push((top as u32, top as u32 + 1));
    }
    pairs.retain(|&(a, b)| a as usize <= n && b as usize <= n);
    Poset::from_covers(n, &pairs).expect("S-fence covers are valid")
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("labels", &self.labels)
            .field("covers", &self.cover_labels())
            .finish()
    }
}

impl FromStr for Poset {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (_, first) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing element count".into(),
        })?;
        let n: usize = first.parse().map_err(|_| Error::Parse {
            line: 1,
            msg: format!("expected element count, found {first:?}"),
        })?;
        let mut pairs = Vec::new();
        for (line, l) in lines {
            let nums: Vec<u32> = l
                .split_whitespace()
                .map(|t| t.parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse {
                    line,
                    msg: e.to_string(),
                })?;
            let [a, b] = nums[..] else {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected `a b`, found {l:?}"),
                });
            };
            pairs.push((a, b));
        }
        Poset::from_covers(n, &pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[usize]) -> BitSet {
        labels.iter().map(|l| l - 1).collect()
    }

    #[test]
    fn fence_covers() {
        assert!(make_fence(0).covers().is_empty());
        assert!(make_fence(1).covers().is_empty());
        assert_eq!(make_fence(3).cover_labels(), vec![(2, 1), (2, 3)]);
        assert_eq!(make_fence(4).cover_labels(), vec![(2, 1), (2, 3), (4, 3)]);
    }

    #[test]
    fn sfence_covers() {
        assert!(make_sfence(0).is_empty());
        assert_eq!(make_sfence(3).cover_labels(), vec![(1, 2), (2, 3)]);
        assert_eq!(
            make_sfence(5).cover_labels(),
            vec![(1, 2), (2, 3), (4, 2), (4, 5)]
        );
        assert_eq!(
            make_sfence(6).cover_labels(),
            vec![(1, 2), (2, 3), (4, 2), (4, 5), (6, 5)]
        );
        assert_eq!(
            make_sfence(7).cover_labels(),
            vec![(1, 2), (2, 3), (4, 2), (4, 5), (6, 5), (6, 7)]
        );
    }

    #[test]
    fn dual_reverses_and_is_an_involution() {
        assert_eq!(Poset::empty().dual(), Poset::empty());
        assert_eq!(make_fence(3).dual().cover_labels(), vec![(1, 2), (3, 2)]);
        assert_eq!(make_sfence(7).dual().dual(), make_sfence(7));
    }

    #[test]
    fn remove_element_recomputes_covers() {
        assert_eq!(make_sfence(5).remove_element(5).unwrap(), make_sfence(4));
        let two_chain = make_sfence(3).remove_element(3).unwrap();
        assert_eq!(two_chain.cover_labels(), vec![(1, 2)]);
        // Middle of a chain: the outer pair becomes a cover.
        let chain = make_sfence(3).remove_element(2).unwrap();
        assert_eq!(chain.cover_labels(), vec![(1, 3)]);
        assert_eq!(
            make_sfence(3).remove_element(9),
            Err(Error::UnknownElement(9))
        );
    }

    #[test]
    fn star_remove_drops_comparables() {
        let p = make_sfence(5).star_remove(3).unwrap();
        // x4 > x2 > x3, so only x5 survives.
        assert_eq!(p.labels(), &[5]);
        assert!(p.cover_labels().is_empty());
        assert!(make_sfence(3).star_remove(2).unwrap().is_empty());
        for n in (6..=12).step_by(2) {
            let p = make_sfence(n).star_remove(n as u32).unwrap();
            assert_eq!(p, make_sfence(n - 2), "n = {n}");
        }
        assert_eq!(make_sfence(3).star_remove(0), Err(Error::UnknownElement(0)));
    }

    #[test]
    fn filters_of_small_posets() {
        assert_eq!(Poset::empty().enumerate_filters().unwrap().len(), 1);
        let chain: Vec<_> = make_sfence(3)
            .enumerate_filters()
            .unwrap()
            .into_iter()
            .map(|f| f.into_members())
            .collect();
        assert_eq!(
            chain,
            vec![set(&[]), set(&[1]), set(&[1, 2]), set(&[1, 2, 3])]
        );
        assert_eq!(make_sfence(6).enumerate_filters().unwrap().len(), 16);
    }

    #[test]
    fn filter_enumeration_is_bounded() {
        let p = make_fence(33);
        assert_eq!(
            p.enumerate_filters(),
            Err(Error::Capacity {
                what: "poset for filter enumeration",
                size: 33,
                limit: MAX_FILTER_ELEMENTS
            })
        );
        // Z_n has F_{n+2} filters.
        assert_eq!(
            make_fence(20).enumerate_filters_bounded(20).unwrap().len(),
            17711
        );
        assert!(make_fence(21).enumerate_filters_bounded(20).is_err());
    }

    #[test]
    fn is_filter_checks_upward_closure() {
        let p3 = make_sfence(3);
        assert!(!p3.is_filter(&set(&[2])));
        assert!(p3.is_filter(&BitSet::new()));
        assert!(make_sfence(5).is_filter(&set(&[1, 4])));
        assert!(!make_sfence(5).is_filter(&set(&[5])));
    }

    #[test]
    fn wide_posets_fall_back_to_heap_sets() {
        let p = make_sfence(100);
        assert!(p.is_filter(&set(&[100])));
        assert!(!p.is_filter(&set(&[99])));
        assert!(p.is_filter(&set(&[98, 99, 100])));
        let q = p.remove_element(70).unwrap();
        assert_eq!(q.len(), 99);
    }

    #[test]
    fn rejects_bad_cover_lists() {
        assert!(matches!(
            Poset::from_covers(3, &[(1, 2), (2, 3), (1, 3)]),
            Err(Error::InvalidPoset(_))
        ));
        assert!(matches!(
            Poset::from_covers(2, &[(1, 2), (2, 1)]),
            Err(Error::InvalidPoset(_))
        ));
        assert_eq!(
            Poset::from_covers(2, &[(1, 3)]),
            Err(Error::UnknownElement(3))
        );
    }

    #[test]
    fn text_format_round_trip() {
        let p = make_sfence(8);
        let text = p.to_text();
        assert!(text.starts_with("8\n1 2\n"));
        assert_eq!(text.parse::<Poset>().unwrap(), p);
        assert!(matches!(
            "x".parse::<Poset>(),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            "3\n1 2 3\n".parse::<Poset>(),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
