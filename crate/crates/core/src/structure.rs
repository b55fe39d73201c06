//! Splitting `F(P)` at an element `x` as a convex expansion.
//!
//! With `L = F(P − x)`, the filters of `P` not containing `x` are the
//! filters of `L` missing `↓x`, and those containing `x` are `Y ∪ {x}` for
//! the filters `Y` of `L` containing `↑x ∖ {x}`. Their overlap is the
//! interval `K` of `L` running from `(P − x) ∖ ↓x` up to `↑x ∖ {x}`, and
//! `F(P) ≅ L ⊞ K` with `K ≅ F(P * x)`.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::{convex_expansion, filter_lattice, Interval, LatticeDiagram, VertexLabel};
use crate::poly::IntPoly;
use crate::poset::{make_fence, make_sfence, Poset};

#[derive(Debug, Clone)]
pub struct Decomposition {
    /// `P − x`.
    pub minus: Poset,
    /// `P * x`: the elements incomparable to `x`.
    pub star: Poset,
    /// `F(P − x)`.
    pub host: LatticeDiagram,
    /// The doubled interval inside `host`.
    pub cutting: Interval,
}

/// Where the doubled interval touches the host.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuttingKind {
    /// `K` contains the maximum of the host.
    SharesTop,
    /// `K` contains the minimum of the host.
    SharesBottom,
    Interior,
}

impl Decomposition {
    pub fn new(p: &Poset, label: u32) -> Result<Self> {
        let x = p.position(label)?;
        let minus = p.remove_element(label)?;
        let star = p.star_remove(label)?;
        let host = filter_lattice(&minus)?;
        let to_minus = |set: &BitSet| -> BitSet {
            set.iter()
                .map(|q| minus.position(p.labels()[q]).expect("x is not in the set"))
                .collect()
        };
        let top_set = to_minus(p.above(x));
        let bottom_set = BitSet::full(minus.len()).difference(&to_minus(p.below(x)));
        let find = |s: &BitSet| {
            host.vertex_of(s)
                .ok_or_else(|| Error::InvalidLattice(format!("{s:?} is not a filter of P - x")))
        };
        let (top, bottom) = (find(&top_set)?, find(&bottom_set)?);
        let cutting = Interval::new(&host, bottom, top)?;
        Ok(Self {
            minus,
            star,
            host,
            cutting,
        })
    }

    pub fn kind(&self) -> CuttingKind {
        if self.cutting.top == self.host.top() {
            CuttingKind::SharesTop
        } else if self.cutting.bottom == self.host.bottom() {
            CuttingKind::SharesBottom
        } else {
            CuttingKind::Interior
        }
    }

    pub fn cutting_lattice(&self) -> LatticeDiagram {
        self.cutting.sublattice(&self.host)
    }

    pub fn expanded(&self) -> Result<LatticeDiagram> {
        convex_expansion(&self.host, &self.cutting)
    }

    /// Rank polynomial of `L ⊞ K` from those of `L` and `K`, for a cutting
    /// sharing an end with the host.
    pub fn expanded_rank_poly(&self) -> Option<IntPoly> {
        let rl = rank_poly(&self.host);
        let rk = rank_poly(&self.cutting_lattice());
        match self.kind() {
            CuttingKind::SharesTop => {
                let h = self.host.rank(self.cutting.bottom);
                Some(&rl + &rk.shift(h + 1))
            }
            CuttingKind::SharesBottom => Some(&rk + &rl.shift(1)),
            CuttingKind::Interior => None,
        }
    }
}

/// Rank-generating polynomial of a graded diagram.
pub fn rank_poly(l: &LatticeDiagram) -> IntPoly {
    let mut counts = vec![0usize; l.height() + 1];
    for v in 0..l.len() {
        counts[l.rank(v)] += 1;
    }
    IntPoly::from_counts(&counts)
}

/// `φ_n` split at `x_3`: the host is `F` of the dual fence on `n − 1`
/// elements and the cutting is `F(Z_{n−4})`.
pub fn split_at_third(n: usize) -> Result<Decomposition> {
    if n < 3 {
        return Err(Error::Domain {
            family: "split at x3",
            n,
            min: 3,
        });
    }
    Decomposition::new(&make_sfence(n), 3)
}

/// `φ_n` split at `x_n`: the host is `Φ_{n−1}` and the cutting is `Φ_{n−2}`.
/// For `n = 3, 4` the element `x_n` is comparable to `x_2`, so the cutting
/// is smaller and the split is refused.
pub fn split_at_last(n: usize) -> Result<Decomposition> {
    if n < 5 {
        return Err(Error::Domain {
            family: "split at xn",
            n,
            min: 5,
        });
    }
    Decomposition::new(&make_sfence(n), n as u32)
}

/// The posets the two splittings are expected to produce, as
/// `(minus, star)` up to relabelling.
pub fn expected_third(n: usize) -> (Poset, Poset) {
    (make_fence(n - 1).dual(), make_fence(n.saturating_sub(4)))
}

pub fn expected_last(n: usize) -> (Poset, Poset) {
    (make_sfence(n - 1), make_sfence(n - 2))
}

/// Filter labels of the vertices of `K`, for display and tests.
pub fn cutting_filters(d: &Decomposition) -> Vec<BitSet> {
    let reach = d.host.reachability();
    d.cutting
        .vertices(&reach)
        .into_iter()
        .filter_map(|v| match d.host.label(v) {
            VertexLabel::Filter(f) => Some(f.clone()),
            VertexLabel::Synthetic(_) => None,
        })
        .collect()
}
