#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;

use flc_core::bitset::BitSet;
use flc_core::census;
use flc_core::lattice::{convex_expansion, filter_lattice, is_cutting, iso_check, Interval};
use flc_core::structure::Decomposition;
use flc_core::{make_fence, make_sfence, Poset};

/// Filters by testing all `2^n` subsets.
fn brute_filters(p: &Poset) -> Vec<BitSet> {
    let n = p.len();
    let mut out: Vec<BitSet> = (0u64..1 << n)
        .map(|m| BitSet::from_indices((0..n).filter(|&i| m >> i & 1 == 1)))
        .filter(|s| s.iter().all(|i| p.above(i).is_subset(s)))
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

fn enumerated(p: &Poset) -> Vec<BitSet> {
    p.enumerate_filters()
        .unwrap()
        .into_iter()
        .map(|f| f.into_members())
        .collect()
}

#[test]
fn filter_enumeration_matches_brute_force() {
    for n in 0..=12 {
        for p in [make_sfence(n), make_fence(n), make_fence(n).dual()] {
            assert_eq!(enumerated(&p), brute_filters(&p), "n={n}");
        }
    }
}

/// A random poset on `n` elements: each pair `i < j` is related with
/// `x_i` above `x_j` with the given probability, then transitively reduced.
fn random_poset(n: usize, bits: &[bool]) -> Poset {
    let mut above = vec![vec![false; n]; n];
    let mut it = bits.iter().copied().cycle();
    for i in 0..n {
        for j in i + 1..n {
            above[i][j] = it.next().unwrap_or(false);
        }
    }
    // Transitive closure, then keep only covers.
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if above[i][k] && above[k][j] {
                    above[i][j] = true;
                }
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if above[i][j] && !(0..n).any(|k| above[i][k] && above[k][j]) {
                covers.push((i as u32 + 1, j as u32 + 1));
            }
        }
    }
    Poset::from_covers(n, &covers).unwrap()
}

fn arb_poset() -> impl Strategy<Value = Poset> {
    (
        0usize..=8,
        prop::collection::vec(prop::bool::weighted(0.3), 28),
    )
        .prop_map(|(n, bits)| random_poset(n, &bits))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_filters_match_brute_force(p in arb_poset()) {
        prop_assert_eq!(enumerated(&p), brute_filters(&p));
    }

    #[test]
    fn text_round_trip(p in arb_poset()) {
        let back: Poset = p.to_text().parse().unwrap();
        prop_assert_eq!(back, p.relabeled());
    }

    #[test]
    fn cube_poly_is_indegree_at_one_plus_x(p in arb_poset()) {
        let l = filter_lattice(&p).unwrap();
        let one_x = flc_core::IntPoly::from_i64(&[1, 1]);
        prop_assert_eq!(
            census::cube_polynomial(&l).unwrap(),
            census::indegree_polynomial(&l).compose(&one_x)
        );
    }

    #[test]
    fn maximal_cubes_by_facets_match_exhaustive(p in arb_poset()) {
        let l = filter_lattice(&p).unwrap();
        prop_assert_eq!(
            census::maximal_cube_polynomial(&l).unwrap(),
            census::maximal_cube_polynomial_exhaustive(&l).unwrap()
        );
    }

    #[test]
    fn every_element_splits_the_filter_lattice(p in arb_poset()) {
        let whole = filter_lattice(&p).unwrap();
        for &x in p.labels() {
            let d = Decomposition::new(&p, x).unwrap();
            prop_assert!(is_cutting(&d.host, &d.cutting));
            let k = d.cutting_lattice();
            prop_assert_eq!(k.len(), p.star_remove(x).unwrap().enumerate_filters().unwrap().len());
            let e = d.expanded().unwrap();
            prop_assert_eq!(e.len(), whole.len());
            prop_assert_eq!(e.arc_count(), whole.arc_count());
            if whole.len() <= 60 {
                prop_assert!(iso_check(&e, &whole).unwrap());
            }
        }
    }
}

#[test]
fn ranks_are_complements_of_filter_sizes() {
    let p = make_sfence(10);
    let l = filter_lattice(&p).unwrap();
    for v in 0..l.len() {
        let flc_core::lattice::VertexLabel::Filter(f) = l.label(v) else {
            panic!("filter label expected")
        };
        assert_eq!(l.rank(v), 10 - f.len());
    }
}

#[test]
fn expansion_of_any_end_interval_is_graded() {
    // Every interval containing the top of a filter lattice is a cutting.
    let l = filter_lattice(&make_sfence(6)).unwrap();
    let reach = l.reachability();
    for b in 0..l.len() {
        let k = Interval::with_reachability(&reach, b, l.top()).unwrap();
        let e = convex_expansion(&l, &k).unwrap();
        assert_eq!(e.len(), l.len() + k.vertices(&reach).len());
        assert_eq!(e.height(), l.height() + 1);
    }
}
