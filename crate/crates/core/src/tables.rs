//! Published coefficient lists for `Φ_0, Φ_1, …`, coefficient of `x^k` at index `k`.
//!
//! These seed the polynomial recurrences and serve as golden values.

use crate::family::Family;
use crate::poly::IntPoly;

pub const RANK: &[&[i64]] = &[
    &[1],
    &[1, 1],
    &[1, 1, 1],
    &[1, 1, 1, 1],
    &[1, 1, 1, 2, 1],
    &[1, 2, 2, 2, 2, 1],
    &[1, 2, 3, 3, 3, 3, 1],
    &[1, 3, 4, 5, 5, 4, 3, 1],
    &[1, 3, 5, 7, 8, 7, 6, 4, 1],
    &[1, 4, 7, 10, 12, 12, 10, 7, 4, 1],
];

pub const CUBE: &[&[i64]] = &[
    &[1],
    &[2, 1],
    &[3, 2],
    &[4, 3],
    &[6, 6, 1],
    &[10, 13, 4],
    &[16, 25, 11, 1],
    &[26, 48, 28, 5],
];

pub const MAXCUBE: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[0, 2],
    &[0, 3],
    &[0, 2, 1],
    &[0, 0, 4],
    &[0, 0, 5, 1],
    &[0, 0, 2, 5],
];

pub const DEGREE: &[&[i64]] = &[
    &[1],
    &[0, 2],
    &[0, 2, 1],
    &[0, 2, 2],
    &[0, 1, 4, 1],
    &[0, 0, 5, 4, 1],
    &[0, 0, 3, 9, 3, 1],
    &[0, 0, 1, 11, 10, 3, 1],
];

pub const INDEGREE: &[&[i64]] = &[
    &[1],
    &[1, 1],
    &[1, 2],
    &[1, 3],
    &[1, 4, 1],
    &[1, 5, 4],
    &[1, 6, 8, 1],
    &[1, 7, 13, 5],
];

/// The published list for a family, if it has one.
pub fn list(family: Family) -> Option<&'static [&'static [i64]]> {
    match family {
        Family::Rank => Some(RANK),
        Family::Cube => Some(CUBE),
        Family::MaxCube => Some(MAXCUBE),
        Family::Degree => Some(DEGREE),
        Family::Indegree => Some(INDEGREE),
        Family::Outdegree => None,
    }
}

pub fn printed(family: Family, n: usize) -> Option<IntPoly> {
    list(family)?.get(n).map(|c| IntPoly::from_i64(c))
}
