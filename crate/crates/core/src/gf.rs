//! Rational generating functions in `y` with coefficients in `Z[x]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::formula::binom;
use crate::poly::IntPoly;

/// Upper limit on requested expansion length.
pub const MAX_TERMS: usize = 4096;

/// `correction(y) + numerator(y) / denominator(y)`, each a list of
/// `Z[x]` coefficients indexed by the power of `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: Vec<IntPoly>,
    denominator: Vec<IntPoly>,
    correction: Vec<IntPoly>,
}

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

impl RationalSeries {
    /// Fails unless the denominator's constant term is `1`.
    pub fn new(
        numerator: Vec<IntPoly>,
        denominator: Vec<IntPoly>,
        correction: Vec<IntPoly>,
    ) -> Result<Self> {
        if denominator.first() != Some(&IntPoly::one()) {
            return Err(Error::NonUnitDenominator);
        }
        Ok(Self {
            numerator,
            denominator,
            correction,
        })
    }

    pub fn numerator(&self) -> &[IntPoly] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[IntPoly] {
        &self.denominator
    }

    pub fn correction(&self) -> &[IntPoly] {
        &self.correction
    }

    fn quotient(&self, terms: usize) -> Vec<IntPoly> {
        let mut c: Vec<IntPoly> = Vec::with_capacity(terms);
        for n in 0..terms {
            let mut cn = self.numerator.get(n).cloned().unwrap_or_else(IntPoly::zero);
            for (i, d) in self.denominator.iter().enumerate().skip(1).take(n) {
                cn = &cn - &(d * &c[n - i]);
            }
            c.push(cn);
        }
        c
    }

    /// The first `terms` coefficients.
    pub fn expand(&self, terms: usize) -> Result<Vec<IntPoly>> {
        if terms > MAX_TERMS {
            return Err(Error::Capacity {
                what: "series terms",
                size: terms,
                limit: MAX_TERMS,
            });
        }
        let mut c = self.quotient(terms);
        for (n, extra) in self.correction.iter().enumerate().take(terms) {
            c[n] = &c[n] + extra;
        }
        Ok(c)
    }

    /// Whether `(series − correction) · denominator ≡ numerator (mod y^len)`.
    pub fn is_exact(&self, series: &[IntPoly]) -> bool {
        let len = series.len();
        let bare: Vec<IntPoly> = series
            .iter()
            .enumerate()
            .map(|(n, s)| match self.correction.get(n) {
                Some(c) => s - c,
                None => s.clone(),
            })
            .collect();
        (0..len).all(|n| {
            let mut acc = IntPoly::zero();
            for (i, d) in self.denominator.iter().enumerate().take(n + 1) {
                acc = &acc + &(d * &bare[n - i]);
            }
            acc == self.numerator.get(n).cloned().unwrap_or_else(IntPoly::zero)
        })
    }
}

/// The series with a known closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GfKind {
    Rank,
    /// `Σ R_{2m} z^m`.
    RankEven,
    /// `Σ R_{2m+1} z^m`.
    RankOdd,
    Cube,
    MaxCube,
    Degree,
    Indegree,
    /// `Σ F_{n+1} y^n`.
    Fib,
}

impl GfKind {
    pub const ALL: [GfKind; 8] = [
        GfKind::Rank,
        GfKind::RankEven,
        GfKind::RankOdd,
        GfKind::Cube,
        GfKind::MaxCube,
        GfKind::Degree,
        GfKind::Indegree,
        GfKind::Fib,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GfKind::Rank => "rank",
            GfKind::RankEven => "rank-even",
            GfKind::RankOdd => "rank-odd",
            GfKind::Cube => "cube",
            GfKind::MaxCube => "maxcube",
            GfKind::Degree => "degree",
            GfKind::Indegree => "indegree",
            GfKind::Fib => "fib",
        }
    }

    pub fn series(self) -> RationalSeries {
        let rank_half_den = vec![p(&[1]), p(&[-1, -1, -1]), p(&[0, 0, 1])];
        let (num, den, corr) = match self {
            GfKind::RankEven => (
                vec![p(&[1]), p(&[-1]), p(&[1])],
                rank_half_den,
                vec![p(&[]), p(&[1])],
            ),
            GfKind::RankOdd => (vec![p(&[1, 1]), p(&[0, -1, -1])], rank_half_den, vec![]),
            GfKind::Rank => (
                vec![
                    p(&[1]),
                    p(&[1, 1]),
                    p(&[]),
                    p(&[0, -1, -1]),
                    p(&[0, -1, -1]),
                    p(&[]),
                    p(&[0, 0, 1]),
                ],
                vec![p(&[1]), p(&[]), p(&[-1, -1, -1]), p(&[]), p(&[0, 0, 1])],
                vec![],
            ),
            GfKind::Cube => (
                vec![
                    p(&[1]),
                    p(&[1, 1]),
                    p(&[]),
                    p(&[-1, -2, -1]),
                    p(&[-1, -2, -1]),
                ],
                vec![p(&[1]), p(&[-1]), p(&[-1, -1])],
                vec![],
            ),
            GfKind::MaxCube => (
                vec![p(&[1]), p(&[2])],
                vec![p(&[1]), p(&[]), p(&[0, -1]), p(&[0, -1])],
                vec![p(&[]), p(&[-2, 1]), p(&[0, 1])],
            ),
            GfKind::Degree => (
                vec![p(&[1]), p(&[1]), p(&[0, 0, -1])],
                vec![p(&[1]), p(&[0, -1]), p(&[0, -1]), p(&[0, -1, 1])],
                vec![p(&[]), p(&[-1, 1]), p(&[0, 0, 1])],
            ),
            GfKind::Indegree => (
                vec![p(&[1]), p(&[0, 1]), p(&[]), p(&[0, 0, -1]), p(&[0, 0, -1])],
                vec![p(&[1]), p(&[-1]), p(&[0, -1])],
                vec![],
            ),
            GfKind::Fib => (vec![p(&[1])], vec![p(&[1]), p(&[-1]), p(&[-1])], vec![]),
        };
        RationalSeries::new(num, den, corr).expect("built-in denominators are monic")
    }
}

impl fmt::Display for GfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GfKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        GfKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown generating function {s:?}"))
    }
}

/// `1 / ((1 − xy)(1 − xy²) − xy³)`.
pub fn f_xy() -> RationalSeries {
    RationalSeries::new(
        vec![p(&[1])],
        vec![p(&[1]), p(&[0, -1]), p(&[0, -1]), p(&[0, -1, 1])],
        vec![],
    )
    .expect("monic denominator")
}

/// `[x^k][y^n] f_xy = Σ_j C(n − 2j, k − j) · C(j, n − k − j)`.
pub fn f_xy_coeff(n: usize, k: usize) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    (0..=n / 2)
        .map(|j| binom(n - 2 * j, k - j) * binom(j, n - k - j))
        .sum()
}

/// Rows of `f_xy` by series division, cross-checked term by term against
/// the binomial sum.
pub fn f_xy_expand(terms: usize) -> Result<Vec<IntPoly>> {
    let rows = f_xy().expand(terms)?;
    for (n, row) in rows.iter().enumerate() {
        for k in 0..=n {
            if row.coeff(k) != f_xy_coeff(n, k) {
                return Err(Error::RouteMismatch { n, k });
            }
        }
        if row.degree().is_some_and(|d| d > n) {
            return Err(Error::RouteMismatch { n, k: n + 1 });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;
    use crate::formula::{self, fib};
    use crate::tables;

    fn printed(family: Family) -> Vec<IntPoly> {
        tables::list(family)
            .unwrap()
            .iter()
            .map(|c| IntPoly::from_i64(c))
            .collect()
    }

    #[test]
    fn leading_terms_match_tables() {
        let cases = [
            (GfKind::Rank, Family::Rank),
            (GfKind::Cube, Family::Cube),
            (GfKind::MaxCube, Family::MaxCube),
            (GfKind::Degree, Family::Degree),
            (GfKind::Indegree, Family::Indegree),
        ];
        for (kind, family) in cases {
            let want = printed(family);
            assert_eq!(kind.series().expand(want.len()).unwrap(), want, "{kind}");
        }
    }

    #[test]
    fn rank_halves_interleave() {
        let r = GfKind::Rank.series().expand(40).unwrap();
        let even = GfKind::RankEven.series().expand(20).unwrap();
        let odd = GfKind::RankOdd.series().expand(20).unwrap();
        for m in 0..20 {
            assert_eq!(even[m], r[2 * m], "m={m}");
            assert_eq!(odd[m], r[2 * m + 1], "m={m}");
        }
    }

    #[test]
    fn agrees_with_polynomial_recurrences() {
        let pairs = [
            (GfKind::Rank, Family::Rank),
            (GfKind::Cube, Family::Cube),
            (GfKind::MaxCube, Family::MaxCube),
            (GfKind::Degree, Family::Degree),
            (GfKind::Indegree, Family::Indegree),
        ];
        for (kind, family) in pairs {
            let rec = formula::poly_rec_seq(family, 40).unwrap();
            assert_eq!(kind.series().expand(41).unwrap(), rec, "{kind}");
        }
    }

    #[test]
    fn expansions_are_exact() {
        for kind in GfKind::ALL {
            let s = kind.series();
            let rows = s.expand(30).unwrap();
            assert!(s.is_exact(&rows), "{kind}");
            let mut bad = rows.clone();
            bad[7] = &bad[7] + &IntPoly::x();
            assert!(!s.is_exact(&bad), "{kind}");
        }
    }

    #[test]
    fn fib_series() {
        let rows = GfKind::Fib.series().expand(30).unwrap();
        for (n, r) in rows.iter().enumerate() {
            assert_eq!(r, &IntPoly::constant(fib(n + 1)));
        }
    }

    #[test]
    fn rejects_non_unit_denominator() {
        let r = RationalSeries::new(vec![p(&[1])], vec![p(&[2])], vec![]);
        assert_eq!(r, Err(Error::NonUnitDenominator));
        let r = RationalSeries::new(vec![p(&[1])], vec![p(&[1, 1])], vec![]);
        assert_eq!(r, Err(Error::NonUnitDenominator));
    }

    #[test]
    fn f_xy_two_routes() {
        let rows = f_xy_expand(40).unwrap();
        assert_eq!(rows[0], p(&[1]));
        assert_eq!(rows[1], p(&[0, 1]));
        assert_eq!(rows[2], p(&[0, 1, 1]));
        // Same denominator as the degree series.
        assert_eq!(f_xy().denominator(), GfKind::Degree.series().denominator());
    }

    #[test]
    fn terms_are_bounded() {
        assert!(matches!(
            GfKind::Fib.series().expand(MAX_TERMS + 1),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn names_round_trip() {
        for kind in GfKind::ALL {
            assert_eq!(kind.name().parse::<GfKind>().unwrap(), kind);
        }
        assert!("nope".parse::<GfKind>().is_err());
    }
}
