//! Recurrences and closed-form coefficient formulas for the `Φ_n` families.
//!
//! All binomials go through [`binom`], which is zero whenever `0 ≤ k ≤ n`
//! fails. Several formulas rely on that to make out-of-range terms vanish.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::poly::IntPoly;
use crate::tables;

/// `C(n, k)`, or zero unless `0 ≤ k ≤ n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `F_n` with `F_0 = 0`, `F_1 = 1`.
pub fn fib(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// The (1,3,3)-Padovan numbers: `p_0 = 1`, `p_1 = p_2 = 3`, `p_n = p_{n-2} + p_{n-3}`.
pub fn padovan133(n: usize) -> BigInt {
    let mut p: Vec<BigInt> = vec![1.into(), 3.into(), 3.into()];
    while p.len() <= n {
        let k = p.len();
        let next = &p[k - 2] + &p[k - 3];
        p.push(next);
    }
    p.swap_remove(n)
}

/// Coefficient of `x^k` in `(1 + x + x^2)^n`.
pub fn trinomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 {
        return BigInt::zero();
    }
    (0..=k / 2).map(|i| binom(n, k - i) * binom(k - i, i)).sum()
}

/// `g_n(x) = Σ_i (-1)^i C(n-i, i) x^{2i} (1+x+x^2)^{n-2i}`, zero for `n < 0`.
pub fn g_poly(n: i64) -> IntPoly {
    if n < 0 {
        return IntPoly::zero();
    }
    let t = IntPoly::from_i64(&[1, 1, 1]);
    let mut sum = IntPoly::zero();
    for i in 0..=n / 2 {
        let mut term = IntPoly::constant(binom(n - i, i)).shift(2 * i as usize);
        for _ in 0..n - 2 * i {
            term = &term * &t;
        }
        if i % 2 == 1 {
            term = -term;
        }
        sum = &sum + &term;
    }
    sum
}

fn signed(i: i64, v: BigInt) -> BigInt {
    if i % 2 == 0 {
        v
    } else {
        -v
    }
}

/// `Σ_{i=0}^{⌊m/2⌋} (-1)^i C(m-i, i) [x^{k-2i-shift}](1+x+x^2)^{m-2i}`; empty for `m < 0`.
fn g_coeff(m: i64, k: i64) -> BigInt {
    if m < 0 {
        return BigInt::zero();
    }
    (0..=m / 2)
        .map(|i| signed(i, binom(m - i, i) * trinomial(m - 2 * i, k - 2 * i)))
        .sum()
}

/// Rank coefficient `r_{n,k}` by the closed form split on the parity of `n`.
pub fn r_coeff(n: usize, k: usize) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    let m = n / 2;
    if n % 2 == 0 {
        let delta = if m == 1 && k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        delta + g_coeff(m, k) - g_coeff(m - 1, k) + g_coeff(m - 2, k)
    } else {
        g_coeff(m, k) + g_coeff(m, k - 1) - g_coeff(m - 1, k - 1) - g_coeff(m - 1, k - 2)
    }
}

/// `R_n` assembled from the `g` polynomials directly.
pub fn rank_poly_via_g(n: usize) -> IntPoly {
    let m = (n / 2) as i64;
    if n.is_multiple_of(2) {
        let z = if m == 1 {
            IntPoly::one()
        } else {
            IntPoly::zero()
        };
        &(&(&z + &g_poly(m)) - &g_poly(m - 1)) + &g_poly(m - 2)
    } else {
        let one_x = IntPoly::from_i64(&[1, 1]);
        let x_x2 = IntPoly::from_i64(&[0, 1, 1]);
        &(&one_x * &g_poly(m)) - &(&x_x2 * &g_poly(m - 1))
    }
}

/// Cube coefficient `q_{n,k}` by the three-sum binomial formula.
pub fn q_coeff(n: usize, k: usize) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    let first: BigInt = (0..=(n + 1) / 2)
        .map(|j| binom(n - j + 1, j) * binom(j, k))
        .sum();
    let second: BigInt = (2..=(n + 1) / 2)
        .map(|j| binom(n - j - 1, j - 2) * binom(j, k))
        .sum();
    let third: BigInt = (2..=n / 2)
        .map(|j| binom(n - j - 2, j - 2) * binom(j, k))
        .sum();
    first - second - third
}

fn check_domain(family: Family, n: usize) -> Result<()> {
    let min = family.closed_form_from().unwrap_or(usize::MAX);
    if n < min {
        return Err(Error::Domain {
            family: family.name(),
            n,
            min,
        });
    }
    Ok(())
}

/// Maximal-cube coefficient `h_{n,k} = C(k+1, n-2k) + C(k, n-2k-1)`, for `n ≥ 3`.
pub fn h_coeff(n: usize, k: usize) -> Result<BigInt> {
    check_domain(Family::MaxCube, n)?;
    Ok(raw::h(n, k))
}

/// Degree coefficient `d_{n,k}`, for `n ≥ 3`.
pub fn d_coeff(n: usize, k: usize) -> Result<BigInt> {
    check_domain(Family::Degree, n)?;
    Ok(raw::d(n, k))
}

/// Indegree coefficient `d⁻_{n,k} = C(n-k-2, k-1) + C(n-k, k)`, for `n ≥ 3`.
pub fn dm_coeff(n: usize, k: usize) -> Result<BigInt> {
    check_domain(Family::Indegree, n)?;
    Ok(raw::dm(n, k))
}

/// The closed forms evaluated without domain checks, for probing the
/// published ranges.
pub mod raw {
    use super::*;

    pub fn h(n: usize, k: usize) -> BigInt {
        let (n, k) = (n as i64, k as i64);
        binom(k + 1, n - 2 * k) + binom(k, n - 2 * k - 1)
    }

    pub fn d(n: usize, k: usize) -> BigInt {
        let (n, k) = (n as i64, k as i64);
        (0..=k)
            .map(|j| {
                binom(n - 2 * j, k - j) * binom(j, n - k - j)
                    + binom(n - 2 * j - 1, k - j) * binom(j, n - k - j - 1)
                    - binom(n - 2 * j - 2, k - j - 2) * binom(j, n - k - j)
            })
            .sum()
    }

    pub fn dm(n: usize, k: usize) -> BigInt {
        let (n, k) = (n as i64, k as i64);
        binom(n - k - 2, k - 1) + binom(n - k, k)
    }
}

/// Largest power of `x` any family's `n`-th polynomial can carry.
fn max_degree(family: Family, n: usize) -> usize {
    match family {
        Family::Degree => 2 * n,
        _ => n,
    }
}

/// The closed-form polynomial for `Φ_n`, within the formula's domain.
pub fn closed_poly(family: Family, n: usize) -> Result<IntPoly> {
    check_domain(family, n)?;
    Ok(closed_poly_unchecked(family, n))
}

/// The closed-form polynomial with no domain check. Outdegree has no
/// closed form and yields zero.
pub fn closed_poly_unchecked(family: Family, n: usize) -> IntPoly {
    let coeff = |k| match family {
        Family::Rank => r_coeff(n, k),
        Family::Cube => q_coeff(n, k),
        Family::MaxCube => raw::h(n, k),
        Family::Degree => raw::d(n, k),
        Family::Indegree => raw::dm(n, k),
        Family::Outdegree => BigInt::zero(),
    };
    IntPoly::from_coeffs((0..=max_degree(family, n)).map(coeff).collect())
}

fn base(family: Family, n: usize) -> IntPoly {
    tables::printed(family, n).expect("base row present in published list")
}

/// `R_0..=R_max`: published rows through `R_4`, then the parity-split recurrence.
pub fn rank_poly_seq(max: usize) -> Vec<IntPoly> {
    let x = IntPoly::x();
    let x2 = x.shift(1);
    let mut out = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let next = if n <= 4 {
            base(Family::Rank, n)
        } else if n % 2 == 1 {
            &(&x * &out[n - 1]) + &out[n - 2]
        } else {
            &out[n - 1] + &(&x2 * &out[n - 2])
        };
        out.push(next);
    }
    out
}

/// `Q_0..=Q_max`: published rows through `Q_4`, then `Q_n = Q_{n-1} + (1+x) Q_{n-2}`.
pub fn cube_poly_seq(max: usize) -> Vec<IntPoly> {
    let one_x = IntPoly::from_i64(&[1, 1]);
    let mut out: Vec<IntPoly> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let next = if n <= 4 {
            base(Family::Cube, n)
        } else {
            &out[n - 1] + &(&one_x * &out[n - 2])
        };
        out.push(next);
    }
    out
}

/// `H_0..=H_max`: published rows through `H_5`, then `H_n = x H_{n-2} + x H_{n-3}`.
pub fn maxcube_poly_seq(max: usize) -> Vec<IntPoly> {
    let mut out: Vec<IntPoly> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let next = if n <= 5 {
            base(Family::MaxCube, n)
        } else {
            (&out[n - 2] + &out[n - 3]).shift(1)
        };
        out.push(next);
    }
    out
}

/// `D_0..=D_max`: published rows through `D_5`, then
/// `D_n = x D_{n-1} + x D_{n-2} + (x - x^2) D_{n-3}`.
pub fn degree_poly_seq(max: usize) -> Vec<IntPoly> {
    let x_x2 = IntPoly::from_i64(&[0, 1, -1]);
    let mut out: Vec<IntPoly> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let next = if n <= 5 {
            base(Family::Degree, n)
        } else {
            &(&out[n - 1] + &out[n - 2]).shift(1) + &(&x_x2 * &out[n - 3])
        };
        out.push(next);
    }
    out
}

/// `D⁻_0..=D⁻_max`: published rows through `D⁻_4`, then `D⁻_n = D⁻_{n-1} + x D⁻_{n-2}`.
pub fn indegree_poly_seq(max: usize) -> Vec<IntPoly> {
    let mut out: Vec<IntPoly> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let next = if n <= 4 {
            base(Family::Indegree, n)
        } else {
            &out[n - 1] + &out[n - 2].shift(1)
        };
        out.push(next);
    }
    out
}

/// Rows `0..=max` of a family's polynomial recurrence. `None` for outdegree.
pub fn poly_rec_seq(family: Family, max: usize) -> Option<Vec<IntPoly>> {
    Some(match family {
        Family::Rank => rank_poly_seq(max),
        Family::Cube => cube_poly_seq(max),
        Family::MaxCube => maxcube_poly_seq(max),
        Family::Degree => degree_poly_seq(max),
        Family::Indegree => indegree_poly_seq(max),
        Family::Outdegree => return None,
    })
}

pub fn rank_poly_rec(n: usize) -> IntPoly {
    rank_poly_seq(n).swap_remove(n)
}

pub fn cube_poly_rec(n: usize) -> IntPoly {
    cube_poly_seq(n).swap_remove(n)
}

pub fn maxcube_poly_rec(n: usize) -> IntPoly {
    maxcube_poly_seq(n).swap_remove(n)
}

pub fn degree_poly_rec(n: usize) -> IntPoly {
    degree_poly_seq(n).swap_remove(n)
}

pub fn indegree_poly_rec(n: usize) -> IntPoly {
    indegree_poly_seq(n).swap_remove(n)
}

/// Coefficient-level recurrences. Each computes row `n` from lower rows
/// supplied by the caller (typically census output).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffRecurrence {
    /// `q_{n,k} = q_{n-1,k} + q_{n-2,k} + q_{n-2,k-1}`
    Cube,
    /// `h_{n,k} = h_{n-2,k-1} + h_{n-3,k-1}`
    MaxCube,
    /// `d_{n,k} = d_{n-2,k-1} + d_{n-1,k-1} - d_{n-3,k-2} + d_{n-3,k-1}`
    Degree,
    /// `d⁻_{n,k} = d⁻_{n-1,k} + d⁻_{n-2,k-1}`
    Indegree,
    /// `A_m = (1+x+x^2) A_{m-1} - x^2 A_{m-2}` with `A_m = R_{2m}`, indexed by `m`.
    RankEven,
    /// `B_m = (1+x+x^2) B_{m-1} - x^2 B_{m-2}` with `B_m = R_{2m+1}`, indexed by `m`.
    RankOdd,
}

impl CoeffRecurrence {
    pub const ALL: [CoeffRecurrence; 6] = [
        CoeffRecurrence::Cube,
        CoeffRecurrence::MaxCube,
        CoeffRecurrence::Degree,
        CoeffRecurrence::Indegree,
        CoeffRecurrence::RankEven,
        CoeffRecurrence::RankOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CoeffRecurrence::Cube => "q_{n,k}",
            CoeffRecurrence::MaxCube => "h_{n,k}",
            CoeffRecurrence::Degree => "d_{n,k}",
            CoeffRecurrence::Indegree => "d-_{n,k}",
            CoeffRecurrence::RankEven => "A_m",
            CoeffRecurrence::RankOdd => "B_m",
        }
    }

    /// The family whose rows the recurrence relates.
    pub fn family(self) -> Family {
        match self {
            CoeffRecurrence::Cube => Family::Cube,
            CoeffRecurrence::MaxCube => Family::MaxCube,
            CoeffRecurrence::Degree => Family::Degree,
            CoeffRecurrence::Indegree => Family::Indegree,
            CoeffRecurrence::RankEven | CoeffRecurrence::RankOdd => Family::Rank,
        }
    }

    /// Lowest index at which the published statement claims the recurrence.
    pub fn stated_from(self) -> usize {
        match self {
            CoeffRecurrence::Cube => 4,
            CoeffRecurrence::MaxCube => 6,
            CoeffRecurrence::Degree => 4,
            CoeffRecurrence::Indegree => 3,
            CoeffRecurrence::RankEven => 4,
            CoeffRecurrence::RankOdd => 2,
        }
    }

    /// Lowest index at which the recurrence matches the census.
    pub fn validated_from(self) -> usize {
        match self {
            CoeffRecurrence::Cube => 5,
            CoeffRecurrence::MaxCube => 6,
            CoeffRecurrence::Degree => 6,
            CoeffRecurrence::Indegree => 5,
            CoeffRecurrence::RankEven => 4,
            CoeffRecurrence::RankOdd => 2,
        }
    }

    /// How many earlier rows the recurrence reaches back.
    pub fn depth(self) -> usize {
        match self {
            CoeffRecurrence::MaxCube | CoeffRecurrence::Degree => 3,
            _ => 2,
        }
    }

    /// Coefficient `k` of row `n`, from `rows[n-depth..n]`.
    pub fn eval(self, rows: &[IntPoly], n: usize, k: usize) -> Result<BigInt> {
        if n < self.validated_from() {
            return Err(Error::Range {
                family: self.name(),
                n,
                min: self.validated_from(),
            });
        }
        Ok(self.eval_unchecked(rows, n, k))
    }

    /// As [`eval`](Self::eval) but for any `n ≥ depth`; used to probe the
    /// published lower bounds.
    pub fn eval_unchecked(self, rows: &[IntPoly], n: usize, k: usize) -> BigInt {
        assert!(
            n >= self.depth(),
            "recurrence needs {} earlier rows",
            self.depth()
        );
        let c = |i: usize, j: usize| -> BigInt {
            match k.checked_sub(j) {
                Some(kk) => rows[n - i].coeff(kk),
                None => BigInt::zero(),
            }
        };
        match self {
            CoeffRecurrence::Cube => c(1, 0) + c(2, 0) + c(2, 1),
            CoeffRecurrence::MaxCube => c(2, 1) + c(3, 1),
            CoeffRecurrence::Degree => c(2, 1) + c(1, 1) - c(3, 2) + c(3, 1),
            CoeffRecurrence::Indegree => c(1, 0) + c(2, 1),
            CoeffRecurrence::RankEven | CoeffRecurrence::RankOdd => {
                c(1, 0) + c(1, 1) + c(1, 2) - c(2, 2)
            }
        }
    }

    /// Whole row `n`, checked.
    pub fn row(self, rows: &[IntPoly], n: usize) -> Result<IntPoly> {
        let top = self.row_degree_bound(rows, n);
        (0..=top)
            .map(|k| self.eval(rows, n, k))
            .collect::<Result<Vec<_>>>()
            .map(IntPoly::from_coeffs)
    }

    pub fn row_unchecked(self, rows: &[IntPoly], n: usize) -> IntPoly {
        let top = self.row_degree_bound(rows, n);
        IntPoly::from_coeffs((0..=top).map(|k| self.eval_unchecked(rows, n, k)).collect())
    }

    fn row_degree_bound(self, rows: &[IntPoly], n: usize) -> usize {
        let lower = (1..=self.depth().min(n))
            .filter_map(|i| rows.get(n - i).and_then(IntPoly::degree))
            .max()
            .unwrap_or(0);
        lower + 2
    }
}

/// Memoised sequences for repeated queries.
#[derive(Debug, Default, Clone)]
pub struct SeqCache {
    fib: Vec<BigInt>,
    padovan: Vec<BigInt>,
    g: Vec<IntPoly>,
}

impl SeqCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fib(&mut self, n: usize) -> &BigInt {
        if self.fib.is_empty() {
            self.fib = vec![BigInt::zero(), BigInt::one()];
        }
        while self.fib.len() <= n {
            let k = self.fib.len();
            let next = &self.fib[k - 1] + &self.fib[k - 2];
            self.fib.push(next);
        }
        &self.fib[n]
    }

    pub fn padovan133(&mut self, n: usize) -> &BigInt {
        if self.padovan.is_empty() {
            self.padovan = vec![1.into(), 3.into(), 3.into()];
        }
        while self.padovan.len() <= n {
            let k = self.padovan.len();
            let next = &self.padovan[k - 2] + &self.padovan[k - 3];
            self.padovan.push(next);
        }
        &self.padovan[n]
    }

    /// `g_n` through its defining recurrence
    /// `g_n = (1+x+x^2) g_{n-1} - x^2 g_{n-2}`, `g_0 = 1`, `g_1 = 1+x+x^2`.
    pub fn g(&mut self, n: usize) -> &IntPoly {
        let t = IntPoly::from_i64(&[1, 1, 1]);
        while self.g.len() <= n {
            let k = self.g.len();
            let next = match k {
                0 => IntPoly::one(),
                1 => t.clone(),
                _ => &(&t * &self.g[k - 1]) - &self.g[k - 2].shift(2),
            };
            self.g.push(next);
        }
        &self.g[n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn binom_zero_convention() {
        assert_eq!(binom(5, 2), b(10));
        assert_eq!(binom(5, 6), b(0));
        assert_eq!(binom(-2, -1), b(0));
        assert_eq!(binom(-1, 0), b(0));
        assert_eq!(binom(0, 0), b(1));
    }

    #[test]
    fn fibonacci_and_padovan() {
        assert_eq!(fib(0), b(0));
        assert_eq!(fib(7), b(13));
        assert_eq!(b(2) * fib(7), b(26));
        assert_eq!(padovan133(0), b(1));
        assert_eq!(padovan133(3), b(4));
        assert_eq!(padovan133(5), b(7));
        let mut cache = SeqCache::new();
        for n in 0..60 {
            assert_eq!(cache.fib(n), &fib(n));
            assert_eq!(cache.padovan133(n), &padovan133(n));
        }
    }

    #[test]
    fn trinomial_rows() {
        assert_eq!(trinomial(0, 0), b(1));
        assert_eq!(trinomial(2, 2), b(3));
        assert_eq!(trinomial(2, 5), b(0));
        assert_eq!(trinomial(3, -1), b(0));
        for n in 0..12 {
            let row: BigInt = (0..=2 * n).map(|k| trinomial(n, k)).sum();
            assert_eq!(row, b(3).pow(n as u32));
        }
    }

    #[test]
    fn g_polys_agree_between_sum_and_recurrence() {
        let mut cache = SeqCache::new();
        for n in 0..20 {
            assert_eq!(&g_poly(n), cache.g(n as usize), "n = {n}");
        }
    }

    #[test]
    fn rank_closed_form_examples() {
        assert_eq!(r_coeff(4, 3), b(2));
        assert_eq!(r_coeff(2, 0), b(1));
        assert_eq!(r_coeff(9, 4), b(12));
        assert_eq!(r_coeff(9, 40), b(0));
    }

    #[test]
    fn rank_three_routes_agree() {
        let rec = rank_poly_seq(30);
        for (n, r) in rec.iter().enumerate() {
            assert_eq!(&rank_poly_via_g(n), r, "g route, n = {n}");
            assert_eq!(&closed_poly(Family::Rank, n).unwrap(), r, "closed, n = {n}");
        }
    }

    #[test]
    fn cube_closed_form_examples() {
        assert_eq!(q_coeff(4, 1), b(6));
        assert_eq!(q_coeff(7, 3), b(5));
        for n in 3..=18 {
            assert_eq!(q_coeff(n, 0), b(2) * fib(n));
        }
    }

    #[test]
    fn maxcube_closed_form_examples() {
        assert_eq!(h_coeff(7, 3).unwrap(), b(5));
        assert_eq!(h_coeff(6, 2).unwrap(), b(5));
        assert_eq!(h_coeff(3, 1).unwrap(), b(3));
        assert_eq!(
            h_coeff(2, 1),
            Err(Error::Domain {
                family: "maxcube",
                n: 2,
                min: 3
            })
        );
    }

    #[test]
    fn degree_closed_form_examples() {
        assert_eq!(d_coeff(4, 2).unwrap(), b(4));
        assert_eq!(d_coeff(7, 4).unwrap(), b(10));
        let sum: BigInt = (0..=14).map(|k| d_coeff(7, k).unwrap()).sum();
        assert_eq!(sum, b(26));
        assert!(d_coeff(1, 1).is_err());
    }

    #[test]
    fn indegree_closed_form_examples() {
        assert_eq!(dm_coeff(7, 2).unwrap(), b(13));
        assert_eq!(dm_coeff(6, 3).unwrap(), b(1));
        for n in 3..30 {
            assert_eq!(dm_coeff(n, 0).unwrap(), b(1));
        }
        assert_eq!(raw::dm(0, 0), b(1));
        // Below n = 3 the formula misses published rows.
        assert_eq!(closed_poly_unchecked(Family::Indegree, 1), p(&[1]));
        assert_eq!(closed_poly_unchecked(Family::Indegree, 2), p(&[1, 1]));
    }

    #[test]
    fn polynomial_recurrence_examples() {
        assert_eq!(rank_poly_rec(5), p(&[1, 2, 2, 2, 2, 1]));
        assert_eq!(rank_poly_rec(0), p(&[1]));
        let r = rank_poly_seq(6);
        assert_eq!(r[6], &r[5] + &r[4].shift(2));
        assert_eq!(cube_poly_rec(5), p(&[10, 13, 4]));
        assert_eq!(cube_poly_rec(6), p(&[16, 25, 11, 1]));
        assert_eq!(maxcube_poly_rec(6), p(&[0, 0, 5, 1]));
        assert_eq!(maxcube_poly_rec(7), p(&[0, 0, 2, 5]));
        assert_eq!(degree_poly_rec(6), p(&[0, 0, 3, 9, 3, 1]));
        assert_eq!(degree_poly_rec(7), p(&[0, 0, 1, 11, 10, 3, 1]));
        assert_eq!(indegree_poly_rec(5), p(&[1, 5, 4]));
        assert_eq!(indegree_poly_rec(7), p(&[1, 7, 13, 5]));
        for n in 0..=9 {
            assert_eq!(rank_poly_rec(n), tables::printed(Family::Rank, n).unwrap());
        }
        for f in [
            Family::Cube,
            Family::MaxCube,
            Family::Degree,
            Family::Indegree,
        ] {
            let seq = poly_rec_seq(f, 7).unwrap();
            for (n, row) in seq.iter().enumerate() {
                assert_eq!(Some(row.clone()), tables::printed(f, n), "{f} n = {n}");
            }
        }
    }

    #[test]
    fn coefficient_recurrence_examples() {
        let q: Vec<_> = tables::CUBE.iter().map(|c| p(c)).collect();
        assert_eq!(CoeffRecurrence::Cube.eval(&q, 5, 2).unwrap(), b(4));
        let h: Vec<_> = tables::MAXCUBE.iter().map(|c| p(c)).collect();
        assert_eq!(CoeffRecurrence::MaxCube.eval(&h, 7, 3).unwrap(), b(5));
        let dm: Vec<_> = tables::INDEGREE.iter().map(|c| p(c)).collect();
        assert_eq!(CoeffRecurrence::Indegree.eval(&dm, 6, 2).unwrap(), b(8));
        assert_eq!(
            CoeffRecurrence::Cube.eval(&q, 4, 0),
            Err(Error::Range {
                family: "q_{n,k}",
                n: 4,
                min: 5
            })
        );
        // The published lowest case n = 4 misses: 7 + 8x + 2x^2 instead of 6 + 6x + x^2.
        assert_eq!(CoeffRecurrence::Cube.row_unchecked(&q, 4), p(&[7, 8, 2]));
    }

    #[test]
    fn rank_split_recurrences() {
        let r = rank_poly_seq(30);
        let a: Vec<_> = r.iter().step_by(2).cloned().collect();
        let bb: Vec<_> = r.iter().skip(1).step_by(2).cloned().collect();
        for m in 4..a.len() {
            assert_eq!(CoeffRecurrence::RankEven.row(&a, m).unwrap(), a[m], "A_{m}");
        }
        assert_ne!(CoeffRecurrence::RankEven.row_unchecked(&a, 3), a[3]);
        for m in 2..bb.len() {
            assert_eq!(
                CoeffRecurrence::RankOdd.row(&bb, m).unwrap(),
                bb[m],
                "B_{m}"
            );
        }
    }

    #[test]
    fn binomial_fibonacci_identity() {
        for n in 0..=40i64 {
            let s: BigInt = (0..=n / 2).map(|k| binom(n - k, k)).sum();
            assert_eq!(s, fib(n as usize + 1));
        }
    }
}
