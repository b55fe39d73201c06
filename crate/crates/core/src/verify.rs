//! The full cross-check suite behind `flc verify`.
//!
//! Every check compares two independent routes to the same numbers over an
//! index range and records the first disagreement. Known discrepancies in
//! published validity ranges are probed separately and reported as
//! `ERRATUM` records, which do not fail a run.

use std::fmt;

use num_bigint::BigInt;

use crate::census::{self, CensusRow};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::formula::{self, binom, fib, padovan133, CoeffRecurrence};
use crate::gf::{self, GfKind};
use crate::lattice::{filter_lattice, iso_check, LatticeDiagram};
use crate::poly::IntPoly;
use crate::poset::{make_fence, make_sfence, Poset};
use crate::structure::{self, Decomposition};
use crate::tables;

/// Largest `n` any census-backed check visits.
pub const CENSUS_MAX: usize = 18;
/// Largest `n` any formula-only check visits.
pub const FORMULA_MAX: usize = 40;
/// Structural isomorphism checks stop here.
pub const STRUCTURE_MAX: usize = 9;
/// Filter-count shadow checks stop here.
pub const SHADOW_MAX: usize = 12;
/// Generic cube counting stops here.
pub const GENERIC_MAX: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Erratum,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Erratum => "ERRATUM",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub subject: String,
    pub from: usize,
    pub to: usize,
    pub method_a: String,
    pub method_b: String,
    pub status: Status,
    /// First mismatch for a failure, the observed discrepancy for an erratum.
    pub detail: Option<String>,
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let range = if self.from == self.to {
            format!("n={}", self.from)
        } else {
            format!("n={}..{}", self.from, self.to)
        };
        write!(
            f,
            "{:<8} {:<24} {:<10} {} vs {}",
            self.status.to_string(),
            self.subject,
            range,
            self.method_a,
            self.method_b
        )?;
        if let Some(d) = &self.detail {
            write!(f, ": {d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub max_n: usize,
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn is_success(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn errata(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Erratum)
    }

    pub fn find(&self, subject: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.subject == subject)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(f, "{r}")?;
        }
        writeln!(
            f,
            "summary: {} pass, {} fail, {} erratum",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Erratum)
        )
    }
}

struct Suite {
    report: VerificationReport,
}

impl Suite {
    fn push(
        &mut self,
        subject: impl Into<String>,
        (from, to): (usize, usize),
        methods: (&str, &str),
        status: Status,
        detail: Option<String>,
    ) {
        self.report.records.push(CheckRecord {
            subject: subject.into(),
            from,
            to,
            method_a: methods.0.into(),
            method_b: methods.1.into(),
            status,
            detail,
        });
    }

    /// Compares two routes for every `n` in `from..=to`; skipped if empty.
    fn compare<T: PartialEq + fmt::Display>(
        &mut self,
        subject: impl Into<String>,
        (from, to): (usize, usize),
        methods: (&str, &str),
        mut a: impl FnMut(usize) -> Result<T>,
        mut b: impl FnMut(usize) -> Result<T>,
    ) -> Result<()> {
        if from > to {
            return Ok(());
        }
        let mut detail = None;
        for n in from..=to {
            let (x, y) = (a(n)?, b(n)?);
            if x != y {
                detail = Some(format!("first mismatch at n={n}: {x} vs {y}"));
                break;
            }
        }
        let status = if detail.is_none() {
            Status::Pass
        } else {
            Status::Fail
        };
        self.push(subject, (from, to), methods, status, detail);
        Ok(())
    }

    fn boolean(
        &mut self,
        subject: impl Into<String>,
        (from, to): (usize, usize),
        methods: (&str, &str),
        mut check: impl FnMut(usize) -> Result<Option<String>>,
    ) -> Result<()> {
        if from > to {
            return Ok(());
        }
        let mut detail = None;
        for n in from..=to {
            if let Some(msg) = check(n)? {
                detail = Some(format!("n={n}: {msg}"));
                break;
            }
        }
        let status = if detail.is_none() {
            Status::Pass
        } else {
            Status::Fail
        };
        self.push(subject, (from, to), methods, status, detail);
        Ok(())
    }
}

/// Census rows for `Φ_0..=Φ_max`.
pub fn census_rows(max: usize) -> Result<Vec<CensusRow>> {
    (0..=max)
        .map(|n| CensusRow::of_poset(&make_sfence(n)))
        .collect()
}

fn gf_kind(family: Family) -> Option<GfKind> {
    Some(match family {
        Family::Rank => GfKind::Rank,
        Family::Cube => GfKind::Cube,
        Family::MaxCube => GfKind::MaxCube,
        Family::Degree => GfKind::Degree,
        Family::Indegree => GfKind::Indegree,
        Family::Outdegree => return None,
    })
}

/// Rows a coefficient recurrence runs over, taken from census.
fn recurrence_rows(rec: CoeffRecurrence, census: &[CensusRow]) -> Vec<IntPoly> {
    let rank = |n: usize| census[n].rank.clone();
    match rec {
        CoeffRecurrence::RankEven => (0..)
            .map(|m| 2 * m)
            .take_while(|&n| n < census.len())
            .map(rank)
            .collect(),
        CoeffRecurrence::RankOdd => (0..)
            .map(|m| 2 * m + 1)
            .take_while(|&n| n < census.len())
            .map(rank)
            .collect(),
        _ => census.iter().map(|r| r.get(rec.family()).clone()).collect(),
    }
}

/// A recurrence's outputs that disagree with census at the given indices,
/// formatted for an erratum line.
fn probe(rec: CoeffRecurrence, rows: &[IntPoly], at: &[usize]) -> Vec<String> {
    at.iter()
        .filter(|&&n| n < rows.len())
        .filter_map(|&n| {
            let got = rec.row_unchecked(rows, n);
            (got != rows[n]).then(|| format!("n={n} gives {got}, census {}", rows[n]))
        })
        .collect()
}

/// Runs every check that fits under `max_n`.
pub fn verify(max_n: usize) -> Result<VerificationReport> {
    if max_n > FORMULA_MAX {
        return Err(Error::Capacity {
            what: "verification range",
            size: max_n,
            limit: FORMULA_MAX,
        });
    }
    let c = max_n.min(CENSUS_MAX);
    let f = max_n;
    let census = census_rows(c)?;
    let mut s = Suite {
        report: VerificationReport {
            max_n,
            records: Vec::new(),
        },
    };

    golden_tables(&mut s, &census)?;
    vertex_counts(&mut s, &census)?;
    census_vs_formulas(&mut s, &census)?;
    formulas_vs_gf(&mut s, f)?;
    coefficient_recurrences(&mut s, &census)?;
    errata(&mut s, &census);
    identities(&mut s, f)?;
    structural(&mut s, max_n.min(STRUCTURE_MAX))?;
    shadow(&mut s, max_n.min(SHADOW_MAX))?;
    generic_cubes(&mut s, &census, max_n.min(GENERIC_MAX))?;
    gf_exactness(&mut s, f)?;
    Ok(s.report)
}

fn golden_tables(s: &mut Suite, census: &[CensusRow]) -> Result<()> {
    for family in Family::ALL {
        let Some(list) = tables::list(family) else {
            continue;
        };
        let hi = (list.len() - 1).min(census.len() - 1);
        s.compare(
            family.name(),
            (0, hi),
            ("census", "published table"),
            |n| Ok(census[n].get(family).clone()),
            |n| Ok(IntPoly::from_i64(list[n])),
        )?;
    }
    Ok(())
}

fn vertex_counts(s: &mut Suite, census: &[CensusRow]) -> Result<()> {
    let hi = census.len() - 1;
    s.compare(
        "vertices",
        (0, hi.min(2)),
        ("census", "1, 2, 3"),
        |n| Ok(BigInt::from(census[n].vertices)),
        |n| Ok(BigInt::from(n + 1)),
    )?;
    s.compare(
        "vertices",
        (3, hi),
        ("census", "2F_n"),
        |n| Ok(BigInt::from(census[n].vertices)),
        |n| Ok(fib(n) * 2),
    )
}

fn census_vs_formulas(s: &mut Suite, census: &[CensusRow]) -> Result<()> {
    let hi = census.len() - 1;
    for family in Family::ALL {
        let got = |n: usize| Ok(census[n].get(family).clone());
        if let Some(lo) = family.closed_form_from() {
            s.compare(
                family.name(),
                (lo, hi),
                ("census", "closed form"),
                got,
                |n| formula::closed_poly(family, n),
            )?;
        }
        if let Some(rows) = formula::poly_rec_seq(family, hi) {
            s.compare(family.name(), (0, hi), ("census", "recurrence"), got, |n| {
                Ok(rows[n].clone())
            })?;
        }
        if let Some(kind) = gf_kind(family) {
            let rows = kind.series().expand(hi + 1)?;
            s.compare(
                family.name(),
                (0, hi),
                ("census", "generating function"),
                got,
                |n| Ok(rows[n].clone()),
            )?;
        }
    }
    s.compare(
        "rank",
        (0, hi),
        ("census", "g-polynomials"),
        |n| Ok(census[n].rank.clone()),
        |n| Ok(formula::rank_poly_via_g(n)),
    )
}

fn formulas_vs_gf(s: &mut Suite, f: usize) -> Result<()> {
    for family in Family::ALL {
        let (Some(rec), Some(kind)) = (formula::poly_rec_seq(family, f), gf_kind(family)) else {
            continue;
        };
        let series = kind.series().expand(f + 1)?;
        s.compare(
            family.name(),
            (0, f),
            ("recurrence", "generating function"),
            |n| Ok(rec[n].clone()),
            |n| Ok(series[n].clone()),
        )?;
        if let Some(lo) = family.closed_form_from() {
            s.compare(
                family.name(),
                (lo, f),
                ("closed form", "recurrence"),
                |n| formula::closed_poly(family, n),
                |n| Ok(rec[n].clone()),
            )?;
        }
    }
    let r = GfKind::Rank.series().expand(f + 1)?;
    let half = f / 2;
    let even = GfKind::RankEven.series().expand(half + 1)?;
    let odd = GfKind::RankOdd.series().expand(half + 1)?;
    s.compare(
        "rank-even",
        (0, half),
        ("A_m series", "R_2m series"),
        |m| Ok(even[m].clone()),
        |m| Ok(r[2 * m].clone()),
    )?;
    if f >= 1 {
        s.compare(
            "rank-odd",
            (0, (f - 1) / 2),
            ("B_m series", "R_2m+1 series"),
            |m| Ok(odd[m].clone()),
            |m| Ok(r[2 * m + 1].clone()),
        )?;
    }
    Ok(())
}

fn coefficient_recurrences(s: &mut Suite, census: &[CensusRow]) -> Result<()> {
    for rec in CoeffRecurrence::ALL {
        let rows = recurrence_rows(rec, census);
        if rows.is_empty() {
            continue;
        }
        s.compare(
            rec.name(),
            (rec.validated_from(), rows.len() - 1),
            ("coefficient recurrence", "census"),
            |n| rec.row(&rows, n),
            |n| Ok(rows[n].clone()),
        )?;
    }
    Ok(())
}

fn errata(s: &mut Suite, census: &[CensusRow]) {
    let probes: [(CoeffRecurrence, &[usize]); 3] = [
        (CoeffRecurrence::Cube, &[4]),
        (CoeffRecurrence::Indegree, &[3, 4]),
        (CoeffRecurrence::Degree, &[4, 5]),
    ];
    for (rec, at) in probes {
        let at: Vec<usize> = at.iter().copied().filter(|&n| n < census.len()).collect();
        if at.is_empty() {
            continue;
        }
        let rows = recurrence_rows(rec, census);
        let found = probe(rec, &rows, &at);
        erratum_record(s, rec.name(), &at, "coefficient recurrence", found);
    }
    let at: Vec<usize> = [1, 2].into_iter().filter(|&n| n < census.len()).collect();
    if !at.is_empty() {
        let found = at
            .iter()
            .filter_map(|&n| {
                let got = formula::closed_poly_unchecked(Family::Indegree, n);
                let want = &census[n].indegree;
                (&got != want).then(|| format!("n={n} gives {got}, census {want}"))
            })
            .collect();
        erratum_record(s, "d-_{n,k} closed", &at, "closed form", found);
    }
}

/// An erratum is expected at every probed index; if one is missing the
/// claim itself is wrong, which is a failure.
fn erratum_record(s: &mut Suite, subject: &str, at: &[usize], method: &str, found: Vec<String>) {
    let range = (at[0], at[at.len() - 1]);
    let (status, detail) = if found.len() == at.len() {
        (Status::Erratum, found.join("; "))
    } else {
        (
            Status::Fail,
            format!("expected discrepancy not observed ({})", found.join("; ")),
        )
    };
    s.push(subject, range, (method, "census"), status, Some(detail));
}

fn identities(s: &mut Suite, f: usize) -> Result<()> {
    let q = formula::cube_poly_seq(f);
    let dm = formula::indegree_poly_seq(f);
    let h = formula::maxcube_poly_seq(f);
    let one_x = IntPoly::from_i64(&[1, 1]);
    s.compare(
        "D-(1+x) = Q",
        (0, f),
        ("indegree recurrence", "cube recurrence"),
        |n| Ok(dm[n].compose(&one_x)),
        |n| Ok(q[n].clone()),
    )?;
    s.compare(
        "H(1) = p_{n-2}",
        (3, f),
        ("maxcube recurrence", "Padovan"),
        |n| Ok(h[n].eval_one()),
        |n| Ok(padovan133(n - 2)),
    )?;
    let sum = |coeff: fn(usize, usize) -> Result<BigInt>| {
        move |n: usize| (0..=2 * n).map(|k| coeff(n, k)).sum::<Result<BigInt>>()
    };
    let two_fib = |n: usize| Ok(fib(n) * 2);
    s.compare(
        "sum r = 2F_n",
        (3, f),
        ("closed form", "2F_n"),
        sum(|n, k| Ok(formula::r_coeff(n, k))),
        two_fib,
    )?;
    s.compare(
        "sum d = 2F_n",
        (3, f),
        ("closed form", "2F_n"),
        sum(formula::d_coeff),
        two_fib,
    )?;
    s.compare(
        "sum d- = 2F_n",
        (3, f),
        ("closed form", "2F_n"),
        sum(formula::dm_coeff),
        two_fib,
    )?;
    let r = GfKind::Rank.series().expand(f + 1)?;
    s.compare(
        "R(1) = 2F_n",
        (3, f),
        ("generating function", "2F_n"),
        |n| Ok(r[n].eval_one()),
        two_fib,
    )?;
    s.compare(
        "sum C(n-k,k) = F_n+1",
        (0, f),
        ("binomial sum", "Fibonacci"),
        |n| {
            Ok((0..=n as i64 / 2)
                .map(|k| binom(n as i64 - k, k))
                .sum::<BigInt>())
        },
        |n| Ok(fib(n + 1)),
    )?;
    let fx = gf::f_xy_expand(f + 1);
    s.boolean(
        "f(x,y) two routes",
        (0, f),
        ("series", "double binomial sum"),
        |_| {
            Ok(match &fx {
                Ok(_) => None,
                Err(e) => Some(e.to_string()),
            })
        },
    )
}

/// `Q(L ⊞ K) = Q(L) + (1+x) Q(K)`, checked on an expansion.
fn enumeration_identity(d: &Decomposition, expanded: &LatticeDiagram) -> Result<Option<String>> {
    let lhs = census::cube_polynomial(expanded)?;
    let ql = census::cube_polynomial(&d.host)?;
    let qk = census::cube_polynomial(&d.cutting_lattice())?;
    let rhs = &ql + &(&IntPoly::from_i64(&[1, 1]) * &qk);
    Ok((lhs != rhs).then(|| format!("Q(L+K) = {lhs}, Q(L) + (1+x)Q(K) = {rhs}")))
}

fn structure_check(
    d: &Decomposition,
    phi: &LatticeDiagram,
    host: &Poset,
    star: &Poset,
) -> Result<Option<String>> {
    if !iso_check(&d.host, &filter_lattice(host)?)? {
        return Ok(Some("host is not the expected lattice".into()));
    }
    if !iso_check(&d.cutting_lattice(), &filter_lattice(star)?)? {
        return Ok(Some("cutting is not the expected lattice".into()));
    }
    let expanded = d.expanded()?;
    if !iso_check(&expanded, phi)? {
        return Ok(Some(
            "expansion is not isomorphic to the filter lattice".into(),
        ));
    }
    if let Some(msg) = enumeration_identity(d, &expanded)? {
        return Ok(Some(msg));
    }
    match d.expanded_rank_poly() {
        Some(r) if r == census::rank_polynomial(phi) => Ok(None),
        Some(r) => Ok(Some(format!("rank from parts {r}"))),
        None => Ok(Some("cutting shares no end with the host".into())),
    }
}

fn structural(s: &mut Suite, hi: usize) -> Result<()> {
    s.boolean(
        "split at x3",
        (5, hi),
        ("iso_check", "fence expansion"),
        |n| {
            let phi = filter_lattice(&make_sfence(n))?;
            let (host, star) = structure::expected_third(n);
            structure_check(&structure::split_at_third(n)?, &phi, &host, &star)
        },
    )?;
    s.boolean(
        "split at xn",
        (6, hi),
        ("iso_check", "S-fence expansion"),
        |n| {
            let phi = filter_lattice(&make_sfence(n))?;
            let (host, star) = structure::expected_last(n);
            structure_check(&structure::split_at_last(n)?, &phi, &host, &star)
        },
    )
}

fn filter_count(p: &Poset) -> Result<usize> {
    Ok(p.enumerate_filters()?.len())
}

fn shadow(s: &mut Suite, hi: usize) -> Result<()> {
    for (name, make) in [
        ("S-fence", make_sfence as fn(usize) -> Poset),
        ("fence", make_fence),
    ] {
        s.boolean(
            format!("filters split ({name})"),
            (0, hi),
            ("|F(P)|", "|F(P-x)| + |F(P*x)|"),
            |n| {
                let p = make(n);
                let whole = filter_count(&p)?;
                for &x in p.labels() {
                    let parts =
                        filter_count(&p.remove_element(x)?)? + filter_count(&p.star_remove(x)?)?;
                    if parts != whole {
                        return Ok(Some(format!("x{x}: {whole} vs {parts}")));
                    }
                }
                Ok(None)
            },
        )?;
    }
    Ok(())
}

fn generic_cubes(s: &mut Suite, census: &[CensusRow], hi: usize) -> Result<()> {
    s.boolean(
        "cube",
        (0, hi),
        ("generic subgraph count", "interval count"),
        |n| {
            let g = filter_lattice(&make_sfence(n))?.underlying_graph();
            for k in 0..=3 {
                let generic = BigInt::from(census::generic_cube_count(&g, k)?);
                let interval = census[n].cube.coeff(k);
                if generic != interval {
                    return Ok(Some(format!("k={k}: {generic} vs {interval}")));
                }
            }
            Ok(None)
        },
    )
}

fn gf_exactness(s: &mut Suite, f: usize) -> Result<()> {
    for kind in GfKind::ALL {
        let series = kind.series();
        let rows = series.expand(f + 1)?;
        let ok = series.is_exact(&rows);
        s.push(
            format!("gf {kind}"),
            (0, f),
            ("expansion x denominator", "numerator"),
            if ok { Status::Pass } else { Status::Fail },
            None,
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_zero_is_trivial() {
        let r = verify(0).unwrap();
        assert!(r.is_success(), "{r}");
        assert_eq!(r.count(Status::Erratum), 0);
    }

    #[test]
    fn verify_twelve_passes_with_errata() {
        let r = verify(12).unwrap();
        assert!(r.is_success(), "{r}");
        let names: Vec<&str> = r.errata().map(|e| e.subject.as_str()).collect();
        assert_eq!(
            names,
            vec!["q_{n,k}", "d-_{n,k}", "d_{n,k}", "d-_{n,k} closed"]
        );
        let q = r.errata().next().unwrap();
        assert!(
            q.detail.as_deref().unwrap().contains("7 + 8x + 2x^2"),
            "{q}"
        );
    }

    #[test]
    fn verify_rejects_large_range() {
        assert!(matches!(verify(41), Err(Error::Capacity { .. })));
    }

    #[test]
    fn report_rendering() {
        let r = verify(2).unwrap();
        let text = r.to_string();
        assert!(text.lines().last().unwrap().starts_with("summary: "));
        assert!(text.contains("PASS     rank "));
    }
}
