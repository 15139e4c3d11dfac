//! Exact verification of the Monster and Fake Monster denominator
//! identities and the product formula for `j`.
//!
//! With `p = e(sigma)` and `q = e(tau)`:
//!
//! - mid: `p^-1 prod_{m>0, n} (1 - p^m q^n)^{c(mn)} = j(sigma) - j(tau)`.
//! - fmid: `p^-1 prod_{m>0, n} (1 - p^m q^n)^{c'(mn)}` against
//!   `Delta(sigma) Delta(tau) (j(sigma) - j(tau)) / (p Delta(tau))`.
//!   The undivided right side starts at `p^0 q^1`; it equals
//!   `q prod (1 - q^n)^24` times the product, so the comparison divides that
//!   factor out and both sides start with `p^-1 q^0`.
//! - `j = q^-1 prod_{n>0} (1 - q^n)^{c_0(n^2)}`.
//!
//! Since `c(k) = 0` for `k < -1`, the only factor with `n < 0` is
//! `(1 - p q^-1)`, and factors with `n = 0` only occur in fmid, where
//! `c'(0) = 24`.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactseries::{
    extract_product_exponents, power_product, pq_product, rat, rat_big, PQSeries, QSeries,
};
use crate::modforms::{delta, j_full, j_minus_744, ModformTable};
use crate::report::{elapsed_ms, Discrepancy, IdentityReport, Location};

/// Largest `m n` used by the product factors at these truncations.
pub fn max_exponent_index(p_trunc: i64, q_trunc: i64) -> i64 {
    let top = q_trunc + p_trunc + 1;
    (1..=p_trunc + 1)
        .map(|m| m * (top - m))
        .max()
        .unwrap_or(1)
        .max(1)
}

fn check_truncs(p: i64, q: i64) -> Result<()> {
    if p < 1 || q < 1 {
        return Err(Error::Domain(format!(
            "truncations must be at least 1, got p={p} q={q}"
        )));
    }
    Ok(())
}

/// `j(sigma) - j(tau)` as a bivariate series, from the coefficients of
/// `j - 744` (any constant term cancels).
pub fn j_difference(j: &QSeries, p_trunc: i64, q_trunc: i64) -> Result<PQSeries> {
    if j.trunc() < p_trunc.max(q_trunc) {
        return Err(Error::Domain(format!(
            "j known only to q^{}, need q^{}",
            j.trunc(),
            p_trunc.max(q_trunc)
        )));
    }
    let mut rows = BTreeMap::new();
    rows.insert(-1, QSeries::monomial(0, j.coeff(-1), q_trunc));
    let mut row0 = BTreeMap::new();
    for n in -1..=q_trunc {
        if n != 0 {
            row0.insert(n, -j.coeff(n));
        }
    }
    rows.insert(0, QSeries::from_map(&row0, q_trunc));
    for m in 1..=p_trunc {
        rows.insert(m, QSeries::monomial(0, j.coeff(m), q_trunc));
    }
    PQSeries::from_rows(-1, p_trunc, q_trunc, rows)
}

fn compare(report: &mut IdentityReport, lhs: &PQSeries, rhs: &PQSeries) {
    report.lhs_terms = lhs.term_count();
    report.rhs_terms = rhs.term_count();
    if let Some((p, q, l, r)) = lhs.first_difference(rhs) {
        report.fail(Discrepancy {
            location: Location::PQ { p, q },
            lhs: l,
            rhs: r,
        });
    }
    if let Some((p, q)) = lhs.first_non_integer() {
        report.note(format!("non-integral product coefficient at p^{p} q^{q}"));
    }
}

/// Checks the Monster denominator identity through `p^P` and `q^Q`.
pub fn verify_mid(p_trunc: i64, q_trunc: i64) -> Result<IdentityReport> {
    let table = ModformTable::new(max_exponent_index(p_trunc, q_trunc));
    verify_mid_with(p_trunc, q_trunc, &table, |m, n| table.c(m * n))
}

/// As [`verify_mid`], with the product exponents supplied by `exponent`
/// (the right side always uses the true `j`).
pub fn verify_mid_with(
    p_trunc: i64,
    q_trunc: i64,
    table: &ModformTable,
    exponent: impl Fn(i64, i64) -> BigInt,
) -> Result<IdentityReport> {
    check_truncs(p_trunc, q_trunc)?;
    let mut report = IdentityReport::new("mid")
        .param("p_trunc", p_trunc)
        .param("q_trunc", q_trunc);
    report.p_trunc = Some(p_trunc);
    report.q_trunc = Some(q_trunc);
    let t = Instant::now();
    let lhs = pq_product(exponent, p_trunc, q_trunc);
    report.time("lhs", elapsed_ms(t));
    let t = Instant::now();
    let rhs = j_difference(table.j_series(), p_trunc, q_trunc)?;
    report.time("rhs", elapsed_ms(t));
    let t = Instant::now();
    compare(&mut report, &lhs, &rhs);
    report.time("compare", elapsed_ms(t));
    report.note("factors: (1 - p q^-1) and (1 - p^m q^n) for m, n >= 1; c(k) = 0 below -1");
    Ok(report)
}

/// Checks the Fake Monster slice identity through `p^P` and `q^Q`.
pub fn verify_fmid(p_trunc: i64, q_trunc: i64) -> Result<IdentityReport> {
    let table = ModformTable::new(max_exponent_index(p_trunc, q_trunc));
    verify_fmid_with(p_trunc, q_trunc, &table, |m, n| table.c_prime(m * n))
}

/// `Delta(sigma) Delta(tau) (j(sigma) - j(tau))` with `p`-degrees `0..=p_hi`
/// and `q`-degrees up to `q_hi`.
pub fn fake_monster_slice(table: &ModformTable, p_hi: i64, q_hi: i64) -> Result<PQSeries> {
    let d = delta(p_hi.max(q_hi) + 2);
    let need = q_hi + p_hi + 3;
    let jd = if table.trunc >= need {
        j_difference(table.j_series(), p_hi + 1, need)?
    } else {
        j_difference(&j_minus_744(need), p_hi + 1, need)?
    };
    let mut dp = BTreeMap::new();
    for m in 1..=p_hi + 2 {
        dp.insert(m, QSeries::monomial(0, d.coeff(m), q_hi + p_hi + 3));
    }
    let delta_sigma = PQSeries::from_rows(1, p_hi + 2, q_hi + p_hi + 3, dp)?;
    let mut dq = BTreeMap::new();
    dq.insert(0, delta(q_hi + p_hi + 3));
    let delta_tau = PQSeries::from_rows(0, p_hi + 2, q_hi + p_hi + 3, dq)?;
    let full = delta_sigma.mul(&delta_tau)?.mul(&jd)?;
    let rows = (0..=p_hi)
        .map(|m| (m, full.row(m).truncate(q_hi)))
        .collect();
    PQSeries::from_rows(0, p_hi, q_hi, rows)
}

/// As [`verify_fmid`], with the product exponents supplied by `exponent`.
pub fn verify_fmid_with(
    p_trunc: i64,
    q_trunc: i64,
    table: &ModformTable,
    exponent: impl Fn(i64, i64) -> BigInt,
) -> Result<IdentityReport> {
    check_truncs(p_trunc, q_trunc)?;
    let mut report = IdentityReport::new("fmid")
        .param("p_trunc", p_trunc)
        .param("q_trunc", q_trunc);
    report.p_trunc = Some(p_trunc);
    report.q_trunc = Some(q_trunc);
    let t = Instant::now();
    let lhs = pq_product(exponent, p_trunc, q_trunc);
    report.time("lhs", elapsed_ms(t));

    let t = Instant::now();
    let margin = q_trunc + p_trunc + 4;
    let full = fake_monster_slice(table, p_trunc + 1, margin)?;
    let inv = delta(margin + p_trunc + 4)
        .invert()
        .expect("Delta is invertible");
    let mut rows = BTreeMap::new();
    for m in 0..=p_trunc + 1 {
        let row = &full.row(m) * &inv;
        if row.trunc() < q_trunc {
            return Err(Error::Domain(
                "internal: Delta quotient lost precision".into(),
            ));
        }
        rows.insert(m - 1, row.truncate(q_trunc));
    }
    let rhs = PQSeries::from_rows(-1, p_trunc, q_trunc, rows)?;
    report.time("rhs", elapsed_ms(t));

    let t = Instant::now();
    compare(&mut report, &lhs, &rhs);
    report.time("compare", elapsed_ms(t));
    report.note("right side divided by p Delta(tau), the Weyl vector and (0, n) root factors");
    report.note("factors: (1 - p q^-1), (1 - p^m)^24 and (1 - p^m q^n) for m, n >= 1");
    Ok(report)
}

/// Exponents of the `j` product at `n = 1, 2, 3`.
pub const J_PRODUCT_EXPONENTS: [i64; 3] = [-744, 80256, -12_288_744];

/// Checks `j = q^-1 prod_{n <= N} (1 - q^n)^{c_0(n^2)}` through `q^{N-1}`.
pub fn verify_j_product(n: i64) -> Result<IdentityReport> {
    if n < 1 {
        return Err(Error::Domain("N must be at least 1".into()));
    }
    verify_j_product_from(&j_full(n - 1), n)
}

/// As [`verify_j_product`], extracting the exponents from the supplied
/// expansion of `j` (known at least to `q^{N-1}`).
pub fn verify_j_product_from(j: &QSeries, n: i64) -> Result<IdentityReport> {
    if n < 1 {
        return Err(Error::Domain("N must be at least 1".into()));
    }
    if j.trunc() < n - 1 {
        return Err(Error::Domain(format!(
            "j known only to q^{}, need q^{}",
            j.trunc(),
            n - 1
        )));
    }
    let mut report = IdentityReport::new("j-product").param("N", n);
    report.q_trunc = Some(n - 1);
    let t = Instant::now();
    let j = j.truncate(n - 1);
    let exps = extract_product_exponents(&j.shift(1))?;
    report.time("exponents", elapsed_ms(t));
    for k in 1..=n {
        let e = exps.get(&k).cloned().unwrap_or_else(BigInt::zero);
        report = report.param(&format!("c0({})", k * k), e);
    }
    for (i, &want) in J_PRODUCT_EXPONENTS.iter().enumerate() {
        let k = i as i64 + 1;
        if k > n {
            break;
        }
        let got = exps.get(&k).cloned().unwrap_or_else(BigInt::zero);
        if got != BigInt::from(want) {
            report.fail(Discrepancy {
                location: Location::Exponent(k),
                lhs: rat_big(got),
                rhs: rat(want),
            });
        }
    }
    let t = Instant::now();
    let product = power_product(&exps, n).shift(-1);
    report.time("product", elapsed_ms(t));
    report.lhs_terms = product.term_count();
    report.rhs_terms = j.term_count();
    for d in -1..=n - 1 {
        let (l, r) = (product.coeff(d), j.coeff(d));
        if l != r {
            report.fail(Discrepancy {
                location: Location::Q(d),
                lhs: l,
                rhs: r,
            });
            break;
        }
    }
    report.note(
        "exponents are extracted from j, so agreement is a roundtrip; the first three are pinned",
    );
    Ok(report)
}

/// Dimension of the degree-`(m, n)` piece of the Monster Lie algebra.
pub fn fake_monster_grade_dimension(m: i64, n: i64) -> Result<BigInt> {
    if m == 0 && n == 0 {
        return Err(Error::Domain("degree (0, 0) is excluded".into()));
    }
    Ok(crate::modforms::c(m * n))
}

/// `p^-1 prod (1 - p^m q^n)^{c(mn)}` through `p^P`, `q^Q`.
pub fn mid_product(p_trunc: i64, q_trunc: i64) -> PQSeries {
    let table = ModformTable::new(max_exponent_index(p_trunc, q_trunc));
    pq_product(|m, n| table.c(m * n), p_trunc, q_trunc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mid_small() {
        let r = verify_mid(3, 3).unwrap();
        assert!(r.equal, "{:?}", r.first_discrepancy);
        assert!(r.notes.iter().all(|n| !n.contains("non-integral")));
    }

    #[test]
    fn mid_p0_row() {
        let lhs = mid_product(1, 3);
        let row = lhs.row(0);
        assert_eq!(row.coeff(-1), rat(-1));
        assert_eq!(row.coeff(1), rat(-196884));
        assert_eq!(row.coeff(2), rat(-21493760));
        assert_eq!(row.coeff(3), rat_big(-crate::modforms::c(3)));
    }

    #[test]
    fn mid_mutation_fails() {
        let table = ModformTable::new(max_exponent_index(2, 2));
        let r = verify_mid_with(2, 2, &table, |m, n| {
            let c = table.c(m * n);
            if m * n == 1 {
                c + 1
            } else {
                c
            }
        })
        .unwrap();
        assert!(!r.equal);
        let d = r.first_discrepancy.unwrap();
        assert_eq!(d.location, Location::PQ { p: 0, q: 1 });
        assert_eq!(d.lhs, rat(-196885));
        assert_eq!(d.rhs, rat(-196884));
    }

    #[test]
    fn fmid_small() {
        let r = verify_fmid(2, 2).unwrap();
        assert!(r.equal, "{:?}", r.first_discrepancy);
    }

    #[test]
    fn j_product_matches_modforms_exponents() {
        let r = verify_j_product(5).unwrap();
        let e = crate::modforms::c0_square_exponents(5).unwrap();
        for k in 1..=5i64 {
            assert_eq!(
                r.get_param(&format!("c0({})", k * k)).unwrap(),
                e[&k].to_string()
            );
        }
    }

    #[test]
    fn j_product() {
        let r = verify_j_product(3).unwrap();
        assert!(r.equal);
        assert_eq!(r.get_param("c0(1)"), Some("-744"));
        assert_eq!(r.get_param("c0(4)"), Some("80256"));
        assert_eq!(r.get_param("c0(9)"), Some("-12288744"));
        assert!(verify_j_product(1).unwrap().equal);
        assert!(verify_j_product(0).is_err());
    }

    #[test]
    fn grade_dimensions() {
        assert_eq!(
            fake_monster_grade_dimension(1, 1).unwrap(),
            BigInt::from(196884)
        );
        assert_eq!(
            fake_monster_grade_dimension(1, -1).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            fake_monster_grade_dimension(2, 3).unwrap(),
            crate::modforms::c(6)
        );
        assert!(fake_monster_grade_dimension(0, 0).is_err());
    }
}
