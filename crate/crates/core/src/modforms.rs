//! The modular forms and counting functions the identities are built from.
//!
//! Conventions:
//!
//! - `Delta = q prod_{n >= 1} (1 - q^n)^24`. Some printed sources write the
//!   product for `Delta^-1` over `n > 1`; only `n >= 1` reproduces the
//!   coloured-partition numbers `p_24(n)` as coefficients of `Delta^-1`,
//!   so that is what is used here.
//! - `j = E_4^3 / Delta` with `E_4 = 1 + 240 sum sigma_3(n) q^n`, and
//!   `c(n)` are the coefficients of `j - 744 = q^-1 + 196884 q + ...`.
//! - `p_k(n) = 0` for `n < 0`.
//! - The exponents `c_0(n^2)` of the product formula for `j` are obtained
//!   by factoring the `q`-expansion of `j`; the weight-1/2 form they come
//!   from is never built, and `c_0(0)` is left undefined.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactseries::{extract_product_exponents, power_product, rat, rat_big, QSeries};

/// `Delta` known up to `q^trunc`.
pub fn delta(trunc: i64) -> QSeries {
    assert!(trunc >= 1, "delta needs trunc >= 1");
    let exps: BTreeMap<i64, BigInt> = (1..trunc).map(|n| (n, BigInt::from(24))).collect();
    power_product(&exps, trunc - 1).shift(1)
}

fn sigma3(n: i64) -> BigInt {
    (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| BigInt::from(d).pow(3))
        .sum()
}

/// Weight-4 Eisenstein series `1 + 240 sum sigma_3(n) q^n`.
pub fn eisenstein_e4(trunc: i64) -> QSeries {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=trunc {
        c.push(sigma3(n) * 240);
    }
    QSeries::from_bigints(0, &c, trunc)
}

/// `j` itself, known up to `q^trunc`.
pub fn j_full(trunc: i64) -> QSeries {
    assert!(trunc >= -1, "j needs trunc >= -1");
    let e4 = eisenstein_e4(trunc + 1);
    let e4_cubed = &(&e4 * &e4) * &e4;
    let inv_delta = delta(trunc + 2)
        .invert()
        .expect("Delta has leading coefficient 1");
    (&e4_cubed * &inv_delta).truncate(trunc)
}

/// `j - 744 = sum_{n >= -1} c(n) q^n`, known up to `q^trunc`.
pub fn j_minus_744(trunc: i64) -> QSeries {
    let j = j_full(trunc);
    if trunc < 0 {
        return j;
    }
    &j - &QSeries::monomial(0, rat(744), trunc)
}

/// Number of partitions of `n` into parts of `k` colours.
pub fn p_colored(k: i64, n: i64) -> BigInt {
    assert!(k >= 1, "p_colored needs k >= 1");
    if n < 0 {
        return BigInt::zero();
    }
    let exps: BTreeMap<i64, BigInt> = (1..=n.max(1)).map(|m| (m, BigInt::from(-k))).collect();
    power_product(&exps, n)
        .integer_coeff(n)
        .expect("partition counts are integers")
}

/// Coefficient `c(n)` of `j - 744`.
pub fn c(n: i64) -> BigInt {
    if n < -1 {
        return BigInt::zero();
    }
    j_minus_744(n.max(1))
        .integer_coeff(n)
        .expect("j has integer coefficients")
}

/// `c'(0) = 24`, otherwise `c'(n) = c(n)`.
pub fn c_prime(n: i64) -> BigInt {
    if n == 0 {
        BigInt::from(24)
    } else {
        c(n)
    }
}

/// Dimension of the grade-`alpha` piece of the Lie algebra of physical
/// states of a lattice vertex algebra of rank `k`, where
/// `norm2 = alpha^2`.
///
/// Rank 26 gives `p_24(1 - norm2/2)`; other ranks give
/// `p_{k-1}(1 - norm2/2) - p_{k-1}(norm2/2)`. The formula is applied as
/// stated, so small ranks can produce negative values.
pub fn noghost_multiplicity(k: i64, norm2: i64) -> Result<BigInt> {
    if k <= 2 {
        return Err(Error::Domain(format!("rank {k} must exceed 2")));
    }
    if norm2 % 2 != 0 {
        return Err(Error::Domain(format!("norm {norm2} must be even")));
    }
    let half = norm2 / 2;
    if k == 26 {
        Ok(p_colored(24, 1 - half))
    } else {
        Ok(p_colored(k - 1, 1 - half) - p_colored(k - 1, half))
    }
}

/// Exponents `c_0(n^2)`, `1 <= n <= trunc`, with
/// `j = q^-1 prod (1 - q^n)^{c_0(n^2)}`. Keys are `n`, not `n^2`.
pub fn c0_square_exponents(trunc: i64) -> Result<BTreeMap<i64, BigInt>> {
    if trunc < 1 {
        return Err(Error::Domain("c0 exponents need trunc >= 1".into()));
    }
    let f = j_full(trunc - 1).shift(1);
    extract_product_exponents(&f).map_err(|e| match e {
        Error::NotAProduct(msg) => Error::NotAProduct(format!("internal consistency: {msg}")),
        other => other,
    })
}

/// Precomputed `Delta`, `j - 744`, `p_24` and `c` up to one truncation.
#[derive(Clone, Debug)]
pub struct ModformTable {
    pub delta: QSeries,
    pub j_minus_744: QSeries,
    pub p24: BTreeMap<i64, BigInt>,
    pub c: BTreeMap<i64, BigInt>,
    pub trunc: i64,
}

impl ModformTable {
    pub fn new(trunc: i64) -> Self {
        let trunc = trunc.max(1);
        let delta = delta(trunc);
        let j = j_minus_744(trunc);
        let c: BTreeMap<i64, BigInt> = (-1..=trunc)
            .map(|n| (n, j.integer_coeff(n).expect("integral j")))
            .collect();
        let inv = self::delta(trunc + 2)
            .invert()
            .expect("Delta is invertible");
        let p24: BTreeMap<i64, BigInt> = (0..=inv.trunc() + 1)
            .map(|n| (n, inv.integer_coeff(n - 1).expect("integral Delta^-1")))
            .collect();
        ModformTable {
            delta,
            j_minus_744: j,
            p24,
            c,
            trunc,
        }
    }

    /// `c(n)`; zero below `-1`. Panics above the table's truncation.
    pub fn c(&self, n: i64) -> BigInt {
        if n < -1 {
            return BigInt::zero();
        }
        self.c
            .get(&n)
            .cloned()
            .unwrap_or_else(|| panic!("c({n}) lies beyond table truncation {}", self.trunc))
    }

    pub fn c_prime(&self, n: i64) -> BigInt {
        if n == 0 {
            BigInt::from(24)
        } else {
            self.c(n)
        }
    }

    /// `j(q) - 744` as a series.
    pub fn j_series(&self) -> &QSeries {
        &self.j_minus_744
    }

    /// `c(n)` as a rational, for assembling series.
    pub fn c_rat(&self, n: i64) -> num_rational::BigRational {
        rat_big(self.c(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(s: &str) -> BigInt {
        s.parse().unwrap()
    }

    #[test]
    fn delta_leading_terms() {
        let d = delta(5);
        assert_eq!(d.min_deg(), 1);
        assert_eq!(d.integer_coeff(1).unwrap(), BigInt::from(1));
        assert_eq!(d.integer_coeff(2).unwrap(), BigInt::from(-24));
        // Ramanujan tau(3), tau(4), tau(5)
        assert_eq!(d.integer_coeff(3).unwrap(), BigInt::from(252));
        assert_eq!(d.integer_coeff(4).unwrap(), BigInt::from(-1472));
        assert_eq!(d.integer_coeff(5).unwrap(), BigInt::from(4830));
    }

    #[test]
    fn j_expansion() {
        let j = j_minus_744(3);
        assert_eq!(j.integer_coeff(-1).unwrap(), BigInt::from(1));
        assert_eq!(j.integer_coeff(0).unwrap(), BigInt::from(0));
        assert_eq!(j.integer_coeff(1).unwrap(), BigInt::from(196884));
        assert_eq!(j.integer_coeff(2).unwrap(), BigInt::from(21493760));
        assert_eq!(j.integer_coeff(3).unwrap(), big("864299970"));
    }

    #[test]
    fn c_prime_values() {
        assert_eq!(c_prime(0), BigInt::from(24));
        assert_eq!(c_prime(-1), BigInt::from(1));
        assert_eq!(c_prime(1), BigInt::from(196884));
        assert_eq!(c(-5), BigInt::from(0));
    }

    #[test]
    fn colored_partitions() {
        assert_eq!(p_colored(24, 0), BigInt::from(1));
        assert_eq!(p_colored(24, 1), BigInt::from(24));
        assert_eq!(p_colored(24, 2), BigInt::from(324));
        assert_eq!(p_colored(24, -3), BigInt::from(0));
        assert_eq!(p_colored(1, 5), BigInt::from(7));
    }

    #[test]
    fn noghost() {
        assert_eq!(noghost_multiplicity(26, 2).unwrap(), BigInt::from(1));
        assert_eq!(noghost_multiplicity(26, -2).unwrap(), BigInt::from(324));
        assert_eq!(
            noghost_multiplicity(25, 2).unwrap(),
            p_colored(24, 0) - p_colored(24, 1)
        );
        assert_eq!(noghost_multiplicity(25, 2).unwrap(), BigInt::from(-23));
        assert!(matches!(noghost_multiplicity(2, 2), Err(Error::Domain(_))));
        assert!(matches!(noghost_multiplicity(26, 3), Err(Error::Domain(_))));
        for k in 3..26 {
            assert!(noghost_multiplicity(k, 2).unwrap() < BigInt::from(1));
        }
    }

    #[test]
    fn c0_exponents() {
        let e = c0_square_exponents(3).unwrap();
        assert_eq!(e[&1], BigInt::from(-744));
        assert_eq!(e[&2], BigInt::from(80256));
        assert_eq!(e[&3], BigInt::from(-12288744));
        assert!(c0_square_exponents(0).is_err());
    }

    #[test]
    fn table_consistency() {
        let t = ModformTable::new(12);
        assert_eq!(t.c(1), BigInt::from(196884));
        assert_eq!(t.p24[&0], BigInt::from(1));
        assert_eq!(t.p24[&2], BigInt::from(324));
        for (&n, v) in &t.p24 {
            assert_eq!(v, &p_colored(24, n));
        }
        assert_eq!(t.c_prime(0), BigInt::from(24));
        assert_eq!(t.c(-2), BigInt::from(0));
    }
}
