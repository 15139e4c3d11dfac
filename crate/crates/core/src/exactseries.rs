//! Exact truncated Laurent series in one variable (`QSeries`) and two
//! variables (`PQSeries`), with infinite-product expansion and exponent
//! extraction.
//!
//! A `QSeries` knows every coefficient up to and including its truncation
//! degree; nothing above it is ever read or written. Binary operations
//! compute the largest truncation that is still exact, so a product of a
//! series known to `q^10` with one starting at `q^-1` is known to `q^9`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Rational from a machine integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational from a big integer.
pub fn rat_big(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// Checked conversion to an integer.
pub fn to_integer(x: &BigRational, at: impl FnOnce() -> String) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::NonInteger {
            at: at(),
            value: x.to_string(),
        })
    }
}

/// Generalised binomial coefficient `binom(a, j)` for any integer `a`.
pub fn binomial(a: &BigInt, j: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j {
        num *= a - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Truncated Laurent series with exact rational coefficients.
///
/// Stored densely from the valuation upwards; `coeffs[i]` is the coefficient
/// of `q^(min_deg + i)`. The zero series has no coefficients and reports
/// `min_deg == trunc + 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    min_deg: i64,
    trunc: i64,
    coeffs: Vec<BigRational>,
}

impl QSeries {
    /// Builds a series whose coefficient at `q^(min_deg + i)` is `coeffs[i]`.
    /// Entries above `trunc` are dropped.
    pub fn new(min_deg: i64, coeffs: Vec<BigRational>, trunc: i64) -> Self {
        let mut s = QSeries {
            min_deg,
            trunc,
            coeffs,
        };
        s.normalize();
        s
    }

    pub fn from_ints(min_deg: i64, coeffs: &[i64], trunc: i64) -> Self {
        Self::new(min_deg, coeffs.iter().map(|&c| rat(c)).collect(), trunc)
    }

    pub fn from_bigints(min_deg: i64, coeffs: &[BigInt], trunc: i64) -> Self {
        Self::new(
            min_deg,
            coeffs.iter().cloned().map(rat_big).collect(),
            trunc,
        )
    }

    /// Builds a series from a sparse degree map.
    pub fn from_map(map: &BTreeMap<i64, BigRational>, trunc: i64) -> Self {
        let Some((&lo, _)) = map.iter().find(|(_, c)| !c.is_zero()) else {
            return Self::zero(trunc);
        };
        let hi = map.keys().next_back().copied().unwrap_or(lo).min(trunc);
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1).max(0) as usize];
        for (&d, c) in map.range(lo..=hi) {
            coeffs[(d - lo) as usize] = c.clone();
        }
        Self::new(lo, coeffs, trunc)
    }

    pub fn zero(trunc: i64) -> Self {
        QSeries {
            min_deg: trunc + 1,
            trunc,
            coeffs: Vec::new(),
        }
    }

    pub fn one(trunc: i64) -> Self {
        Self::monomial(0, BigRational::one(), trunc)
    }

    /// `c * q^deg`, known up to `trunc`.
    pub fn monomial(deg: i64, c: BigRational, trunc: i64) -> Self {
        Self::new(deg, vec![c], trunc)
    }

    fn normalize(&mut self) {
        let keep = (self.trunc - self.min_deg + 1).max(0) as usize;
        self.coeffs.truncate(keep);
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.min_deg = self.trunc + 1;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_deg += lead as i64;
        }
    }

    /// Lowest degree with a nonzero coefficient (`trunc + 1` for zero).
    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^d`. Panics if `d` lies above the truncation.
    pub fn coeff(&self, d: i64) -> BigRational {
        assert!(
            d <= self.trunc,
            "coefficient q^{d} requested beyond truncation {}",
            self.trunc
        );
        self.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    fn get(&self, d: i64) -> Option<&BigRational> {
        if d < self.min_deg {
            return None;
        }
        self.coeffs.get((d - self.min_deg) as usize)
    }

    /// Leading coefficient, if the series is nonzero.
    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.first()
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_deg + i as i64, c))
    }

    /// Sparse degree → coefficient view.
    pub fn to_map(&self) -> BTreeMap<i64, BigRational> {
        self.terms().map(|(d, c)| (d, c.clone())).collect()
    }

    pub fn term_count(&self) -> usize {
        self.terms().count()
    }

    /// Forgets everything above degree `t`.
    pub fn truncate(&self, t: i64) -> Self {
        Self::new(self.min_deg, self.coeffs.clone(), t.min(self.trunc))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QSeries {
            min_deg: self.min_deg + k,
            trunc: self.trunc + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.trunc);
        }
        QSeries {
            min_deg: self.min_deg,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Formal derivative `q d/dq`.
    fn theta(&self) -> Self {
        Self::new(
            self.min_deg,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(self.min_deg + i as i64))
                .collect(),
            self.trunc,
        )
    }

    /// Integer coefficient of `q^d`, failing if it is not integral.
    pub fn integer_coeff(&self, d: i64) -> Result<BigInt> {
        to_integer(&self.coeff(d), || format!("q^{d}"))
    }

    /// All coefficients as integers, or the first offending degree.
    pub fn to_integers(&self) -> Result<BTreeMap<i64, BigInt>> {
        self.terms()
            .map(|(d, c)| Ok((d, to_integer(c, || format!("q^{d}"))?)))
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Multiplicative inverse. The result is exact up to
    /// `trunc - 2 * min_deg`.
    pub fn invert(&self) -> Result<Self> {
        let Some(u0) = self.leading() else {
            return Err(Error::NotInvertible("zero series".into()));
        };
        let v = self.min_deg;
        let out_trunc = self.trunc - 2 * v;
        let n = (self.trunc - v + 1).max(0) as usize;
        let u0_inv = u0.recip();
        let mut b: Vec<BigRational> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                b.push(u0_inv.clone());
                continue;
            }
            let mut acc = BigRational::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                if !self.coeffs[j].is_zero() && !b[k - j].is_zero() {
                    acc += &self.coeffs[j] * &b[k - j];
                }
            }
            b.push(-acc * &u0_inv);
        }
        Ok(Self::new(-v, b, out_trunc))
    }

    /// Logarithm of a series of the form `1 + O(q)`.
    pub fn log(&self) -> Result<Self> {
        if self.min_deg != 0 || !self.coeff(0).is_one() {
            return Err(Error::Domain(
                "logarithm needs a series of the form 1 + O(q)".into(),
            ));
        }
        // q L' = q a' / a
        let inv = self.invert()?;
        let ql = &self.theta() * &inv;
        let n = self.trunc.max(0) as usize;
        let mut out = vec![BigRational::zero(); n + 1];
        for (d, c) in ql.terms() {
            if d >= 1 && d <= self.trunc {
                out[d as usize] = c / rat(d);
            }
        }
        Ok(Self::new(0, out, self.trunc))
    }

    /// Exponential of a series with no terms below `q^1`.
    pub fn exp(&self) -> Result<Self> {
        if !self.is_zero() && self.min_deg < 1 {
            return Err(Error::Domain(
                "exponential needs a series with min_deg >= 1".into(),
            ));
        }
        // n e_n = sum_{k=1}^n k a_k e_{n-k}
        let n = self.trunc.max(0) as usize;
        let a: Vec<BigRational> = (0..=n as i64)
            .map(|d| {
                if d <= self.trunc {
                    self.coeff(d)
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        let mut e = vec![BigRational::one()];
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                if !a[k].is_zero() && !e[m - k].is_zero() {
                    acc += &a[k] * rat(k as i64) * &e[m - k];
                }
            }
            e.push(acc / rat(m as i64));
        }
        Ok(Self::new(0, e, self.trunc))
    }

    /// Multiplies by `(1 - q^n)^a`, a sparse binomial factor.
    pub fn mul_binomial_factor(&self, n: i64, a: &BigInt) -> Self {
        assert!(n >= 1, "binomial factor needs n >= 1");
        if a.is_zero() || self.is_zero() {
            return self.clone();
        }
        let span = self.trunc - self.min_deg;
        let jmax = (span / n).max(0) as u64;
        let mut out = vec![BigRational::zero(); (span + 1) as usize];
        for j in 0..=jmax {
            let mut b = binomial(a, j);
            if b.is_zero() {
                break;
            }
            if j % 2 == 1 {
                b = -b;
            }
            let b = rat_big(b);
            let off = (j as i64 * n) as usize;
            for (i, c) in self.coeffs.iter().enumerate() {
                if i + off >= out.len() {
                    break;
                }
                if !c.is_zero() {
                    out[i + off] += c * &b;
                }
            }
        }
        Self::new(self.min_deg, out, self.trunc)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{d}")?,
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(q^{})", self.trunc + 1)
    }
}

fn add_impl(a: &QSeries, b: &QSeries, negate_b: bool) -> QSeries {
    let trunc = a.trunc.min(b.trunc);
    if a.is_zero() && b.is_zero() {
        return QSeries::zero(trunc);
    }
    let lo = a.min_deg.min(b.min_deg);
    if lo > trunc {
        return QSeries::zero(trunc);
    }
    let mut out = vec![BigRational::zero(); (trunc - lo + 1) as usize];
    for (d, c) in a.terms() {
        if d <= trunc {
            out[(d - lo) as usize] += c;
        }
    }
    for (d, c) in b.terms() {
        if d <= trunc {
            if negate_b {
                out[(d - lo) as usize] -= c;
            } else {
                out[(d - lo) as usize] += c;
            }
        }
    }
    QSeries::new(lo, out, trunc)
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        add_impl(self, rhs, false)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        add_impl(self, rhs, true)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            min_deg: self.min_deg,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    /// Cauchy product; exact up to
    /// `min(a.trunc + b.min_deg, b.trunc + a.min_deg)`.
    fn mul(self, rhs: &QSeries) -> QSeries {
        let (a, b) = (self, rhs);
        let trunc = (a.trunc + b.min_deg).min(b.trunc + a.min_deg);
        if a.is_zero() || b.is_zero() {
            return QSeries::zero(trunc);
        }
        let lo = a.min_deg + b.min_deg;
        if lo > trunc {
            return QSeries::zero(trunc);
        }
        let len = (trunc - lo + 1) as usize;
        let mut out = vec![BigRational::zero(); len];
        for (i, x) in a.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate().take(len - i) {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        QSeries::new(lo, out, trunc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

/// `prod_{n >= 1} (1 - q^n)^{a_n}` known up to `q^trunc`. Exponents at
/// `n > trunc` cannot contribute and are ignored; absent entries are zero.
pub fn power_product(exponents: &BTreeMap<i64, BigInt>, trunc: i64) -> QSeries {
    let mut acc = QSeries::one(trunc);
    if trunc < 1 {
        return acc;
    }
    for (&n, a) in exponents.range(1..=trunc) {
        acc = acc.mul_binomial_factor(n, a);
    }
    acc
}

/// Exponents `a_n` with `f = q^h prod (1 - q^n)^{a_n}` where `h` is the
/// valuation of `f`.
///
/// Only nonzero exponents are returned; they are determined for
/// `1 <= n <= f.trunc() - h`. Fails unless `f` has leading coefficient 1,
/// integer coefficients, and every exponent comes out integral.
pub fn extract_product_exponents(f: &QSeries) -> Result<BTreeMap<i64, BigInt>> {
    let Some(lead) = f.leading() else {
        return Err(Error::NotAProduct("zero series".into()));
    };
    if !lead.is_one() {
        return Err(Error::NotAProduct(format!(
            "leading coefficient is {lead}, not 1"
        )));
    }
    f.to_integers()?;
    let g = f.shift(-f.min_deg());
    let log = g.log()?;
    let top = g.trunc();
    let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
    // d * L_d = -sum_{n | d} n a_n
    for d in 1..=top {
        let mut s = log.coeff(d) * rat(d);
        for (n, a) in out.iter() {
            if *n < d && d % n == 0 {
                s += rat(*n) * rat_big(a.clone());
            }
        }
        let a = -s / rat(d);
        let a = to_integer(&a, || format!("exponent of (1 - q^{d})"))
            .map_err(|_| Error::NotAProduct(format!("exponent of (1 - q^{d}) is {a}")))?;
        if !a.is_zero() {
            out.insert(d, a);
        }
    }
    Ok(out)
}

/// Truncated series in `p` whose coefficients are `QSeries` in `q`.
///
/// The coefficient of `p^m` is known for `q`-degrees in
/// `[-m - 1, q_trunc]`; `p`-degrees run over `[p_min, p_trunc]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQSeries {
    rows: BTreeMap<i64, QSeries>,
    p_min: i64,
    p_trunc: i64,
    q_trunc: i64,
}

impl PQSeries {
    /// Assembles a bivariate series; every row is cut to `q_trunc` and must
    /// be known at least that far and respect the `q`-window.
    pub fn from_rows(
        p_min: i64,
        p_trunc: i64,
        q_trunc: i64,
        rows: BTreeMap<i64, QSeries>,
    ) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (m, row) in rows {
            if m < p_min || m > p_trunc {
                continue;
            }
            if row.trunc() < q_trunc {
                return Err(Error::Domain(format!(
                    "row p^{m} known only to q^{}, need q^{q_trunc}",
                    row.trunc()
                )));
            }
            let row = row.truncate(q_trunc);
            if !row.is_zero() && row.min_deg() < -m - 1 {
                return Err(Error::Domain(format!(
                    "row p^{m} has a term q^{} below its window",
                    row.min_deg()
                )));
            }
            if !row.is_zero() {
                out.insert(m, row);
            }
        }
        Ok(PQSeries {
            rows: out,
            p_min,
            p_trunc,
            q_trunc,
        })
    }

    pub fn p_min(&self) -> i64 {
        self.p_min
    }

    pub fn p_trunc(&self) -> i64 {
        self.p_trunc
    }

    pub fn q_trunc(&self) -> i64 {
        self.q_trunc
    }

    /// Range of `q`-degrees known at `p^m`.
    pub fn q_window(&self, m: i64) -> (i64, i64) {
        (-m - 1, self.q_trunc)
    }

    /// The `q`-series multiplying `p^m`.
    pub fn row(&self, m: i64) -> QSeries {
        self.rows
            .get(&m)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(self.q_trunc))
    }

    /// Coefficient of `p^m q^n`; `None` outside the known window.
    pub fn coeff(&self, m: i64, n: i64) -> Option<BigRational> {
        let (lo, hi) = self.q_window(m);
        if m < self.p_min || m > self.p_trunc || n < lo || n > hi {
            return None;
        }
        Some(
            self.rows
                .get(&m)
                .map(|r| r.coeff(n))
                .unwrap_or_else(BigRational::zero),
        )
    }

    /// Nonzero terms ordered by `p`-degree then `q`-degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigRational)> + '_ {
        self.rows
            .iter()
            .flat_map(|(&m, r)| r.terms().map(move |(n, c)| (m, n, c)))
    }

    pub fn term_count(&self) -> usize {
        self.rows.values().map(QSeries::term_count).sum()
    }

    /// First `(p, q)` where the two series disagree, scanning `p`-degrees
    /// then `q`-degrees upwards over the common window.
    pub fn first_difference(
        &self,
        other: &PQSeries,
    ) -> Option<(i64, i64, BigRational, BigRational)> {
        let p_lo = self.p_min.min(other.p_min);
        let p_hi = self.p_trunc.min(other.p_trunc);
        let q_hi = self.q_trunc.min(other.q_trunc);
        for m in p_lo..=p_hi {
            let a = self.row(m);
            let b = other.row(m);
            for n in (-m - 1)..=q_hi {
                let (x, y) = (a.coeff(n), b.coeff(n));
                if x != y {
                    return Some((m, n, x, y));
                }
            }
        }
        None
    }

    /// First coefficient that is not an integer.
    pub fn first_non_integer(&self) -> Option<(i64, i64)> {
        self.terms()
            .find(|(_, _, c)| !c.is_integer())
            .map(|(m, n, _)| (m, n))
    }

    /// All coefficients as integers (checked).
    pub fn to_integers(&self) -> Result<BTreeMap<(i64, i64), BigInt>> {
        self.terms()
            .map(|(m, n, c)| Ok(((m, n), to_integer(c, || format!("p^{m} q^{n}"))?)))
            .collect()
    }

    /// Product of two bivariate series. The result is known up to the
    /// smallest truncation that stays exact in both variables.
    pub fn mul(&self, other: &PQSeries) -> Result<PQSeries> {
        let p_min = self.p_min + other.p_min;
        let p_trunc = (self.p_trunc + other.p_min).min(other.p_trunc + self.p_min);
        let mut rows: BTreeMap<i64, QSeries> = BTreeMap::new();
        let mut q_trunc = self.q_trunc.min(other.q_trunc);
        for m in p_min..=p_trunc {
            let mut acc = QSeries::zero(i64::MAX / 4);
            for a in self.p_min..=(m - other.p_min) {
                let b = m - a;
                let (Some(x), Some(y)) = (self.rows.get(&a), other.rows.get(&b)) else {
                    continue;
                };
                acc = &acc + &(x * y);
            }
            q_trunc = q_trunc.min(acc.trunc());
            rows.insert(m, acc);
        }
        PQSeries::from_rows(p_min, p_trunc, q_trunc, rows)
    }

    /// Every coefficient multiplied by `c`.
    pub fn scale(&self, c: &BigRational) -> PQSeries {
        PQSeries {
            rows: self
                .rows
                .iter()
                .map(|(&m, r)| (m, r.scale(c)))
                .filter(|(_, r)| !r.is_zero())
                .collect(),
            ..*self
        }
    }
}

impl fmt::Display for PQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, r) in &self.rows {
            writeln!(f, "p^{m}: {r}")?;
        }
        write!(
            f,
            "O(p^{}) with q known to q^{}",
            self.p_trunc + 1,
            self.q_trunc
        )
    }
}

/// Row truncation scheme used by the product routines: the coefficient of
/// total `p`-exponent `k` is carried to `q^(top - k)`, which keeps every
/// product exact down to `q_trunc` at the last row even though each unit of
/// `p` can lower the `q`-degree by one.
fn row_top(p_trunc: i64, q_trunc: i64) -> i64 {
    q_trunc + p_trunc + 1
}

/// `p^-1 (1 - p q^-1)^{e(1,-1)} prod_{m>=1} (1 - p^m)^{e(m,0)}
/// prod_{m,n>=1} (1 - p^m q^n)^{e(m,n)}`, known for `p`-degrees up to
/// `p_trunc` and `q`-degrees up to `q_trunc`.
pub fn pq_product(exponent: impl Fn(i64, i64) -> BigInt, p_trunc: i64, q_trunc: i64) -> PQSeries {
    let kmax = p_trunc + 1;
    let top = row_top(p_trunc, q_trunc);
    let mut rows: Vec<QSeries> = (0..=kmax).map(|k| QSeries::zero(top - k)).collect();
    rows[0] = QSeries::one(top);

    let mut factors = vec![(1, -1)];
    for m in 1..=kmax {
        for n in 0..=(top - m) {
            factors.push((m, n));
        }
    }
    for (m, n) in factors {
        let e = exponent(m, n);
        if e.is_zero() {
            continue;
        }
        let jmax = kmax / m;
        let coeffs: Vec<BigRational> = (0..=jmax as u64)
            .map(|j| {
                let b = binomial(&e, j);
                rat_big(if j % 2 == 1 { -b } else { b })
            })
            .collect();
        let old = rows.clone();
        for k in 0..=kmax {
            let mut acc = old[k as usize].clone();
            for (j, c) in coeffs.iter().enumerate().skip(1) {
                let src = k - j as i64 * m;
                if src < 0 {
                    break;
                }
                if c.is_zero() {
                    continue;
                }
                let term = old[src as usize].shift(j as i64 * n).scale(c);
                acc = &acc + &term;
            }
            rows[k as usize] = acc.truncate(top - k);
        }
    }
    let rows: BTreeMap<i64, QSeries> = rows
        .into_iter()
        .enumerate()
        .map(|(k, r)| (k as i64 - 1, r))
        .collect();
    PQSeries::from_rows(-1, p_trunc, q_trunc, rows)
        .expect("product rows are exact to q_trunc by construction")
}

/// `exp(X)` for `X = sum_{k>=1} X_k p^k` with `QSeries` coefficients.
///
/// `x[&k]` is the coefficient of `p^k`; it should be known to
/// `q^(top - k)`. Returns the coefficients of `p^0 .. p^kmax`, with row `k`
/// exact to `q^(top - k)`.
pub fn exp_p(x: &BTreeMap<i64, QSeries>, kmax: i64, top: i64) -> Vec<QSeries> {
    let mut e: Vec<QSeries> = vec![QSeries::one(top)];
    for k in 1..=kmax {
        // k E_k = sum_{j=1}^k j X_j E_{k-j}
        let mut acc = QSeries::zero(top - k);
        for j in 1..=k {
            let Some(xj) = x.get(&j) else { continue };
            if xj.is_zero() {
                continue;
            }
            let term = (xj * &e[(k - j) as usize]).scale(&rat(j));
            acc = &acc + &term;
        }
        e.push(
            acc.scale(&BigRational::new(BigInt::one(), BigInt::from(k)))
                .truncate(top - k),
        );
    }
    e
}

/// Helper for the twisted product: truncation used for row `k` when the
/// final answer is wanted to `p^p_trunc` (after the `p^-1` prefactor) and
/// `q^q_trunc`.
pub fn row_truncation(p_trunc: i64, q_trunc: i64, k: i64) -> i64 {
    row_top(p_trunc, q_trunc) - k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<(i64, i64)> {
        s.terms()
            .map(|(d, c)| (d, i64::try_from(c.to_integer()).unwrap()))
            .collect()
    }

    #[test]
    fn difference_of_squares() {
        let a = QSeries::from_ints(0, &[1, 1], 5);
        let b = QSeries::from_ints(0, &[1, -1], 5);
        let p = &a * &b;
        assert_eq!(ints(&p), vec![(0, 1), (2, -1)]);
        assert_eq!(p.trunc(), 5);
    }

    #[test]
    fn monomial_identity() {
        let a = QSeries::monomial(-1, rat(1), 10);
        let b = QSeries::monomial(1, rat(1), 10);
        let p = &a * &b;
        assert_eq!(ints(&p), vec![(0, 1)]);
        assert_eq!(p.trunc(), 9);
    }

    #[test]
    fn truncation_tracks_valuation() {
        let a = QSeries::from_ints(-1, &[1, 0, 3], 8);
        let b = QSeries::from_ints(0, &[1, 2], 10);
        assert_eq!((&a * &b).trunc(), 8);
        assert_eq!((&a + &b).trunc(), 8);
        assert_eq!(a.shift(3).trunc(), 11);
    }

    #[test]
    fn geometric_inverse() {
        let a = QSeries::from_ints(0, &[1, -1], 4);
        let inv = a.invert().unwrap();
        assert_eq!(ints(&inv), vec![(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]);
    }

    #[test]
    fn inverse_of_monomial() {
        let a = QSeries::monomial(1, rat(1), 6);
        let inv = a.invert().unwrap();
        assert_eq!(ints(&inv), vec![(-1, 1)]);
        assert_eq!(inv.trunc(), 4);
    }

    #[test]
    fn zero_is_not_invertible() {
        assert!(matches!(
            QSeries::zero(5).invert(),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn mercator() {
        let a = QSeries::from_ints(0, &[1, -1], 4);
        let l = a.log().unwrap();
        let expect: Vec<BigRational> = (1..=4)
            .map(|k| BigRational::new((-1).into(), k.into()))
            .collect();
        for (k, e) in (1..=4).zip(expect) {
            assert_eq!(l.coeff(k), e);
        }
        assert_eq!(l.coeff(0), rat(0));
    }

    #[test]
    fn exp_of_zero() {
        let e = QSeries::zero(7).exp().unwrap();
        assert_eq!(e, QSeries::one(7));
    }

    #[test]
    fn log_and_exp_reject_bad_input() {
        assert!(matches!(
            QSeries::from_ints(0, &[2, 1], 4).log(),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            QSeries::from_ints(0, &[1, 1], 4).exp(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn power_product_binomial() {
        let mut e = BTreeMap::new();
        e.insert(1, BigInt::from(24));
        let s = power_product(&e, 2);
        // (1-q)^24 = 1 - 24 q + C(24,2) q^2
        assert_eq!(ints(&s), vec![(0, 1), (1, -24), (2, 276)]);
        assert_eq!(power_product(&BTreeMap::new(), 5), QSeries::one(5));
    }

    #[test]
    fn extract_simple() {
        let f = QSeries::from_ints(0, &[1, -1], 6);
        let e = extract_product_exponents(&f).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[&1], BigInt::from(1));
    }

    #[test]
    fn extract_rejects_non_product() {
        // 1 + q/2 is not integral.
        let f = QSeries::new(0, vec![rat(1), BigRational::new(1.into(), 2.into())], 3);
        assert!(extract_product_exponents(&f).is_err());
        let g = QSeries::from_ints(0, &[2, 1], 3);
        assert!(matches!(
            extract_product_exponents(&g),
            Err(Error::NotAProduct(_))
        ));
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(&BigInt::from(-2), 3), BigInt::from(-4));
        assert_eq!(binomial(&BigInt::from(5), 2), BigInt::from(10));
        assert_eq!(binomial(&BigInt::from(2), 3), BigInt::from(0));
    }

    #[test]
    fn pq_trivial_products() {
        let s = pq_product(|_, _| BigInt::zero(), 3, 3);
        assert_eq!(s.term_count(), 1);
        assert_eq!(s.coeff(-1, 0), Some(rat(1)));

        let s = pq_product(
            |m, n| {
                if (m, n) == (1, -1) {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            },
            3,
            3,
        );
        assert_eq!(s.term_count(), 2);
        assert_eq!(s.coeff(-1, 0), Some(rat(1)));
        assert_eq!(s.coeff(0, -1), Some(rat(-1)));
    }

    #[test]
    fn pq_window() {
        let s = pq_product(|_, _| BigInt::one(), 2, 2);
        assert_eq!(s.q_window(2), (-3, 2));
        assert!(s.coeff(2, -4).is_none());
        assert!(s.coeff(3, 0).is_none());
        assert!(s.coeff(0, 3).is_none());
    }

    #[test]
    fn exp_p_matches_binomial_product() {
        // exp(-sum_N p^N q^N / N) = 1 - p q
        let top = row_top(3, 3);
        let mut x = BTreeMap::new();
        for k in 1..=4 {
            x.insert(
                k,
                QSeries::monomial(k, BigRational::new((-1).into(), k.into()), top - k),
            );
        }
        let e = exp_p(&x, 4, top);
        assert_eq!(e[1].coeff(1), rat(-1));
        for row in &e[2..] {
            assert!(row.is_zero());
        }
    }
}
