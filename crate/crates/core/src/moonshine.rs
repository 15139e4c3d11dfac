//! Thompson series data, the twisted denominator relation
//!
//! `p^-1 exp(-sum_{N>0} sum_{m>0, n} Tr(g^N | V_{mn}) p^{mN} q^{nN} / N)
//!  = T_g(p) - T_g(q)`
//!
//! and a solver that recovers unknown coefficients of `T_g` from it.
//!
//! Trace data is positional: `Tr(g^N | V_k)` is the `q^k` coefficient of
//! the series stored for power `N`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactseries::{exp_p, rat, PQSeries, QSeries};
use crate::modforms::j_minus_744;
use crate::report::{elapsed_ms, Discrepancy, IdentityReport, Location};

/// McKay-Thompson series of a conjugacy class and of its powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThompsonData {
    pub label: String,
    /// Series for `g^N`, keyed by `N >= 1`.
    pub power_series: BTreeMap<i64, QSeries>,
    pub max_power: i64,
}

impl ThompsonData {
    /// Checks that every series starts `q^-1 + ...` and that the powers are
    /// positive and at most `max_power`.
    pub fn new(
        label: impl Into<String>,
        power_series: BTreeMap<i64, QSeries>,
        max_power: i64,
    ) -> Result<Self> {
        for (&n, s) in &power_series {
            if n < 1 || n > max_power {
                return Err(Error::Domain(format!("power {n} outside 1..={max_power}")));
            }
            if s.min_deg() != -1 || !s.coeff(-1).is_one() {
                return Err(Error::Domain(format!(
                    "series for power {n} must start with q^-1"
                )));
            }
        }
        Ok(ThompsonData {
            label: label.into(),
            power_series,
            max_power,
        })
    }

    pub fn series(&self, n: i64) -> Result<&QSeries> {
        self.power_series
            .get(&n)
            .ok_or_else(|| Error::InsufficientData {
                power: n.max(0) as u32,
                detail: format!("no series for g^{n}"),
            })
    }

    /// Reads the text format: a header `class <label> maxpower <M>`, then
    /// lines `N: a_-1 a_0 a_1 ...`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(String, i64)> = None;
        let mut series = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: i + 1, msg };
            if header.is_none() {
                let toks: Vec<&str> = line.split_whitespace().collect();
                match toks.as_slice() {
                    ["class", label, "maxpower", m] => {
                        let m: i64 = m.parse().map_err(|_| err(format!("bad maxpower {m:?}")))?;
                        header = Some((label.to_string(), m));
                    }
                    _ => return Err(err("expected `class <label> maxpower <M>`".into())),
                }
                continue;
            }
            let (n, rest) = line
                .split_once(':')
                .ok_or_else(|| err("expected `N: coefficients`".into()))?;
            let n: i64 = n
                .trim()
                .parse()
                .map_err(|_| err(format!("bad power {:?}", n.trim())))?;
            let coeffs = rest
                .split_whitespace()
                .map(|t| {
                    t.parse::<BigInt>()
                        .map_err(|_| err(format!("bad coefficient {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if coeffs.is_empty() {
                return Err(err(format!("no coefficients for power {n}")));
            }
            let trunc = coeffs.len() as i64 - 2;
            if series
                .insert(n, QSeries::from_bigints(-1, &coeffs, trunc))
                .is_some()
            {
                return Err(err(format!("power {n} given twice")));
            }
        }
        let (label, max_power) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        Self::new(label, series, max_power)
    }

    /// Inverse of [`ThompsonData::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("class {} maxpower {}\n", self.label, self.max_power);
        for (n, s) in &self.power_series {
            let _ = write!(out, "{n}:");
            for d in -1..=s.trunc() {
                let _ = write!(out, " {}", s.coeff(d));
            }
            out.push('\n');
        }
        out
    }

    /// Copy with `power_series[1]` cut to `q^trunc`, and every other power
    /// that coincides with it cut the same way.
    pub fn truncated_first(&self, trunc: i64) -> Self {
        let first = self.power_series.get(&1).cloned();
        let mut out = self.clone();
        if let Some(f) = first {
            for s in out.power_series.values_mut() {
                if same_series(s, &f) {
                    *s = s.truncate(trunc);
                }
            }
        }
        out
    }
}

fn same_series(a: &QSeries, b: &QSeries) -> bool {
    let t = a.trunc().min(b.trunc());
    a.truncate(t) == b.truncate(t)
}

/// Data for the identity class: every power has series `j - 744`, known to
/// `q^trunc`. Powers `1..=max(trunc, 1)` are stored.
pub fn identity_element_data(trunc: i64) -> ThompsonData {
    let trunc = trunc.max(1);
    let j = j_minus_744(trunc);
    let series = (1..=trunc).map(|n| (n, j.clone())).collect();
    ThompsonData::new("1A", series, trunc).expect("j starts with q^-1")
}

/// For each power `N`, the highest `q`-degree of its series read by the
/// twisted relation at `(P, Q)`.
pub fn twisted_requirements(p_trunc: i64, q_trunc: i64) -> BTreeMap<i64, i64> {
    let kmax = p_trunc + 1;
    let top = q_trunc + p_trunc + 1;
    let mut need = BTreeMap::new();
    for n in 1..=kmax {
        let mut hi = -1;
        for k in (n..=kmax).step_by(n as usize) {
            let m = k / n;
            let max_b = top - k;
            if max_b >= 0 {
                hi = hi.max(m * (max_b / n));
            }
        }
        need.insert(n, hi);
    }
    need
}

/// Identity data long enough for the twisted relation at `(P, Q)`.
pub fn identity_data_for(p_trunc: i64, q_trunc: i64) -> ThompsonData {
    let need = twisted_requirements(p_trunc, q_trunc);
    let t = need
        .values()
        .copied()
        .max()
        .unwrap_or(1)
        .max(p_trunc + 1)
        .max(q_trunc);
    identity_element_data(t)
}

/// `p^-1 exp(-sum_N sum_{m,n} Tr(g^N | V_{mn}) p^{mN} q^{nN} / N)` through
/// `p^P`, `q^Q`.
pub fn twisted_lhs(data: &ThompsonData, p_trunc: i64, q_trunc: i64) -> Result<PQSeries> {
    let kmax = p_trunc + 1;
    let top = q_trunc + p_trunc + 1;
    let need = twisted_requirements(p_trunc, q_trunc);
    let mut x: BTreeMap<i64, BTreeMap<i64, BigRational>> = BTreeMap::new();
    for (&n, &hi) in &need {
        let s = data.series(n)?;
        if s.trunc() < hi {
            return Err(Error::InsufficientData {
                power: n as u32,
                detail: format!("series for g^{n} known to q^{}, need q^{hi}", s.trunc()),
            });
        }
        let inv_n = BigRational::new(BigInt::one(), BigInt::from(n));
        for k in (n..=kmax).step_by(n as usize) {
            let m = k / n;
            let row = x.entry(k).or_default();
            let lo = if m == 1 { -1 } else { 0 };
            let mut b_idx = lo;
            while b_idx * n <= top - k {
                let c = s.coeff(m * b_idx);
                if !c.is_zero() {
                    *row.entry(b_idx * n).or_insert_with(BigRational::zero) -= c * &inv_n;
                }
                b_idx += 1;
            }
        }
    }
    let xs: BTreeMap<i64, QSeries> = x
        .into_iter()
        .map(|(k, row)| (k, QSeries::from_map(&row, top - k)))
        .collect();
    let e = exp_p(&xs, kmax, top);
    let rows = e
        .into_iter()
        .enumerate()
        .map(|(k, r)| (k as i64 - 1, r))
        .collect();
    PQSeries::from_rows(-1, p_trunc, q_trunc, rows)
}

/// `T_g(p) - T_g(q)` through `p^P`, `q^Q`.
pub fn twisted_rhs(data: &ThompsonData, p_trunc: i64, q_trunc: i64) -> Result<PQSeries> {
    let s = data.series(1)?;
    if s.trunc() < p_trunc.max(q_trunc) {
        return Err(Error::InsufficientData {
            power: 1,
            detail: format!(
                "series for g known to q^{}, need q^{}",
                s.trunc(),
                p_trunc.max(q_trunc)
            ),
        });
    }
    crate::identities::j_difference(s, p_trunc, q_trunc)
}

/// Compares both sides of the twisted relation exactly.
pub fn verify_twisted(data: &ThompsonData, p_trunc: i64, q_trunc: i64) -> Result<IdentityReport> {
    if p_trunc < 1 || q_trunc < 1 {
        return Err(Error::Domain("truncations must be at least 1".into()));
    }
    let mut report = IdentityReport::new("twisted")
        .param("class", &data.label)
        .param("p_trunc", p_trunc)
        .param("q_trunc", q_trunc);
    report.p_trunc = Some(p_trunc);
    report.q_trunc = Some(q_trunc);
    let t = Instant::now();
    let lhs = twisted_lhs(data, p_trunc, q_trunc)?;
    report.time("lhs", elapsed_ms(t));
    let t = Instant::now();
    let rhs = twisted_rhs(data, p_trunc, q_trunc)?;
    report.time("rhs", elapsed_ms(t));
    report.lhs_terms = lhs.term_count();
    report.rhs_terms = rhs.term_count();
    match lhs.first_non_integer() {
        None => {
            lhs.to_integers()?;
            report = report.param("integral", true);
        }
        Some((p, q)) => {
            report = report.param("integral", false);
            report.note(format!(
                "left side has a non-integral coefficient at p^{p} q^{q}"
            ));
        }
    }
    if let Some((p, q, l, r)) = lhs.first_difference(&rhs) {
        report.fail(Discrepancy {
            location: Location::PQ { p, q },
            lhs: l,
            rhs: r,
        });
    }
    Ok(report)
}

// Sparse polynomials over the rationals in the unknown coefficients.

type Monomial = Vec<(i64, u32)>;

#[derive(Clone, Debug, Default, PartialEq)]
struct Poly(BTreeMap<Monomial, BigRational>);

impl Poly {
    fn constant(c: BigRational) -> Self {
        let mut p = Poly::default();
        p.add_term(Vec::new(), c);
        p
    }

    fn var(i: i64) -> Self {
        let mut p = Poly::default();
        p.add_term(vec![(i, 1)], BigRational::one());
        p
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(m.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&m);
        }
    }

    fn add_assign(&mut self, other: &Poly) {
        for (m, c) in &other.0 {
            self.add_term(m.clone(), c.clone());
        }
    }

    fn scale(&self, c: &BigRational) -> Poly {
        let mut p = Poly::default();
        for (m, x) in &self.0 {
            p.add_term(m.clone(), x * c);
        }
        p
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::default();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                p.add_term(mono_mul(a, b), x * y);
            }
        }
        p
    }

    fn degree(&self) -> u32 {
        self.0
            .keys()
            .map(|m| m.iter().map(|(_, e)| e).sum())
            .max()
            .unwrap_or(0)
    }

    fn variables(&self) -> BTreeSet<i64> {
        self.0
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| *v))
            .collect()
    }
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out: BTreeMap<i64, u32> = BTreeMap::new();
    for (v, e) in a.iter().chain(b) {
        *out.entry(*v).or_insert(0) += e;
    }
    out.into_iter().collect()
}

/// Bivariate series with polynomial coefficients, keyed by
/// `(p exponent, q exponent)`.
type PolySeries = BTreeMap<(i64, i64), Poly>;

fn poly_series_mul(a: &PolySeries, b: &PolySeries, kmax: i64, top: i64) -> PolySeries {
    let mut out = PolySeries::new();
    for (&(k1, b1), x) in a {
        for (&(k2, b2), y) in b {
            let k = k1 + k2;
            let q = b1 + b2;
            if k > kmax || q > top - k {
                continue;
            }
            let prod = x.mul(y);
            let e = out.entry((k, q)).or_default();
            e.add_assign(&prod);
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// Order in which equations are fed to the elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquationOrder {
    Forward,
    Reverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub max_iterations: usize,
    pub order: EquationOrder,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_iterations: 50,
            order: EquationOrder::Forward,
        }
    }
}

/// Outcome of [`solve_coefficients`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    /// `power_series[1]` extended through the longest run of determined
    /// coefficients.
    pub series: QSeries,
    /// Every coefficient above `known_up_to` that was pinned down,
    /// including ones beyond the target.
    pub determined: BTreeMap<i64, BigRational>,
    /// Indices in `(known_up_to, target_up_to]` left open.
    pub underdetermined: Vec<i64>,
    pub iterations: usize,
    pub equations: usize,
}

/// Recovers coefficients of `power_series[1]` above `known_up_to` from the
/// twisted relation, with default options.
pub fn solve_coefficients(
    data: &ThompsonData,
    known_up_to: i64,
    target_up_to: i64,
) -> Result<SolveResult> {
    solve_coefficients_with(data, known_up_to, target_up_to, SolveOptions::default())
}

/// The relation is used in the form
/// `log(p (T(p) - T(q))) = -sum_N sum_{m,n} Tr(g^N | V_{mn}) p^{mN} q^{nN} / N`,
/// whose right side is linear in the traces. Coefficients above
/// `known_up_to` become unknowns, also in every power whose stored series
/// coincides with `power_series[1]`. Each round substitutes the values
/// found so far, keeps the equations that are affine in the remaining
/// unknowns and eliminates exactly; an unknown counts as determined only
/// when its reduced row has no free variables. Rounds repeat until nothing
/// new is found or the iteration cap is hit. Nothing is guessed.
pub fn solve_coefficients_with(
    data: &ThompsonData,
    known_up_to: i64,
    target_up_to: i64,
    options: SolveOptions,
) -> Result<SolveResult> {
    let first = data.series(1)?;
    if known_up_to > first.trunc() {
        return Err(Error::InsufficientData {
            power: 1,
            detail: format!(
                "series for g known to q^{}, not q^{known_up_to}",
                first.trunc()
            ),
        });
    }
    if known_up_to < 0 {
        return Err(Error::Domain("known_up_to must be at least 0".into()));
    }
    if target_up_to <= known_up_to {
        return Ok(SolveResult {
            series: first.truncate(known_up_to),
            determined: BTreeMap::new(),
            underdetermined: Vec::new(),
            iterations: 0,
            equations: 0,
        });
    }

    let mut known: BTreeMap<i64, BigRational> =
        (-1..=known_up_to).map(|n| (n, first.coeff(n))).collect();
    let linked: BTreeSet<i64> = data
        .power_series
        .iter()
        .filter(|(_, s)| same_series(s, first))
        .map(|(&n, _)| n)
        .collect();

    let kmax = target_up_to + 2;
    let bmax = target_up_to + 2;
    let top = kmax + bmax;
    let bound = 2 * target_up_to + 2;
    let mut boxes: Vec<(i64, i64)> = Vec::new();
    for k in 1..=kmax {
        for b in -1..=bmax {
            if k * b <= bound {
                boxes.push((k, b));
            }
        }
    }
    if options.order == EquationOrder::Reverse {
        boxes.reverse();
    }

    let mut determined: BTreeMap<i64, BigRational> = BTreeMap::new();
    let mut iterations = 0;
    let mut equations_used = 0;
    loop {
        if iterations >= options.max_iterations {
            break;
        }
        iterations += 1;
        let value = |n: i64| -> Poly {
            if n < -1 {
                Poly::default()
            } else if let Some(v) = known.get(&n) {
                Poly::constant(v.clone())
            } else {
                Poly::var(n)
            }
        };
        // p (T(p) - T(q)) - 1
        let mut y = PolySeries::new();
        y.insert((1, -1), Poly::constant(rat(-1)));
        for m in 1..kmax {
            let v = value(m);
            if !v.is_zero() {
                y.insert((m + 1, 0), v);
            }
        }
        for n in 1..top {
            let v = value(n).scale(&rat(-1));
            if !v.is_zero() {
                y.insert((1, n), v);
            }
        }
        // log(1 + y)
        let mut log = PolySeries::new();
        let mut power = y.clone();
        for r in 1..=kmax {
            let c = BigRational::new(if r % 2 == 1 { 1 } else { -1 }.into(), r.into());
            for (key, p) in &power {
                log.entry(*key).or_default().add_assign(&p.scale(&c));
            }
            if r < kmax {
                power = poly_series_mul(&power, &y, kmax, top);
            }
        }
        // Trace side; `None` marks a coefficient no data determines.
        let mut trace: BTreeMap<(i64, i64), Option<Poly>> = BTreeMap::new();
        for &(k, b) in &boxes {
            let mut acc = Some(Poly::default());
            for n in 1..=k {
                if k % n != 0 || b % n != 0 {
                    continue;
                }
                let idx = (k / n) * (b / n);
                if idx < -1 {
                    continue;
                }
                let term = if n == 1 || linked.contains(&n) {
                    Some(value(idx))
                } else {
                    data.power_series
                        .get(&n)
                        .filter(|s| idx <= s.trunc())
                        .map(|s| Poly::constant(s.coeff(idx)))
                };
                match (acc.as_mut(), term) {
                    (Some(a), Some(t)) => {
                        a.add_assign(&t.scale(&BigRational::new((-1).into(), n.into())))
                    }
                    _ => acc = None,
                }
            }
            trace.insert((k, b), acc);
        }

        let mut elim = Eliminator::default();
        let mut progress = false;
        for &(k, b) in &boxes {
            let Some(Some(rhs)) = trace.get(&(k, b)) else {
                continue;
            };
            let mut eq = log.get(&(k, b)).cloned().unwrap_or_default();
            eq.add_assign(&rhs.scale(&rat(-1)));
            if eq.degree() > 1 {
                continue;
            }
            if eq.variables().is_empty() {
                if !eq.is_zero() {
                    return Err(Error::Inconsistent { p: k, q: b });
                }
                continue;
            }
            equations_used += 1;
            elim.add(&eq, (k, b))?;
        }
        for (v, val) in elim.determined() {
            if let std::collections::btree_map::Entry::Vacant(e) = known.entry(v) {
                e.insert(val.clone());
                determined.insert(v, val);
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }

    let underdetermined: Vec<i64> = ((known_up_to + 1)..=target_up_to)
        .filter(|n| !known.contains_key(n))
        .collect();
    let mut run_end = known_up_to;
    while run_end < target_up_to && known.contains_key(&(run_end + 1)) {
        run_end += 1;
    }
    let map: BTreeMap<i64, BigRational> = known
        .iter()
        .filter(|(&n, _)| n <= run_end)
        .map(|(&n, v)| (n, v.clone()))
        .collect();
    Ok(SolveResult {
        series: QSeries::from_map(&map, run_end),
        determined,
        underdetermined,
        iterations,
        equations: equations_used,
    })
}

/// Incremental exact Gauss-Jordan elimination on affine equations
/// `sum a_v x_v + c = 0`.
#[derive(Default)]
struct Eliminator {
    /// pivot variable -> (coefficients with pivot coefficient 1, constant)
    rows: BTreeMap<i64, (BTreeMap<i64, BigRational>, BigRational)>,
}

impl Eliminator {
    fn add(&mut self, eq: &Poly, at: (i64, i64)) -> Result<()> {
        let mut lin: BTreeMap<i64, BigRational> = BTreeMap::new();
        let mut c = BigRational::zero();
        for (m, x) in &eq.0 {
            match m.as_slice() {
                [] => c += x,
                [(v, 1)] => *lin.entry(*v).or_insert_with(BigRational::zero) += x,
                _ => unreachable!("affine equations only"),
            }
        }
        lin.retain(|_, x| !x.is_zero());
        // Reduce by existing pivots.
        let pivots: Vec<i64> = lin
            .keys()
            .filter(|v| self.rows.contains_key(v))
            .copied()
            .collect();
        for v in pivots {
            let Some(f) = lin.get(&v).cloned() else {
                continue;
            };
            let (row, rc) = &self.rows[&v];
            for (w, a) in row {
                let e = lin.entry(*w).or_insert_with(BigRational::zero);
                *e -= &f * a;
            }
            c -= &f * rc;
            lin.retain(|_, x| !x.is_zero());
        }
        let Some((&pivot, lead)) = lin.iter().next() else {
            if !c.is_zero() {
                return Err(Error::Inconsistent { p: at.0, q: at.1 });
            }
            return Ok(());
        };
        let lead = lead.clone();
        for x in lin.values_mut() {
            *x /= &lead;
        }
        c /= &lead;
        // Eliminate the new pivot from existing rows.
        for (row, rc) in self.rows.values_mut() {
            let Some(f) = row.get(&pivot).cloned() else {
                continue;
            };
            for (w, a) in &lin {
                let e = row.entry(*w).or_insert_with(BigRational::zero);
                *e -= &f * a;
            }
            *rc -= &f * &c;
            row.retain(|_, x| !x.is_zero());
        }
        self.rows.insert(pivot, (lin, c));
        Ok(())
    }

    /// Variables whose reduced row involves no other variable.
    fn determined(&self) -> Vec<(i64, BigRational)> {
        self.rows
            .iter()
            .filter(|(_, (row, _))| row.len() == 1)
            .map(|(&v, (_, c))| (v, -c))
            .collect()
    }
}

/// Integer view of a solved coefficient, if it is one.
pub fn as_integer(x: &BigRational) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

/// Checks the identity-class data at `(P, Q)` with enough coefficients.
pub fn verify_identity_class(p_trunc: i64, q_trunc: i64) -> Result<IdentityReport> {
    verify_twisted(&identity_data_for(p_trunc, q_trunc), p_trunc, q_trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactseries::rat_big;

    fn rat_c(n: i64) -> BigRational {
        rat_big(crate::modforms::c(n))
    }

    #[test]
    fn identity_data_shape() {
        let d = identity_element_data(10);
        assert_eq!(d.label, "1A");
        assert_eq!(d.series(1).unwrap().coeff(1), rat(196884));
        assert_eq!(d.series(7).unwrap(), d.series(1).unwrap());
        assert!(d.power_series.values().all(|s| s.min_deg() == -1));
    }

    #[test]
    fn text_roundtrip() {
        let d = identity_element_data(4);
        let text = d.to_text();
        assert!(text.starts_with("class 1A maxpower 4\n1: 1 0 196884"));
        assert_eq!(ThompsonData::parse(&text).unwrap(), d);
        let with_comments = format!("# identity\n{text}# end\n");
        assert_eq!(ThompsonData::parse(&with_comments).unwrap(), d);
        assert!(matches!(
            ThompsonData::parse("class 1A\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            ThompsonData::parse("class X maxpower 2\n1: 2 0\n"),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn twisted_small() {
        let r = verify_identity_class(2, 2).unwrap();
        assert!(r.equal, "{:?}", r.first_discrepancy);
        assert_eq!(r.get_param("integral"), Some("true"));
    }

    #[test]
    fn single_orbit() {
        let s = QSeries::from_ints(-1, &[1], 20);
        let series = (1..=6).map(|n| (n, s.clone())).collect();
        let d = ThompsonData::new("toy", series, 6).unwrap();
        let lhs = twisted_lhs(&d, 3, 3).unwrap();
        // p^-1 (1 - p q^-1)
        let terms: Vec<_> = lhs.terms().map(|(m, n, c)| (m, n, c.clone())).collect();
        assert_eq!(terms, vec![(-1, 0, rat(1)), (0, -1, rat(-1))]);
    }

    #[test]
    fn missing_power() {
        let d = identity_element_data(3);
        assert!(matches!(
            twisted_lhs(&d, 4, 4),
            Err(Error::InsufficientData { .. })
        ));
    }

    #[test]
    fn solver_trivial_cases() {
        let d = identity_element_data(8);
        let r = solve_coefficients(&d, 5, 5).unwrap();
        assert_eq!(r.series, d.series(1).unwrap().truncate(5));
        assert!(r.determined.is_empty());
    }

    #[test]
    fn solver_small() {
        let d = identity_element_data(8).truncated_first(3);
        let r = solve_coefficients(&d, 3, 4).unwrap();
        assert_eq!(r.determined[&4], rat_c(4));
        assert!(r.underdetermined.is_empty());
    }
}
