//! Floating-point evaluation of `q`-expansions on the upper half-plane and
//! numerical checks of the Fake Monster denominator function on the slice
//! `v = (0, sigma, tau)`.
//!
//! There `Phi(v) = Delta(sigma) Delta(tau) (j(sigma) - j(tau))`. The vector
//! `(0, sigma, tau)` pairs as `(m, n)` does in `II_{1,1}`, with norm
//! `-2 m n`, so `(v, v) = -2 sigma tau` and
//! `2 v / (v, v) = (0, -1/tau, -1/sigma)` after swapping the two light-like
//! coordinates. The functional equation
//! `Phi(2v/(v,v)) = -((v,v)/2)^12 Phi(v)` therefore reads
//! `Phi(-1/tau, -1/sigma) = -(sigma tau)^12 Phi(sigma, tau)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactseries::QSeries;
use crate::modforms::{delta, j_minus_744};
use crate::report::{Discrepancy, IdentityReport, Location};

/// A value with an estimate of the truncation error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub error: f64,
}

/// `e^{2 pi i tau}`.
pub fn nome(tau: Complex64) -> Complex64 {
    (Complex64::i() * 2.0 * PI * tau).exp()
}

/// `sum_{d <= trunc} a_d q^d` at `q = e^{2 pi i tau}`. The error estimate
/// is the last included term times `r / (1 - r)`, `r = |q|`.
pub fn eval_qseries(f: &QSeries, tau: Complex64, trunc: i64) -> Result<Evaluation> {
    if tau.im <= 0.0 {
        return Err(Error::Domain(format!(
            "Im(tau) = {} is not positive",
            tau.im
        )));
    }
    let q = nome(tau);
    let r = q.norm();
    let hi = trunc.min(f.trunc());
    let mut sum = Complex64::new(0.0, 0.0);
    let mut last = 0.0;
    if !f.is_zero() && f.min_deg() <= hi {
        let mut qd = q.powi(f.min_deg() as i32);
        for d in f.min_deg()..=hi {
            let c = f.coeff(d).to_f64().unwrap_or(f64::INFINITY);
            let term = qd * c;
            sum += term;
            last = term.norm();
            qd *= q;
        }
    }
    let tail = if r < 1.0 {
        last * r / (1.0 - r)
    } else {
        f64::INFINITY
    };
    Ok(Evaluation {
        value: sum,
        error: tail,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SlicePoint {
    pub sigma: Complex64,
    pub tau: Complex64,
}

impl SlicePoint {
    pub fn new(sigma: Complex64, tau: Complex64) -> Result<Self> {
        if sigma.im <= 0.0 || tau.im <= 0.0 {
            return Err(Error::Domain(format!(
                "slice point ({sigma}, {tau}) needs positive imaginary parts"
            )));
        }
        Ok(SlicePoint { sigma, tau })
    }

    /// Both coordinates on the positive imaginary axis.
    pub fn imaginary(sigma: f64, tau: f64) -> Result<Self> {
        Self::new(Complex64::new(0.0, sigma), Complex64::new(0.0, tau))
    }

    /// `2v/(v, v)` on the slice: `(-1/tau, -1/sigma)`.
    pub fn image(&self) -> Result<Self> {
        let s = -self.tau.inv();
        let t = -self.sigma.inv();
        if s.im <= 0.0 || t.im <= 0.0 {
            return Err(Error::NotAdmissible(format!(
                "image of ({}, {}) leaves the upper half-plane",
                self.sigma, self.tau
            )));
        }
        Ok(SlicePoint { sigma: s, tau: t })
    }

    pub fn swapped(&self) -> Self {
        SlicePoint {
            sigma: self.tau,
            tau: self.sigma,
        }
    }

    pub fn shifted(&self, ds: f64, dt: f64) -> Self {
        SlicePoint {
            sigma: self.sigma + ds,
            tau: self.tau + dt,
        }
    }
}

/// `Delta` and `j - 744` expanded once, for repeated evaluation.
#[derive(Clone, Debug)]
pub struct PhiEvaluator {
    delta: QSeries,
    j: QSeries,
    trunc: i64,
}

impl PhiEvaluator {
    pub fn new(trunc: i64) -> Self {
        let trunc = trunc.max(1);
        PhiEvaluator {
            delta: delta(trunc),
            j: j_minus_744(trunc),
            trunc,
        }
    }

    /// Evaluator over caller-supplied expansions of `Delta` and `j - 744`.
    pub fn from_series(delta: QSeries, j: QSeries) -> Self {
        let trunc = delta.trunc().min(j.trunc()).max(1);
        PhiEvaluator { delta, j, trunc }
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// `Phi` with a bound on its truncation error.
    pub fn phi(&self, pt: &SlicePoint) -> Result<Evaluation> {
        let ds = eval_qseries(&self.delta, pt.sigma, self.trunc)?;
        let dt = eval_qseries(&self.delta, pt.tau, self.trunc)?;
        let js = eval_qseries(&self.j, pt.sigma, self.trunc)?;
        let jt = eval_qseries(&self.j, pt.tau, self.trunc)?;
        let jd = js.value - jt.value;
        let value = ds.value * dt.value * jd;
        let error = ds.error * (dt.value * jd).norm()
            + dt.error * (ds.value * jd).norm()
            + (js.error + jt.error) * (ds.value * dt.value).norm();
        Ok(Evaluation { value, error })
    }
}

/// `Delta(sigma) Delta(tau) (j(sigma) - j(tau))` from expansions to
/// `q^trunc`.
pub fn phi_slice(pt: &SlicePoint, trunc: i64) -> Result<Complex64> {
    Ok(PhiEvaluator::new(trunc).phi(pt)?.value)
}

/// `|a - b| / max(|a|, |b|)`, zero when both vanish.
pub fn relative_difference(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

/// One numerical comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericCheck {
    pub label: String,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub relative_difference: f64,
    pub tolerance: f64,
}

impl NumericCheck {
    fn new(label: String, lhs: Complex64, rhs: Complex64, tolerance: f64) -> Self {
        NumericCheck {
            relative_difference: relative_difference(lhs, rhs),
            label,
            lhs,
            rhs,
            tolerance,
        }
    }

    pub fn passed(&self) -> bool {
        self.relative_difference < self.tolerance
    }
}

fn fmt_c(z: Complex64) -> String {
    format!("{:.12e}{:+.12e}i", z.re, z.im)
}

/// Collects numerical checks into one report; the first failure becomes
/// the discrepancy, with the relative difference against the tolerance.
pub fn numeric_report(name: &str, trunc: i64, checks: &[NumericCheck]) -> IdentityReport {
    let mut r = IdentityReport::new(name).param("trunc", trunc);
    for c in checks {
        r = r
            .param(&format!("{}.lhs", c.label), fmt_c(c.lhs))
            .param(&format!("{}.rhs", c.label), fmt_c(c.rhs))
            .param(
                &format!("{}.rel", c.label),
                format!("{:.3e}", c.relative_difference),
            );
    }
    r.lhs_terms = checks.len();
    r.rhs_terms = checks.len();
    for c in checks {
        if !c.passed() {
            r.fail(Discrepancy {
                location: Location::Numeric(c.label.clone()),
                lhs: num_rational::BigRational::from_float(c.relative_difference)
                    .unwrap_or_default(),
                rhs: num_rational::BigRational::from_float(c.tolerance).unwrap_or_default(),
            });
        }
    }
    r
}

/// `Phi(-1/tau, -1/sigma)` against `-(sigma tau)^12 Phi(sigma, tau)`.
pub fn check_functional_equation(pt: &SlicePoint, trunc: i64, tol: f64) -> Result<NumericCheck> {
    let ev = PhiEvaluator::new(trunc);
    functional_equation_with(&ev, pt, tol)
}

pub fn functional_equation_with(
    ev: &PhiEvaluator,
    pt: &SlicePoint,
    tol: f64,
) -> Result<NumericCheck> {
    let img = pt.image()?;
    let lhs = ev.phi(&img)?.value;
    let factor = -(pt.sigma * pt.tau).powi(12);
    let rhs = factor * ev.phi(pt)?.value;
    Ok(NumericCheck::new(
        format!("fe({},{})", fmt_point(pt.sigma), fmt_point(pt.tau)),
        lhs,
        rhs,
        tol,
    ))
}

/// `Phi` under `sigma -> sigma + 1`, `tau -> tau + 1` and both.
pub fn check_periodicity(pt: &SlicePoint, trunc: i64, tol: f64) -> Result<Vec<NumericCheck>> {
    let ev = PhiEvaluator::new(trunc);
    periodicity_with(&ev, pt, tol)
}

pub fn periodicity_with(ev: &PhiEvaluator, pt: &SlicePoint, tol: f64) -> Result<Vec<NumericCheck>> {
    let base = ev.phi(pt)?.value;
    let mut out = Vec::new();
    for (name, ds, dt) in [
        ("sigma+1", 1.0, 0.0),
        ("tau+1", 0.0, 1.0),
        ("both+1", 1.0, 1.0),
    ] {
        let v = ev.phi(&pt.shifted(ds, dt))?.value;
        out.push(NumericCheck::new(
            format!("{name}({},{})", fmt_point(pt.sigma), fmt_point(pt.tau)),
            v,
            base,
            tol,
        ));
    }
    Ok(out)
}

/// `Phi(tau, sigma)` against `-Phi(sigma, tau)`.
pub fn check_antisymmetry(ev: &PhiEvaluator, pt: &SlicePoint, tol: f64) -> Result<NumericCheck> {
    let a = ev.phi(&pt.swapped())?.value;
    let b = -ev.phi(pt)?.value;
    Ok(NumericCheck::new(
        format!("swap({},{})", fmt_point(pt.sigma), fmt_point(pt.tau)),
        a,
        b,
        tol,
    ))
}

fn fmt_point(z: Complex64) -> String {
    if z.re == 0.0 {
        format!("{}i", z.im)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

/// The two default test points `(2i, 3i)` and `(i, i sqrt 2)`.
pub fn default_points() -> Vec<SlicePoint> {
    vec![
        SlicePoint::imaginary(2.0, 3.0).expect("valid"),
        SlicePoint::imaginary(1.0, 2f64.sqrt()).expect("valid"),
    ]
}
