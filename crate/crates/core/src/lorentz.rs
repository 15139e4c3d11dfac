//! The even self-dual Lorentzian lattice `II_{25,1}` and the Leech lattice
//! realised inside it.
//!
//! Vectors are stored with doubled coordinates `(2x_1, ..., 2x_25; 2x_0)`
//! so half-odd-integer points are exact. The norm is
//! `x_1^2 + ... + x_25^2 - x_0^2`.
//!
//! The Leech lattice is the set of lattice vectors with `x . rho = -1`
//! modulo multiples of the norm-zero Weyl vector
//! `rho = (0, 1, ..., 24; 70)`; every such coset has exactly one
//! representative of norm 2.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::time::Instant;

use num_rational::Ratio;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::report::{elapsed_ms, Discrepancy, IdentityReport, Location};

pub const DIM: usize = 26;
const TIME: usize = 25;

/// Exact rational with a wide integer type; inner products of Leech
/// representatives easily exceed `i64` once squared.
pub type Wide = Ratio<i128>;

/// A point of `R^{25,1}` at half-integer resolution.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    doubled: [i64; DIM],
}

impl LatticeVector {
    /// From doubled coordinates `(2x_1, ..., 2x_25, 2x_0)`. Returns `None`
    /// if the entries mix parities.
    pub fn from_doubled(doubled: [i64; DIM]) -> Option<Self> {
        let parity = doubled[0].rem_euclid(2);
        doubled
            .iter()
            .all(|d| d.rem_euclid(2) == parity)
            .then_some(LatticeVector { doubled })
    }

    /// From integer coordinates `(x_1, ..., x_25; x_0)`.
    pub fn from_integers(space: [i64; 25], time: i64) -> Self {
        let mut doubled = [0; DIM];
        for (d, x) in doubled.iter_mut().zip(space) {
            *d = 2 * x;
        }
        doubled[TIME] = 2 * time;
        LatticeVector { doubled }
    }

    pub fn zero() -> Self {
        LatticeVector { doubled: [0; DIM] }
    }

    /// `rho = (0, 1, 2, ..., 24; 70)`.
    pub fn rho() -> Self {
        let mut space = [0; 25];
        for (i, x) in space.iter_mut().enumerate() {
            *x = i as i64;
        }
        Self::from_integers(space, 70)
    }

    /// `w = (1/2, ..., 1/2; 1/2)`; membership is integrality against it.
    pub fn half_vector() -> Self {
        LatticeVector { doubled: [1; DIM] }
    }

    pub fn doubled(&self) -> &[i64; DIM] {
        &self.doubled
    }

    /// `true` when all coordinates are integers (rather than half-odd).
    pub fn is_integral(&self) -> bool {
        self.doubled[0].rem_euclid(2) == 0
    }

    /// Inner product `sum x_i y_i - x_0 y_0`.
    pub fn dot(&self, other: &Self) -> Wide {
        Ratio::new(self.doubled_dot(other), 4)
    }

    fn doubled_dot(&self, other: &Self) -> i128 {
        let space: i128 = self.doubled[..TIME]
            .iter()
            .zip(&other.doubled[..TIME])
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum();
        space - self.doubled[TIME] as i128 * other.doubled[TIME] as i128
    }

    pub fn norm(&self) -> Wide {
        self.dot(self)
    }

    /// Membership in `II_{25,1}`.
    pub fn is_member(&self) -> bool {
        let parity = self.doubled[0].rem_euclid(2);
        self.doubled.iter().all(|d| d.rem_euclid(2) == parity)
            && self.dot(&Self::half_vector()).is_integer()
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut doubled = self.doubled;
        for d in doubled.iter_mut() {
            *d *= k;
        }
        LatticeVector { doubled }
    }
}

impl Add for LatticeVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut doubled = self.doubled;
        for (d, r) in doubled.iter_mut().zip(rhs.doubled) {
            *d += r;
        }
        LatticeVector { doubled }
    }
}

impl Sub for LatticeVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LatticeVector {
    type Output = Self;
    fn neg(self) -> Self {
        self.scaled(-1)
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |d: i64| {
            if d % 2 == 0 {
                format!("{}", d / 2)
            } else {
                format!("{d}/2")
            }
        };
        write!(f, "(")?;
        for (i, &d) in self.doubled[..TIME].iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", show(d))?;
        }
        write!(f, ";{})", show(self.doubled[TIME]))
    }
}

/// A point of the Leech lattice, held as its norm-2 representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LeechClass {
    rep: LatticeVector,
}

impl LeechClass {
    pub fn rep(&self) -> &LatticeVector {
        &self.rep
    }
}

/// The norm-2 representative of the coset `x + Z rho`.
pub fn leech_representative(x: &LatticeVector) -> Result<LeechClass> {
    if !x.is_member() {
        return Err(Error::Domain(format!("{x} is not in II_25,1")));
    }
    let rho = LatticeVector::rho();
    if x.dot(&rho) != Wide::from_integer(-1) {
        return Err(Error::Domain(format!(
            "x . rho = {} but must be -1",
            x.dot(&rho)
        )));
    }
    // (x + k rho)^2 = x^2 - 2k
    let norm = x.norm().to_integer();
    let k = (norm - 2) / 2;
    let k = i64::try_from(k).map_err(|_| Error::OutOfRange("rho shift overflows i64".into()))?;
    Ok(LeechClass {
        rep: *x + rho.scaled(k),
    })
}

/// The reflection `x -> x - (r . x) r` in a norm-2 vector `r`.
pub fn reflect(r: &LatticeVector, x: &LatticeVector) -> Result<LatticeVector> {
    if r.norm() != Wide::from_integer(2) {
        return Err(Error::Domain(format!(
            "reflection vector has norm {}",
            r.norm()
        )));
    }
    if !r.is_member() || !x.is_member() {
        return Err(Error::Domain("reflection needs lattice vectors".into()));
    }
    let k = r.dot(x).to_integer();
    let k = i64::try_from(k).map_err(|_| Error::OutOfRange("pairing overflows i64".into()))?;
    Ok(*x - r.scaled(k))
}

/// Leech norm of the difference of two points: `4 - 2 a.b`.
pub fn class_difference_norm(a: &LeechClass, b: &LeechClass) -> i128 {
    (a.rep - b.rep).norm().to_integer()
}

/// A vector of `Lambda_Leech (+) II_{1,1}`, recorded by the Leech norm of
/// its first component and its `(m, n)` coordinates; `(m, n)` has norm
/// `-2mn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradedRoot {
    pub leech_norm: i64,
    pub m: i64,
    pub n: i64,
}

impl GradedRoot {
    pub fn norm(&self) -> i64 {
        self.leech_norm - 2 * self.m * self.n
    }

    /// Pairing with `rho = (0, 0, 1)`, which is `-m`.
    pub fn rho_pairing(&self) -> i64 {
        -self.m
    }

    /// `n rho`, the light-like simple roots.
    pub fn light_like(n: i64) -> Self {
        GradedRoot {
            leech_norm: 0,
            m: 0,
            n,
        }
    }
}

/// Certified real simple root `(lambda, 1, lambda^2/2 - 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimpleRootCert {
    pub root: GradedRoot,
    pub norm: i64,
    pub rho_pairing: i64,
}

/// The real simple root attached to a Leech vector of norm `lambda_norm`.
pub fn fm_simple_root(lambda_norm: i64) -> Result<SimpleRootCert> {
    if lambda_norm < 0 || lambda_norm % 2 != 0 {
        return Err(Error::Domain(format!(
            "Leech norm {lambda_norm} must be even and non-negative"
        )));
    }
    let root = GradedRoot {
        leech_norm: lambda_norm,
        m: 1,
        n: lambda_norm / 2 - 1,
    };
    let cert = SimpleRootCert {
        root,
        norm: root.norm(),
        rho_pairing: root.rho_pairing(),
    };
    debug_assert_eq!((cert.norm, cert.rho_pairing), (2, -1));
    Ok(cert)
}

/// A random lattice vector with doubled coordinates in `[-bound, bound]`
/// (one coordinate may be nudged by 2 to fix the half-vector pairing).
pub fn sample_member<R: Rng>(rng: &mut R, bound: i64) -> LatticeVector {
    let parity = rng.gen_range(0..2);
    let mut doubled = [0; DIM];
    for d in doubled.iter_mut() {
        *d = sample_with_parity(rng, bound, parity);
    }
    fix_half_pairing(&mut doubled);
    LatticeVector { doubled }
}

/// A random Leech point: randomise all coordinates but `x_2` in a box,
/// solve `x . rho = -1` for `x_2`, then pass to the norm-2 representative.
pub fn sample_leech_class<R: Rng>(rng: &mut R, bound: i64) -> LeechClass {
    let parity = rng.gen_range(0..2);
    let mut doubled = [0; DIM];
    for d in doubled.iter_mut() {
        *d = sample_with_parity(rng, bound, parity);
    }
    // In doubled coordinates x . rho = -1 reads
    // sum_i d_i (i - 1) - 70 d_0 = -2, and x_2 has weight 1.
    let rest: i64 = doubled[..TIME]
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != 1)
        .map(|(i, d)| d * i as i64)
        .sum();
    doubled[1] = -2 - rest + 70 * doubled[TIME];
    fix_half_pairing(&mut doubled);
    let x = LatticeVector { doubled };
    leech_representative(&x).expect("sampled vector satisfies the coset conditions")
}

fn sample_with_parity<R: Rng>(rng: &mut R, bound: i64, parity: i64) -> i64 {
    loop {
        let d = rng.gen_range(-bound..=bound);
        if d.rem_euclid(2) == parity {
            return d;
        }
    }
}

// x_1 pairs to zero with rho, so adjusting it keeps x . rho fixed.
fn fix_half_pairing(doubled: &mut [i64; DIM]) {
    let s: i64 = doubled[..TIME].iter().sum::<i64>() - doubled[TIME];
    if s.rem_euclid(4) != 0 {
        doubled[0] += 2;
    }
}

/// Sample sizes for [`lattice_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteSizes {
    pub members: usize,
    pub reflections: usize,
    pub leech_classes: usize,
    pub bound: i64,
    /// Box for the Leech samples; small boxes give nearby points.
    pub leech_bound: i64,
}

impl Default for SuiteSizes {
    fn default() -> Self {
        SuiteSizes {
            members: 100,
            reflections: 100,
            leech_classes: 50,
            bound: 6,
            leech_bound: 1,
        }
    }
}

/// Randomised checks of `II_25,1` and the Leech cosets: `rho^2 = 0`,
/// closure of the lattice under sums and negation, reflections preserving
/// inner products and membership, and distinct Leech points differing by
/// norm at least 4.
pub fn lattice_suite(seed: u64, sizes: SuiteSizes) -> IdentityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = IdentityReport::new("lattice")
        .param("seed", seed)
        .param("members", sizes.members)
        .param("reflections", sizes.reflections)
        .param("leech_classes", sizes.leech_classes);
    let fail = |report: &mut IdentityReport, what: String, got: Wide, want: Wide| {
        report.fail(Discrepancy {
            location: Location::Numeric(what),
            lhs: wide_to_big(got),
            rhs: wide_to_big(want),
        });
    };
    let zero = Wide::from_integer(0);
    let rho = LatticeVector::rho();
    if rho.norm() != zero {
        fail(&mut report, "rho^2".into(), rho.norm(), zero);
    }
    let t = Instant::now();
    for i in 0..sizes.members {
        let x = sample_member(&mut rng, sizes.bound);
        let y = sample_member(&mut rng, sizes.bound);
        let ok = x.is_member() && (x + y).is_member() && (x - y).is_member() && (-x).is_member();
        if !ok {
            fail(
                &mut report,
                format!("membership sample {i}"),
                zero,
                Wide::from_integer(1),
            );
        }
        if x.norm().numer() % 2 != 0 || !x.norm().is_integer() {
            fail(&mut report, format!("even norm sample {i}"), x.norm(), zero);
        }
    }
    report.time("members", elapsed_ms(t));
    let t = Instant::now();
    for i in 0..sizes.reflections {
        let r = *sample_leech_class(&mut rng, sizes.bound).rep();
        let x = sample_member(&mut rng, sizes.bound);
        let y = sample_member(&mut rng, sizes.bound);
        let (Ok(rx), Ok(ry)) = (reflect(&r, &x), reflect(&r, &y)) else {
            fail(
                &mut report,
                format!("reflection sample {i}"),
                zero,
                Wide::from_integer(1),
            );
            continue;
        };
        if !rx.is_member() || !ry.is_member() {
            fail(
                &mut report,
                format!("reflected membership {i}"),
                zero,
                Wide::from_integer(1),
            );
        }
        if rx.dot(&ry) != x.dot(&y) {
            fail(
                &mut report,
                format!("reflected pairing {i}"),
                rx.dot(&ry),
                x.dot(&y),
            );
        }
        if reflect(&r, &rx).ok() != Some(x) {
            fail(
                &mut report,
                format!("reflection involution {i}"),
                zero,
                Wide::from_integer(1),
            );
        }
    }
    report.time("reflections", elapsed_ms(t));
    let t = Instant::now();
    let mut classes: Vec<LeechClass> = Vec::new();
    let mut attempts = 0;
    while classes.len() < sizes.leech_classes && attempts < 100 * sizes.leech_classes.max(1) {
        attempts += 1;
        let c = sample_leech_class(&mut rng, sizes.leech_bound);
        if !classes.contains(&c) {
            classes.push(c);
        }
    }
    let mut min_norm: Option<i128> = None;
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            let n = class_difference_norm(a, b);
            min_norm = Some(min_norm.map_or(n, |m| m.min(n)));
            if n < 4 {
                fail(
                    &mut report,
                    format!("Leech difference {} - {}", a.rep(), b.rep()),
                    Wide::from_integer(n),
                    Wide::from_integer(4),
                );
            }
        }
    }
    report.time("leech", elapsed_ms(t));
    report = report.param("distinct_classes", classes.len());
    if let Some(m) = min_norm {
        report = report.param("min_difference_norm", m);
    }
    if classes.len() < sizes.leech_classes {
        report.fail(Discrepancy {
            location: Location::Numeric("distinct Leech classes".into()),
            lhs: crate::exactseries::rat(classes.len() as i64),
            rhs: crate::exactseries::rat(sizes.leech_classes as i64),
        });
    }
    report.lhs_terms = sizes.members + sizes.reflections;
    report.rhs_terms = classes.len();
    report
}

fn wide_to_big(x: Wide) -> num_rational::BigRational {
    num_rational::BigRational::new((*x.numer()).into(), (*x.denom()).into())
}
