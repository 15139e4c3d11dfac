//! Cartan matrices, Weyl groups and the (generalized) Weyl-Kac character
//! and denominator formulas, evaluated exactly in a truncated group ring.
//!
//! # Conventions
//!
//! Everything follows the lowest-weight convention: the Weyl vector
//! satisfies `(rho, a_i) = -(a_i, a_i)/2` for every simple root, the
//! denominator is `prod_{a > 0} (1 - e^a)^{m_a}`, and
//! `sum_w det(w) e^{w(rho) - rho}` expands in non-negative combinations of
//! simple roots. Compared with the usual highest-weight textbook
//! conventions, `rho` and all weights change sign: a lowest weight `lam`
//! here is the highest weight `-lam` there, and the dominance condition
//! reads `2 (lam, a_i) / (a_i, a_i) <= 0`.
//!
//! Vectors are written in the basis of simple roots, with the bilinear form
//! given by the (symmetric) Cartan matrix. Group-ring elements are truncated
//! by height, the sum of the simple-root coordinates.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactseries::{binomial, rat, rat_big, QSeries};
use crate::report::{Discrepancy, IdentityReport, Location};

pub type Vector = Vec<BigRational>;
pub type Matrix = Vec<Vec<BigRational>>;

fn zero_vec(n: usize) -> Vector {
    vec![BigRational::zero(); n]
}

fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = BigRational::one();
    v
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| unit_vec(n, i)).collect()
}

fn mat_vec(m: &Matrix, v: &[BigRational]) -> Vector {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                .collect()
        })
        .collect()
}

fn transpose(a: &Matrix) -> Matrix {
    let n = a.first().map_or(0, Vec::len);
    (0..n)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

fn vec_add(a: &[BigRational], b: &[BigRational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vec_sub(a: &[BigRational], b: &[BigRational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vec_scale(a: &[BigRational], c: &BigRational) -> Vector {
    a.iter().map(|x| x * c).collect()
}

/// `(a,b,...)` with rational entries.
pub fn show(v: &[BigRational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Sum of the coordinates.
pub fn height(v: &[BigRational]) -> BigRational {
    v.iter().sum()
}

/// Solves `a x = b` exactly; `None` if the system is singular.
fn solve(a: &Matrix, b: &[BigRational]) -> Option<Vector> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Basis of the kernel of `a`.
fn kernel(a: &Matrix) -> Vec<Vector> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &pv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pr = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zero_vec(cols);
            v[f] = BigRational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GcmKind {
    /// Kac-Moody: every diagonal entry positive.
    Classic,
    /// Generalized: diagonal entries may be zero or negative.
    Generalized,
}

/// Symmetric Cartan matrix `a_ij = (a_i, a_j)` of simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gcm {
    a: Matrix,
    kind: GcmKind,
}

impl Gcm {
    /// Rejects non-square or non-symmetric input.
    pub fn new(a: Matrix, kind: GcmKind) -> Result<Self> {
        let n = a.len();
        if let Some(i) = a.iter().position(|r| r.len() != n) {
            return Err(Error::Domain(format!(
                "row {i} has {} entries, expected {n}",
                a[i].len()
            )));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if a[i][j] != a[j][i] {
                    return Err(Error::NonSymmetric {
                        i,
                        j,
                        aij: a[i][j].to_string(),
                        aji: a[j][i].to_string(),
                    });
                }
            }
        }
        Ok(Gcm { a, kind })
    }

    pub fn from_ints(rows: &[&[i64]], kind: GcmKind) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
            kind,
        )
    }

    /// Plain-text matrix: one row per line, entries `p` or `p/q`, `#`
    /// starts a comment.
    pub fn parse(text: &str, kind: GcmKind) -> Result<Self> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let row = body
                .split_whitespace()
                .map(|tok| {
                    BigRational::from_str(tok).map_err(|_| Error::Parse {
                        line: lineno + 1,
                        msg: format!("bad rational {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse {
                line: 0,
                msg: "empty matrix".into(),
            });
        }
        Self::new(rows, kind)
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn kind(&self) -> GcmKind {
        self.kind
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.a[i][j]
    }

    pub fn matrix(&self) -> &Matrix {
        &self.a
    }

    /// `(u, v) = u^T A v`.
    pub fn form(&self, u: &[BigRational], v: &[BigRational]) -> BigRational {
        u.iter().zip(mat_vec(&self.a, v)).map(|(x, y)| x * y).sum()
    }

    /// `(v, a_i)`.
    pub fn pair_simple(&self, v: &[BigRational], i: usize) -> BigRational {
        self.a[i].iter().zip(v).map(|(x, y)| x * y).sum()
    }

    pub fn is_real(&self, i: usize) -> bool {
        self.a[i][i].is_positive()
    }

    /// Indices of simple roots of positive norm.
    pub fn real_indices(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_real(i)).collect()
    }

    fn with_kind(&self, kind: GcmKind) -> Gcm {
        Gcm {
            a: self.a.clone(),
            kind,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionCheck {
    pub name: &'static str,
    pub holds: bool,
    /// Index pairs `(i, j)` (or `(i, i)`) where the condition fails.
    pub violations: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub kind: GcmKind,
    pub conditions: Vec<ConditionCheck>,
    pub valid: bool,
    pub classic_valid: bool,
    pub generalized_valid: bool,
    /// Pairs `i < j` with `a_ij = 0`, for which `[e_i, e_j] = [f_i, f_j] = 0`
    /// is imposed in the generalized setting.
    pub commuting_pairs: Vec<(usize, usize)>,
}

/// Checks the Kac-Moody conditions (positive diagonal, symmetry,
/// non-positive off-diagonal, `2 a_ij / a_ii` integral) and their
/// generalized relaxation.
pub fn validate(gcm: &Gcm) -> ValidationReport {
    let n = gcm.rank();
    let a = &gcm.a;
    let mut km1 = Vec::new();
    let mut km3 = Vec::new();
    let mut km4 = Vec::new();
    let mut km4_real = Vec::new();
    let mut commuting = Vec::new();
    let two = rat(2);
    for i in 0..n {
        if !a[i][i].is_positive() {
            km1.push((i, i));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if a[i][j].is_positive() {
                km3.push((i, j));
            }
            if i < j && a[i][j].is_zero() {
                commuting.push((i, j));
            }
            let integral = !a[i][i].is_zero() && (&two * &a[i][j] / &a[i][i]).is_integer();
            if !integral {
                km4.push((i, j));
                if a[i][i].is_positive() {
                    km4_real.push((i, j));
                }
            }
        }
    }
    let check = |name, v: Vec<(usize, usize)>| ConditionCheck {
        name,
        holds: v.is_empty(),
        violations: v,
    };
    let classic_valid = km1.is_empty() && km3.is_empty() && km4.is_empty();
    let generalized_valid = km3.is_empty() && km4_real.is_empty();
    let conditions = match gcm.kind {
        GcmKind::Classic => vec![
            check("positive diagonal", km1),
            check("symmetric", vec![]),
            check("non-positive off-diagonal", km3),
            check("2 a_ij / a_ii integral", km4),
        ],
        GcmKind::Generalized => vec![
            check("symmetric", vec![]),
            check("non-positive off-diagonal", km3),
            check("2 a_ij / a_ii integral when a_ii > 0", km4_real),
        ],
    };
    ValidationReport {
        kind: gcm.kind,
        conditions,
        valid: match gcm.kind {
            GcmKind::Classic => classic_valid,
            GcmKind::Generalized => generalized_valid,
        },
        classic_valid,
        generalized_valid,
        commuting_pairs: if gcm.kind == GcmKind::Generalized {
            commuting
        } else {
            Vec::new()
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Finite,
    Affine,
    Indefinite,
}

/// Positive definite, positive semi-definite or neither, by exact
/// symmetric elimination.
pub fn classify(gcm: &Gcm) -> Classification {
    let n = gcm.rank();
    let mut m = gcm.a.clone();
    let mut singular = false;
    for k in 0..n {
        let p = m[k][k].clone();
        if p.is_negative() {
            return Classification::Indefinite;
        }
        if p.is_zero() {
            if (k + 1..n).any(|j| !m[k][j].is_zero()) {
                return Classification::Indefinite;
            }
            singular = true;
            continue;
        }
        for i in (k + 1)..n {
            let f = &m[i][k] / &p;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let d = &f * &m[k][j];
                m[i][j] -= d;
            }
        }
    }
    if singular {
        Classification::Affine
    } else {
        Classification::Finite
    }
}

/// Matrix of the simple reflection `s_i` on simple-root coordinates.
pub fn simple_reflection(gcm: &Gcm, i: usize) -> Matrix {
    let n = gcm.rank();
    let mut s = identity(n);
    let f = rat(2) / &gcm.a[i][i];
    for (j, x) in s[i].iter_mut().enumerate() {
        *x -= &f * &gcm.a[i][j];
    }
    s
}

fn reflect_vec(gcm: &Gcm, i: usize, v: &[BigRational]) -> Vector {
    let c = rat(2) * gcm.pair_simple(v, i) / &gcm.a[i][i];
    let mut out = v.to_vec();
    out[i] -= c;
    out
}

/// An element of the Weyl group generated by the real simple reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// `w = s_{word[0]} s_{word[1]} ...`, a shortest word.
    pub word: Vec<usize>,
    /// Linear action on simple-root coordinates.
    pub action: Matrix,
    /// `w(rho) - rho`, in simple-root coordinates.
    pub rho_shift: Vector,
    pub det: i32,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn apply(&self, v: &[BigRational]) -> Vector {
        mat_vec(&self.action, v)
    }

    /// `w(rho + v) - rho`.
    pub fn apply_shifted(&self, v: &[BigRational]) -> Vector {
        vec_add(&self.rho_shift, &self.apply(v))
    }
}

fn weyl_bfs(gcm: &Gcm, max_len: Option<usize>, cap: usize) -> Vec<WeylElement> {
    let n = gcm.rank();
    let gens: Vec<(usize, Matrix)> = gcm
        .real_indices()
        .into_iter()
        .map(|i| (i, simple_reflection(gcm, i)))
        .collect();
    let id = WeylElement {
        word: vec![],
        action: identity(n),
        rho_shift: zero_vec(n),
        det: 1,
    };
    let mut seen: HashSet<(Matrix, Vector)> = HashSet::new();
    seen.insert((id.action.clone(), id.rho_shift.clone()));
    let mut out = vec![id.clone()];
    let mut frontier = vec![id];
    let mut len = 0;
    while !frontier.is_empty() && max_len.is_none_or(|m| len < m) && out.len() < cap {
        len += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for (i, s) in &gens {
                let action = mat_mul(s, &w.action);
                // s_i(rho + shift) - rho = a_i + s_i(shift)
                let mut rho_shift = mat_vec(s, &w.rho_shift);
                rho_shift[*i] += BigRational::one();
                let key = (action, rho_shift);
                if seen.contains(&key) {
                    continue;
                }
                seen.insert(key.clone());
                let mut word = vec![*i];
                word.extend(&w.word);
                let e = WeylElement {
                    word,
                    action: key.0,
                    rho_shift: key.1,
                    det: -w.det,
                };
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// All Weyl group elements of length at most `max_len`, deduplicated by
/// their action.
pub fn weyl_enumerate(gcm: &Gcm, max_len: usize) -> Vec<WeylElement> {
    weyl_bfs(gcm, Some(max_len), usize::MAX)
}

const FINITE_WEYL_CAP: usize = 200_000;

/// The whole Weyl group of a finite-type matrix.
pub fn weyl_group_finite(gcm: &Gcm) -> Result<Vec<WeylElement>> {
    if classify(gcm) != Classification::Finite {
        return Err(Error::Domain("Weyl group is infinite".into()));
    }
    Ok(weyl_bfs(gcm, None, FINITE_WEYL_CAP))
}

/// Positive roots of a finite-type matrix, ordered by height. All have
/// multiplicity one.
pub fn finite_positive_roots(gcm: &Gcm) -> Result<Vec<Vector>> {
    if classify(gcm) != Classification::Finite {
        return Err(Error::Domain(
            "positive roots are only enumerated for finite type".into(),
        ));
    }
    let n = gcm.rank();
    let mut seen: HashSet<Vector> = HashSet::new();
    let mut queue: VecDeque<Vector> = (0..n).map(|i| unit_vec(n, i)).collect();
    for v in &queue {
        seen.insert(v.clone());
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            let w = reflect_vec(gcm, i, &v);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let mut pos: Vec<Vector> = seen
        .into_iter()
        .filter(|v| v.iter().all(|x| !x.is_negative()))
        .collect();
    pos.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
    Ok(pos)
}

/// Weyl vector: `(rho, a_i) = -(a_i, a_i)/2`. Fails for singular matrices;
/// see [`weyl_vector_affine`].
pub fn weyl_vector(gcm: &Gcm) -> Result<Vector> {
    let b: Vector = (0..gcm.rank()).map(|i| -&gcm.a[i][i] / rat(2)).collect();
    solve(&gcm.a, &b)
        .ok_or_else(|| Error::NeedsAffineConvention("Cartan matrix is singular".into()))
}

/// Weyl vector of an affine matrix in the space extended by a vector `d`
/// with `(d, a_0) = 1`, `(d, a_i) = 0` otherwise, `(d, d) = 0`, where `a_0`
/// is the first node with nonzero null-vector coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWeylVector {
    /// Root part, normalised so the `a_0` coordinate is zero.
    pub root_part: Vector,
    pub d_coefficient: BigRational,
    pub d_node: usize,
}

pub fn weyl_vector_affine(gcm: &Gcm) -> Result<AffineWeylVector> {
    if classify(gcm) != Classification::Affine {
        return Err(Error::NeedsAffineConvention("matrix is not affine".into()));
    }
    let ker = kernel(&gcm.a);
    if ker.len() != 1 {
        return Err(Error::NeedsAffineConvention(format!(
            "null space has dimension {}",
            ker.len()
        )));
    }
    let delta = &ker[0];
    let node = delta
        .iter()
        .position(|x| !x.is_zero())
        .expect("kernel vector is nonzero");
    let n = gcm.rank();
    let b: Vector = (0..n).map(|i| -&gcm.a[i][i] / rat(2)).collect();
    // delta^T A x = 0, so pairing the equations with delta fixes y.
    let y = delta
        .iter()
        .zip(&b)
        .map(|(d, x)| d * x)
        .sum::<BigRational>()
        / &delta[node];
    let mut rhs = b;
    rhs[node] -= &y;
    // Drop the a_0 unknown (set to zero) and the a_0 equation (implied).
    let idx: Vec<usize> = (0..n).filter(|&i| i != node).collect();
    let sub: Matrix = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| gcm.a[i][j].clone()).collect())
        .collect();
    let sub_b: Vector = idx.iter().map(|&i| rhs[i].clone()).collect();
    let x = solve(&sub, &sub_b)
        .ok_or_else(|| Error::NeedsAffineConvention("reduced system is singular".into()))?;
    let mut root_part = zero_vec(n);
    for (k, &i) in idx.iter().enumerate() {
        root_part[i] = x[k].clone();
    }
    Ok(AffineWeylVector {
        root_part,
        d_coefficient: y,
        d_node: node,
    })
}

/// Finitely supported `sum c_v e^v`, `v` in simple-root coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Vector, BigRational>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(zero_vec(rank), BigRational::one())
    }

    pub fn monomial(v: Vector, c: BigRational) -> Self {
        let mut g = Self::zero();
        g.add_term(v, c);
        g
    }

    pub fn add_term(&mut self, v: Vector, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(v).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            let key: Vec<_> = self
                .terms
                .iter()
                .find(|(_, x)| x.is_zero())
                .map(|(k, _)| k.clone())
                .into_iter()
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn coeff(&self, v: &[BigRational]) -> BigRational {
        self.terms.get(v).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vector, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients (the dimension, for a character).
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(v.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (v, x) in &self.terms {
            out.add_term(v.clone(), x * c);
        }
        out
    }

    /// `e^v * self`.
    pub fn shift(&self, v: &[BigRational]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (vec_add(k, v), c.clone()))
                .collect(),
        }
    }

    /// Product, keeping only exponents of height at most `max_height`.
    pub fn mul_truncated(&self, other: &Self, max_height: Option<&BigRational>) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let w = vec_add(u, v);
                if max_height.is_some_and(|h| &height(&w) > h) {
                    continue;
                }
                out.add_term(w, a * b);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, None)
    }

    pub fn truncate_height(&self, max_height: &BigRational) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(v, _)| &height(v) <= max_height)
                .map(|(v, c)| (v.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `e^{a_i} -> q^{degrees[i]}`. Exponents must be integral.
    pub fn specialize(&self, degrees: &[i64], trunc: i64) -> Result<QSeries> {
        let mut map: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (v, c) in &self.terms {
            let mut d = BigRational::zero();
            for (x, &k) in v.iter().zip(degrees) {
                d += x * rat(k);
            }
            if !d.is_integer() {
                return Err(Error::Domain(format!("exponent {d} is not integral")));
            }
            let d = d
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::OutOfRange("specialised degree overflows".into()))?;
            if d <= trunc {
                *map.entry(d).or_insert_with(BigRational::zero) += c;
            }
        }
        Ok(QSeries::from_map(&map, trunc))
    }
}

fn first_group_ring_difference(
    lhs: &GroupRingElement,
    rhs: &GroupRingElement,
) -> Option<Discrepancy> {
    let mut keys: Vec<&Vector> = lhs.terms.keys().chain(rhs.terms.keys()).collect();
    keys.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
    keys.dedup();
    keys.into_iter().find_map(|k| {
        let (x, y) = (lhs.coeff(k), rhs.coeff(k));
        (x != y).then(|| Discrepancy {
            location: Location::Weight(k.clone()),
            lhs: x,
            rhs: y,
        })
    })
}

/// `prod (1 - e^a)^{m_a}` over the given roots, truncated by height.
pub fn root_product(roots: &[(Vector, BigInt)], cutoff: i64) -> GroupRingElement {
    let rank = roots.first().map_or(0, |(v, _)| v.len());
    let cap = rat(cutoff);
    let mut acc = GroupRingElement::one(rank);
    for (root, m) in roots {
        let h = height(root);
        if h > cap || m.is_zero() {
            continue;
        }
        let mut factor = GroupRingElement::zero();
        let mut j: u64 = 0;
        loop {
            let v = vec_scale(root, &rat(j as i64));
            if height(&v) > cap {
                break;
            }
            let b = binomial(m, j);
            if b.is_zero() && j > 0 {
                break;
            }
            let b = if j % 2 == 1 { -b } else { b };
            factor.add_term(v, rat_big(b));
            j += 1;
            if !h.is_positive() {
                break;
            }
        }
        acc = acc.mul_truncated(&factor, Some(&cap));
    }
    acc
}

/// `sum_w det(w) e^{w(rho) - rho}` over the given elements, truncated.
pub fn weyl_side(elements: &[WeylElement], cutoff: i64) -> GroupRingElement {
    let cap = rat(cutoff);
    let mut out = GroupRingElement::zero();
    for w in elements {
        if height(&w.rho_shift) <= cap {
            out.add_term(w.rho_shift.clone(), rat(w.det as i64));
        }
    }
    out
}

/// `true` for `c [[2, -2], [-2, 2]]`, the affine `A_1` matrix.
pub fn is_affine_a1(gcm: &Gcm) -> bool {
    let a = &gcm.a;
    gcm.rank() == 2 && a[0][0].is_positive() && a[0][0] == a[1][1] && a[0][1] == -&a[0][0]
}

/// Positive roots of affine `A_1` with height at most `cutoff`; the
/// imaginary roots `k delta` carry multiplicity one.
pub fn affine_a1_positive_roots(cutoff: i64) -> Vec<(Vector, BigInt)> {
    let mut out = Vec::new();
    let v = |a: i64, b: i64| vec![rat(a), rat(b)];
    for k in 0..=cutoff {
        if 2 * k < cutoff {
            out.push((v(k, k + 1), BigInt::one()));
            out.push((v(k + 1, k), BigInt::one()));
        }
        if k >= 1 && 2 * k <= cutoff {
            out.push((v(k, k), BigInt::one()));
        }
    }
    out.sort_by(|a, b| height(&a.0).cmp(&height(&b.0)).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Outcome of a denominator check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenominatorReport {
    pub cutoff: i64,
    pub weyl_elements: usize,
    pub factors: usize,
    pub lhs: GroupRingElement,
    pub rhs: GroupRingElement,
    pub equal: bool,
    pub first_discrepancy: Option<Discrepancy>,
}

impl DenominatorReport {
    fn build(
        cutoff: i64,
        weyl_elements: usize,
        factors: usize,
        lhs: GroupRingElement,
        rhs: GroupRingElement,
    ) -> Self {
        let first_discrepancy = first_group_ring_difference(&lhs, &rhs);
        DenominatorReport {
            cutoff,
            weyl_elements,
            factors,
            equal: first_discrepancy.is_none(),
            first_discrepancy,
            lhs,
            rhs,
        }
    }

    pub fn to_identity_report(&self, name: &str) -> IdentityReport {
        let mut r = IdentityReport::new(name)
            .param("cutoff", self.cutoff)
            .param("weyl_terms", self.weyl_elements)
            .param("root_factors", self.factors);
        r.lhs_terms = self.lhs.len();
        r.rhs_terms = self.rhs.len();
        r.equal = self.equal;
        r.first_discrepancy = self.first_discrepancy.clone();
        r
    }
}

/// Verifies `sum_w det(w) e^{w(rho) - rho} = prod_{a>0} (1 - e^a)` up to
/// height `cutoff`, for finite types and affine `A_1`.
pub fn denominator_check(gcm: &Gcm, cutoff: i64) -> Result<DenominatorReport> {
    match classify(gcm) {
        Classification::Finite => {
            let roots: Vec<(Vector, BigInt)> = finite_positive_roots(gcm)?
                .into_iter()
                .map(|r| (r, BigInt::one()))
                .collect();
            denominator_check_with(gcm, cutoff, &roots)
        }
        Classification::Affine if is_affine_a1(gcm) => {
            denominator_check_with(gcm, cutoff, &affine_a1_positive_roots(cutoff))
        }
        other => Err(Error::NotImplemented(format!(
            "denominator check for {other:?} type"
        ))),
    }
}

/// Denominator check against explicitly supplied positive roots and
/// multiplicities.
pub fn denominator_check_with(
    gcm: &Gcm,
    cutoff: i64,
    roots: &[(Vector, BigInt)],
) -> Result<DenominatorReport> {
    let elements = match classify(gcm) {
        Classification::Finite => weyl_group_finite(gcm)?,
        // Height of w(rho) - rho is at least the length of w.
        _ => weyl_enumerate(gcm, cutoff.max(0) as usize),
    };
    let lhs = weyl_side(&elements, cutoff);
    let rhs = root_product(roots, cutoff);
    let used = roots
        .iter()
        .filter(|(r, _)| height(r) <= rat(cutoff))
        .count();
    Ok(DenominatorReport::build(
        cutoff,
        elements
            .iter()
            .filter(|w| height(&w.rho_shift) <= rat(cutoff))
            .count(),
        used,
        lhs,
        rhs,
    ))
}

/// `2 (v, a_i) / (a_i, a_i)` for every simple root.
pub fn dynkin_labels(gcm: &Gcm, v: &[BigRational]) -> Vector {
    (0..gcm.rank())
        .map(|i| rat(2) * gcm.pair_simple(v, i) / &gcm.a[i][i])
        .collect()
}

/// Lowest-weight fundamental weight: labels `-1` at `i`, `0` elsewhere.
pub fn fundamental_weight(gcm: &Gcm, i: usize) -> Result<Vector> {
    let mut b = zero_vec(gcm.rank());
    b[i] = -&gcm.a[i][i] / rat(2);
    solve(&gcm.a, &b).ok_or_else(|| Error::Domain("Cartan matrix is singular".into()))
}

/// `-sum labels[i] * omega_i`: a dominant lowest weight for non-negative
/// labels.
pub fn weight_from_labels(gcm: &Gcm, labels: &[i64]) -> Result<Vector> {
    let mut v = zero_vec(gcm.rank());
    for (i, &l) in labels.iter().enumerate() {
        v = vec_add(&v, &vec_scale(&fundamental_weight(gcm, i)?, &rat(l)));
    }
    Ok(v)
}

fn check_dominant(gcm: &Gcm, lam: &[BigRational]) -> Result<()> {
    for (i, l) in dynkin_labels(gcm, lam).iter().enumerate() {
        if !l.is_integer() || l.is_positive() {
            return Err(Error::Domain(format!(
                "weight is not dominant: label {l} at node {i}"
            )));
        }
    }
    Ok(())
}

fn character_numerator(gcm: &Gcm, lam: &[BigRational]) -> Result<(GroupRingElement, Vector)> {
    let rho = weyl_vector(gcm)?;
    let rl = vec_add(&rho, lam);
    let mut num = GroupRingElement::zero();
    for w in weyl_group_finite(gcm)? {
        // w(rho + lam) - rho - lam
        let v = vec_sub(&w.apply(&rl), &rl);
        num.add_term(v, rat(w.det as i64));
    }
    Ok((num, rho))
}

/// Height large enough for [`character`] to return the full character.
pub fn character_cutoff(gcm: &Gcm, lam: &[BigRational]) -> Result<i64> {
    let (num, _) = character_numerator(gcm, lam)?;
    Ok(num
        .terms()
        .map(|(v, _)| height(v).ceil().to_integer().to_i64().unwrap_or(i64::MAX))
        .max()
        .unwrap_or(0))
}

/// Character of the irreducible module with dominant lowest weight `lam`:
/// `sum_w det(w) w(e^{rho + lam}) / (e^rho prod (1 - e^a))`, computed by
/// exact division in the group ring. Weights `lam + v` with
/// `height(v) > cutoff` are dropped; if that loses terms the division
/// leaves a remainder and an error is returned.
pub fn character(gcm: &Gcm, lam: &[BigRational], cutoff: i64) -> Result<GroupRingElement> {
    if classify(gcm) != Classification::Finite {
        return Err(Error::NotImplemented(
            "characters are computed for finite type only".into(),
        ));
    }
    check_dominant(gcm, lam)?;
    let (num, _) = character_numerator(gcm, lam)?;
    let roots = finite_positive_roots(gcm)?;
    let cap = rat(cutoff);
    // 1 / prod (1 - e^a) = prod sum_k e^{k a}
    let mut inv = GroupRingElement::one(gcm.rank());
    for r in &roots {
        let mut geo = GroupRingElement::zero();
        let mut k = 0;
        loop {
            let v = vec_scale(r, &rat(k));
            if height(&v) > cap {
                break;
            }
            geo.add_term(v, BigRational::one());
            k += 1;
        }
        inv = inv.mul_truncated(&geo, Some(&cap));
    }
    let chi = num.mul_truncated(&inv, Some(&cap));
    let denom = root_product(
        &roots
            .iter()
            .map(|r| (r.clone(), BigInt::one()))
            .collect::<Vec<_>>(),
        i64::MAX / 4,
    );
    if chi.mul(&denom) != num {
        return Err(Error::Remainder(format!(
            "character does not divide exactly at height cutoff {cutoff}"
        )));
    }
    Ok(chi.shift(lam))
}

/// Dimension of the irreducible module with dominant lowest weight `lam`,
/// by Freudenthal's recursion on weight multiplicities. Independent of the
/// group-ring character computation.
pub fn freudenthal_dimension(gcm: &Gcm, lam: &[BigRational]) -> Result<BigInt> {
    if classify(gcm) != Classification::Finite {
        return Err(Error::NotImplemented("finite type only".into()));
    }
    check_dominant(gcm, lam)?;
    let n = gcm.rank();
    // Highest-weight picture: top = -lam, rho_s = -rho.
    let top: Vector = lam.iter().map(|x| -x).collect();
    let rho_s: Vector = weyl_vector(gcm)?.iter().map(|x| -x).collect();
    let roots = finite_positive_roots(gcm)?;
    let depth_max = weyl_group_finite(gcm)?
        .iter()
        .map(|w| height(&vec_sub(&top, &w.apply(&top))))
        .max()
        .unwrap_or_else(BigRational::zero)
        .to_integer()
        .to_i64()
        .unwrap_or(0);
    let tr = vec_add(&top, &rho_s);
    let norm_top = gcm.form(&tr, &tr);

    let mut mult: HashMap<Vec<i64>, BigRational> = HashMap::new();
    mult.insert(vec![0; n], BigRational::one());
    let mut total = BigRational::one();
    for depth in 1..=depth_max {
        for x in compositions(n, depth) {
            let mu = vec_sub(&top, &x.iter().map(|&k| rat(k)).collect::<Vector>());
            let mr = vec_add(&mu, &rho_s);
            let den = &norm_top - gcm.form(&mr, &mr);
            if den.is_zero() {
                continue;
            }
            let mut num = BigRational::zero();
            for a in &roots {
                let ai: Vec<i64> = a.iter().map(|v| v.to_integer().to_i64().unwrap()).collect();
                let mut k = 1;
                loop {
                    let y: Vec<i64> = x.iter().zip(&ai).map(|(xi, a)| xi - k * a).collect();
                    if y.iter().any(|&v| v < 0) {
                        break;
                    }
                    if let Some(m) = mult.get(&y) {
                        let shifted = vec_add(&mu, &vec_scale(a, &rat(k)));
                        num += m * gcm.form(&shifted, a);
                    }
                    k += 1;
                }
            }
            let m = rat(2) * num / den;
            if !m.is_zero() {
                total += &m;
                mult.insert(x, m);
            }
        }
    }
    if !total.is_integer() {
        return Err(Error::NonInteger {
            at: "Freudenthal dimension".into(),
            value: total.to_string(),
        });
    }
    Ok(total.to_integer())
}

/// All non-negative integer vectors of length `n` summing to `total`.
fn compositions(n: usize, total: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(n - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// A simple root of non-positive norm with the number of simple roots
/// sharing that vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImaginarySimple {
    pub root: Vector,
    pub norm: BigRational,
    pub multiplicity: u32,
}

/// `sum_mu eps_lam(mu) e^mu`: `mu` runs over sums of pairwise orthogonal
/// imaginary simple roots, all orthogonal to `lam`, each simple root used
/// at most once (so a vector of multiplicity `m` can be picked `j` times in
/// `binom(m, j)` ways, and more than once only when it has norm zero).
/// Each choice of `k` roots contributes `(-1)^k`.
pub fn epsilon_series(
    form: &Gcm,
    simples: &[ImaginarySimple],
    lam: &[BigRational],
    cutoff: i64,
) -> Result<GroupRingElement> {
    for s in simples {
        if s.norm.is_positive() {
            return Err(Error::Domain(format!(
                "simple root with norm {} is not imaginary",
                s.norm
            )));
        }
        if form.form(&s.root, &s.root) != s.norm {
            return Err(Error::Domain(format!(
                "stated norm {} disagrees with the bilinear form",
                s.norm
            )));
        }
    }
    let usable: Vec<&ImaginarySimple> = simples
        .iter()
        .filter(|s| s.multiplicity > 0 && form.form(&s.root, lam).is_zero())
        .collect();
    let rank = form.rank();
    let cap = rat(cutoff);
    let mut out = GroupRingElement::zero();
    let mut chosen: Vec<usize> = Vec::new();
    eps_rec(
        form,
        &usable,
        0,
        &mut chosen,
        zero_vec(rank),
        BigInt::one(),
        &cap,
        &mut out,
    );
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn eps_rec(
    form: &Gcm,
    roots: &[&ImaginarySimple],
    idx: usize,
    chosen: &mut Vec<usize>,
    mu: Vector,
    coeff: BigInt,
    cap: &BigRational,
    out: &mut GroupRingElement,
) {
    if idx == roots.len() {
        out.add_term(mu, rat_big(coeff));
        return;
    }
    let r = roots[idx];
    eps_rec(
        form,
        roots,
        idx + 1,
        chosen,
        mu.clone(),
        coeff.clone(),
        cap,
        out,
    );
    let compatible = chosen
        .iter()
        .all(|&c| form.form(&roots[c].root, &r.root).is_zero());
    if !compatible {
        return;
    }
    let max_uses = if r.norm.is_zero() { r.multiplicity } else { 1 };
    chosen.push(idx);
    for j in 1..=max_uses {
        let v = vec_add(&mu, &vec_scale(&r.root, &rat(j as i64)));
        if &height(&v) > cap {
            break;
        }
        let mut c = &coeff * binomial(&BigInt::from(r.multiplicity), j as u64);
        if j % 2 == 1 {
            c = -c;
        }
        eps_rec(form, roots, idx + 1, chosen, v, c, cap, out);
    }
    chosen.pop();
}

/// A generalized Kac-Moody toy model: its Cartan matrix over the simple
/// roots (the coordinate basis), how many simple roots share each vector,
/// and explicitly supplied positive roots with multiplicities.
#[derive(Clone, Debug)]
pub struct ToyGkm {
    pub gcm: Gcm,
    pub slots: Vec<u32>,
    pub positive_roots: Vec<(Vector, BigInt)>,
}

/// Verifies
/// `sum_w det(w) w(e^rho sum_mu eps(mu) e^mu) / e^rho = prod (1 - e^a)^{m_a}`
/// up to height `cutoff`.
pub fn gkm_denominator_check_toy(toy: &ToyGkm, cutoff: i64) -> Result<DenominatorReport> {
    let gcm = toy.gcm.with_kind(GcmKind::Generalized);
    let v = validate(&gcm);
    if !v.generalized_valid {
        return Err(Error::Domain("not a generalized Cartan matrix".into()));
    }
    if toy.slots.len() != gcm.rank() {
        return Err(Error::Domain(
            "one slot count per simple root is needed".into(),
        ));
    }
    let n = gcm.rank();
    for i in gcm.real_indices() {
        if toy.slots[i] != 1 {
            return Err(Error::NotImplemented("repeated real simple roots".into()));
        }
    }
    let simples: Vec<ImaginarySimple> = (0..n)
        .filter(|&i| !gcm.is_real(i))
        .map(|i| ImaginarySimple {
            root: unit_vec(n, i),
            norm: gcm.a[i][i].clone(),
            multiplicity: toy.slots[i],
        })
        .collect();
    let eps = epsilon_series(&gcm, &simples, &zero_vec(n), cutoff)?;
    let elements = weyl_enumerate(&gcm, cutoff.max(0) as usize);
    let cap = rat(cutoff);
    let mut lhs = GroupRingElement::zero();
    for w in &elements {
        for (mu, c) in eps.terms() {
            let v = w.apply_shifted(mu);
            if height(&v) <= cap {
                lhs.add_term(v, c * rat(w.det as i64));
            }
        }
    }
    let rhs = root_product(&toy.positive_roots, cutoff);
    let used = toy
        .positive_roots
        .iter()
        .filter(|(r, _)| height(r) <= cap)
        .count();
    let weyl_used = elements
        .iter()
        .filter(|w| height(&w.rho_shift) <= cap)
        .count();
    Ok(DenominatorReport::build(cutoff, weyl_used, used, lhs, rhs))
}

/// The set of exponents appearing in a group-ring element.
pub fn support(g: &GroupRingElement) -> BTreeSet<Vector> {
    g.terms().map(|(v, _)| v.clone()).collect()
}

/// Checks `M^T A M = A` for a Weyl element.
pub fn preserves_form(gcm: &Gcm, w: &WeylElement) -> bool {
    mat_mul(&mat_mul(&transpose(&w.action), &gcm.a), &w.action) == gcm.a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> Gcm {
        Gcm::from_ints(&[&[2]], GcmKind::Classic).unwrap()
    }
    fn a2() -> Gcm {
        Gcm::from_ints(&[&[2, -1], &[-1, 2]], GcmKind::Classic).unwrap()
    }
    fn b2() -> Gcm {
        Gcm::from_ints(&[&[4, -2], &[-2, 2]], GcmKind::Classic).unwrap()
    }
    fn affine() -> Gcm {
        Gcm::from_ints(&[&[2, -2], &[-2, 2]], GcmKind::Classic).unwrap()
    }
    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn validation() {
        assert!(validate(&a1()).valid);
        assert!(validate(&a2()).valid);
        let neg = Gcm::from_ints(&[&[-2]], GcmKind::Classic).unwrap();
        let r = validate(&neg);
        assert!(!r.valid);
        assert!(!r.conditions[0].holds);
        assert!(r.generalized_valid);
        let g = Gcm::from_ints(&[&[2, 0], &[0, -2]], GcmKind::Generalized).unwrap();
        let r = validate(&g);
        assert!(r.valid);
        assert_eq!(r.commuting_pairs, vec![(0, 1)]);
    }

    #[test]
    fn non_symmetric_rejected() {
        let e = Gcm::from_ints(&[&[2, -1], &[-2, 2]], GcmKind::Classic).unwrap_err();
        assert!(matches!(e, Error::NonSymmetric { i: 0, j: 1, .. }));
    }

    #[test]
    fn parse_text_matrix() {
        let g = Gcm::parse("# B2\n4 -2\n-2 2 # short\n", GcmKind::Classic).unwrap();
        assert_eq!(g, b2());
        let h = Gcm::parse("1/2 0\n0 3/4\n", GcmKind::Classic).unwrap();
        assert_eq!(h.entry(0, 0), &BigRational::new(1.into(), 2.into()));
        assert!(Gcm::parse("1 x\n", GcmKind::Classic).is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(classify(&a2()), Classification::Finite);
        assert_eq!(classify(&affine()), Classification::Affine);
        let hyp = Gcm::from_ints(&[&[2, -3], &[-3, 2]], GcmKind::Classic).unwrap();
        assert_eq!(classify(&hyp), Classification::Indefinite);
    }

    #[test]
    fn weyl_vectors() {
        let r = weyl_vector(&a1()).unwrap();
        assert_eq!(a1().pair_simple(&r, 0), rat(-1));
        assert_eq!(weyl_vector(&a2()).unwrap(), v(&[-1, -1]));
        let r = weyl_vector(&b2()).unwrap();
        assert_eq!(dynkin_labels(&b2(), &r), v(&[-1, -1]));
        assert_eq!(
            (b2().pair_simple(&r, 0), b2().pair_simple(&r, 1)),
            (rat(-2), rat(-1))
        );
        assert!(matches!(
            weyl_vector(&affine()),
            Err(Error::NeedsAffineConvention(_))
        ));
    }

    #[test]
    fn affine_weyl_vector() {
        let w = weyl_vector_affine(&affine()).unwrap();
        // (rho, a_i) = (A x)_i + y delta_{i,node} = -1 for both nodes
        let g = affine();
        for i in 0..2 {
            let mut p = g.pair_simple(&w.root_part, i);
            if i == w.d_node {
                p += &w.d_coefficient;
            }
            assert_eq!(p, rat(-1));
        }
    }

    #[test]
    fn positive_roots() {
        assert_eq!(finite_positive_roots(&a1()).unwrap().len(), 1);
        assert_eq!(
            finite_positive_roots(&a2()).unwrap(),
            vec![v(&[0, 1]), v(&[1, 0]), v(&[1, 1])]
        );
        assert_eq!(finite_positive_roots(&b2()).unwrap().len(), 4);
        assert!(finite_positive_roots(&affine()).is_err());
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(weyl_enumerate(&a1(), 5).len(), 2);
        assert_eq!(weyl_enumerate(&a2(), 6).len(), 6);
        assert_eq!(weyl_group_finite(&b2()).unwrap().len(), 8);
        for w in weyl_enumerate(&b2(), 8) {
            assert!(preserves_form(&b2(), &w));
            assert_eq!(w.det, if w.length() % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn a1_denominator() {
        let r = denominator_check(&a1(), 5).unwrap();
        assert!(r.equal);
        let expect = GroupRingElement::one(1).sub(&GroupRingElement::monomial(v(&[1]), rat(1)));
        assert_eq!(r.lhs, expect);
    }

    #[test]
    fn indefinite_denominator_unsupported() {
        let hyp = Gcm::from_ints(&[&[2, -3], &[-3, 2]], GcmKind::Classic).unwrap();
        assert!(matches!(
            denominator_check(&hyp, 4),
            Err(Error::NotImplemented(_))
        ));
    }

    #[test]
    fn trivial_character() {
        for g in [a1(), a2(), b2()] {
            let chi = character(&g, &zero_vec(g.rank()), 10).unwrap();
            assert_eq!(chi, GroupRingElement::one(g.rank()));
        }
    }

    #[test]
    fn spin_half() {
        let lam = fundamental_weight(&a1(), 0).unwrap();
        let chi = character(&a1(), &lam, 4).unwrap();
        assert_eq!(chi.len(), 2);
        assert_eq!(chi.coefficient_sum(), rat(2));
    }

    #[test]
    fn character_cutoff_too_small() {
        let lam = weight_from_labels(&a2(), &[1, 1]).unwrap();
        assert!(matches!(
            character(&a2(), &lam, 1),
            Err(Error::Remainder(_))
        ));
    }

    #[test]
    fn non_dominant_rejected() {
        let lam: Vector = fundamental_weight(&a1(), 0)
            .unwrap()
            .iter()
            .map(|x| -x)
            .collect();
        assert!(matches!(character(&a1(), &lam, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn freudenthal_small() {
        assert_eq!(
            freudenthal_dimension(&a1(), &fundamental_weight(&a1(), 0).unwrap()).unwrap(),
            BigInt::from(2)
        );
        let adj = weight_from_labels(&a2(), &[1, 1]).unwrap();
        assert_eq!(freudenthal_dimension(&a2(), &adj).unwrap(), BigInt::from(8));
        let fund = weight_from_labels(&a2(), &[1, 0]).unwrap();
        assert_eq!(
            freudenthal_dimension(&a2(), &fund).unwrap(),
            BigInt::from(3)
        );
    }

    #[test]
    fn epsilon_examples() {
        let form = Gcm::from_ints(&[&[0, 0], &[0, 0]], GcmKind::Generalized).unwrap();
        let z = zero_vec(2);
        assert_eq!(
            epsilon_series(&form, &[], &z, 5).unwrap(),
            GroupRingElement::one(2)
        );
        let beta = ImaginarySimple {
            root: v(&[1, 0]),
            norm: rat(0),
            multiplicity: 1,
        };
        let gamma = ImaginarySimple {
            root: v(&[0, 1]),
            norm: rat(0),
            multiplicity: 1,
        };
        let e = epsilon_series(&form, std::slice::from_ref(&beta), &z, 5).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.coeff(&v(&[1, 0])), rat(-1));
        let e = epsilon_series(&form, &[beta.clone(), gamma], &z, 5).unwrap();
        assert_eq!(e.coeff(&v(&[0, 0])), rat(1));
        assert_eq!(e.coeff(&v(&[1, 0])), rat(-1));
        assert_eq!(e.coeff(&v(&[0, 1])), rat(-1));
        assert_eq!(e.coeff(&v(&[1, 1])), rat(1));
        assert_eq!(e.len(), 4);

        let bad = ImaginarySimple {
            root: v(&[1, 0]),
            norm: rat(2),
            multiplicity: 1,
        };
        assert!(matches!(
            epsilon_series(&form, &[bad], &z, 5),
            Err(Error::Domain(_))
        ));
        let none = ImaginarySimple {
            multiplicity: 0,
            ..beta
        };
        assert_eq!(
            epsilon_series(&form, &[none], &z, 5).unwrap(),
            GroupRingElement::one(2)
        );
    }

    #[test]
    fn gkm_toys() {
        let single = |slots: u32| ToyGkm {
            gcm: Gcm::from_ints(&[&[0]], GcmKind::Generalized).unwrap(),
            slots: vec![slots],
            positive_roots: vec![(v(&[1]), BigInt::from(slots))],
        };
        let r = gkm_denominator_check_toy(&single(1), 6).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs.len(), 2);
        let r = gkm_denominator_check_toy(&single(2), 6).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs.coeff(&v(&[1])), rat(-2));
        assert_eq!(r.lhs.coeff(&v(&[2])), rat(1));

        let classic = ToyGkm {
            gcm: a1(),
            slots: vec![1],
            positive_roots: vec![(v(&[1]), BigInt::one())],
        };
        let r = gkm_denominator_check_toy(&classic, 6).unwrap();
        let d = denominator_check(&a1(), 6).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, d.lhs);
    }
}
