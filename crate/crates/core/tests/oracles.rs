//! Values checked against independent computations or tabulated constants.

use std::collections::BTreeMap;

use gkmcheck::exactseries::{extract_product_exponents, power_product, rat, QSeries};
use gkmcheck::identities::{fake_monster_grade_dimension, verify_j_product, J_PRODUCT_EXPONENTS};
use gkmcheck::kacmoody::{
    character, character_cutoff, finite_positive_roots, freudenthal_dimension, weight_from_labels,
    weyl_group_finite, Gcm, GcmKind,
};
use gkmcheck::modforms::{
    c, c0_square_exponents, c_prime, delta, eisenstein_e4, j_full, noghost_multiplicity, p_colored,
};
use num_bigint::BigInt;
use num_integer::Integer;

fn ints(s: &QSeries, lo: i64, hi: i64) -> Vec<BigInt> {
    (lo..=hi).map(|d| s.integer_coeff(d).unwrap()).collect()
}

fn bigs(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn ramanujan_tau() {
    let d = delta(10);
    let tau = [
        1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920,
    ];
    assert_eq!(ints(&d, 1, 10), bigs(&tau));
    assert_eq!(d.coeff(0), rat(0));
}

#[test]
fn tabulated_j_coefficients() {
    let j = j_full(5);
    assert_eq!(j.coeff(0), rat(744));
    let want = [
        "196884",
        "21493760",
        "864299970",
        "20245856256",
        "333202640600",
    ];
    for (n, w) in (1..=5).zip(want) {
        assert_eq!(c(n).to_string(), w, "c({n})");
    }
    assert_eq!(c(-1), BigInt::from(1));
    assert_eq!(c(-2), BigInt::from(0));
    assert_eq!(c_prime(0), BigInt::from(24));
    assert_eq!(c_prime(3), c(3));
    assert_eq!(fake_monster_grade_dimension(1, 1).unwrap(), c(1));
    assert_eq!(
        fake_monster_grade_dimension(-1, 1).unwrap(),
        BigInt::from(1)
    );
}

fn sigma3(n: i64) -> i64 {
    (1..=n).filter(|d| n % d == 0).map(|d| d * d * d).sum()
}

#[test]
fn e4_divisor_sums() {
    let e4 = eisenstein_e4(12);
    assert_eq!(e4.coeff(0), rat(1));
    for n in 1..=12 {
        assert_eq!(e4.coeff(n), rat(240 * sigma3(n)), "q^{n}");
    }
}

#[test]
fn euler_pentagonal() {
    let one: BTreeMap<i64, BigInt> = (1..=40).map(|n| (n, BigInt::from(1))).collect();
    let eta = power_product(&one, 40);
    let mut want = BTreeMap::new();
    for k in -6i64..=6 {
        let e = k * (3 * k - 1) / 2;
        if e <= 40 {
            want.insert(e, rat(if k % 2 == 0 { 1 } else { -1 }));
        }
    }
    assert_eq!(eta, QSeries::from_map(&want, 40));
}

// Partitions of n into parts of k colours by the classical recursion
// n p_k(n) = k sum_{j=1..n} sigma_1(j) p_k(n - j).
fn colored_recursive(k: i64, n: usize) -> Vec<BigInt> {
    let sigma1 = |j: i64| -> i64 { (1..=j).filter(|d| j % d == 0).sum() };
    let mut p = vec![BigInt::from(1)];
    for m in 1..=n {
        let s: BigInt = (1..=m)
            .map(|j| BigInt::from(k * sigma1(j as i64)) * &p[m - j])
            .sum();
        p.push(s / BigInt::from(m));
    }
    p
}

#[test]
fn colored_partitions_recursion() {
    for k in [1, 2, 24, 25] {
        let want = colored_recursive(k, 15);
        for (n, w) in want.iter().enumerate() {
            assert_eq!(&p_colored(k, n as i64), w, "p_{k}({n})");
        }
    }
    assert_eq!(p_colored(1, 10), BigInt::from(42));
    assert_eq!(p_colored(24, 1), BigInt::from(24));
    assert_eq!(p_colored(24, 2), BigInt::from(324));
}

#[test]
fn delta_inverse_is_p24() {
    let inv = delta(16).invert().unwrap();
    let want = colored_recursive(24, 15);
    for (n, w) in want.iter().enumerate() {
        assert_eq!(inv.integer_coeff(n as i64 - 1).unwrap(), *w);
    }
}

#[test]
fn noghost_dimensions() {
    assert_eq!(noghost_multiplicity(26, 2).unwrap(), BigInt::from(1));
    assert_eq!(noghost_multiplicity(26, 0).unwrap(), BigInt::from(24));
    assert_eq!(noghost_multiplicity(26, -2).unwrap(), BigInt::from(324));
    assert_eq!(noghost_multiplicity(26, 4).unwrap(), BigInt::from(0));
    assert!(noghost_multiplicity(26, 1).is_err());
    // Rank 10: norm -2 gives p_9(2) - p_9(-1) = 54.
    assert_eq!(noghost_multiplicity(10, -2).unwrap(), BigInt::from(54));
}

#[test]
fn j_product_exponents() {
    let e = c0_square_exponents(3).unwrap();
    let got: Vec<i64> = (1..=3).map(|n| i64::try_from(&e[&n]).unwrap()).collect();
    assert_eq!(got, J_PRODUCT_EXPONENTS);
    assert!(verify_j_product(12).unwrap().equal);
}

fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn witt(k: i64, n: u64) -> BigInt {
    let mut s = BigInt::from(0);
    for d in 1..=n {
        if n.is_multiple_of(d) {
            s += BigInt::from(moebius(d)) * BigInt::from(k).pow((n / d) as u32);
        }
    }
    s.div_floor(&BigInt::from(n))
}

#[test]
fn free_lie_necklaces() {
    // prod (1 - q^n)^{M_k(n)} = 1 - k q for the Witt dimensions M_k.
    for k in [2, 3, 5] {
        let f = QSeries::from_ints(0, &[1, -k], 14);
        let e = extract_product_exponents(&f).unwrap();
        for n in 1..=14u64 {
            assert_eq!(e[&(n as i64)], witt(k, n), "k={k} n={n}");
        }
    }
}

fn gcm(rows: &[&[i64]]) -> Gcm {
    Gcm::from_ints(rows, GcmKind::Classic).unwrap()
}

#[test]
fn finite_weyl_groups() {
    let a2 = gcm(&[&[2, -1], &[-1, 2]]);
    let b2 = gcm(&[&[4, -2], &[-2, 2]]);
    let g2 = gcm(&[&[6, -3], &[-3, 2]]);
    let a3 = gcm(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
    for (g, order, roots) in [(a2, 6, 3), (b2, 8, 4), (g2, 12, 6), (a3, 24, 6)] {
        assert_eq!(weyl_group_finite(&g).unwrap().len(), order);
        assert_eq!(finite_positive_roots(&g).unwrap().len(), roots);
    }
}

fn dim_of(g: &Gcm, labels: &[i64]) -> (BigInt, BigInt) {
    let lam = weight_from_labels(g, labels).unwrap();
    let chi = character(g, &lam, character_cutoff(g, &lam).unwrap()).unwrap();
    let sum = chi.coefficient_sum();
    assert!(sum.is_integer());
    (sum.to_integer(), freudenthal_dimension(g, &lam).unwrap())
}

#[test]
fn weyl_dimension_formula() {
    let a2 = gcm(&[&[2, -1], &[-1, 2]]);
    let b2 = gcm(&[&[4, -2], &[-2, 2]]);
    for a in 0..=3i64 {
        for b in 0..=3i64 {
            let want = BigInt::from((a + 1) * (b + 1) * (a + b + 2) / 2);
            assert_eq!(dim_of(&a2, &[a, b]), (want.clone(), want), "A2 ({a},{b})");
            // First node long.
            let want = BigInt::from((a + 1) * (b + 1) * (2 * a + b + 3) * (a + b + 2) / 6);
            assert_eq!(dim_of(&b2, &[a, b]), (want.clone(), want), "B2 ({a},{b})");
        }
    }
}

#[test]
fn g2_small_representations() {
    let g2 = gcm(&[&[6, -3], &[-3, 2]]);
    assert_eq!(dim_of(&g2, &[0, 1]).1, BigInt::from(7));
    assert_eq!(dim_of(&g2, &[1, 0]).1, BigInt::from(14));
}

#[test]
fn replication_needs_c5() {
    use gkmcheck::moonshine::{identity_element_data, solve_coefficients};
    // c(4) follows from c(1), c(2), c(3); c(5) is free.
    let s = solve_coefficients(&identity_element_data(3), 3, 5).unwrap();
    assert_eq!(
        s.determined.get(&4),
        Some(&gkmcheck::exactseries::rat_big(c(4)))
    );
    assert_eq!(s.underdetermined, vec![5]);
}

#[test]
fn fake_monster_slice_bilinear_form() {
    use gkmcheck::identities::fake_monster_slice;
    use gkmcheck::modforms::{j_minus_744, ModformTable};
    // Delta(p) Delta(q) (j(p) - j(q)) = A(p) D(q) - D(p) A(q), A = Delta j.
    let d = delta(12);
    let a = &d * &j_minus_744(12);
    let phi = fake_monster_slice(&ModformTable::new(4), 4, 5).unwrap();
    for m in 0..=4 {
        for n in 0..=5 {
            let want = a.coeff(m) * d.coeff(n) - d.coeff(m) * a.coeff(n);
            assert_eq!(phi.coeff(m, n).unwrap(), want, "p^{m} q^{n}");
        }
    }
}

#[test]
fn infinite_dihedral_growth() {
    use gkmcheck::kacmoody::weyl_enumerate;
    // Reduced words alternate s0 s1 ..., two of each positive length.
    let aff = gcm(&[&[2, -2], &[-2, 2]]);
    for l in 0..8 {
        let w = weyl_enumerate(&aff, l);
        assert_eq!(w.len(), 2 * l + 1);
        assert_eq!(w.iter().filter(|e| e.length() == l).count(), if l == 0 { 1 } else { 2 });
    }
}
