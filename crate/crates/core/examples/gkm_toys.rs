//! Generalized Kac-Moody toys: two imaginary simple roots of norm -2 that
//! pair to -1 generate a free Lie algebra, whose root multiplicities come
//! from the necklace formula. The generalized denominator identity then
//! reads `1 - e^b1 - e^b2 = prod (1 - e^a)^{m_a}`.

use gkmcheck::exactseries::rat;
use gkmcheck::kacmoody::{
    epsilon_series, gkm_denominator_check_toy, show, Gcm, GcmKind, ImaginarySimple, ToyGkm,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

fn mobius(n: i64) -> i64 {
    let mut n = n;
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            out = -out;
        }
        p += 1;
    }
    if n > 1 {
        out = -out;
    }
    out
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

/// Dimension of the degree-(a, b) piece of the free Lie algebra on two
/// generators.
fn necklace(a: i64, b: i64) -> BigInt {
    let g = a.gcd(&b);
    let mut s = BigInt::zero();
    for d in 1..=g {
        if g % d == 0 {
            let (x, y) = (a / d, b / d);
            s += factorial(x + y) / (factorial(x) * factorial(y)) * mobius(d);
        }
    }
    s / (a + b)
}

fn main() {
    let cutoff = 6;
    let gcm = Gcm::from_ints(&[&[-2, -1], &[-1, -2]], GcmKind::Generalized).unwrap();
    let mut roots = Vec::new();
    for a in 0..=cutoff {
        for b in 0..=cutoff - a {
            if a + b > 0 {
                let m = necklace(a, b);
                if !m.is_zero() {
                    roots.push((vec![rat(a), rat(b)], m));
                }
            }
        }
    }
    let toy = ToyGkm {
        gcm: gcm.clone(),
        slots: vec![1, 1],
        positive_roots: roots,
    };
    let r = gkm_denominator_check_toy(&toy, cutoff).unwrap();
    println!(
        "free Lie algebra toy up to height {cutoff}: equal={}",
        r.equal
    );
    for (v, c) in r.lhs.terms() {
        println!("  {c} e^{}", show(v));
    }

    let orth = Gcm::from_ints(&[&[0, 0], &[0, 0]], GcmKind::Generalized).unwrap();
    let simples = [
        ImaginarySimple {
            root: vec![rat(1), rat(0)],
            norm: rat(0),
            multiplicity: 2,
        },
        ImaginarySimple {
            root: vec![rat(0), rat(1)],
            norm: rat(0),
            multiplicity: 1,
        },
    ];
    let eps = epsilon_series(&orth, &simples, &[rat(0), rat(0)], 4).unwrap();
    println!("epsilon series for orthogonal norm-0 roots (one doubled):");
    for (v, c) in eps.terms() {
        println!("  {c} e^{}", show(v));
    }
}
