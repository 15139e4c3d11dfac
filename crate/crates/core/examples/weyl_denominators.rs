//! Weyl denominator identities for A1, A2, B2 and affine A1, and the
//! specialisation of affine A1 to Gauss's theta series.

use std::collections::BTreeMap;

use gkmcheck::exactseries::power_product;
use gkmcheck::kacmoody::{denominator_check, Gcm, GcmKind};
use num_bigint::BigInt;

fn main() {
    let cases: [(&str, &[&[i64]]); 4] = [
        ("A1", &[&[2]]),
        ("A2", &[&[2, -1], &[-1, 2]]),
        ("B2", &[&[4, -2], &[-2, 2]]),
        ("affine A1", &[&[2, -2], &[-2, 2]]),
    ];
    for (name, rows) in cases {
        let g = Gcm::from_ints(rows, GcmKind::Classic).unwrap();
        let r = denominator_check(&g, 12).unwrap();
        println!(
            "{name:>9}: equal={} weyl terms={} root factors={}",
            r.equal, r.weyl_elements, r.factors
        );
    }
    let g = Gcm::from_ints(&[&[2, -2], &[-2, 2]], GcmKind::Classic).unwrap();
    let r = denominator_check(&g, 16).unwrap();
    let sp = r.lhs.specialize(&[1, 1], 16).unwrap();
    println!("e^a0, e^a1 -> q: {sp}");
    let exps: BTreeMap<i64, BigInt> = (1..=16)
        .map(|n| (n, BigInt::from(if n % 2 == 1 { 2 } else { 1 })))
        .collect();
    println!("prod (1-q^n)^(1 + [n odd]): {}", power_product(&exps, 16));
}
