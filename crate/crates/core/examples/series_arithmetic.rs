//! Exact truncated Laurent series: products, inverses, log/exp and
//! infinite products.

use std::collections::BTreeMap;

use gkmcheck::exactseries::{extract_product_exponents, power_product, rat};
use gkmcheck::QSeries;
use num_bigint::BigInt;

fn main() {
    let one_minus_q = QSeries::from_ints(0, &[1, -1], 8);
    let geo = one_minus_q.invert().unwrap();
    println!("1/(1-q)       = {geo}");

    let pole = QSeries::from_ints(-1, &[1, 2, 3], 6);
    println!("(q^-1 + 2 + 3q)^2 = {}", &pole * &pole);

    let log = one_minus_q.log().unwrap();
    println!("log(1-q)      = {log}");
    println!("exp(log(1-q)) = {}", log.exp().unwrap());

    // prod (1 - q^n)^24, the eta product behind Delta
    let exps: BTreeMap<i64, BigInt> = (1..=8).map(|n| (n, BigInt::from(24))).collect();
    let eta24 = power_product(&exps, 8);
    println!("prod (1-q^n)^24 = {eta24}");
    let back = extract_product_exponents(&eta24).unwrap();
    println!("recovered exponents: {back:?}");

    let half = QSeries::new(0, vec![rat(1), rat(1) / rat(2)], 3);
    println!(
        "1 + q/2 is a product: {}",
        extract_product_exponents(&half).is_ok()
    );
}
