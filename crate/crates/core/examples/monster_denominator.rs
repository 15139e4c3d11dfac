//! `p^-1 prod (1 - p^m q^n)^{c(mn)} = j(p) - j(q)`, checked exactly.

use gkmcheck::identities::{mid_product, verify_mid};

fn main() {
    let lhs = mid_product(3, 3);
    println!("product side, p^0 row: {}", lhs.row(0));
    println!("product side, p^1 row: {}", lhs.row(1));
    for (p, q) in [(2, 2), (4, 4), (6, 6)] {
        let r = verify_mid(p, q).unwrap();
        println!(
            "P={p} Q={q}: equal={} ({} terms each side)",
            r.equal, r.lhs_terms
        );
    }
}
