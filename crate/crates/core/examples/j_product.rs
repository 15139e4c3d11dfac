//! The product formula `j = q^-1 prod (1 - q^n)^{c_0(n^2)}`.

use gkmcheck::identities::verify_j_product;
use gkmcheck::modforms::{c0_square_exponents, j_minus_744};

fn main() {
    println!("j - 744 = {}", j_minus_744(4));
    let exps = c0_square_exponents(8).unwrap();
    for (n, e) in &exps {
        println!("(1 - q^{n})^{e}");
    }
    let report = verify_j_product(10).unwrap();
    println!("roundtrip through q^9: equal = {}", report.equal);
}
