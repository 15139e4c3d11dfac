//! Weyl characters of small finite-type algebras, with dimensions checked
//! against Freudenthal's multiplicity recursion.

use gkmcheck::kacmoody::{
    character, character_cutoff, freudenthal_dimension, show, weight_from_labels, Gcm, GcmKind,
};

fn main() {
    let a2 = Gcm::from_ints(&[&[2, -1], &[-1, 2]], GcmKind::Classic).unwrap();
    let lam = weight_from_labels(&a2, &[1, 1]).unwrap();
    let chi = character(&a2, &lam, character_cutoff(&a2, &lam).unwrap()).unwrap();
    println!("A2 adjoint:");
    for (v, m) in chi.terms() {
        println!("  e^{} x {m}", show(v));
    }
    for (name, rows) in [
        ("A2", vec![vec![2, -1], vec![-1, 2]]),
        ("B2", vec![vec![4, -2], vec![-2, 2]]),
    ] {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let g = Gcm::from_ints(&refs, GcmKind::Classic).unwrap();
        for a in 0..=2 {
            for b in 0..=2 {
                let lam = weight_from_labels(&g, &[a, b]).unwrap();
                let chi = character(&g, &lam, character_cutoff(&g, &lam).unwrap()).unwrap();
                println!(
                    "{name} ({a},{b}): dim {} (Freudenthal {})",
                    chi.coefficient_sum(),
                    freudenthal_dimension(&g, &lam).unwrap()
                );
            }
        }
    }
}
