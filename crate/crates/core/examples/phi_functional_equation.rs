//! Numerical checks of `Phi(sigma, tau) = Delta(sigma) Delta(tau)
//! (j(sigma) - j(tau))`: the functional equation
//! `Phi(-1/tau, -1/sigma) = -(sigma tau)^12 Phi(sigma, tau)`, periodicity
//! and antisymmetry.

use gkmcheck::autoforms::{
    check_antisymmetry, default_points, functional_equation_with, periodicity_with, PhiEvaluator,
};

fn main() {
    let ev = PhiEvaluator::new(40);
    for pt in default_points() {
        let fe = functional_equation_with(&ev, &pt, 1e-8).unwrap();
        println!(
            "{}: {:.3e} vs {:.3e}, rel {:.2e}",
            fe.label, fe.lhs, fe.rhs, fe.relative_difference
        );
        for c in periodicity_with(&ev, &pt, 1e-10).unwrap() {
            println!("  {}: rel {:.2e}", c.label, c.relative_difference);
        }
        let a = check_antisymmetry(&ev, &pt, 1e-14).unwrap();
        println!("  {}: rel {:.2e}", a.label, a.relative_difference);
    }
}
