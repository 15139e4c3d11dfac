//! `II_25,1`, its Weyl vector and the Leech lattice as norm-2 coset
//! representatives.

use gkmcheck::lorentz::{
    class_difference_norm, lattice_suite, reflect, sample_leech_class, LatticeVector, SuiteSizes,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let rho = LatticeVector::rho();
    println!("rho = {rho}, rho^2 = {}", rho.norm());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let a = sample_leech_class(&mut rng, 1);
    let b = sample_leech_class(&mut rng, 1);
    println!("a = {}", a.rep());
    println!("b = {}", b.rep());
    println!("Leech norm of a - b: {}", class_difference_norm(&a, &b));
    let ra = reflect(b.rep(), a.rep()).unwrap();
    println!("a reflected in b: {ra}, norm {}", ra.norm());
    let r = lattice_suite(0, SuiteSizes::default());
    println!("randomised suite: equal={} {:?}", r.equal, r.params);
}
