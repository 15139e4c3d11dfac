//! The Fake Monster Lie algebra: root multiplicities, simple roots and the
//! denominator identity restricted to the `(0, sigma, tau)` slice.

use gkmcheck::identities::{fake_monster_grade_dimension, verify_fmid};
use gkmcheck::lorentz::fm_simple_root;
use gkmcheck::modforms::noghost_multiplicity;

fn main() {
    for norm in [2, 0, -2, -4] {
        println!(
            "root of norm {norm:>2}: multiplicity p24(1 - {norm}/2) = {}",
            noghost_multiplicity(26, norm).unwrap()
        );
    }
    println!(
        "rank 25 would give {} for norm 2",
        noghost_multiplicity(25, 2).unwrap()
    );
    for lam in [0, 4, 6] {
        let s = fm_simple_root(lam).unwrap();
        println!(
            "simple root over a Leech vector of norm {lam}: {:?}, norm {}, (rho, r) = {}",
            s.root, s.norm, s.rho_pairing
        );
    }
    for (m, n) in [(1, -1), (1, 1), (2, 3)] {
        println!(
            "Monster Lie algebra degree ({m},{n}): dimension {}",
            fake_monster_grade_dimension(m, n).unwrap()
        );
    }
    let r = verify_fmid(5, 5).unwrap();
    println!("slice identity at (5,5): equal = {}", r.equal);
    for n in &r.notes {
        println!("  {n}");
    }
}
