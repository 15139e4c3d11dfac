//! Algebraic invariants under randomised inputs.

use std::collections::BTreeMap;

use gkmcheck::exactseries::{extract_product_exponents, power_product, rat, QSeries};
use gkmcheck::identities::verify_mid;
use gkmcheck::kacmoody::{preserves_form, weyl_enumerate, Gcm, GcmKind};
use gkmcheck::lorentz::{reflect, sample_leech_class, sample_member, LatticeVector};
use gkmcheck::moonshine::{
    identity_element_data, solve_coefficients_with, EquationOrder, SolveOptions, ThompsonData,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn series() -> impl Strategy<Value = QSeries> {
    (-2i64..=2, prop::collection::vec(-9i64..=9, 1..8), 4i64..10)
        .prop_map(|(lo, cs, t)| QSeries::from_ints(lo, &cs, t))
}

fn unit_series() -> impl Strategy<Value = QSeries> {
    (
        prop::sample::select(vec![1i64, -1, 2, -3]),
        prop::collection::vec(-9i64..=9, 0..8),
        3i64..10,
    )
        .prop_map(|(c0, rest, t)| {
            let mut cs = vec![c0];
            cs.extend(rest);
            QSeries::from_ints(0, &cs, t)
        })
}

fn one_plus() -> impl Strategy<Value = QSeries> {
    (prop::collection::vec(-5i64..=5, 0..8), 2i64..9).prop_map(|(rest, t)| {
        let mut cs = vec![1];
        cs.extend(rest);
        QSeries::from_ints(0, &cs, t)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.truncate(a.trunc().min(b.trunc())));
        let lhs = &a * &(&b + &c);
        let rhs = &(&a * &b) + &(&a * &c);
        let t = lhs.trunc().min(rhs.trunc());
        prop_assert_eq!(lhs.truncate(t), rhs.truncate(t));
    }

    #[test]
    fn inverse(a in unit_series()) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(&a * &inv, QSeries::one(a.trunc()));
    }

    #[test]
    fn log_exp_roundtrip(a in one_plus()) {
        let l = a.log().unwrap();
        prop_assert_eq!(l.coeff(0), rat(0));
        prop_assert_eq!(l.exp().unwrap(), a.clone());
        // log turns products into sums
        let sq = &a * &a;
        prop_assert_eq!(sq.log().unwrap(), &l + &l);
    }

    #[test]
    fn product_exponents_roundtrip(
        exps in prop::collection::btree_map(1i64..12, -30i64..30, 0..6),
        trunc in 1i64..12,
    ) {
        let exps: BTreeMap<i64, BigInt> = exps
            .into_iter()
            .filter(|(n, a)| *n <= trunc && *a != 0)
            .map(|(n, a)| (n, BigInt::from(a)))
            .collect();
        let f = power_product(&exps, trunc);
        let back = extract_product_exponents(&f).unwrap();
        let back: BTreeMap<i64, BigInt> = back.into_iter().filter(|(_, a)| *a != BigInt::from(0)).collect();
        prop_assert_eq!(back, exps);
    }

    #[test]
    fn weyl_elements_preserve_form(d1 in 1i64..=3, d2 in 1i64..=3, k in 0i64..=3) {
        // Symmetric [[2 d1, b], [b, 2 d2]] with b a multiple of lcm(d1, d2),
        // so 2 a_ij / a_ii is integral: finite, affine and hyperbolic cases.
        let b = -k * num_integer::lcm(d1, d2);
        let g = Gcm::from_ints(&[&[2 * d1, b], &[b, 2 * d2]], GcmKind::Classic).unwrap();
        for w in weyl_enumerate(&g, 6) {
            prop_assert!(preserves_form(&g, &w), "{:?}", w.word);
            prop_assert_eq!(w.det.abs(), 1);
            prop_assert!(w.length() <= 6);
        }
    }

    #[test]
    fn lattice_closure_and_reflections(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = sample_member(&mut rng, 5);
        let y = sample_member(&mut rng, 5);
        prop_assert!(x.is_member() && y.is_member());
        prop_assert!((x + y).is_member() && (-x).is_member() && (x - y).is_member());
        prop_assert!(x.norm().is_integer() && x.norm().to_integer() % 2 == 0);
        let r = sample_leech_class(&mut rng, 1);
        let r = *r.rep();
        prop_assert_eq!(r.norm(), 2.into());
        prop_assert_eq!(r.dot(&LatticeVector::rho()), (-1).into());
        let rx = reflect(&r, &x).unwrap();
        let ry = reflect(&r, &y).unwrap();
        prop_assert!(rx.is_member());
        prop_assert_eq!(rx.dot(&ry), x.dot(&y));
        prop_assert_eq!(reflect(&r, &rx).unwrap(), x);
    }

    #[test]
    fn thompson_text_roundtrip(known in 1i64..8) {
        let d = identity_element_data(known);
        let back = ThompsonData::parse(&d.to_text()).unwrap();
        prop_assert_eq!(back, d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn mid_holds_at_small_truncations(p in 1i64..=4, q in 1i64..=4) {
        let r = verify_mid(p, q).unwrap();
        prop_assert!(r.equal, "{:?}", r.first_discrepancy);
    }

    #[test]
    fn solver_order_independent(known in 3i64..=5) {
        let data = identity_element_data(known);
        let fwd = SolveOptions { order: EquationOrder::Forward, ..SolveOptions::default() };
        let rev = SolveOptions { order: EquationOrder::Reverse, ..SolveOptions::default() };
        let a = solve_coefficients_with(&data, known, known + 3, fwd).unwrap();
        let b = solve_coefficients_with(&data, known, known + 3, rev).unwrap();
        prop_assert_eq!(&a.determined, &b.determined);
        prop_assert_eq!(a.series, b.series);
    }
}
