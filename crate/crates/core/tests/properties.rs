use dyckgen::cluster::{c2, c2_factorial, Composition};
use dyckgen::genfun::{duality_check, genfun, reflect, GenSpec};
use dyckgen::oracle::{enumerate, genfun_from_table};
use dyckgen::spectral::{gaussian_binomial, secular_det_recursive};
use dyckgen::touchdown::tilde_genfun;
use dyckgen::{Guards, QLaurent, Rat, RatSeries};
use num_traits::One;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = QLaurent<Rat>> {
    proptest::collection::vec((-4i64..5, -3i64..4), 0..4)
        .prop_map(|ts| QLaurent::from_terms(ts.into_iter().map(|(e, c)| (e, Rat::from_integer(c.into())))))
}

fn series(order: usize) -> impl Strategy<Value = RatSeries> {
    proptest::collection::vec(poly(), order + 1).prop_map(move |cs| RatSeries::from_coeffs(order, cs))
}

/// A series with constant term 1, so it is invertible and has a logarithm.
fn unit_series(order: usize) -> impl Strategy<Value = RatSeries> {
    series(order).prop_map(move |mut s| {
        s.set_coeff(0, QLaurent::one());
        s
    })
}

fn heights() -> impl Strategy<Value = (usize, usize, usize)> {
    (0usize..6).prop_flat_map(|k| (Just(k), 0..=k, 0..=k))
}

proptest! {
    #[test]
    fn ring_axioms(a in series(5), b in series(5), c in series(5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&(&b + &c)), &a.mul(&b) + &a.mul(&c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(a.mul(&RatSeries::one(5)), a);
    }

    #[test]
    fn division_inverts_multiplication(a in series(6), u in unit_series(6)) {
        prop_assert_eq!(a.mul(&u).div(&u).unwrap(), a.clone());
        prop_assert_eq!(a.div(&u).unwrap().mul(&u), a);
    }

    #[test]
    fn exp_inverts_log(u in unit_series(6)) {
        prop_assert_eq!(u.log().unwrap().exp().unwrap(), u.clone());
        let v = u.mul(&u);
        let twice = &u.log().unwrap() + &u.log().unwrap();
        prop_assert_eq!(v.log().unwrap(), twice);
    }

    #[test]
    fn substitutions_compose(a in series(6), i in -3i64..4, j in -3i64..4) {
        prop_assert_eq!(a.invert_q().invert_q(), a.clone());
        prop_assert_eq!(a.substitute_scale(i).substitute_scale(j), a.substitute_scale(i + j));
        prop_assert_eq!(a.substitute_scale(i).substitute_scale(-i), a.clone());
    }

    #[test]
    fn reflection_is_an_involution((k, m, n) in heights()) {
        let spec = GenSpec::finite(k, m, n, 10);
        let g = genfun::<Rat>(&spec).unwrap().series;
        prop_assert_eq!(reflect(&reflect(&g, k), k), g);
        prop_assert!(duality_check::<Rat>(&spec).unwrap().holds());
    }

    #[test]
    fn genfun_matches_oracle_and_is_symmetric((k, m, n) in heights(), len in 0usize..13) {
        let a = genfun::<Rat>(&GenSpec::finite(k, m, n, len)).unwrap().series;
        let b = genfun::<Rat>(&GenSpec::finite(k, n, m, len)).unwrap().series;
        prop_assert_eq!(&a, &b);
        let table = enumerate(k, m, n, len, &Guards::default()).unwrap();
        prop_assert_eq!(a, genfun_from_table(&table));
    }

    #[test]
    fn genfun_coefficients_are_counts((k, m, n) in heights()) {
        let g = genfun::<Rat>(&GenSpec::finite(k, m, n, 12)).unwrap().series;
        for (l, c) in g.coeffs().iter().enumerate() {
            let parity_ok = c.is_zero() || (l + m + n) % 2 == 0;
            prop_assert!(parity_ok);
            prop_assert!(c.terms().all(|(a, x)| a >= 0 && x.is_integer() && x > &Rat::from_integer(0.into())));
        }
    }

    #[test]
    fn touchdown_marker_collapses((k, m, n) in heights()) {
        let (m, n) = (m.min(n), m.max(n));
        let spec = GenSpec::finite(k, m, n, 10);
        let t = tilde_genfun::<Rat>(&spec).unwrap();
        prop_assert_eq!(t.at_t_one(), genfun::<Rat>(&spec).unwrap().series);
    }

    #[test]
    fn secular_determinants_satisfy_three_term(k in 2i64..10) {
        let f = |j: i64| secular_det_recursive::<Rat>(j, 12).unwrap();
        let zeta2 = QLaurent::one();
        let rhs = &f(k - 1).substitute_scale(1) - &f(k - 2).substitute_scale(2).mul_monomial(2, &zeta2);
        prop_assert_eq!(f(k), rhs);
    }

    #[test]
    fn gaussian_binomials_are_symmetric(n in 0usize..10, r in 0usize..10) {
        prop_assume!(r <= n);
        prop_assert_eq!(gaussian_binomial::<Rat>(n, r), gaussian_binomial::<Rat>(n, n - r));
        let at_one: Rat = gaussian_binomial::<Rat>(n, r).terms().map(|(_, c)| c.clone()).sum();
        let choose = (0..r).fold(Rat::one(), |acc, i| acc * Rat::from_integer(((n - i) as i64).into()) / Rat::from_integer(((i + 1) as i64).into()));
        prop_assert_eq!(at_one, choose);
    }

    #[test]
    fn composition_weights_agree(parts in proptest::collection::vec(1usize..7, 1..7)) {
        let comp = Composition::new(parts);
        prop_assert_eq!(c2(&comp), c2_factorial(&comp));
    }
}
