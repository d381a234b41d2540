use eulerian_core::bijections::{bar_map, fundamental, fundamental_inverse};
use eulerian_core::perm::{
    delta, descent_vector, dprime_vector, excedance_vector, fixed_point_vector, rise_vector,
};
use eulerian_core::poly::rat;
use eulerian_core::{ExactPoly, Permutation, TruncSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn small_poly() -> impl Strategy<Value = ExactPoly> {
    prop::collection::vec(-5i64..=5, 0..4).prop_map(|cs| ExactPoly::from_ints(&cs))
}

fn poly_series(order: usize) -> impl Strategy<Value = TruncSeries<ExactPoly>> {
    prop::collection::vec(small_poly(), order + 1).prop_map(move |cs| TruncSeries::new(order, cs))
}

fn without_constant(s: TruncSeries<ExactPoly>) -> TruncSeries<ExactPoly> {
    let mut cs = s.coeffs().to_vec();
    cs[0] = ExactPoly::zero();
    TruncSeries::new(s.order(), cs)
}

proptest! {
    #[test]
    fn fundamental_round_trip(p in permutation(30)) {
        let hat = fundamental(&p);
        prop_assert_eq!(fundamental_inverse(&hat), p.clone());
        prop_assert_eq!(hat.at(p.n()), p.at(p.n()));
    }

    #[test]
    fn fundamental_transports_excedances(p in permutation(30)) {
        let hat = fundamental(&p);
        let e = excedance_vector(&p);
        prop_assert_eq!(descent_vector(&hat).add(&dprime_vector(&hat)).unwrap(), e.clone());
        prop_assert_eq!(delta(&descent_vector(&hat)).unwrap(), delta(&e).unwrap());
    }

    #[test]
    fn bar_map_sends_excedances_to_rises(p in permutation(30)) {
        prop_assert_eq!(rise_vector(&bar_map(&p).unwrap()), excedance_vector(&p));
    }

    #[test]
    fn excedances_split(p in permutation(30)) {
        let e = excedance_vector(&p);
        prop_assert_eq!(
            e.positive_count(),
            fixed_point_vector(&p).positive_count() + delta(&e).unwrap().positive_count()
        );
    }

    #[test]
    fn inverse_composes_to_identity(p in permutation(20)) {
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), Permutation::identity(p.n()));
    }

    #[test]
    fn specialization_commutes_with_product(a in poly_series(6), b in poly_series(6)) {
        let v = rat(-1);
        prop_assert_eq!(a.mul(&b).substitute_t(&v), a.substitute_t(&v).mul(&b.substitute_t(&v)));
    }

    #[test]
    fn specialization_commutes_with_exp(a in poly_series(6)) {
        let a = without_constant(a);
        let v = rat(-1);
        prop_assert_eq!(a.exp().unwrap().substitute_t(&v), a.substitute_t(&v).exp().unwrap());
    }

    #[test]
    fn exp_and_log_are_inverse(cs in prop::collection::vec(-9i64..=9, 8)) {
        let mut cs: Vec<BigRational> = cs.into_iter().map(rat).collect();
        cs[0] = rat(0);
        let s = TruncSeries::new(7, cs);
        prop_assert_eq!(s.exp().unwrap().log().unwrap(), s);
    }

    #[test]
    fn reciprocal_is_inverse(cs in prop::collection::vec(-9i64..=9, 8)) {
        let mut cs: Vec<BigRational> = cs.into_iter().map(rat).collect();
        cs[0] = rat(1);
        let s = TruncSeries::new(7, cs);
        prop_assert_eq!(s.mul(&s.reciprocal().unwrap()), TruncSeries::one(7));
    }

    #[test]
    fn division_reconstructs(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        if let (Some(dr), Some(db)) = (r.degree(), b.degree()) {
            prop_assert!(dr < db);
        }
    }

    #[test]
    fn eval_is_a_ring_map(a in small_poly(), b in small_poly(), x in -4i64..=4) {
        let x = BigRational::from_integer(BigInt::from(x));
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }
}
