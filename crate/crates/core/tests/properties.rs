use habiro_core::evalx::{eval_padic, eval_rational, modp_value};
use habiro_core::habiro::HabiroElem;
use habiro_core::ring::qcomb::qbinom_q;
use habiro_core::ring::Laurent;
use num_bigint::BigInt;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = Laurent> {
    (-4i64..4, prop::collection::vec(-5i64..=5, 0..6)).prop_map(|(lo, c)| Laurent::from_i64(lo, c))
}

fn q_laurent() -> impl Strategy<Value = Laurent> {
    laurent().prop_map(|p| p.expand_var(4))
}

fn elem(depth: usize) -> impl Strategy<Value = HabiroElem> {
    prop::collection::vec(q_laurent(), depth)
        .prop_map(move |t| HabiroElem::from_terms(t, depth).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn exact_div_inverts_mul(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn habiro_ring_axioms(x in elem(8), y in elem(8), z in elem(8)) {
        prop_assert!(x.mul(&y).equals_at_depth(&y.mul(&x), 8).unwrap());
        prop_assert!(x.mul(&y.add(&z)).equals_at_depth(&x.mul(&y).add(&x.mul(&z)), 8).unwrap());
        prop_assert!(x.mirror().mirror().equals_at_depth(&x, 8).unwrap());
        prop_assert!(x.mul(&y).mirror().equals_at_depth(&x.mirror().mul(&y.mirror()), 8).unwrap());
    }

    #[test]
    fn specializations_are_homomorphisms(x in elem(10), y in elem(10), r in 1usize..=10) {
        let p = x.mul(&y);
        prop_assert_eq!(p.eval_root(r).unwrap(), x.eval_root(r).unwrap().mul(&y.eval_root(r).unwrap()));
        let seven = BigInt::from(7);
        let vm = |z: &HabiroElem| modp_value(z, &seven, r).map(|v| v.as_poly().unwrap().clone());
        if r % 7 != 0 {
            prop_assert_eq!(vm(&p).unwrap(), vm(&x).unwrap().mul(&vm(&y).unwrap()));
        }
        let m = BigInt::from(11);
        let vr = |z: &HabiroElem| eval_rational(z, &BigInt::from(3), &BigInt::from(1), &m).unwrap().as_int().unwrap().clone();
        prop_assert_eq!(vr(&p), (vr(&x) * vr(&y)) % &m);
        let vp = |z: &HabiroElem| eval_padic(z, &BigInt::from(4), &BigInt::from(3), 2).unwrap().as_int().unwrap().clone();
        prop_assert_eq!(vp(&p), (vp(&x) * vp(&y)) % BigInt::from(9));
    }

    #[test]
    fn gaussian_binomial_pascal(n in 1i64..=12, k in 1i64..=12) {
        prop_assume!(k <= n);
        // [n, k] = [n-1, k-1] + q^k [n-1, k]
        let lhs = qbinom_q(n, k);
        let rhs = &qbinom_q(n - 1, k - 1) + &qbinom_q(n - 1, k).shift(4 * k);
        prop_assert_eq!(lhs, rhs);
    }
}
