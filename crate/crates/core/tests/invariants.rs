use habiro_core::habiro::HabiroElem;
use habiro_core::invariants::*;
use habiro_core::tangle::{builtin, parse_diagram};

#[test]
fn borromean_closed_form_is_poincare_series() {
    let p = poincare_series(8).unwrap();
    let b = jm_borromean(1, 1, 1, 8).unwrap();
    assert!(b.equals_at_depth(&p, 8).unwrap());
}

#[test]
fn surgery_on_borromean_diagram() {
    let d = builtin("borromean").unwrap();
    let s = jm_from_surgery(&d, &[-1, -1, -1], 6).unwrap();
    let b = jm_borromean(1, 1, 1, 6).unwrap();
    assert!(s.equals_at_depth(&b, 6).unwrap());
}

#[test]
fn sphere_presentations() {
    let one = HabiroElem::one(8);
    for (name, f) in [
        ("unknot", 1),
        ("unknot", -1),
        ("unknot+1", 1),
        ("unknot-1", -1),
    ] {
        let d = builtin(name).unwrap();
        let j = jm_from_surgery(&d, &[f], 8).unwrap();
        assert!(j.equals_at_depth(&one, 8).unwrap(), "{} {}", name, f);
    }
    let unlink = parse_diagram("U(0)\n|0 |0 U(1)\nA(0) A(1)\n").unwrap();
    let j = jm_from_surgery(&unlink, &[1, -1], 8).unwrap();
    assert!(j.equals_at_depth(&one, 8).unwrap());
    let s = SurgeryPresentation::sphere();
    assert!(s.jm(8).unwrap().equals_at_depth(&one, 8).unwrap());
    for r in 1..=8 {
        assert!(wrt(
            &SurgeryPresentation::diagram(unlink.clone(), vec![1, -1]).unwrap(),
            r
        )
        .unwrap()
        .is_one());
        assert!(wrt(&s, r).unwrap().is_one());
    }
}

#[test]
fn wrt_matches_eval_root() {
    for p in [[1, 1, 1], [-1, 1, 1], [1, -1, -1]] {
        let pres = SurgeryPresentation::borromean(p[0], p[1], p[2]);
        let j = pres.jm(8).unwrap();
        for r in 1..=8 {
            let w = wrt(&pres, r).unwrap();
            let e = j
                .eval_root(r)
                .unwrap()
                .change_base(habiro_core::ring::Base::Q)
                .unwrap();
            assert_eq!(w, e, "{:?} r = {}", p, r);
        }
    }
}

#[test]
fn knot_paths_agree() {
    let tr = builtin("trefoil").unwrap();
    let a = reduced_jones(&tr, 6).unwrap();
    let b = knot_borromean(1, 1, 6).unwrap();
    assert_eq!(a, b);
    let u = reduced_jones(&builtin("unknot").unwrap(), 5).unwrap();
    assert_eq!(u, knot_borromean(0, 0, 5).unwrap());
    for r in 1..=6usize {
        let t0 = b.theta0().eval_root(r).unwrap();
        let t = habiro_core::habiro::HabiroElem::from_polynomial(b.theta(r as i64).unwrap(), 6)
            .unwrap()
            .eval_root(r)
            .unwrap();
        assert_eq!(t0, t, "r = {}", r);
    }
}

#[test]
fn congruences_for_poincare() {
    let j = jm_borromean(1, 1, 1, 10).unwrap();
    let l = ohtsuki(&j, 6).unwrap();
    println!("{:?}", l);
    let rep = congruence_report(&l).unwrap();
    println!("{:?}", rep);
    assert!(rep.all_hold());
    let t = tilde_tau8_check(&j, &l[1]).unwrap();
    println!("{:?}", t);
    assert!(t.in_lattice);
}

#[test]
fn borromean_family_symmetries() {
    let one = HabiroElem::one(8);
    assert!(jm_borromean(0, 0, 0, 8)
        .unwrap()
        .equals_at_depth(&one, 8)
        .unwrap());
    assert!(jm_borromean(0, 3, -2, 8)
        .unwrap()
        .equals_at_depth(&one, 8)
        .unwrap());
    let a = jm_borromean(2, 1, -1, 8).unwrap();
    for p in [[1, 2, -1], [-1, 1, 2], [1, -1, 2]] {
        assert!(a
            .equals_at_depth(&jm_borromean(p[0], p[1], p[2], 8).unwrap(), 8)
            .unwrap());
    }
    let m = mirror(&jm_borromean(1, 1, 1, 8).unwrap());
    assert!(m
        .equals_at_depth(&jm_borromean(-1, -1, -1, 8).unwrap(), 8)
        .unwrap());
    let x = jm_borromean(1, 1, -1, 8).unwrap();
    assert!(connected_sum(&x, &one).equals_at_depth(&x, 8).unwrap());
    let p = poincare_series(3).unwrap();
    assert!(p.slot(0).is_one());
    assert!(p.eval_root(1).unwrap().is_one());
}

#[test]
fn known_wrt_values_of_poincare_sphere() {
    let pres = SurgeryPresentation::borromean(1, 1, 1);
    assert!(wrt(&pres, 6).unwrap().is_one());
    let w4 = wrt(&pres, 4).unwrap();
    assert!(w4.is_one() || w4.neg().is_one());
}

#[test]
fn two_variable_examples() {
    use habiro_core::ring::Laurent;
    let u = knot_borromean(0, 0, 5).unwrap();
    assert!(u.coeffs()[0].is_one() && u.coeffs()[1..].iter().all(|c| c.is_zero()));
    assert!(u.theta0().equals_at_depth(&HabiroElem::one(5), 5).unwrap());
    for i in 1..=5 {
        assert!(u.theta(i).unwrap().is_one());
    }
    let t = knot_borromean(1, 1, 4).unwrap();
    assert_eq!(t.coeffs()[1], -Laurent::q_pow(2));
    let f8 = knot_borromean(1, -1, 6).unwrap();
    assert!(f8.coeffs().iter().all(|c| c.is_one()));
    assert!(matches!(
        t.theta(5),
        Err(habiro_core::Error::DepthExceeded { .. })
    ));
    assert!(matches!(
        reduced_jones(&builtin("hopf").unwrap(), 3),
        Err(habiro_core::Error::NotAKnot(_))
    ));
    // θ_0 of K_(1,1) at ζ_5 against the colored Jones of V_4
    let k = knot_borromean(1, 1, 8).unwrap();
    let lhs = k.theta0().eval_root(5).unwrap();
    let rhs = HabiroElem::from_polynomial(k.theta(5).unwrap(), 8)
        .unwrap()
        .eval_root(5)
        .unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn ohtsuki_and_reports() {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    let one = HabiroElem::one(6);
    let l = ohtsuki(&one, 6).unwrap();
    assert_eq!(l[0], BigInt::from(1));
    assert!(l[1..].iter().all(|x| *x == BigInt::from(0)));
    assert!(congruence_report(&l[..5]).unwrap().all_hold());
    let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    assert_eq!(
        cubic_relation_coeffs(4),
        vec![r(1, 6), r(-1, 4), r(17, 72), r(-25, 144)]
    );
    assert_eq!(quintic_relation_coeffs(2), vec![r(1, 12), r(-5, 24)]);
    let t = tilde_tau8_check(&HabiroElem::one(8), &BigInt::from(0)).unwrap();
    assert!(t.in_lattice && t.in_small_lattice);
    assert!(t.difference.iter().all(|c| *c == BigInt::from(0)));
    // a sequence violating λ_1 ≡ 0 (mod 6)
    let bad: Vec<BigInt> = [1, 1, 0, 0, 0].iter().map(|&x| BigInt::from(x)).collect();
    assert!(!congruence_report(&bad).unwrap().all_hold());
}

#[test]
fn presentation_json() {
    let v = serde_json::json!({"family": "borromean", "params": [1, 1, 1]});
    let p = SurgeryPresentation::from_json(&v, None).unwrap();
    assert!(matches!(
        p,
        SurgeryPresentation::Borromean { params: [1, 1, 1] }
    ));
    let v = serde_json::json!({"diagram": "U(0)\nA(0)\n", "framings": [-1]});
    let p = SurgeryPresentation::from_json(&v, None).unwrap();
    assert!(p
        .jm(5)
        .unwrap()
        .equals_at_depth(&HabiroElem::one(5), 5)
        .unwrap());
    let back = SurgeryPresentation::from_json(&p.to_json(), None).unwrap();
    assert_eq!(back.to_json(), p.to_json());
    let v = serde_json::json!({"builtin": "hopf", "framings": [1, 1]});
    assert!(matches!(
        SurgeryPresentation::from_json(&v, None),
        Err(habiro_core::Error::NotAdmissible(_))
    ));
    let v = serde_json::json!({"builtin": "borromean", "framings": [1, 1]});
    assert!(matches!(
        SurgeryPresentation::from_json(&v, None),
        Err(habiro_core::Error::ColorCountMismatch { .. })
    ));
    let v = serde_json::json!({"family": "torus"});
    assert!(SurgeryPresentation::from_json(&v, None).is_err());
}
