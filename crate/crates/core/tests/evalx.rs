use habiro_core::evalx::*;
use habiro_core::habiro::HabiroElem;
use habiro_core::invariants::jm_borromean;
use habiro_core::ring::{Base, Laurent};
use habiro_core::Error;
use num_bigint::BigInt;

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn sample(depth: usize, seed: i64) -> HabiroElem {
    let terms = (0..depth as i64)
        .map(|n| Laurent::from_i64(-2, vec![seed + n, 0, 1 - seed, 3, n * seed]).expand_var(4))
        .collect();
    HabiroElem::from_terms(terms, depth).unwrap()
}

#[test]
fn unit_element() {
    let one = HabiroElem::one(12);
    assert_eq!(
        eval_rational(&one, &big(3), &big(2), &big(35))
            .unwrap()
            .as_int(),
        Some(&big(1))
    );
    assert_eq!(
        eval_padic(&one, &big(2), &big(5), 3).unwrap().as_int(),
        Some(&big(1))
    );
    assert!(modp_value(&one, &big(7), 5)
        .unwrap()
        .as_poly()
        .unwrap()
        .is_one());
    assert!(modp_nonvanishing(&one, &big(7), 5).unwrap());
}

#[test]
fn rational_and_padic_agree() {
    let j = jm_borromean(1, 1, 1, 12).unwrap();
    let a = eval_rational(&j, &big(2), &big(1), &big(5)).unwrap();
    assert_eq!(a.terms_used, 4);
    let b = eval_padic(&j, &big(2), &big(5), 1).unwrap();
    assert_eq!(a.as_int(), b.as_int());
    // q = 1 is the value at the trivial root
    let r1 = j.eval_root(1).unwrap();
    let c = eval_rational(&j, &big(1), &big(1), &big(97)).unwrap();
    assert_eq!(
        c.as_int().unwrap(),
        &habiro_core::habiro::as_integer(&r1)
            .unwrap()
            .modpow(&big(1), &big(97))
    );
}

#[test]
fn errors() {
    let one = HabiroElem::one(3);
    assert!(matches!(
        eval_rational(&one, &big(2), &big(1), &big(6)),
        Err(Error::NotCoprime(_))
    ));
    assert!(matches!(
        eval_rational(&one, &big(2), &big(1), &big(11)),
        Err(Error::DepthExceeded { .. })
    ));
    assert!(matches!(
        eval_padic(&one, &big(10), &big(5), 2),
        Err(Error::NotAUnit(_))
    ));
    assert!(matches!(
        modp_value(&one, &big(5), 10),
        Err(Error::NotCoprime(_))
    ));
}

#[test]
fn evaluations_are_homomorphisms() {
    let d = 12;
    for seed in 0..4 {
        let x = sample(d, seed);
        let y = sample(d, seed + 7);
        let s = x.add(&y);
        let p = x.mul(&y);
        let m = big(35);
        let ex = |z: &HabiroElem| {
            eval_rational(z, &big(3), &big(2), &m)
                .unwrap()
                .as_int()
                .unwrap()
                .clone()
        };
        assert_eq!(ex(&s), (ex(&x) + ex(&y)) % &m);
        assert_eq!(ex(&p), (ex(&x) * ex(&y)) % &m);
        let pe = big(125);
        let ep = |z: &HabiroElem| {
            eval_padic(z, &big(2), &big(5), 3)
                .unwrap()
                .as_int()
                .unwrap()
                .clone()
        };
        assert_eq!(ep(&s), (ep(&x) + ep(&y)) % &pe);
        assert_eq!(ep(&p), (ep(&x) * ep(&y)) % &pe);
        for r in [1usize, 3, 4, 8] {
            let em = |z: &HabiroElem| {
                modp_value(z, &big(7), r)
                    .unwrap()
                    .as_poly()
                    .unwrap()
                    .clone()
            };
            assert_eq!(em(&s), em(&x).add(&em(&y)));
            assert_eq!(em(&p), em(&x).mul(&em(&y)));
        }
    }
}

#[test]
fn chinese_remainder_coherence() {
    let x = sample(40, 2);
    let a = eval_rational(&x, &big(2), &big(3), &big(77)).unwrap();
    let b = eval_rational(&x, &big(2), &big(3), &big(7)).unwrap();
    let c = eval_rational(&x, &big(2), &big(3), &big(11)).unwrap();
    assert_eq!(a.as_int().unwrap() % 7, *b.as_int().unwrap());
    assert_eq!(a.as_int().unwrap() % 11, *c.as_int().unwrap());
}

#[test]
fn depth_stability() {
    let j10 = jm_borromean(1, -1, 2, 10).unwrap();
    let j14 = jm_borromean(1, -1, 2, 14).unwrap();
    for (a, b, m) in [(2, 1, 5), (3, 1, 7), (2, 3, 11)] {
        assert_eq!(
            eval_rational(&j10, &big(a), &big(b), &big(m)).unwrap(),
            eval_rational(&j14, &big(a), &big(b), &big(m)).unwrap()
        );
    }
    assert_eq!(
        eval_padic(&j10, &big(3), &big(2), 2).unwrap(),
        eval_padic(&j14, &big(3), &big(2), 2).unwrap()
    );
    for r in 1..=10 {
        assert_eq!(
            modp_value(&j10, &big(13), r).unwrap(),
            modp_value(&j14, &big(13), r).unwrap()
        );
    }
}

#[test]
fn pi_compatibility() {
    let j = jm_borromean(1, 1, 1, 12).unwrap();
    for p in [2i64, 3, 5, 7, 11] {
        for r in 1..=12usize {
            if r as i64 % p == 0 {
                continue;
            }
            let a = modp_value(&j, &big(p), r).unwrap();
            let b = j
                .eval_root(r)
                .unwrap()
                .change_base(Base::Fp(big(p)))
                .unwrap();
            assert_eq!(a.as_poly().unwrap(), &b, "p = {} r = {}", p, r);
        }
    }
}

#[test]
fn scan_table() {
    let j = jm_borromean(1, 1, 1, 12).unwrap();
    let orders: Vec<usize> = (1..=12).filter(|r| r % 5 != 0).collect();
    let csv = modp_scan(&j, &[5], &orders).unwrap();
    assert_eq!(csv.lines().count(), orders.len() + 1);
    assert!(csv.starts_with("modulus-type,p,r,value,nonvanishing"));
}
