use habiro_core::rep::twist_eigen;
use habiro_core::ring::qcomb::qnum;
use habiro_core::ring::Laurent;
use habiro_core::tangle::{builtin, colored_jones, parse_diagram};

#[test]
fn unknot_is_quantum_dimension() {
    let d = builtin("unknot").unwrap();
    for n in 0..6 {
        assert_eq!(colored_jones(&d, &[n]).unwrap(), qnum(n as i64 + 1));
    }
}

#[test]
fn hopf_link() {
    let d = builtin("hopf").unwrap();
    assert_eq!(d.linking_data(), vec![vec![0, -1], vec![-1, 0]]);
    for m in 0..4 {
        for n in 0..4 {
            let j = colored_jones(&d, &[m, n]).unwrap();
            assert_eq!(j, qnum(((m + 1) * (n + 1)) as i64), "m={} n={}", m, n);
        }
    }
}

#[test]
fn kinks_are_twists() {
    let p = builtin("unknot+1").unwrap();
    let m = builtin("unknot-1").unwrap();
    assert_eq!(p.writhes(), vec![1]);
    assert_eq!(m.writhes(), vec![-1]);
    for n in 0..5 {
        let dim = qnum(n as i64 + 1);
        assert_eq!(
            colored_jones(&p, &[n]).unwrap(),
            &dim * &twist_eigen(n, 1),
            "n={}",
            n
        );
        assert_eq!(
            colored_jones(&m, &[n]).unwrap(),
            &dim * &twist_eigen(n, -1),
            "n={}",
            n
        );
    }
}

#[test]
fn trefoil_jones() {
    let d = builtin("trefoil").unwrap();
    assert_eq!(d.writhes(), vec![-3]);
    let j = colored_jones(&d, &[1]).unwrap();
    let norm = j.exact_div(&qnum(2)).unwrap().shift(3 * 3);
    // q + q^3 - q^4
    let want = Laurent::q_pow(1) + Laurent::q_pow(3) - Laurent::q_pow(4);
    assert_eq!(norm, want);
}

#[test]
fn borromean_linking() {
    let d = builtin("borromean").unwrap();
    assert_eq!(d.linking_data(), vec![vec![0; 3]; 3]);
}

#[test]
fn reidemeister_two() {
    let text = "U(0) U(1)\n|0 X+(0,1) |1\n|0 X-(1,0) |1\nA(0) A(1)\n";
    let d = parse_diagram(text).unwrap();
    for (a, b) in [(1, 2), (2, 2), (0, 3)] {
        let j = colored_jones(&d, &[a, b]).unwrap();
        assert_eq!(j, &qnum(a as i64 + 1) * &qnum(b as i64 + 1));
    }
}

fn borromean_closed_form(i: i64, j: i64, k: i64) -> Laurent {
    use habiro_core::ring::qcomb::{falling_bal, qbinom_bal, qfact_bal};
    let mut s = Laurent::zero();
    for p in 0..=i.min(j).min(k) {
        let f = qfact_bal(p);
        let t = &(&(&qbinom_bal(i + 1 + p, 2 * p + 1) * &qbinom_bal(j + 1 + p, 2 * p + 1))
            * &qbinom_bal(k + 1 + p, 2 * p + 1))
            * &(&(&f * &f) * &falling_bal(2 * p + 1, 2 * p));
        s = if p % 2 == 0 { &s + &t } else { &s - &t };
    }
    s
}

#[test]
fn borromean_matches_closed_form() {
    let d = builtin("borromean").unwrap();
    for i in 0..3u32 {
        for j in 0..3u32 {
            for k in 0..3u32 {
                let got = colored_jones(&d, &[i, j, k]).unwrap();
                assert_eq!(
                    got,
                    borromean_closed_form(i as i64, j as i64, k as i64),
                    "{} {} {}",
                    i,
                    j,
                    k
                );
            }
        }
    }
}

#[test]
#[ignore]
fn borromean_timing() {
    let d = builtin("borromean").unwrap();
    for n in [3u32, 5, 7, 9] {
        let t = std::time::Instant::now();
        let _ = colored_jones(&d, &[n, n, n]).unwrap();
        println!("{}: {:?}", n, t.elapsed());
    }
}

#[test]
#[ignore]
fn borromean_all_tuples_timing() {
    let d = builtin("borromean").unwrap();
    let t = std::time::Instant::now();
    for a in 0..8u32 {
        for b in 0..8u32 {
            for c in 0..8u32 {
                let _ = colored_jones(&d, &[a, b, c]).unwrap();
            }
        }
    }
    println!("all: {:?}", t.elapsed());
}
