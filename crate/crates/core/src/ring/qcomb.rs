//! q-integers, factorials, binomials and Pochhammer symbols.
//!
//! Two families live here. The "q" family is built from `{i}_q = q^i - 1`;
//! the balanced family from `{i} = v^i - v^{-i}`. All results are Laurent
//! polynomials in `u = q^{1/4}`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::Laurent;

/// `{i}_q = q^i - 1`.
pub fn qint_q(i: i64) -> Laurent {
    &Laurent::q_pow(i) - &Laurent::one()
}

/// `{i} = v^i - v^{-i}`.
pub fn qint_bal(i: i64) -> Laurent {
    &Laurent::v_pow(i) - &Laurent::v_pow(-i)
}

/// `[i] = {i}/{1}`.
pub fn qnum(i: i64) -> Laurent {
    if i == 0 {
        return Laurent::zero();
    }
    let sign = if i < 0 { -1 } else { 1 };
    let a = i.abs();
    // v^{-(a-1)} + v^{-(a-3)} + ... + v^{a-1}
    let mut terms = Vec::with_capacity(a as usize);
    for k in 0..a {
        terms.push((2 * (-(a - 1) + 2 * k), sign.into()));
    }
    Laurent::from_terms(terms)
}

/// `[i]_q = (q^i - 1)/(q - 1)` for `i >= 0`.
pub fn qnum_q(i: i64) -> Laurent {
    assert!(i >= 0);
    Laurent::from_terms((0..i).map(|k| (4 * k, 1.into())))
}

/// `{i}_{q,n} = {i}_q {i-1}_q ... {i-n+1}_q`.
pub fn falling_q(i: i64, n: i64) -> Laurent {
    (0..n).map(|j| qint_q(i - j)).product()
}

/// `{i}_n = {i}{i-1}...{i-n+1}`.
pub fn falling_bal(i: i64, n: i64) -> Laurent {
    (0..n).map(|j| qint_bal(i - j)).product()
}

/// `{n}_q! = {n}_{q,n}`.
pub fn qfact_q(n: i64) -> Laurent {
    falling_q(n, n)
}

/// `{n}! = {n}_n`.
pub fn qfact_bal(n: i64) -> Laurent {
    cached(&FACT_BAL, n, |n| falling_bal(n, n))
}

/// `(q)_n = (1-q)(1-q^2)...(1-q^n)`.
pub fn pochhammer(n: i64) -> Laurent {
    cached(&POCH, n, |n| {
        (1..=n)
            .map(|i| &Laurent::one() - &Laurent::q_pow(i))
            .product()
    })
}

/// Gaussian binomial `{i}_{q,n}/{n}_q!`, a polynomial in `q`.
pub fn qbinom_q(i: i64, n: i64) -> Laurent {
    if n < 0 {
        return Laurent::zero();
    }
    cached2(&BINOM_Q, (i, n), |(i, n)| {
        falling_q(i, n)
            .exact_div(&qfact_q(n))
            .expect("Gaussian binomial division is exact")
    })
}

/// Balanced binomial `{i}_n/{n}!`.
pub fn qbinom_bal(i: i64, n: i64) -> Laurent {
    if n < 0 {
        return Laurent::zero();
    }
    cached2(&BINOM_BAL, (i, n), |(i, n)| {
        falling_bal(i, n)
            .exact_div(&qfact_bal(n))
            .expect("balanced binomial division is exact")
    })
}

/// q-multinomial `{n}_q!/({i_1}_q!...{i_p}_q!)` as a polynomial in `q`.
pub fn qmultinomial_q(parts: &[i64]) -> Laurent {
    let mut rest: i64 = parts.iter().sum();
    let mut acc = Laurent::one();
    for &k in parts {
        acc = &acc * &qbinom_q(rest, k);
        rest -= k;
    }
    acc
}

type Cache1 = OnceLock<Mutex<HashMap<i64, Laurent>>>;
type Cache2 = OnceLock<Mutex<HashMap<(i64, i64), Laurent>>>;

static FACT_BAL: Cache1 = OnceLock::new();
static POCH: Cache1 = OnceLock::new();
static BINOM_Q: Cache2 = OnceLock::new();
static BINOM_BAL: Cache2 = OnceLock::new();

fn cached(cell: &'static Cache1, n: i64, f: impl FnOnce(i64) -> Laurent) -> Laurent {
    let map = cell.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = map.lock().unwrap().get(&n) {
        return p.clone();
    }
    let p = f(n);
    map.lock().unwrap().insert(n, p.clone());
    p
}

fn cached2(
    cell: &'static Cache2,
    key: (i64, i64),
    f: impl FnOnce((i64, i64)) -> Laurent,
) -> Laurent {
    let map = cell.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = map.lock().unwrap().get(&key) {
        return p.clone();
    }
    let p = f(key);
    map.lock().unwrap().insert(key, p.clone());
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn in_q(p: &Laurent) -> String {
        p.contract_var(4).unwrap().display_var("q")
    }

    #[test]
    fn basic_values() {
        assert_eq!(in_q(&qint_q(3)), "-1 + q^3");
        assert_eq!(
            pochhammer(3),
            (1..=3)
                .map(|i| &Laurent::one() - &Laurent::q_pow(i))
                .product()
        );
        assert_eq!(in_q(&qbinom_q(4, 2)), "1 + q + 2*q^2 + q^3 + q^4");
        assert_eq!(
            falling_bal(3, 3).exact_div(&falling_bal(2, 2)).unwrap(),
            qint_bal(3)
        );
        assert_eq!(
            qnum(3),
            &(&Laurent::v_pow(2) + &Laurent::one()) + &Laurent::v_pow(-2)
        );
        assert_eq!(qnum(-2), -qnum(2));
    }

    #[test]
    fn balanced_factorial_vs_pochhammer() {
        for k in 0..8i64 {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let rhs = pochhammer(k).shift(-k * (k + 1)).scale_i64(sign);
            assert_eq!(qfact_bal(k), rhs, "k = {}", k);
        }
    }

    #[test]
    fn balanced_qnum_is_self_conjugate() {
        for n in 0..10 {
            assert_eq!(qnum(n).conj(), qnum(n));
        }
    }

    #[test]
    fn gaussian_binomial_positivity() {
        for total in 0..=12i64 {
            for n in 0..=total {
                let b = qbinom_q(total, n);
                assert!(b.contract_var(4).is_some());
                assert!(b.min_exp() >= 0);
                assert!(b.terms().iter().all(|(_, c)| !c.is_negative()));
                // value at q = 1 is the ordinary binomial coefficient
                let mut ord = BigInt::from(1);
                for j in 0..n {
                    ord = ord * BigInt::from(total - j) / BigInt::from(j + 1);
                }
                assert_eq!(b.eval_one(), ord);
            }
        }
    }

    #[test]
    fn multinomial_is_symmetric() {
        assert_eq!(qmultinomial_q(&[1, 2, 3]), qmultinomial_q(&[3, 1, 2]));
        assert_eq!(qmultinomial_q(&[2, 2]), qbinom_q(4, 2));
    }
}
