use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::Laurent;

fn cache() -> &'static Mutex<HashMap<u64, Laurent>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Laurent>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial as a polynomial in its own variable
/// (exponent `k` means `q^k`).
///
/// Computed by dividing `q^n - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic(n: u64) -> Laurent {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = &Laurent::x_pow(n as i64) - &Laurent::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p
                .exact_div(&cyclotomic(d))
                .expect("cyclotomic divisor recursion is exact");
        }
    }
    cache().lock().unwrap().insert(n, p.clone());
    p
}

/// `Phi_n(q)` as a polynomial in `u = q^{1/4}`.
pub fn cyclotomic_q(n: u64) -> Laurent {
    cyclotomic(n).expand_var(4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(cyclotomic(1), Laurent::from_i64(0, vec![-1, 1]));
        assert_eq!(cyclotomic(4), Laurent::from_i64(0, vec![1, 0, 1]));
        assert_eq!(cyclotomic(6), Laurent::from_i64(0, vec![1, -1, 1]));
        assert_eq!(cyclotomic(6).display_var("q"), "1 - q + q^2");
    }

    #[test]
    fn divisor_products() {
        for n in 1..=48u64 {
            let prod: Laurent = (1..=n).filter(|d| n % d == 0).map(cyclotomic).product();
            assert_eq!(
                prod,
                &Laurent::x_pow(n as i64) - &Laurent::one(),
                "n = {}",
                n
            );
        }
    }
}
