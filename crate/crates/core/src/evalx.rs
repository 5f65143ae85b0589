//! Evaluations of Habiro elements away from roots of unity: rational points
//! modulo `m`, `p`-adic points to finite precision, and values over finite
//! fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::habiro::{to_q_var, HabiroElem};
use crate::ring::{cyclotomic, Base, Laurent, ModPoly};

/// Where a residue lives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Modulus {
    Integer(BigInt),
    PrimePower { p: BigInt, e: u32 },
    Cyclotomic { p: BigInt, r: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    Poly(ModPoly),
}

/// A value together with its modulus and the number of slots that were
/// summed to get it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueValue {
    pub modulus: Modulus,
    pub value: Value,
    pub terms_used: usize,
}

impl ResidueValue {
    pub fn as_int(&self) -> Option<&BigInt> {
        match &self.value {
            Value::Int(v) => Some(v),
            Value::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&ModPoly> {
        match &self.value {
            Value::Poly(v) => Some(v),
            Value::Int(_) => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let modulus = match &self.modulus {
            Modulus::Integer(m) => serde_json::json!({ "type": "integer", "m": m.to_string() }),
            Modulus::PrimePower { p, e } => {
                serde_json::json!({ "type": "prime-power", "p": p.to_string(), "e": e })
            }
            Modulus::Cyclotomic { p, r } => {
                serde_json::json!({ "type": "cyclotomic", "p": p.to_string(), "r": r })
            }
        };
        let value = match &self.value {
            Value::Int(v) => serde_json::Value::String(v.to_string()),
            Value::Poly(v) => v.to_json(),
        };
        serde_json::json!({ "modulus": modulus, "value": value, "terms_used": self.terms_used })
    }
}

impl fmt::Display for ResidueValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Int(v) => write!(f, "{}", v)?,
            Value::Poly(v) => write!(f, "{}", v.display_var("q"))?,
        }
        match &self.modulus {
            Modulus::Integer(m) => write!(f, " (mod {})", m),
            Modulus::PrimePower { p, e } => write!(f, " (mod {}^{})", p, e),
            Modulus::Cyclotomic { p, r } => write!(f, " (mod {}, Phi_{}(q))", p, r),
        }
    }
}

fn mod_inv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    g.gcd.is_one().then(|| g.x.mod_floor(m))
}

/// Value of a polynomial in `q` at `t` modulo `m`, with `tinv = t^{-1}`.
fn eval_at(c: &Laurent, t: &BigInt, tinv: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for (e, k) in c.terms() {
        let base = if e < 0 { tinv } else { t };
        let pw = base.modpow(&BigInt::from(e.unsigned_abs()), m);
        acc = (acc + k * pw).mod_floor(m);
    }
    acc
}

/// `sum_{n < n0} c_n(t) (t)_n mod m`.
fn sum_at(x: &HabiroElem, n0: usize, t: &BigInt, tinv: &BigInt, m: &BigInt) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    let mut poch = BigInt::one() % m;
    for n in 0..n0 {
        let c = to_q_var(x.slot(n))?;
        acc = (acc + eval_at(&c, t, tinv, m) * &poch).mod_floor(m);
        let tn = t.modpow(&BigInt::from(n + 1), m);
        poch = (poch * (BigInt::one() - tn)).mod_floor(m);
    }
    Ok(acc)
}

fn positive(m: &BigInt, what: &str) -> Result<()> {
    if m.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{} must be positive", what)))
    }
}

/// Value at `q = a/b` modulo `m`, for `gcd(m, ab) = 1`.
///
/// With `r` the multiplicative order of `a/b` mod `m`, every `(a/b)_n` with
/// `n >= r` vanishes mod `m`, so the sum stops at `r`.
pub fn eval_rational(x: &HabiroElem, a: &BigInt, b: &BigInt, m: &BigInt) -> Result<ResidueValue> {
    positive(m, "modulus")?;
    if !(a * b).gcd(m).is_one() {
        return Err(Error::NotCoprime(format!("gcd({}, {}·{}) != 1", m, a, b)));
    }
    let modulus = Modulus::Integer(m.clone());
    if m.is_one() {
        return Ok(ResidueValue {
            modulus,
            value: Value::Int(BigInt::zero()),
            terms_used: 0,
        });
    }
    let binv = mod_inv(b, m).expect("b is invertible");
    let t = (a * binv).mod_floor(m);
    let tinv = mod_inv(&t, m).expect("a/b is invertible");
    let mut r = 1usize;
    let mut pw = t.clone();
    while !pw.is_one() {
        pw = (pw * &t).mod_floor(m);
        r += 1;
    }
    if r > x.depth() {
        return Err(Error::DepthExceeded {
            requested: r,
            available: x.depth(),
        });
    }
    Ok(ResidueValue {
        modulus,
        value: Value::Int(sum_at(x, r, &t, &tinv, m)?),
        terms_used: r,
    })
}

fn valuation(mut v: BigInt, p: &BigInt, cap: u32) -> u32 {
    if v.is_zero() {
        return cap;
    }
    let mut k = 0;
    while k < cap && v.is_multiple_of(p) {
        v /= p;
        k += 1;
    }
    k
}

/// Least `n` with `v_p((s)_n) >= e`.
pub fn padic_cutoff(s: &BigInt, p: &BigInt, e: u32) -> Result<usize> {
    if p < &BigInt::from(2) {
        return Err(Error::InvalidInput(format!("{} is not a prime", p)));
    }
    if s.is_multiple_of(p) {
        return Err(Error::NotAUnit(format!("{} is divisible by {}", s, p)));
    }
    let pe = p.pow(e);
    let mut v = 0u32;
    let mut n = 0usize;
    while v < e {
        n += 1;
        let term = (BigInt::one() - s.modpow(&BigInt::from(n), &pe)).mod_floor(&pe);
        v += valuation(term, p, e);
    }
    Ok(n)
}

/// Value at the `p`-adic unit `s`, modulo `p^e`.
pub fn eval_padic(x: &HabiroElem, s: &BigInt, p: &BigInt, e: u32) -> Result<ResidueValue> {
    if e == 0 {
        return Err(Error::InvalidInput("precision must be positive".into()));
    }
    let n0 = padic_cutoff(s, p, e)?;
    if n0 > x.depth() {
        return Err(Error::DepthExceeded {
            requested: n0,
            available: x.depth(),
        });
    }
    let pe = p.pow(e);
    let t = s.mod_floor(&pe);
    let tinv = mod_inv(&t, &pe).expect("s is a unit");
    Ok(ResidueValue {
        modulus: Modulus::PrimePower { p: p.clone(), e },
        value: Value::Int(sum_at(x, n0, &t, &tinv, &pe)?),
        terms_used: n0,
    })
}

fn check_prime(p: &BigInt) -> Result<()> {
    let small = p
        .to_u64()
        .filter(|&v| v >= 2)
        .ok_or_else(|| Error::InvalidInput(format!("{} is not a usable prime", p)))?;
    let mut d = 2u64;
    while d * d <= small {
        if small % d == 0 {
            return Err(Error::InvalidInput(format!("{} is not prime", p)));
        }
        d += 1;
    }
    Ok(())
}

/// Value in `F_p[q]/(Φ_r(q))`, i.e. at every primitive `r`-th root of unity
/// over `F_p` at once.
pub fn modp_value(x: &HabiroElem, p: &BigInt, r: usize) -> Result<ResidueValue> {
    check_prime(p)?;
    if r == 0 {
        return Err(Error::InvalidInput("root order must be positive".into()));
    }
    if !BigInt::from(r).gcd(p).is_one() {
        return Err(Error::NotCoprime(format!("p = {} divides r = {}", p, r)));
    }
    if r > x.depth() {
        return Err(Error::DepthExceeded {
            requested: r,
            available: x.depth(),
        });
    }
    let base = Base::Fp(p.clone());
    let phi = cyclotomic(r as u64);
    let one = ModPoly::reduce(&Laurent::one(), &phi, base.clone())?;
    let q = one.x_like();
    let mut acc = one.zero_like();
    let mut poch = one.clone();
    let mut qn = one.clone();
    for n in 0..r {
        let c = to_q_var(x.slot(n))?;
        let cv = ModPoly::reduce(&c, &phi, base.clone())?;
        acc = acc.add(&cv.mul(&poch));
        qn = qn.mul(&q);
        poch = poch.mul(&one.sub(&qn));
    }
    Ok(ResidueValue {
        modulus: Modulus::Cyclotomic { p: p.clone(), r },
        value: Value::Poly(acc),
        terms_used: r,
    })
}

/// Whether the value is nonzero at every primitive `r`-th root of unity in
/// characteristic `p`.
pub fn modp_nonvanishing(x: &HabiroElem, p: &BigInt, r: usize) -> Result<bool> {
    let v = modp_value(x, p, r)?;
    let g = v.as_poly().expect("polynomial value").gcd_with_modulus()?;
    Ok(g.max_exp() == 0)
}

/// CSV table of `modp_value` over a grid; pairs with `p | r` are skipped.
pub fn modp_scan(x: &HabiroElem, primes: &[u64], orders: &[usize]) -> Result<String> {
    let csv_err = |e: csv::Error| Error::Encoding(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["modulus-type", "p", "r", "value", "nonvanishing"])
        .map_err(csv_err)?;
    for &p in primes {
        let pb = BigInt::from(p);
        for &r in orders {
            if (r as u64).is_multiple_of(p) {
                continue;
            }
            let v = modp_value(x, &pb, r)?;
            let nv = modp_nonvanishing(x, &pb, r)?;
            // coefficients of 1, q, q^2, ... separated by spaces
            let enc: Vec<String> = v
                .as_poly()
                .unwrap()
                .int_coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect();
            w.write_record([
                "cyclotomic".to_string(),
                p.to_string(),
                r.to_string(),
                enc.join(" "),
                nv.to_string(),
            ])
            .map_err(csv_err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Encoding(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Encoding(e.to_string()))
}
