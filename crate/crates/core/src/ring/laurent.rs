//! Laurent polynomials in one variable over the integers.
//!
//! Throughout the crate the variable is `u = q^{1/4}` unless stated otherwise;
//! `v = u^2` and `q = u^4` are reached through [`Laurent::v_pow`] and
//! [`Laurent::q_pow`]. Habiro-ring slots store polynomials in `q` itself and
//! convert with [`Laurent::expand_var`] / [`Laurent::contract_var`].
//!
//! Coefficients are arbitrary precision. Values whose coefficients all fit in
//! an `i64` are stored in a machine-word vector and multiplied with `i128`
//! accumulators; anything larger is promoted to `BigInt` transparently.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Coeffs {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

/// An element of `Z[x, x^{-1}]` in canonical form: the first and last stored
/// coefficients are nonzero, and the zero polynomial has no coefficients and
/// `min == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent {
    min: i64,
    coeffs: Coeffs,
}

const I128_SAFE: u128 = 1u128 << 125;

fn fits_i64(x: i128) -> bool {
    x >= i64::MIN as i128 && x <= i64::MAX as i128
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent {
            min: 0,
            coeffs: Coeffs::Small(Vec::new()),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn constant_big(c: BigInt) -> Self {
        Self::from_big(0, vec![c])
    }

    /// `c * x^e`.
    pub fn monomial(c: i64, e: i64) -> Self {
        Self::from_i64(e, vec![c])
    }

    pub fn monomial_big(c: BigInt, e: i64) -> Self {
        Self::from_big(e, vec![c])
    }

    /// `x^e`.
    pub fn x_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// `v^e = u^{2e}`.
    pub fn v_pow(e: i64) -> Self {
        Self::monomial(1, 2 * e)
    }

    /// `q^e = u^{4e}`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, 4 * e)
    }

    /// Builds `sum_i coeffs[i] x^{min+i}`.
    pub fn from_i64(min: i64, coeffs: Vec<i64>) -> Self {
        let mut p = Laurent {
            min,
            coeffs: Coeffs::Small(coeffs),
        };
        p.normalize();
        p
    }

    pub fn from_big(min: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Laurent {
            min,
            coeffs: Coeffs::Big(coeffs),
        };
        p.normalize();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut c = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, v) in terms {
            c[(e - lo) as usize] += v;
        }
        Self::from_big(lo, c)
    }

    fn normalize(&mut self) {
        match &mut self.coeffs {
            Coeffs::Small(c) => {
                let first = c.iter().position(|x| *x != 0);
                match first {
                    None => {
                        c.clear();
                        self.min = 0;
                    }
                    Some(f) => {
                        let last = c.iter().rposition(|x| *x != 0).unwrap();
                        c.truncate(last + 1);
                        c.drain(..f);
                        self.min += f as i64;
                    }
                }
            }
            Coeffs::Big(c) => {
                let first = c.iter().position(|x| !x.is_zero());
                match first {
                    None => {
                        self.coeffs = Coeffs::Small(Vec::new());
                        self.min = 0;
                        return;
                    }
                    Some(f) => {
                        let last = c.iter().rposition(|x| !x.is_zero()).unwrap();
                        c.truncate(last + 1);
                        c.drain(..f);
                        self.min += f as i64;
                    }
                }
                if c.iter().all(|x| x.to_i64().is_some()) {
                    let small = c.iter().map(|x| x.to_i64().unwrap()).collect();
                    self.coeffs = Coeffs::Small(small);
                }
            }
        }
    }

    fn from_i128(min: i64, acc: Vec<i128>) -> Self {
        if acc.iter().all(|&x| fits_i64(x)) {
            Self::from_i64(min, acc.into_iter().map(|x| x as i64).collect())
        } else {
            Self::from_big(min, acc.into_iter().map(BigInt::from).collect())
        }
    }

    fn big_coeffs(&self) -> Vec<BigInt> {
        match &self.coeffs {
            Coeffs::Small(c) => c.iter().map(|&x| BigInt::from(x)).collect(),
            Coeffs::Big(c) => c.clone(),
        }
    }

    fn len(&self) -> usize {
        match &self.coeffs {
            Coeffs::Small(c) => c.len(),
            Coeffs::Big(c) => c.len(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 0
    }

    pub fn is_one(&self) -> bool {
        self.min == 0 && matches!(&self.coeffs, Coeffs::Small(c) if c.as_slice() == [1])
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn min_exp(&self) -> i64 {
        self.min
    }

    /// Highest exponent with a nonzero coefficient (`min - 1` for zero).
    pub fn max_exp(&self) -> i64 {
        self.min + self.len() as i64 - 1
    }

    /// Number of stored coefficients (span of exponents).
    pub fn span(&self) -> usize {
        self.len()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.min || e > self.max_exp() {
            return BigInt::zero();
        }
        let i = (e - self.min) as usize;
        match &self.coeffs {
            Coeffs::Small(c) => BigInt::from(c[i]),
            Coeffs::Big(c) => c[i].clone(),
        }
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeff(self.max_exp())
    }

    pub fn trailing_coeff(&self) -> BigInt {
        self.coeff(self.min)
    }

    /// Nonzero terms as `(exponent, coefficient)`, increasing in exponent.
    pub fn terms(&self) -> Vec<(i64, BigInt)> {
        match &self.coeffs {
            Coeffs::Small(c) => c
                .iter()
                .enumerate()
                .filter(|(_, x)| **x != 0)
                .map(|(i, x)| (self.min + i as i64, BigInt::from(*x)))
                .collect(),
            Coeffs::Big(c) => c
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (self.min + i as i64, x.clone()))
                .collect(),
        }
    }

    /// Dense coefficient vector starting at `min_exp()`.
    pub fn coeff_vec(&self) -> Vec<BigInt> {
        self.big_coeffs()
    }

    pub fn is_monomial(&self) -> bool {
        self.len() == 1
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Laurent {
            min: self.min + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        match (&self.coeffs, c.to_i64()) {
            (Coeffs::Small(v), Some(ci)) => {
                let acc: Vec<i128> = v.iter().map(|&x| x as i128 * ci as i128).collect();
                Self::from_i128(self.min, acc)
            }
            _ => Self::from_big(
                self.min,
                self.big_coeffs().into_iter().map(|x| x * c).collect(),
            ),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    /// The substitution `x -> x^{-1}`.
    pub fn conj(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let min = -self.max_exp();
        match &self.coeffs {
            Coeffs::Small(c) => Self::from_i64(min, c.iter().rev().copied().collect()),
            Coeffs::Big(c) => Self::from_big(min, c.iter().rev().cloned().collect()),
        }
    }

    /// The substitution `x -> x^k` for `k >= 1`.
    pub fn expand_var(&self, k: i64) -> Self {
        assert!(k >= 1);
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        Self::from_terms(self.terms().into_iter().map(|(e, c)| (e * k, c)))
    }

    /// Inverse of [`expand_var`](Self::expand_var): returns `p` with
    /// `p(x^k) = self`, or `None` when some exponent is not divisible by `k`.
    pub fn contract_var(&self, k: i64) -> Option<Self> {
        assert!(k >= 1);
        let terms = self.terms();
        if terms.iter().any(|(e, _)| e.rem_euclid(k) != 0) {
            return None;
        }
        Some(Self::from_terms(terms.into_iter().map(|(e, c)| (e / k, c))))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal derivative `d/dx`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms()
                .into_iter()
                .map(|(e, c)| (e - 1, c * BigInt::from(e))),
        )
    }

    /// gcd of the coefficients (nonnegative; 0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in self.terms() {
            g = g.gcd(&c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `c`, failing if any division is inexact.
    pub fn div_scalar(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = Vec::with_capacity(self.len());
        for x in self.big_coeffs() {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NonExactDivision(format!("{} by scalar {}", self, c)));
            }
            out.push(q);
        }
        Ok(Self::from_big(self.min, out))
    }

    /// Exact division in `Z[x, x^{-1}]`.
    ///
    /// Returns `c` with `self = d * c`, or `NonExactDivision` when no such
    /// Laurent polynomial exists.
    pub fn exact_div(&self, d: &Laurent) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if d.is_monomial() {
            let c = d.leading_coeff();
            return Ok(self.div_scalar(&c)?.shift(-d.min));
        }
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.coeffs, &d.coeffs) {
            if let Some(r) = Self::exact_div_small(a, b) {
                return match r {
                    Some(q) => Ok(Self::from_i64(self.min - d.min, q)),
                    None => Err(Error::NonExactDivision(format!("{} by {}", self, d))),
                };
            }
        }
        let mut rem = self.big_coeffs();
        let den = d.big_coeffs();
        let lead = den.last().unwrap().clone();
        if rem.len() < den.len() {
            return Err(Error::NonExactDivision(format!("{} by {}", self, d)));
        }
        let qlen = rem.len() - den.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + den.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::NonExactDivision(format!("{} by {}", self, d)));
            }
            for (j, dj) in den.iter().enumerate() {
                if !dj.is_zero() {
                    rem[i + j] -= &qc * dj;
                }
            }
            quot[i] = qc;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return Err(Error::NonExactDivision(format!("{} by {}", self, d)));
        }
        Ok(Self::from_big(self.min - d.min, quot))
    }

    /// Remainder of an ordinary polynomial (`min_exp() >= 0`) on division by
    /// a polynomial `f` with leading coefficient `±1`.
    pub fn rem_monic(&self, f: &Laurent) -> Laurent {
        assert!(self.min_exp() >= 0 && f.min_exp() >= 0 && !f.is_zero());
        let lead = f.leading_coeff();
        assert!(
            lead.abs().is_one(),
            "rem_monic needs a leading coefficient of ±1"
        );
        let df = f.max_exp();
        if self.is_zero() || self.max_exp() < df {
            return self.clone();
        }
        let fc = f.big_coeffs();
        let fmin = f.min as usize;
        let mut r: Vec<BigInt> = vec![BigInt::zero(); (self.max_exp() + 1) as usize];
        for (e, c) in self.terms() {
            r[e as usize] = c;
        }
        let neg_lead = lead.is_negative();
        for top in (df as usize..r.len()).rev() {
            if r[top].is_zero() {
                continue;
            }
            let mut c = std::mem::take(&mut r[top]);
            if neg_lead {
                c = -c;
            }
            let off = top - df as usize;
            for (j, fj) in fc.iter().enumerate().take(fc.len() - 1) {
                if !fj.is_zero() {
                    r[off + fmin + j] -= &c * fj;
                }
            }
        }
        r.truncate(df as usize);
        Self::from_big(0, r)
    }

    /// `Some(Some(q))` exact, `Some(None)` inexact, `None` overflow (retry big).
    fn exact_div_small(a: &[i64], b: &[i64]) -> Option<Option<Vec<i64>>> {
        if a.len() < b.len() {
            return Some(None);
        }
        let mut rem: Vec<i128> = a.iter().map(|&x| x as i128).collect();
        let lead = *b.last().unwrap() as i128;
        let qlen = a.len() - b.len() + 1;
        let mut quot = vec![0i64; qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + b.len() - 1];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return Some(None);
            }
            let qc = top / lead;
            if !fits_i64(qc) {
                return None;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    let prod = qc.checked_mul(bj as i128)?;
                    rem[i + j] = rem[i + j].checked_sub(prod)?;
                    if rem[i + j].unsigned_abs() > I128_SAFE {
                        return None;
                    }
                }
            }
            quot[i] = qc as i64;
        }
        if rem.iter().any(|&x| x != 0) {
            return Some(None);
        }
        Some(Some(quot))
    }

    /// Evaluates at an integer point given as a residue computation callback.
    pub fn map_coeffs<F: FnMut(&BigInt) -> BigInt>(&self, f: F) -> Self {
        Self::from_big(self.min, self.big_coeffs().iter().map(f).collect())
    }

    fn max_abs_small(c: &[i64]) -> u128 {
        c.iter()
            .map(|x| x.unsigned_abs() as u128)
            .max()
            .unwrap_or(0)
    }

    fn mul_impl(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let min = self.min + other.min;
        let n = self.len() + other.len() - 1;
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.coeffs, &other.coeffs) {
            let nnz_a = a.iter().filter(|x| **x != 0).count() as u128;
            let nnz_b = b.iter().filter(|x| **x != 0).count() as u128;
            let bound = Self::max_abs_small(a)
                .saturating_mul(Self::max_abs_small(b))
                .saturating_mul(nnz_a.min(nnz_b));
            if bound < I128_SAFE {
                let mut acc = vec![0i128; n];
                let (short, long) = if nnz_a <= nnz_b { (a, b) } else { (b, a) };
                let long_nz: Vec<(usize, i128)> = long
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| **x != 0)
                    .map(|(i, x)| (i, *x as i128))
                    .collect();
                for (i, &x) in short.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    let x = x as i128;
                    for &(j, y) in &long_nz {
                        acc[i + j] += x * y;
                    }
                }
                return Self::from_i128(min, acc);
            }
        }
        let a = self.big_coeffs();
        let b = other.big_coeffs();
        let mut acc = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    acc[i + j] += x * y;
                }
            }
        }
        Self::from_big(min, acc)
    }

    fn add_impl(&self, other: &Laurent, negate_other: bool) -> Laurent {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate_other {
                -other.clone()
            } else {
                other.clone()
            };
        }
        let min = self.min.min(other.min);
        let max = self.max_exp().max(other.max_exp());
        let n = (max - min + 1) as usize;
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&self.coeffs, &other.coeffs) {
            let mut acc = vec![0i128; n];
            let oa = (self.min - min) as usize;
            for (i, &x) in a.iter().enumerate() {
                acc[oa + i] += x as i128;
            }
            let ob = (other.min - min) as usize;
            for (i, &y) in b.iter().enumerate() {
                if negate_other {
                    acc[ob + i] -= y as i128;
                } else {
                    acc[ob + i] += y as i128;
                }
            }
            return Self::from_i128(min, acc);
        }
        let mut acc = vec![BigInt::zero(); n];
        let oa = (self.min - min) as usize;
        for (i, x) in self.big_coeffs().into_iter().enumerate() {
            acc[oa + i] += x;
        }
        let ob = (other.min - min) as usize;
        for (i, y) in other.big_coeffs().into_iter().enumerate() {
            if negate_other {
                acc[ob + i] -= y;
            } else {
                acc[ob + i] += y;
            }
        }
        Self::from_big(min, acc)
    }

    /// `self += other`, reusing the storage of `self` when the support of
    /// `other` fits inside it.
    pub fn add_assign_ref(&mut self, other: &Laurent) {
        let (min, len) = (self.min, self.len() as i64);
        if let (Coeffs::Small(a), Coeffs::Small(b)) = (&mut self.coeffs, &other.coeffs) {
            if len > 0 && other.min >= min && other.min + b.len() as i64 <= min + len {
                let off = (other.min - min) as usize;
                let dst = &mut a[off..off + b.len()];
                if dst.iter().zip(b).all(|(x, y)| x.checked_add(*y).is_some()) {
                    for (x, y) in dst.iter_mut().zip(b) {
                        *x += *y;
                    }
                    self.normalize();
                    return;
                }
            }
        }
        *self = &*self + other;
    }

    /// `self += a * b` without materializing intermediate clones of `self`.
    pub fn add_product(&mut self, a: &Laurent, b: &Laurent) {
        let p = a * b;
        *self = &*self + &p;
    }

    /// Sum of coefficients, i.e. the value at `x = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms().into_iter().map(|(_, c)| c).sum()
    }

    /// Value at an integer point `x = t` (requires `t != 0` when negative
    /// exponents occur); returned as an exact rational numerator/denominator.
    pub fn eval_int(&self, t: &BigInt) -> (BigInt, BigInt) {
        let mut num = BigInt::zero();
        let shift = if self.min < 0 { -self.min } else { 0 };
        for (e, c) in self.terms() {
            num += c * t.pow((e + shift) as u32);
        }
        (num, t.pow(shift as u32))
    }

    /// Compares by (min, coefficients); used only to give deterministic
    /// orderings to collections of polynomials.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.min
            .cmp(&other.min)
            .then_with(|| self.big_coeffs().cmp(&other.big_coeffs()))
    }

    /// True when the leading coefficient is positive (zero counts as positive).
    pub fn leading_positive(&self) -> bool {
        self.is_zero() || self.leading_coeff().is_positive()
    }

    /// Renders the polynomial with the given variable name, e.g.
    /// `3*q^-1 + 1 - 2*q^2`.
    pub fn display_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, e),
            };
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", a, mono));
            }
        }
        out
    }

    /// Canonical JSON encoding `{"var":..,"min":..,"coeffs":[..]}`.
    /// Coefficients that do not fit in an `i64` are written as strings.
    pub fn to_json(&self, var: &str) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = match &self.coeffs {
            Coeffs::Small(c) => c.iter().map(|&x| serde_json::Value::from(x)).collect(),
            Coeffs::Big(c) => c
                .iter()
                .map(|x| match x.to_i64() {
                    Some(s) => serde_json::Value::from(s),
                    None => serde_json::Value::from(x.to_string()),
                })
                .collect(),
        };
        serde_json::json!({ "var": var, "min": self.min, "coeffs": coeffs })
    }

    /// Parses the JSON encoding; returns the polynomial and its variable name.
    pub fn from_json(v: &serde_json::Value) -> Result<(Self, String)> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Encoding("polynomial must be a JSON object".into()))?;
        let var = obj
            .get("var")
            .and_then(|x| x.as_str())
            .ok_or_else(|| Error::Encoding("missing \"var\"".into()))?
            .to_string();
        let min = obj
            .get("min")
            .and_then(|x| x.as_i64())
            .ok_or_else(|| Error::Encoding("missing integer \"min\"".into()))?;
        let arr = obj
            .get("coeffs")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Encoding("missing array \"coeffs\"".into()))?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for c in arr {
            let b = if let Some(i) = c.as_i64() {
                BigInt::from(i)
            } else if let Some(s) = c.as_str() {
                s.parse::<BigInt>()
                    .map_err(|e| Error::Encoding(format!("bad coefficient {:?}: {}", s, e)))?
            } else {
                return Err(Error::Encoding(format!("bad coefficient {}", c)));
            };
            coeffs.push(b);
        }
        Ok((Self::from_big(min, coeffs), var))
    }
}

impl Default for Laurent {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("u"))
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({})", self.display_var("u"))
    }
}

impl<'a> Add<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        self.mul_impl(rhs)
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, rhs: Laurent) -> Laurent {
        &self + &rhs
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        &self - &rhs
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        let min = self.min;
        match self.coeffs {
            Coeffs::Small(c) => {
                if c.contains(&i64::MIN) {
                    Laurent::from_big(min, c.into_iter().map(|x| -BigInt::from(x)).collect())
                } else {
                    Laurent::from_i64(min, c.into_iter().map(|x| -x).collect())
                }
            }
            Coeffs::Big(c) => Laurent::from_big(min, c.into_iter().map(|x| -x).collect()),
        }
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -self.clone()
    }
}

impl std::iter::Sum for Laurent {
    fn sum<I: Iterator<Item = Laurent>>(iter: I) -> Laurent {
        iter.fold(Laurent::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for Laurent {
    fn product<I: Iterator<Item = Laurent>>(iter: I) -> Laurent {
        iter.fold(Laurent::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Laurent {
        Laurent::q_pow(1)
    }

    #[test]
    fn difference_of_squares() {
        let a = &Laurent::x_pow(1) - &Laurent::x_pow(-1);
        let b = &Laurent::x_pow(1) + &Laurent::x_pow(-1);
        assert_eq!(&a * &b, &Laurent::x_pow(2) - &Laurent::x_pow(-2));
    }

    #[test]
    fn additive_identity() {
        let a = Laurent::from_i64(-3, vec![1, 0, 5, -2]);
        assert_eq!(&a + &Laurent::zero(), a);
    }

    #[test]
    fn pochhammer_two_expansion() {
        let one = Laurent::one();
        let p = &(&one - &q()) * &(&one - &Laurent::q_pow(2));
        // 1 - u^4 - u^8 + u^12
        let expect = Laurent::from_terms(vec![
            (0, 1.into()),
            (4, (-1).into()),
            (8, (-1).into()),
            (12, 1.into()),
        ]);
        assert_eq!(p, expect);
    }

    #[test]
    fn exact_division_examples() {
        let one = Laurent::one();
        let num = &Laurent::q_pow(4) - &one;
        let den = &q() - &one;
        let expect = Laurent::q_pow(3) + Laurent::q_pow(2) + q() + one.clone();
        assert_eq!(num.exact_div(&den).unwrap(), expect);
        let num = &Laurent::q_pow(2) - &one;
        let den = &q() + &one;
        assert_eq!(num.exact_div(&den).unwrap(), &q() - &one);
    }

    #[test]
    fn nonexact_division_is_an_error() {
        let num = &Laurent::q_pow(2) + &Laurent::one();
        let den = &Laurent::q_pow(1) - &Laurent::one();
        assert!(matches!(
            num.exact_div(&den),
            Err(Error::NonExactDivision(_))
        ));
        assert!(matches!(
            Laurent::from_i64(0, vec![3]).exact_div(&Laurent::constant(2)),
            Err(Error::NonExactDivision(_))
        ));
    }

    #[test]
    fn promotion_to_big_and_back() {
        let big = Laurent::from_i64(0, vec![i64::MAX, i64::MAX]);
        let sq = &big * &big;
        assert_eq!(
            sq.coeff(1),
            BigInt::from(i64::MAX) * BigInt::from(i64::MAX) * 2
        );
        let back = sq.exact_div(&big).unwrap();
        assert_eq!(back, big);
        let diff = &sq - &sq;
        assert!(diff.is_zero());
    }

    #[test]
    fn conj_and_contract() {
        let p = &q() + &Laurent::one();
        assert_eq!(p.conj(), &Laurent::q_pow(-1) + &Laurent::one());
        assert_eq!(p.contract_var(4).unwrap(), Laurent::from_i64(0, vec![1, 1]));
        assert!(Laurent::x_pow(2).contract_var(4).is_none());
    }

    #[test]
    fn json_roundtrip() {
        let p = Laurent::from_i64(-2, vec![1, 0, 3]);
        let j = p.to_json("u");
        assert_eq!(j.to_string(), r#"{"coeffs":[1,0,3],"min":-2,"var":"u"}"#);
        let (back, var) = Laurent::from_json(&j).unwrap();
        assert_eq!(back, p);
        assert_eq!(var, "u");
    }
}
