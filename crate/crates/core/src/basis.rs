//! Bases of the representation ring and their calculus.
//!
//! Every element is a finite combination over one of the bases `V_n`,
//! `P_n`, `P'_n`, `P''_n`, `t̃P'_n` or `S_n` with [`LaurentFrac`]
//! coefficients in `u = q^{1/4}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::ring::qcomb::{falling_bal, qbinom_bal, qfact_bal, qmultinomial_q, qnum};
use crate::ring::{Laurent, LaurentFrac};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisTag {
    V,
    P,
    PPrime,
    PDoublePrime,
    TildePPrime,
    S,
}

impl BasisTag {
    pub fn name(self) -> &'static str {
        match self {
            BasisTag::V => "V",
            BasisTag::P => "P",
            BasisTag::PPrime => "P'",
            BasisTag::PDoublePrime => "P''",
            BasisTag::TildePPrime => "tP'",
            BasisTag::S => "S",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "V" => BasisTag::V,
            "P" => BasisTag::P,
            "P'" => BasisTag::PPrime,
            "P''" => BasisTag::PDoublePrime,
            "tP'" | "t̃P'" => BasisTag::TildePPrime,
            "S" => BasisTag::S,
            other => return Err(Error::UnknownName(format!("basis {}", other))),
        })
    }
}

/// A finitely supported combination over one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct BasisCombo {
    tag: BasisTag,
    terms: BTreeMap<usize, LaurentFrac>,
}

impl BasisCombo {
    pub fn zero(tag: BasisTag) -> Self {
        BasisCombo {
            tag,
            terms: BTreeMap::new(),
        }
    }

    /// The single basis element `tag_n`.
    pub fn basis(tag: BasisTag, n: usize) -> Self {
        let mut c = Self::zero(tag);
        c.terms.insert(n, LaurentFrac::one());
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, LaurentFrac)>>(
        tag: BasisTag,
        terms: I,
    ) -> Self {
        let mut c = Self::zero(tag);
        for (n, x) in terms {
            c.add_term(n, &x);
        }
        c
    }

    pub fn tag(&self) -> BasisTag {
        self.tag
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentFrac)> {
        self.terms.iter().map(|(n, c)| (*n, c))
    }

    pub fn coeff(&self, n: usize) -> LaurentFrac {
        self.terms
            .get(&n)
            .cloned()
            .unwrap_or_else(LaurentFrac::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, n: usize, c: &LaurentFrac) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.get(&n) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if s.is_zero() {
            self.terms.remove(&n);
        } else {
            self.terms.insert(n, s);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let other = other.convert(self.tag)?;
        let mut out = self.clone();
        for (n, c) in other.terms() {
            out.add_term(n, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentFrac) -> Self {
        Self::from_terms(self.tag, self.terms().map(|(n, x)| (n, x * c)))
    }

    /// Drops every index `>= n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::from_terms(
            self.tag,
            self.terms()
                .filter(|(k, _)| *k < n)
                .map(|(k, x)| (k, x.clone())),
        )
    }

    /// Expansion in the `V` basis.
    pub fn to_v(&self) -> Result<Self> {
        if self.tag == BasisTag::V {
            return Ok(self.clone());
        }
        let mut out = Self::zero(BasisTag::V);
        for (n, c) in self.terms() {
            for (i, x) in v_expansion(self.tag, n)?.terms() {
                out.add_term(i, &(c * x));
            }
        }
        Ok(out)
    }

    /// Expansion in the `P` basis.
    pub fn to_p(&self) -> Result<Self> {
        self.convert(BasisTag::P)
    }

    /// Rewrites the combination over another basis.
    pub fn convert(&self, tag: BasisTag) -> Result<Self> {
        if tag == self.tag {
            return Ok(self.clone());
        }
        let v = self.to_v()?;
        if tag == BasisTag::V {
            return Ok(v);
        }
        if tag == BasisTag::S {
            return from_v_to_s(&v);
        }
        let mut p = Self::zero(BasisTag::P);
        for (n, c) in v.terms() {
            for i in 0..=n {
                let b = qbinom_bal((n + i + 1) as i64, 2 * i as i64 + 1);
                p.add_term(i, &c.scale(&b));
            }
        }
        if tag == BasisTag::P {
            return Ok(p);
        }
        // P_n = k_n X_n  for X in {P', P'', t̃P'}
        let mut out = Self::zero(tag);
        for (n, c) in p.terms() {
            let k = match tag {
                BasisTag::PPrime => qfact_bal(n as i64),
                BasisTag::PDoublePrime => falling_bal(2 * n as i64 + 1, 2 * n as i64),
                BasisTag::TildePPrime => {
                    qfact_bal(n as i64).shift((n * (n.saturating_sub(1))) as i64)
                }
                _ => unreachable!(),
            };
            out.add_term(n, &c.scale(&k));
        }
        Ok(out)
    }

    /// Product in the representation ring, returned in the `V` basis.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let a = self.to_v()?;
        let b = other.to_v()?;
        let mut out = Self::zero(BasisTag::V);
        for (m, x) in a.terms() {
            for (n, y) in b.terms() {
                let c = x * y;
                for k in clebsch_gordan(m, n) {
                    out.add_term(k, &c);
                }
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut terms = serde_json::Map::new();
        for (n, c) in self.terms() {
            terms.insert(n.to_string(), c.to_json());
        }
        serde_json::json!({ "basis": self.tag.name(), "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let tag = v
            .get("basis")
            .and_then(|b| b.as_str())
            .ok_or_else(|| Error::Encoding("missing \"basis\"".into()))
            .and_then(BasisTag::parse)?;
        let terms = v
            .get("terms")
            .and_then(|t| t.as_object())
            .ok_or_else(|| Error::Encoding("missing object \"terms\"".into()))?;
        let mut c = Self::zero(tag);
        for (k, x) in terms {
            let n: usize = k
                .parse()
                .map_err(|_| Error::Encoding(format!("bad basis index {:?}", k)))?;
            c.add_term(n, &LaurentFrac::from_json(x)?);
        }
        Ok(c)
    }
}

impl fmt::Debug for BasisCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BasisCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(n, c)| format!("({})*{}_{}", c.to_text(), self.tag.name(), n))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `V_m V_n = V_{|m-n|} + V_{|m-n|+2} + ... + V_{m+n}`.
pub fn clebsch_gordan(m: usize, n: usize) -> impl Iterator<Item = usize> {
    let lo = m.abs_diff(n);
    (lo..=m + n).step_by(2)
}

type ExpCache = Mutex<HashMap<(BasisTag, usize), Arc<BasisCombo>>>;

fn exp_cache() -> &'static ExpCache {
    static C: OnceLock<ExpCache> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `V`-basis expansion of the single basis element `tag_n`.
pub fn v_expansion(tag: BasisTag, n: usize) -> Result<Arc<BasisCombo>> {
    if let Some(c) = exp_cache().lock().unwrap().get(&(tag, n)) {
        return Ok(c.clone());
    }
    let c = Arc::new(compute_v_expansion(tag, n)?);
    exp_cache().lock().unwrap().insert((tag, n), c.clone());
    Ok(c)
}

fn compute_v_expansion(tag: BasisTag, n: usize) -> Result<BasisCombo> {
    let ni = n as i64;
    Ok(match tag {
        BasisTag::V => BasisCombo::basis(BasisTag::V, n),
        BasisTag::P => {
            let mut c = BasisCombo::zero(BasisTag::V);
            for i in 0..=ni {
                let top = &qnum(2 * i + 2) * &qbinom_bal(2 * ni + 1, ni + 1 + i);
                let mut x = top.exact_div(&qnum(ni + i + 2))?;
                if (ni - i) % 2 == 1 {
                    x = -x;
                }
                c.add_term(i as usize, &x.into());
            }
            c
        }
        BasisTag::PPrime | BasisTag::PDoublePrime | BasisTag::TildePPrime => {
            let den = match tag {
                BasisTag::PPrime => qfact_bal(ni),
                BasisTag::PDoublePrime => falling_bal(2 * ni + 1, 2 * ni),
                _ => qfact_bal(ni).shift(ni * (ni - 1).max(0)),
            };
            let inv = LaurentFrac::new(Laurent::one(), den)?;
            v_expansion(BasisTag::P, n)?.scale(&inv)
        }
        BasisTag::S => {
            // S_n = prod_{i=1}^n (V_1^2 - (v^i + v^{-i})^2)
            let mut acc = BasisCombo::basis(BasisTag::V, 0);
            let v1sq = BasisCombo::basis(BasisTag::V, 1).mul(&BasisCombo::basis(BasisTag::V, 1))?;
            for i in 1..=ni {
                let s = &Laurent::v_pow(i) + &Laurent::v_pow(-i);
                let mut f = v1sq.clone();
                f.add_term(0, &(-(&s * &s)).into());
                acc = acc.mul(&f)?;
            }
            acc
        }
    })
}

fn from_v_to_s(v: &BasisCombo) -> Result<BasisCombo> {
    let mut rest = v.clone();
    let mut out = BasisCombo::zero(BasisTag::S);
    while let Some(top) = rest.max_index() {
        if top % 2 == 1 {
            return Err(Error::InvalidInput(
                "only combinations of even V_n lie in the span of the S_n".into(),
            ));
        }
        let c = rest.coeff(top);
        let k = top / 2;
        out.add_term(k, &c);
        let sub = v_expansion(BasisTag::S, k)?.scale(&(-c));
        for (i, x) in sub.terms() {
            rest.add_term(i, x);
        }
    }
    Ok(out)
}

/// `<V_m, V_n> = [(m+1)(n+1)]`.
pub fn pairing_v(m: usize, n: usize) -> Laurent {
    qnum(((m + 1) * (n + 1)) as i64)
}

/// Closed-form pairing of two basis elements, where one is known.
pub fn pairing_fast(a: (BasisTag, usize), b: (BasisTag, usize)) -> Option<LaurentFrac> {
    use BasisTag::*;
    let (m, n) = (a.1 as i64, b.1 as i64);
    match (a.0, b.0) {
        (V, V) => Some(pairing_v(a.1, b.1).into()),
        (P, S) | (S, P) => Some(if m == n {
            falling_bal(2 * m + 1, 2 * m).into()
        } else {
            LaurentFrac::zero()
        }),
        (P, V) if n % 2 == 0 => Some((&qnum(n + 1) * &falling_bal(n / 2 + m, 2 * m)).into()),
        (V, P) if m % 2 == 0 => Some((&qnum(m + 1) * &falling_bal(m / 2 + n, 2 * n)).into()),
        (V, S) => Some(
            falling_bal(m + n + 1, 2 * n + 1)
                .exact_div(&qint_one())
                .ok()?
                .into(),
        ),
        (S, V) => Some(
            falling_bal(m + n + 1, 2 * m + 1)
                .exact_div(&qint_one())
                .ok()?
                .into(),
        ),
        _ => None,
    }
}

fn qint_one() -> Laurent {
    crate::ring::qcomb::qint_bal(1)
}

/// Pairing computed only through the `V` basis.
pub fn pairing_bilinear(x: &BasisCombo, y: &BasisCombo) -> Result<LaurentFrac> {
    let a = x.to_v()?;
    let b = y.to_v()?;
    let mut s = LaurentFrac::zero();
    for (m, c) in a.terms() {
        for (n, d) in b.terms() {
            s = &s + &(c * d).scale(&pairing_v(m, n));
        }
    }
    Ok(s)
}

/// Hopf-link pairing `<x, y>`, using closed forms where available.
pub fn pairing(x: &BasisCombo, y: &BasisCombo) -> Result<LaurentFrac> {
    let mut s = LaurentFrac::zero();
    let mut slow_x = BasisCombo::zero(x.tag);
    for (m, c) in x.terms() {
        let mut all_fast = true;
        let mut part = LaurentFrac::zero();
        for (n, d) in y.terms() {
            match pairing_fast((x.tag, m), (y.tag, n)) {
                Some(p) => part = &part + &(&(c * d) * &p),
                None => {
                    all_fast = false;
                    break;
                }
            }
        }
        if all_fast {
            s = &s + &part;
        } else {
            slow_x.add_term(m, c);
        }
    }
    if !slow_x.is_zero() {
        s = &s + &pairing_bilinear(&slow_x, y)?;
    }
    Ok(s)
}

type CompCache = Mutex<HashMap<(usize, usize), Arc<Vec<Vec<i64>>>>>;

/// Compositions of `n` into `p` nonnegative parts, in lexicographic order.
pub fn compositions(n: usize, p: usize) -> Arc<Vec<Vec<i64>>> {
    static C: OnceLock<CompCache> = OnceLock::new();
    let cache = C.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&(n, p)) {
        return c.clone();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn rec(rest: usize, left: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if left == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if left == 1 {
            cur.push(rest as i64);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=rest {
            cur.push(k as i64);
            rec(rest - k, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, p, &mut cur, &mut out);
    let c = Arc::new(out);
    cache.lock().unwrap().insert((n, p), c.clone());
    c
}

fn f_of(parts: &[i64]) -> i64 {
    let mut s = 0;
    let mut f = 0;
    for &i in &parts[..parts.len().saturating_sub(1)] {
        s += i;
        f += s * s + s;
    }
    f
}

/// Coefficient `ω_{p,n}` of `P'_n` in `ω^p`.
pub fn omega_coeff(p: i64, n: usize) -> Laurent {
    let parts = p.unsigned_abs() as usize;
    let ni = n as i64;
    let mut sum = Laurent::zero();
    for comp in compositions(n, parts).iter() {
        let mult = qmultinomial_q(comp);
        let f = f_of(comp);
        if p >= 0 {
            sum = &sum + &mult.shift(4 * f);
        } else {
            let cross: i64 = {
                let tot: i64 = comp.iter().sum();
                let sq: i64 = comp.iter().map(|x| x * x).sum();
                (tot * tot - sq) / 2
            };
            sum = &sum + &mult.shift(-4 * cross - 4 * f);
        }
    }
    let e = ni * (ni + 3) / 2;
    if p >= 0 {
        sum.shift(2 * e)
    } else {
        let s = sum.shift(-2 * e);
        if n % 2 == 1 {
            -s
        } else {
            s
        }
    }
}

/// `ω^p` in the `P'` basis, keeping indices `< n_max`.
pub fn omega_truncated(p: i64, n_max: usize) -> BasisCombo {
    BasisCombo::from_terms(
        BasisTag::PPrime,
        (0..n_max).map(|n| (n, omega_coeff(p, n).into())),
    )
}

/// `Ω_r = sum_{i=0}^{r-2} [i+1] V_i`.
pub fn omega_r(r: usize) -> Result<BasisCombo> {
    if r < 2 {
        return Err(Error::InvalidInput("Omega_r needs r >= 2".into()));
    }
    Ok(BasisCombo::from_terms(
        BasisTag::V,
        (0..=r - 2).map(|i| (i, qnum(i as i64 + 1).into())),
    ))
}

/// `P'_m P'_n` in the `P'` basis.
pub fn pprime_mul(m: usize, n: usize) -> Result<BasisCombo> {
    let (mi, ni) = (m as i64, n as i64);
    let top = qfact_bal(mi + ni);
    let mut out = BasisCombo::zero(BasisTag::PPrime);
    for i in 0..=mi.min(ni) {
        let den = &(&qfact_bal(i) * &qfact_bal(mi - i)) * &qfact_bal(ni - i);
        out.add_term((mi + ni - i) as usize, &top.exact_div(&den)?.into());
    }
    Ok(out)
}

/// Product of two `P'` combinations, keeping indices `< n_max`.
pub fn pprime_product(x: &BasisCombo, y: &BasisCombo, n_max: usize) -> Result<BasisCombo> {
    let a = x.convert(BasisTag::PPrime)?.truncate(n_max);
    let b = y.convert(BasisTag::PPrime)?.truncate(n_max);
    let mut out = BasisCombo::zero(BasisTag::PPrime);
    for (m, c) in a.terms() {
        for (n, d) in b.terms() {
            if m.max(n) >= n_max {
                continue;
            }
            let cd = c * d;
            for (k, e) in pprime_mul(m, n)?.terms() {
                if k < n_max {
                    out.add_term(k, &(&cd * e));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lf(p: Laurent) -> LaurentFrac {
        p.into()
    }

    #[test]
    fn p1_and_s1() {
        let p1 = BasisCombo::basis(BasisTag::P, 1).to_v().unwrap();
        assert_eq!(p1.coeff(1), LaurentFrac::one());
        assert_eq!(p1.coeff(0), lf(-qnum(2)));
        let s1 = BasisCombo::basis(BasisTag::S, 1).to_v().unwrap();
        assert_eq!(s1.coeff(2), LaurentFrac::one());
        let want = -(&(&Laurent::q_pow(1) + &Laurent::one()) + &Laurent::q_pow(-1));
        assert_eq!(s1.coeff(0), lf(want));
    }

    #[test]
    fn v_to_p_small() {
        let v1 = BasisCombo::basis(BasisTag::V, 1).to_p().unwrap();
        assert_eq!(v1.coeff(0), lf(qnum(2)));
        assert_eq!(v1.coeff(1), LaurentFrac::one());
        let v0 = BasisCombo::basis(BasisTag::V, 0).to_p().unwrap();
        assert_eq!(v0, BasisCombo::basis(BasisTag::P, 0));
    }

    #[test]
    fn s_roundtrip() {
        for n in 0..4 {
            let s = BasisCombo::basis(BasisTag::S, n);
            assert_eq!(s.to_v().unwrap().convert(BasisTag::S).unwrap(), s);
        }
        assert!(BasisCombo::basis(BasisTag::V, 1)
            .convert(BasisTag::S)
            .is_err());
    }

    #[test]
    fn omega_small() {
        assert_eq!(omega_coeff(0, 0), Laurent::one());
        assert!(omega_coeff(0, 3).is_zero());
        for n in 0..6 {
            let e = (n * (n + 3) / 2) as i64;
            assert_eq!(omega_coeff(1, n), Laurent::v_pow(e));
            let m = Laurent::v_pow(-e);
            assert_eq!(omega_coeff(-1, n), if n % 2 == 1 { -m } else { m });
        }
        let w = omega_truncated(1, 3);
        assert_eq!(w.coeff(2), lf(Laurent::v_pow(5)));
    }

    #[test]
    fn pprime_mul_small() {
        let x = pprime_mul(1, 1).unwrap();
        assert_eq!(x.coeff(2), lf(qnum(2)));
        assert_eq!(x.coeff(1), lf(crate::ring::qcomb::qint_bal(2)));
        assert_eq!(
            pprime_mul(0, 4).unwrap(),
            BasisCombo::basis(BasisTag::PPrime, 4)
        );
    }

    #[test]
    fn omega_r_small() {
        assert_eq!(omega_r(2).unwrap(), BasisCombo::basis(BasisTag::V, 0));
        assert_eq!(omega_r(3).unwrap().coeff(1), lf(qnum(2)));
    }

    #[test]
    fn pairing_examples() {
        let v1 = BasisCombo::basis(BasisTag::V, 1);
        assert_eq!(pairing(&v1, &v1).unwrap(), lf(qnum(4)));
        let p2 = BasisCombo::basis(BasisTag::P, 2);
        let s2 = BasisCombo::basis(BasisTag::S, 2);
        let want = falling_bal(5, 4);
        assert_eq!(pairing(&p2, &s2).unwrap(), lf(want));
        assert!(pairing(&BasisCombo::basis(BasisTag::P, 1), &s2)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let w = omega_truncated(-2, 4);
        assert_eq!(BasisCombo::from_json(&w.to_json()).unwrap(), w);
    }
}
