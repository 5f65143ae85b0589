//! Truncated elements of the Habiro ring, the completion of `Z[q]` along the
//! ideals generated by `(q)_n`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::qcomb::pochhammer;
use crate::ring::{cyclotomic, Base, Laurent, ModPoly};

/// `sum_n c_n(q) (q)_n`, known modulo `(q)_depth`.
///
/// Coefficients are Laurent polynomials in `u` that only involve powers of
/// `q = u^4`. The representation is not unique; compare with
/// [`HabiroElem::equals_at_depth`].
#[derive(Clone, Debug)]
pub struct HabiroElem {
    depth: usize,
    terms: Vec<Laurent>,
}

/// Checks that `p` only involves integer powers of `q` and returns it as a
/// polynomial in `q`.
pub fn to_q_var(p: &Laurent) -> Result<Laurent> {
    p.contract_var(4)
        .ok_or_else(|| Error::NotInQ(p.display_var("u")))
}

/// Default truncation depth used throughout the crate.
pub const DEFAULT_DEPTH: usize = 10;

impl HabiroElem {
    /// Builds an element from slot coefficients; slots at or beyond `depth`
    /// are dropped since they vanish modulo `(q)_depth`.
    pub fn from_terms(mut terms: Vec<Laurent>, depth: usize) -> Result<Self> {
        assert!(depth >= 1, "depth must be positive");
        for t in &terms {
            to_q_var(t)?;
        }
        terms.truncate(depth);
        terms.resize(depth, Laurent::zero());
        Ok(HabiroElem { depth, terms })
    }

    pub fn from_polynomial(p: Laurent, depth: usize) -> Result<Self> {
        Self::from_terms(vec![p], depth)
    }

    pub fn constant(c: i64, depth: usize) -> Self {
        Self::from_polynomial(Laurent::constant(c), depth).unwrap()
    }

    pub fn one(depth: usize) -> Self {
        Self::constant(1, depth)
    }

    pub fn zero(depth: usize) -> Self {
        Self::constant(0, depth)
    }

    /// The element `(q)_n` itself.
    pub fn pochhammer_elem(n: usize, depth: usize) -> Self {
        let mut t = vec![Laurent::zero(); n + 1];
        t[n] = Laurent::one();
        Self::from_terms(t, depth).unwrap()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn terms(&self) -> &[Laurent] {
        &self.terms
    }

    pub fn slot(&self, n: usize) -> &Laurent {
        &self.terms[n]
    }

    /// Same element viewed at a smaller depth.
    pub fn truncate(&self, depth: usize) -> Result<Self> {
        if depth > self.depth {
            return Err(Error::DepthExceeded {
                requested: depth,
                available: self.depth,
            });
        }
        Self::from_terms(self.terms.clone(), depth)
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.depth.min(other.depth);
        let terms = (0..d).map(|n| &self.terms[n] + &other.terms[n]).collect();
        HabiroElem { depth: d, terms }
    }

    pub fn neg(&self) -> Self {
        HabiroElem {
            depth: self.depth,
            terms: self.terms.iter().map(|t| -t).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product using `(q)_m (q)_n = (q)_max * (q)_min`.
    pub fn mul(&self, other: &Self) -> Self {
        let d = self.depth.min(other.depth);
        let mut terms = vec![Laurent::zero(); d];
        for m in 0..d {
            if self.terms[m].is_zero() {
                continue;
            }
            for n in 0..d {
                if other.terms[n].is_zero() {
                    continue;
                }
                let hi = m.max(n);
                let lo = m.min(n);
                let p = &(&self.terms[m] * &other.terms[n]) * &pochhammer(lo as i64);
                terms[hi] = &terms[hi] + &p;
            }
        }
        HabiroElem { depth: d, terms }
    }

    /// Multiplies every slot by a Laurent polynomial in `q`.
    pub fn scale(&self, c: &Laurent) -> Result<Self> {
        to_q_var(c)?;
        Ok(HabiroElem {
            depth: self.depth,
            terms: self.terms.iter().map(|t| t * c).collect(),
        })
    }

    /// `sum_{n<d} c_n (q)_n` as a Laurent polynomial in `u`.
    pub fn partial_sum(&self, d: usize) -> Result<Laurent> {
        if d > self.depth {
            return Err(Error::DepthExceeded {
                requested: d,
                available: self.depth,
            });
        }
        Ok((0..d)
            .filter(|&n| !self.terms[n].is_zero())
            .map(|n| &self.terms[n] * &pochhammer(n as i64))
            .sum())
    }

    /// Canonical representative of the class in `Z[q]/((q)_d)`: a polynomial
    /// in `q` with nonnegative exponents and degree below `d(d+1)/2`, returned
    /// as a Laurent polynomial in `u`.
    pub fn reduce(&self, d: usize) -> Result<Laurent> {
        let s = to_q_var(&self.partial_sum(d)?)?;
        if d == 0 {
            return Ok(Laurent::zero());
        }
        let f = pochhammer(d as i64).contract_var(4).unwrap();
        Ok(reduce_mod_poch(&s, &f).expand_var(4))
    }

    pub fn equals_at_depth(&self, other: &Self, d: usize) -> Result<bool> {
        let avail = self.depth.min(other.depth);
        if d > avail {
            return Err(Error::DepthExceeded {
                requested: d,
                available: avail,
            });
        }
        Ok(self.sub(other).reduce(d)?.is_zero())
    }

    /// Image in `Z[q]/(Phi_r(q))`, i.e. the value at a primitive `r`-th root
    /// of unity. Only slots `n < r` contribute.
    pub fn eval_root(&self, r: usize) -> Result<ModPoly> {
        if r == 0 {
            return Err(Error::InvalidInput("root order must be positive".into()));
        }
        if r > self.depth {
            return Err(Error::DepthExceeded {
                requested: r,
                available: self.depth,
            });
        }
        let s = to_q_var(&self.partial_sum(r)?)?;
        ModPoly::reduce(
            &fold_exponents(&s, r as i64),
            &cyclotomic(r as u64),
            Base::Z,
        )
    }

    /// Expansion in powers of `h = q - ζ` around a primitive `r`-th root of
    /// unity `ζ`, to order `d`. Coefficients live in `Z[x]/(Phi_r(x))`.
    pub fn taylor(&self, r: usize, d: usize) -> Result<Vec<ModPoly>> {
        if r == 0 {
            return Err(Error::InvalidInput("root order must be positive".into()));
        }
        let need = r * d;
        if need > self.depth {
            return Err(Error::DepthExceeded {
                requested: need,
                available: self.depth,
            });
        }
        let ser = SeriesRing::new(r as i64, d);
        let mut total = ser.zero();
        let mut poch = ser.one();
        for n in 0..need {
            let c = to_q_var(&self.terms[n])?;
            if !c.is_zero() {
                let cs = ser.eval(&c);
                total = ser.add(&total, &ser.mul(&cs, &poch));
            }
            if n + 1 < need {
                let qn = ser.q_pow_pos(n as i64 + 1);
                let one_minus = ser.sub(&ser.one(), &qn);
                poch = ser.mul(&poch, &one_minus);
            }
        }
        let phi = cyclotomic(r as u64);
        total
            .into_iter()
            .map(|c| ModPoly::reduce(&c, &phi, Base::Z))
            .collect()
    }

    /// `d/dq`, returned at depth `floor(depth/2)` (where it is well defined
    /// because the derivative of `(q)_{2n}` lies in `(q)_n Z[q]`).
    pub fn derivative(&self) -> Result<Self> {
        let out = self.depth / 2;
        if out == 0 {
            return Err(Error::DepthExceeded {
                requested: 2,
                available: self.depth,
            });
        }
        let mut terms = vec![Laurent::zero(); out];
        for n in 0..self.depth {
            let slot = n / 2;
            if slot >= out || self.terms[n].is_zero() {
                continue;
            }
            let c = to_q_var(&self.terms[n])?;
            let p = pochhammer(n as i64).contract_var(4).unwrap();
            let base = pochhammer(slot as i64).contract_var(4).unwrap();
            let t = &(&c.derivative() * &p) + &(&c * &p.derivative());
            let t = t.exact_div(&base)?;
            terms[slot] = &terms[slot] + &t.expand_var(4);
        }
        Ok(HabiroElem { depth: out, terms })
    }

    /// Largest `k <= kmax` such that `Phi_n(q)^k` divides the element, read off
    /// from the leading zero coefficients of the expansion around `ζ_n`.
    pub fn phi_order(&self, n: usize, kmax: usize) -> Result<usize> {
        let t = self.taylor(n, kmax)?;
        Ok(t.iter().take_while(|c| c.is_zero()).count())
    }

    /// Element for the orientation-reversed manifold: `q -> q^{-1}` on every
    /// slot, using `(q^{-1})_n = (-1)^n q^{-n(n+1)/2} (q)_n`.
    pub fn mirror(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(n, c)| {
                let n = n as i64;
                let s = c.conj().shift(-2 * n * (n + 1));
                if n % 2 == 1 {
                    -s
                } else {
                    s
                }
            })
            .collect();
        HabiroElem {
            depth: self.depth,
            terms,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self.terms.iter().map(|t| t.to_json("u")).collect();
        serde_json::json!({ "depth": self.depth, "terms": terms })
    }

    /// Accepts slot polynomials in either `u` or `q`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let depth =
            v.get("depth")
                .and_then(|d| d.as_u64())
                .ok_or_else(|| Error::Encoding("missing \"depth\"".into()))? as usize;
        if depth == 0 {
            return Err(Error::Encoding("depth must be positive".into()));
        }
        let arr = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| Error::Encoding("missing \"terms\"".into()))?;
        let mut terms = Vec::with_capacity(arr.len());
        for t in arr {
            let (p, var) = Laurent::from_json(t)?;
            terms.push(match var.as_str() {
                "u" => p,
                "q" => p.expand_var(4),
                "v" => p.expand_var(2),
                other => return Err(Error::Encoding(format!("unknown variable {:?}", other))),
            });
        }
        Self::from_terms(terms, depth)
    }
}

impl fmt::Display for HabiroElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.terms.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cq = c.contract_var(4).unwrap().display_var("q");
            if n == 0 {
                write!(f, "({})", cq)?;
            } else {
                write!(f, "({})*(q)_{}", cq, n)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, "  [mod (q)_{}]", self.depth)
    }
}

/// Reduces a Laurent polynomial in `q` modulo `f = (q)_d`, eliminating
/// negative powers with `q^{-1} = -g` where `f = 1 + q g`.
fn reduce_mod_poch(s: &Laurent, f: &Laurent) -> Laurent {
    if s.is_zero() {
        return Laurent::zero();
    }
    let k = s.min_exp();
    let mut p = s.shift(-k).rem_monic(f);
    if k < 0 {
        let g = (f - &Laurent::one()).shift(-1);
        let qinv = (-g).rem_monic(f);
        for _ in 0..(-k) {
            p = (&p * &qinv).rem_monic(f);
        }
    } else if k > 0 {
        for _ in 0..k {
            p = p.shift(1).rem_monic(f);
        }
    }
    p
}

/// Replaces every exponent by its residue modulo `r` (valid whenever
/// `q^r = 1`).
pub(crate) fn fold_exponents(s: &Laurent, r: i64) -> Laurent {
    Laurent::from_terms(s.terms().into_iter().map(|(e, c)| (e.rem_euclid(r), c)))
}

/// Truncated power series in `h` with coefficients in `Z[x]/(Phi_r)`, used
/// for the substitution `q = x + h`.
struct SeriesRing {
    r: i64,
    d: usize,
    phi: Laurent,
}

type Series = Vec<Laurent>;

impl SeriesRing {
    fn new(r: i64, d: usize) -> Self {
        SeriesRing {
            r,
            d,
            phi: cyclotomic(r as u64),
        }
    }

    fn red(&self, p: &Laurent) -> Laurent {
        if p.is_zero() {
            return Laurent::zero();
        }
        let p = fold_exponents(p, self.r);
        p.rem_monic(&self.phi)
    }

    fn zero(&self) -> Series {
        vec![Laurent::zero(); self.d]
    }

    fn one(&self) -> Series {
        let mut s = self.zero();
        if self.d > 0 {
            s[0] = Laurent::one();
        }
        s
    }

    fn add(&self, a: &Series, b: &Series) -> Series {
        a.iter().zip(b).map(|(x, y)| self.red(&(x + y))).collect()
    }

    fn sub(&self, a: &Series, b: &Series) -> Series {
        a.iter().zip(b).map(|(x, y)| self.red(&(x - y))).collect()
    }

    fn mul(&self, a: &Series, b: &Series) -> Series {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(self.d - i) {
                if !y.is_zero() {
                    out[i + j] = &out[i + j] + &(x * y);
                }
            }
        }
        out.iter().map(|c| self.red(c)).collect()
    }

    /// `(x + h)^n = sum_j binom(n, j) x^{n-j} h^j` for `n >= 0`.
    fn q_pow_pos(&self, n: i64) -> Series {
        let mut s = self.zero();
        let mut c = vec![BigInt::from(1)];
        for j in 1..self.d {
            let prev = c[j - 1].clone();
            c.push(prev * BigInt::from(n - j as i64 + 1) / BigInt::from(j as i64));
        }
        for (j, cj) in c.into_iter().enumerate().take(self.d) {
            if !cj.is_zero() {
                s[j] = self.red(&Laurent::monomial_big(cj, n - j as i64));
            }
        }
        s
    }

    /// `(x + h)^{-1} = sum_j (-1)^j x^{-j-1} h^j`.
    fn q_inv(&self) -> Series {
        (0..self.d)
            .map(|j| {
                let c = if j % 2 == 0 { 1 } else { -1 };
                self.red(&Laurent::monomial(c, -(j as i64) - 1))
            })
            .collect()
    }

    /// Multiplication by `x + h`.
    fn mul_q(&self, s: &Series) -> Series {
        (0..self.d)
            .map(|j| {
                let mut t = s[j].shift(1);
                if j > 0 {
                    t = &t + &s[j - 1];
                }
                self.red(&t)
            })
            .collect()
    }

    /// Value of a Laurent polynomial in `q` at `q = x + h`.
    fn eval(&self, c: &Laurent) -> Series {
        let mut pos = self.zero();
        if c.max_exp() >= 0 {
            for e in (0..=c.max_exp()).rev() {
                pos = self.mul_q(&pos);
                let a = c.coeff(e);
                if !a.is_zero() && self.d > 0 {
                    pos[0] = self.red(&(&pos[0] + &Laurent::constant_big(a)));
                }
            }
        }
        if c.min_exp() < 0 {
            let qinv = self.q_inv();
            let mut neg = self.zero();
            // Horner in q^{-1}, starting from the most negative exponent
            for e in c.min_exp()..0 {
                let a = c.coeff(e);
                if !a.is_zero() && self.d > 0 {
                    neg[0] = self.red(&(&neg[0] + &Laurent::constant_big(a)));
                }
                neg = self.mul(&neg, &qinv);
            }
            pos = self.add(&pos, &neg);
        }
        pos
    }
}

/// Helper used by tests and callers that want an integer value of a residue.
pub fn as_integer(m: &ModPoly) -> Option<BigInt> {
    m.as_constant()
        .filter(|c| c.is_integer())
        .map(|c| c.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(coeffs: &[i64], min: i64) -> Laurent {
        Laurent::from_i64(min, coeffs.to_vec()).expand_var(4)
    }

    #[test]
    fn not_in_q() {
        assert!(matches!(
            HabiroElem::from_polynomial(Laurent::x_pow(1), 4),
            Err(Error::NotInQ(_))
        ));
        assert!(HabiroElem::from_polynomial(Laurent::q_pow(-1), 4).is_ok());
    }

    #[test]
    fn product_absorbs_smaller_index() {
        let a = HabiroElem::pochhammer_elem(1, 5);
        let b = HabiroElem::pochhammer_elem(2, 5);
        let p = a.mul(&b);
        assert_eq!(p.slot(2), &qp(&[1, -1], 0));
        assert!(p.slot(0).is_zero() && p.slot(1).is_zero());
    }

    #[test]
    fn reductions() {
        for d in 1..6 {
            assert_eq!(HabiroElem::one(8).reduce(d).unwrap(), Laurent::one());
            assert!(HabiroElem::pochhammer_elem(d, 8)
                .reduce(d)
                .unwrap()
                .is_zero());
        }
        let x = HabiroElem::from_polynomial(Laurent::q_pow(-1), 3).unwrap();
        assert_eq!(x.reduce(1).unwrap(), Laurent::one());
        let one = HabiroElem::one(3);
        let q = HabiroElem::from_polynomial(Laurent::q_pow(1), 3).unwrap();
        assert!(one.equals_at_depth(&q, 1).unwrap());
        assert!(!one.equals_at_depth(&q, 2).unwrap());
        assert!(matches!(one.reduce(4), Err(Error::DepthExceeded { .. })));
        // q^{-1} times q reduces to 1 at every depth
        let qi = HabiroElem::from_polynomial(Laurent::q_pow(-1), 6).unwrap();
        let qq = HabiroElem::from_polynomial(Laurent::q_pow(1), 6).unwrap();
        for d in 1..=6 {
            assert_eq!(qi.mul(&qq).reduce(d).unwrap(), Laurent::one());
        }
    }

    #[test]
    fn reduction_degree_bound() {
        let x = HabiroElem::from_polynomial(Laurent::q_pow(40) - Laurent::q_pow(-7), 6).unwrap();
        for d in 1..=6 {
            let r = x.reduce(d).unwrap();
            assert!(r.min_exp() >= 0);
            assert!(r.is_zero() || r.max_exp() / 4 < (d * (d + 1) / 2) as i64);
        }
    }

    #[test]
    fn roots_and_taylor() {
        assert_eq!(
            as_integer(&HabiroElem::one(4).eval_root(3).unwrap()),
            Some(1.into())
        );
        let x = HabiroElem::from_terms(vec![Laurent::zero(), Laurent::q_pow(5)], 4).unwrap();
        assert_eq!(as_integer(&x.eval_root(1).unwrap()), Some(0.into()));
        let t = HabiroElem::one(4).taylor(1, 4).unwrap();
        let ints: Vec<_> = t.iter().map(|c| as_integer(c).unwrap()).collect();
        assert_eq!(ints, vec![1.into(), 0.into(), 0.into(), 0.into()]);
        let p2 = HabiroElem::pochhammer_elem(2, 3);
        let t = p2.taylor(1, 3).unwrap();
        let ints: Vec<_> = t.iter().map(|c| as_integer(c).unwrap()).collect();
        assert_eq!(ints, vec![0.into(), 0.into(), 2.into()]);
    }

    #[test]
    fn pochhammer_vanishes_at_roots() {
        for r in 1..=10 {
            for n in r..=10 {
                let x = HabiroElem::pochhammer_elem(n, 11);
                assert!(x.eval_root(r).unwrap().is_zero(), "n={} r={}", n, r);
            }
        }
    }

    #[test]
    fn derivative_examples() {
        let c = HabiroElem::constant(5, 6);
        assert!(c.derivative().unwrap().reduce(3).unwrap().is_zero());
        let q2 = HabiroElem::from_polynomial(Laurent::q_pow(2), 6).unwrap();
        let d = q2.derivative().unwrap();
        let two_q = HabiroElem::from_polynomial(Laurent::q_pow(1).scale_i64(2), 3).unwrap();
        assert!(d.equals_at_depth(&two_q, 3).unwrap());
    }

    #[test]
    fn phi_order_examples() {
        assert_eq!(
            HabiroElem::pochhammer_elem(3, 4).phi_order(1, 3).unwrap(),
            3
        );
        assert_eq!(HabiroElem::one(12).phi_order(4, 3).unwrap(), 0);
    }

    #[test]
    fn mirror_is_involutive() {
        let x = HabiroElem::from_terms(vec![qp(&[1, 2], -1), qp(&[3], 2), qp(&[1, 0, -1], 0)], 5)
            .unwrap();
        let mm = x.mirror().mirror();
        assert!(mm.equals_at_depth(&x, 5).unwrap());
        // mirror agrees with substituting q -> q^{-1} in the partial sums
        let lhs = x.mirror().partial_sum(5).unwrap();
        let rhs = x.partial_sum(5).unwrap().conj();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_roundtrip() {
        let x = HabiroElem::from_terms(vec![qp(&[1, 2], -1), qp(&[3], 2)], 3).unwrap();
        let y = HabiroElem::from_json(&x.to_json()).unwrap();
        assert!(x.equals_at_depth(&y, 3).unwrap());
        assert_eq!(x.terms(), y.terms());
    }
}
