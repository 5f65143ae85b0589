//! Residues of one-variable polynomials modulo a monic polynomial, over
//! `Z`, `Z/m`, `F_p` or `Q`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Laurent;
use crate::error::{Error, Result};

/// Coefficient ring of a [`ModPoly`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Base {
    Z,
    ZMod(BigInt),
    Fp(BigInt),
    Q,
}

impl Base {
    fn modulus(&self) -> Option<&BigInt> {
        match self {
            Base::ZMod(m) | Base::Fp(m) => Some(m),
            _ => None,
        }
    }

    fn is_field(&self) -> bool {
        matches!(self, Base::Fp(_) | Base::Q)
    }

    fn norm(&self, c: BigRational) -> BigRational {
        match self.modulus() {
            Some(m) => {
                let n = c.numer().mod_floor(m);
                if c.denom().is_one() {
                    return BigRational::from_integer(n);
                }
                let d = c.denom().mod_floor(m);
                let inv = mod_inverse(&d, m).expect("denominator invertible modulo m");
                BigRational::from_integer((n * inv).mod_floor(m))
            }
            None => c,
        }
    }

    fn inv(&self, c: &BigRational) -> Result<BigRational> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Base::Q => Ok(c.recip()),
            Base::Z => {
                if c.is_integer() && c.numer().abs().is_one() {
                    Ok(c.clone())
                } else {
                    Err(Error::NotAUnit(c.to_string()))
                }
            }
            Base::ZMod(m) | Base::Fp(m) => mod_inverse(c.numer(), m)
                .map(BigRational::from_integer)
                .ok_or_else(|| Error::NotAUnit(format!("{} mod {}", c, m))),
        }
    }

    fn tag(&self) -> String {
        match self {
            Base::Z => "Z".into(),
            Base::ZMod(m) => format!("Z/{}", m),
            Base::Fp(p) => format!("F_{}", p),
            Base::Q => "Q".into(),
        }
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// An element of `B[x]/(f)` for a monic `f`.
#[derive(Clone, PartialEq, Eq)]
pub struct ModPoly {
    base: Base,
    modulus: Vec<BigRational>,
    coeffs: Vec<BigRational>,
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn int(c: &BigInt) -> BigRational {
    BigRational::from_integer(c.clone())
}

impl ModPoly {
    /// Builds the residue ring element from raw coefficients (constant term
    /// first). `modulus` must be a polynomial whose leading coefficient is a
    /// unit of the base; it is made monic.
    pub fn from_coeffs(base: Base, modulus: &Laurent, coeffs: Vec<BigRational>) -> Result<Self> {
        let modulus = Self::monic_modulus(&base, modulus)?;
        let mut p = ModPoly {
            base,
            modulus,
            coeffs,
        };
        p.reduce_in_place();
        Ok(p)
    }

    fn monic_modulus(base: &Base, f: &Laurent) -> Result<Vec<BigRational>> {
        if f.is_zero() || f.min_exp() < 0 {
            return Err(Error::InvalidInput(format!(
                "bad modulus {}",
                f.display_var("x")
            )));
        }
        let mut m: Vec<BigRational> = (0..=f.max_exp())
            .map(|e| base.norm(int(&f.coeff(e))))
            .collect();
        trim(&mut m);
        if m.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "modulus {} has degree < 1 over {}",
                f.display_var("x"),
                base.tag()
            )));
        }
        let lead = m.last().unwrap().clone();
        if !lead.is_one() {
            let inv = base.inv(&lead)?;
            m = m.into_iter().map(|c| base.norm(c * &inv)).collect();
        }
        Ok(m)
    }

    /// Reduces a Laurent polynomial in `x` modulo `f` over `base`.
    ///
    /// Negative powers are handled through `x^{-1} = -g/f(0)` where
    /// `f = f(0) + x g`; this requires `f(0)` to be a unit.
    pub fn reduce(a: &Laurent, f: &Laurent, base: Base) -> Result<Self> {
        let modulus = Self::monic_modulus(&base, f)?;
        let shift = if a.min_exp() < 0 { -a.min_exp() } else { 0 };
        let coeffs: Vec<BigRational> = if a.is_zero() {
            Vec::new()
        } else {
            (0..=a.max_exp() + shift)
                .map(|e| base.norm(int(&a.coeff(e - shift))))
                .collect()
        };
        let mut p = ModPoly {
            base: base.clone(),
            modulus,
            coeffs,
        };
        p.reduce_in_place();
        if shift > 0 {
            let xinv = p.x_inverse().map_err(|_| {
                Error::NonInvertibleVariable(format!("{} over {}", f.display_var("x"), base.tag()))
            })?;
            p = p.mul(&xinv.pow(shift as u64));
        }
        Ok(p)
    }

    fn x_inverse(&self) -> Result<Self> {
        let f0 = &self.modulus[0];
        let inv0 = self.base.inv(f0)?;
        let coeffs = self.modulus[1..]
            .iter()
            .map(|c| self.base.norm(-(c * &inv0)))
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    fn with_coeffs(&self, coeffs: Vec<BigRational>) -> Self {
        let mut p = ModPoly {
            base: self.base.clone(),
            modulus: self.modulus.clone(),
            coeffs,
        };
        p.reduce_in_place();
        p
    }

    fn reduce_in_place(&mut self) {
        let d = self.modulus.len() - 1;
        for c in self.coeffs.iter_mut() {
            *c = self.base.norm(std::mem::take(c));
        }
        trim(&mut self.coeffs);
        while self.coeffs.len() > d {
            let top = self.coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let off = self.coeffs.len() - d;
            for (j, m) in self.modulus[..d].iter().enumerate() {
                if !m.is_zero() {
                    let c = &self.coeffs[off + j] - &top * m;
                    self.coeffs[off + j] = self.base.norm(c);
                }
            }
            trim(&mut self.coeffs);
        }
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn modulus_degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Coefficients of the canonical representative, constant term first,
    /// padded to the degree of the modulus.
    pub fn coeffs(&self) -> Vec<BigRational> {
        let mut c = self.coeffs.clone();
        c.resize(self.modulus_degree(), BigRational::zero());
        c
    }

    /// Integer coefficients; panics if a coefficient is not integral.
    pub fn int_coeffs(&self) -> Vec<BigInt> {
        self.coeffs()
            .into_iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integral coefficient {}", c);
                c.to_integer()
            })
            .collect()
    }

    /// The canonical representative as a polynomial (integral bases only).
    pub fn representative(&self) -> Laurent {
        Laurent::from_big(0, self.int_coeffs())
    }

    pub fn modulus_poly(&self) -> Laurent {
        Laurent::from_big(0, self.modulus.iter().map(|c| c.to_integer()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The constant value when the residue is a constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn constant_like(&self, c: BigRational) -> Self {
        self.with_coeffs(vec![c])
    }

    pub fn zero_like(&self) -> Self {
        self.with_coeffs(Vec::new())
    }

    pub fn one_like(&self) -> Self {
        self.constant_like(BigRational::one())
    }

    /// The class of the variable `x`.
    pub fn x_like(&self) -> Self {
        self.with_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    fn check_compat(&self, other: &Self) {
        assert!(
            self.base == other.base && self.modulus == other.modulus,
            "ModPoly operands live in different rings"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compat(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![BigRational::zero(); n];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in other.coeffs.iter().enumerate() {
            c[i] += x;
        }
        self.with_coeffs(c)
    }

    pub fn neg(&self) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compat(other);
        if self.is_zero() || other.is_zero() {
            return self.zero_like();
        }
        let mut c = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        self.with_coeffs(c)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = self.one_like();
        let mut b = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            n >>= 1;
            if n > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Multiplicative inverse; requires a field base. Fails with `NotAUnit`
    /// when the representative shares a factor with the modulus.
    pub fn inverse(&self) -> Result<Self> {
        if !self.base.is_field() {
            if let Some(c) = self.as_constant() {
                let i = self.base.inv(&c)?;
                return Ok(self.constant_like(i));
            }
            return Err(Error::NotAUnit(format!("{} (base is not a field)", self)));
        }
        // extended Euclid on (f, a): track s with s*a = r (mod f)
        let mut r0 = self.modulus.clone();
        let mut r1 = self.coeffs.clone();
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = self.poly_divrem(&r0, &r1)?;
            let qs = self.poly_mul(&q, &s1);
            let s2 = self.poly_sub(&s0, &qs);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return Err(Error::NotAUnit(format!("{}", self)));
        }
        let inv = self.base.inv(&r0[0])?;
        Ok(self.with_coeffs(s0.into_iter().map(|c| c * &inv).collect()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&other.inverse()?))
    }

    fn poly_mul(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut c = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        let mut c: Vec<_> = c.into_iter().map(|x| self.base.norm(x)).collect();
        trim(&mut c);
        c
    }

    fn poly_sub(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let mut c = vec![BigRational::zero(); n];
        for (i, x) in a.iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in b.iter().enumerate() {
            c[i] -= x;
        }
        let mut c: Vec<_> = c.into_iter().map(|x| self.base.norm(x)).collect();
        trim(&mut c);
        c
    }

    fn poly_divrem(
        &self,
        a: &[BigRational],
        b: &[BigRational],
    ) -> Result<(Vec<BigRational>, Vec<BigRational>)> {
        let lead_inv = self.base.inv(b.last().unwrap())?;
        let mut r: Vec<BigRational> = a.to_vec();
        trim(&mut r);
        if r.len() < b.len() {
            return Ok((Vec::new(), r));
        }
        let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let k = r.len() - b.len();
            let c = self.base.norm(r.last().unwrap() * &lead_inv);
            for (j, bj) in b.iter().enumerate() {
                let v = &r[k + j] - &c * bj;
                r[k + j] = self.base.norm(v);
            }
            q[k] = c;
            trim(&mut r);
        }
        trim(&mut q);
        Ok((q, r))
    }

    /// gcd (monic) of the representative with the modulus; field bases only.
    pub fn gcd_with_modulus(&self) -> Result<Laurent> {
        if !self.base.is_field() {
            return Err(Error::InvalidInput("gcd requires a field base".into()));
        }
        let mut a = self.modulus.clone();
        let mut b = self.coeffs.clone();
        while !b.is_empty() {
            let (_, r) = self.poly_divrem(&a, &b)?;
            a = std::mem::replace(&mut b, r);
        }
        let inv = self.base.inv(a.last().unwrap())?;
        let monic: Vec<BigRational> = a.into_iter().map(|c| self.base.norm(c * &inv)).collect();
        if monic.iter().all(|c| c.is_integer()) {
            Ok(Laurent::from_big(
                0,
                monic.iter().map(|c| c.to_integer()).collect(),
            ))
        } else {
            Err(Error::InvalidInput(
                "gcd has non-integral coefficients".into(),
            ))
        }
    }

    /// Image under the coefficient map into another base, reducing the
    /// modulus as well (e.g. `Z[x]/Phi_r -> F_p[x]/(Phi_r mod p)`).
    pub fn change_base(&self, base: Base) -> Result<Self> {
        let f = Laurent::from_big(0, self.modulus.iter().map(|c| c.to_integer()).collect());
        if !self.modulus.iter().all(|c| c.is_integer()) {
            return Err(Error::InvalidInput("modulus must be integral".into()));
        }
        Self::from_coeffs(base, &f, self.coeffs.clone())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let enc = |c: &BigRational| -> serde_json::Value {
            if c.is_integer() {
                match num_traits::ToPrimitive::to_i64(&c.to_integer()) {
                    Some(i) => serde_json::Value::from(i),
                    None => serde_json::Value::from(c.to_integer().to_string()),
                }
            } else {
                serde_json::Value::from(c.to_string())
            }
        };
        let m: Vec<_> = self.modulus.iter().map(enc).collect();
        let v: Vec<_> = self.coeffs().iter().map(enc).collect();
        serde_json::json!({
            "base": self.base.tag(),
            "modulus": { "var": "x", "min": 0, "coeffs": m },
            "value": { "var": "x", "min": 0, "coeffs": v },
        })
    }

    pub fn display_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let cs = if a.is_integer() {
                a.to_integer().to_string()
            } else {
                format!("({})", a)
            };
            match e {
                0 => out.push_str(&cs),
                _ => {
                    if !a.is_one() {
                        out.push_str(&cs);
                        out.push('*');
                    }
                    out.push_str(var);
                    if e > 1 {
                        out.push_str(&format!("^{}", e));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} mod ({}) over {}",
            self.display_var("x"),
            self.modulus_poly().display_var("x"),
            self.base.tag()
        )
    }
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Solves `A x = b` over `Q` for an `m x n` matrix with `m >= n`.
///
/// Returns `None` when the system is inconsistent; free variables, if any,
/// are set to zero.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=cols {
                    let d = &f * &m[row][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{cyclotomic, qcomb};

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn pochhammer_mod_phi3() {
        let p = qcomb::pochhammer(2).contract_var(4).unwrap();
        let m = ModPoly::reduce(&p, &cyclotomic(3), Base::Z).unwrap();
        assert_eq!(m.as_constant(), Some(r(3)));
    }

    #[test]
    fn simple_reductions() {
        let m = ModPoly::reduce(&Laurent::x_pow(1), &cyclotomic(1), Base::Z).unwrap();
        assert!(m.is_one());
        let m = ModPoly::reduce(&Laurent::x_pow(6), &cyclotomic(4), Base::Z).unwrap();
        assert_eq!(m.as_constant(), Some(r(-1)));
        let m = ModPoly::reduce(&Laurent::x_pow(-1), &cyclotomic(1), Base::Z).unwrap();
        assert!(m.is_one());
        let m = ModPoly::reduce(&Laurent::x_pow(-1), &cyclotomic(6), Base::Z).unwrap();
        let back = m.mul(&m.x_like());
        assert!(back.is_one());
    }

    #[test]
    fn non_invertible_variable() {
        let f = Laurent::from_i64(0, vec![2, 0, 1]);
        let e = ModPoly::reduce(&Laurent::x_pow(-1), &f, Base::Z);
        assert!(matches!(e, Err(Error::NonInvertibleVariable(_))));
    }

    #[test]
    fn field_inverse_and_gcd() {
        let f = cyclotomic(5);
        let a = ModPoly::reduce(&Laurent::from_i64(0, vec![1, 1]), &f, Base::Q).unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_one());
        // over F_11, Phi_5 splits, so x - 3 (3 has order 5 mod 11) divides it
        let p = BigInt::from(11);
        let b = ModPoly::reduce(&Laurent::from_i64(0, vec![-3, 1]), &f, Base::Fp(p)).unwrap();
        let g = b.gcd_with_modulus().unwrap();
        assert_eq!(g, Laurent::from_i64(0, vec![8, 1]));
        assert!(b.inverse().is_err());
    }

    #[test]
    fn linear_solve() {
        let a = vec![vec![r(1), r(1)], vec![r(1), r(-1)], vec![r(2), r(0)]];
        let x = solve_rational(&a, &[r(3), r(1), r(4)]).unwrap();
        assert_eq!(x, vec![r(2), r(1)]);
        assert!(solve_rational(&a, &[r(3), r(1), r(5)]).is_none());
    }
}
