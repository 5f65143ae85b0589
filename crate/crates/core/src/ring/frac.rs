use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::One;

use super::Laurent;
use crate::error::{Error, Result};

/// A quotient of Laurent polynomials in `u`.
///
/// Normal form: the denominator has minimal exponent 0 and a positive leading
/// coefficient, and the integer contents of numerator and denominator are
/// coprime. When the denominator divides the numerator exactly the fraction
/// collapses to denominator 1. Equality is decided by cross-multiplication, so
/// two fractions with different (non-reduced) normal forms still compare
/// equal when they represent the same element.
#[derive(Clone)]
pub struct LaurentFrac {
    num: Laurent,
    den: Laurent,
}

impl LaurentFrac {
    pub fn new(num: Laurent, den: Laurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut f = LaurentFrac { num, den };
        f.normalize();
        Ok(f)
    }

    pub fn from_laurent(p: Laurent) -> Self {
        LaurentFrac {
            num: p,
            den: Laurent::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_laurent(Laurent::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(Laurent::one())
    }

    pub fn numer(&self) -> &Laurent {
        &self.num
    }

    pub fn denom(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Laurent::one();
            return;
        }
        let s = self.den.min_exp();
        self.num = self.num.shift(-s);
        self.den = self.den.shift(-s);
        if !self.den.leading_positive() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
        let g = self.num.content().gcd(&self.den.content());
        if !g.is_one() {
            self.num = self.num.div_scalar(&g).unwrap();
            self.den = self.den.div_scalar(&g).unwrap();
        }
        if !self.den.is_one() {
            if let Ok(q) = self.num.exact_div(&self.den) {
                self.num = q;
                self.den = Laurent::one();
            }
        }
    }

    /// Returns the Laurent polynomial this fraction equals, or
    /// `NonExactDivision` when it is not one.
    pub fn to_laurent(&self) -> Result<Laurent> {
        if self.den.is_one() {
            return Ok(self.num.clone());
        }
        self.num.exact_div(&self.den)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        let mut f = LaurentFrac {
            num: &self.num * c,
            den: self.den.clone(),
        };
        f.normalize();
        f
    }

    pub fn conj(&self) -> Self {
        let mut f = LaurentFrac {
            num: self.num.conj(),
            den: self.den.conj(),
        };
        f.normalize();
        f
    }

    fn combine(&self, other: &Self, sub: bool) -> Self {
        let (num, den) = if self.den == other.den {
            let n = if sub {
                &self.num - &other.num
            } else {
                &self.num + &other.num
            };
            (n, self.den.clone())
        } else {
            let a = &self.num * &other.den;
            let b = &other.num * &self.den;
            let n = if sub { &a - &b } else { &a + &b };
            (n, &self.den * &other.den)
        };
        let mut f = LaurentFrac { num, den };
        f.normalize();
        f
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.num.to_json("u"), "den": self.den.to_json("u") })
    }

    /// Accepts `{"num": .., "den": ..}` or a bare polynomial.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        match (v.get("num"), v.get("den")) {
            (Some(n), Some(d)) => {
                let (n, _) = Laurent::from_json(n)?;
                let (d, _) = Laurent::from_json(d)?;
                Self::new(n, d)
            }
            _ => Ok(Self::from_laurent(Laurent::from_json(v)?.0)),
        }
    }

    /// Short text form used inside basis-combination encodings.
    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            self.num.display_var("u")
        } else {
            format!(
                "({})/({})",
                self.num.display_var("u"),
                self.den.display_var("u")
            )
        }
    }
}

impl PartialEq for LaurentFrac {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for LaurentFrac {}

impl From<Laurent> for LaurentFrac {
    fn from(p: Laurent) -> Self {
        Self::from_laurent(p)
    }
}

impl fmt::Debug for LaurentFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentFrac({})", self.to_text())
    }
}

impl fmt::Display for LaurentFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<'a> Add<&'a LaurentFrac> for &'a LaurentFrac {
    type Output = LaurentFrac;
    fn add(self, rhs: &LaurentFrac) -> LaurentFrac {
        self.combine(rhs, false)
    }
}

impl<'a> Sub<&'a LaurentFrac> for &'a LaurentFrac {
    type Output = LaurentFrac;
    fn sub(self, rhs: &LaurentFrac) -> LaurentFrac {
        self.combine(rhs, true)
    }
}

impl<'a> Mul<&'a LaurentFrac> for &'a LaurentFrac {
    type Output = LaurentFrac;
    fn mul(self, rhs: &LaurentFrac) -> LaurentFrac {
        let mut f = LaurentFrac {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        };
        f.normalize();
        f
    }
}

impl Neg for &LaurentFrac {
    type Output = LaurentFrac;
    fn neg(self) -> LaurentFrac {
        LaurentFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for LaurentFrac {
    type Output = LaurentFrac;
    fn add(self, rhs: LaurentFrac) -> LaurentFrac {
        &self + &rhs
    }
}

impl Sub for LaurentFrac {
    type Output = LaurentFrac;
    fn sub(self, rhs: LaurentFrac) -> LaurentFrac {
        &self - &rhs
    }
}

impl Mul for LaurentFrac {
    type Output = LaurentFrac;
    fn mul(self, rhs: LaurentFrac) -> LaurentFrac {
        &self * &rhs
    }
}

impl Neg for LaurentFrac {
    type Output = LaurentFrac;
    fn neg(self) -> LaurentFrac {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qcomb::{qint_bal, qnum};

    #[test]
    fn normal_form() {
        let f = LaurentFrac::new(
            Laurent::from_i64(3, vec![2, 4]),
            Laurent::from_i64(-1, vec![-6]),
        )
        .unwrap();
        assert_eq!(f.denom(), &Laurent::constant(3));
        assert_eq!(f.numer(), &Laurent::from_i64(4, vec![-1, -2]));
        let g = LaurentFrac::new(
            Laurent::from_i64(0, vec![-1, 0, 1]),
            Laurent::from_i64(0, vec![-1, 1]),
        )
        .unwrap();
        assert!(g.denom().is_one());
    }

    #[test]
    fn arithmetic_and_equality() {
        let a = LaurentFrac::new(qint_bal(3), qint_bal(1)).unwrap();
        assert_eq!(a, LaurentFrac::from(qnum(3)));
        let half = LaurentFrac::new(Laurent::one(), Laurent::constant(2)).unwrap();
        assert_eq!(&half + &half, LaurentFrac::one());
        let x = LaurentFrac::new(Laurent::one(), qint_bal(2)).unwrap();
        assert_eq!(
            &(&x * &LaurentFrac::from(qint_bal(2))) - &LaurentFrac::one(),
            LaurentFrac::zero()
        );
        assert!(LaurentFrac::new(Laurent::one(), Laurent::zero()).is_err());
    }
}
