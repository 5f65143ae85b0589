//! The Ohtsuki series and the congruences it satisfies.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::habiro::{as_integer, HabiroElem};
use crate::ring::{cyclotomic, solve_rational, Base, Laurent, ModPoly};

/// `λ_0, ..., λ_{d-1}`: the expansion of `x` in powers of `q - 1`.
pub fn ohtsuki(x: &HabiroElem, d: usize) -> Result<Vec<BigInt>> {
    x.taylor(1, d)?
        .iter()
        .map(|c| {
            as_integer(c)
                .ok_or_else(|| Error::InvalidInput(format!("non-integral coefficient {}", c)))
        })
        .collect()
}

/// Power series coefficients of `1/p(h)` for a polynomial with nonzero
/// constant term.
fn inverse_series(p: &[i64], n: usize) -> Vec<BigRational> {
    let p: Vec<BigRational> = p
        .iter()
        .map(|&c| BigRational::from_integer(c.into()))
        .collect();
    let mut out: Vec<BigRational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut s = if k == 0 {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        for i in 1..=k.min(p.len() - 1) {
            s -= &p[i] * &out[k - i];
        }
        out.push(s / &p[0]);
    }
    out
}

/// Coefficients `a_i` of `1/((q+1)(q^2+q+1))` in `h = q - 1`.
pub fn cubic_relation_coeffs(n: usize) -> Vec<BigRational> {
    // (h+2)(h^2+3h+3) = 6 + 9h + 5h^2 + h^3
    inverse_series(&[6, 9, 5, 1], n)
}

/// Coefficients `b_i` of `1/(12 + 30h + 34h^2 + 21h^3 + 7h^4 + h^5)`.
pub fn quintic_relation_coeffs(n: usize) -> Vec<BigRational> {
    inverse_series(&[12, 30, 34, 21, 7, 1], n)
}

fn binom(n: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - BigInt::from(i);
    }
    let mut f = BigInt::one();
    for i in 1..=k {
        f *= i;
    }
    acc / f
}

/// Outcome of one congruence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub relations: Vec<Relation>,
}

impl CongruenceReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }
}

fn is_integral(x: &BigRational) -> bool {
    x.is_integer()
}

/// Checks the integrality relations for `λ` (at least five terms).
pub fn congruence_report(lambda: &[BigInt]) -> Result<CongruenceReport> {
    if lambda.len() < 5 {
        return Err(Error::InvalidInput("need at least λ_0..λ_4".into()));
    }
    let mut rel = Vec::new();
    let l1 = &lambda[1];
    let l2 = &lambda[2];
    rel.push(Relation {
        name: "λ_1 ≡ 0 (mod 6)".into(),
        holds: l1.is_multiple_of(&BigInt::from(6)),
    });
    let half = l1 / 2;
    rel.push(Relation {
        name: "λ_2 ≡ λ_1/2 (mod 6)".into(),
        holds: l1.is_even() && {
            let t: BigInt = l2 - &half;
            t
        }
        .is_multiple_of(&BigInt::from(6)),
    });
    rel.push(Relation {
        name: "λ_2 ≡ 3λ (mod 12), λ = λ_1/6".into(),
        holds: l1.is_multiple_of(&BigInt::from(6)) && {
            let t: BigInt = l2 - (l1 / 6) * 3;
            t
        }
        .is_multiple_of(&BigInt::from(12)),
    });
    // sum_{i=0}^k a_i λ_{k-i+1}, needs λ_{k+1}
    let a = cubic_relation_coeffs(lambda.len());
    for k in 0..lambda.len() - 1 {
        let s: BigRational = (0..=k)
            .map(|i| &a[i] * BigRational::from_integer(lambda[k - i + 1].clone()))
            .sum();
        rel.push(Relation {
            name: format!("a-relation k = {}", k),
            holds: is_integral(&s),
        });
    }
    // λ'_k = λ_k - C(λ_1, k) for k >= 2; sum_{i=0}^k b_i λ'_{k-i+2}
    let b = quintic_relation_coeffs(lambda.len());
    let lp: Vec<BigInt> = (0..lambda.len())
        .map(|k| {
            if k >= 2 {
                &lambda[k] - binom(l1, k)
            } else {
                lambda[k].clone()
            }
        })
        .collect();
    for k in 0..lambda.len() - 2 {
        let s: BigRational = (0..=k)
            .map(|i| &b[i] * BigRational::from_integer(lp[k - i + 2].clone()))
            .sum();
        rel.push(Relation {
            name: format!("b-relation k = {}", k),
            holds: is_integral(&s),
        });
    }
    Ok(CongruenceReport { relations: rel })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tau8Report {
    /// `s_{ζ_8}(q^{-λ_1} x) - 1` in the basis `1, ζ, ζ^2, ζ^3`.
    pub difference: Vec<BigInt>,
    /// Membership in the lattice spanned by `4, 2√2, 2+2i, 2+√2+√-2`.
    pub in_lattice: bool,
    /// Membership in the span of `4, 2√2`; reported only.
    pub in_small_lattice: bool,
}

fn in_span(gens: &[[i64; 4]], v: &[BigInt]) -> bool {
    let a: Vec<Vec<BigRational>> = (0..4)
        .map(|row| {
            gens.iter()
                .map(|g| BigRational::from_integer(g[row].into()))
                .collect()
        })
        .collect();
    let b: Vec<BigRational> = v
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    // generators are independent, so a rational solution is unique
    solve_rational(&a, &b).is_some_and(|x| x.iter().all(|c| c.is_integer()))
}

/// `τ̃_8 - 1` and its lattice membership.
pub fn tilde_tau8_check(x: &HabiroElem, lambda1: &BigInt) -> Result<Tau8Report> {
    let v = x.eval_root(8)?;
    let l = lambda1
        .to_i64()
        .ok_or_else(|| Error::InvalidInput("λ_1 too large".into()))?;
    let shift = ModPoly::reduce(&Laurent::x_pow(-l.rem_euclid(8)), &cyclotomic(8), Base::Z)?;
    let d = v.mul(&shift).sub(&v.one_like());
    let mut diff = d.int_coeffs();
    diff.resize(4, BigInt::zero());
    // ζ^4 = -1: √2 = ζ - ζ^3, i = ζ^2, √-2 = ζ + ζ^3
    let big = [[4, 0, 0, 0], [0, 2, 0, -2], [2, 0, 2, 0], [2, 2, 0, 0]];
    let small = [[4, 0, 0, 0], [0, 2, 0, -2]];
    Ok(Tau8Report {
        in_lattice: in_span(&big, &diff),
        in_small_lattice: in_span(&small, &diff),
        difference: diff,
    })
}
