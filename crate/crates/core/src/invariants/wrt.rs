//! The WRT invariant `τ_ζ` computed exactly modulo cyclotomic polynomials.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::qcomb::qnum;
use crate::ring::{cyclotomic, solve_rational, Base, Laurent, ModPoly};

use super::surgery::{zero_framed_v_table, SurgeryPresentation};

/// `I_r(L) = J_L(Ω_r, ..., Ω_r)` as a Laurent polynomial in `u`, with the
/// framings applied.
pub fn wrt_unnormalized(pres: &SurgeryPresentation, r: usize) -> Result<Laurent> {
    let (d, framings) = pres.admissible_form()?;
    let m = d.component_count();
    if r < 2 {
        return Err(Error::InvalidInput("I_r needs r >= 2".into()));
    }
    let n = r - 1;
    let table = zero_framed_v_table(&d, n)?;
    let mut total = Laurent::zero();
    for (idx, j) in table.iter().enumerate() {
        let mut rest = idx;
        let mut w = Laurent::one();
        let mut e = 0i64;
        for s in (0..m).rev() {
            let i = (rest % n) as i64;
            rest /= n;
            w = &w * &qnum(i + 1);
            e += framings[s] * i * (i + 2);
        }
        total.add_assign_ref(&(&w * j).shift(e));
    }
    Ok(total)
}

fn unknot_sum(r: usize, sign: i64) -> Laurent {
    (0..=r as i64 - 2)
        .map(|i| {
            let a = qnum(i + 1);
            (&a * &a).shift(sign * i * (i + 2))
        })
        .sum()
}

/// `τ_ζ(M)` at all primitive `r`-th roots `ζ` at once, as an element of
/// `Q[q]/(Φ_r(q))`.
///
/// The computation happens in `Q[x]/(Φ_{4r}(x))` with `x = q^{1/4}`; the
/// quotient is then rewritten as a polynomial in `x^4`.
pub fn wrt(pres: &SurgeryPresentation, r: usize) -> Result<ModPoly> {
    if r == 0 {
        return Err(Error::InvalidInput("root order must be positive".into()));
    }
    let (_, framings) = pres.admissible_form()?;
    if r == 1 {
        return ModPoly::reduce(&Laurent::one(), &cyclotomic(1), Base::Q);
    }
    let f = cyclotomic(4 * r as u64);
    let il = ModPoly::reduce(&wrt_unnormalized(pres, r)?, &f, Base::Q)?;
    let plus = framings.iter().filter(|&&x| x > 0).count() as u64;
    let minus = framings.len() as u64 - plus;
    let up = ModPoly::reduce(&unknot_sum(r, 1), &f, Base::Q)?;
    let um = ModPoly::reduce(&unknot_sum(r, -1), &f, Base::Q)?;
    let den = up.pow(plus).mul(&um.pow(minus));
    if den.is_zero() {
        return Err(Error::ZeroDenominator(format!(
            "I(U_+)^{} I(U_-)^{} at r = {}",
            plus, minus, r
        )));
    }
    let tau = il.div(&den).map_err(|_| {
        Error::ZeroDenominator(format!("I(U_+)^{} I(U_-)^{} at r = {}", plus, minus, r))
    })?;
    // find h with deg h < φ(r) and h(x^4) = tau
    let phi_r = cyclotomic(r as u64);
    let k = phi_r.max_exp() as usize;
    let big = f.max_exp() as usize;
    let cols: Vec<Vec<BigRational>> = (0..k)
        .map(|j| {
            let mut c = ModPoly::reduce(&Laurent::x_pow(4 * j as i64), &f, Base::Q)
                .map(|p| p.coeffs())
                .unwrap_or_default();
            c.resize(big, BigRational::zero());
            c
        })
        .collect();
    let a: Vec<Vec<BigRational>> = (0..big)
        .map(|row| cols.iter().map(|c| c[row].clone()).collect())
        .collect();
    let mut b = tau.coeffs();
    b.resize(big, BigRational::zero());
    let h = solve_rational(&a, &b)
        .ok_or_else(|| Error::NotInQSubring(format!("τ at r = {} is not a polynomial in q", r)))?;
    ModPoly::from_coeffs(Base::Q, &phi_r, h)
}
