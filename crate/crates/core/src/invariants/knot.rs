//! The two-variable knot invariant in the `σ` basis and its specializations.

use crate::basis::omega_coeff;
use crate::error::{Error, Result};
use crate::habiro::{to_q_var, HabiroElem};
use crate::ring::qcomb::{falling_bal, pochhammer};
use crate::ring::Laurent;
use crate::tangle::Diagram;

use super::surgery::zero_framed_p_table;

/// Truncation of `J_K = sum_n c_n σ_n` with `c_n = J_K(P''_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoVarKnot {
    coeffs: Vec<Laurent>,
}

impl TwoVarKnot {
    pub fn new(coeffs: Vec<Laurent>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("depth must be positive".into()));
        }
        for c in &coeffs {
            to_q_var(c)?;
        }
        Ok(TwoVarKnot { coeffs })
    }

    pub fn depth(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Laurent] {
        &self.coeffs
    }

    /// `J_K(q^i, q)`, the colored Jones polynomial of `V_{|i|-1}` divided by
    /// `[i]`.
    pub fn theta(&self, i: i64) -> Result<Laurent> {
        if i == 0 {
            return Err(Error::InvalidInput("theta needs i != 0; use theta0".into()));
        }
        let n = i.unsigned_abs() as usize;
        if n > self.depth() {
            return Err(Error::DepthExceeded {
                requested: n,
                available: self.depth(),
            });
        }
        let base = &Laurent::q_pow(i) + &Laurent::q_pow(-i);
        let mut sigma = Laurent::one();
        let mut out = Laurent::zero();
        for k in 0..n {
            if k > 0 {
                let kk = k as i64;
                let f = &(&base - &Laurent::q_pow(kk)) - &Laurent::q_pow(-kk);
                sigma = &sigma * &f;
            }
            out.add_product(&self.coeffs[k], &sigma);
        }
        Ok(out)
    }

    /// The unified Kashaev invariant, from `θ_0(σ_k) = (-1)^k {k}!^2`.
    pub fn theta0(&self) -> HabiroElem {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let kk = k as i64;
                // (-1)^k {k}!^2 = (-1)^k q^{-k(k+1)/2} (q)_k^2
                let t = (c * &pochhammer(kk)).shift(-2 * kk * (kk + 1));
                if k % 2 == 1 {
                    -t
                } else {
                    t
                }
            })
            .collect();
        HabiroElem::from_terms(terms, self.depth()).expect("coefficients are in Z[q, 1/q]")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let c: Vec<_> = self.coeffs.iter().map(|t| t.to_json("q")).collect();
        serde_json::json!({ "depth": self.depth(), "coeffs": c })
    }
}

/// `K_{i,j}`: the knot left by `-1/i` and `-1/j` surgery on two components
/// of the Borromean rings.
pub fn knot_borromean(i: i64, j: i64, depth: usize) -> Result<TwoVarKnot> {
    TwoVarKnot::new(
        (0..depth)
            .map(|l| {
                let c = &omega_coeff(i, l) * &omega_coeff(j, l);
                if l % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// `c_n = J_K(P_n)/{2n+1}_{2n}` for the zero-framed knot `d`.
pub fn reduced_jones(d: &Diagram, depth: usize) -> Result<TwoVarKnot> {
    if d.component_count() != 1 {
        return Err(Error::NotAKnot(format!(
            "diagram has {} components",
            d.component_count()
        )));
    }
    let p = zero_framed_p_table(d, depth)?;
    let coeffs = p
        .iter()
        .enumerate()
        .map(|(n, x)| {
            let n = n as i64;
            x.exact_div(&falling_bal(2 * n + 1, 2 * n))
        })
        .collect::<Result<_>>()?;
    TwoVarKnot::new(coeffs)
}
