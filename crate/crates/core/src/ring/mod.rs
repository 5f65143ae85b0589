//! Exact arithmetic: Laurent polynomials, fractions, quotient rings and
//! q-combinatorics.

mod cyclotomic;
mod frac;
mod laurent;
mod modpoly;
pub mod qcomb;

pub use cyclotomic::{cyclotomic, cyclotomic_q};
pub use frac::LaurentFrac;
pub use laurent::Laurent;
pub use modpoly::{solve_rational, Base, ModPoly};
