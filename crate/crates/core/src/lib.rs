//! Exact computation of Habiro's unified WRT invariant of integral homology
//! spheres, colored Jones polynomials via an R-matrix engine, and the
//! specializations of Habiro-ring elements.

pub mod acceptance;
pub mod basis;
pub mod error;
pub mod evalx;
pub mod habiro;
pub mod invariants;
pub mod rep;
pub mod ring;
pub mod tangle;

pub use error::{Error, Result};
