//! Invariants of integral homology spheres and knots built on `J_M`.

mod knot;
mod ohtsuki;
mod surgery;
mod wrt;

pub use knot::{knot_borromean, reduced_jones, TwoVarKnot};
pub use ohtsuki::{
    congruence_report, cubic_relation_coeffs, ohtsuki, quintic_relation_coeffs, tilde_tau8_check,
    CongruenceReport, Relation, Tau8Report,
};
pub use surgery::{
    check_admissible, connected_sum, jm_borromean, jm_from_surgery, load_diagram, mirror,
    poincare_series, zero_framed_p_table, zero_framed_v_table, SurgeryPresentation,
};
pub use wrt::{wrt, wrt_unnormalized};
