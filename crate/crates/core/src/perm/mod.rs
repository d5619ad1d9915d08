//! Permutation groups and the Schreier–Sims engine.

mod bsgs;
mod permutation;

pub use bsgs::{contains, group_order, normal_closure_perm, schreier_sims, Bsgs};
pub use permutation::{Permutation, MAX_DEGREE};
