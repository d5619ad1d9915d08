//! Exact linear algebra over small prime fields.

mod forms;
mod matrix;
mod spin;

pub use forms::{apply_rows_f2, f2_matrix, f2_rows, similitude_factor, QuadraticFormF2, SymplecticForm};
pub use matrix::{
    inv_mod, is_prime, mat_invert, mult_order, pow_mod, primitive_root, wedge, wedge_square,
    FpMatrix, MAX_DIM, MAX_PRIME,
};
pub use spin::{projective_points, spin, spin_all_lines, SpinResult, Subspace};

pub(crate) use matrix::check_prime;
