//! Named group constructions.

mod basic;
mod class2;
mod holomorph;
mod witnesses;

pub use basic::{
    cyclic, direct_matrix, direct_perm, gl, metacyclic, metacyclic_multiplier, regular,
    s3_matrices, sl, sym, upper_triangular,
};
pub use class2::{class2_group, Class2Element, Class2Kind, Class2Model, MAX_V, MAX_Z};
pub use holomorph::{holomorph_perm, natural_semidirect, vector_code, vector_from_code, wreath, AutMap};
pub use witnesses::{
    binary_octahedral, exterior_square_group, extraspecial, gsp_extension, involution_count,
    prop8_group, qutrit_normalizer, Prop8, QutritModel,
};
