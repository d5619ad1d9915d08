//! Finite solvable group computations: exact linear algebra over prime fields,
//! closure and Schreier–Sims engines, derived series invariants, named witness
//! constructions and the composition-length bounds calculator.

pub mod atlas;
pub mod bounds;
pub mod error;
pub mod fpalgebra;
pub mod group;
pub mod handle;
pub mod lift;
pub mod perm;

pub use error::{GroupError, Result};
pub use handle::AnyGroup;
pub use group::{Element, Engine, EngineKind, Group, GroupContext, SeriesReport};
pub use perm::{Bsgs, Permutation};
