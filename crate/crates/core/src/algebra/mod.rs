//! Finite operation tables, groups and quandles.

mod group;
mod quandle;
mod table;

pub use group::{permutations, GroupTable};
pub use quandle::{
    closure_with_dual, dual_operation, generated_subalgebra, hom_count, standard_quandle, validate_axioms, Profile,
    QuandleKind,
};
pub use table::{invert_permutation, is_permutation, OperationTable};
