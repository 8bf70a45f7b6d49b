mod apply;
mod fuzz;
mod random;

pub use apply::{apply_move, insert_bubble, insert_crossing, MoveKind, MoveOutcome, MoveSpec};
pub use fuzz::{
    candidate_moves, fuzz_invariance, scope_report, FuzzConfig, FuzzReport, FuzzScope, MoveFamily, TrialOutcome,
};
pub use random::random_diagram;

#[cfg(test)]
mod tests;
