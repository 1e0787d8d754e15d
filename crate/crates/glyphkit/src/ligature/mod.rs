//! Pair-rewrite ligature programs.
//!
//! A program maps ordered letter pairs to one of nine rewrite operations. A
//! cursor walks the word left to right applying rules ([`simulate`]); the
//! same table induces a recursive function on pairs ([`f_eval`]) whose
//! totality is equivalent to the absence of infinite rewrite loops, which is
//! what [`check_loops`] decides.

mod eval;
mod program;
mod simulate;

pub use eval::{check_loops, f_eval, f_table, Cycle, EvalStats, FTable, FValue, LoopReport};
pub use program::{
    parse_program, LigOp, LigParseError, LigParseErrorKind, LigProgram, LigRule, ProgramError,
};
pub use simulate::{
    default_step_limit, rewrite, simulate, Simulation, StepLimitExceeded, TraceStep,
};
