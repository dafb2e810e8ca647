//! State algebra for many-body quantum mechanics in the occupation-number
//! representation.
//!
//! States are finite complex combinations of occupation configurations
//! (mode -> count maps with no particle labels), kept per statistics
//! sector: `Full` (no symmetry), `Bose`, or `Fermi`. On top of that sit
//! the ladder operators with their canonical (anti)commutation relations,
//! unitary basis changes with field operators and position states, two
//! independent inner products with an explicit bridge between them, a
//! brute-force symmetrization oracle over labeled tensor products, and a
//! small model of collections whose elements carry no identity beyond
//! their kind.
//!
//! The `parallel` feature (on by default) runs the permanent and the
//! relation check suites on a thread pool; every parallel code path has a
//! sequential twin with bitwise identical results.

pub mod algebra;
pub mod basis;
pub mod checks;
pub mod error;
pub mod eval;
pub mod expr;
pub mod json;
pub mod ladder;
pub mod oracle;
pub mod qset;
pub mod state;

pub use algebra::{algebra_inner_product, fock_inner_product, norm};
pub use basis::BasisChange;
pub use error::Error;
pub use eval::{eval, EvalContext, Value};
pub use expr::{parse, Expr};
pub use ladder::{Bracket, LadderOp, OpWord};
pub use oracle::{oracle_inner_product, LabeledVector};
pub use qset::{AtomKind, QSet};
pub use state::{Mode, OccupationState, Sector, StateVector};
