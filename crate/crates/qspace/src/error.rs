use thiserror::Error;

use crate::state::Sector;

/// Errors shared across the state algebra.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate mode {0} in occupation list")]
    DuplicateMode(u32),

    #[error("mode {0} listed with count 0; omit unoccupied modes")]
    ZeroCount(u32),

    #[error("mode index must be >= 1")]
    InvalidMode,

    #[error("sector mismatch: expected {expected}, found {found}")]
    SectorMismatch { expected: Sector, found: Sector },

    #[error("operation undefined on the zero vector")]
    ZeroState,

    #[error("index {index} exceeds the cutoff M = {cutoff}")]
    CutoffExceeded { index: u32, cutoff: u32 },

    #[error("no basis change loaded; field operators need one")]
    NoBasisLoaded,

    #[error("matrix is not square: row {row} has length {len}, expected {n}")]
    ShapeError { row: usize, len: usize, n: usize },

    #[error("permanent limited to n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },

    #[error("matrix rows are not orthonormal: deviation {dev:e} exceeds {tol:e}")]
    NotUnitary { dev: f64, tol: f64 },

    #[error("field operators act on Bose or Fermi states")]
    FieldOnFull,

    #[error("kind {0:?} absent from the collection")]
    AbsentKind(String),

    #[error("{0}")]
    Evaluation(String),
}
