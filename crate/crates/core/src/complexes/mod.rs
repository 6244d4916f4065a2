//! Cochain complexes, bicomplexes and their total complexes, cohomology with
//! canonical representatives, and long exact sequences of cohomology.

mod bicomplex;
mod complex;
mod les;

pub use bicomplex::BiComplex;
pub use complex::{ChainMap, CochainComplex, Cohomology};
pub use les::{long_exact_sequence, LesDegree, LesTerm, LongExactSequence, ShortExactSeqOfComplexes};

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("map {degree} has shape {found:?}, expected {expected:?}")]
    Shape {
        degree: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("d_{} ∘ d_{} != 0: entry ({row}, {col})", .degree + 1, .degree)]
    SquareNonzero { degree: usize, row: usize, col: usize },
    #[error("total differential squares to a nonzero map in degree {degree}: entry ({row}, {col})")]
    TotalSquareNonzero { degree: usize, row: usize, col: usize },
    #[error("bicomplex square at cell ({i}, {j}) does not commute")]
    SquareNotCommuting { i: usize, j: usize },
    #[error("degree {degree} is beyond the computed range (top {top})")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("not a chain map in degree {degree}")]
    NotChainMap { degree: usize },
    #[error("sequence of complexes is not short exact in degree {degree}: {reason}")]
    NotShortExact { degree: usize, reason: &'static str },
    #[error("lift failed in degree {degree} for class {class}")]
    LiftFailed { degree: usize, class: usize },
    #[error("connecting map in degree {degree} depends on the choice of lift")]
    LiftDependent { degree: usize },
    #[error("long exact sequence is not exact at {term:?} in degree {degree}")]
    ExactnessFailure { degree: usize, term: LesTerm },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
