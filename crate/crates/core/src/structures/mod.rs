//! Associative algebras, Lie algebras, derivation actions and Leibniz pairs,
//! all given by structure constants in a fixed ordered basis.

mod algebra;
mod basis;
mod lie;
mod pair;

pub use algebra::AssocAlgebra;
pub use basis::{binomial, wedge_normalize, ExteriorBasis, TensorBasis};
pub use lie::LieAlgebra;
pub use pair::{derivations, validate_pair, LeibnizPair};

/// Failure of a structural axiom, naming the basis tuple where it fails.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("{what}: expected {expected}, found {found}")]
    Dimension {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{what}: index {index} out of range (dimension {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },
    #[error("not associative: (e{i} e{j}) e{k} != e{i} (e{j} e{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unit vector fails on basis element e{index}")]
    NoUnit { index: usize },
    #[error("bracket not antisymmetric on (x{i}, x{j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("Jacobi identity fails on (x{i}, x{j}, x{k})")]
    JacobiFails { i: usize, j: usize, k: usize },
    #[error("action of x{x} is not a derivation on (e{a}, e{b})")]
    NotDerivation { x: usize, a: usize, b: usize },
    #[error("action is not a Lie homomorphism on (x{x}, x{y})")]
    NotLieHom { x: usize, y: usize },
}

#[cfg(test)]
mod tests;
