//! Cohomology of Leibniz pairs and their modules over an exact field.
//!
//! A Leibniz pair is an associative algebra `A` with a Lie algebra `L`
//! acting on it by derivations. Everything here is given by structure
//! constants and computed exactly: validation of the axioms, the cochain
//! bicomplex of a module, its cohomology, and the long exact sequence that
//! splits it into an Ext part and a Lie algebra cohomology part.
//!
//! The algorithms are generic over [`Field`]; the aliases below fix the
//! scalar to [`Rational`].

pub mod complexes;
pub mod differentials;
pub mod engine;
pub mod library;
pub mod linalg;
pub mod lp_module;
pub mod random;
pub mod rational;
pub mod scalar;
pub mod structures;

pub use linalg::Matrix;
pub use rational::Rational;
pub use scalar::Field;

pub type QMatrix = Matrix<Rational>;
pub type QAlgebra = structures::AssocAlgebra<Rational>;
pub type QLieAlgebra = structures::LieAlgebra<Rational>;
pub type QPair = structures::LeibnizPair<Rational>;
pub type QModule = lp_module::LPModule<Rational>;
pub type QComplex = complexes::CochainComplex<Rational>;
