//! Explicit matrices for the differentials of the cohomology bicomplex and
//! for the resolutions behind it.
//!
//! A cochain in `Hom(A^{⊗i} ⊗ ∧^j L, M)` is stored by its values on basis
//! tensors: coordinate `(t * W + w) * dim M + m` is the `m`-th coordinate of
//! `f(e_t ⊗ x_w)`, where `t` is the row-major index of the `A`-tensor and
//! `w` the lexicographic index of the exterior tuple (`W = C(dim L, j)`).
//! `Hom(∧^j L, P)` is the case `i = 0` with `P` as target.
//!
//! The four bicomplex maps are named by role: `delta_ce` is the
//! Chevalley–Eilenberg differential on the `P` row, `delta_sigma` the map
//! from the `P` row into the first `M` row through `σ`, `delta_hoch` the
//! Hochschild-type differential raising the tensor degree, and `delta_lie`
//! the Lie-type differential raising the exterior degree.

mod bar;
mod bicomplex;
mod hochschild;
mod koszul;

pub use bar::bar_delta;
pub use bicomplex::{delta_ce, delta_hoch, delta_lie, delta_sigma};
pub use hochschild::hochschild_complex;
pub use koszul::{koszul_d, mul_generator, KoszulChain, PbwElement};

use crate::linalg::Matrix;
use crate::scalar::Field;
use crate::structures::binomial;

/// Which coefficient space a cochain takes values in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    M,
    P,
}

/// `Hom(A^{⊗i} ⊗ ∧^j L, target)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CochainSpace {
    pub i: usize,
    pub j: usize,
    pub target: Target,
    pub dim: usize,
}

impl CochainSpace {
    pub fn new(i: usize, j: usize, target: Target, dim_a: usize, dim_l: usize, dim_target: usize) -> Self {
        CochainSpace {
            i,
            j,
            target,
            dim: dim_target * dim_a.pow(i as u32) * binomial(dim_l, j),
        }
    }
}

/// A linear map between cochain spaces; `matrix` is `target.dim x source.dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainMap<F> {
    pub source: CochainSpace,
    pub target: CochainSpace,
    pub matrix: Matrix<F>,
}

impl<F: Field> CochainMap<F> {
    pub fn new(source: CochainSpace, target: CochainSpace, matrix: Matrix<F>) -> Self {
        assert_eq!(matrix.shape(), (target.dim, source.dim), "cochain map has wrong shape");
        CochainMap { source, target, matrix }
    }

    /// `self ∘ first`
    pub fn after(&self, first: &CochainMap<F>) -> Matrix<F> {
        assert_eq!(first.target, self.source, "maps do not compose");
        self.matrix.mul(&first.matrix)
    }
}
