use std::fmt;

use crate::linalg::Matrix;
use crate::lp_module::{LPModule, ModuleError};
use crate::scalar::Field;

/// The identity a candidate homomorphism failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomIdentity {
    Shape,
    LeftAction {
        a: usize,
    },
    RightAction {
        a: usize,
    },
    LieActionM {
        x: usize,
    },
    LieActionP {
        x: usize,
    },
    /// `g ∘ σ = σ' ∘ (id_A ⊗ f)`
    Sigma,
}

impl fmt::Display for HomIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomIdentity::Shape => write!(f, "matrix shapes"),
            HomIdentity::LeftAction { a } => write!(f, "g(e{a} m) = e{a} g(m)"),
            HomIdentity::RightAction { a } => write!(f, "g(m e{a}) = g(m) e{a}"),
            HomIdentity::LieActionM { x } => write!(f, "g({{x{x}, m}}) = {{x{x}, g(m)}}"),
            HomIdentity::LieActionP { x } => write!(f, "f([x{x}, α]) = [x{x}, f(α)]"),
            HomIdentity::Sigma => write!(f, "g σ = σ' (id ⊗ f)"),
        }
    }
}

/// A validated homomorphism `(g, f): (M, P, σ) → (M', P', σ')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LPModuleHom<F> {
    pub g: Matrix<F>,
    pub f: Matrix<F>,
}

pub fn validate_hom<F: Field>(
    m1: &LPModule<F>,
    m2: &LPModule<F>,
    g: Matrix<F>,
    f: Matrix<F>,
) -> Result<LPModuleHom<F>, ModuleError> {
    if m1.pair() != m2.pair() {
        return Err(ModuleError::PairMismatch);
    }
    let not = |identity| Err(ModuleError::NotAHom { identity });
    if g.shape() != (m2.dim_m(), m1.dim_m()) || f.shape() != (m2.dim_p(), m1.dim_p()) {
        return not(HomIdentity::Shape);
    }
    let (b1, b2) = (m1.bimodule(), m2.bimodule());
    for a in 0..m1.pair().dim_a() {
        if g.mul(&b1.left[a]) != b2.left[a].mul(&g) {
            return not(HomIdentity::LeftAction { a });
        }
        if g.mul(&b1.right[a]) != b2.right[a].mul(&g) {
            return not(HomIdentity::RightAction { a });
        }
    }
    for x in 0..m1.pair().dim_l() {
        if g.mul(&m1.m_lie().action[x]) != m2.m_lie().action[x].mul(&g) {
            return not(HomIdentity::LieActionM { x });
        }
        if f.mul(&m1.p().action[x]) != m2.p().action[x].mul(&f) {
            return not(HomIdentity::LieActionP { x });
        }
    }
    let id_a = Matrix::identity(m1.pair().dim_a());
    if g.mul(m1.sigma()) != m2.sigma().mul(&id_a.kron(&f)) {
        return not(HomIdentity::Sigma);
    }
    Ok(LPModuleHom { g, f })
}

impl<F: Field> LPModuleHom<F> {
    pub fn identity(m: &LPModule<F>) -> Self {
        LPModuleHom {
            g: Matrix::identity(m.dim_m()),
            f: Matrix::identity(m.dim_p()),
        }
    }

    /// `self ∘ first`
    pub fn after(&self, first: &LPModuleHom<F>) -> Self {
        LPModuleHom {
            g: self.g.mul(&first.g),
            f: self.f.mul(&first.f),
        }
    }
}
