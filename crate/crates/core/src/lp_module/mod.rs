//! Modules `(M, P, σ)` over a Leibniz pair and their homomorphisms.
//!
//! Conventions: `left[a]` and `right[a]` are the matrices of `m ↦ e_a m` and
//! `m ↦ m e_a`; Lie actions are one matrix per basis element of `L`;
//! `σ` is a `dim M x (dim A · dim P)` matrix whose column `a * dim P + α`
//! is `σ(e_a ⊗ p_α)`.

mod functor;
mod hom;
mod poisson;

pub use functor::{functor_f, functor_f_hom, functor_g, functor_g_hom, validate_ual_hom, UalHom, UalModule};
pub use hom::{validate_hom, HomIdentity, LPModuleHom};
pub use poisson::{from_poisson, from_quasi_poisson, PoissonAlgebra};

use crate::linalg::Matrix;
use crate::scalar::Field;
use crate::structures::{LeibnizPair, LieAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("{what}: expected {expected}, found {found}")]
    Dimension {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("modules are over different Leibniz pairs")]
    PairMismatch,
    #[error("left action is not multiplicative on (e{a}, e{b})")]
    LeftAction { a: usize, b: usize },
    #[error("right action is not multiplicative on (e{a}, e{b})")]
    RightAction { a: usize, b: usize },
    #[error("the unit of A does not act as the identity on the {side} side")]
    UnitAction { side: &'static str },
    #[error("left action of e{a} and right action of e{b} do not commute")]
    BimoduleCommutation { a: usize, b: usize },
    #[error("Lie action on {space} is not a representation on (x{x}, x{y})")]
    LieModule { space: &'static str, x: usize, y: usize },
    #[error("left compatibility {{x, am}} = {{x,a}}m + a{{x,m}} fails at (x{x}, e{a}, m{m})")]
    LeftCompatibility { x: usize, a: usize, m: usize },
    #[error("right compatibility {{x, ma}} = m{{x,a}} + {{x,m}}a fails at (x{x}, e{a}, m{m})")]
    RightCompatibility { x: usize, a: usize, m: usize },
    #[error("σ is not a derivation in A: σ(ab⊗α) != aσ(b⊗α) + σ(a⊗α)b at (e{a}, e{b}, p{alpha})")]
    SigmaDerivation { a: usize, b: usize, alpha: usize },
    #[error("σ is not L-equivariant at (x{x}, e{a}, p{alpha})")]
    SigmaEquivariance { x: usize, a: usize, alpha: usize },
    #[error("bracket action fails {{ab,m}} = a{{b,m}} + {{a,m}}b at (e{a}, e{b}, m{m})")]
    NotPoissonModule { a: usize, b: usize, m: usize },
    #[error("algebra bracket fails the Leibniz rule at (e{a}, e{b}, e{c})")]
    NotPoisson { a: usize, b: usize, c: usize },
    #[error("not a homomorphism: {identity} fails")]
    NotAHom { identity: HomIdentity },
    #[error("extended σ is not A-bilinear at (e{a1}, e{a2}, e{a3}, p{alpha})")]
    TildeBilinearity {
        a1: usize,
        a2: usize,
        a3: usize,
        alpha: usize,
    },
    #[error("extended σ does not vanish on the relations of the 1-forms at tensor {tensor}, p{alpha}")]
    TildeRelation { tensor: usize, alpha: usize },
    #[error("extended σ is not L-equivariant at (x{x}, tensor {tensor}, p{alpha})")]
    TildeEquivariance { x: usize, tensor: usize, alpha: usize },
}

/// `A`-bimodule data: left and right action matrices per basis element of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule<F> {
    pub dim: usize,
    pub left: Vec<Matrix<F>>,
    pub right: Vec<Matrix<F>>,
}

/// Lie module data: one action matrix per basis element of `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieModule<F> {
    pub dim: usize,
    pub action: Vec<Matrix<F>>,
}

fn combo<F: Field>(mats: &[Matrix<F>], coeffs: &[F], n: usize) -> Matrix<F> {
    let mut out = Matrix::zeros(n, n);
    for (m, c) in mats.iter().zip(coeffs) {
        out.add_block(0, 0, m, c);
    }
    out
}

fn check_shapes<F: Field>(what: &'static str, mats: &[Matrix<F>], count: usize, n: usize) -> Result<(), ModuleError> {
    if mats.len() != count {
        return Err(ModuleError::Dimension {
            what,
            expected: count,
            found: mats.len(),
        });
    }
    if let Some(m) = mats.iter().find(|m| m.shape() != (n, n)) {
        return Err(ModuleError::Dimension {
            what,
            expected: n,
            found: if m.rows() != n { m.rows() } else { m.cols() },
        });
    }
    Ok(())
}

/// Column index of the first nonzero entry, used as a basis witness.
fn witness_col<F: Field>(m: &Matrix<F>) -> usize {
    m.first_nonzero().map_or(0, |(_, c, _)| c)
}

impl<F: Field> Bimodule<F> {
    pub fn zero(dim_a: usize) -> Self {
        Bimodule {
            dim: 0,
            left: vec![Matrix::zeros(0, 0); dim_a],
            right: vec![Matrix::zeros(0, 0); dim_a],
        }
    }

    /// `A` over itself by left and right multiplication.
    pub fn regular(a: &crate::structures::AssocAlgebra<F>) -> Self {
        Bimodule {
            dim: a.dim(),
            left: (0..a.dim()).map(|i| a.left_mul_matrix(i)).collect(),
            right: (0..a.dim()).map(|i| a.right_mul_matrix(i)).collect(),
        }
    }

    pub fn left_of(&self, a: &[F]) -> Matrix<F> {
        combo(&self.left, a, self.dim)
    }

    pub fn right_of(&self, a: &[F]) -> Matrix<F> {
        combo(&self.right, a, self.dim)
    }

    /// Checks the bimodule axioms against `a`.
    pub fn validate(&self, a: &crate::structures::AssocAlgebra<F>) -> Result<(), ModuleError> {
        let d = a.dim();
        check_shapes("left action", &self.left, d, self.dim)?;
        check_shapes("right action", &self.right, d, self.dim)?;
        let id = Matrix::identity(self.dim);
        if self.left_of(a.unit()) != id {
            return Err(ModuleError::UnitAction { side: "left" });
        }
        if self.right_of(a.unit()) != id {
            return Err(ModuleError::UnitAction { side: "right" });
        }
        for i in 0..d {
            for j in 0..d {
                let ij = a.product_basis(i, j);
                if self.left_of(ij) != self.left[i].mul(&self.left[j]) {
                    return Err(ModuleError::LeftAction { a: i, b: j });
                }
                if self.right_of(ij) != self.right[j].mul(&self.right[i]) {
                    return Err(ModuleError::RightAction { a: i, b: j });
                }
                if self.left[i].mul(&self.right[j]) != self.right[j].mul(&self.left[i]) {
                    return Err(ModuleError::BimoduleCommutation { a: i, b: j });
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> LieModule<F> {
    pub fn trivial(dim: usize, dim_l: usize) -> Self {
        LieModule {
            dim,
            action: vec![Matrix::zeros(dim, dim); dim_l],
        }
    }

    pub fn adjoint(l: &LieAlgebra<F>) -> Self {
        LieModule {
            dim: l.dim(),
            action: (0..l.dim()).map(|i| l.ad_matrix(i)).collect(),
        }
    }

    pub fn action_of(&self, x: &[F]) -> Matrix<F> {
        combo(&self.action, x, self.dim)
    }

    pub fn validate(&self, l: &LieAlgebra<F>, space: &'static str) -> Result<(), ModuleError> {
        check_shapes("Lie action", &self.action, l.dim(), self.dim)?;
        for x in 0..l.dim() {
            for y in x + 1..l.dim() {
                if self.action_of(l.bracket_basis(x, y)) != self.action[x].commutator(&self.action[y]) {
                    return Err(ModuleError::LieModule { space, x, y });
                }
            }
        }
        Ok(())
    }
}

/// A validated module `(M, P, σ)` over a Leibniz pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LPModule<F> {
    pair: LeibnizPair<F>,
    m: Bimodule<F>,
    m_lie: LieModule<F>,
    p: LieModule<F>,
    sigma: Matrix<F>,
}

/// Exhaustively checks the bimodule, Lie module, compatibility and σ
/// axioms over basis tuples.
pub fn validate_module<F: Field>(
    pair: LeibnizPair<F>,
    m: Bimodule<F>,
    m_lie: LieModule<F>,
    p: LieModule<F>,
    sigma: Matrix<F>,
) -> Result<LPModule<F>, ModuleError> {
    LPModule::new(pair, m, m_lie, p, sigma)
}

impl<F: Field> LPModule<F> {
    pub fn new(
        pair: LeibnizPair<F>,
        m: Bimodule<F>,
        m_lie: LieModule<F>,
        p: LieModule<F>,
        sigma: Matrix<F>,
    ) -> Result<Self, ModuleError> {
        let (da, dl) = (pair.dim_a(), pair.dim_l());
        m.validate(pair.algebra())?;
        if m_lie.dim != m.dim {
            return Err(ModuleError::Dimension {
                what: "Lie action on M",
                expected: m.dim,
                found: m_lie.dim,
            });
        }
        m_lie.validate(pair.lie(), "M")?;
        p.validate(pair.lie(), "P")?;
        if sigma.shape() != (m.dim, da * p.dim) {
            return Err(ModuleError::Dimension {
                what: "σ columns",
                expected: da * p.dim,
                found: sigma.cols(),
            });
        }
        for x in 0..dl {
            let dx = pair.action(x);
            let phi = &m_lie.action[x];
            for i in 0..da {
                let dxa = dx.column(i);
                let lhs = phi.mul(&m.left[i]);
                let rhs = m.left_of(&dxa).add(&m.left[i].mul(phi));
                if lhs != rhs {
                    let w = witness_col(&lhs.sub(&rhs));
                    return Err(ModuleError::LeftCompatibility { x, a: i, m: w });
                }
                let lhs = phi.mul(&m.right[i]);
                let rhs = m.right_of(&dxa).add(&m.right[i].mul(phi));
                if lhs != rhs {
                    let w = witness_col(&lhs.sub(&rhs));
                    return Err(ModuleError::RightCompatibility { x, a: i, m: w });
                }
            }
        }
        let module = LPModule {
            pair,
            m,
            m_lie,
            p,
            sigma,
        };
        for i in 0..da {
            for j in 0..da {
                for alpha in 0..module.p.dim {
                    let lhs = module.sigma_of(module.pair.algebra().product_basis(i, j), alpha);
                    let l = module.m.left[i].mul_vec(&module.sigma_basis(j, alpha));
                    let r = module.m.right[j].mul_vec(&module.sigma_basis(i, alpha));
                    if lhs
                        .iter()
                        .zip(l.iter().zip(&r))
                        .any(|(s, (u, v))| *s != u.clone() + v.clone())
                    {
                        return Err(ModuleError::SigmaDerivation { a: i, b: j, alpha });
                    }
                }
            }
        }
        for x in 0..dl {
            for i in 0..da {
                let dxa = module.pair.action(x).column(i);
                for alpha in 0..module.p.dim {
                    let lhs = module.m_lie.action[x].mul_vec(&module.sigma_basis(i, alpha));
                    let mut rhs = module.sigma_of(&dxa, alpha);
                    let xalpha = module.p.action[x].column(alpha);
                    for (beta, c) in xalpha.iter().enumerate() {
                        if !c.is_zero() {
                            for (r, s) in rhs.iter_mut().zip(module.sigma_basis(i, beta)) {
                                r.add_mul_assign(c, &s);
                            }
                        }
                    }
                    if lhs != rhs {
                        return Err(ModuleError::SigmaEquivariance { x, a: i, alpha });
                    }
                }
            }
        }
        Ok(module)
    }

    pub fn pair(&self) -> &LeibnizPair<F> {
        &self.pair
    }

    pub fn bimodule(&self) -> &Bimodule<F> {
        &self.m
    }

    pub fn m_lie(&self) -> &LieModule<F> {
        &self.m_lie
    }

    pub fn p(&self) -> &LieModule<F> {
        &self.p
    }

    pub fn sigma(&self) -> &Matrix<F> {
        &self.sigma
    }

    pub fn dim_m(&self) -> usize {
        self.m.dim
    }

    pub fn dim_p(&self) -> usize {
        self.p.dim
    }

    /// `σ(e_a ⊗ p_α)`
    pub fn sigma_basis(&self, a: usize, alpha: usize) -> Vec<F> {
        self.sigma.column(a * self.p.dim + alpha)
    }

    /// `σ(v ⊗ p_α)` for an element `v` of `A`.
    pub fn sigma_of(&self, v: &[F], alpha: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.m.dim];
        for (a, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, s) in out.iter_mut().zip(self.sigma_basis(a, alpha)) {
                o.add_mul_assign(c, &s);
            }
        }
        out
    }

    /// `(0, k, 0)`: `M = 0`, `P` one-dimensional with trivial action.
    pub fn trivial(pair: LeibnizPair<F>) -> Self {
        let (da, dl) = (pair.dim_a(), pair.dim_l());
        LPModule {
            pair,
            m: Bimodule::zero(da),
            m_lie: LieModule::trivial(0, dl),
            p: LieModule::trivial(1, dl),
            sigma: Matrix::zeros(0, da),
        }
    }

    /// `M = A` with multiplication and `μ` actions, `P = L` adjoint, and
    /// `σ(a ⊗ x) = -μ(x)(a)`. For an inner action `μ(x)(a) = xa - ax` this
    /// is the commutator `ax - xa`.
    pub fn adjoint(pair: LeibnizPair<F>) -> Result<Self, ModuleError> {
        let (da, dl) = (pair.dim_a(), pair.dim_l());
        let m = Bimodule::regular(pair.algebra());
        let m_lie = LieModule {
            dim: da,
            action: pair.actions().to_vec(),
        };
        let p = LieModule::adjoint(pair.lie());
        let sigma = Matrix::from_fn(da, da * dl, |s, col| {
            let (a, x) = (col / dl, col % dl);
            -pair.action(x).get(s, a).clone()
        });
        LPModule::new(pair, m, m_lie, p, sigma)
    }

    /// `(M, 0, 0)` with `M = A`: the regular bimodule with the `μ` action.
    pub fn algebra_without_p(pair: LeibnizPair<F>) -> Result<Self, ModuleError> {
        let (da, dl) = (pair.dim_a(), pair.dim_l());
        let m = Bimodule::regular(pair.algebra());
        let m_lie = LieModule {
            dim: da,
            action: pair.actions().to_vec(),
        };
        LPModule::new(pair, m, m_lie, LieModule::trivial(0, dl), Matrix::zeros(da, 0))
    }

    /// `(0, P, 0)` for a Lie module `P`.
    pub fn p_only(pair: LeibnizPair<F>, p: LieModule<F>) -> Result<Self, ModuleError> {
        let (da, dl) = (pair.dim_a(), pair.dim_l());
        let dp = p.dim;
        LPModule::new(
            pair,
            Bimodule::zero(da),
            LieModule::trivial(0, dl),
            p,
            Matrix::zeros(0, da * dp),
        )
    }

    /// The same module with `σ` replaced, revalidated.
    pub fn with_sigma(&self, sigma: Matrix<F>) -> Result<Self, ModuleError> {
        LPModule::new(
            self.pair.clone(),
            self.m.clone(),
            self.m_lie.clone(),
            self.p.clone(),
            sigma,
        )
    }

    /// Transport along invertible `sm: M → M'` and `sp: P → P'`; the pair
    /// `(sm, sp)` is then an isomorphism onto the result.
    pub fn transport(&self, sm: &Matrix<F>, sp: &Matrix<F>) -> Self {
        let sm_inv = crate::linalg::inverse(sm).expect("invertible");
        let sp_inv = crate::linalg::inverse(sp).expect("invertible");
        let conj = |m: &Matrix<F>| sm.mul(m).mul(&sm_inv);
        let da = self.pair.dim_a();
        let id_a: Matrix<F> = Matrix::identity(da);
        LPModule {
            pair: self.pair.clone(),
            m: Bimodule {
                dim: self.m.dim,
                left: self.m.left.iter().map(conj).collect(),
                right: self.m.right.iter().map(conj).collect(),
            },
            m_lie: LieModule {
                dim: self.m.dim,
                action: self.m_lie.action.iter().map(conj).collect(),
            },
            p: LieModule {
                dim: self.p.dim,
                action: self.p.action.iter().map(|m| sp.mul(m).mul(&sp_inv)).collect(),
            },
            sigma: sm.mul(&self.sigma).mul(&id_a.kron(&sp_inv)),
        }
    }

    /// The same module over the pair with `A` and `L` rebased to the columns
    /// of `pa` and `pl`; the spaces `M` and `P` keep their bases.
    pub fn change_pair_basis(&self, pa: &Matrix<F>, pl: &Matrix<F>) -> Result<Self, ModuleError> {
        let combine = |mats: &[Matrix<F>], p: &Matrix<F>, dim: usize| -> Vec<Matrix<F>> {
            (0..p.cols())
                .map(|k| {
                    let mut out = Matrix::zeros(dim, dim);
                    for (s, m) in mats.iter().enumerate() {
                        out.add_block(0, 0, m, p.get(s, k));
                    }
                    out
                })
                .collect()
        };
        let (dm, dp) = (self.m.dim, self.p.dim);
        let id_p: Matrix<F> = Matrix::identity(dp);
        LPModule::new(
            self.pair.change_basis(pa, pl),
            Bimodule {
                dim: dm,
                left: combine(&self.m.left, pa, dm),
                right: combine(&self.m.right, pa, dm),
            },
            LieModule {
                dim: dm,
                action: combine(&self.m_lie.action, pl, dm),
            },
            LieModule {
                dim: dp,
                action: combine(&self.p.action, pl, dp),
            },
            self.sigma.mul(&pa.kron(&id_p)),
        )
    }

    /// Direct sum, with `M` and `P` blocks in the order `self, other`.
    pub fn direct_sum(&self, other: &LPModule<F>) -> Result<Self, ModuleError> {
        if self.pair != other.pair {
            return Err(ModuleError::PairMismatch);
        }
        let sum = |a: &[Matrix<F>], b: &[Matrix<F>]| -> Vec<Matrix<F>> {
            a.iter().zip(b).map(|(x, y)| x.direct_sum(y)).collect()
        };
        let (da, p1, p2) = (self.pair.dim_a(), self.p.dim, other.p.dim);
        let (m1, m2) = (self.m.dim, other.m.dim);
        let mut sigma = Matrix::zeros(m1 + m2, da * (p1 + p2));
        for a in 0..da {
            for al in 0..p1 {
                for s in 0..m1 {
                    sigma.set(s, a * (p1 + p2) + al, self.sigma.get(s, a * p1 + al).clone());
                }
            }
            for al in 0..p2 {
                for s in 0..m2 {
                    sigma.set(m1 + s, a * (p1 + p2) + p1 + al, other.sigma.get(s, a * p2 + al).clone());
                }
            }
        }
        LPModule::new(
            self.pair.clone(),
            Bimodule {
                dim: m1 + m2,
                left: sum(&self.m.left, &other.m.left),
                right: sum(&self.m.right, &other.m.right),
            },
            LieModule {
                dim: m1 + m2,
                action: sum(&self.m_lie.action, &other.m_lie.action),
            },
            LieModule {
                dim: p1 + p2,
                action: sum(&self.p.action, &other.p.action),
            },
            sigma,
        )
    }
}

#[cfg(test)]
mod tests;
