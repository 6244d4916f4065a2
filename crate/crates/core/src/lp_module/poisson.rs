use crate::linalg::Matrix;
use crate::lp_module::{Bimodule, LPModule, LieModule, ModuleError};
use crate::scalar::Field;
use crate::structures::{AssocAlgebra, LeibnizPair, LieAlgebra};

/// An algebra carrying an associative product and a Lie bracket with
/// `{ab, c} = a{b, c} + {a, c}b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonAlgebra<F> {
    assoc: AssocAlgebra<F>,
    lie: LieAlgebra<F>,
}

impl<F: Field> PoissonAlgebra<F> {
    pub fn new(assoc: AssocAlgebra<F>, lie: LieAlgebra<F>) -> Result<Self, ModuleError> {
        let d = assoc.dim();
        if lie.dim() != d {
            return Err(ModuleError::Dimension {
                what: "bracket dimension",
                expected: d,
                found: lie.dim(),
            });
        }
        for a in 0..d {
            for b in 0..d {
                let ab = assoc.product_basis(a, b);
                for c in 0..d {
                    let lhs = lie.bracket(ab, &lie.basis_vector(c));
                    let t1 = assoc.mul(&assoc.basis_vector(a), lie.bracket_basis(b, c));
                    let t2 = assoc.mul(lie.bracket_basis(a, c), &assoc.basis_vector(b));
                    if lhs
                        .iter()
                        .zip(t1.iter().zip(&t2))
                        .any(|(l, (u, v))| *l != u.clone() + v.clone())
                    {
                        return Err(ModuleError::NotPoisson { a, b, c });
                    }
                }
            }
        }
        Ok(PoissonAlgebra { assoc, lie })
    }

    /// Zero bracket on any algebra.
    pub fn with_zero_bracket(assoc: AssocAlgebra<F>) -> Self {
        let lie = LieAlgebra::abelian(assoc.dim());
        PoissonAlgebra { assoc, lie }
    }

    /// Commutator bracket.
    pub fn commutator(assoc: AssocAlgebra<F>) -> Self {
        let lie = LieAlgebra::commutator_of(&assoc);
        PoissonAlgebra { assoc, lie }
    }

    pub fn assoc(&self) -> &AssocAlgebra<F> {
        &self.assoc
    }

    pub fn lie(&self) -> &LieAlgebra<F> {
        &self.lie
    }

    /// The pair `(A, A)` with `μ(a) = {a, -}`.
    pub fn pair(&self) -> LeibnizPair<F> {
        let d = self.assoc.dim();
        let mu = (0..d).map(|i| self.lie.ad_matrix(i)).collect();
        LeibnizPair::new(self.assoc.clone(), self.lie.clone(), mu).expect("a Poisson bracket acts by derivations")
    }
}

/// `(M, M, σ)` with `σ(a ⊗ m) = am - ma` for a quasi-Poisson module `M`
/// given by its bimodule structure and bracket action `{a, m}`.
pub fn from_quasi_poisson<F: Field>(
    pa: &PoissonAlgebra<F>,
    m: Bimodule<F>,
    bracket: LieModule<F>,
) -> Result<LPModule<F>, ModuleError> {
    let d = pa.assoc().dim();
    m.validate(pa.assoc())?;
    let n = m.dim;
    let mut sigma = Matrix::zeros(n, d * n);
    for a in 0..d {
        sigma.add_block(0, a * n, &m.left[a], &F::one());
        sigma.add_block(0, a * n, &m.right[a], &-F::one());
    }
    LPModule::new(pa.pair(), m, bracket.clone(), bracket, sigma)
}

/// `(M, M, σ)` with `σ(a ⊗ m) = {a, m}`, after checking
/// `{ab, m} = a{b, m} + {a, m}b`.
pub fn from_poisson<F: Field>(
    pa: &PoissonAlgebra<F>,
    m: Bimodule<F>,
    bracket: LieModule<F>,
) -> Result<LPModule<F>, ModuleError> {
    let alg = pa.assoc();
    let d = alg.dim();
    m.validate(alg)?;
    bracket.validate(pa.lie(), "M")?;
    for a in 0..d {
        for b in 0..d {
            let lhs = bracket.action_of(alg.product_basis(a, b));
            let rhs = m.left[a]
                .mul(&bracket.action[b])
                .add(&m.right[b].mul(&bracket.action[a]));
            if lhs != rhs {
                let w = lhs.sub(&rhs).first_nonzero().map_or(0, |(_, c, _)| c);
                return Err(ModuleError::NotPoissonModule { a, b, m: w });
            }
        }
    }
    let n = m.dim;
    let mut sigma = Matrix::zeros(n, d * n);
    for a in 0..d {
        sigma.add_block(0, a * n, &bracket.action[a], &F::one());
    }
    LPModule::new(pa.pair(), m, bracket.clone(), bracket, sigma)
}
