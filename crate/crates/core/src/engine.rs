//! Top-level computations on LP-modules: the bicomplex and its total
//! complex, the cohomology groups, the long exact sequence relating them, and
//! the collapse cross-check against Lie algebra cohomology.
//!
//! Degrees: cell `(0, j)` is `Hom(∧^j L, P)` and cell `(i, j)` for `i ≥ 1` is
//! `Hom(A^{⊗i} ⊗ ∧^j L, M)`. The sub-bicomplex of rows `i ≥ 1` computes the
//! Ext groups with a shift: `Ext^n = H^{n+1}` of its total complex, because
//! row `i` comes from the `(i-1)`-st term of the resolution of `Ω¹(A)`.

use crate::complexes::{
    long_exact_sequence, BiComplex, CochainComplex, Cohomology, ComplexError, LongExactSequence,
    ShortExactSeqOfComplexes,
};
use crate::differentials::{delta_ce, delta_hoch, delta_lie, delta_sigma, hochschild_complex};
use crate::linalg::{kernel_basis, Matrix, RowBasis, Subspace};
use crate::lp_module::{Bimodule, LPModule, LieModule};
use crate::scalar::Field;
use crate::structures::{binomial, AssocAlgebra, LieAlgebra};

pub const DEFAULT_MAX_DEGREE: usize = 4;
pub const DEFAULT_BUDGET: usize = 20_000;

/// Guard rails: the largest degree a caller may request, and the largest
/// cochain space (in columns) the engine will assemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    pub max_degree: usize,
    pub budget: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_degree: DEFAULT_MAX_DEGREE,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("degree {requested} exceeds the cap {cap}")]
    DegreeCap { requested: usize, cap: usize },
    #[error("cochain space in degree {degree} has dimension {dim}, over the budget of {budget}")]
    BudgetExceeded { degree: usize, dim: usize, budget: usize },
    #[error("HH^{degree}(A, M) has dimension {dim}, so the spectral sequence need not collapse")]
    NotCollapsed { degree: usize, dim: usize },
    #[error("Ext^{degree} has dimension {ext} but HL^{degree}(L, D) has dimension {ce}")]
    MismatchedDims { degree: usize, ext: usize, ce: usize },
    #[error("{what} disagrees with the long exact sequence in degree {degree}: {standalone} vs {les}")]
    Inconsistent {
        what: &'static str,
        degree: usize,
        standalone: usize,
        les: usize,
    },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

impl EngineConfig {
    fn check_degree(&self, n: usize) -> Result<(), EngineError> {
        if n > self.max_degree {
            return Err(EngineError::DegreeCap {
                requested: n,
                cap: self.max_degree,
            });
        }
        Ok(())
    }

    fn check_dims(&self, dims: impl IntoIterator<Item = usize>) -> Result<(), EngineError> {
        for (degree, dim) in dims.into_iter().enumerate() {
            if dim > self.budget {
                return Err(EngineError::BudgetExceeded {
                    degree,
                    dim,
                    budget: self.budget,
                });
            }
        }
        Ok(())
    }
}

/// Dimension of cell `(i, j)`.
pub fn cell_dim<F: Field>(module: &LPModule<F>, i: usize, j: usize) -> usize {
    let pair = module.pair();
    let wedge = binomial(pair.dim_l(), j);
    if i == 0 {
        module.dim_p() * wedge
    } else {
        module.dim_m() * pair.dim_a().pow(i as u32) * wedge
    }
}

/// Dimension of the degree-`n` total space.
pub fn total_dim<F: Field>(module: &LPModule<F>, n: usize) -> usize {
    (0..=n).map(|i| cell_dim(module, i, n - i)).sum()
}

/// The bicomplex truncated at total degree `top`, after a budget check.
pub fn lp_bicomplex<F: Field>(
    module: &LPModule<F>,
    top: usize,
    cfg: &EngineConfig,
) -> Result<BiComplex<F>, EngineError> {
    cfg.check_dims((0..=top).map(|n| total_dim(module, n)))?;
    let l = module.pair().lie();
    let b = BiComplex::from_fn(
        top,
        |i, j| cell_dim(module, i, j),
        |i, j| {
            if i == 0 {
                delta_ce(l, module.p(), j).matrix
            } else {
                delta_lie(module, i, j).matrix
            }
        },
        |i, j| {
            if i == 0 {
                delta_sigma(module, j).matrix
            } else {
                delta_hoch(module, i, j).matrix
            }
        },
    )?;
    Ok(b)
}

/// Total complex through degree `top`.
pub fn lp_total_complex<F: Field>(
    module: &LPModule<F>,
    top: usize,
    cfg: &EngineConfig,
) -> Result<CochainComplex<F>, EngineError> {
    Ok(lp_bicomplex(module, top, cfg)?.totalize()?)
}

/// `dim H^n_LP` for `n = 0 ..= n_max`.
pub fn lp_cohomology_dims<F: Field>(
    module: &LPModule<F>,
    n_max: usize,
    cfg: &EngineConfig,
) -> Result<Vec<usize>, EngineError> {
    cfg.check_degree(n_max)?;
    Ok(lp_total_complex(module, n_max + 1, cfg)?.cohomology_dims(n_max)?)
}

/// `H^n_LP` with representatives, for `n = 0 ..= n_max`.
pub fn lp_cohomology<F: Field>(
    module: &LPModule<F>,
    n_max: usize,
    cfg: &EngineConfig,
) -> Result<Vec<Cohomology<F>>, EngineError> {
    cfg.check_degree(n_max)?;
    let tot = lp_total_complex(module, n_max + 1, cfg)?;
    Ok((0..=n_max).map(|n| tot.cohomology(n)).collect::<Result<_, _>>()?)
}

/// The Chevalley–Eilenberg complex `Hom(∧^• L, P)` through degree `top`.
pub fn ce_complex<F: Field>(l: &LieAlgebra<F>, p: &LieModule<F>, top: usize) -> CochainComplex<F> {
    let dims = (0..=top).map(|n| p.dim * binomial(l.dim(), n)).collect();
    let maps = (0..top).map(|n| delta_ce(l, p, n).matrix).collect();
    CochainComplex::new(dims, maps).expect("Chevalley–Eilenberg differential squares to zero")
}

/// `dim HL^n(L, P)` for `n = 0 ..= n_max`.
pub fn ce_cohomology<F: Field>(l: &LieAlgebra<F>, p: &LieModule<F>, n_max: usize) -> Vec<usize> {
    ce_complex(l, p, n_max + 1)
        .cohomology_dims(n_max)
        .expect("degree in range")
}

/// The Hochschild complex `M → Hom(A, M) → …` through degree `top`.
pub fn hochschild_cochain_complex<F: Field>(
    a: &AssocAlgebra<F>,
    m: &Bimodule<F>,
    top: usize,
    cfg: &EngineConfig,
) -> Result<CochainComplex<F>, EngineError> {
    let dims: Vec<usize> = (0..=top).map(|n| m.dim * a.dim().pow(n as u32)).collect();
    cfg.check_dims(dims.iter().copied())?;
    let maps = if top == 0 {
        Vec::new()
    } else {
        hochschild_complex(a, m, top - 1)
            .into_iter()
            .map(|c| c.matrix)
            .collect()
    };
    Ok(CochainComplex::new(dims, maps)?)
}

/// `dim HH^n(A, M)` for `n = 0 ..= n_max`, from the full Hochschild complex.
pub fn hochschild_cohomology<F: Field>(
    a: &AssocAlgebra<F>,
    m: &Bimodule<F>,
    n_max: usize,
    cfg: &EngineConfig,
) -> Result<Vec<usize>, EngineError> {
    cfg.check_degree(n_max)?;
    Ok(hochschild_cochain_complex(a, m, n_max + 1, cfg)?.cohomology_dims(n_max)?)
}

/// Total complex of the rows `i ≥ 1` through degree `top`, in the grading
/// of the full total complex.
pub fn q_total_complex<F: Field>(
    module: &LPModule<F>,
    top: usize,
    cfg: &EngineConfig,
) -> Result<CochainComplex<F>, EngineError> {
    cfg.check_dims((0..=top).map(|n| total_dim(module, n) - cell_dim(module, 0, n)))?;
    let q = lp_bicomplex(
        module,
        top,
        &EngineConfig {
            budget: usize::MAX,
            ..*cfg
        },
    )?
    .rows_from(1);
    Ok(q.totalize()?)
}

/// `dim Ext^n(Ω¹(A), M)` over the smash product for `n = 0 ..= n_max`,
/// computed as `H^{n+1}` of the total complex of rows `i ≥ 1`.
pub fn q_ext<F: Field>(module: &LPModule<F>, n_max: usize, cfg: &EngineConfig) -> Result<Vec<usize>, EngineError> {
    cfg.check_degree(n_max)?;
    let dims = q_total_complex(module, n_max + 2, cfg)?.cohomology_dims(n_max + 1)?;
    debug_assert_eq!(dims[0], 0);
    Ok(dims[1..].to_vec())
}

/// The long exact sequence of `0 → Tot(Q) → Tot(C) → Hom(∧^•L, P) → 0`
/// through degree `n_max`, with the three standalone computations it was
/// checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LesReport<F> {
    pub les: LongExactSequence<F>,
    /// `Ext^n` for `n = 0 ..= n_max - 1`; degree `n` of the sequence holds `Ext^{n-1}`.
    pub ext: Vec<usize>,
    pub lp: Vec<usize>,
    pub ce: Vec<usize>,
}

fn block_split<F: Field>(module: &LPModule<F>, n: usize) -> (Matrix<F>, Matrix<F>) {
    let dp = cell_dim(module, 0, n);
    let total = total_dim(module, n);
    let mut incl = Matrix::zeros(total, total - dp);
    incl.add_scaled_identity(dp, 0, total - dp, &F::one());
    let mut proj = Matrix::zeros(dp, total);
    proj.add_scaled_identity(0, 0, dp, &F::one());
    (incl, proj)
}

/// The short exact sequence of total complexes through degree `top`.
pub fn lp_short_exact_sequence<F: Field>(
    module: &LPModule<F>,
    top: usize,
    cfg: &EngineConfig,
) -> Result<ShortExactSeqOfComplexes<F>, EngineError> {
    let b = lp_bicomplex(module, top, cfg)?;
    let total = b.totalize()?;
    let sub = b.rows_from(1).totalize()?;
    let quot = b.row(0);
    let (incl, proj): (Vec<_>, Vec<_>) = (0..=top).map(|n| block_split(module, n)).unzip();
    Ok(ShortExactSeqOfComplexes::new(sub, total, quot, incl, proj)?)
}

pub fn les_report<F: Field>(
    module: &LPModule<F>,
    n_max: usize,
    cfg: &EngineConfig,
) -> Result<LesReport<F>, EngineError> {
    cfg.check_degree(n_max)?;
    let ses = lp_short_exact_sequence(module, n_max + 1, cfg)?;
    let les = long_exact_sequence(&ses)?;
    let lp = lp_cohomology_dims(module, n_max, cfg)?;
    let ce = ce_cohomology(module.pair().lie(), module.p(), n_max);
    let ext = if n_max == 0 {
        Vec::new()
    } else {
        q_ext(module, n_max - 1, cfg)?
    };
    for d in &les.degrees {
        let n = d.degree;
        let sub = if n == 0 { 0 } else { ext[n - 1] };
        for (what, standalone, les_dim) in [
            ("Ext", sub, d.sub_dim),
            ("H_LP", lp[n], d.total_dim),
            ("HL", ce[n], d.quot_dim),
        ] {
            if standalone != les_dim {
                return Err(EngineError::Inconsistent {
                    what,
                    degree: n,
                    standalone,
                    les: les_dim,
                });
            }
        }
    }
    Ok(LesReport { les, ext, lp, ce })
}

/// `D = ker(Hom(A, M) → Hom(A^{⊗2}, M))`, the derivations `A → M`, as an
/// `L`-module under `(x·f)(a) = x·f(a) - f(x·a)`. Returns the module and its
/// basis inside `Hom(A, M)` (coordinates `a * dim M + m`).
pub fn derivation_module<F: Field>(module: &LPModule<F>) -> (LieModule<F>, Subspace<F>) {
    let pair = module.pair();
    let (da, dm) = (pair.dim_a(), module.dim_m());
    let ker = kernel_basis(&delta_hoch(module, 1, 0).matrix);
    let basis = RowBasis::new(da * dm, ker.basis());
    let action = (0..pair.dim_l())
        .map(|x| {
            let phi = &module.m_lie().action[x];
            let dx = pair.action(x);
            let cols: Vec<Vec<F>> = basis
                .rows()
                .iter()
                .map(|f| {
                    let mut out = vec![F::zero(); da * dm];
                    for a in 0..da {
                        let fa = &f[a * dm..(a + 1) * dm];
                        let phi_fa = phi.mul_vec(fa);
                        for m in 0..dm {
                            let mut v = phi_fa[m].clone();
                            for b in 0..da {
                                let c = dx.get(b, a);
                                if !c.is_zero() {
                                    v.sub_mul_assign(c, &f[b * dm + m]);
                                }
                            }
                            out[a * dm + m] = v;
                        }
                    }
                    basis.coordinates(&out).expect("derivations are stable under L")
                })
                .collect();
            Matrix::from_columns(basis.dim(), &cols)
        })
        .collect();
    (
        LieModule {
            dim: basis.dim(),
            action,
        },
        basis.to_subspace(),
    )
}

/// Outcome of comparing `Ext^n` with `HL^n(L, D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseReport {
    pub derivation_dim: usize,
    pub hochschild: Vec<usize>,
    pub ext: Vec<usize>,
    pub ce: Vec<usize>,
    /// Degrees in which the two sides were required to agree. The top degree
    /// would also need `HH^{n_max + 2}`, which is not computed.
    pub asserted_through: Option<usize>,
}

pub fn collapse_check<F: Field>(
    module: &LPModule<F>,
    n_max: usize,
    cfg: &EngineConfig,
) -> Result<CollapseReport, EngineError> {
    cfg.check_degree(n_max)?;
    let a = module.pair().algebra();
    let hochschild = hochschild_cohomology(
        a,
        module.bimodule(),
        n_max + 1,
        &EngineConfig {
            max_degree: usize::MAX,
            ..*cfg
        },
    )?;
    if let Some(degree) = (2..=n_max + 1).find(|&p| hochschild[p] != 0) {
        return Err(EngineError::NotCollapsed {
            degree,
            dim: hochschild[degree],
        });
    }
    let (d, basis) = derivation_module(module);
    let ce = ce_cohomology(module.pair().lie(), &d, n_max);
    let ext = q_ext(module, n_max, cfg)?;
    for n in 0..n_max {
        if ext[n] != ce[n] {
            return Err(EngineError::MismatchedDims {
                degree: n,
                ext: ext[n],
                ce: ce[n],
            });
        }
    }
    Ok(CollapseReport {
        derivation_dim: basis.dim(),
        hochschild,
        ext,
        ce,
        asserted_through: n_max.checked_sub(1),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VanishingStatus {
    /// Every computed group from this degree through the top is zero.
    Observed { from: usize },
    /// The top computed group is nonzero.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingReport {
    pub dims: Vec<usize>,
    pub status: VanishingStatus,
}

/// Reports where the computed `H^n_LP` stop being nonzero. Only observed
/// dimensions are reported; no bound on global dimension is checked.
pub fn vanishing_probe<F: Field>(
    module: &LPModule<F>,
    n_max: usize,
    cfg: &EngineConfig,
) -> Result<VanishingReport, EngineError> {
    let dims = lp_cohomology_dims(module, n_max, cfg)?;
    let from = dims.iter().rposition(|&d| d != 0).map_or(0, |k| k + 1);
    let status = if from <= n_max {
        VanishingStatus::Observed { from }
    } else {
        VanishingStatus::Inconclusive
    };
    Ok(VanishingReport { dims, status })
}

#[cfg(test)]
mod tests;
