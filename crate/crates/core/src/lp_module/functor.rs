//! Repackaging of LP-modules as modules over the enveloping algebra of the
//! pair, recorded by generator actions only.
//!
//! A `UalModule` is a pair `(P, M, σ̃)`: a Lie module `P`, a bimodule `M`
//! with a compatible `L`-action, and `σ̃(a1 ⊗ a2 ⊗ a3 ⊗ α) = a1 σ(a2 ⊗ α) a3`
//! on the `A^{⊗3} ⊗ P` presentation of the 1-forms. Its columns are indexed
//! by `tensor * dim P + α` with the tensor index row-major over `A^{⊗3}`.

use crate::linalg::Matrix;
use crate::lp_module::hom::HomIdentity;
use crate::lp_module::{Bimodule, LPModule, LPModuleHom, LieModule, ModuleError};
use crate::scalar::Field;
use crate::structures::{LeibnizPair, TensorBasis};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UalModule<F> {
    pub pair: LeibnizPair<F>,
    pub p: LieModule<F>,
    pub m: Bimodule<F>,
    pub m_lie: LieModule<F>,
    pub sigma_tilde: Matrix<F>,
}

/// `(g, f)` repackaged as `(f, g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UalHom<F> {
    pub f: Matrix<F>,
    pub g: Matrix<F>,
}

pub fn functor_f<F: Field>(module: &LPModule<F>) -> UalModule<F> {
    let d = module.pair().dim_a();
    let dp = module.dim_p();
    let dm = module.dim_m();
    let b = module.bimodule();
    let mut st = Matrix::zeros(dm, d * d * d * dp);
    for a1 in 0..d {
        for a2 in 0..d {
            for a3 in 0..d {
                let lr = b.left[a1].mul(&b.right[a3]);
                for alpha in 0..dp {
                    let v = lr.mul_vec(&module.sigma_basis(a2, alpha));
                    let col = ((a1 * d + a2) * d + a3) * dp + alpha;
                    for (s, x) in v.into_iter().enumerate() {
                        st.set(s, col, x);
                    }
                }
            }
        }
    }
    UalModule {
        pair: module.pair().clone(),
        p: module.p().clone(),
        m: b.clone(),
        m_lie: module.m_lie().clone(),
        sigma_tilde: st,
    }
}

/// Recovers `σ(a ⊗ α) = σ̃(1 ⊗ a ⊗ 1 ⊗ α)` after checking that `σ̃` is
/// `A`-bilinear, kills the relations `a1 ⊗ a2a3 ⊗ a4 - a1a2 ⊗ a3 ⊗ a4 -
/// a1 ⊗ a2 ⊗ a3a4` of the 1-forms, and is `L`-equivariant.
pub fn functor_g<F: Field>(u: &UalModule<F>) -> Result<LPModule<F>, ModuleError> {
    let a = u.pair.algebra();
    let d = a.dim();
    let dp = u.p.dim;
    let dm = u.m.dim;
    u.m.validate(a)?;
    if u.sigma_tilde.shape() != (dm, d * d * d * dp) {
        return Err(ModuleError::Dimension {
            what: "extended σ columns",
            expected: d * d * d * dp,
            found: u.sigma_tilde.cols(),
        });
    }
    let t3 = TensorBasis::power(d, 3);
    let col = |t: usize, alpha: usize| t * dp + alpha;
    // σ̃ on a general tensor given by coordinates, for a fixed α
    let apply = |coords: &[(usize, F)], alpha: usize| -> Vec<F> {
        let mut out = vec![F::zero(); dm];
        for (t, c) in coords {
            for (o, s) in out.iter_mut().zip(u.sigma_tilde.column(col(*t, alpha))) {
                o.add_mul_assign(c, &s);
            }
        }
        out
    };
    let unit = a.unit();
    let mut sigma = Matrix::zeros(dm, d * dp);
    for a2 in 0..d {
        for alpha in 0..dp {
            let mut coords = Vec::new();
            for (i, ci) in unit.iter().enumerate() {
                for (k, ck) in unit.iter().enumerate() {
                    if !ci.is_zero() && !ck.is_zero() {
                        coords.push((t3.index(&[i, a2, k]), ci.mul_ref(ck)));
                    }
                }
            }
            for (s, x) in apply(&coords, alpha).into_iter().enumerate() {
                sigma.set(s, a2 * dp + alpha, x);
            }
        }
    }
    for a1 in 0..d {
        for a2 in 0..d {
            for a3 in 0..d {
                let lr = u.m.left[a1].mul(&u.m.right[a3]);
                for alpha in 0..dp {
                    let expect = lr.mul_vec(&sigma.column(a2 * dp + alpha));
                    if u.sigma_tilde.column(col(t3.index(&[a1, a2, a3]), alpha)) != expect {
                        return Err(ModuleError::TildeBilinearity { a1, a2, a3, alpha });
                    }
                }
            }
        }
    }
    let t4 = TensorBasis::power(d, 4);
    for t in 0..t4.len() {
        let ix = t4.multi_index(t);
        let (a1, a2, a3, a4) = (ix[0], ix[1], ix[2], ix[3]);
        let mut coords = Vec::new();
        for (k, c) in a.product_basis(a2, a3).iter().enumerate() {
            if !c.is_zero() {
                coords.push((t3.index(&[a1, k, a4]), c.clone()));
            }
        }
        for (k, c) in a.product_basis(a1, a2).iter().enumerate() {
            if !c.is_zero() {
                coords.push((t3.index(&[k, a3, a4]), -c.clone()));
            }
        }
        for (k, c) in a.product_basis(a3, a4).iter().enumerate() {
            if !c.is_zero() {
                coords.push((t3.index(&[a1, a2, k]), -c.clone()));
            }
        }
        for alpha in 0..dp {
            if apply(&coords, alpha).iter().any(|v| !v.is_zero()) {
                return Err(ModuleError::TildeRelation { tensor: t, alpha });
            }
        }
    }
    for x in 0..u.pair.dim_l() {
        for t in 0..t3.len() {
            let moved = u.pair.act_on_basis_tensor(x, &t3.multi_index(t));
            for alpha in 0..dp {
                let lhs = u.m_lie.action[x].mul_vec(&u.sigma_tilde.column(col(t, alpha)));
                let mut rhs = apply(&moved, alpha);
                for (beta, c) in u.p.action[x].column(alpha).iter().enumerate() {
                    if !c.is_zero() {
                        for (r, s) in rhs.iter_mut().zip(u.sigma_tilde.column(col(t, beta))) {
                            r.add_mul_assign(c, &s);
                        }
                    }
                }
                if lhs != rhs {
                    return Err(ModuleError::TildeEquivariance { x, tensor: t, alpha });
                }
            }
        }
    }
    LPModule::new(u.pair.clone(), u.m.clone(), u.m_lie.clone(), u.p.clone(), sigma)
}

pub fn functor_f_hom<F: Field>(h: &LPModuleHom<F>) -> UalHom<F> {
    UalHom {
        f: h.f.clone(),
        g: h.g.clone(),
    }
}

pub fn functor_g_hom<F: Field>(h: &UalHom<F>) -> LPModuleHom<F> {
    LPModuleHom {
        g: h.g.clone(),
        f: h.f.clone(),
    }
}

/// Checks that `(f, g)` intertwines all generator actions and `σ̃`.
pub fn validate_ual_hom<F: Field>(
    u1: &UalModule<F>,
    u2: &UalModule<F>,
    f: Matrix<F>,
    g: Matrix<F>,
) -> Result<UalHom<F>, ModuleError> {
    if u1.pair != u2.pair {
        return Err(ModuleError::PairMismatch);
    }
    let not = |identity| Err(ModuleError::NotAHom { identity });
    if f.shape() != (u2.p.dim, u1.p.dim) || g.shape() != (u2.m.dim, u1.m.dim) {
        return not(HomIdentity::Shape);
    }
    for x in 0..u1.pair.dim_l() {
        if f.mul(&u1.p.action[x]) != u2.p.action[x].mul(&f) {
            return not(HomIdentity::LieActionP { x });
        }
        if g.mul(&u1.m_lie.action[x]) != u2.m_lie.action[x].mul(&g) {
            return not(HomIdentity::LieActionM { x });
        }
    }
    for a in 0..u1.pair.dim_a() {
        if g.mul(&u1.m.left[a]) != u2.m.left[a].mul(&g) {
            return not(HomIdentity::LeftAction { a });
        }
        if g.mul(&u1.m.right[a]) != u2.m.right[a].mul(&g) {
            return not(HomIdentity::RightAction { a });
        }
    }
    let d = u1.pair.dim_a();
    let id3 = Matrix::identity(d * d * d);
    if g.mul(&u1.sigma_tilde) != u2.sigma_tilde.mul(&id3.kron(&f)) {
        return not(HomIdentity::Sigma);
    }
    Ok(UalHom { f, g })
}
