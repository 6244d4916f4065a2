use crate::differentials::{CochainMap, CochainSpace, Target};
use crate::linalg::Matrix;
use crate::lp_module::Bimodule;
use crate::scalar::Field;
use crate::structures::{AssocAlgebra, TensorBasis};

/// The Hochschild cochain complex `M → Hom(A, M) → Hom(A^{⊗2}, M) → …`,
/// maps `d^0 … d^n_max`, with `d^0(m)(a) = am - ma`.
///
/// Built column by column by evaluating `δf` on every basis tensor, which
/// keeps it independent of the scatter-style assembly used for the
/// bicomplex.
pub fn hochschild_complex<F: Field>(a: &AssocAlgebra<F>, m: &Bimodule<F>, n_max: usize) -> Vec<CochainMap<F>> {
    (0..=n_max).map(|n| hochschild_map(a, m, n)).collect()
}

fn hochschild_map<F: Field>(a: &AssocAlgebra<F>, m: &Bimodule<F>, n: usize) -> CochainMap<F> {
    let d = a.dim();
    let dm = m.dim;
    let src = CochainSpace::new(n, 0, Target::M, d, 0, dm);
    let tgt = CochainSpace::new(n + 1, 0, Target::M, d, 0, dm);
    let sb = TensorBasis::power(d, n);
    let tb = TensorBasis::power(d, n + 1);
    let mut out = Matrix::zeros(tgt.dim, src.dim);
    for s in 0..sb.len() {
        for basis_m in 0..dm {
            // f(e_S) = m_basis_m when S = s, else 0
            let f = |tensor: &[usize]| -> Vec<F> {
                let mut v = vec![F::zero(); dm];
                if sb.index(tensor) == s {
                    v[basis_m] = F::one();
                }
                v
            };
            for t in 0..tb.len() {
                let x = tb.multi_index(t);
                let mut value = m.left[x[0]].mul_vec(&f(&x[1..]));
                for l in 0..n {
                    let sgn = if l % 2 == 0 { -F::one() } else { F::one() };
                    for (k, c) in a.product_basis(x[l], x[l + 1]).iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut merged = x[..l].to_vec();
                        merged.push(k);
                        merged.extend_from_slice(&x[l + 2..]);
                        let coef = sgn.mul_ref(c);
                        for (v, y) in value.iter_mut().zip(f(&merged)) {
                            v.add_mul_assign(&coef, &y);
                        }
                    }
                }
                let last = if n.is_multiple_of(2) { -F::one() } else { F::one() };
                for (v, y) in value.iter_mut().zip(m.right[x[n]].mul_vec(&f(&x[..n]))) {
                    v.add_mul_assign(&last, &y);
                }
                for (r, v) in value.into_iter().enumerate() {
                    if !v.is_zero() {
                        out.set(t * dm + r, s * dm + basis_m, v);
                    }
                }
            }
        }
    }
    CochainMap::new(src, tgt, out)
}
