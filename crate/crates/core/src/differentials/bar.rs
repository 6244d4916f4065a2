use crate::linalg::Matrix;
use crate::scalar::Field;
use crate::structures::{AssocAlgebra, TensorBasis};

/// `A^{⊗(i+3)} → A^{⊗(i+2)}`,
/// `a_1 ⊗ … ⊗ a_{i+3} ↦ Σ_{k=1}^{i+2} (-1)^{k-1} a_1 ⊗ … ⊗ a_k a_{k+1} ⊗ …`.
pub fn bar_delta<F: Field>(a: &AssocAlgebra<F>, i: usize) -> Matrix<F> {
    let d = a.dim();
    let sb = TensorBasis::power(d, i + 3);
    let tb = TensorBasis::power(d, i + 2);
    let mut out: Matrix<F> = Matrix::zeros(tb.len(), sb.len());
    for s in 0..sb.len() {
        let x = sb.multi_index(s);
        for k in 0..i + 2 {
            let sgn = if k % 2 == 0 { F::one() } else { -F::one() };
            for (p, c) in a.product_basis(x[k], x[k + 1]).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut y = x[..k].to_vec();
                y.push(p);
                y.extend_from_slice(&x[k + 2..]);
                let r = tb.index(&y);
                let e = out.get_mut(r, s);
                *e = e.clone() + sgn.mul_ref(c);
            }
        }
    }
    out
}
