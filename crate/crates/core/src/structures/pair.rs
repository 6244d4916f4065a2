use crate::linalg::{inverse, kernel_basis, Matrix};
use crate::scalar::Field;
use crate::structures::{AssocAlgebra, LieAlgebra, StructureError, TensorBasis};

/// A validated Leibniz pair `(A, L, μ)`. `mu[x]` is the matrix of `D_x = μ(x_x)`
/// acting on coordinate columns of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizPair<F> {
    a: AssocAlgebra<F>,
    l: LieAlgebra<F>,
    mu: Vec<Matrix<F>>,
}

/// Checks that every `D_x` is a derivation of `A` and that `x ↦ D_x` is a
/// Lie homomorphism, exhaustively on basis tuples.
pub fn validate_pair<F: Field>(
    a: AssocAlgebra<F>,
    l: LieAlgebra<F>,
    mu: Vec<Matrix<F>>,
) -> Result<LeibnizPair<F>, StructureError> {
    LeibnizPair::new(a, l, mu)
}

impl<F: Field> LeibnizPair<F> {
    pub fn new(a: AssocAlgebra<F>, l: LieAlgebra<F>, mu: Vec<Matrix<F>>) -> Result<Self, StructureError> {
        if mu.len() != l.dim() {
            return Err(StructureError::Dimension {
                what: "number of action matrices",
                expected: l.dim(),
                found: mu.len(),
            });
        }
        if let Some(m) = mu.iter().find(|m| m.shape() != (a.dim(), a.dim())) {
            return Err(StructureError::Dimension {
                what: "action matrix size",
                expected: a.dim(),
                found: if m.rows() != a.dim() { m.rows() } else { m.cols() },
            });
        }
        let d = a.dim();
        for (x, dx) in mu.iter().enumerate() {
            let images: Vec<Vec<F>> = (0..d).map(|i| dx.column(i)).collect();
            for i in 0..d {
                for j in 0..d {
                    let lhs = dx.mul_vec(a.product_basis(i, j));
                    let mut rhs = a.mul(&a.basis_vector(i), &images[j]);
                    for (r, v) in rhs.iter_mut().zip(a.mul(&images[i], &a.basis_vector(j))) {
                        *r = r.clone() + v;
                    }
                    if lhs != rhs {
                        return Err(StructureError::NotDerivation { x, a: i, b: j });
                    }
                }
            }
        }
        for x in 0..l.dim() {
            for y in x + 1..l.dim() {
                let mut lhs = Matrix::zeros(d, d);
                for (k, c) in l.bracket_basis(x, y).iter().enumerate() {
                    lhs.add_block(0, 0, &mu[k], c);
                }
                if lhs != mu[x].commutator(&mu[y]) {
                    return Err(StructureError::NotLieHom { x, y });
                }
            }
        }
        Ok(LeibnizPair { a, l, mu })
    }

    pub fn algebra(&self) -> &AssocAlgebra<F> {
        &self.a
    }

    pub fn lie(&self) -> &LieAlgebra<F> {
        &self.l
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.mu
    }

    pub fn action(&self, x: usize) -> &Matrix<F> {
        &self.mu[x]
    }

    pub fn dim_a(&self) -> usize {
        self.a.dim()
    }

    pub fn dim_l(&self) -> usize {
        self.l.dim()
    }

    /// `{x, a} = D_x(a)`
    pub fn act(&self, x: usize, a: &[F]) -> Vec<F> {
        self.mu[x].mul_vec(a)
    }

    /// `Σ_p (id ⊗ … ⊗ D_x ⊗ … ⊗ id)(t)` on a tensor of order `i` in
    /// row-major coordinates.
    pub fn act_on_tensor(&self, x: usize, t: &[F], i: usize) -> Vec<F> {
        let d = self.a.dim();
        let basis = TensorBasis::power(d, i);
        assert_eq!(t.len(), basis.len(), "tensor has wrong length");
        let dx = &self.mu[x];
        let mut out = vec![F::zero(); t.len()];
        for p in 0..i {
            let inner = basis.stride(p);
            let outer = t.len() / (inner * d);
            for o in 0..outer {
                for a in 0..d {
                    for r in 0..inner {
                        let v = &t[(o * d + a) * inner + r];
                        if v.is_zero() {
                            continue;
                        }
                        for s in 0..d {
                            let c = dx.get(s, a);
                            if !c.is_zero() {
                                out[(o * d + s) * inner + r].add_mul_assign(c, v);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Sparse image of a basis tensor under the action of `x_x`, as
    /// `(flat index, coefficient)` pairs; indices may repeat.
    pub fn act_on_basis_tensor(&self, x: usize, multi: &[usize]) -> Vec<(usize, F)> {
        let d = self.a.dim();
        let basis = TensorBasis::power(d, multi.len());
        let base = basis.index(multi);
        let dx = &self.mu[x];
        let mut out = Vec::new();
        for (p, &a) in multi.iter().enumerate() {
            let stride = basis.stride(p);
            for s in 0..d {
                let c = dx.get(s, a);
                if !c.is_zero() {
                    out.push((base - a * stride + s * stride, c.clone()));
                }
            }
        }
        out
    }

    /// The same pair after changing the bases of `A` and `L` to the columns
    /// of `pa` and `pl`.
    pub fn change_basis(&self, pa: &Matrix<F>, pl: &Matrix<F>) -> Self {
        let pa_inv = inverse(pa).expect("change of basis must be invertible");
        let d = self.a.dim();
        let mu = (0..self.l.dim())
            .map(|x| {
                let mut dx = Matrix::zeros(d, d);
                for y in 0..self.l.dim() {
                    dx.add_block(0, 0, &self.mu[y], pl.get(y, x));
                }
                pa_inv.mul(&dx).mul(pa)
            })
            .collect();
        LeibnizPair {
            a: self.a.change_basis(pa),
            l: self.l.change_basis(pl),
            mu,
        }
    }

    /// `L = 0` acting on `A`.
    pub fn without_lie(a: AssocAlgebra<F>) -> Self {
        LeibnizPair {
            a,
            l: LieAlgebra::zero(),
            mu: Vec::new(),
        }
    }

    /// Abelian `L` of the given dimension acting by zero.
    pub fn abelian_trivial(a: AssocAlgebra<F>, dim_l: usize) -> Self {
        let d = a.dim();
        LeibnizPair {
            a,
            l: LieAlgebra::abelian(dim_l),
            mu: vec![Matrix::zeros(d, d); dim_l],
        }
    }
}

/// Basis of `Der(A)` as `dim x dim` matrices, from the linear equations
/// `D(e_i e_j) = e_i D(e_j) + D(e_i) e_j`.
pub fn derivations<F: Field>(a: &AssocAlgebra<F>) -> Vec<Matrix<F>> {
    let d = a.dim();
    // unknown D[s][t] at column s * d + t; one equation per (i, j, k)
    let mut eqs: Matrix<F> = Matrix::zeros(d * d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let row = (i * d + j) * d + k;
                // D(e_i e_j)_k = Σ_t c_ijt D[k][t]
                for t in 0..d {
                    let c = a.constant(i, j, t);
                    if !c.is_zero() {
                        *eqs.get_mut(row, k * d + t) = eqs.get(row, k * d + t).clone() + c.clone();
                    }
                }
                // - (e_i D(e_j))_k = - Σ_s D[s][j] c_isk
                // - (D(e_i) e_j)_k = - Σ_s D[s][i] c_sjk
                for s in 0..d {
                    let c1 = a.constant(i, s, k);
                    if !c1.is_zero() {
                        *eqs.get_mut(row, s * d + j) = eqs.get(row, s * d + j).clone() - c1.clone();
                    }
                    let c2 = a.constant(s, j, k);
                    if !c2.is_zero() {
                        *eqs.get_mut(row, s * d + i) = eqs.get(row, s * d + i).clone() - c2.clone();
                    }
                }
            }
        }
    }
    kernel_basis(&eqs)
        .into_basis()
        .into_iter()
        .map(|v| Matrix::from_vec(d, d, v))
        .collect()
}
