use crate::linalg::{inverse, Matrix};
use crate::scalar::Field;
use crate::structures::StructureError;

/// Finite-dimensional unital associative algebra given by structure
/// constants: `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocAlgebra<F> {
    dim: usize,
    /// `c[(i * dim + j) * dim + k]`
    mult: Vec<F>,
    unit: Vec<F>,
}

impl<F: Field> AssocAlgebra<F> {
    /// Validates associativity and the unit on every basis tuple.
    pub fn new(dim: usize, mult: Vec<F>, unit: Vec<F>) -> Result<Self, StructureError> {
        if mult.len() != dim * dim * dim {
            return Err(StructureError::Dimension {
                what: "multiplication tensor",
                expected: dim * dim * dim,
                found: mult.len(),
            });
        }
        if unit.len() != dim {
            return Err(StructureError::Dimension {
                what: "unit vector",
                expected: dim,
                found: unit.len(),
            });
        }
        let a = AssocAlgebra { dim, mult, unit };
        a.check()?;
        Ok(a)
    }

    /// Sparse constructor from `(i, j, k, c)` entries; repeated entries add.
    pub fn from_triples(
        dim: usize,
        triples: &[(usize, usize, usize, F)],
        unit: Vec<F>,
    ) -> Result<Self, StructureError> {
        let mut mult = vec![F::zero(); dim * dim * dim];
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(StructureError::IndexOutOfRange {
                    what: "multiplication entry",
                    index: *i.max(j).max(k),
                    bound: dim,
                });
            }
            let e = &mut mult[(i * dim + j) * dim + k];
            *e = e.clone() + c.clone();
        }
        AssocAlgebra::new(dim, mult, unit)
    }

    fn check(&self) -> Result<(), StructureError> {
        let d = self.dim;
        for i in 0..d {
            let l = self.mul(&self.unit, &self.basis_vector(i));
            let r = self.mul(&self.basis_vector(i), &self.unit);
            if l != self.basis_vector(i) || r != self.basis_vector(i) {
                return Err(StructureError::NoUnit { index: i });
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.product_basis(i, j).to_vec();
                for l in 0..d {
                    let left = self.mul(&ij, &self.basis_vector(l));
                    let right = self.mul(&self.basis_vector(i), self.product_basis(j, l));
                    if left != right {
                        return Err(StructureError::NotAssociative { i, j, k: l });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn constants(&self) -> &[F] {
        &self.mult
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i e_j`.
    pub fn product_basis(&self, i: usize, j: usize) -> &[F] {
        let s = (i * self.dim + j) * self.dim;
        &self.mult[s..s + self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.mul_ref(y);
                for (o, c) in out.iter_mut().zip(self.product_basis(i, j)) {
                    o.add_mul_assign(&xy, c);
                }
            }
        }
        out
    }

    /// Matrix of `b ↦ e_i b`.
    pub fn left_mul_matrix(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.constant(i, j, k).clone())
    }

    /// Matrix of `b ↦ b e_i`.
    pub fn right_mul_matrix(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.constant(j, i, k).clone())
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.product_basis(i, j) == self.product_basis(j, i)))
    }

    /// The same algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix<F>) -> Self {
        let pinv = inverse(p).expect("change of basis must be invertible");
        let d = self.dim;
        let cols: Vec<Vec<F>> = (0..d).map(|i| p.column(i)).collect();
        let mut mult = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                mult.extend(pinv.mul_vec(&self.mul(&cols[i], &cols[j])));
            }
        }
        AssocAlgebra {
            dim: d,
            mult,
            unit: pinv.mul_vec(&self.unit),
        }
    }

    /// `ℚ`-style one-dimensional algebra.
    pub fn ground() -> Self {
        AssocAlgebra {
            dim: 1,
            mult: vec![F::one()],
            unit: vec![F::one()],
        }
    }

    /// Full matrix algebra `M_n` on matrix units `E_{rs}`, basis index `r * n + s`.
    pub fn matrix_algebra(n: usize) -> Self {
        let d = n * n;
        let mut mult = vec![F::zero(); d * d * d];
        for r in 0..n {
            for s in 0..n {
                for t in 0..n {
                    // E_rs E_st = E_rt
                    let (i, j, k) = (r * n + s, s * n + t, r * n + t);
                    mult[(i * d + j) * d + k] = F::one();
                }
            }
        }
        let mut unit = vec![F::zero(); d];
        for r in 0..n {
            unit[r * n + r] = F::one();
        }
        AssocAlgebra { dim: d, mult, unit }
    }

    /// Truncated polynomials `ℚ[t]/(t^n)` on `1, t, …, t^{n-1}`.
    pub fn truncated_polynomials(n: usize) -> Self {
        let mut mult = vec![F::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n - i {
                mult[(i * n + j) * n + i + j] = F::one();
            }
        }
        let mut unit = vec![F::zero(); n];
        if n > 0 {
            unit[0] = F::one();
        }
        AssocAlgebra { dim: n, mult, unit }
    }

    /// `ℚ^n` with componentwise product.
    pub fn diagonal(n: usize) -> Self {
        let mut mult = vec![F::zero(); n * n * n];
        for i in 0..n {
            mult[(i * n + i) * n + i] = F::one();
        }
        AssocAlgebra {
            dim: n,
            mult,
            unit: vec![F::one(); n],
        }
    }

    /// Upper triangular 2x2 matrices on `E_11, E_12, E_22`.
    pub fn upper_triangular_2() -> Self {
        let t = |i, j, k| (i, j, k, F::one());
        let one = F::one();
        AssocAlgebra::from_triples(
            3,
            &[t(0, 0, 0), t(0, 1, 1), t(1, 2, 1), t(2, 2, 2)],
            vec![one.clone(), F::zero(), one],
        )
        .expect("upper triangular matrices form an algebra")
    }
}
