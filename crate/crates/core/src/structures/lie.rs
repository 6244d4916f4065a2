use crate::linalg::{inverse, Matrix};
use crate::scalar::Field;
use crate::structures::StructureError;

/// Finite-dimensional Lie algebra: `[x_i, x_j] = Σ_k f[i][j][k] x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra<F> {
    dim: usize,
    /// `f[(i * dim + j) * dim + k]`
    bracket: Vec<F>,
}

impl<F: Field> LieAlgebra<F> {
    /// Validates antisymmetry and the Jacobi identity on every basis tuple.
    pub fn new(dim: usize, bracket: Vec<F>) -> Result<Self, StructureError> {
        if bracket.len() != dim * dim * dim {
            return Err(StructureError::Dimension {
                what: "bracket tensor",
                expected: dim * dim * dim,
                found: bracket.len(),
            });
        }
        let l = LieAlgebra { dim, bracket };
        l.check()?;
        Ok(l)
    }

    /// Sparse constructor; entries are taken literally, so both `[x_i,x_j]`
    /// and `[x_j,x_i]` must be listed.
    pub fn from_triples(dim: usize, triples: &[(usize, usize, usize, F)]) -> Result<Self, StructureError> {
        let mut bracket = vec![F::zero(); dim * dim * dim];
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(StructureError::IndexOutOfRange {
                    what: "bracket entry",
                    index: *i.max(j).max(k),
                    bound: dim,
                });
            }
            let e = &mut bracket[(i * dim + j) * dim + k];
            *e = e.clone() + c.clone();
        }
        LieAlgebra::new(dim, bracket)
    }

    fn check(&self) -> Result<(), StructureError> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = self.bracket_basis(i, j);
                let ji = self.bracket_basis(j, i);
                if ij.iter().zip(ji).any(|(a, b)| !(a.clone() + b.clone()).is_zero()) {
                    return Err(StructureError::NotAntisymmetric { i, j });
                }
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let mut sum = vec![F::zero(); d];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let t = self.bracket(&self.basis_vector(a), self.bracket_basis(b, c));
                        for (s, v) in sum.iter_mut().zip(t) {
                            *s = s.clone() + v;
                        }
                    }
                    if sum.iter().any(|v| !v.is_zero()) {
                        return Err(StructureError::JacobiFails { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &[F] {
        &self.bracket
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F {
        &self.bracket[(i * self.dim + j) * self.dim + k]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[F] {
        let s = (i * self.dim + j) * self.dim;
        &self.bracket[s..s + self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul_ref(b);
                for (o, c) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    o.add_mul_assign(&ab, c);
                }
            }
        }
        out
    }

    /// Matrix of `ad_{x_i}`.
    pub fn ad_matrix(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.constant(i, j, k).clone())
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(F::is_zero)
    }

    pub fn zero() -> Self {
        LieAlgebra {
            dim: 0,
            bracket: Vec::new(),
        }
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            bracket: vec![F::zero(); dim * dim * dim],
        }
    }

    /// `sl_2` on `e, f, h` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
    pub fn sl2() -> Self {
        let (e, f, h) = (0, 1, 2);
        let c = F::from_i64;
        LieAlgebra::from_triples(
            3,
            &[
                (e, f, h, c(1)),
                (f, e, h, c(-1)),
                (h, e, e, c(2)),
                (e, h, e, c(-2)),
                (h, f, f, c(-2)),
                (f, h, f, c(2)),
            ],
        )
        .expect("sl2 is a Lie algebra")
    }

    /// The same Lie algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix<F>) -> Self {
        let pinv = inverse(p).expect("change of basis must be invertible");
        let d = self.dim;
        let cols: Vec<Vec<F>> = (0..d).map(|i| p.column(i)).collect();
        let mut bracket = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                bracket.extend(pinv.mul_vec(&self.bracket(&cols[i], &cols[j])));
            }
        }
        LieAlgebra { dim: d, bracket }
    }

    /// Commutator bracket on an associative algebra.
    pub fn commutator_of(a: &crate::structures::AssocAlgebra<F>) -> Self {
        let d = a.dim();
        let mut bracket = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                bracket.extend(
                    a.product_basis(i, j)
                        .iter()
                        .zip(a.product_basis(j, i))
                        .map(|(x, y)| x.clone() - y.clone()),
                );
            }
        }
        LieAlgebra { dim: d, bracket }
    }
}
