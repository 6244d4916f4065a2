use crate::linalg::echelon;
use crate::linalg::matrix::{is_zero_vec, Matrix};
use crate::linalg::LinalgError;
use crate::scalar::Field;

/// A subspace of `F^ambient_dim` given by linearly independent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient_dim: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![F::zero(); ambient_dim];
                v[i] = F::one();
                v
            })
            .collect();
        Subspace { ambient_dim, basis }
    }

    /// Checks lengths and independence.
    pub fn new(ambient_dim: usize, basis: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        if let Some(v) = basis.iter().find(|v| v.len() != ambient_dim) {
            return Err(LinalgError::Length {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        let m = Matrix::from_columns(ambient_dim, &basis);
        if crate::linalg::rank(&m) != basis.len() {
            return Err(LinalgError::Dependent);
        }
        Ok(Subspace { ambient_dim, basis })
    }

    /// For vectors already known to be independent (pivot columns, kernel vectors).
    pub(crate) fn from_independent(ambient_dim: usize, basis: Vec<Vec<F>>) -> Self {
        debug_assert!(basis.iter().all(|v| v.len() == ambient_dim));
        Subspace { ambient_dim, basis }
    }

    /// Span of arbitrary vectors; the basis is the nonzero rows of their RREF.
    pub fn span(ambient_dim: usize, vectors: &[Vec<F>]) -> Self {
        let rb = RowBasis::new(ambient_dim, vectors);
        Subspace {
            ambient_dim,
            basis: rb.rows,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<F>> {
        self.basis
    }

    /// Basis vectors as the columns of an `ambient_dim x dim` matrix.
    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }

    pub fn row_basis(&self) -> RowBasis<F> {
        RowBasis::new(self.ambient_dim, &self.basis)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        self.row_basis().contains(v)
    }

    /// Checks every basis vector of `self` for membership in `other`.
    pub fn check_inside(&self, other: &Subspace<F>) -> Result<(), LinalgError> {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimensions differ");
        let rb = other.row_basis();
        match self.basis.iter().position(|v| !rb.contains(v)) {
            Some(index) => Err(LinalgError::NotASubspace { index }),
            None => Ok(()),
        }
    }

    /// Equality as subspaces, by double inclusion.
    pub fn same_as(&self, other: &Subspace<F>) -> bool {
        self.check_inside(other).is_ok() && other.check_inside(self).is_ok()
    }
}

/// `dim(sup) - dim(sub)` after verifying `sub ⊆ sup`.
pub fn quotient_dim<F: Field>(sub: &Subspace<F>, sup: &Subspace<F>) -> Result<usize, LinalgError> {
    sub.check_inside(sup)?;
    Ok(sup.dim() - sub.dim())
}

/// A subspace held as the nonzero rows of an RREF matrix, which makes
/// membership and coordinate extraction a single reduction pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowBasis<F> {
    ambient_dim: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    // nonzero entries of each row past its pivot
    tails: Vec<Vec<(usize, F)>>,
}

impl<F: Field> RowBasis<F> {
    pub fn new(ambient_dim: usize, vectors: &[Vec<F>]) -> Self {
        let m = Matrix::from_rows(vectors.to_vec());
        let m = if vectors.is_empty() {
            Matrix::zeros(0, ambient_dim)
        } else {
            m
        };
        RowBasis::from_row_space(&m)
    }

    /// Row space of `m`.
    pub fn from_row_space(m: &Matrix<F>) -> Self {
        let e = echelon::back_substitute(echelon::forward(m.clone(), None));
        let rows: Vec<Vec<F>> = (0..e.pivots.len()).map(|k| e.matrix.row(k).to_vec()).collect();
        let tails = rows
            .iter()
            .zip(&e.pivots)
            .map(|(r, &p)| {
                r.iter()
                    .enumerate()
                    .skip(p + 1)
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        RowBasis {
            ambient_dim: m.cols(),
            rows,
            pivots: e.pivots,
            tails,
        }
    }

    /// Column space of `m`, via the row space of its transpose.
    pub fn from_column_space(m: &Matrix<F>) -> Self {
        RowBasis::from_row_space(&m.transpose())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the span from `v` in place and returns the coefficients
    /// used, one per row. `v` ends with zeros at every pivot column.
    pub fn reduce(&self, v: &mut [F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut coeffs = Vec::with_capacity(self.rows.len());
        for (tail, &p) in self.tails.iter().zip(&self.pivots) {
            let c = std::mem::replace(&mut v[p], F::zero());
            if !c.is_zero() {
                for (j, r) in tail {
                    v[*j].sub_mul_assign(&c, r);
                }
            }
            coeffs.push(c);
        }
        coeffs
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vec(&w)
    }

    /// Coefficients of `v` in the row basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let mut w = v.to_vec();
        let c = self.reduce(&mut w);
        is_zero_vec(&w).then_some(c)
    }

    pub fn to_subspace(&self) -> Subspace<F> {
        Subspace::from_independent(self.ambient_dim, self.rows.clone())
    }
}
