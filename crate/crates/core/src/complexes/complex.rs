use crate::complexes::ComplexError;
use crate::linalg::{kernel_basis, rank, Matrix, RowBasis, Subspace};
use crate::scalar::Field;

/// A truncated cochain complex `C^0 → C^1 → … → C^top`.
///
/// Cohomology is available in degrees `0 ..= top - 1`; in the top degree
/// only the cokernel `C^top / B^top` is meaningful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainComplex<F> {
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

/// `H^n` with a basis of representative cocycles: the rows of the RREF of
/// `Z^n` reduced modulo `B^n`, so they vanish at the pivot columns of `B^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cohomology<F> {
    pub degree: usize,
    pub dim: usize,
    pub representatives: Subspace<F>,
    boundaries: RowBasis<F>,
    reps: RowBasis<F>,
}

impl<F: Field> Cohomology<F> {
    /// Coordinates of the class of a cocycle in the representative basis.
    /// `None` if `z` is not a cocycle of the right shape.
    pub fn class_of(&self, z: &[F]) -> Option<Vec<F>> {
        let mut r = z.to_vec();
        self.boundaries.reduce(&mut r);
        self.reps.coordinates(&r)
    }

    pub fn boundaries(&self) -> &RowBasis<F> {
        &self.boundaries
    }
}

fn check_square<F: Field>(d0: &Matrix<F>, d1: &Matrix<F>, degree: usize) -> Result<(), ComplexError> {
    match d1.mul(d0).first_nonzero() {
        Some((row, col, _)) => Err(ComplexError::SquareNonzero { degree, row, col }),
        None => Ok(()),
    }
}

impl<F: Field> CochainComplex<F> {
    /// `maps[n]` is `d_n: C^n → C^{n+1}`; verifies shapes and `d ∘ d = 0`.
    pub fn new(dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self, ComplexError> {
        assert!(!dims.is_empty(), "a complex needs at least one space");
        assert_eq!(maps.len() + 1, dims.len(), "one map between consecutive spaces");
        for (n, d) in maps.iter().enumerate() {
            if d.shape() != (dims[n + 1], dims[n]) {
                return Err(ComplexError::Shape {
                    degree: n,
                    expected: (dims[n + 1], dims[n]),
                    found: d.shape(),
                });
            }
        }
        for n in 0..maps.len().saturating_sub(1) {
            check_square(&maps[n], &maps[n + 1], n)?;
        }
        Ok(CochainComplex { dims, maps })
    }

    /// Assembly already guarantees `d ∘ d = 0`; only shapes are checked.
    pub(crate) fn trusted(dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        for (n, d) in maps.iter().enumerate() {
            assert_eq!(d.shape(), (dims[n + 1], dims[n]));
        }
        CochainComplex { dims, maps }
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `d_n`, or `None` at and above the top.
    pub fn d(&self, n: usize) -> Option<&Matrix<F>> {
        self.maps.get(n)
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    fn boundary_rank(&self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            rank(&self.maps[n - 1])
        }
    }

    /// `dim H^n` from ranks alone, for `n < top`.
    pub fn cohomology_dim(&self, n: usize) -> Result<usize, ComplexError> {
        self.check_degree(n)?;
        Ok(self.dims[n] - rank(&self.maps[n]) - self.boundary_rank(n))
    }

    /// `dim H^n` for `n = 0 ..= upto`, reusing each rank once.
    pub fn cohomology_dims(&self, upto: usize) -> Result<Vec<usize>, ComplexError> {
        self.check_degree(upto)?;
        let ranks: Vec<usize> = (0..=upto).map(|n| rank(&self.maps[n])).collect();
        Ok((0..=upto)
            .map(|n| self.dims[n] - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
            .collect())
    }

    /// `dim C^top / B^top`.
    pub fn top_cokernel_dim(&self) -> usize {
        let t = self.top();
        self.dims[t] - self.boundary_rank(t)
    }

    fn check_degree(&self, n: usize) -> Result<(), ComplexError> {
        if n >= self.top() {
            return Err(ComplexError::DegreeOutOfRange {
                degree: n,
                top: self.top(),
            });
        }
        Ok(())
    }

    fn boundary_basis(&self, n: usize) -> RowBasis<F> {
        if n == 0 {
            RowBasis::new(self.dims[0], &[])
        } else {
            RowBasis::from_column_space(&self.maps[n - 1])
        }
    }

    /// `H^n` with canonical representatives, for `n < top`.
    pub fn cohomology(&self, n: usize) -> Result<Cohomology<F>, ComplexError> {
        self.check_degree(n)?;
        let z = kernel_basis(&self.maps[n]);
        let boundaries = self.boundary_basis(n);
        crate::linalg::quotient_dim(&boundaries.to_subspace(), &z)?;
        let reduced: Vec<Vec<F>> = z
            .basis()
            .iter()
            .map(|v| {
                let mut r = v.clone();
                boundaries.reduce(&mut r);
                r
            })
            .collect();
        let reps = RowBasis::new(self.dims[n], &reduced);
        debug_assert_eq!(reps.dim(), z.dim() - boundaries.dim());
        Ok(Cohomology {
            degree: n,
            dim: reps.dim(),
            representatives: reps.to_subspace(),
            boundaries,
            reps,
        })
    }

    /// `C^top / B^top` in the same form as `cohomology`: the representatives
    /// are the standard basis vectors at the non-pivot columns of `B^top`.
    pub fn top_cokernel(&self) -> Cohomology<F> {
        let t = self.top();
        let boundaries = self.boundary_basis(t);
        let mut is_pivot = vec![false; self.dims[t]];
        for &p in boundaries.pivots() {
            is_pivot[p] = true;
        }
        let basis: Vec<Vec<F>> = (0..self.dims[t])
            .filter(|&c| !is_pivot[c])
            .map(|c| {
                let mut v = vec![F::zero(); self.dims[t]];
                v[c] = F::one();
                v
            })
            .collect();
        let reps = RowBasis::new(self.dims[t], &basis);
        Cohomology {
            degree: t,
            dim: reps.dim(),
            representatives: reps.to_subspace(),
            boundaries,
            reps,
        }
    }

    /// Cohomology in every degree below the top, plus the top cokernel.
    pub fn all_cohomology(&self) -> Result<Vec<Cohomology<F>>, ComplexError> {
        let mut out: Vec<_> = (0..self.top()).map(|n| self.cohomology(n)).collect::<Result<_, _>>()?;
        out.push(self.top_cokernel());
        Ok(out)
    }
}

/// Degreewise maps `f_n: C^n → D^n` commuting with the differentials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap<F> {
    maps: Vec<Matrix<F>>,
}

impl<F: Field> ChainMap<F> {
    pub fn new(src: &CochainComplex<F>, tgt: &CochainComplex<F>, maps: Vec<Matrix<F>>) -> Result<Self, ComplexError> {
        assert_eq!(src.top(), tgt.top(), "complexes must have the same length");
        assert_eq!(maps.len(), src.top() + 1);
        for (n, f) in maps.iter().enumerate() {
            if f.shape() != (tgt.dim(n), src.dim(n)) {
                return Err(ComplexError::Shape {
                    degree: n,
                    expected: (tgt.dim(n), src.dim(n)),
                    found: f.shape(),
                });
            }
        }
        for n in 0..src.top() {
            if maps[n + 1].mul(&src.maps[n]) != tgt.maps[n].mul(&maps[n]) {
                return Err(ComplexError::NotChainMap { degree: n });
            }
        }
        Ok(ChainMap { maps })
    }

    pub fn at(&self, n: usize) -> &Matrix<F> {
        &self.maps[n]
    }
}
