use std::collections::BTreeMap;

use crate::complexes::{CochainComplex, ComplexError};
use crate::linalg::Matrix;
use crate::scalar::Field;

/// A first-quadrant bicomplex truncated to total degree `top`.
///
/// Cell `(i, j)` is the row-`i`, column-`j` space. Horizontal maps go
/// `(i, j) → (i, j + 1)` and vertical maps `(i, j) → (i + 1, j)`; both
/// square to zero and the squares commute. Missing cells have dimension 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiComplex<F> {
    top: usize,
    dims: BTreeMap<(usize, usize), usize>,
    horizontal: BTreeMap<(usize, usize), Matrix<F>>,
    vertical: BTreeMap<(usize, usize), Matrix<F>>,
}

fn expect_shape<F: Field>(m: &Matrix<F>, shape: (usize, usize), degree: usize) -> Result<(), ComplexError> {
    if m.shape() != shape {
        return Err(ComplexError::Shape {
            degree,
            expected: shape,
            found: m.shape(),
        });
    }
    Ok(())
}

impl<F: Field> BiComplex<F> {
    /// Builds and validates. `h(i, j)` and `v(i, j)` are called for every cell
    /// with `i + j < top`; cells with `i + j ≤ top` are taken from `dim`.
    pub fn from_fn(
        top: usize,
        dim: impl Fn(usize, usize) -> usize,
        mut h: impl FnMut(usize, usize) -> Matrix<F>,
        mut v: impl FnMut(usize, usize) -> Matrix<F>,
    ) -> Result<Self, ComplexError> {
        let mut dims = BTreeMap::new();
        for n in 0..=top {
            for i in 0..=n {
                dims.insert((i, n - i), dim(i, n - i));
            }
        }
        let mut horizontal = BTreeMap::new();
        let mut vertical = BTreeMap::new();
        for n in 0..top {
            for i in 0..=n {
                let j = n - i;
                let hm = h(i, j);
                expect_shape(&hm, (dims[&(i, j + 1)], dims[&(i, j)]), n)?;
                horizontal.insert((i, j), hm);
                let vm = v(i, j);
                expect_shape(&vm, (dims[&(i + 1, j)], dims[&(i, j)]), n)?;
                vertical.insert((i, j), vm);
            }
        }
        let b = BiComplex {
            top,
            dims,
            horizontal,
            vertical,
        };
        b.validate()?;
        Ok(b)
    }

    fn validate(&self) -> Result<(), ComplexError> {
        for n in 0..self.top.saturating_sub(1) {
            for i in 0..=n {
                let j = n - i;
                let h = &self.horizontal[&(i, j)];
                let v = &self.vertical[&(i, j)];
                let hh = self.horizontal[&(i, j + 1)].mul(h);
                let vv = self.vertical[&(i + 1, j)].mul(v);
                let vh = self.vertical[&(i, j + 1)].mul(h);
                let hv = self.horizontal[&(i + 1, j)].mul(v);
                if let Some((row, col, _)) = hh.first_nonzero().or_else(|| vv.first_nonzero()) {
                    return Err(ComplexError::SquareNonzero { degree: n, row, col });
                }
                if vh != hv {
                    return Err(ComplexError::SquareNotCommuting { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn dim(&self, i: usize, j: usize) -> usize {
        self.dims.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn horizontal(&self, i: usize, j: usize) -> Option<&Matrix<F>> {
        self.horizontal.get(&(i, j))
    }

    pub fn vertical(&self, i: usize, j: usize) -> Option<&Matrix<F>> {
        self.vertical.get(&(i, j))
    }

    /// Total dimension in degree `n`.
    pub fn total_dim(&self, n: usize) -> usize {
        (0..=n).map(|i| self.dim(i, n - i)).sum()
    }

    /// The sub-bicomplex of rows `i ≥ first_row`; lower cells become zero.
    pub fn rows_from(&self, first_row: usize) -> Self {
        let keep = |&(i, _): &(usize, usize)| i >= first_row;
        let dims = self
            .dims
            .iter()
            .map(|(&c, &d)| (c, if keep(&c) { d } else { 0 }))
            .collect::<BTreeMap<_, _>>();
        let restrict = |maps: &BTreeMap<(usize, usize), Matrix<F>>, target: fn(usize, usize) -> (usize, usize)| {
            maps.iter()
                .map(|(&(i, j), m)| {
                    let (ti, tj) = target(i, j);
                    let m = if keep(&(i, j)) {
                        m.clone()
                    } else if keep(&(ti, tj)) {
                        Matrix::zeros(dims[&(ti, tj)], 0)
                    } else {
                        Matrix::zeros(0, 0)
                    };
                    ((i, j), m)
                })
                .collect()
        };
        BiComplex {
            top: self.top,
            horizontal: restrict(&self.horizontal, |i, j| (i, j + 1)),
            vertical: restrict(&self.vertical, |i, j| (i + 1, j)),
            dims,
        }
    }

    /// Row `i` as a cochain complex, indexed by column.
    pub fn row(&self, i: usize) -> CochainComplex<F> {
        let top = self.top.saturating_sub(i);
        let dims = (0..=top).map(|j| self.dim(i, j)).collect();
        let maps = (0..top).map(|j| self.horizontal[&(i, j)].clone()).collect();
        CochainComplex::trusted(dims, maps)
    }

    /// Offset of cell `(i, n - i)` inside the degree-`n` total space under
    /// the block order `order` (a permutation of `0..=n`, listing rows).
    pub fn block_offsets(&self, n: usize, order: &[usize]) -> Vec<usize> {
        let mut offsets = vec![0; n + 1];
        let mut acc = 0;
        for &i in order {
            offsets[i] = acc;
            acc += self.dim(i, n - i);
        }
        offsets
    }

    /// Total complex with differential `(-1)^i h + v` on cell `(i, j)`,
    /// blocks ordered by row. Verifies `d ∘ d = 0`.
    pub fn totalize(&self) -> Result<CochainComplex<F>, ComplexError> {
        let orders: Vec<Vec<usize>> = (0..=self.top).map(|n| (0..=n).collect()).collect();
        self.totalize_ordered(&orders)
    }

    /// As `totalize`, with `orders[n]` giving the block order in degree `n`.
    pub fn totalize_ordered(&self, orders: &[Vec<usize>]) -> Result<CochainComplex<F>, ComplexError> {
        assert_eq!(orders.len(), self.top + 1, "one block order per degree");
        for (n, o) in orders.iter().enumerate() {
            let mut sorted = o.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..=n).collect::<Vec<_>>(), "block order must permute the rows");
        }
        let dims: Vec<usize> = (0..=self.top).map(|n| self.total_dim(n)).collect();
        let mut maps = Vec::with_capacity(self.top);
        for n in 0..self.top {
            let src = self.block_offsets(n, &orders[n]);
            let tgt = self.block_offsets(n + 1, &orders[n + 1]);
            let mut d = Matrix::zeros(dims[n + 1], dims[n]);
            for i in 0..=n {
                let j = n - i;
                let sign = F::from_sign(if i % 2 == 0 { 1 } else { -1 });
                d.add_block(tgt[i], src[i], &self.horizontal[&(i, j)], &sign);
                d.add_block(tgt[i + 1], src[i], &self.vertical[&(i, j)], &F::one());
            }
            maps.push(d);
        }
        for n in 0..maps.len().saturating_sub(1) {
            if let Some((row, col, _)) = maps[n + 1].mul(&maps[n]).first_nonzero() {
                return Err(ComplexError::TotalSquareNonzero { degree: n, row, col });
            }
        }
        Ok(CochainComplex::trusted(dims, maps))
    }
}
