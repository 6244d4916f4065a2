//! Gaussian elimination over an exact field.
//!
//! Forward elimination produces a row echelon form with unit pivots; back
//! substitution then clears entries above each pivot to reach the reduced
//! form. Row operations only touch the nonzero entries of the pivot row, and
//! among the candidate pivot rows for a column the sparsest one is chosen, so
//! the structured, mostly-zero coboundary matrices stay cheap to reduce. The
//! pivot choice never changes the reduced form, which is unique.

use crate::linalg::matrix::Matrix;
use crate::scalar::Field;

/// Row echelon form with unit pivots: row `k` has its leading one in column
/// `pivots[k]` and zeros below it. Rows past `pivots.len()` are zero.
pub(crate) struct Echelon<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
    pub reduced: bool,
}

fn row_nnz<F: Field>(row: &[F]) -> usize {
    row.iter().filter(|v| !v.is_zero()).count()
}

/// Subtracts `factor * pivot` from row `target`, where `pivot` lists the
/// nonzero entries of the pivot row. Keeps the row's nonzero count current.
fn eliminate<F: Field>(m: &mut Matrix<F>, target: usize, col: usize, pivot: &[(usize, F)], nnz: &mut [usize]) {
    let row = m.row_mut(target);
    let factor = std::mem::replace(&mut row[col], F::zero());
    let mut count = nnz[target] - 1;
    for (j, p) in pivot {
        let was_zero = row[*j].is_zero();
        row[*j].sub_mul_assign(&factor, p);
        match (was_zero, row[*j].is_zero()) {
            (true, false) => count += 1,
            (false, true) => count -= 1,
            _ => {}
        }
    }
    nnz[target] = count;
}

/// Forward elimination in place. Stops early once `stop_after` pivots were found.
pub(crate) fn forward<F: Field>(mut m: Matrix<F>, stop_after: Option<usize>) -> Echelon<F> {
    let (rows, cols) = m.shape();
    let mut nnz: Vec<usize> = (0..rows).map(|i| row_nnz(m.row(i))).collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows || stop_after.is_some_and(|s| rank >= s) {
            break;
        }
        let best = (rank..rows)
            .filter(|&i| !m.get(i, col).is_zero())
            .min_by_key(|&i| (nnz[i], i));
        let Some(best) = best else { continue };
        if best != rank {
            m.swap_rows(best, rank);
            nnz.swap(best, rank);
        }
        let inv = m.get(rank, col).inv();
        let pivot: Vec<(usize, F)> = {
            let row = m.row_mut(rank);
            for v in row[col..].iter_mut() {
                if !v.is_zero() {
                    *v = v.mul_ref(&inv);
                }
            }
            row.iter()
                .enumerate()
                .skip(col + 1)
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect()
        };
        for i in rank + 1..rows {
            if !m.get(i, col).is_zero() {
                eliminate(&mut m, i, col, &pivot, &mut nnz);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    Echelon {
        matrix: m,
        pivots,
        reduced: false,
    }
}

/// Clears the entries above every pivot, turning an echelon form into RREF.
pub(crate) fn back_substitute<F: Field>(mut e: Echelon<F>) -> Echelon<F> {
    if e.reduced {
        return e;
    }
    let rows = e.matrix.rows();
    let mut nnz: Vec<usize> = (0..rows).map(|i| row_nnz(e.matrix.row(i))).collect();
    for (k, &col) in e.pivots.iter().enumerate().rev() {
        let pivot: Vec<(usize, F)> = e
            .matrix
            .row(k)
            .iter()
            .enumerate()
            .skip(col + 1)
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.clone()))
            .collect();
        for i in 0..k {
            if !e.matrix.get(i, col).is_zero() {
                eliminate(&mut e.matrix, i, col, &pivot, &mut nnz);
            }
        }
    }
    e.reduced = true;
    e
}

pub(crate) fn rref_echelon<F: Field>(m: &Matrix<F>) -> Echelon<F> {
    back_substitute(forward(m.clone(), None))
}
