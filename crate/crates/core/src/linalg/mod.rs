//! Exact linear algebra: echelon forms, kernels, images, membership and solving.

mod echelon;
mod matrix;
mod subspace;

pub use matrix::{combine, is_zero_vec, Matrix};
pub use subspace::{quotient_dim, RowBasis, Subspace};

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    /// Basis vector `index` of the would-be subspace is not in the ambient one.
    #[error("basis vector {index} of the subspace is not contained in the superspace")]
    NotASubspace { index: usize },
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("vector of length {found} in ambient space of dimension {expected}")]
    Length { expected: usize, found: usize },
}

/// Reduced row echelon form and pivot columns; `rank = pivots.len()`.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let e = echelon::rref_echelon(m);
    (e.matrix, e.pivots)
}

/// Rank by forward elimination alone.
pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    // eliminate along the shorter side
    if m.rows() > m.cols() {
        echelon::forward(m.transpose(), None).pivots.len()
    } else {
        echelon::forward(m.clone(), None).pivots.len()
    }
}

/// Basis of `{v : m v = 0}`, one vector per free column of the RREF.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (k, &p) in pivots.iter().enumerate() {
                let e = r.get(k, f);
                if !e.is_zero() {
                    v[p] = -e.clone();
                }
            }
            v
        })
        .collect();
    Subspace::from_independent(cols, basis)
}

/// Basis of the column space: the original columns at the pivot positions.
pub fn image_basis<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let pivots = echelon::forward(m.clone(), None).pivots;
    let basis = pivots.iter().map(|&j| m.column(j)).collect();
    Subspace::from_independent(m.rows(), basis)
}

/// Some `x` with `m x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    assert_eq!(m.rows(), b.len(), "right-hand side has wrong length");
    let cols = m.cols();
    let mut aug = Matrix::zeros(m.rows(), cols + 1);
    for (i, bi) in b.iter().enumerate() {
        for j in 0..cols {
            let v = m.get(i, j);
            if !v.is_zero() {
                aug.set(i, j, v.clone());
            }
        }
        aug.set(i, cols, bi.clone());
    }
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (k, &p) in pivots.iter().enumerate() {
        x[p] = r.get(k, cols).clone();
    }
    Some(x)
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "inverse of a non-square matrix");
    let mut aug = Matrix::zeros(n, 2 * n);
    aug.add_block(0, 0, m, &F::one());
    aug.add_scaled_identity(0, n, n, &F::one());
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[..n].iter().enumerate().any(|(k, &p)| p != k) {
        return None;
    }
    Some(r.submatrix(0..n, n..2 * n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type Q = Rational;

    fn q(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_i64_rows(rows)
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> Matrix<Q> {
        Matrix::from_fn(rows, cols, |_, _| Q::from_int(rng.gen_range(lo..=hi)))
    }

    /// Cofactor-expansion determinant; exponential, used only as an oracle.
    fn det_cofactor(m: &Matrix<Q>) -> Q {
        let n = m.rows();
        if n == 0 {
            return Q::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = Q::zero();
        for j in 0..n {
            let a = m.get(0, j);
            if a.is_zero() {
                continue;
            }
            let minor = Matrix::from_fn(n - 1, n - 1, |r, c| m.get(r + 1, if c < j { c } else { c + 1 }).clone());
            let term = a * &det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    /// Largest k with a nonzero k x k minor.
    fn rank_by_minors(m: &Matrix<Q>) -> usize {
        let max = m.rows().min(m.cols());
        for k in (1..=max).rev() {
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let minor = Matrix::from_fn(k, k, |i, j| m.get(rs[i], cs[j]).clone());
                    if !det_cofactor(&minor).is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::<Q>::identity(3);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1, 2]));
        let z = Matrix::<Q>::zeros(2, 4);
        assert_eq!(rref(&z), (z.clone(), vec![]));
    }

    #[test]
    fn rank_matches_minor_oracle_on_random_5x5() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..30 {
            let mut m = random_matrix(&mut rng, 5, 5, -3, 3);
            // force some rank deficiency in a third of the trials
            if trial % 3 == 0 {
                let r0 = m.row(0).to_vec();
                let r1 = m.row(1).to_vec();
                for j in 0..5 {
                    m.set(4, j, r0[j].clone() + r1[j].clone());
                    m.set(3, j, r0[j].clone() * Q::from_int(2));
                }
            }
            let (_, pivots) = rref(&m);
            assert_eq!(pivots.len(), rank_by_minors(&m), "trial {trial}");
            assert_eq!(rank(&m), pivots.len());
        }
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::<Q>::identity(4)).is_empty());
        let k = kernel_basis(&Matrix::<Q>::zeros(3, 3));
        assert_eq!(k.dim(), 3);
        let m = q(&[&[1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0], vec![Q::from_int(-1), Q::from_int(1)]);
        assert!(is_zero_vec(&m.mul_vec(&k.basis()[0])));
    }

    #[test]
    fn image_examples() {
        let id = Matrix::<Q>::identity(3);
        let im = image_basis(&id);
        assert_eq!(im.dim(), 3);
        assert_eq!(im.basis()[1], id.column(1));
        assert!(image_basis(&Matrix::<Q>::zeros(3, 2)).is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let m = random_matrix(&mut rng, 4, 6, -1, 1);
            assert_eq!(image_basis(&m).dim(), rref(&m).1.len());
        }
    }

    #[test]
    fn solve_examples() {
        let b = vec![Q::from_int(3), Q::new(-1, 2)];
        assert_eq!(solve(&Matrix::identity(2), &b), Some(b.clone()));
        assert_eq!(solve(&Matrix::<Q>::zeros(2, 2), &b), None);
        assert_eq!(
            solve(&Matrix::<Q>::zeros(2, 3), &[Q::zero(), Q::zero()]),
            Some(vec![Q::zero(); 3])
        );
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let m = random_matrix(&mut rng, 4, 6, -4, 4);
            let x0: Vec<Q> = (0..6).map(|_| Q::from_int(rng.gen_range(-5..=5))).collect();
            let b = m.mul_vec(&x0);
            let x = solve(&m, &b).expect("consistent by construction");
            assert_eq!(m.mul_vec(&x), b);
        }
    }

    #[test]
    fn quotient_dim_examples() {
        let k = kernel_basis(&Matrix::<Q>::zeros(3, 3));
        assert_eq!(quotient_dim(&k, &k), Ok(0));
        assert_eq!(quotient_dim(&Subspace::zero(3), &k), Ok(3));
        // 0 -> Q^2 -i-> Q^5 -s-> Q^3 -> 0 with s a random surjection and i its kernel inclusion.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let s = loop {
            let s = random_matrix(&mut rng, 3, 5, -3, 3);
            if rank(&s) == 3 {
                break s;
            }
        };
        let ker = kernel_basis(&s);
        let i = Matrix::from_columns(5, ker.basis());
        assert!(s.mul(&i).is_zero());
        assert_eq!(quotient_dim(&image_basis(&i), &kernel_basis(&s)), Ok(0));
        let wrong = Subspace::from_independent(3, vec![vec![Q::one(), Q::zero(), Q::zero()]]);
        let plane = Subspace::from_independent(3, vec![vec![Q::zero(), Q::one(), Q::zero()]]);
        assert_eq!(
            quotient_dim(&wrong, &plane),
            Err(LinalgError::NotASubspace { index: 0 })
        );
    }

    #[test]
    fn inverse_round_trip() {
        let m = q(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(inverse(&q(&[&[1, 2], &[2, 4]])), None);
        assert_eq!(inverse(&Matrix::<Q>::zeros(0, 0)), Some(Matrix::zeros(0, 0)));
    }

    #[test]
    fn scalar_generic_over_bigrational() {
        use num_rational::BigRational;
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let big: Matrix<BigRational> = m.map(|v| v.to_big());
        assert_eq!(rank(&m), rank(&big));
        let (r1, p1) = rref(&m);
        let (r2, p2) = rref(&big);
        assert_eq!(p1, p2);
        assert_eq!(r1.map(|v| v.to_big()), r2);
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix<Q>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(Q::from_int).collect()))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let r = rank(&m);
            prop_assert_eq!(r + kernel_basis(&m).dim(), m.cols());
            prop_assert_eq!(r, image_basis(&m).dim());
        }

        #[test]
        fn rref_idempotent(m in arb_matrix()) {
            let (r, p) = rref(&m);
            let (rr, pp) = rref(&r);
            prop_assert_eq!(r, rr);
            prop_assert_eq!(p, pp);
        }

        #[test]
        fn solve_has_zero_residual(m in arb_matrix(), seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let b: Vec<Q> = (0..m.rows()).map(|_| Q::new(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect();
            if let Some(x) = solve(&m, &b) {
                prop_assert_eq!(m.mul_vec(&x), b);
            } else {
                // inconsistent: b is outside the column space
                prop_assert!(!image_basis(&m).contains(&b));
            }
        }
    }
}
