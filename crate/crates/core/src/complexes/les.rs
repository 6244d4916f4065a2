use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complexes::{ChainMap, CochainComplex, Cohomology, ComplexError};
use crate::linalg::{image_basis, kernel_basis, rank, solve, Matrix, Subspace};
use crate::scalar::Field;

/// `0 → sub → total → quot → 0`, checked degreewise.
#[derive(Debug, Clone)]
pub struct ShortExactSeqOfComplexes<F> {
    sub: CochainComplex<F>,
    total: CochainComplex<F>,
    quot: CochainComplex<F>,
    incl: ChainMap<F>,
    proj: ChainMap<F>,
}

impl<F: Field> ShortExactSeqOfComplexes<F> {
    pub fn new(
        sub: CochainComplex<F>,
        total: CochainComplex<F>,
        quot: CochainComplex<F>,
        incl: Vec<Matrix<F>>,
        proj: Vec<Matrix<F>>,
    ) -> Result<Self, ComplexError> {
        let incl = ChainMap::new(&sub, &total, incl)?;
        let proj = ChainMap::new(&total, &quot, proj)?;
        for n in 0..=total.top() {
            let (i, p) = (incl.at(n), proj.at(n));
            if rank(i) != i.cols() {
                return Err(ComplexError::NotShortExact {
                    degree: n,
                    reason: "inclusion is not injective",
                });
            }
            if rank(p) != p.rows() {
                return Err(ComplexError::NotShortExact {
                    degree: n,
                    reason: "projection is not surjective",
                });
            }
            let im = image_basis(i);
            let ker = kernel_basis(p);
            if im.check_inside(&ker).is_err() || ker.check_inside(&im).is_err() {
                return Err(ComplexError::NotShortExact {
                    degree: n,
                    reason: "image of inclusion differs from kernel of projection",
                });
            }
        }
        Ok(ShortExactSeqOfComplexes {
            sub,
            total,
            quot,
            incl,
            proj,
        })
    }

    pub fn sub(&self) -> &CochainComplex<F> {
        &self.sub
    }

    pub fn total(&self) -> &CochainComplex<F> {
        &self.total
    }

    pub fn quot(&self) -> &CochainComplex<F> {
        &self.quot
    }

    pub fn top(&self) -> usize {
        self.total.top()
    }

    /// `∂^n: H^n(quot) → H^{n+1}(sub)` in representative coordinates. At
    /// `n = top - 1` the target is `C^top(sub) / B^top(sub)`.
    pub fn connecting_map(&self, n: usize) -> Result<Matrix<F>, ComplexError> {
        let h = self.quot.cohomology(n)?;
        let target = self.sub_target(n + 1)?;
        self.connecting_with(n, &h, &target)
    }

    fn sub_target(&self, n: usize) -> Result<Cohomology<F>, ComplexError> {
        if n == self.top() {
            Ok(self.sub.top_cokernel())
        } else {
            self.sub.cohomology(n)
        }
    }

    fn lift(&self, n: usize, class: usize, y: &[F], target: &Cohomology<F>) -> Result<Vec<F>, ComplexError> {
        let dy = self.total.d(n).expect("degree below top").mul_vec(y);
        let x = solve(self.incl.at(n + 1), &dy).ok_or(ComplexError::LiftFailed { degree: n, class })?;
        target.class_of(&x).ok_or(ComplexError::LiftFailed { degree: n, class })
    }

    fn connecting_with(&self, n: usize, h: &Cohomology<F>, target: &Cohomology<F>) -> Result<Matrix<F>, ComplexError> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1e5 + n as u64);
        let mut columns = Vec::with_capacity(h.dim);
        for (class, q) in h.representatives.basis().iter().enumerate() {
            let y = solve(self.proj.at(n), q).ok_or(ComplexError::LiftFailed { degree: n, class })?;
            let first = self.lift(n, class, &y, target)?;
            // a second lift: add an element of the sub complex and a coboundary
            let mut y2 = y.clone();
            let w: Vec<F> = (0..self.sub.dim(n))
                .map(|_| F::from_i64(rng.gen_range(-3..=3)))
                .collect();
            for (a, b) in y2.iter_mut().zip(self.incl.at(n).mul_vec(&w)) {
                *a = std::mem::replace(a, F::zero()) + b;
            }
            if n > 0 {
                let u: Vec<F> = (0..self.total.dim(n - 1))
                    .map(|_| F::from_i64(rng.gen_range(-3..=3)))
                    .collect();
                for (a, b) in y2.iter_mut().zip(self.total.d(n - 1).unwrap().mul_vec(&u)) {
                    *a = std::mem::replace(a, F::zero()) + b;
                }
            }
            if self.lift(n, class, &y2, target)? != first {
                return Err(ComplexError::LiftDependent { degree: n });
            }
            columns.push(first);
        }
        Ok(Matrix::from_columns(target.dim, &columns))
    }
}

/// Which of the three cohomology terms of a degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LesTerm {
    Sub,
    Total,
    Quot,
}

/// One degree of the long exact sequence
/// `H^n(sub) → H^n(total) → H^n(quot) → H^{n+1}(sub)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LesDegree<F> {
    pub degree: usize,
    pub sub_dim: usize,
    pub total_dim: usize,
    pub quot_dim: usize,
    pub incl: Matrix<F>,
    pub proj: Matrix<F>,
    pub connecting: Matrix<F>,
}

impl<F: Field> LesDegree<F> {
    pub fn connecting_rank(&self) -> usize {
        rank(&self.connecting)
    }
}

/// The long exact sequence through degree `top - 1`, exactness verified at
/// every slot. The last connecting map lands in the top cokernel of `sub`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongExactSequence<F> {
    pub degrees: Vec<LesDegree<F>>,
    pub top_sub_cokernel_dim: usize,
}

fn induced<F: Field>(map: &Matrix<F>, from: &Cohomology<F>, to: &Cohomology<F>) -> Matrix<F> {
    let cols: Vec<Vec<F>> = from
        .representatives
        .basis()
        .iter()
        .map(|z| {
            to.class_of(&map.mul_vec(z))
                .expect("chain maps send cocycles to cocycles")
        })
        .collect();
    Matrix::from_columns(to.dim, &cols)
}

fn same<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> bool {
    a.check_inside(b).is_ok() && b.check_inside(a).is_ok()
}

pub fn long_exact_sequence<F: Field>(s: &ShortExactSeqOfComplexes<F>) -> Result<LongExactSequence<F>, ComplexError> {
    let top = s.top();
    let sub: Vec<Cohomology<F>> = s.sub.all_cohomology()?;
    let total: Vec<Cohomology<F>> = (0..top).map(|n| s.total.cohomology(n)).collect::<Result<_, _>>()?;
    let quot: Vec<Cohomology<F>> = (0..top).map(|n| s.quot.cohomology(n)).collect::<Result<_, _>>()?;
    let mut degrees: Vec<LesDegree<F>> = Vec::with_capacity(top);
    for n in 0..top {
        let incl = induced(s.incl.at(n), &sub[n], &total[n]);
        let proj = induced(s.proj.at(n), &total[n], &quot[n]);
        let connecting = s.connecting_with(n, &quot[n], &sub[n + 1])?;
        let fail = |term| ComplexError::ExactnessFailure { degree: n, term };
        let incoming = match degrees.last() {
            Some(prev) => image_basis(&prev.connecting),
            None => Subspace::zero(sub[n].dim),
        };
        if !same(&incoming, &kernel_basis(&incl)) {
            return Err(fail(LesTerm::Sub));
        }
        if !same(&image_basis(&incl), &kernel_basis(&proj)) {
            return Err(fail(LesTerm::Total));
        }
        if !same(&image_basis(&proj), &kernel_basis(&connecting)) {
            return Err(fail(LesTerm::Quot));
        }
        degrees.push(LesDegree {
            degree: n,
            sub_dim: sub[n].dim,
            total_dim: total[n].dim,
            quot_dim: quot[n].dim,
            incl,
            proj,
            connecting,
        });
    }
    Ok(LongExactSequence {
        degrees,
        top_sub_cokernel_dim: sub[top].dim,
    })
}
