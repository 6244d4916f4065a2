//! Seeded generators of valid Leibniz pairs and modules, for property tests.
//!
//! Pairs are built from a handful of small algebras under a random change of
//! basis, with `L` a Lie-closed space of derivations (or an abelian algebra
//! acting trivially). Modules are assembled from families whose axioms hold
//! identically and then transported along random isomorphisms.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::linalg::{inverse, kernel_basis, Matrix, RowBasis};
use crate::lp_module::{Bimodule, LPModule, LieModule};
use crate::scalar::Field;
use crate::structures::{derivations, AssocAlgebra, LeibnizPair, LieAlgebra};

pub fn small_int<F: Field, R: Rng>(rng: &mut R, bound: i64) -> F {
    F::from_i64(rng.gen_range(-bound..=bound))
}

pub fn random_matrix<F: Field, R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Matrix<F> {
    Matrix::from_fn(rows, cols, |_, _| small_int(rng, bound))
}

pub fn random_invertible<F: Field, R: Rng>(rng: &mut R, n: usize) -> Matrix<F> {
    loop {
        let m = random_matrix(rng, n, n, 1);
        if inverse(&m).is_some() {
            return m;
        }
    }
}

/// `1, x_1, …, x_n` with all products of the `x_i` zero.
pub fn square_zero<F: Field>(n: usize) -> AssocAlgebra<F> {
    let d = n + 1;
    let mut t = vec![(0, 0, 0, F::one())];
    for i in 1..d {
        t.push((0, i, i, F::one()));
        t.push((i, 0, i, F::one()));
    }
    let mut unit = vec![F::zero(); d];
    unit[0] = F::one();
    AssocAlgebra::from_triples(d, &t, unit).expect("square-zero extension")
}

/// One of the bundled small algebras of dimension at most `max_dim`.
pub fn random_algebra<F: Field, R: Rng>(rng: &mut R, max_dim: usize) -> AssocAlgebra<F> {
    let candidates: Vec<AssocAlgebra<F>> = vec![
        AssocAlgebra::ground(),
        AssocAlgebra::diagonal(2),
        AssocAlgebra::truncated_polynomials(2),
        AssocAlgebra::diagonal(3),
        AssocAlgebra::truncated_polynomials(3),
        AssocAlgebra::upper_triangular_2(),
        square_zero(2),
    ];
    let fit: Vec<_> = candidates.into_iter().filter(|a| a.dim() <= max_dim).collect();
    let a = fit.choose(rng).expect("some algebra fits").clone();
    let p = random_invertible(rng, a.dim());
    a.change_basis(&p)
}

/// Lie algebra structure on a Lie-closed, independent family of matrices.
pub fn lie_of_matrices<F: Field>(mats: &[Matrix<F>]) -> LieAlgebra<F> {
    let k = mats.len();
    let flat: Vec<Vec<F>> = mats.iter().map(|m| m.data().to_vec()).collect();
    let n = flat.first().map_or(0, Vec::len);
    let cols = Matrix::from_columns(n, &flat);
    let mut bracket = Vec::with_capacity(k * k * k);
    for i in 0..k {
        for j in 0..k {
            let c = mats[i].commutator(&mats[j]);
            let coeffs = crate::linalg::solve(&cols, c.data()).expect("family is Lie-closed");
            bracket.extend(coeffs);
        }
    }
    LieAlgebra::new(k, bracket).expect("commutator bracket is a Lie bracket")
}

/// Lie closure of `gens`, or `None` once it exceeds `max_dim`.
pub fn lie_closure<F: Field>(gens: &[Matrix<F>], max_dim: usize) -> Option<Vec<Matrix<F>>> {
    let mut basis: Vec<Matrix<F>> = Vec::new();
    let n = gens.first()?.rows();
    let mut rb = RowBasis::new(n * n, &[]);
    let mut queue: Vec<Matrix<F>> = gens.to_vec();
    while let Some(m) = queue.pop() {
        if rb.contains(m.data()) {
            continue;
        }
        for b in &basis {
            queue.push(b.commutator(&m));
        }
        basis.push(m);
        if basis.len() > max_dim {
            return None;
        }
        let flat: Vec<Vec<F>> = basis.iter().map(|b| b.data().to_vec()).collect();
        rb = RowBasis::new(n * n, &flat);
    }
    Some(basis)
}

/// A random valid pair with `dim A, dim L <= max_dim`.
pub fn random_pair<F: Field, R: Rng>(rng: &mut R, max_dim: usize) -> LeibnizPair<F> {
    let a = random_algebra(rng, max_dim);
    let ders = derivations(&a);
    let choice = rng.gen_range(0..4);
    if ders.is_empty() || choice == 0 {
        let dl = rng.gen_range(0..=max_dim.min(2));
        return LeibnizPair::abelian_trivial(a, dl);
    }
    let combo = |rng: &mut R| {
        let mut m = Matrix::zeros(a.dim(), a.dim());
        for d in &ders {
            m.add_block(0, 0, d, &small_int(rng, 2));
        }
        m
    };
    let gens: Vec<Matrix<F>> = match choice {
        1 => vec![combo(rng)],
        2 => vec![combo(rng), combo(rng)],
        _ => ders.clone(),
    };
    let gens: Vec<_> = gens.into_iter().filter(|m| !m.is_zero()).collect();
    let basis = match lie_closure(&gens, max_dim) {
        Some(b) if !b.is_empty() => b,
        _ => vec![ders[0].clone()],
    };
    let l = lie_of_matrices(&basis);
    let pair = LeibnizPair::new(a, l, basis).expect("derivations form a pair");
    let pl = random_invertible(rng, pair.dim_l());
    let pa = Matrix::identity(pair.dim_a());
    pair.change_basis(&pa, &pl)
}

/// Basis of the characters of `L`, i.e. functionals vanishing on `[L, L]`.
pub fn characters<F: Field>(l: &LieAlgebra<F>) -> Vec<Vec<F>> {
    let d = l.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            rows.push(l.bracket_basis(i, j).to_vec());
        }
    }
    let m = if rows.is_empty() {
        Matrix::zeros(0, d)
    } else {
        Matrix::from_rows(rows)
    };
    kernel_basis(&m).into_basis()
}

/// A random valid module over `pair`.
///
/// `M` is `A` (or `0`) with the `μ` action, `P` is a sum of `L` (adjoint),
/// `A` (via `μ`) and a trivial summand, and `σ` is a random combination of
/// `a ⊗ x ↦ -μ(x)(a)` and `a ⊗ b ↦ ab - ba`. Both `M` and `P` may be
/// twisted by one character of `L`, then everything is transported along
/// random isomorphisms.
pub fn random_module<F: Field, R: Rng>(rng: &mut R, pair: &LeibnizPair<F>) -> LPModule<F> {
    let (da, dl) = (pair.dim_a(), pair.dim_l());
    let a = pair.algebra();
    if rng.gen_ratio(1, 8) {
        return LPModule::trivial(pair.clone());
    }
    let with_m = rng.gen_ratio(4, 5);
    let use_l = rng.gen_bool(0.5);
    let use_a = rng.gen_bool(0.5);
    let triv = rng.gen_range(0..=1usize);
    let dm = if with_m { da } else { 0 };
    let dp = (if use_l { dl } else { 0 }) + (if use_a { da } else { 0 }) + triv;

    let chars = characters(pair.lie());
    let chi: Vec<F> = if !chars.is_empty() && rng.gen_bool(0.5) {
        let k: F = small_int(rng, 2);
        chars.choose(rng).unwrap().iter().map(|c| c.mul_ref(&k)).collect()
    } else {
        vec![F::zero(); dl]
    };

    let m = if with_m {
        Bimodule::regular(a)
    } else {
        Bimodule::zero(da)
    };
    let m_lie = LieModule {
        dim: dm,
        action: (0..dl)
            .map(|x| {
                let mut act = if with_m {
                    pair.action(x).clone()
                } else {
                    Matrix::zeros(0, 0)
                };
                act.add_scaled_identity(0, 0, dm, &chi[x]);
                act
            })
            .collect(),
    };
    let p_action: Vec<Matrix<F>> = (0..dl)
        .map(|x| {
            let mut blocks = Matrix::zeros(0, 0);
            if use_l {
                blocks = blocks.direct_sum(&pair.lie().ad_matrix(x));
            }
            if use_a {
                blocks = blocks.direct_sum(pair.action(x));
            }
            blocks = blocks.direct_sum(&Matrix::zeros(triv, triv));
            blocks.add_scaled_identity(0, 0, dp, &chi[x]);
            blocks
        })
        .collect();
    let p = LieModule {
        dim: dp,
        action: p_action,
    };
    let mut sigma = Matrix::zeros(dm, da * dp);
    if with_m {
        let c1: F = small_int(rng, 2);
        let c2: F = small_int(rng, 2);
        for s in 0..dm {
            for ai in 0..da {
                let mut off = 0;
                if use_l {
                    for x in 0..dl {
                        sigma.set(s, ai * dp + x, -(c1.mul_ref(pair.action(x).get(s, ai))));
                    }
                    off = dl;
                }
                if use_a {
                    for b in 0..da {
                        let comm = a.constant(ai, b, s).clone() - a.constant(b, ai, s).clone();
                        sigma.set(s, ai * dp + off + b, c2.mul_ref(&comm));
                    }
                }
            }
        }
    }
    let module = LPModule::new(pair.clone(), m, m_lie, p, sigma).expect("generated module is valid");
    let sm = random_invertible(rng, dm);
    let sp = random_invertible(rng, dp);
    module.transport(&sm, &sp)
}
