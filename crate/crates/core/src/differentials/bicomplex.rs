use crate::differentials::{CochainMap, CochainSpace, Target};
use crate::linalg::Matrix;
use crate::lp_module::{LPModule, LieModule};
use crate::scalar::Field;
use crate::structures::{ExteriorBasis, LeibnizPair, LieAlgebra, TensorBasis};

fn sign<F: Field>(k: usize) -> F {
    if k.is_multiple_of(2) {
        F::one()
    } else {
        -F::one()
    }
}

fn add<F: Field>(m: &mut Matrix<F>, r: usize, c: usize, v: &F) {
    if !v.is_zero() {
        let e = m.get_mut(r, c);
        *e = e.clone() + v.clone();
    }
}

/// Lie-type differential `Hom(A^{⊗i} ⊗ ∧^j, T) → Hom(A^{⊗i} ⊗ ∧^{j+1}, T)`:
///
/// `Σ_l (-1)^l ({x_l, f(a ⊗ x̂_l)} - f(x_l·a ⊗ x̂_l)) + Σ_{p<q} (-1)^{p+q} f(a ⊗ [x_p,x_q] ∧ …)`
///
/// where `x_l·a` is the derivation action on the tensor factors (absent
/// when `pair` is `None`, which forces `i = 0`).
fn lie_differential<F: Field>(
    pair: Option<&LeibnizPair<F>>,
    l: &LieAlgebra<F>,
    i: usize,
    j: usize,
    rep: &[Matrix<F>],
    dt: usize,
) -> Matrix<F> {
    let da = pair.map_or(1, |p| p.dim_a());
    assert!(pair.is_some() || i == 0);
    let tensors = TensorBasis::power(da, i);
    let src = ExteriorBasis::new(l.dim(), j);
    let tgt = ExteriorBasis::new(l.dim(), j + 1);
    let (ws, wt) = (src.len(), tgt.len());
    let mut out = Matrix::zeros(tensors.len() * wt * dt, tensors.len() * ws * dt);
    let row = |t: usize, w: usize, m: usize| (t * wt + w) * dt + m;
    let col = |t: usize, w: usize, m: usize| (t * ws + w) * dt + m;
    for t in 0..tensors.len() {
        let multi = tensors.multi_index(t);
        for (wp, tuple) in tgt.tuples().iter().enumerate() {
            for lpos in 0..=j {
                let s: F = sign(lpos);
                let x = tuple[lpos];
                let mut rest = tuple.clone();
                rest.remove(lpos);
                let w = src.index_of(&rest).expect("sorted subtuple");
                for mp in 0..dt {
                    for m in 0..dt {
                        add(&mut out, row(t, wp, mp), col(t, w, m), &s.mul_ref(rep[x].get(mp, m)));
                    }
                }
                if let Some(pair) = pair {
                    for (st, c) in pair.act_on_basis_tensor(x, &multi) {
                        let v = -s.mul_ref(&c);
                        for m in 0..dt {
                            add(&mut out, row(t, wp, m), col(st, w, m), &v);
                        }
                    }
                }
            }
            for p in 0..=j {
                for q in p + 1..=j {
                    let s: F = sign(p + q);
                    let mut rest: Vec<usize> = tuple.clone();
                    rest.remove(q);
                    rest.remove(p);
                    for (k, c) in l.bracket_basis(tuple[p], tuple[q]).iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut wedge = vec![k];
                        wedge.extend_from_slice(&rest);
                        if let Some((w, s2)) = src.locate(&wedge) {
                            let v = s.mul_ref(c).mul_ref(&F::from_sign(s2 as i32));
                            for m in 0..dt {
                                add(&mut out, row(t, wp, m), col(t, w, m), &v);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Chevalley–Eilenberg differential `Hom(∧^n L, P) → Hom(∧^{n+1} L, P)`.
pub fn delta_ce<F: Field>(l: &LieAlgebra<F>, p: &LieModule<F>, n: usize) -> CochainMap<F> {
    let dl = l.dim();
    let src = CochainSpace::new(0, n, Target::P, 1, dl, p.dim);
    let tgt = CochainSpace::new(0, n + 1, Target::P, 1, dl, p.dim);
    CochainMap::new(src, tgt, lie_differential(None, l, 0, n, &p.action, p.dim))
}

/// `Hom(∧^j L, P) → Hom(A ⊗ ∧^j L, M)`, `(δf)(a ⊗ ω) = σ(a ⊗ f(ω))`.
pub fn delta_sigma<F: Field>(module: &LPModule<F>, j: usize) -> CochainMap<F> {
    let pair = module.pair();
    let (da, dl, dm, dp) = (pair.dim_a(), pair.dim_l(), module.dim_m(), module.dim_p());
    let src = CochainSpace::new(0, j, Target::P, da, dl, dp);
    let tgt = CochainSpace::new(1, j, Target::M, da, dl, dm);
    let w_count = ExteriorBasis::new(dl, j).len();
    let sigma = module.sigma();
    let mut out = Matrix::zeros(tgt.dim, src.dim);
    for a in 0..da {
        for w in 0..w_count {
            for m in 0..dm {
                for alpha in 0..dp {
                    let v = sigma.get(m, a * dp + alpha);
                    if !v.is_zero() {
                        out.set((a * w_count + w) * dm + m, w * dp + alpha, v.clone());
                    }
                }
            }
        }
    }
    CochainMap::new(src, tgt, out)
}

/// Hochschild-type differential `Hom(A^{⊗i} ⊗ ∧^j, M) → Hom(A^{⊗(i+1)} ⊗ ∧^j, M)`:
///
/// `a_0 f(a_1…a_i) + Σ_{l<i} (-1)^{l+1} f(…a_l a_{l+1}…) + (-1)^{i+1} f(a_0…a_{i-1}) a_i`
/// with the exterior argument carried along unchanged.
pub fn delta_hoch<F: Field>(module: &LPModule<F>, i: usize, j: usize) -> CochainMap<F> {
    let pair = module.pair();
    let a = pair.algebra();
    let (da, dl, dm) = (pair.dim_a(), pair.dim_l(), module.dim_m());
    let src = CochainSpace::new(i, j, Target::M, da, dl, dm);
    let tgt = CochainSpace::new(i + 1, j, Target::M, da, dl, dm);
    let wn = ExteriorBasis::new(dl, j).len();
    let sb = TensorBasis::power(da, i);
    let tb = TensorBasis::power(da, i + 1);
    let b = module.bimodule();
    let last_sign: F = sign(i + 1);
    let mut out = Matrix::zeros(tgt.dim, src.dim);
    for t in 0..tb.len() {
        let multi = tb.multi_index(t);
        let tail = sb.index(&multi[1..]);
        let head = sb.index(&multi[..i]);
        let merged: Vec<(usize, Vec<(usize, F)>)> = (0..i)
            .map(|l| {
                let terms = a
                    .product_basis(multi[l], multi[l + 1])
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| {
                        let mut s = multi[..l].to_vec();
                        s.push(k);
                        s.extend_from_slice(&multi[l + 2..]);
                        (sb.index(&s), c.clone())
                    })
                    .collect();
                (l, terms)
            })
            .collect();
        for w in 0..wn {
            let row = |m: usize| (t * wn + w) * dm + m;
            let col = |s: usize, m: usize| (s * wn + w) * dm + m;
            for mp in 0..dm {
                for m in 0..dm {
                    add(&mut out, row(mp), col(tail, m), b.left[multi[0]].get(mp, m));
                    add(
                        &mut out,
                        row(mp),
                        col(head, m),
                        &last_sign.mul_ref(b.right[multi[i]].get(mp, m)),
                    );
                }
            }
            for (l, terms) in &merged {
                let s: F = sign(l + 1);
                for (st, c) in terms {
                    let v = s.mul_ref(c);
                    for m in 0..dm {
                        add(&mut out, row(m), col(*st, m), &v);
                    }
                }
            }
        }
    }
    CochainMap::new(src, tgt, out)
}

/// Lie-type differential `Hom(A^{⊗i} ⊗ ∧^j, M) → Hom(A^{⊗i} ⊗ ∧^{j+1}, M)`
/// using the action on `M` and the derivation action on each tensor factor.
pub fn delta_lie<F: Field>(module: &LPModule<F>, i: usize, j: usize) -> CochainMap<F> {
    let pair = module.pair();
    let (da, dl, dm) = (pair.dim_a(), pair.dim_l(), module.dim_m());
    let src = CochainSpace::new(i, j, Target::M, da, dl, dm);
    let tgt = CochainSpace::new(i, j + 1, Target::M, da, dl, dm);
    let m = lie_differential(Some(pair), pair.lie(), i, j, &module.m_lie().action, dm);
    CochainMap::new(src, tgt, m)
}
