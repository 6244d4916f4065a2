// index arithmetic is spelled out to mirror the basis layout
#![allow(clippy::identity_op, clippy::erasing_op)]

use super::*;
use crate::library::{inner_derivation, m2_sl2_pair, sl2_in_m2};
use crate::linalg::{inverse, Matrix};
use crate::rational::Rational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = Rational;

fn q(v: i64) -> Q {
    Q::from_int(v)
}

#[test]
fn m2_sl2_is_a_pair() {
    let p = m2_sl2_pair::<Q>();
    assert_eq!((p.dim_a(), p.dim_l()), (4, 3));
}

#[test]
fn zero_lie_algebra_pair() {
    let p = validate_pair(AssocAlgebra::<Q>::matrix_algebra(2), LieAlgebra::zero(), vec![]).unwrap();
    assert_eq!(p.dim_l(), 0);
}

#[test]
fn perturbed_h_action_is_not_a_derivation() {
    let p = m2_sl2_pair::<Q>();
    let mut mu = p.actions().to_vec();
    // D_h(E11) gains an E11 component; a scaled identity would still fail on (1, 1)
    mu[2].set(0, 0, q(1));
    let err = validate_pair(p.algebra().clone(), p.lie().clone(), mu).unwrap_err();
    assert!(matches!(err, StructureError::NotDerivation { x: 2, .. }), "{err}");
}

#[test]
fn wrong_bracket_breaks_lie_hom() {
    let p = m2_sl2_pair::<Q>();
    // the same derivations but declared to commute
    let err = validate_pair(p.algebra().clone(), LieAlgebra::abelian(3), p.actions().to_vec()).unwrap_err();
    assert!(matches!(err, StructureError::NotLieHom { .. }));
}

#[test]
fn algebra_axiom_failures() {
    // e0 e0 = e1 with e0 as unit is not unital
    let err = AssocAlgebra::from_triples(1, &[(0, 0, 0, q(2))], vec![q(1)]).unwrap_err();
    assert_eq!(err, StructureError::NoUnit { index: 0 });
    // non-associative: e1 e1 = e1 + ... built by perturbing ℚ[t]/t^3
    let base = AssocAlgebra::<Q>::truncated_polynomials(3);
    let mut c = base.constants().to_vec();
    c[(3 + 1) * 3] = q(1); // t*t gains a constant term
    let err = AssocAlgebra::new(3, c, base.unit().to_vec()).unwrap_err();
    assert!(matches!(err, StructureError::NotAssociative { .. }), "{err}");
}

#[test]
fn lie_axiom_failures() {
    let err = LieAlgebra::from_triples(2, &[(0, 1, 0, q(1))]).unwrap_err();
    assert_eq!(err, StructureError::NotAntisymmetric { i: 0, j: 1 });
    let sl2 = LieAlgebra::<Q>::sl2();
    let mut f = sl2.constants().to_vec();
    // [e,f] = h + e keeps antisymmetry; the Jacobi sum becomes 2e
    f[(0 * 3 + 1) * 3] = q(1);
    f[(1 * 3 + 0) * 3] = q(-1);
    assert_eq!(
        LieAlgebra::new(3, f).unwrap_err(),
        StructureError::JacobiFails { i: 0, j: 1, k: 2 }
    );
}

#[test]
fn standard_algebras_validate() {
    for a in [
        AssocAlgebra::<Q>::ground(),
        AssocAlgebra::matrix_algebra(3),
        AssocAlgebra::truncated_polynomials(4),
        AssocAlgebra::diagonal(3),
        AssocAlgebra::upper_triangular_2(),
    ] {
        AssocAlgebra::new(a.dim(), a.constants().to_vec(), a.unit().to_vec()).unwrap();
        let l = LieAlgebra::commutator_of(&a);
        LieAlgebra::new(l.dim(), l.constants().to_vec()).unwrap();
    }
}

#[test]
fn derivation_dimensions() {
    assert_eq!(derivations(&AssocAlgebra::<Q>::ground()).len(), 0);
    assert_eq!(derivations(&AssocAlgebra::<Q>::matrix_algebra(2)).len(), 3);
    assert_eq!(derivations(&AssocAlgebra::<Q>::truncated_polynomials(2)).len(), 1);
    assert_eq!(derivations(&AssocAlgebra::<Q>::diagonal(3)).len(), 0);
    for d in derivations(&AssocAlgebra::<Q>::upper_triangular_2()) {
        LeibnizPair::new(AssocAlgebra::upper_triangular_2(), LieAlgebra::abelian(1), vec![d]).unwrap();
    }
}

#[test]
fn act_on_single_factor_and_zero_action() {
    let p = m2_sl2_pair::<Q>();
    let a = vec![q(1), q(-2), q(3), q(5)];
    for x in 0..3 {
        assert_eq!(p.act_on_tensor(x, &a, 1), p.act(x, &a));
    }
    let z = LeibnizPair::abelian_trivial(AssocAlgebra::<Q>::matrix_algebra(2), 1);
    let t: Vec<Q> = (0..16).map(q).collect();
    assert!(z.act_on_tensor(0, &t, 2).iter().all(|v| v.is_zero()));
}

/// `act(h, E12 ⊗ E21)` against `{h,E12} ⊗ E21 + E12 ⊗ {h,E21}` expanded as
/// outer products of coordinate vectors.
#[test]
fn act_h_on_e12_e21_two_term_expansion() {
    let p = m2_sl2_pair::<Q>();
    let a = p.algebra();
    let (e12, e21) = (a.basis_vector(1), a.basis_vector(2));
    let outer = |u: &[Q], v: &[Q]| -> Vec<Q> { u.iter().flat_map(|x| v.iter().map(move |y| x * y)).collect() };
    let t = outer(&e12, &e21);
    let expected: Vec<Q> = outer(&p.act(2, &e12), &e21)
        .into_iter()
        .zip(outer(&e12, &p.act(2, &e21)))
        .map(|(x, y)| x + y)
        .collect();
    assert_eq!(p.act_on_tensor(2, &t, 2), expected);
    // [h,E12] = 2 E12, [h,E21] = -2 E21, so the sum vanishes
    assert!(expected.iter().all(|v| v.is_zero()));
    let mut sparse = vec![Q::zero(); 16];
    for (i, c) in p.act_on_basis_tensor(2, &[1, 2]) {
        sparse[i] += c;
    }
    assert_eq!(sparse, expected);
}

#[test]
fn inner_derivations_match_sl2_brackets() {
    let a = AssocAlgebra::<Q>::matrix_algebra(2);
    let xs = sl2_in_m2::<Q>();
    let ad_e = inner_derivation(&a, &xs[0]);
    // [e, h] = -2e
    assert_eq!(
        ad_e.mul_vec(&xs[2]),
        xs[0].iter().map(|v| v * &q(-2)).collect::<Vec<_>>()
    );
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Q> {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| q(rng.gen_range(-2..=2)));
        if inverse(&m).is_some() {
            return m;
        }
    }
}

#[test]
fn change_of_basis_preserves_validity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let p = m2_sl2_pair::<Q>();
    for _ in 0..3 {
        let pa = random_invertible(&mut rng, 4);
        let pl = random_invertible(&mut rng, 3);
        let c = p.change_basis(&pa, &pl);
        validate_pair(
            AssocAlgebra::new(4, c.algebra().constants().to_vec(), c.algebra().unit().to_vec()).unwrap(),
            LieAlgebra::new(3, c.lie().constants().to_vec()).unwrap(),
            c.actions().to_vec(),
        )
        .unwrap();
    }
}

proptest! {
    /// `x·(y·t) - y·(x·t) = [x,y]·t` on random tensors of order 1..3.
    #[test]
    fn tensor_action_is_a_lie_module(seed in 0u64..500, order in 1usize..4) {
        let p = m2_sl2_pair::<Q>();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t: Vec<Q> = (0..4usize.pow(order as u32)).map(|_| q(rng.gen_range(-3..=3))).collect();
        for x in 0..3 {
            for y in 0..3 {
                let xy = p.act_on_tensor(x, &p.act_on_tensor(y, &t, order), order);
                let yx = p.act_on_tensor(y, &p.act_on_tensor(x, &t, order), order);
                let mut br = vec![Q::zero(); t.len()];
                for (k, c) in p.lie().bracket_basis(x, y).iter().enumerate() {
                    for (b, v) in br.iter_mut().zip(p.act_on_tensor(k, &t, order)) {
                        b.add_mul_assign(c, &v);
                    }
                }
                let lhs: Vec<Q> = xy.into_iter().zip(yx).map(|(a, b)| a - b).collect();
                prop_assert_eq!(lhs, br);
            }
        }
    }
}
