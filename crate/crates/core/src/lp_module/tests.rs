use super::*;
use crate::library::{inner_derivation, m2_sl2_pair, sl2_in_m2};
use crate::linalg::Matrix;
use crate::random::{random_invertible, random_matrix, random_module, random_pair};
use crate::rational::Rational;
use crate::structures::AssocAlgebra;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = Rational;

fn adjoint_m2() -> LPModule<Q> {
    LPModule::adjoint(m2_sl2_pair()).unwrap()
}

#[test]
fn adjoint_sigma_is_the_commutator() {
    let m = adjoint_m2();
    let a = m.pair().algebra();
    let xs = sl2_in_m2::<Q>();
    for i in 0..4 {
        let ei = a.basis_vector(i);
        for (alpha, x) in xs.iter().enumerate() {
            let expect: Vec<Q> = a
                .mul(&ei, x)
                .into_iter()
                .zip(a.mul(x, &ei))
                .map(|(u, v)| u - v)
                .collect();
            assert_eq!(m.sigma_basis(i, alpha), expect);
        }
    }
}

#[test]
fn trivial_module_is_valid() {
    let t = LPModule::trivial(m2_sl2_pair::<Q>());
    let again = LPModule::new(
        t.pair().clone(),
        t.bimodule().clone(),
        t.m_lie().clone(),
        t.p().clone(),
        t.sigma().clone(),
    );
    assert_eq!(again, Ok(t));
}

/// Adding an inner derivation `a ↦ [E11, a]` to `σ(- ⊗ h)` keeps σ a
/// derivation in `A` but breaks equivariance.
#[test]
fn perturbed_sigma_breaks_equivariance() {
    let m = adjoint_m2();
    let a = m.pair().algebra();
    let d = inner_derivation(a, &a.basis_vector(0));
    let mut sigma = m.sigma().clone();
    for s in 0..4 {
        for i in 0..4 {
            let v = sigma.get(s, i * 3 + 2).clone() + d.get(s, i).clone();
            sigma.set(s, i * 3 + 2, v);
        }
    }
    let err = m.with_sigma(sigma).unwrap_err();
    assert!(matches!(err, ModuleError::SigmaEquivariance { .. }), "{err}");
}

#[test]
fn single_entry_perturbation_is_rejected() {
    let m = adjoint_m2();
    let mut sigma = m.sigma().clone();
    sigma.set(1, 5, sigma.get(1, 5).clone() + Q::one());
    let err = m.with_sigma(sigma).unwrap_err();
    assert!(
        matches!(
            err,
            ModuleError::SigmaDerivation { .. } | ModuleError::SigmaEquivariance { .. }
        ),
        "{err}"
    );
}

#[test]
fn compatibility_failure_is_named() {
    let m = adjoint_m2();
    let mut act = m.m_lie().clone();
    // scaling one action breaks {x, am} = {x,a}m + a{x,m} and the representation property
    act.action[0] = act.action[0].scale(&Q::from_int(2));
    let err = LPModule::new(
        m.pair().clone(),
        m.bimodule().clone(),
        act,
        m.p().clone(),
        m.sigma().clone(),
    )
    .unwrap_err();
    assert!(
        matches!(
            err,
            ModuleError::LieModule { .. } | ModuleError::LeftCompatibility { .. }
        ),
        "{err}"
    );
}

#[test]
fn bimodule_failures() {
    let a = AssocAlgebra::<Q>::truncated_polynomials(2);
    let mut b = Bimodule::regular(&a);
    b.right[1] = Matrix::identity(2);
    assert_eq!(b.validate(&a), Err(ModuleError::RightAction { a: 1, b: 1 }));
    let mut b = Bimodule::regular(&a);
    b.left[0] = Matrix::zeros(2, 2);
    assert_eq!(b.validate(&a), Err(ModuleError::UnitAction { side: "left" }));
}

#[test]
fn homs_identity_zero_and_random() {
    let m = adjoint_m2();
    validate_hom(&m, &m, Matrix::identity(4), Matrix::identity(3)).unwrap();
    validate_hom(&m, &m, Matrix::zeros(4, 4), Matrix::zeros(3, 3)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let g = random_matrix(&mut rng, 4, 4, 3);
    let err = validate_hom(&m, &m, g, Matrix::identity(3)).unwrap_err();
    assert!(matches!(err, ModuleError::NotAHom { .. }));
}

#[test]
fn transport_gives_an_isomorphism_and_composition_is_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let m = adjoint_m2();
    let (s1, p1) = (random_invertible(&mut rng, 4), random_invertible(&mut rng, 3));
    let m1 = m.transport(&s1, &p1);
    let h1 = validate_hom(&m, &m1, s1, p1).unwrap();
    let (s2, p2) = (random_invertible(&mut rng, 4), random_invertible(&mut rng, 3));
    let m2 = m1.transport(&s2, &p2);
    let h2 = validate_hom(&m1, &m2, s2, p2).unwrap();
    let c = h2.after(&h1);
    validate_hom(&m, &m2, c.g, c.f).unwrap();
}

#[test]
fn direct_sum_projections_are_homs() {
    let pair = m2_sl2_pair::<Q>();
    let m = adjoint_m2();
    let t = LPModule::trivial(pair);
    let s = m.direct_sum(&t).unwrap();
    let g = Matrix::identity(4);
    let f = Matrix::from_fn(3, 4, |i, j| if i == j { Q::one() } else { Q::zero() });
    validate_hom(&s, &m, g, f).unwrap();
}

fn dual_numbers_zero_bracket() -> PoissonAlgebra<Q> {
    PoissonAlgebra::new(
        AssocAlgebra::truncated_polynomials(2),
        crate::structures::LieAlgebra::abelian(2),
    )
    .unwrap()
}

#[test]
fn quasi_poisson_regular_and_zero_modules() {
    let pa = dual_numbers_zero_bracket();
    let a = pa.assoc().clone();
    from_quasi_poisson(&pa, Bimodule::regular(&a), LieModule::adjoint(pa.lie())).unwrap();
    from_quasi_poisson(&pa, Bimodule::zero(2), LieModule::trivial(0, 2)).unwrap();
    // a Poisson module is in particular quasi-Poisson
    let pm = PoissonAlgebra::commutator(AssocAlgebra::<Q>::matrix_algebra(2));
    let reg = Bimodule::regular(pm.assoc());
    let ad = LieModule::adjoint(pm.lie());
    from_poisson(&pm, reg.clone(), ad.clone()).unwrap();
    from_quasi_poisson(&pm, reg, ad).unwrap();
}

#[test]
fn poisson_adapters() {
    let pa = dual_numbers_zero_bracket();
    let a = pa.assoc().clone();
    from_poisson(&pa, Bimodule::regular(&a), LieModule::trivial(2, 2)).unwrap();
    from_poisson(&pa, Bimodule::regular(&a), LieModule::adjoint(pa.lie())).unwrap();
}

/// `{1, m} = m`, `{t, m} = 0` on `ℚ[t]/(t²)` is quasi-Poisson but
/// `{1·1, m} = 2{1, m}` fails.
#[test]
fn quasi_poisson_but_not_poisson() {
    let pa = dual_numbers_zero_bracket();
    let reg = Bimodule::regular(pa.assoc());
    let br = LieModule {
        dim: 2,
        action: vec![Matrix::identity(2), Matrix::zeros(2, 2)],
    };
    from_quasi_poisson(&pa, reg.clone(), br.clone()).unwrap();
    assert_eq!(
        from_poisson(&pa, reg, br).unwrap_err(),
        ModuleError::NotPoissonModule { a: 0, b: 0, m: 0 }
    );
}

#[test]
fn broken_leibniz_rule_is_not_poisson() {
    // commutator bracket doubled on one pair only
    let a = AssocAlgebra::<Q>::upper_triangular_2();
    let l = crate::structures::LieAlgebra::commutator_of(&a);
    let mut c = l.constants().to_vec();
    let at = |i: usize, j: usize| (i * 3 + j) * 3;
    for start in [at(0, 1), at(1, 0)] {
        for v in c[start..start + 3].iter_mut() {
            *v = v.clone() * Q::from_int(2);
        }
    }
    if let Ok(l2) = crate::structures::LieAlgebra::new(3, c) {
        assert!(matches!(
            PoissonAlgebra::new(a, l2),
            Err(ModuleError::NotPoisson { .. })
        ));
    }
}

#[test]
fn functor_round_trips() {
    let pair = m2_sl2_pair::<Q>();
    for m in [adjoint_m2(), LPModule::trivial(pair)] {
        let u = functor_f(&m);
        let back = functor_g(&u).unwrap();
        assert_eq!(back, m);
        assert_eq!(functor_f(&back), u);
    }
}

#[test]
fn functor_g_rejects_broken_sigma_tilde() {
    let u = functor_f(&adjoint_m2());
    let mut bad = u.clone();
    // perturb σ̃ at a tensor 1 ⊗ e ⊗ E12 only, which breaks bilinearity
    let (a, e, x) = (0, 1, 1);
    let col = ((a * 4 + e) * 4 + x) * 3;
    bad.sigma_tilde
        .set(0, col, bad.sigma_tilde.get(0, col).clone() + Q::one());
    assert!(matches!(functor_g(&bad), Err(ModuleError::TildeBilinearity { .. })));
}

#[test]
fn functor_on_homs() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let m = adjoint_m2();
    let (s, p) = (random_invertible(&mut rng, 4), random_invertible(&mut rng, 3));
    let m1 = m.transport(&s, &p);
    let h = validate_hom(&m, &m1, s, p).unwrap();
    let uh = functor_f_hom(&h);
    assert_eq!((&uh.f, &uh.g), (&h.f, &h.g));
    let uh = validate_ual_hom(&functor_f(&m), &functor_f(&m1), uh.f, uh.g).unwrap();
    assert_eq!(functor_g_hom(&uh), h);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_modules_round_trip_and_identity_hom(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pair = random_pair::<Q, _>(&mut rng, 3);
        let m = random_module(&mut rng, &pair);
        prop_assert_eq!(functor_g(&functor_f(&m)).unwrap(), m.clone());
        validate_hom(&m, &m, Matrix::identity(m.dim_m()), Matrix::identity(m.dim_p())).unwrap();
    }

    #[test]
    fn commutator_poisson_algebras_give_quasi_poisson_modules(seed in 0u64..10_000, scale in -2i64..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = crate::random::random_algebra::<Q, _>(&mut rng, 3);
        let base = PoissonAlgebra::commutator(a.clone());
        let scaled = crate::structures::LieAlgebra::new(
            a.dim(),
            base.lie().constants().iter().map(|c| c * &Q::from_int(scale)).collect(),
        ).unwrap();
        let pa = PoissonAlgebra::new(a.clone(), scaled).unwrap();
        let m = from_quasi_poisson(&pa, Bimodule::regular(&a), LieModule::adjoint(pa.lie())).unwrap();
        prop_assert_eq!(m.dim_m(), a.dim());
        from_poisson(&pa, Bimodule::regular(&a), LieModule::adjoint(pa.lie())).unwrap();
    }
}
