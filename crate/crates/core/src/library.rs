//! Standard algebras, pairs and modules used by the examples and tests.

use crate::linalg::Matrix;
use crate::lp_module::{from_poisson, Bimodule, LPModule, LieModule, PoissonAlgebra};
use crate::scalar::Field;
use crate::structures::{AssocAlgebra, LeibnizPair, LieAlgebra};

/// Coordinates in `M_2` (matrix units `E11, E12, E21, E22`) of the `sl_2`
/// basis `e = E12`, `f = E21`, `h = E11 - E22`.
pub fn sl2_in_m2<F: Field>() -> [Vec<F>; 3] {
    let (o, z) = (F::one, F::zero);
    [
        vec![z(), o(), z(), z()],
        vec![z(), z(), o(), z()],
        vec![o(), z(), z(), -o()],
    ]
}

/// Matrix of `a ↦ xa - ax` on `A` for an element `x` of `A`.
pub fn inner_derivation<F: Field>(a: &AssocAlgebra<F>, x: &[F]) -> Matrix<F> {
    let d = a.dim();
    let mut m = Matrix::zeros(d, d);
    for (i, c) in x.iter().enumerate() {
        m.add_block(0, 0, &a.left_mul_matrix(i), c);
        m.add_block(0, 0, &a.right_mul_matrix(i), &-c.clone());
    }
    m
}

/// `(M_2, sl_2)` with `μ(x)(a) = xa - ax`.
pub fn m2_sl2_pair<F: Field>() -> LeibnizPair<F> {
    let a = AssocAlgebra::matrix_algebra(2);
    let mu = sl2_in_m2().iter().map(|x| inner_derivation(&a, x)).collect();
    LeibnizPair::new(a, LieAlgebra::sl2(), mu).expect("sl2 acts on M2 by derivations")
}

/// `ℚ[t]/(t^2)` with the one-dimensional Lie algebra acting by `t d/dt`.
pub fn dual_numbers_euler_pair<F: Field>() -> LeibnizPair<F> {
    let a = AssocAlgebra::truncated_polynomials(2);
    let mu = vec![Matrix::from_i64_rows(&[&[0, 0], &[0, 1]])];
    LeibnizPair::new(a, LieAlgebra::abelian(1), mu).expect("t d/dt is a derivation")
}

/// Names of the bundled example modules, in listing order.
pub const EXAMPLE_NAMES: [&str; 6] = [
    "m2_sl2",
    "sl2_trivial",
    "abelian_trivial",
    "l_zero_m2",
    "dual_numbers_poisson",
    "trivial_module",
];

/// One-line description of a bundled example.
pub fn example_description(name: &str) -> Option<&'static str> {
    Some(match name {
        "m2_sl2" => "A = M_2, L = sl_2 acting by commutators; M = A, P = L, sigma(a, x) = ax - xa",
        "sl2_trivial" => "A = Q, L = sl_2; M = 0, P = Q with trivial action",
        "abelian_trivial" => "A = Q, L abelian of dimension 2; M = 0, P = Q with trivial action",
        "l_zero_m2" => "A = M_2, L = 0; M = A, P = 0",
        "dual_numbers_poisson" => "A = Q[t]/(t^2) with zero Poisson bracket; M = P = A, sigma = bracket",
        "trivial_module" => "A = M_2, L = sl_2; M = 0, P = Q with trivial action",
        _ => return None,
    })
}

/// The bundled example with the given name.
pub fn example<F: Field>(name: &str) -> Option<LPModule<F>> {
    let over_ground = |l: LieAlgebra<F>| {
        let dl = l.dim();
        let pair = LeibnizPair::new(AssocAlgebra::ground(), l, vec![Matrix::zeros(1, 1); dl]).expect("zero action");
        LPModule::p_only(pair, LieModule::trivial(1, dl)).expect("trivial module")
    };
    let m = match name {
        "m2_sl2" => LPModule::adjoint(m2_sl2_pair()).expect("adjoint module"),
        "sl2_trivial" => over_ground(LieAlgebra::sl2()),
        "abelian_trivial" => over_ground(LieAlgebra::abelian(2)),
        "l_zero_m2" => LPModule::algebra_without_p(LeibnizPair::without_lie(AssocAlgebra::matrix_algebra(2)))
            .expect("regular bimodule"),
        "dual_numbers_poisson" => {
            let pa = PoissonAlgebra::with_zero_bracket(AssocAlgebra::truncated_polynomials(2));
            let a = pa.assoc().clone();
            from_poisson(&pa, Bimodule::regular(&a), LieModule::trivial(a.dim(), a.dim())).expect("Poisson module")
        }
        "trivial_module" => LPModule::trivial(m2_sl2_pair()),
        _ => return None,
    };
    Some(m)
}
