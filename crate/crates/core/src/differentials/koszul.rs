//! The Koszul complex `U(L) ⊗ ∧^j L` on PBW-basis elements.
//!
//! Elements of `U(L)` are finite sums of ordered monomials
//! `x_{k_1} ⋯ x_{k_r}` with `k_1 <= … <= k_r`; products are straightened
//! with the bracket.

use std::collections::BTreeMap;

use crate::scalar::Field;
use crate::structures::{wedge_normalize, LieAlgebra};

pub type PbwElement<F> = BTreeMap<Vec<usize>, F>;
/// Sums of `monomial ⊗ wedge` with sorted, repetition-free wedges.
pub type KoszulChain<F> = BTreeMap<(Vec<usize>, Vec<usize>), F>;

fn accumulate<K: Ord, F: Field>(map: &mut BTreeMap<K, F>, key: K, c: F) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(key).or_insert_with(F::zero);
    *e = e.clone() + c;
}

fn clean<K: Ord, F: Field>(map: BTreeMap<K, F>) -> BTreeMap<K, F> {
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `mono · x_k` in the PBW basis.
pub fn mul_generator<F: Field>(l: &LieAlgebra<F>, mono: &[usize], k: usize) -> PbwElement<F> {
    let mut out = PbwElement::new();
    match mono.last() {
        None => {
            out.insert(vec![k], F::one());
        }
        Some(&a) if a <= k => {
            let mut m = mono.to_vec();
            m.push(k);
            out.insert(m, F::one());
        }
        Some(&a) => {
            // prefix · x_a · x_k = (prefix · x_k) · x_a + prefix · [x_a, x_k]
            let prefix = &mono[..mono.len() - 1];
            for (m, c) in mul_generator(l, prefix, k) {
                for (m2, c2) in mul_generator(l, &m, a) {
                    accumulate(&mut out, m2, c.mul_ref(&c2));
                }
            }
            for (g, c) in l.bracket_basis(a, k).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (m2, c2) in mul_generator(l, prefix, g) {
                    accumulate(&mut out, m2, c.mul_ref(&c2));
                }
            }
        }
    }
    clean(out)
}

/// `d_j(X ⊗ x_1 ∧ … ∧ x_j) = Σ_{k=1}^{j} (-1)^{k+1} X x_k ⊗ x̂_k
///  + Σ_{p<q} (-1)^{p+q} X ⊗ [x_p, x_q] ∧ …`
pub fn koszul_d<F: Field>(l: &LieAlgebra<F>, chain: &KoszulChain<F>) -> KoszulChain<F> {
    let mut out = KoszulChain::new();
    for ((mono, wedge), c) in chain {
        let j = wedge.len();
        for k in 0..j {
            let sgn = if k % 2 == 0 { F::one() } else { -F::one() };
            let mut rest = wedge.clone();
            rest.remove(k);
            for (m, c2) in mul_generator(l, mono, wedge[k]) {
                accumulate(&mut out, (m, rest.clone()), sgn.mul_ref(c).mul_ref(&c2));
            }
        }
        for p in 0..j {
            for q in p + 1..j {
                let sgn = if (p + q) % 2 == 0 { F::one() } else { -F::one() };
                let mut rest = wedge.clone();
                rest.remove(q);
                rest.remove(p);
                for (g, b) in l.bracket_basis(wedge[p], wedge[q]).iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    let mut w = vec![g];
                    w.extend_from_slice(&rest);
                    let (sorted, s) = wedge_normalize(&w);
                    if s == 0 {
                        continue;
                    }
                    let v = sgn.mul_ref(c).mul_ref(b).mul_ref(&F::from_sign(s as i32));
                    accumulate(&mut out, (mono.clone(), sorted), v);
                }
            }
        }
    }
    clean(out)
}
