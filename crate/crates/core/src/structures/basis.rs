//! Enumerated bases of tensor powers `A^{⊗i}` and exterior powers `∧^j L`.
//!
//! Tensor multi-indices are flattened row-major (the first factor varies
//! slowest). Exterior basis tuples are strictly increasing and listed in
//! lexicographic order.

use std::collections::HashMap;

/// Row-major flattening of multi-indices over factors of the given dims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorBasis {
    factor_dims: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

impl TensorBasis {
    pub fn new(factor_dims: Vec<usize>) -> Self {
        let mut strides = vec![1; factor_dims.len()];
        for p in (0..factor_dims.len().saturating_sub(1)).rev() {
            strides[p] = strides[p + 1] * factor_dims[p + 1];
        }
        let len = factor_dims.iter().product();
        TensorBasis {
            factor_dims,
            strides,
            len,
        }
    }

    /// `i` factors of dimension `dim`.
    pub fn power(dim: usize, i: usize) -> Self {
        TensorBasis::new(vec![dim; i])
    }

    pub fn factor_dims(&self) -> &[usize] {
        &self.factor_dims
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn index(&self, multi: &[usize]) -> usize {
        assert_eq!(multi.len(), self.factor_dims.len(), "wrong tensor order");
        multi
            .iter()
            .zip(&self.strides)
            .zip(&self.factor_dims)
            .map(|((&m, &s), &d)| {
                assert!(m < d, "tensor index out of range");
                m * s
            })
            .sum()
    }

    pub fn multi_index(&self, flat: usize) -> Vec<usize> {
        assert!(flat < self.len, "flat index out of range");
        self.strides
            .iter()
            .zip(&self.factor_dims)
            .map(|(&s, &d)| (flat / s) % d)
            .collect()
    }

    pub fn stride(&self, position: usize) -> usize {
        self.strides[position]
    }

    pub fn iter(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len).map(|f| self.multi_index(f))
    }
}

/// Sorts `tuple` and returns it with the parity of the sorting permutation,
/// or sign 0 if an index repeats.
pub fn wedge_normalize(tuple: &[usize]) -> (Vec<usize>, i8) {
    let mut v = tuple.to_vec();
    let mut sign = 1i8;
    // insertion sort, counting transpositions
    for a in 1..v.len() {
        let mut b = a;
        while b > 0 && v[b - 1] > v[b] {
            v.swap(b - 1, b);
            sign = -sign;
            b -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return (v, 0);
    }
    (v, sign)
}

/// Basis of `∧^j` of an `n`-dimensional space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorBasis {
    n: usize,
    j: usize,
    tuples: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
}

impl ExteriorBasis {
    pub fn new(n: usize, j: usize) -> Self {
        let mut tuples = Vec::new();
        let mut cur = Vec::with_capacity(j);
        fn rec(start: usize, n: usize, j: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == j {
                out.push(cur.clone());
                return;
            }
            for k in start..n {
                cur.push(k);
                rec(k + 1, n, j, cur, out);
                cur.pop();
            }
        }
        rec(0, n, j, &mut cur, &mut tuples);
        let lookup = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        ExteriorBasis { n, j, tuples, lookup }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.j
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn tuple(&self, index: usize) -> &[usize] {
        &self.tuples[index]
    }

    /// Index of a strictly increasing tuple.
    pub fn index_of(&self, sorted: &[usize]) -> Option<usize> {
        self.lookup.get(sorted).copied()
    }

    /// Basis index and sign of an arbitrary wedge `x_{t_1} ∧ … ∧ x_{t_j}`;
    /// `None` when it vanishes.
    pub fn locate(&self, tuple: &[usize]) -> Option<(usize, i8)> {
        let (sorted, sign) = wedge_normalize(tuple);
        if sign == 0 {
            return None;
        }
        Some((self.index_of(&sorted).expect("tuple out of range"), sign))
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
