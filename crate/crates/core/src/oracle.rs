// Copyright 2026 The boson-sampler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Brute-force reference evaluations by explicit enumeration of all `n!`
//! permutations. Slow on purpose; used to cross-check the fast kernels.

use num_complex::Complex64;

use crate::matrix::ComplexMatrix;

/// Calls `f(perm, sign)` for every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation<F: FnMut(&[usize], i32)>(n: usize, mut f: F) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1;
    f(&perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            f(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// `sum_sigma weight(sigma, sign) * prod_i m[i, sigma(i)]`.
pub fn leibniz_sum<W: Fn(&[usize], i32) -> f64>(m: &ComplexMatrix, weight: W) -> Complex64 {
    assert!(m.is_square(), "leibniz oracle needs a square matrix");
    let n = m.rows();
    let mut total = Complex64::new(0.0, 0.0);
    for_each_permutation(n, |p, s| {
        let w = weight(p, s);
        if w != 0.0 {
            let prod = (0..n).fold(Complex64::new(1.0, 0.0), |acc, i| acc * m[(i, p[i])]);
            total += w * prod;
        }
    });
    total
}

pub fn leibniz_permanent(m: &ComplexMatrix) -> Complex64 {
    leibniz_sum(m, |_, _| 1.0)
}

pub fn leibniz_determinant(m: &ComplexMatrix) -> Complex64 {
    leibniz_sum(m, |_, s| s as f64)
}

/// Character of the two-dimensional irrep of S3 on `p`: 2 on the identity,
/// 0 on transpositions, -1 on 3-cycles.
pub fn s3_standard_character(p: &[usize]) -> f64 {
    let fixed = p.iter().enumerate().filter(|&(i, &v)| i == v).count();
    match fixed {
        3 => 2.0,
        1 => 0.0,
        _ => -1.0,
    }
}

/// 3x3 immanant as a character-weighted permutation sum.
pub fn character_immanant3(m: &ComplexMatrix) -> Complex64 {
    assert_eq!((m.rows(), m.cols()), (3, 3));
    leibniz_sum(m, |p, _| s3_standard_character(p))
}

/// Fully distinguishable-particle probability `sum_sigma prod_i |m[i, sigma(i)]|^2`.
pub fn distinguishable_probability(m: &ComplexMatrix) -> f64 {
    assert!(m.is_square());
    let n = m.rows();
    let mut total = 0.0;
    for_each_permutation(n, |p, _| {
        total += (0..n).map(|i| m[(i, p[i])].norm_sqr()).product::<f64>();
    });
    total
}

/// Coincidence probability of partially distinguishable photons as the
/// double permutation sum
/// `sum_{s,t} prod_i m[i,s(i)] conj(m[i,t(i)]) prod_i gram[i][t^-1(s(i))]`,
/// where `gram[i][j]` is the real overlap of the internal states of photons
/// `i` and `j` (so a pair with indistinguishability `I` has overlap `sqrt(I)`).
pub fn gram_probability(m: &ComplexMatrix, gram: &[Vec<f64>]) -> f64 {
    assert!(m.is_square());
    let n = m.rows();
    let mut perms = Vec::new();
    for_each_permutation(n, |p, _| perms.push(p.to_vec()));
    let inverse = |p: &[usize]| {
        let mut inv = vec![0; p.len()];
        for (i, &v) in p.iter().enumerate() {
            inv[v] = i;
        }
        inv
    };
    let mut total = Complex64::new(0.0, 0.0);
    for s in &perms {
        let amp_s = (0..n).fold(Complex64::new(1.0, 0.0), |acc, i| acc * m[(i, s[i])]);
        for t in &perms {
            let t_inv = inverse(t);
            let amp_t = (0..n).fold(Complex64::new(1.0, 0.0), |acc, i| acc * m[(i, t[i])].conj());
            // Output s(i) carries photon i in branch s and photon t^-1(s(i)) in branch t.
            let overlap: f64 = (0..n).map(|i| gram[i][t_inv[s[i]]]).product();
            total += amp_s * amp_t * overlap;
        }
    }
    total.re
}
