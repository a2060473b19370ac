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

use boson_sampler::interference::{
    is_realisable_triple, rho_matrices, t6_vector, t6_vector_with, three_photon_from_block, three_photon_probability,
    two_photon_probability, IndistinguishabilitySet, OutputConfiguration, RowOrder, TransferMatrix,
};
use boson_sampler::io::reference_network;
use boson_sampler::kernels::{determinant, permanent, submatrix};
use boson_sampler::sampler::enumerate_no_collision;
use boson_sampler::{oracle, ComplexMatrix, Error};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TWO_PHOTON_052: [f64; 15] = [
    0.008133249780800001,
    0.034280497265960004,
    0.07900845714975999,
    0.15173761544096004,
    0.013446175110400003,
    0.015417385277200001,
    0.025113681793599997,
    0.012141538918399999,
    0.0028750634047999997,
    0.12471247907923996,
    0.08163396299624,
    0.0115628338568,
    0.04928275319456,
    0.03333840516607999,
    0.024924910864639997,
];

fn gram3(i12: f64, i23: f64, i13: f64) -> Vec<Vec<f64>> {
    let (a, b, c) = (i12.sqrt(), i23.sqrt(), i13.sqrt());
    vec![vec![1.0, a, c], vec![a, 1.0, b], vec![c, b, 1.0]]
}

fn unitary_network(seed: u64) -> TransferMatrix {
    let u = ComplexMatrix::random_unitary(6, &mut ChaCha8Rng::seed_from_u64(seed));
    TransferMatrix::new(u).unwrap()
}

#[test]
fn two_photon_reference_weights() {
    let l = reference_network();
    for (k, want) in enumerate_no_collision(6, 2).unwrap().iter().zip(TWO_PHOTON_052) {
        let p = two_photon_probability(&l, [0, 1], k, 0.52).unwrap();
        assert!((p - want).abs() < 1e-14, "{k}: {p} vs {want}");
    }
}

#[test]
fn two_photon_matches_gram_oracle() {
    let l = reference_network();
    for pair in [[0, 1], [1, 2], [0, 2]] {
        for k in enumerate_no_collision(6, 2).unwrap() {
            for i in [0.0f64, 0.3, 0.75, 1.0] {
                let sub = l.submatrix(&pair, &k).unwrap();
                let s = i.sqrt();
                let want = oracle::gram_probability(&sub, &[vec![1.0, s], vec![s, 1.0]]);
                let got = two_photon_probability(&l, pair, &k, i).unwrap();
                assert!((got - want).abs() < 1e-14);
            }
        }
    }
}

#[test]
fn three_photon_matches_gram_oracle() {
    let l = reference_network();
    let cases = [(0.520, 0.540, 0.643), (0.0, 0.0, 0.0), (1.0, 1.0, 1.0), (0.9, 0.1, 0.3)];
    for (i12, i23, i13) in cases {
        let set = IndistinguishabilitySet::for_triple([0, 1, 2], i12, i23, i13).unwrap();
        for k in enumerate_no_collision(6, 3).unwrap() {
            let sub = l.submatrix(&[0, 1, 2], &k).unwrap();
            let want = oracle::gram_probability(&sub, &gram3(i12, i23, i13));
            let got = three_photon_probability(&l, [0, 1, 2], &k, &set).unwrap();
            assert!((got - want).abs() < 1e-13, "{k}: {got} vs {want}");
        }
    }
}

#[test]
fn limits_reduce_to_permanent_and_classical() {
    let l = reference_network();
    let one = IndistinguishabilitySet::uniform(&[0, 1, 2], 1.0).unwrap();
    let zero = IndistinguishabilitySet::uniform(&[0, 1, 2], 0.0).unwrap();
    for k in enumerate_no_collision(6, 3).unwrap() {
        let t = l.submatrix(&[0, 1, 2], &k).unwrap();
        let per = permanent(&t).unwrap().norm_sqr();
        let q = three_photon_probability(&l, [0, 1, 2], &k, &one).unwrap();
        assert!((q - per).abs() < 1e-14);
        let c = three_photon_probability(&l, [0, 1, 2], &k, &zero).unwrap();
        assert!((c - oracle::distinguishable_probability(&t)).abs() < 1e-14);
    }
    for k in enumerate_no_collision(6, 2).unwrap() {
        let t = l.submatrix(&[0, 1], &k).unwrap();
        let p1 = two_photon_probability(&l, [0, 1], &k, 1.0).unwrap();
        assert!((p1 - permanent(&t).unwrap().norm_sqr()).abs() < 1e-15);
        let p0 = two_photon_probability(&l, [0, 1], &k, 0.0).unwrap();
        let per = permanent(&t).unwrap().norm_sqr();
        let det = determinant(&t).unwrap().norm_sqr();
        assert!((p0 - 0.5 * (per + det)).abs() < 1e-15);
        assert!((p0 - oracle::distinguishable_probability(&t)).abs() < 1e-15);
    }
}

#[test]
fn continuous_approaching_full_overlap() {
    let l = reference_network();
    let near = 1.0 - 1e-6;
    let set = IndistinguishabilitySet::uniform(&[0, 1, 2], near).unwrap();
    for k in enumerate_no_collision(6, 3).unwrap() {
        let t = l.submatrix(&[0, 1, 2], &k).unwrap();
        let p = three_photon_probability(&l, [0, 1, 2], &k, &set).unwrap();
        assert!((p - permanent(&t).unwrap().norm_sqr()).abs() < 1e-4);
    }
}

#[test]
fn identity_block_is_certain() {
    let t = ComplexMatrix::identity(3);
    for (a, b, c) in [(0.0, 0.0, 0.0), (0.3, 0.6, 0.9), (1.0, 1.0, 1.0)] {
        assert!((three_photon_from_block(&t, a, b, c).unwrap() - 1.0).abs() < 1e-14);
    }
    let v = t6_vector(&t).unwrap();
    let s6 = 1.0 / 6f64.sqrt();
    let s3 = 1.0 / 3f64.sqrt();
    for (got, want) in v.iter().zip([s6, s6, s3, 0.0, 0.0, -s3]) {
        assert!((got.re - want).abs() < 1e-15 && got.im.abs() < 1e-15);
    }
}

#[test]
fn rho_matrices_are_symmetric() {
    let r = rho_matrices();
    for m in [r.identity, r.rho12, r.rho23, r.rho13, r.rho_tilde] {
        let transposed: [[f64; 6]; 6] = std::array::from_fn(|i| std::array::from_fn(|j| m[j][i]));
        assert_eq!(m, transposed);
    }
}

#[test]
fn stacked_convention_breaks_output_order_invariance() {
    // Documented alternative reading of the row subscripts; kept to show why
    // it is not the default.
    let l = reference_network();
    let t = l.submatrix(&[0, 1, 2], &[0, 2, 4]).unwrap();
    let swapped = submatrix(&t, &[0, 1, 2], &[1, 0, 2]).unwrap();
    let q = |m: &ComplexMatrix, conv| {
        let v = t6_vector_with(m, conv).unwrap();
        let op = boson_sampler::interference::overlap_operator(0.520, 0.540, 0.643).unwrap();
        let mut s = num_complex::Complex64::new(0.0, 0.0);
        for r in 0..6 {
            for c in 0..6 {
                s += v[r].conj() * op[r][c] * v[c];
            }
        }
        s.re
    };
    let inv = (q(&t, RowOrder::Inverse) - q(&swapped, RowOrder::Inverse)).abs();
    let stk = (q(&t, RowOrder::Stacked) - q(&swapped, RowOrder::Stacked)).abs();
    assert!(inv < 1e-14);
    assert!(stk > 1e-4);
}

#[test]
fn errors() {
    let l = reference_network();
    assert!(matches!(
        two_photon_probability(&l, [0, 1], &[0, 1], 1.5),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        two_photon_probability(&l, [0, 1], &[0, 9], 0.5),
        Err(Error::Index(_))
    ));
    assert!(two_photon_probability(&l, [0, 1], &[0, 1, 2], 0.5).is_err());
    let partial = IndistinguishabilitySet::uniform(&[0, 1], 0.5).unwrap();
    assert!(three_photon_probability(&l, [0, 1, 2], &[0, 1, 2], &partial).is_err());
    assert!(IndistinguishabilitySet::for_triple([0, 1, 2], -0.1, 0.5, 0.5).is_err());
    assert!(matches!(
        IndistinguishabilitySet::for_triple([0, 1, 2], 1.0, 1.0, 0.0),
        Err(Error::Domain(_))
    ));
    let mut loose = IndistinguishabilitySet::new();
    loose.insert(0, 1, 1.0).unwrap();
    loose.insert(1, 2, 1.0).unwrap();
    loose.insert(0, 2, 0.0).unwrap();
    assert!(matches!(
        three_photon_probability(&l, [0, 1, 2], &[0, 1, 2], &loose),
        Err(Error::Domain(_))
    ));
    assert!(OutputConfiguration::new(vec![2, 1]).is_err());
    assert!(OutputConfiguration::parse_label("1+1").is_err());
    assert_eq!(OutputConfiguration::parse_label("1+4+6").unwrap().modes(), &[0, 3, 5]);
    assert!(TransferMatrix::new(ComplexMatrix::from_real_rows(&[[2.0, 0.0]]).unwrap()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn probability_independent_of_output_listing(
        seed in 0u64..1000,
        i12 in 0.0f64..=1.0, i23 in 0.0f64..=1.0, i13 in 0.0f64..=1.0,
        outs in prop::sample::subsequence((0usize..6).collect::<Vec<_>>(), 3).prop_shuffle(),
    ) {
        prop_assume!(is_realisable_triple(i12, i23, i13));
        let l = unitary_network(seed);
        let set = IndistinguishabilitySet::for_triple([0, 1, 2], i12, i23, i13).unwrap();
        let mut sorted = outs.clone();
        sorted.sort_unstable();
        let a = three_photon_probability(&l, [0, 1, 2], &outs, &set).unwrap();
        let b = three_photon_probability(&l, [0, 1, 2], &sorted, &set).unwrap();
        prop_assert!((a - b).abs() < 1e-13);
    }

    #[test]
    fn probability_bounded_and_non_negative(
        seed in 0u64..1000,
        i12 in 0.0f64..=1.0, i23 in 0.0f64..=1.0, i13 in 0.0f64..=1.0,
    ) {
        prop_assume!(is_realisable_triple(i12, i23, i13));
        let l = unitary_network(seed);
        let set = IndistinguishabilitySet::for_triple([0, 1, 2], i12, i23, i13).unwrap();
        for k in enumerate_no_collision(6, 3).unwrap() {
            let t = l.submatrix(&[0, 1, 2], &k).unwrap();
            let p = three_photon_probability(&l, [0, 1, 2], &k, &set).unwrap();
            let mut abs_sum = 0.0;
            oracle::for_each_permutation(3, |s, _| {
                abs_sum += (0..3).map(|i| t[(i, s[i])].norm()).product::<f64>();
            });
            prop_assert!(p >= 0.0);
            prop_assert!(p <= abs_sum * abs_sum + 1e-12);
            prop_assert!(p <= 36.0 * t.max_abs().powi(6) + 1e-12);
        }
    }

    #[test]
    fn two_photon_affine_in_overlap(seed in 0u64..1000, a in 0.0f64..=1.0, b in 0.0f64..=1.0, s in 0.0f64..=1.0) {
        let l = unitary_network(seed);
        let mid = s * a + (1.0 - s) * b;
        for k in enumerate_no_collision(6, 2).unwrap() {
            let pa = two_photon_probability(&l, [0, 1], &k, a).unwrap();
            let pb = two_photon_probability(&l, [0, 1], &k, b).unwrap();
            let pm = two_photon_probability(&l, [0, 1], &k, mid).unwrap();
            prop_assert!((pm - (s * pa + (1.0 - s) * pb)).abs() < 1e-14);
        }
    }

    #[test]
    fn three_photon_affine_in_pair_overlap_when_triple_term_absent(
        seed in 0u64..1000, x in 0.0f64..=1.0, y in 0.0f64..=1.0, s in 0.0f64..=1.0, i23 in 0.0f64..=1.0,
    ) {
        // With I13 = 0 the triple-product term vanishes and p is affine in I12.
        // Such triples are realisable only while I12 + I23 <= 1.
        let l = unitary_network(seed);
        let (a, b) = (x * (1.0 - i23), y * (1.0 - i23));
        let p = |i12: f64| {
            let set = IndistinguishabilitySet::for_triple([0, 1, 2], i12, i23, 0.0).unwrap();
            three_photon_probability(&l, [0, 1, 2], &[0, 2, 5], &set).unwrap()
        };
        let mid = s * a + (1.0 - s) * b;
        prop_assert!((p(mid) - (s * p(a) + (1.0 - s) * p(b))).abs() < 1e-14);
    }
}
