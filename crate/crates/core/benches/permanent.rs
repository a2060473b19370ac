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

use boson_sampler::interference::IndistinguishabilitySet;
use boson_sampler::io::reference_network;
use boson_sampler::kernels::{permanent, permanent_ryser};
use boson_sampler::sampler::boson_distribution;
use boson_sampler::ComplexMatrix;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn kernels(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut group = c.benchmark_group("permanent");
    for n in [8usize, 12, 16, 20] {
        let m = ComplexMatrix::random_gaussian(n, n, &mut rng);
        group.bench_with_input(BenchmarkId::new("serial", n), &m, |b, m| {
            b.iter(|| permanent_ryser(black_box(m)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("auto", n), &m, |b, m| {
            b.iter(|| permanent(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn distributions(c: &mut Criterion) {
    let l = reference_network();
    let overlaps = IndistinguishabilitySet::for_triple([0, 1, 2], 0.520, 0.540, 0.643).unwrap();
    c.bench_function("three_photon_distribution", |b| {
        b.iter(|| boson_distribution(black_box(&l), &[0, 1, 2], &overlaps).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = kernels, distributions
}
criterion_main!(benches);
