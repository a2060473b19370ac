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

//! Permanent, determinant and immanant of submatrices, plus timings for the
//! Ryser kernel as the order grows.
//!
//! ```text
//! cargo run --release --example permanent_kernels -- 22
//! ```

use std::time::Instant;

use boson_sampler::io::reference_network;
use boson_sampler::kernels::{determinant, immanant3, permanent, submatrix};
use boson_sampler::ComplexMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> boson_sampler::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20);

    let l = reference_network();
    let t = submatrix(l.matrix(), &[0, 1, 2], &[0, 3, 5])?;
    println!("T = rows 1-3, outputs 1, 4, 6");
    println!("  per = {:.6}", permanent(&t)?);
    println!("  det = {:.6}", determinant(&t)?);
    println!("  imm = {:.6}", immanant3(&t)?);

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    println!("\n  n   time        |per|");
    for n in (4..=max_n).step_by(2) {
        let m = ComplexMatrix::random_gaussian(n, n, &mut rng);
        let start = Instant::now();
        let p = permanent(&m)?;
        println!("{n:>3}   {:>9.3?}   {:.3e}", start.elapsed(), p.norm());
    }
    Ok(())
}
