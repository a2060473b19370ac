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

//! Three-photon probabilities with unequal pairwise overlaps, checked against
//! the two limits they must reach.

use boson_sampler::interference::{t6_vector, three_photon_probability, IndistinguishabilitySet};
use boson_sampler::io::reference_network;
use boson_sampler::kernels::permanent;
use boson_sampler::oracle::distinguishable_probability;
use boson_sampler::sampler::boson_distribution;

fn main() -> boson_sampler::Result<()> {
    let l = reference_network();
    let inputs = [0, 1, 2];
    let overlaps = IndistinguishabilitySet::for_triple(inputs, 0.520, 0.540, 0.643)?;
    let d = boson_distribution(&l, &inputs, &overlaps)?;
    let probs = d.probabilities()?;

    println!("config   raw p      normalised  |per|^2    classical");
    for (k, config) in d.configs.iter().enumerate() {
        let t = l.submatrix(&inputs, config)?;
        println!(
            "{:<7} {:.6}   {:.6}    {:.6}   {:.6}",
            config.label(),
            d.weights[k],
            probs[k],
            permanent(&t)?.norm_sqr(),
            distinguishable_probability(&t),
        );
    }
    println!("no-collision total {:.6}", d.norm);

    let t = l.submatrix(&inputs, &[0, 3, 5])?;
    println!("\nt6 for outputs 1+4+6:");
    for (k, z) in t6_vector(&t)?.iter().enumerate() {
        println!("  [{k}] {z:.6}");
    }
    // Listing the outputs in another order gives the same probability.
    let a = three_photon_probability(&l, inputs, &[0, 3, 5], &overlaps)?;
    let b = three_photon_probability(&l, inputs, &[5, 0, 3], &overlaps)?;
    println!("p(1,4,6) = {a:.9}, p(6,1,4) = {b:.9}");
    Ok(())
}
