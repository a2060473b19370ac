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

//! Two-photon coincidence distribution of the bundled network for each input
//! pair, at full and partial overlap.

use boson_sampler::interference::IndistinguishabilitySet;
use boson_sampler::io::reference_network;
use boson_sampler::sampler::{boson_distribution, distinguishable_distribution};

fn main() -> boson_sampler::Result<()> {
    let l = reference_network();
    for (pair, i) in [([0, 1], 0.520), ([1, 2], 0.540), ([0, 2], 0.643)] {
        let partial = IndistinguishabilitySet::uniform(&pair, i)?;
        let ideal = IndistinguishabilitySet::uniform(&pair, 1.0)?;
        let q = boson_distribution(&l, &pair, &partial)?;
        let p = boson_distribution(&l, &pair, &ideal)?;
        let c = distinguishable_distribution(&l, &pair)?;

        println!("inputs {}+{}  (I = {i})", pair[0] + 1, pair[1] + 1);
        println!("  config   I=1       I={i:<5}   I=0");
        for k in 0..q.len() {
            println!(
                "  {:<6} {:>8.5}  {:>8.5}  {:>8.5}",
                q.configs[k].label(),
                p.weights[k],
                q.weights[k],
                c.weights[k]
            );
        }
        println!("  total  {:>8.5}  {:>8.5}  {:>8.5}\n", p.norm, q.norm, c.norm);
    }
    Ok(())
}
