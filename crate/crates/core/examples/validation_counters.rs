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

//! Runs both validation counters on streams drawn from each sampler.
//!
//! ```text
//! cargo run --release --example validation_counters -- 6725 20
//! ```

use boson_sampler::interference::IndistinguishabilitySet;
use boson_sampler::io::reference_network;
use boson_sampler::sampler::{
    boson_distribution, distinguishable_distribution, sample_events, uniform_distribution,
};
use boson_sampler::validation::{
    uniform_threshold, validate_against_distinguishable, validate_against_uniform,
};

fn main() -> boson_sampler::Result<()> {
    let mut args = std::env::args().skip(1);
    let events: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(6725);
    let seeds: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);

    let l = reference_network();
    let inputs = [0, 1, 2];
    let overlaps = IndistinguishabilitySet::for_triple(inputs, 0.520, 0.540, 0.643)?;
    let boson = boson_distribution(&l, &inputs, &overlaps)?;
    let dist = distinguishable_distribution(&l, &inputs)?;
    let uniform = uniform_distribution(l.output_modes(), inputs.len())?;
    println!("uniform threshold (3/6)^3 = {}", uniform_threshold(3, 6)?);
    println!("{events} events per stream\n");
    println!("source           seed   vs uniform   vs distinguishable");

    for (name, source) in [("boson", &boson), ("distinguishable", &dist), ("uniform", &uniform)] {
        for seed in 0..seeds {
            let stream = sample_events(source, events, seed)?;
            let u = validate_against_uniform(&l, &inputs, &stream.events)?;
            let c = validate_against_distinguishable(&boson, &dist, &stream.events)?;
            println!(
                "{name:<16} {seed:>4}   {:>+6} {:<9?} {:>+6} {:?}",
                u.final_value, u.verdict, c.final_value, c.verdict
            );
        }
    }
    Ok(())
}
