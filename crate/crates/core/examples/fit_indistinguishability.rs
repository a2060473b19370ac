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

//! Fits the pairwise overlap of each input pair to finite-count data drawn
//! from the model, under both normalisation options.

use boson_sampler::estimation::{fit_model, statistical_fidelity, FitNormalization, TwoPhotonModel};
use boson_sampler::interference::IndistinguishabilitySet;
use boson_sampler::io::reference_network;
use boson_sampler::sampler::{boson_distribution, sample_events};

fn main() -> boson_sampler::Result<()> {
    let l = reference_network();
    let events = 40_000;
    println!("pair  true    non-unity  unity     d_min     F");
    for (pair, truth) in [([0, 1], 0.520), ([1, 2], 0.540), ([0, 2], 0.643)] {
        let model = TwoPhotonModel::new(&l, pair)?;
        let d = boson_distribution(&l, &pair, &IndistinguishabilitySet::uniform(&pair, truth)?)?;
        let counts = sample_events(&d, events, 1)?.histogram(&d)?;
        let data: Vec<f64> = counts.iter().map(|&c| c as f64).collect();

        let a = fit_model(&model, &data, FitNormalization::NonUnity)?;
        let b = fit_model(&model, &data, FitNormalization::Unity)?;
        let empirical: Vec<f64> = data.iter().map(|c| c / events as f64).collect();
        let f = statistical_fidelity(&empirical, &d.probabilities()?)?;
        println!(
            "{}+{}   {truth:.3}   {:.4}     {:.4}    {:.5}   {f:.5}",
            pair[0] + 1,
            pair[1] + 1,
            a.i_star,
            b.i_star,
            a.d_min
        );
    }
    Ok(())
}
