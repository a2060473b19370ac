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

//! Beam-splitter overlap estimates and peak-area extraction.

use boson_sampler::estimation::{extract_from_peaks, hom_area_ratio, hom_indistinguishability, PeakAreas};
use boson_sampler::sampler::synthesize_peak_areas;

fn main() -> boson_sampler::Result<()> {
    let r = 0.471;
    for i in [0.6360, 0.6252] {
        let ratio = hom_area_ratio(i, r)?;
        let back = hom_indistinguishability(ratio, r)?;
        println!("I = {i}: A0/A = {ratio:.9} -> I = {:.12}", back.value);
    }
    let noisy = hom_indistinguishability(0.60, r)?;
    println!("A0/A = 0.60 -> I = {:.4} (in range: {})", noisy.value, noisy.in_range);

    println!();
    let areas = synthesize_peak_areas(0.0184, 0.0310, 1.0e5)?;
    println!("{areas:?}");
    println!("{:?}", extract_from_peaks(&areas));
    let measured = PeakAreas::new(1830.0, 10_000.0, 8_460.0, 8_470.0)?;
    println!("{:?}", extract_from_peaks(&measured));
    Ok(())
}
