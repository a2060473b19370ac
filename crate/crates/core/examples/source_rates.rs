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

//! Demultiplexed n-photon rates, before and after calibrating the channel
//! transmission against one measured row.

use boson_sampler::source::{
    calibrate_extra_loss, n_photon_rates, rate_table, Routing, SourceParams, REFERENCE_RATES,
};

fn main() -> boson_sampler::Result<()> {
    let p = SourceParams::default();
    let (n, pump, detected, _) = REFERENCE_RATES[0];
    let loss = calibrate_extra_loss(&p, n, pump * p.p0_uw, detected, Routing::Designated)?;
    let cal = SourceParams { extra_loss: loss, ..p };
    println!("extra_loss calibrated on n={n}, {pump} P0: {loss:.4}\n");

    println!("n  P/P0  measured det.  model det.   measured gen.  model gen.");
    for (n, pump, det, gen) in REFERENCE_RATES {
        let r = n_photon_rates(&cal, n, pump * p.p0_uw, Routing::Designated)?;
        println!(
            "{n}  {pump:<4}  {det:>10.0} Hz  {:>9.0} Hz  {gen:>10.0} Hz  {:>9.0} Hz",
            r.detected_hz, r.generated_hz
        );
    }

    println!("\nany-order routing:");
    for row in rate_table(&cal, &[2, 3, 4], &[3.0], Routing::AnyOrder)? {
        println!("  n={} detected {:.1} Hz", row.n, row.detected_hz);
    }
    Ok(())
}
