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

//! Count-rate arithmetic for a demultiplexed single-photon source.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Source and detection parameters. Defaults describe the reference
/// quantum-dot source: 0.14 peak brightness, 150 uW saturation power,
/// 80 MHz pump, detectors at 30% efficiency.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SourceParams {
    /// Saturated collection probability per pump pulse.
    pub eta0: f64,
    /// Saturation power in microwatts.
    pub p0_uw: f64,
    /// Pump repetition rate in hertz.
    pub rep_rate_hz: f64,
    /// Per-detector quantum efficiency.
    pub det_eff: f64,
    /// Per-channel transmission after the demultiplexer (calibration knob).
    pub extra_loss: f64,
}

impl Default for SourceParams {
    fn default() -> Self {
        Self {
            eta0: 0.14,
            p0_uw: 150.0,
            rep_rate_hz: 80e6,
            det_eff: 0.30,
            extra_loss: 1.0,
        }
    }
}

impl SourceParams {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("eta0", self.eta0),
            ("det_eff", self.det_eff),
            ("extra_loss", self.extra_loss),
        ] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::domain(format!("{name} = {v} outside [0, 1]")));
            }
        }
        if !(self.p0_uw > 0.0) {
            return Err(Error::domain(format!("p0_uw = {} must be positive", self.p0_uw)));
        }
        if !(self.rep_rate_hz > 0.0) {
            return Err(Error::domain(format!(
                "rep_rate_hz = {} must be positive",
                self.rep_rate_hz
            )));
        }
        Ok(())
    }
}

/// How a passive demultiplexer is counted as successful.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Routing {
    /// Each of the `n` photons lands in its own designated output: `n^-n`.
    #[default]
    Designated,
    /// Any assignment of the `n` photons to distinct outputs: `n!/n^n`.
    AnyOrder,
}

/// `eta0 (1 - exp(-P / P0))`.
pub fn brightness(params: &SourceParams, pump_uw: f64) -> Result<f64> {
    if !(pump_uw >= 0.0) {
        return Err(Error::domain(format!("pump power {pump_uw} uW must be >= 0")));
    }
    Ok(params.eta0 * -(-pump_uw / params.p0_uw).exp_m1())
}

pub fn demux_success(n: u32, routing: Routing) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("demultiplexing needs at least one photon"));
    }
    let nf = n as f64;
    let designated = nf.powi(-(n as i32));
    Ok(match routing {
        Routing::Designated => designated,
        Routing::AnyOrder => designated * (1..=n).map(f64::from).product::<f64>(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rates {
    pub generated_hz: f64,
    pub detected_hz: f64,
}

/// Generated and detected `n`-photon coincidence rates at `pump_uw`.
pub fn n_photon_rates(
    params: &SourceParams,
    n: u32,
    pump_uw: f64,
    routing: Routing,
) -> Result<Rates> {
    params.validate()?;
    let eta = brightness(params, pump_uw)?;
    let generated_hz =
        params.rep_rate_hz * (eta * params.extra_loss).powi(n as i32) * demux_success(n, routing)?;
    Ok(Rates {
        generated_hz,
        detected_hz: generated_hz * params.det_eff.powi(n as i32),
    })
}

/// Per-channel transmission that reproduces `detected_hz` for `n` photons at
/// `pump_uw`, all other parameters held fixed.
pub fn calibrate_extra_loss(
    params: &SourceParams,
    n: u32,
    pump_uw: f64,
    detected_hz: f64,
    routing: Routing,
) -> Result<f64> {
    if !(detected_hz > 0.0) {
        return Err(Error::domain("calibration rate must be positive"));
    }
    let unit = SourceParams {
        extra_loss: 1.0,
        ..*params
    };
    let reference = n_photon_rates(&unit, n, pump_uw, routing)?.detected_hz;
    if !(reference > 0.0) {
        return Err(Error::domain("zero predicted rate; cannot calibrate at zero pump power"));
    }
    let loss = (detected_hz / reference).powf(1.0 / n as f64);
    if loss > 1.0 {
        return Err(Error::domain(format!(
            "calibration needs per-channel transmission {loss} > 1"
        )));
    }
    Ok(loss)
}

/// One row of the demultiplexed rate table.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateRow {
    pub n: u32,
    /// Pump power in units of the saturation power.
    pub pump_p0: f64,
    pub pump_uw: f64,
    pub detected_hz: f64,
    pub detection_efficiency: f64,
    pub generated_hz: f64,
}

/// Reference rates measured for the demultiplexed source:
/// `(n, pump in units of P0, detected Hz, generated Hz)`.
pub const REFERENCE_RATES: [(u32, f64, f64, f64); 4] = [
    (2, 3.0, 15e3, 170e3),
    (2, 1.2, 9e3, 100e3),
    (3, 3.0, 50.0, 2e3),
    (3, 1.2, 20.0, 0.8e3),
];

/// Rows for every `(n, pump)` pair, `n` outermost.
pub fn rate_table(
    params: &SourceParams,
    photon_numbers: &[u32],
    pumps_p0: &[f64],
    routing: Routing,
) -> Result<Vec<RateRow>> {
    let mut rows = Vec::with_capacity(photon_numbers.len() * pumps_p0.len());
    for &n in photon_numbers {
        for &pump_p0 in pumps_p0 {
            let pump_uw = pump_p0 * params.p0_uw;
            let r = n_photon_rates(params, n, pump_uw, routing)?;
            rows.push(RateRow {
                n,
                pump_p0,
                pump_uw,
                detected_hz: r.detected_hz,
                detection_efficiency: params.det_eff.powi(n as i32),
                generated_hz: r.generated_hz,
            });
        }
    }
    Ok(rows)
}
