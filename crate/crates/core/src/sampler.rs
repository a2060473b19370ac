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

//! No-collision output distributions for boson, distinguishable and uniform
//! samplers, and seeded event streams drawn from them.

use std::collections::HashMap;

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimation::PeakAreas;
use crate::interference::{
    three_photon_probability, two_photon_probability, IndistinguishabilitySet,
    OutputConfiguration, TransferMatrix,
};

/// Which hypothesis generated a distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SamplerKind {
    Boson,
    Distinguishable,
    Uniform,
}

impl SamplerKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SamplerKind::Boson => "boson",
            SamplerKind::Distinguishable => "distinguishable",
            SamplerKind::Uniform => "uniform",
        }
    }
}

impl std::str::FromStr for SamplerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "boson" => Ok(SamplerKind::Boson),
            "distinguishable" => Ok(SamplerKind::Distinguishable),
            "uniform" => Ok(SamplerKind::Uniform),
            other => Err(Error::domain(format!("unknown sampler kind {other:?}"))),
        }
    }
}

/// Weights over the lexicographically ordered no-collision configurations.
///
/// `norm` is always the sum of `weights`. `source_norm` is the sum of the raw
/// theoretical weights and survives [`SamplingDistribution::normalize`], so a
/// lossy network's non-unity normalisation stays available.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplingDistribution {
    pub configs: Vec<OutputConfiguration>,
    pub weights: Vec<f64>,
    pub norm: f64,
    pub source_norm: f64,
    pub kind: SamplerKind,
}

impl SamplingDistribution {
    pub fn new(
        configs: Vec<OutputConfiguration>,
        weights: Vec<f64>,
        kind: SamplerKind,
    ) -> Result<Self> {
        if configs.len() != weights.len() {
            return Err(Error::LengthMismatch {
                expected: configs.len(),
                actual: weights.len(),
            });
        }
        if let Some(w) = weights.iter().find(|w| !(**w >= 0.0) || !w.is_finite()) {
            return Err(Error::domain(format!("invalid weight {w}")));
        }
        let norm = weights.iter().sum();
        Ok(Self {
            configs,
            weights,
            norm,
            source_norm: norm,
            kind,
        })
    }

    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    /// Weights rescaled to sum to one; `source_norm` is kept.
    pub fn normalize(&self) -> Result<Self> {
        if !(self.norm > 0.0) {
            return Err(Error::DegenerateDistribution(format!(
                "{} distribution has zero total weight",
                self.kind.as_str()
            )));
        }
        let weights = self.weights.iter().map(|w| w / self.norm).collect::<Vec<_>>();
        let norm = weights.iter().sum();
        Ok(Self {
            configs: self.configs.clone(),
            weights,
            norm,
            source_norm: self.source_norm,
            kind: self.kind,
        })
    }

    /// Normalised probabilities as a plain vector.
    pub fn probabilities(&self) -> Result<Vec<f64>> {
        Ok(self.normalize()?.weights)
    }

    pub fn index_of(&self, config: &OutputConfiguration) -> Option<usize> {
        self.configs.binary_search(config).ok()
    }

    pub fn same_support(&self, other: &Self) -> bool {
        self.configs == other.configs
    }
}

/// All `C(m, n)` strictly increasing `n`-tuples from `0..m`, lexicographic.
pub fn enumerate_no_collision(m: usize, n: usize) -> Result<Vec<OutputConfiguration>> {
    if n == 0 || n > m {
        return Err(Error::domain(format!("cannot place {n} photons in {m} modes without collision")));
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(OutputConfiguration::new(current.clone())?);
        // Rightmost position that can still advance.
        let Some(i) = (0..n).rev().find(|&i| current[i] < m - n + i) else {
            break;
        };
        current[i] += 1;
        for j in i + 1..n {
            current[j] = current[j - 1] + 1;
        }
    }
    Ok(out)
}

/// Interference probabilities for every no-collision configuration.
pub fn boson_distribution(
    l: &TransferMatrix,
    inputs: &[usize],
    indist: &IndistinguishabilitySet,
) -> Result<SamplingDistribution> {
    let configs = enumerate_no_collision(l.output_modes(), inputs.len())?;
    let weights: Vec<f64> = match *inputs {
        [a, b] => {
            let i = indist.get(a, b)?;
            configs
                .par_iter()
                .map(|k| two_photon_probability(l, [a, b], k, i))
                .collect::<Result<_>>()?
        }
        [a, b, c] => configs
            .par_iter()
            .map(|k| three_photon_probability(l, [a, b, c], k, indist))
            .collect::<Result<_>>()?,
        _ => {
            return Err(Error::dim(format!(
                "interference model covers 2 or 3 photons, got {}",
                inputs.len()
            )))
        }
    };
    SamplingDistribution::new(configs, weights, SamplerKind::Boson)
}

/// Fully distinguishable photons: every pairwise overlap zero.
pub fn distinguishable_distribution(
    l: &TransferMatrix,
    inputs: &[usize],
) -> Result<SamplingDistribution> {
    let zeros = IndistinguishabilitySet::uniform(inputs, 0.0)?;
    let mut d = boson_distribution(l, inputs, &zeros)?;
    d.kind = SamplerKind::Distinguishable;
    Ok(d)
}

pub fn uniform_distribution(m: usize, n: usize) -> Result<SamplingDistribution> {
    let configs = enumerate_no_collision(m, n)?;
    let w = 1.0 / configs.len() as f64;
    let weights = vec![w; configs.len()];
    let mut d = SamplingDistribution::new(configs, weights, SamplerKind::Uniform)?;
    d.norm = 1.0;
    d.source_norm = 1.0;
    Ok(d)
}

/// Seeded sequence of sampled output configurations.
#[derive(Clone, Debug, PartialEq)]
pub struct EventStream {
    pub events: Vec<OutputConfiguration>,
    pub seed: u64,
    pub count: usize,
}

impl EventStream {
    pub fn from_events(events: Vec<OutputConfiguration>, seed: u64) -> Self {
        let count = events.len();
        Self { events, seed, count }
    }

    /// Number of events per configuration of `d`, in `d`'s order.
    pub fn histogram(&self, d: &SamplingDistribution) -> Result<Vec<u64>> {
        let mut counts = vec![0u64; d.len()];
        for e in &self.events {
            let i = d.index_of(e).ok_or_else(|| {
                Error::index(format!("event {e} is not in the distribution's support"))
            })?;
            counts[i] += 1;
        }
        Ok(counts)
    }

    /// Splits the stream into consecutive chunks of at most `size` events.
    pub fn chunks(&self, size: usize) -> impl Iterator<Item = &[OutputConfiguration]> {
        self.events.chunks(size.max(1))
    }
}

/// Draws `count` i.i.d. configurations from the normalised `d` using a
/// ChaCha8 generator seeded from `seed`. Same inputs give the same stream on
/// every platform.
pub fn sample_events(d: &SamplingDistribution, count: usize, seed: u64) -> Result<EventStream> {
    let probs = d.probabilities()?;
    let index = WeightedIndex::new(&probs)
        .map_err(|e| Error::DegenerateDistribution(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let events = (0..count)
        .map(|_| d.configs[index.sample(&mut rng)].clone())
        .collect();
    Ok(EventStream::from_events(events, seed))
}

/// Multinomial counts of `count` draws, keyed by configuration.
pub fn sample_counts(
    d: &SamplingDistribution,
    count: usize,
    seed: u64,
) -> Result<HashMap<OutputConfiguration, u64>> {
    let stream = sample_events(d, count, seed)?;
    let mut map = HashMap::new();
    for e in stream.events {
        *map.entry(e).or_insert(0) += 1;
    }
    Ok(map)
}

/// Peak areas whose zero-delay area is `pq * scale` and whose side-peak
/// combination `2 A_ref - A_neg - A_pos` is `pc * scale`.
pub fn synthesize_peak_areas(pq: f64, pc: f64, scale: f64) -> Result<PeakAreas> {
    if !(scale > 0.0) || !(pq >= 0.0) || !(pc >= 0.0) {
        return Err(Error::domain(format!(
            "peak synthesis needs pq, pc >= 0 and scale > 0 (got {pq}, {pc}, {scale})"
        )));
    }
    let side = scale - 0.5 * pc * scale;
    if side < 0.0 {
        return Err(Error::domain(format!("pc = {pc} would make the side peaks negative")));
    }
    PeakAreas::new(pq * scale, scale, side, side)
}
