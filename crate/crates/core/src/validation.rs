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

//! Event-by-event validation counters.
//!
//! Each observed event moves a counter by +1 or -1. Against the uniform
//! hypothesis the test statistic is the row-norm product of the event's
//! submatrix, compared with its value `(n/m)^n` for a uniform network.
//! Against the distinguishable hypothesis it is whether the event is more
//! likely under the boson model than under the distinguishable one. A
//! positive final count favours the boson sampler.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interference::{OutputConfiguration, TransferMatrix};
use crate::matrix::ComplexMatrix;
use crate::sampler::{EventStream, SamplingDistribution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Validated,
    Rejected,
    Tie,
}

impl Verdict {
    pub fn from_counter(value: i64) -> Self {
        match value.signum() {
            1 => Verdict::Validated,
            -1 => Verdict::Rejected,
            _ => Verdict::Tie,
        }
    }
}

/// Counter value after each event. `steps[k] = (k + 1, counter)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CounterTrace {
    pub steps: Vec<(usize, i64)>,
    #[serde(rename = "final")]
    pub final_value: i64,
    pub verdict: Verdict,
}

impl CounterTrace {
    pub fn from_increments<I: IntoIterator<Item = bool>>(increments: I) -> Self {
        let mut counter = 0i64;
        let steps: Vec<(usize, i64)> = increments
            .into_iter()
            .enumerate()
            .map(|(k, up)| {
                counter += if up { 1 } else { -1 };
                (k + 1, counter)
            })
            .collect();
        Self {
            steps,
            final_value: counter,
            verdict: Verdict::from_counter(counter),
        }
    }

    /// Trace of `self` followed by `next`, as if evaluated in one pass.
    pub fn concat(&self, next: &CounterTrace) -> CounterTrace {
        let offset = self.steps.len();
        let mut steps = self.steps.clone();
        steps.extend(
            next.steps
                .iter()
                .map(|&(k, v)| (k + offset, v + self.final_value)),
        );
        let final_value = self.final_value + next.final_value;
        CounterTrace {
            steps,
            final_value,
            verdict: Verdict::from_counter(final_value),
        }
    }

    pub fn empty() -> Self {
        Self::from_increments(std::iter::empty())
    }
}

/// Product over rows of the row squared-norms of a square submatrix.
pub fn aa_estimator(sub: &ComplexMatrix) -> Result<f64> {
    let n = sub.require_square("row-norm estimator")?;
    Ok((0..n).map(|i| sub.row_norm_sqr(i)).product())
}

/// Estimator value for a uniform network, `(n/m)^n`.
pub fn uniform_threshold(n: usize, m: usize) -> Result<f64> {
    if n == 0 || n > m {
        return Err(Error::domain(format!("need 1 <= n <= m, got n={n}, m={m}")));
    }
    Ok((n as f64 / m as f64).powi(n as i32))
}

/// +1 for each event whose estimator exceeds the uniform value, -1 otherwise.
pub fn validate_against_uniform(
    l: &TransferMatrix,
    inputs: &[usize],
    events: &[OutputConfiguration],
) -> Result<CounterTrace> {
    let threshold = uniform_threshold(inputs.len(), l.output_modes())?;
    let ups = events
        .iter()
        .map(|e| {
            if e.len() != inputs.len() {
                return Err(Error::dim(format!(
                    "event {e} has {} photons, expected {}",
                    e.len(),
                    inputs.len()
                )));
            }
            e.check_range(l.output_modes())?;
            Ok(aa_estimator(&l.submatrix(inputs, e)?)? > threshold)
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(CounterTrace::from_increments(ups))
}

pub fn validate_stream_against_uniform(
    l: &TransferMatrix,
    inputs: &[usize],
    stream: &EventStream,
) -> Result<CounterTrace> {
    validate_against_uniform(l, inputs, &stream.events)
}

/// +1 for each event with `p_Q > p_C` (normalised over the no-collision
/// space), -1 otherwise. Exact ties count as -1.
pub fn validate_against_distinguishable(
    boson: &SamplingDistribution,
    distinguishable: &SamplingDistribution,
    events: &[OutputConfiguration],
) -> Result<CounterTrace> {
    if !boson.same_support(distinguishable) {
        return Err(Error::dim(
            "boson and distinguishable distributions cover different configurations",
        ));
    }
    let pq = boson.probabilities()?;
    let pc = distinguishable.probabilities()?;
    let ups = events
        .iter()
        .map(|e| {
            let k = boson.index_of(e).ok_or_else(|| {
                Error::index(format!("event {e} is not a configuration of the distribution"))
            })?;
            Ok(pq[k] > pc[k])
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(CounterTrace::from_increments(ups))
}

pub fn validate_stream_against_distinguishable(
    boson: &SamplingDistribution,
    distinguishable: &SamplingDistribution,
    stream: &EventStream,
) -> Result<CounterTrace> {
    validate_against_distinguishable(boson, distinguishable, &stream.events)
}
