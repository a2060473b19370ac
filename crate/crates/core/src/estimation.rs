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

//! Agreement metrics between distributions and the parameter extractions
//! built on them: pairwise indistinguishability by variation-distance
//! minimisation, beam-splitter (HOM) indistinguishability, and the
//! quantum/classical split of two-photon correlation peak areas.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interference::TransferMatrix;
use crate::kernels::{determinant, permanent};
use crate::sampler::enumerate_no_collision;

/// Tolerance on `sum = 1` for inputs that must be normalised.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// Half the L1 distance between two weight vectors.
pub fn variation_distance(p: &[f64], q: &[f64]) -> Result<f64> {
    same_length(p, q)?;
    Ok(0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>())
}

/// Bhattacharyya coefficient `sum_i sqrt(p_i q_i)` of two normalised distributions.
pub fn statistical_fidelity(p: &[f64], q: &[f64]) -> Result<f64> {
    same_length(p, q)?;
    for (name, v) in [("p", p), ("q", q)] {
        let s: f64 = v.iter().sum();
        if (s - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::domain(format!("{name} sums to {s}, expected 1")));
        }
        if v.iter().any(|&x| x < 0.0) {
            return Err(Error::domain(format!("{name} has negative entries")));
        }
    }
    Ok(p.iter().zip(q).map(|(a, b)| (a * b).sqrt()).sum())
}

fn same_length(p: &[f64], q: &[f64]) -> Result<()> {
    if p.len() == q.len() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            expected: p.len(),
            actual: q.len(),
        })
    }
}

/// How experimental and theoretical weights are scaled before comparing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FitNormalization {
    /// Experimental weights are scaled to the theory's (lossy, sub-unity) sum.
    #[default]
    NonUnity,
    /// Both sides are scaled to sum to one.
    Unity,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanPoint {
    pub indist: f64,
    pub distance: f64,
}

/// Outcome of a variation-distance fit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub i_star: f64,
    pub d_min: f64,
    pub normalization: FitNormalization,
    /// Grid samples plus the refined optimum, sorted by `indist`.
    pub scan: Vec<ScanPoint>,
}

/// Grid resolution of the coarse scan.
pub const FIT_GRID_STEP: f64 = 1e-3;
/// Bracket width at which golden-section refinement stops.
pub const FIT_REFINE_TOL: f64 = 1e-6;

/// Two-photon theory for one input pair, kept as the `|per|^2` and `|det|^2`
/// terms so any overlap can be evaluated without touching the matrix again.
#[derive(Clone, Debug)]
pub struct TwoPhotonModel {
    per_sq: Vec<f64>,
    det_sq: Vec<f64>,
}

impl TwoPhotonModel {
    pub fn new(l: &TransferMatrix, inputs: [usize; 2]) -> Result<Self> {
        let configs = enumerate_no_collision(l.output_modes(), 2)?;
        let mut per_sq = Vec::with_capacity(configs.len());
        let mut det_sq = Vec::with_capacity(configs.len());
        for k in &configs {
            let sub = l.submatrix(&inputs, k)?;
            per_sq.push(permanent(&sub)?.norm_sqr());
            det_sq.push(determinant(&sub)?.norm_sqr());
        }
        Ok(Self { per_sq, det_sq })
    }

    pub fn len(&self) -> usize {
        self.per_sq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_sq.is_empty()
    }

    /// Raw (unnormalised) probabilities at overlap `indist`.
    pub fn weights(&self, indist: f64) -> Vec<f64> {
        self.per_sq
            .iter()
            .zip(&self.det_sq)
            .map(|(p, d)| 0.5 * (1.0 + indist) * p + 0.5 * (1.0 - indist) * d)
            .collect()
    }

    /// Variation distance between `p_exp` and the theory at `indist`.
    pub fn distance(&self, p_exp: &[f64], exp_sum: f64, indist: f64, norm: FitNormalization) -> f64 {
        let th = self.weights(indist);
        let th_sum: f64 = th.iter().sum();
        let (exp_scale, th_scale) = match norm {
            FitNormalization::NonUnity => (th_sum / exp_sum, 1.0),
            FitNormalization::Unity => (1.0 / exp_sum, 1.0 / th_sum),
        };
        0.5 * p_exp
            .iter()
            .zip(&th)
            .map(|(e, t)| (e * exp_scale - t * th_scale).abs())
            .sum::<f64>()
    }
}

/// Fits the pairwise indistinguishability of `inputs` to the observed
/// weights `p_exp` (one per no-collision configuration, any scale).
pub fn fit_indistinguishability(
    p_exp: &[f64],
    l: &TransferMatrix,
    inputs: [usize; 2],
) -> Result<FitResult> {
    fit_indistinguishability_with(p_exp, l, inputs, FitNormalization::NonUnity)
}

pub fn fit_indistinguishability_with(
    p_exp: &[f64],
    l: &TransferMatrix,
    inputs: [usize; 2],
    normalization: FitNormalization,
) -> Result<FitResult> {
    let model = TwoPhotonModel::new(l, inputs)?;
    fit_model(&model, p_exp, normalization)
}

pub fn fit_model(
    model: &TwoPhotonModel,
    p_exp: &[f64],
    normalization: FitNormalization,
) -> Result<FitResult> {
    if p_exp.len() != model.len() {
        return Err(Error::LengthMismatch {
            expected: model.len(),
            actual: p_exp.len(),
        });
    }
    if p_exp.iter().any(|&x| !(x >= 0.0) || !x.is_finite()) {
        return Err(Error::domain("experimental weights must be finite and non-negative"));
    }
    let exp_sum: f64 = p_exp.iter().sum();
    if !(exp_sum > 0.0) {
        return Err(Error::DegenerateDistribution("experimental weights are all zero".into()));
    }
    let d = |i: f64| model.distance(p_exp, exp_sum, i, normalization);

    let steps = (1.0 / FIT_GRID_STEP).round() as usize;
    let mut scan: Vec<ScanPoint> = (0..=steps)
        .into_par_iter()
        .map(|k| {
            let indist = k as f64 / steps as f64;
            ScanPoint {
                indist,
                distance: d(indist),
            }
        })
        .collect();

    let best = *scan
        .iter()
        .min_by(|a, b| a.distance.total_cmp(&b.distance))
        .expect("grid is non-empty");
    let lo = (best.indist - FIT_GRID_STEP).max(0.0);
    let hi = (best.indist + FIT_GRID_STEP).min(1.0);
    let refined = golden_section(&d, lo, hi, FIT_REFINE_TOL);
    let refined = ScanPoint {
        indist: refined,
        distance: d(refined),
    };
    let optimum = if refined.distance < best.distance {
        let pos = scan.partition_point(|p| p.indist < refined.indist);
        scan.insert(pos, refined);
        refined
    } else {
        best
    };
    Ok(FitResult {
        i_star: optimum.indist,
        d_min: optimum.distance,
        normalization,
        scan,
    })
}

fn golden_section<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut e = a + inv_phi * (b - a);
    let (mut fc, mut fe) = (f(c), f(e));
    while b - a > tol {
        if fc <= fe {
            b = e;
            e = c;
            fe = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + inv_phi * (b - a);
            fe = f(e);
        }
    }
    let mid = 0.5 * (a + b);
    [a, b, mid, c, e]
        .into_iter()
        .min_by(|x, y| f(*x).total_cmp(&f(*y)))
        .unwrap_or(mid)
}

/// Indistinguishability from a two-photon beam-splitter measurement.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomEstimate {
    pub value: f64,
    /// False when noise pushed the estimate outside `[0, 1]`.
    pub in_range: bool,
}

/// `I = (R^2 + T^2 - A0/A) / (2RT)` with `T = 1 - R`. Not clamped.
pub fn hom_indistinguishability(a0_over_a: f64, reflectance: f64) -> Result<HomEstimate> {
    check_reflectance(reflectance)?;
    if !(a0_over_a >= 0.0) {
        return Err(Error::domain(format!("area ratio {a0_over_a} must be non-negative")));
    }
    let r = reflectance;
    let t = 1.0 - r;
    let value = (r * r + t * t - a0_over_a) / (2.0 * r * t);
    Ok(HomEstimate {
        value,
        in_range: (0.0..=1.0).contains(&value),
    })
}

/// Zero-delay to side-peak area ratio expected for overlap `indist`.
pub fn hom_area_ratio(indist: f64, reflectance: f64) -> Result<f64> {
    check_reflectance(reflectance)?;
    let r = reflectance;
    let t = 1.0 - r;
    Ok(r * r + t * t - 2.0 * r * t * indist)
}

fn check_reflectance(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("reflectance {r} outside (0, 1)")))
    }
}

/// Areas of the correlation peaks recorded at one output configuration.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeakAreas {
    /// Zero-delay peak.
    pub a0: f64,
    /// Mean of the far, non-interfering reference peaks.
    pub a_ref: f64,
    /// Reduced peak at negative delay.
    pub a_neg: f64,
    /// Reduced peak at positive delay.
    pub a_pos: f64,
}

impl PeakAreas {
    pub fn new(a0: f64, a_ref: f64, a_neg: f64, a_pos: f64) -> Result<Self> {
        for (name, v) in [("a0", a0), ("a_ref", a_ref), ("a_neg", a_neg), ("a_pos", a_pos)] {
            if !(v >= 0.0) || !v.is_finite() {
                return Err(Error::domain(format!("peak area {name} = {v} must be >= 0")));
            }
        }
        Ok(Self {
            a0,
            a_ref,
            a_neg,
            a_pos,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeakExtraction {
    pub pq_raw: f64,
    pub pc_raw: f64,
    /// Set when noise made the classical estimate negative.
    pub negative_classical: bool,
}

/// Quantum weight from the zero-delay peak, classical weight from
/// `2 A_ref - A_neg - A_pos`.
pub fn extract_from_peaks(areas: &PeakAreas) -> PeakExtraction {
    let pc_raw = 2.0 * areas.a_ref - areas.a_neg - areas.a_pos;
    PeakExtraction {
        pq_raw: areas.a0,
        pc_raw,
        negative_classical: pc_raw < 0.0,
    }
}
