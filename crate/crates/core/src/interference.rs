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

//! Coincidence probabilities for two and three partially distinguishable
//! photons scattered by a (possibly lossy) linear network.
//!
//! Two photons with overlap `I` mix the permanent and determinant of the
//! 2x2 submatrix:
//!
//! ```text
//! p = (1 + I)/2 |per|^2 + (1 - I)/2 |det|^2
//! ```
//!
//! Three photons are described by a six-component vector `t6` built from the
//! permanent, determinant and mixed-symmetry immanants of the 3x3 submatrix
//! `T`, contracted with a weighted sum of five constant 6x6 matrices:
//!
//! ```text
//! p = t6^H (1 + rho12 I12 + rho23 I23 + rho13 I13 + rho~ sqrt(I12 I23 I13)) t6
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::{determinant, immanant3, permanent, permute_rows, submatrix};
use crate::matrix::ComplexMatrix;

/// Tolerance on row squared-norms above one. Published network
/// characterisations are rounded to three decimals, which can push a row
/// slightly past unity.
pub const DEFAULT_ROW_NORM_TOLERANCE: f64 = 5e-3;

/// Allowed imaginary residue (and negative excursion) in `t6^H M t6`.
pub const REALITY_TOLERANCE: f64 = 1e-10;

/// Input-to-output amplitude matrix: rows are input modes, columns output modes.
#[derive(Clone, Debug, PartialEq)]
pub struct TransferMatrix {
    inner: ComplexMatrix,
    labels: Vec<String>,
}

impl TransferMatrix {
    pub fn new(inner: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(inner, DEFAULT_ROW_NORM_TOLERANCE)
    }

    /// Validates sub-unitary rows to within `tol` above one.
    pub fn with_tolerance(inner: ComplexMatrix, tol: f64) -> Result<Self> {
        if inner.rows() == 0 {
            return Err(Error::dim("transfer matrix has no input modes"));
        }
        if inner.rows() > inner.cols() {
            return Err(Error::dim(format!(
                "{} input modes exceed {} output modes",
                inner.rows(),
                inner.cols()
            )));
        }
        for i in 0..inner.rows() {
            let norm = inner.row_norm_sqr(i);
            if norm > 1.0 + tol {
                return Err(Error::domain(format!(
                    "row {} has squared norm {norm} > 1 (tolerance {tol})",
                    i + 1
                )));
            }
        }
        let labels = (1..=inner.cols()).map(|k| format!("out{k}")).collect();
        Ok(Self { inner, labels })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.inner.cols() {
            return Err(Error::LengthMismatch {
                expected: self.inner.cols(),
                actual: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.inner
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn input_modes(&self) -> usize {
        self.inner.rows()
    }

    pub fn output_modes(&self) -> usize {
        self.inner.cols()
    }

    /// Submatrix with rows `inputs` and columns `outputs`.
    pub fn submatrix(&self, inputs: &[usize], outputs: &[usize]) -> Result<ComplexMatrix> {
        submatrix(&self.inner, inputs, outputs)
    }
}

/// Symmetric pairwise overlaps between input photons, keyed by input index.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct IndistinguishabilitySet {
    values: BTreeMap<(usize, usize), f64>,
}

impl IndistinguishabilitySet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Same overlap for every pair drawn from `inputs`.
    pub fn uniform(inputs: &[usize], value: f64) -> Result<Self> {
        let mut set = Self::new();
        for (a, &i) in inputs.iter().enumerate() {
            for &j in &inputs[a + 1..] {
                set.insert(i, j, value)?;
            }
        }
        Ok(set)
    }

    /// Overlaps for a triple given in the order `(I12, I23, I13)`, where the
    /// labels 1, 2, 3 are the positions within `inputs`.
    pub fn for_triple(inputs: [usize; 3], i12: f64, i23: f64, i13: f64) -> Result<Self> {
        let mut set = Self::new();
        set.insert(inputs[0], inputs[1], i12)?;
        set.insert(inputs[1], inputs[2], i23)?;
        set.insert(inputs[0], inputs[2], i13)?;
        if !is_realisable_triple(i12, i23, i13) {
            return Err(Error::domain(format!(
                "overlaps ({i12}, {i23}, {i13}) do not come from any three pure states"
            )));
        }
        Ok(set)
    }

    pub fn insert(&mut self, i: usize, j: usize, value: f64) -> Result<()> {
        if i == j {
            return Err(Error::domain(format!("no self-overlap entry allowed (input {i})")));
        }
        check_unit_interval(value)?;
        self.values.insert(key(i, j), value);
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> Result<f64> {
        self.values.get(&key(i, j)).copied().ok_or_else(|| {
            Error::domain(format!("missing indistinguishability for inputs {i} and {j}"))
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), f64)> + '_ {
        self.values.iter().map(|(&k, &v)| (k, v))
    }
}

fn key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

fn check_unit_interval(value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::domain(format!("indistinguishability {value} outside [0, 1]")))
    }
}

/// Tolerance on the Gram determinant when checking that three pairwise
/// overlaps can come from three pure states.
pub const GRAM_TOLERANCE: f64 = 1e-12;

/// Whether overlaps `sqrt(I12), sqrt(I23), sqrt(I13)` form a positive
/// semidefinite Gram matrix. Triples such as `(1, 1, 0)` do not, and the
/// three-photon formula then produces negative values.
pub fn is_realisable_triple(i12: f64, i23: f64, i13: f64) -> bool {
    let (a, b, c) = (i12.sqrt(), i23.sqrt(), i13.sqrt());
    1.0 + 2.0 * a * b * c - a * a - b * b - c * c >= -GRAM_TOLERANCE
}

/// Strictly increasing set of occupied output modes (no two photons share a mode).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OutputConfiguration(Vec<usize>);

impl OutputConfiguration {
    pub fn new(modes: Vec<usize>) -> Result<Self> {
        if modes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::index(format!(
                "output modes {modes:?} are not strictly increasing"
            )));
        }
        Ok(Self(modes))
    }

    /// Sorts `modes` first; duplicates are still rejected.
    pub fn from_unordered(mut modes: Vec<usize>) -> Result<Self> {
        modes.sort_unstable();
        Self::new(modes)
    }

    /// Parses a 1-based label such as `"1+4+6"`.
    pub fn parse_label(label: &str) -> Result<Self> {
        let modes = label
            .split('+')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&k| k >= 1)
                    .map(|k| k - 1)
                    .ok_or_else(|| Error::index(format!("bad mode label {s:?} in {label:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(modes)
    }

    /// 1-based label, e.g. `"1+2+3"`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|k| (k + 1).to_string()).collect();
        parts.join("+")
    }

    pub fn modes(&self) -> &[usize] {
        &self.0
    }

    pub fn check_range(&self, m: usize) -> Result<()> {
        match self.0.last() {
            Some(&k) if k >= m => Err(Error::index(format!(
                "output mode {} beyond {} modes",
                k + 1,
                m
            ))),
            _ => Ok(()),
        }
    }
}

impl Deref for OutputConfiguration {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for OutputConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Two-photon coincidence probability for inputs `inputs` detected at `outputs`.
pub fn two_photon_probability(
    l: &TransferMatrix,
    inputs: [usize; 2],
    outputs: &[usize],
    indist: f64,
) -> Result<f64> {
    check_unit_interval(indist)?;
    if outputs.len() != 2 {
        return Err(Error::dim(format!("expected 2 outputs, got {}", outputs.len())));
    }
    let sub = l.submatrix(&inputs, outputs)?;
    let per = permanent(&sub)?.norm_sqr();
    let det = determinant(&sub)?.norm_sqr();
    Ok(0.5 * (1.0 + indist) * per + 0.5 * (1.0 - indist) * det)
}

/// How a subscript `(a, b, c)` on `T_abc` rearranges the rows of `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowOrder {
    /// Row `i` of `T_abc` is original row `(a, b, c)[i]`.
    Stacked,
    /// Original row `i` moves to position `(a, b, c)[i]`.
    Inverse,
}

impl RowOrder {
    fn order(self, abc: [usize; 3]) -> [usize; 3] {
        let zero_based = abc.map(|k| k - 1);
        match self {
            RowOrder::Stacked => zero_based,
            RowOrder::Inverse => {
                let mut inv = [0; 3];
                for (i, &p) in zero_based.iter().enumerate() {
                    inv[p] = i;
                }
                inv
            }
        }
    }
}

/// Six-component amplitude vector of a 3x3 submatrix.
///
/// Row-permuted copies `T_abc` follow [`RowOrder::Inverse`]; it is the reading
/// under which the probability does not depend on how the outputs are listed.
pub fn t6_vector(t: &ComplexMatrix) -> Result<[Complex64; 6]> {
    t6_vector_with(t, RowOrder::Inverse)
}

pub fn t6_vector_with(t: &ComplexMatrix, convention: RowOrder) -> Result<[Complex64; 6]> {
    if t.rows() != 3 || t.cols() != 3 {
        return Err(Error::dim(format!("t6 needs a 3x3 matrix, got {}x{}", t.rows(), t.cols())));
    }
    let imm_of = |abc: [usize; 3]| -> Result<Complex64> {
        immanant3(&permute_rows(t, &convention.order(abc))?)
    };
    let imm = immanant3(t)?;
    let imm132 = imm_of([1, 3, 2])?;
    let imm213 = imm_of([2, 1, 3])?;
    let imm312 = imm_of([3, 1, 2])?;

    let s6 = 6f64.sqrt();
    let s12 = 2.0 * 3f64.sqrt();
    Ok([
        permanent(t)? / s6,
        determinant(t)? / s6,
        (imm + imm213) / s12,
        imm / 6.0 - imm132 / 3.0 - imm213 / 6.0 + imm312 / 3.0,
        imm / 6.0 + imm132 / 3.0 + imm213 / 6.0 + imm312 / 3.0,
        (-imm + imm213) / s12,
    ])
}

pub type Mat6 = [[f64; 6]; 6];

/// The five constant 6x6 matrices weighting the three-photon overlaps.
#[derive(Clone, Debug, PartialEq)]
pub struct RhoMatrices {
    pub identity: Mat6,
    pub rho12: Mat6,
    pub rho23: Mat6,
    pub rho13: Mat6,
    pub rho_tilde: Mat6,
}

const H: f64 = 0.5;
// sqrt(3)/2
const R3H: f64 = 0.866_025_403_784_438_6;

const IDENTITY6: Mat6 = [
    [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0, 1.0, 0.0],
    [0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
];

const RHO_12: Mat6 = [
    [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, -1.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0, 1.0, 0.0],
    [0.0, 0.0, 0.0, 0.0, 0.0, -1.0],
];

const RHO_23: Mat6 = [
    [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, -H, -R3H, 0.0, 0.0],
    [0.0, 0.0, -R3H, H, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0, -H, -R3H],
    [0.0, 0.0, 0.0, 0.0, -R3H, H],
];

const RHO_13: Mat6 = [
    [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, -H, R3H, 0.0, 0.0],
    [0.0, 0.0, R3H, H, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0, -H, R3H],
    [0.0, 0.0, 0.0, 0.0, R3H, H],
];

const RHO_TILDE: Mat6 = [
    [2.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 2.0, 0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, -1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, -1.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0, -1.0, 0.0],
    [0.0, 0.0, 0.0, 0.0, 0.0, -1.0],
];

pub fn rho_matrices() -> RhoMatrices {
    RhoMatrices {
        identity: IDENTITY6,
        rho12: RHO_12,
        rho23: RHO_23,
        rho13: RHO_13,
        rho_tilde: RHO_TILDE,
    }
}

/// `1 + rho12 I12 + rho23 I23 + rho13 I13 + rho~ sqrt(I12 I23 I13)`.
pub fn overlap_operator(i12: f64, i23: f64, i13: f64) -> Result<Mat6> {
    for v in [i12, i23, i13] {
        check_unit_interval(v)?;
    }
    if !is_realisable_triple(i12, i23, i13) {
        return Err(Error::domain(format!(
            "overlaps ({i12}, {i23}, {i13}) do not come from any three pure states"
        )));
    }
    let triple = i12.sqrt() * i23.sqrt() * i13.sqrt();
    let mut m = [[0.0; 6]; 6];
    for (r, row) in m.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            *v = IDENTITY6[r][c]
                + RHO_12[r][c] * i12
                + RHO_23[r][c] * i23
                + RHO_13[r][c] * i13
                + RHO_TILDE[r][c] * triple;
        }
    }
    Ok(m)
}

/// `t^H M t` for a 3x3 amplitude block `t`; checks the result is real and non-negative.
pub fn three_photon_from_block(t: &ComplexMatrix, i12: f64, i23: f64, i13: f64) -> Result<f64> {
    let op = overlap_operator(i12, i23, i13)?;
    let v = t6_vector(t)?;
    let mut q = Complex64::new(0.0, 0.0);
    for (r, row) in op.iter().enumerate() {
        for (c, &w) in row.iter().enumerate() {
            if w != 0.0 {
                q += v[r].conj() * w * v[c];
            }
        }
    }
    if q.im.abs() > REALITY_TOLERANCE {
        return Err(Error::NumericalConsistency(format!(
            "three-photon probability has imaginary residue {:e}",
            q.im
        )));
    }
    if q.re < -REALITY_TOLERANCE {
        return Err(Error::NumericalConsistency(format!(
            "three-photon probability is negative ({:e})",
            q.re
        )));
    }
    Ok(q.re.max(0.0))
}

/// Three-photon coincidence probability for `inputs` detected at `outputs`.
/// Photon labels 1, 2, 3 follow the order of `inputs`.
pub fn three_photon_probability(
    l: &TransferMatrix,
    inputs: [usize; 3],
    outputs: &[usize],
    indist: &IndistinguishabilitySet,
) -> Result<f64> {
    if outputs.len() != 3 {
        return Err(Error::dim(format!("expected 3 outputs, got {}", outputs.len())));
    }
    let i12 = indist.get(inputs[0], inputs[1])?;
    let i23 = indist.get(inputs[1], inputs[2])?;
    let i13 = indist.get(inputs[0], inputs[2])?;
    let t = l.submatrix(&inputs, outputs)?;
    three_photon_from_block(&t, i12, i23, i13)
}
