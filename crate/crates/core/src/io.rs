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

//! File formats. Mode labels in every file are 1-based.
//!
//! * Transfer matrix: JSON `{"rows", "cols", "entries": [[re, im], ...]}`,
//!   entries row-major, optional `"labels"` for the output modes.
//! * Distribution: CSV `config,raw_weight,probability` or JSON with `kind`,
//!   `norm` and per-configuration rows.
//! * Counts: CSV `config,count`.
//! * Counter trace: CSV `event,counter`.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interference::{OutputConfiguration, TransferMatrix};
use crate::matrix::ComplexMatrix;
use crate::sampler::{SamplerKind, SamplingDistribution};
use crate::source::RateRow;
use crate::validation::CounterTrace;

const REFERENCE_NETWORK_JSON: &str = include_str!("../fixtures/network_3x6.json");

#[derive(Debug, Serialize, Deserialize)]
struct TransferMatrixFile {
    rows: usize,
    cols: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    entries: Vec<[f64; 2]>,
}

/// The characterised 3-input, 6-output network shipped with the crate.
pub fn reference_network() -> TransferMatrix {
    transfer_matrix_from_json(REFERENCE_NETWORK_JSON, Path::new("<reference network>"))
        .expect("bundled fixture is valid")
}

pub fn transfer_matrix_from_json(text: &str, origin: &Path) -> Result<TransferMatrix> {
    let file: TransferMatrixFile =
        serde_json::from_str(text).map_err(|e| Error::format(origin, e.to_string()))?;
    let data = file
        .entries
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    let m = ComplexMatrix::new(file.rows, file.cols, data)?;
    let l = TransferMatrix::new(m)?;
    match file.labels {
        Some(labels) => l.with_labels(labels),
        None => Ok(l),
    }
}

pub fn read_transfer_matrix(path: &Path) -> Result<TransferMatrix> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    transfer_matrix_from_json(&text, path)
}

pub fn transfer_matrix_to_json(l: &TransferMatrix) -> String {
    let m = l.matrix();
    let file = TransferMatrixFile {
        rows: m.rows(),
        cols: m.cols(),
        labels: Some(l.labels().to_vec()),
        entries: m.as_slice().iter().map(|z| [z.re, z.im]).collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    s
}

#[derive(Debug, Serialize, Deserialize)]
struct DistributionRow {
    config: String,
    raw_weight: f64,
    probability: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct DistributionFile {
    kind: SamplerKind,
    norm: f64,
    configs: Vec<DistributionRow>,
}

pub fn distribution_csv(d: &SamplingDistribution) -> Result<String> {
    let probs = d.probabilities()?;
    let mut out = String::from("config,raw_weight,probability\n");
    for ((c, w), p) in d.configs.iter().zip(&d.weights).zip(&probs) {
        writeln!(out, "{},{},{}", c.label(), w, p).expect("write to string");
    }
    Ok(out)
}

pub fn distribution_json(d: &SamplingDistribution) -> Result<String> {
    let probs = d.probabilities()?;
    let file = DistributionFile {
        kind: d.kind,
        norm: d.norm,
        configs: d
            .configs
            .iter()
            .zip(&d.weights)
            .zip(&probs)
            .map(|((c, &raw_weight), &probability)| DistributionRow {
                config: c.label(),
                raw_weight,
                probability,
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    Ok(s)
}

pub fn counts_csv(configs: &[OutputConfiguration], counts: &[u64]) -> String {
    let mut out = String::from("config,count\n");
    for (c, n) in configs.iter().zip(counts) {
        writeln!(out, "{},{}", c.label(), n).expect("write to string");
    }
    out
}

/// Reads a `config,value[,...]` CSV (header required) and returns the
/// second column aligned to `configs`. Every configuration must appear once.
pub fn read_weights_csv(path: &Path, configs: &[OutputConfiguration]) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_weights_csv(&text, path, configs)
}

pub fn parse_weights_csv(
    text: &str,
    origin: &Path,
    configs: &[OutputConfiguration],
) -> Result<Vec<f64>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::format(origin, "empty file"))?;
    if !header.trim_start().starts_with("config") {
        return Err(Error::format(origin, "missing `config,...` header"));
    }
    let mut weights: Vec<Option<f64>> = vec![None; configs.len()];
    for (lineno, line) in lines.enumerate() {
        let mut fields = line.split(',');
        let label = fields.next().unwrap_or_default().trim();
        let value = fields
            .next()
            .ok_or_else(|| Error::format(origin, format!("line {}: missing value", lineno + 2)))?;
        let config = OutputConfiguration::parse_label(label)
            .map_err(|e| Error::format(origin, format!("line {}: {e}", lineno + 2)))?;
        let value: f64 = value.trim().parse().map_err(|_| {
            Error::format(origin, format!("line {}: bad number {value:?}", lineno + 2))
        })?;
        let idx = configs.binary_search(&config).map_err(|_| {
            Error::format(origin, format!("line {}: unexpected configuration {label}", lineno + 2))
        })?;
        if weights[idx].replace(value).is_some() {
            return Err(Error::format(origin, format!("duplicate configuration {label}")));
        }
    }
    weights
        .into_iter()
        .zip(configs)
        .map(|(w, c)| w.ok_or_else(|| Error::format(origin, format!("missing configuration {c}"))))
        .collect()
}

pub fn trace_csv(trace: &CounterTrace) -> String {
    let mut out = String::from("event,counter\n");
    for (k, v) in &trace.steps {
        writeln!(out, "{k},{v}").expect("write to string");
    }
    out
}

pub fn rate_table_csv(rows: &[RateRow]) -> String {
    let mut out = String::from(
        "n,pump_p0,pump_uw,detected_rate_hz,detection_efficiency,generated_rate_hz\n",
    );
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n, r.pump_p0, r.pump_uw, r.detected_hz, r.detection_efficiency, r.generated_hz
        )
        .expect("write to string");
    }
    out
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Writes every file to a temporary sibling first and renames them into
/// place only once all writes have succeeded.
pub fn write_files_atomic(files: &[(PathBuf, String)]) -> Result<()> {
    let mut staged = Vec::with_capacity(files.len());
    for (path, contents) in files {
        let dir = path
            .parent()
            .filter(|p| !p.as_os_str().is_empty())
            .unwrap_or(Path::new("."));
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
        tmp.write_all(contents.as_bytes())
            .and_then(|_| tmp.flush())
            .map_err(|e| Error::io(path, e))?;
        staged.push((tmp, path));
    }
    for (tmp, path) in staged {
        tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    }
    Ok(())
}
