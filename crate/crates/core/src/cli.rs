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

//! Command-line front end. The `bosonsim` binary is a thin wrapper around
//! [`run`]; everything here is also callable from tests.
//!
//! Mode indices on the command line and in every file are 1-based.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::estimation::{fit_indistinguishability_with, FitNormalization, FitResult};
use crate::interference::{IndistinguishabilitySet, TransferMatrix};
use crate::io;
use crate::sampler::{
    boson_distribution, distinguishable_distribution, enumerate_no_collision, sample_events,
    uniform_distribution, SamplerKind, SamplingDistribution,
};
use crate::source::{calibrate_extra_loss, rate_table, Routing, SourceParams};
use crate::validation::{validate_against_distinguishable, validate_against_uniform, Verdict};

/// Photon-count used by `validate` when `--events` is not given.
pub const DEFAULT_VALIDATION_EVENTS: usize = 6725;

#[derive(Debug, Parser)]
#[command(name = "bosonsim", version, about = "Partial-distinguishability boson sampling simulator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Boson, distinguishable and uniform output distributions.
    Distribution(DistributionArgs),
    /// Sample events and run both validation counters.
    Validate(ValidateArgs),
    /// Fit a pairwise indistinguishability to a measured 2-photon distribution.
    Fit(FitArgs),
    /// Demultiplexed n-photon rate table.
    Rates(RatesArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct NetworkArgs {
    /// Transfer-matrix JSON; the bundled 3x6 network is used when omitted.
    #[arg(long)]
    pub network: Option<PathBuf>,

    /// 1-based input modes, e.g. `1,2,3` or `1 2 3`.
    #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
    pub inputs: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct DistributionArgs {
    #[command(flatten)]
    pub network: NetworkArgs,

    /// Overlaps: one value, or `i12,i23,i13` for three photons.
    #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
    pub indist: Vec<f64>,

    /// Also draw this many boson-sampler events and write their counts.
    #[arg(long)]
    pub events: Option<usize>,

    #[arg(long, requires = "events")]
    pub seed: Option<u64>,

    #[arg(long)]
    pub out: PathBuf,

    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub network: NetworkArgs,

    #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
    pub indist: Vec<f64>,

    /// Which sampler produces the synthetic events.
    #[arg(long, value_parser = parse_kind, default_value = "boson")]
    pub source: SamplerKind,

    #[arg(long, default_value_t = DEFAULT_VALIDATION_EVENTS)]
    pub events: usize,

    #[arg(long)]
    pub seed: u64,

    #[arg(long)]
    pub out: PathBuf,

    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[command(flatten)]
    pub network: NetworkArgs,

    /// CSV with a `config,weight` header and one row per no-collision output.
    #[arg(long)]
    pub data: PathBuf,

    #[arg(long, value_parser = parse_normalization, default_value = "non-unity")]
    pub normalization: FitNormalization,

    #[arg(long)]
    pub out: PathBuf,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RatesArgs {
    /// Source parameters JSON; reference values when omitted.
    #[arg(long)]
    pub params: Option<PathBuf>,

    /// Photon numbers.
    #[arg(long = "n", num_args = 1.., value_delimiter = ',', default_values_t = [2u32, 3])]
    pub photon_numbers: Vec<u32>,

    /// Pump powers in units of the saturation power.
    #[arg(long, num_args = 1.., value_delimiter = ',', default_values_t = [3.0, 1.2])]
    pub pumps: Vec<f64>,

    #[arg(long, value_parser = parse_routing, default_value = "designated")]
    pub routing: Routing,

    /// Fit the per-channel transmission to a measured row: `n,pump_p0,detected_hz`.
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    pub calibrate: Option<Vec<f64>>,

    #[arg(long)]
    pub out: PathBuf,

    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

fn parse_kind(s: &str) -> std::result::Result<SamplerKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_normalization(s: &str) -> std::result::Result<FitNormalization, String> {
    match s {
        "non-unity" => Ok(FitNormalization::NonUnity),
        "unity" => Ok(FitNormalization::Unity),
        _ => Err(format!("expected `non-unity` or `unity`, got {s:?}")),
    }
}

fn parse_routing(s: &str) -> std::result::Result<Routing, String> {
    match s {
        "designated" => Ok(Routing::Designated),
        "any-order" => Ok(Routing::AnyOrder),
        _ => Err(format!("expected `designated` or `any-order`, got {s:?}")),
    }
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Distribution(a) => cmd_distribution(&a),
        Command::Validate(a) => cmd_validate(&a),
        Command::Fit(a) => cmd_fit(&a),
        Command::Rates(a) => cmd_rates(&a),
    }
}

struct Setup {
    network: TransferMatrix,
    inputs: Vec<usize>,
}

fn load_network(args: &NetworkArgs) -> Result<Setup> {
    let network = match &args.network {
        Some(path) => io::read_transfer_matrix(path)?,
        None => io::reference_network(),
    };
    let mut inputs = Vec::with_capacity(args.inputs.len());
    for &k in &args.inputs {
        if k == 0 || k > network.input_modes() {
            return Err(Error::index(format!(
                "input mode {k} outside 1..={}",
                network.input_modes()
            )));
        }
        if inputs.contains(&(k - 1)) {
            return Err(Error::index(format!("input mode {k} listed twice")));
        }
        inputs.push(k - 1);
    }
    Ok(Setup { network, inputs })
}

/// Maps `--indist` onto the pairs of `inputs`.
pub fn indistinguishability_from_args(inputs: &[usize], values: &[f64]) -> Result<IndistinguishabilitySet> {
    match (inputs.len(), values) {
        (2 | 3, [v]) => IndistinguishabilitySet::uniform(inputs, *v),
        (3, [i12, i23, i13]) => {
            IndistinguishabilitySet::for_triple([inputs[0], inputs[1], inputs[2]], *i12, *i23, *i13)
        }
        (n, v) => Err(Error::domain(format!(
            "{} overlap value(s) given for {n} photons (expected 1{})",
            v.len(),
            if n == 3 { " or 3" } else { "" }
        ))),
    }
}

fn ext(format: Format) -> &'static str {
    match format {
        Format::Csv => "csv",
        Format::Json => "json",
    }
}

fn render_distribution(d: &SamplingDistribution, format: Format) -> Result<String> {
    match format {
        Format::Csv => io::distribution_csv(d),
        Format::Json => io::distribution_json(d),
    }
}

pub fn cmd_distribution(args: &DistributionArgs) -> Result<()> {
    let Setup { network, inputs } = load_network(&args.network)?;
    let indist = indistinguishability_from_args(&inputs, &args.indist)?;
    let boson = boson_distribution(&network, &inputs, &indist)?;
    let dist = distinguishable_distribution(&network, &inputs)?;
    let uniform = uniform_distribution(network.output_modes(), inputs.len())?;

    let e = ext(args.format);
    let mut files = vec![
        (args.out.join(format!("boson.{e}")), render_distribution(&boson, args.format)?),
        (args.out.join(format!("distinguishable.{e}")), render_distribution(&dist, args.format)?),
        (args.out.join(format!("uniform.{e}")), render_distribution(&uniform, args.format)?),
    ];
    if let Some(count) = args.events {
        let seed = args
            .seed
            .ok_or_else(|| Error::domain("--events requires --seed"))?;
        let stream = sample_events(&boson, count, seed)?;
        let counts = stream.histogram(&boson)?;
        files.push((args.out.join("boson_counts.csv"), io::counts_csv(&boson.configs, &counts)));
    }
    io::write_files_atomic(&files)
}

#[derive(Debug, Serialize)]
struct TestSummary {
    #[serde(rename = "final")]
    final_value: i64,
    verdict: Verdict,
}

#[derive(Debug, Serialize)]
struct ValidationSummary {
    source: SamplerKind,
    events: usize,
    seed: u64,
    inputs: Vec<usize>,
    uniform_threshold: f64,
    against_uniform: TestSummary,
    against_distinguishable: TestSummary,
}

pub fn cmd_validate(args: &ValidateArgs) -> Result<()> {
    let Setup { network, inputs } = load_network(&args.network)?;
    let indist = indistinguishability_from_args(&inputs, &args.indist)?;
    let boson = boson_distribution(&network, &inputs, &indist)?;
    let dist = distinguishable_distribution(&network, &inputs)?;
    let source = match args.source {
        SamplerKind::Boson => boson.clone(),
        SamplerKind::Distinguishable => dist.clone(),
        SamplerKind::Uniform => uniform_distribution(network.output_modes(), inputs.len())?,
    };
    let stream = sample_events(&source, args.events, args.seed)?;
    let vs_uniform = validate_against_uniform(&network, &inputs, &stream.events)?;
    let vs_dist = validate_against_distinguishable(&boson, &dist, &stream.events)?;

    let summary = ValidationSummary {
        source: args.source,
        events: args.events,
        seed: args.seed,
        inputs: inputs.iter().map(|i| i + 1).collect(),
        uniform_threshold: crate::validation::uniform_threshold(inputs.len(), network.output_modes())?,
        against_uniform: TestSummary {
            final_value: vs_uniform.final_value,
            verdict: vs_uniform.verdict,
        },
        against_distinguishable: TestSummary {
            final_value: vs_dist.final_value,
            verdict: vs_dist.verdict,
        },
    };
    let render = |t| match args.format {
        Format::Csv => io::trace_csv(t),
        Format::Json => io::to_json_string(t),
    };
    let e = ext(args.format);
    io::write_files_atomic(&[
        (args.out.join(format!("trace_uniform.{e}")), render(&vs_uniform)),
        (args.out.join(format!("trace_distinguishable.{e}")), render(&vs_dist)),
        (args.out.join("summary.json"), io::to_json_string(&summary)),
    ])
}

pub fn cmd_fit(args: &FitArgs) -> Result<()> {
    let Setup { network, inputs } = load_network(&args.network)?;
    let pair: [usize; 2] = inputs
        .as_slice()
        .try_into()
        .map_err(|_| Error::domain(format!("fit needs exactly 2 inputs, got {}", inputs.len())))?;
    let configs = enumerate_no_collision(network.output_modes(), 2)?;
    let data = io::read_weights_csv(&args.data, &configs)?;
    let fit = fit_indistinguishability_with(&data, &network, pair, args.normalization)?;
    io::write_files_atomic(&fit_files(&fit, &args.out, args.format))
}

fn fit_files(fit: &FitResult, out: &Path, format: Format) -> Vec<(PathBuf, String)> {
    let mut files = vec![(out.join("fit.json"), io::to_json_string(fit))];
    if format == Format::Csv {
        let mut scan = String::from("indist,distance\n");
        for p in &fit.scan {
            scan.push_str(&format!("{},{}\n", p.indist, p.distance));
        }
        files.push((out.join("fit_scan.csv"), scan));
    }
    files
}

#[derive(Debug, Serialize)]
struct RatesFile<'a> {
    params: SourceParams,
    routing: Routing,
    rows: &'a [crate::source::RateRow],
}

pub fn cmd_rates(args: &RatesArgs) -> Result<()> {
    let mut params = match &args.params {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            serde_json::from_str::<SourceParams>(&text)
                .map_err(|e| Error::format(path, e.to_string()))?
        }
        None => SourceParams::default(),
    };
    params.validate()?;
    if let Some(cal) = &args.calibrate {
        let [n, pump_p0, detected] = cal[..] else {
            return Err(Error::domain("--calibrate takes n,pump_p0,detected_hz"));
        };
        if n < 1.0 || n.fract() != 0.0 {
            return Err(Error::domain(format!("calibration photon number {n} is not a positive integer")));
        }
        params.extra_loss =
            calibrate_extra_loss(&params, n as u32, pump_p0 * params.p0_uw, detected, args.routing)?;
    }
    let rows = rate_table(&params, &args.photon_numbers, &args.pumps, args.routing)?;
    let (name, body) = match args.format {
        Format::Csv => ("rates.csv", io::rate_table_csv(&rows)),
        Format::Json => (
            "rates.json",
            io::to_json_string(&RatesFile {
                params,
                routing: args.routing,
                rows: &rows,
            }),
        ),
    };
    io::write_files_atomic(&[(args.out.join(name), body)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
        let cli = Cli::try_parse_from([
            "bosonsim", "distribution", "--inputs", "1", "2", "3", "--indist", "0.52,0.54,0.643",
            "--out", "x",
        ])
        .unwrap();
        match cli.command {
            Command::Distribution(a) => {
                assert_eq!(a.network.inputs, vec![1, 2, 3]);
                assert_eq!(a.indist, vec![0.52, 0.54, 0.643]);
            }
            _ => panic!("wrong subcommand"),
        }
    }

    #[test]
    fn indist_arity() {
        assert!(indistinguishability_from_args(&[0, 1], &[0.5]).is_ok());
        assert!(indistinguishability_from_args(&[0, 1], &[0.5, 0.4, 0.3]).is_err());
        let s = indistinguishability_from_args(&[0, 1, 2], &[0.1, 0.2, 0.3]).unwrap();
        assert_eq!(s.get(0, 2).unwrap(), 0.3);
        assert_eq!(s.get(2, 1).unwrap(), 0.2);
    }
}
