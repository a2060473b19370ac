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

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use boson_sampler::interference::IndistinguishabilitySet;
use boson_sampler::io::reference_network;
use boson_sampler::sampler::{boson_distribution, enumerate_no_collision, sample_events};
use boson_sampler::Error;
use serde_json::Value;

fn bosonsim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bosonsim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) {
    let out = bosonsim(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

fn dir_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn three_photon_distribution_csv() {
    let tmp = tempfile::tempdir().unwrap();
    ok(&["distribution", "--inputs", "1,2,3", "--indist", "0.520,0.540,0.643", "--out", dir_str(tmp.path())]);
    let csv = fs::read_to_string(tmp.path().join("boson.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "config,raw_weight,probability");
    assert_eq!(lines.len(), 21);
    assert!(lines[1].starts_with("1+2+3,0.0183797313735216"));
    assert!(lines[20].starts_with("4+5+6,"));
    let mut total = 0.0;
    for line in &lines[1..] {
        total += line.split(',').nth(2).unwrap().parse::<f64>().unwrap();
    }
    assert!((total - 1.0).abs() < 1e-12);
    for name in ["distinguishable.csv", "uniform.csv"] {
        assert_eq!(fs::read_to_string(tmp.path().join(name)).unwrap().lines().count(), 21);
    }
}

#[test]
fn full_overlap_pair_gives_permanent_squared() {
    let tmp = tempfile::tempdir().unwrap();
    ok(&["distribution", "--inputs", "1,2", "--indist", "1", "--out", dir_str(tmp.path()), "--format", "json"]);
    let v = read_json(&tmp.path().join("boson.json"));
    assert_eq!(v["kind"], "boson");
    let rows = v["configs"].as_array().unwrap();
    assert_eq!(rows.len(), 15);
    let l = reference_network();
    for (row, k) in rows.iter().zip(enumerate_no_collision(6, 2).unwrap()) {
        assert_eq!(row["config"], k.label());
        let t = l.submatrix(&[0, 1], &k).unwrap();
        let per = boson_sampler::kernels::permanent(&t).unwrap().norm_sqr();
        assert!((row["raw_weight"].as_f64().unwrap() - per).abs() < 1e-15);
    }
}

#[test]
fn distribution_with_events_writes_counts() {
    let tmp = tempfile::tempdir().unwrap();
    let out = dir_str(tmp.path());
    ok(&["distribution", "--inputs", "1,2,3", "--indist", "0.6", "--events", "1000", "--seed", "9", "--out", out]);
    let csv = fs::read_to_string(tmp.path().join("boson_counts.csv")).unwrap();
    let total: u64 = csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 1000);
}

#[test]
fn missing_network_fails_without_output() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("out");
    let res = bosonsim(&[
        "distribution", "--network", "/nonexistent/net.json", "--inputs", "1,2", "--indist", "0.5",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(res.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&res.stderr).contains("bosonsim:"));
    assert!(!out.exists());
}

#[test]
fn bad_arguments_exit_with_two() {
    let tmp = tempfile::tempdir().unwrap();
    let out = dir_str(tmp.path());
    for args in [
        vec!["distribution", "--inputs", "1,2", "--indist", "1.5", "--out", out],
        vec!["distribution", "--inputs", "1,4", "--indist", "0.5", "--out", out],
        vec!["distribution", "--inputs", "1,2", "--indist", "0.5,0.5", "--out", out],
        vec!["distribution", "--inputs", "1", "--indist", "0.5", "--out", out],
    ] {
        assert_eq!(bosonsim(&args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(fs::read_dir(tmp.path()).unwrap().count(), 0);
}

#[test]
fn consistency_errors_map_to_three() {
    assert_eq!(Error::NumericalConsistency("x".into()).exit_code(), 3);
    assert_eq!(Error::Domain("x".into()).exit_code(), 2);
}

#[test]
fn validate_boson_and_uniform_sources() {
    let tmp = tempfile::tempdir().unwrap();
    let b = tmp.path().join("b");
    ok(&["validate", "--inputs", "1,2,3", "--indist", "0.520,0.540,0.643", "--seed", "1", "--out", b.to_str().unwrap()]);
    let s = read_json(&b.join("summary.json"));
    assert_eq!(s["events"], 6725);
    assert_eq!(s["source"], "boson");
    assert_eq!(s["against_uniform"]["verdict"], "validated");
    let trace = fs::read_to_string(b.join("trace_uniform.csv")).unwrap();
    assert_eq!(trace.lines().count(), 6726);
    assert_eq!(trace.lines().next().unwrap(), "event,counter");
    let last = trace.lines().last().unwrap();
    assert_eq!(last, format!("6725,{}", s["against_uniform"]["final"]));

    let u = tmp.path().join("u");
    ok(&["validate", "--inputs", "1,2,3", "--indist", "0.520,0.540,0.643", "--source", "uniform", "--seed", "1", "--out", u.to_str().unwrap()]);
    let s = read_json(&u.join("summary.json"));
    assert_eq!(s["against_uniform"]["verdict"], "rejected");
    assert_eq!(s["against_distinguishable"]["verdict"], "rejected");
}

#[test]
fn validate_zero_events_is_tie() {
    let tmp = tempfile::tempdir().unwrap();
    ok(&["validate", "--inputs", "1,2,3", "--indist", "0.7", "--events", "0", "--seed", "1", "--out", dir_str(tmp.path()), "--format", "json"]);
    let s = read_json(&tmp.path().join("summary.json"));
    assert_eq!(s["against_uniform"]["final"], 0);
    assert_eq!(s["against_uniform"]["verdict"], "tie");
    let t = read_json(&tmp.path().join("trace_uniform.json"));
    assert_eq!(t["steps"].as_array().unwrap().len(), 0);
}

#[test]
fn repeat_runs_are_byte_identical() {
    let tmp = tempfile::tempdir().unwrap();
    let a = tmp.path().join("a");
    let b = tmp.path().join("b");
    for d in [&a, &b] {
        ok(&["validate", "--inputs", "1,2,3", "--indist", "0.520,0.540,0.643", "--seed", "42", "--events", "2000", "--out", d.to_str().unwrap()]);
    }
    for name in ["trace_uniform.csv", "trace_distinguishable.csv", "summary.json"] {
        assert_eq!(fs::read(a.join(name)).unwrap(), fs::read(b.join(name)).unwrap(), "{name}");
    }
}

#[test]
fn fit_recovers_synthetic_overlap() {
    let tmp = tempfile::tempdir().unwrap();
    let l = reference_network();
    let set = IndistinguishabilitySet::uniform(&[1, 2], 0.540).unwrap();
    let d = boson_distribution(&l, &[1, 2], &set).unwrap();
    let data = tmp.path().join("exact.csv");
    fs::write(&data, boson_sampler::io::distribution_csv(&d).unwrap()).unwrap();
    let out = tmp.path().join("fit");
    ok(&["fit", "--inputs", "2,3", "--data", data.to_str().unwrap(), "--out", out.to_str().unwrap(), "--format", "csv"]);
    let fit = read_json(&out.join("fit.json"));
    assert!((fit["i_star"].as_f64().unwrap() - 0.540).abs() < 1e-4);
    assert_eq!(fit["normalization"], "non-unity");
    assert!(fs::read_to_string(out.join("fit_scan.csv")).unwrap().starts_with("indist,distance\n"));

    let stream = sample_events(&d, 40_000, 7).unwrap();
    let counts = stream.histogram(&d).unwrap();
    let noisy = tmp.path().join("counts.csv");
    fs::write(&noisy, boson_sampler::io::counts_csv(&d.configs, &counts)).unwrap();
    let out = tmp.path().join("fit_noisy");
    ok(&["fit", "--inputs", "2,3", "--data", noisy.to_str().unwrap(), "--normalization", "unity", "--out", out.to_str().unwrap()]);
    let fit = read_json(&out.join("fit.json"));
    assert!((fit["i_star"].as_f64().unwrap() - 0.540).abs() < 0.05);
    assert_eq!(fit["normalization"], "unity");
}

#[test]
fn fit_rejects_malformed_data() {
    let tmp = tempfile::tempdir().unwrap();
    let data = tmp.path().join("bad.csv");
    fs::write(&data, "config,count\n1+2,10\n1+3,x\n").unwrap();
    let out = tmp.path().join("fit");
    let res = bosonsim(&["fit", "--inputs", "1,2", "--data", data.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(2));
    assert!(!out.exists());
    let res = bosonsim(&["fit", "--inputs", "1,2,3", "--data", data.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn rates_table_and_calibration() {
    let tmp = tempfile::tempdir().unwrap();
    ok(&["rates", "--out", dir_str(tmp.path())]);
    let csv = fs::read_to_string(tmp.path().join("rates.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,pump_p0,pump_uw,detected_rate_hz,detection_efficiency,generated_rate_hz");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("2,3,450,"));

    let cal = tmp.path().join("cal");
    ok(&["rates", "--calibrate", "2,3,15000", "--format", "json", "--out", cal.to_str().unwrap()]);
    let v = read_json(&cal.join("rates.json"));
    let loss = v["params"]["extra_loss"].as_f64().unwrap();
    assert!((loss - 0.686).abs() < 5e-3);
    let rows = v["rows"].as_array().unwrap();
    assert!((rows[0]["detected_hz"].as_f64().unwrap() - 15e3).abs() < 1e-6);

    let bad = tmp.path().join("bad");
    let res = bosonsim(&["rates", "--calibrate", "2,3,1e12", "--out", bad.to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(2));
    assert!(!bad.exists());
}
