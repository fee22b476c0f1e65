// Copyright 2026 The stabilizer-locality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn stabloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stabloc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("stabloc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn gen_file(name: &str, args: &[&str]) -> String {
    let o = stabloc(args);
    assert!(o.status.success());
    write_temp(name, &stdout(&o)).to_str().unwrap().to_string()
}

#[test]
fn gen_toric_has_all_stabilizers() {
    let o = stabloc(&["gen", "toric", "--L", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("qubits 18\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("stab ")).count(), 18);
}

#[test]
fn gen_repetition() {
    let text = stdout(&stabloc(&["gen", "repetition", "--n", "3"]));
    assert!(text.ends_with("qubits 3\nstab ZZI\nstab IZZ\n"));
}

#[test]
fn gen_rejects_small_lattice() {
    let o = stabloc(&["gen", "toric", "--L", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn classify_repetition_json() {
    let file = gen_file("rep3.txt", &["gen", "repetition", "--n", "3"]);
    let o = stabloc(&["classify", &file, "--region", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let c = &v["counts"];
    assert_eq!(
        (
            c["mAB"].as_u64(),
            c["mPhi"].as_u64(),
            c["gA"].as_u64(),
            c["gB"].as_u64()
        ),
        (Some(1), Some(1), Some(1), Some(1))
    );
    assert_eq!(v["operators"]["deltas"][0], "XXX");
    assert_eq!(v["qubit_types"][0], "NONLOCAL");
    assert_eq!(v["secret_sharing"]["quantum_sharable"], false);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn classify_toric_union_region() {
    let o = stabloc(&[
        "classify",
        "--gen-toric",
        "3",
        "--region",
        "toric:R1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counts"]["gA"], 4);
    assert_eq!(v["counts"]["gB"], 0);
}

#[test]
fn named_regions_work_with_generated_files_only() {
    let toric = gen_file("toric3.txt", &["gen", "toric", "--L", "3"]);
    assert_eq!(
        stabloc(&["classify", &toric, "--region", "toric:Qx"]).status.code(),
        Some(0)
    );
    let rep = gen_file("rep4.txt", &["gen", "repetition", "--n", "4"]);
    assert_eq!(
        stabloc(&["classify", &rep, "--region", "toric:Qx"]).status.code(),
        Some(2)
    );
}

#[test]
fn classify_rejects_out_of_range_region() {
    let file = gen_file("rep3b.txt", &["gen", "repetition", "--n", "3"]);
    assert_eq!(stabloc(&["classify", &file, "--region", "3"]).status.code(), Some(2));
}

#[test]
fn region_file() {
    let file = gen_file("rep3c.txt", &["gen", "repetition", "--n", "3"]);
    let region = write_temp("region.txt", "# left end\n0\n1\n");
    let arg = format!("@{}", region.display());
    let o = stabloc(&["classify", &file, "--region", &arg, "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["region"], serde_json::json!([0, 1]));
}

#[test]
fn json_is_deterministic() {
    let args = [
        "classify",
        "--gen-toric",
        "3",
        "--region",
        "toric:Qx",
        "--format",
        "json",
    ];
    assert_eq!(stabloc(&args).stdout, stabloc(&args).stdout);
}

#[test]
fn entropy_examples() {
    let file = gen_file("rep3d.txt", &["gen", "repetition", "--n", "3"]);
    let text = stdout(&stabloc(&["entropy", &file, "--region", "0"]));
    assert!(text.starts_with("bounds: 0.0 .. 1.0"));
    let text = stdout(&stabloc(&["entropy", "--gen-toric", "6", "--region", "toric:rect:2x2"]));
    assert!(text.starts_with("bounds: 6.0 .. 6.0"));
    let o = stabloc(&["entropy", &file, "--region", "0", "--fixed", "XXX", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["state_entropy"], 1.0);
}

#[test]
fn entropy_rejects_bad_fixed_logicals() {
    let o = stabloc(&[
        "entropy",
        "--gen-toric",
        "2",
        "--region",
        "0",
        "--fixed",
        "XXXXXXXX",
        "--fixed",
        "ZZZZZZZZ",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_single_region_and_sweep() {
    let file = gen_file("rep3e.txt", &["gen", "repetition", "--n", "3"]);
    assert_eq!(stabloc(&["verify", &file, "--region", "0"]).status.code(), Some(0));
    let o = stabloc(&["verify", "--gen-toric", "3", "--sweep", "50", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("50/50 cases passed\n"));
    let again = stabloc(&["verify", "--gen-toric", "3", "--sweep", "50", "--seed", "7"]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn verify_on_non_commuting_input_is_an_input_error() {
    let bad = write_temp("bad.txt", "qubits 2\nstab XI\nstab ZI\n");
    let o = stabloc(&["verify", bad.to_str().unwrap(), "--region", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn distance_examples() {
    let five = gen_file("five.txt", &["gen", "five-qubit"]);
    assert_eq!(
        stdout(&stabloc(&["distance", &five])),
        "distance: 3\nsingleton: tight\n"
    );
    let rep = gen_file("rep3f.txt", &["gen", "repetition", "--n", "3"]);
    assert!(stdout(&stabloc(&["distance", &rep])).starts_with("distance: 1\n"));
    let bell = write_temp("bell.txt", "qubits 2\nstab XX\nstab ZZ\n");
    assert_eq!(stabloc(&["distance", bell.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn budget_overrides() {
    let five = gen_file("five2.txt", &["gen", "five-qubit"]);
    assert_eq!(
        stabloc(&["distance", &five, "--budget", "distance=2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        stabloc(&["distance", &five, "--budget", "bogus=2"]).status.code(),
        Some(2)
    );
    let o = stabloc(&[
        "verify",
        "--gen-toric",
        "2",
        "--region",
        "0,1",
        "--budget",
        "subset=1",
        "--budget",
        "statevector=4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("oracle gA"));
}
