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
use std::process::ExitCode;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use stabilizer_locality::classify::{classify as run_classify, singleton_check};
use stabilizer_locality::codefile::{format_code, parse_code, RegionSpec};
use stabilizer_locality::codes::{five_qubit_code, random_subset, repetition_code, toric_code, StabilizerCode};
use stabilizer_locality::entropy::{entropy_bounds, entropy_of_state, GroundStateSpec};
use stabilizer_locality::oracle::{brute_distance, brute_localized_count, statevector_entropy, OracleBudget};
use stabilizer_locality::pauli::{GeneratorList, PauliOperator, QubitSubset};
use stabilizer_locality::report::{classify_json, classify_text, entropy_json, entropy_text, Check};
use stabilizer_locality::{Error, Result};

use crate::Format;

/// What to print, and whether every check passed.
pub struct Outcome {
    pub stdout: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, passed: true }
    }
}

/// Reports `e` on standard error. Violated identities exit 1, everything
/// else is an input problem and exits 2.
pub fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        Error::Invariant(_) => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

pub fn parse_budget(items: &[String]) -> Result<OracleBudget> {
    let mut b = OracleBudget::default();
    for item in items {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("budget `{item}` is not KEY=VALUE")))?;
        let v: usize = value
            .parse()
            .map_err(|_| Error::Parse(format!("budget value `{value}` is not a number")))?;
        match key {
            "subset" => b.max_subset_qubits = v,
            "statevector" => b.max_statevector_qubits = v,
            "distance" => b.max_distance_weight = Some(v),
            _ => return Err(Error::Parse(format!("unknown budget key `{key}`"))),
        }
    }
    Ok(b)
}

pub fn load(file: &Option<PathBuf>, gen_toric: Option<usize>) -> Result<StabilizerCode> {
    match (file, gen_toric) {
        (_, Some(l)) => toric_code(l),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            parse_code(&text)
        }
        (None, None) => Err(Error::Parse("no code given".into())),
    }
}

pub enum GenRequest {
    Toric(usize),
    Repetition(usize),
    FiveQubit,
}

pub fn gen(req: GenRequest) -> Result<Outcome> {
    let code = match req {
        GenRequest::Toric(l) => toric_code(l)?,
        GenRequest::Repetition(n) => repetition_code(n)?,
        GenRequest::FiveQubit => five_qubit_code(),
    };
    Ok(Outcome::ok(format_code(&code)))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn report_failures(checks: &[Check]) -> bool {
    let mut passed = true;
    for c in checks.iter().filter(|c| !c.passed) {
        eprintln!("check failed: {}", c.name);
        passed = false;
    }
    passed
}

pub fn classify(code: &StabilizerCode, region: &str, fmt: Format) -> Result<Outcome> {
    let a = RegionSpec::parse(region)?.resolve(code)?;
    let r = run_classify(code, &a)?;
    let j = classify_json(code, &r, Vec::new());
    let passed = report_failures(&j.checks);
    let stdout = match fmt {
        Format::Json => json(&j),
        Format::Text => classify_text(&j),
    };
    Ok(Outcome { stdout, passed })
}

pub fn entropy(code: &StabilizerCode, region: &str, fixed: &[String], fmt: Format) -> Result<Outcome> {
    let a = RegionSpec::parse(region)?.resolve(code)?;
    let bounds = entropy_bounds(code, &a)?;
    let state = if fixed.is_empty() {
        None
    } else {
        let ops = fixed
            .iter()
            .map(|s| s.parse::<PauliOperator>())
            .collect::<Result<Vec<_>>>()?;
        let spec = GroundStateSpec::new(code.clone(), GeneratorList::new(code.n(), ops)?)?;
        Some(entropy_of_state(&spec, &a)?.as_f64())
    };
    let j = entropy_json(code.n(), a.members(), &bounds, state);
    Ok(Outcome::ok(match fmt {
        Format::Json => json(&j),
        Format::Text => entropy_text(&j),
    }))
}

/// Oracle cross-checks for one region, limited to what fits the budget.
fn oracle_checks(code: &StabilizerCode, a: &QubitSubset, budget: &OracleBudget) -> Result<Vec<Check>> {
    let r = run_classify(code, a)?;
    let b = a.complement();
    let mut checks = Vec::new();
    if a.len() <= budget.max_subset_qubits {
        checks.push(Check::new(
            "oracle gA",
            brute_localized_count(code, a, budget)? == r.counts.g_a,
        ));
    }
    if b.len() <= budget.max_subset_qubits {
        checks.push(Check::new(
            "oracle gB",
            brute_localized_count(code, &b, budget)? == r.counts.g_b,
        ));
    }
    if code.n() <= budget.max_statevector_qubits {
        let bounds = entropy_bounds(code, a)?;
        for (name, fixed, expected) in [
            ("statevector psi0", r.min_entropy_logicals(), bounds.e_min),
            ("statevector psi1", r.max_entropy_logicals(), bounds.e_max),
        ] {
            let spec = GroundStateSpec::new(code.clone(), fixed)?;
            let exact = entropy_of_state(&spec, a)?;
            let numeric = statevector_entropy(&spec, a, budget)?;
            checks.push(Check::new(
                name,
                exact == expected && (numeric - exact.as_f64()).abs() <= 1e-9,
            ));
        }
    }
    Ok(checks)
}

pub fn verify(code: &StabilizerCode, region: &str, budget: &OracleBudget, fmt: Format) -> Result<Outcome> {
    let a = RegionSpec::parse(region)?.resolve(code)?;
    let r = run_classify(code, &a)?;
    let j = classify_json(code, &r, oracle_checks(code, &a, budget)?);
    let passed = report_failures(&j.checks);
    let stdout = match fmt {
        Format::Json => json(&j),
        Format::Text => classify_text(&j),
    };
    Ok(Outcome { stdout, passed })
}

#[derive(Serialize)]
struct SweepCase {
    region: Vec<usize>,
    passed: bool,
    failed_checks: Vec<String>,
}

#[derive(Serialize)]
struct SweepJson {
    qubits: usize,
    seed: u64,
    cases: Vec<SweepCase>,
    passed: bool,
}

fn sweep_case(code: &StabilizerCode, a: QubitSubset, budget: &OracleBudget) -> Result<SweepCase> {
    let failed_checks = match run_classify(code, &a) {
        Ok(r) => {
            let mut checks = classify_json(code, &r, Vec::new()).checks;
            checks.extend(oracle_checks(code, &a, budget)?);
            checks.into_iter().filter(|c| !c.passed).map(|c| c.name).collect()
        }
        Err(Error::Invariant(why)) => vec![why],
        Err(e) => return Err(e),
    };
    Ok(SweepCase {
        region: a.members().to_vec(),
        passed: failed_checks.is_empty(),
        failed_checks,
    })
}

pub fn sweep(code: &StabilizerCode, count: usize, seed: u64, budget: &OracleBudget, fmt: Format) -> Result<Outcome> {
    let n = code.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let regions = (0..count)
        .map(|_| {
            let size = rng.random_range(0..=n);
            random_subset(n, size, &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;
    let cases = regions
        .into_par_iter()
        .map(|a| sweep_case(code, a, budget))
        .collect::<Result<Vec<_>>>()?;
    let passed = cases.iter().all(|c| c.passed);
    for (i, c) in cases.iter().enumerate().filter(|(_, c)| !c.passed) {
        eprintln!("check failed in case {i}: {}", c.failed_checks.join(", "));
    }
    let stdout = match fmt {
        Format::Json => json(&SweepJson {
            qubits: n,
            seed,
            cases,
            passed,
        }),
        Format::Text => {
            let mut s = String::new();
            for (i, c) in cases.iter().enumerate() {
                let region: Vec<String> = c.region.iter().map(|q| q.to_string()).collect();
                let verdict = if c.passed {
                    "pass".to_string()
                } else {
                    format!("FAIL {}", c.failed_checks.join(", "))
                };
                s.push_str(&format!("case {i} [{}]: {verdict}\n", region.join(",")));
            }
            let good = cases.iter().filter(|c| c.passed).count();
            s.push_str(&format!("{good}/{} cases passed\n", cases.len()));
            s
        }
    };
    Ok(Outcome { stdout, passed })
}

#[derive(Serialize)]
struct DistanceJson {
    qubits: usize,
    k: usize,
    distance: usize,
    singleton: &'static str,
}

pub fn distance(code: &StabilizerCode, budget: &OracleBudget, fmt: Format) -> Result<Outcome> {
    let d = brute_distance(code, budget)?;
    let holds = singleton_check(code, d)?;
    let verdict = match (holds, code.k() + 2 * (d - 1) == code.n()) {
        (true, true) => "tight",
        (true, false) => "holds",
        (false, _) => "violated",
    };
    if !holds {
        eprintln!("check failed: singleton bound");
    }
    let stdout = match fmt {
        Format::Json => json(&DistanceJson {
            qubits: code.n(),
            k: code.k(),
            distance: d,
            singleton: verdict,
        }),
        Format::Text => format!("distance: {d}\nsingleton: {verdict}\n"),
    };
    Ok(Outcome { stdout, passed: holds })
}
