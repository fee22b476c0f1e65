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

//! Serializable reports. Field order here is the JSON key order.

use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::{secret_sharing, ClassificationReport, OperatorPair};
use crate::codes::StabilizerCode;
use crate::entropy::EntropyBounds;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

impl Check {
    pub fn new(name: &str, passed: bool) -> Self {
        Check {
            name: name.to_string(),
            passed,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CountsJson {
    pub k: usize,
    #[serde(rename = "mA")]
    pub m_a: usize,
    #[serde(rename = "mB")]
    pub m_b: usize,
    #[serde(rename = "mAB")]
    pub m_ab: usize,
    #[serde(rename = "mPhi")]
    pub m_phi: usize,
    #[serde(rename = "gA")]
    pub g_a: usize,
    #[serde(rename = "gB")]
    pub g_b: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionJson {
    #[serde(rename = "gSA")]
    pub g_sa: usize,
    #[serde(rename = "gSB")]
    pub g_sb: usize,
    #[serde(rename = "gSAB")]
    pub g_sab: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorsJson {
    pub mab_pairs: Vec<[String; 2]>,
    pub r_pairs: Vec<[String; 2]>,
    pub deltas: Vec<String>,
    pub alpha_pairs: Vec<[String; 2]>,
    pub beta_pairs: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SecretSharingJson {
    pub classical_bits: usize,
    pub quantum_sharable: bool,
    pub classical_sharing_possible: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyJson {
    pub qubits: usize,
    pub region: Vec<usize>,
    pub counts: CountsJson,
    pub decomposition: DecompositionJson,
    pub operators: OperatorsJson,
    pub qubit_types: Vec<&'static str>,
    pub checks: Vec<Check>,
    pub secret_sharing: SecretSharingJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntropyJson {
    pub qubits: usize,
    pub region: Vec<usize>,
    pub e_min: f64,
    pub e_max: f64,
    pub g_sab: usize,
    pub m_phi: usize,
    /// Present only when fixed logicals were supplied.
    pub state_entropy: Option<f64>,
}

fn pairs(v: &[OperatorPair]) -> Vec<[String; 2]> {
    v.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect()
}

/// The count identities, evaluated on a finished report.
pub fn theorem_checks(code: &StabilizerCode, r: &ClassificationReport) -> Vec<Check> {
    let c = &r.counts;
    vec![
        Check::new("gA+gB=2k", c.g_a + c.g_b == 2 * c.k),
        Check::new("mAB=mPhi", c.m_ab == c.m_phi),
        Check::new("gA=mA+mAB", c.g_a == c.m_a + c.m_ab),
        Check::new("gB=mB+mAB", c.g_b == c.m_b + c.m_ab),
        Check::new("G(S)=G(SA)+G(SB)+G(SAB)", code.rank() == r.g_sa + r.g_sb + r.g_sab),
        Check::new("mA+mB+mAB+mPhi=2k", c.m_a + c.m_b + c.m_ab + c.m_phi == 2 * c.k),
    ]
}

pub fn classify_json(code: &StabilizerCode, r: &ClassificationReport, extra: Vec<Check>) -> ClassifyJson {
    let c = &r.counts;
    let s = secret_sharing(r);
    let mut checks = theorem_checks(code, r);
    checks.extend(extra);
    ClassifyJson {
        qubits: code.n(),
        region: r.subset.members().to_vec(),
        counts: CountsJson {
            k: c.k,
            m_a: c.m_a,
            m_b: c.m_b,
            m_ab: c.m_ab,
            m_phi: c.m_phi,
            g_a: c.g_a,
            g_b: c.g_b,
        },
        decomposition: DecompositionJson {
            g_sa: r.g_sa,
            g_sb: r.g_sb,
            g_sab: r.g_sab,
        },
        operators: OperatorsJson {
            mab_pairs: pairs(&r.mab_pairs),
            r_pairs: pairs(&r.r_pairs),
            deltas: r.deltas.iter().map(|d| d.to_string()).collect(),
            alpha_pairs: pairs(&r.alpha_pairs),
            beta_pairs: pairs(&r.beta_pairs),
        },
        qubit_types: r.qubit_types.iter().map(|t| t.as_str()).collect(),
        checks,
        secret_sharing: SecretSharingJson {
            classical_bits: s.classical_bits,
            quantum_sharable: s.quantum_sharable,
            classical_sharing_possible: s.classical_sharing_possible,
        },
    }
}

pub fn entropy_json(n: usize, region: &[usize], b: &EntropyBounds, state: Option<f64>) -> EntropyJson {
    EntropyJson {
        qubits: n,
        region: region.to_vec(),
        e_min: b.e_min.as_f64(),
        e_max: b.e_max.as_f64(),
        g_sab: b.g_sab,
        m_phi: b.m_phi,
        state_entropy: state,
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

pub fn classify_text(j: &ClassifyJson) -> String {
    let mut o = String::new();
    let c = &j.counts;
    let d = &j.decomposition;
    writeln!(o, "qubits: {}", j.qubits).unwrap();
    writeln!(o, "region: {}", join(&j.region)).unwrap();
    writeln!(
        o,
        "counts: k={} mA={} mB={} mAB={} mPhi={} gA={} gB={}",
        c.k, c.m_a, c.m_b, c.m_ab, c.m_phi, c.g_a, c.g_b
    )
    .unwrap();
    writeln!(o, "decomposition: G(SA)={} G(SB)={} G(SAB)={}", d.g_sa, d.g_sb, d.g_sab).unwrap();
    let ops = &j.operators;
    for (label, list) in [
        ("mab", &ops.mab_pairs),
        ("r", &ops.r_pairs),
        ("alpha", &ops.alpha_pairs),
        ("beta", &ops.beta_pairs),
    ] {
        for [a, b] in list {
            writeln!(o, "{label}: {a} {b}").unwrap();
        }
    }
    for delta in &ops.deltas {
        writeln!(o, "delta: {delta}").unwrap();
    }
    writeln!(o, "qubit_types: {}", j.qubit_types.join(",")).unwrap();
    for ch in &j.checks {
        writeln!(o, "check {}: {}", ch.name, if ch.passed { "pass" } else { "FAIL" }).unwrap();
    }
    let s = &j.secret_sharing;
    writeln!(
        o,
        "secret sharing: classical_bits={} quantum_sharable={} classical_sharing_possible={}",
        s.classical_bits, s.quantum_sharable, s.classical_sharing_possible
    )
    .unwrap();
    o
}

pub fn entropy_text(j: &EntropyJson) -> String {
    let mut o = format!(
        "bounds: {:.1} .. {:.1} (G(SAB)={} mPhi={})\n",
        j.e_min, j.e_max, j.g_sab, j.m_phi
    );
    if let Some(e) = j.state_entropy {
        writeln!(o, "state entropy: {e:.1}").unwrap();
    }
    o
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::codes::repetition_code;
    use crate::pauli::QubitSubset;

    #[test]
    fn json_key_order_is_fixed() {
        let code = repetition_code(3).unwrap();
        let r = classify(&code, &QubitSubset::new(3, [0]).unwrap()).unwrap();
        let s = serde_json::to_string(&classify_json(&code, &r, vec![])).unwrap();
        let keys = [
            "\"qubits\"",
            "\"region\"",
            "\"counts\"",
            "\"decomposition\"",
            "\"operators\"",
            "\"qubit_types\"",
            "\"checks\"",
            "\"secret_sharing\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(s.contains("\"counts\":{\"k\":1,\"mA\":0,\"mB\":0,\"mAB\":1,\"mPhi\":1,\"gA\":1,\"gB\":1}"));
    }

    #[test]
    fn text_report_lists_checks() {
        let code = repetition_code(3).unwrap();
        let r = classify(&code, &QubitSubset::new(3, [0]).unwrap()).unwrap();
        let t = classify_text(&classify_json(&code, &r, vec![]));
        assert!(t.contains("check gA+gB=2k: pass"));
        assert!(t.contains("delta: XXX"));
    }
}
