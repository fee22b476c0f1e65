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

//! Brute-force verifiers.
//!
//! Nothing here touches canonical forms or the bipartition machinery; each
//! function recomputes its answer from definitions by enumeration. Only the
//! rank/membership helpers of [`crate::pauli`] are shared.

use std::collections::HashSet;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::bits::{rank, BitVector};
use crate::codes::StabilizerCode;
use crate::entropy::GroundStateSpec;
use crate::error::{check_dim, Error, Result};
use crate::pauli::{in_group, GeneratorList, PauliOperator, QubitSubset};

/// Largest group rank [`span_elements`] will enumerate.
pub const MAX_SPAN_RANK: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_subset_qubits: usize,
    pub max_statevector_qubits: usize,
    /// `None` means the number of qubits of the code under test.
    pub max_distance_weight: Option<usize>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_subset_qubits: 8,
            max_statevector_qubits: 12,
            max_distance_weight: None,
        }
    }
}

fn over_budget(what: &str, have: usize, limit: usize) -> Error {
    Error::Budget(format!("{what} {have} exceeds the oracle budget of {limit}"))
}

/// The Pauli operator on `qubits` whose letters are encoded by `pattern`:
/// low bits give the X part, high bits the Z part.
fn pauli_on(n: usize, qubits: &[usize], pattern: u64) -> PauliOperator {
    let m = qubits.len();
    let mut x = BitVector::zeros(n);
    let mut z = BitVector::zeros(n);
    for (i, &q) in qubits.iter().enumerate() {
        x.set(q, pattern >> i & 1 == 1);
        z.set(q, pattern >> (m + i) & 1 == 1);
    }
    PauliOperator::from_parts(x, z).expect("equal lengths")
}

fn commutes_with_all(op: &PauliOperator, gens: &GeneratorList) -> bool {
    gens.iter().all(|g| g.commutes(op).expect("same register"))
}

/// All Paulis supported on `qubits`, in lexicographic `(x|z)` order.
fn all_paulis(n: usize, qubits: &[usize]) -> impl Iterator<Item = PauliOperator> + '_ {
    (0..1u64 << (2 * qubits.len())).map(move |t| pauli_on(n, qubits, t))
}

/// `g_A`: the number of independent logical operators supported inside `a`,
/// counted modulo stabilizers supported inside `a`.
pub fn brute_localized_count(code: &StabilizerCode, a: &QubitSubset, budget: &OracleBudget) -> Result<usize> {
    check_dim(code.n(), a.n())?;
    if a.len() > budget.max_subset_qubits {
        return Err(over_budget("subset size", a.len(), budget.max_subset_qubits));
    }
    let mut central = Vec::new();
    let mut stabilizing = Vec::new();
    for p in all_paulis(code.n(), a.members()) {
        if commutes_with_all(&p, code.generators()) {
            let v = p.x_part().concat(p.z_part());
            if in_group(&p, code.basis())?.is_some() {
                stabilizing.push(v.clone());
            }
            central.push(v);
        }
    }
    Ok(rank(&central) - rank(&stabilizing))
}

/// Every element of `⟨ops⟩`, by walking all subsets of an independent basis.
pub fn span_elements(n: usize, ops: &[PauliOperator]) -> Result<HashSet<PauliOperator>> {
    let mut basis: Vec<PauliOperator> = Vec::new();
    let mut rows: Vec<BitVector> = Vec::new();
    for op in ops {
        check_dim(n, op.n())?;
        rows.push(op.x_part().concat(op.z_part()));
        if rank(&rows) > basis.len() {
            basis.push(op.clone());
        } else {
            rows.pop();
        }
    }
    if basis.len() > MAX_SPAN_RANK {
        return Err(over_budget("group rank", basis.len(), MAX_SPAN_RANK));
    }
    let mut out = HashSet::with_capacity(1 << basis.len());
    for mask in 0..1u64 << basis.len() {
        let mut p = PauliOperator::identity(n);
        for (i, b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                p = p.multiply(b)?;
            }
        }
        out.insert(p);
    }
    Ok(out)
}

/// `G(S_A)`: the rank of the stabilizer elements found among all Paulis
/// supported inside `a`.
pub fn brute_restricted_rank(code: &StabilizerCode, a: &QubitSubset, budget: &OracleBudget) -> Result<usize> {
    check_dim(code.n(), a.n())?;
    if a.len() > budget.max_subset_qubits {
        return Err(over_budget("subset size", a.len(), budget.max_subset_qubits));
    }
    let mut inside = Vec::new();
    for p in all_paulis(code.n(), a.members()) {
        if in_group(&p, code.basis())?.is_some() {
            inside.push(p.x_part().concat(p.z_part()));
        }
    }
    Ok(rank(&inside))
}

/// Applies the Hermitian Pauli `op` (with `Y = iXZ`) to a state vector.
/// Qubit `q` is bit `q` of the basis index.
fn apply_pauli(op: &PauliOperator, psi: &[Complex64]) -> Vec<Complex64> {
    let n = op.n();
    let mut xmask = 0usize;
    let mut zmask = 0usize;
    for q in 0..n {
        if op.x_part().get(q) {
            xmask |= 1 << q;
        }
        if op.z_part().get(q) {
            zmask |= 1 << q;
        }
    }
    let phase = match (xmask & zmask).count_ones() % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let mut out = vec![Complex64::new(0.0, 0.0); psi.len()];
    for (j, amp) in psi.iter().enumerate() {
        let sign = if (j & zmask).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
        out[j ^ xmask] = amp * phase * sign;
    }
    out
}

fn norm(psi: &[Complex64]) -> f64 {
    psi.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// The unique state fixed by the stabilizers and fixed logicals of `spec`,
/// as a normalized dense amplitude vector.
pub fn ground_state_vector(spec: &GroundStateSpec, budget: &OracleBudget) -> Result<Vec<Complex64>> {
    let n = spec.code().n();
    if n > budget.max_statevector_qubits {
        return Err(over_budget("qubit count", n, budget.max_statevector_qubits));
    }
    let conditions: Vec<&PauliOperator> = spec.code().basis().iter().chain(spec.fixed_logicals()).collect();
    let dim = 1usize << n;
    for start in 0..dim {
        let mut psi = vec![Complex64::new(0.0, 0.0); dim];
        psi[start] = Complex64::new(1.0, 0.0);
        for op in &conditions {
            let moved = apply_pauli(op, &psi);
            for (a, b) in psi.iter_mut().zip(moved) {
                *a = (*a + b) * 0.5;
            }
        }
        let r = norm(&psi);
        if r > 1e-6 {
            psi.iter_mut().for_each(|a| *a /= r);
            return Ok(psi);
        }
    }
    Err(Error::Specification("conditions fix no state".into()))
}

/// Von Neumann entropy in bits of the reduced state on `a`.
pub fn statevector_entropy(spec: &GroundStateSpec, a: &QubitSubset, budget: &OracleBudget) -> Result<f64> {
    check_dim(spec.code().n(), a.n())?;
    let psi = ground_state_vector(spec, budget)?;
    let b = a.complement();
    let (rows_q, cols_q) = (a.members(), b.members());
    let index = |qs: &[usize], j: usize| {
        qs.iter()
            .enumerate()
            .fold(0usize, |acc, (i, &q)| acc | (j >> q & 1) << i)
    };
    let mut m = DMatrix::<Complex64>::zeros(1 << rows_q.len(), 1 << cols_q.len());
    for (j, amp) in psi.iter().enumerate() {
        m[(index(rows_q, j), index(cols_q, j))] = *amp;
    }
    let sv = m.singular_values();
    Ok(sv
        .iter()
        .map(|s| s * s)
        .filter(|&l| l > 1e-14)
        .map(|l| -l * l.log2())
        .sum())
}

/// Code distance by weight-ordered search over all Paulis.
pub fn brute_distance(code: &StabilizerCode, budget: &OracleBudget) -> Result<usize> {
    if code.k() == 0 {
        return Err(Error::UndefinedDistance);
    }
    let n = code.n();
    let limit = budget.max_distance_weight.unwrap_or(n).min(n);
    for w in 1..=limit {
        if let Some(found) = search_weight(code, w)? {
            debug_assert_eq!(found.weight(), w);
            return Ok(w);
        }
    }
    Err(Error::Budget(format!("no logical operator of weight at most {limit}")))
}

/// First logical operator of weight exactly `w`: supports in lexicographic
/// order, and over each support the `3^w` non-identity letter choices.
fn search_weight(code: &StabilizerCode, w: usize) -> Result<Option<PauliOperator>> {
    let n = code.n();
    let mut support: Vec<usize> = (0..w).collect();
    loop {
        let mut letters = vec![0u8; w];
        loop {
            let mut x = BitVector::zeros(n);
            let mut z = BitVector::zeros(n);
            for (&q, &l) in support.iter().zip(&letters) {
                x.set(q, l != 2);
                z.set(q, l != 0);
            }
            let p = PauliOperator::from_parts(x, z)?;
            if commutes_with_all(&p, code.generators()) && in_group(&p, code.basis())?.is_none() {
                return Ok(Some(p));
            }
            // next letter assignment, base 3
            let mut i = 0;
            while i < w && letters[i] == 2 {
                letters[i] = 0;
                i += 1;
            }
            if i == w {
                break;
            }
            letters[i] += 1;
        }
        // next w-combination of 0..n
        let mut i = w;
        while i > 0 && support[i - 1] == n - w + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return Ok(None);
        }
        support[i - 1] += 1;
        for j in i..w {
            support[j] = support[j - 1] + 1;
        }
    }
}

/// Exhaustive search for a pair of anti-commuting logical operators, both
/// inequivalent to anything supported in `a` or in its complement and both
/// commuting with every such operator. Returns the first pair found.
pub fn brute_hidden_logical_pair(
    code: &StabilizerCode,
    a: &QubitSubset,
    budget: &OracleBudget,
) -> Result<Option<(PauliOperator, PauliOperator)>> {
    check_dim(code.n(), a.n())?;
    let n = code.n();
    if n > budget.max_subset_qubits {
        return Err(over_budget("qubit count", n, budget.max_subset_qubits));
    }
    let everything: Vec<usize> = (0..n).collect();
    let logicals: Vec<PauliOperator> = all_paulis(n, &everything)
        .filter(|p| commutes_with_all(p, code.generators()) && in_group(p, code.basis()).unwrap().is_none())
        .collect();
    let b = a.complement();
    let local_a: Vec<PauliOperator> = logicals.iter().filter(|p| p.supported_in(a)).cloned().collect();
    let local_b: Vec<PauliOperator> = logicals.iter().filter(|p| p.supported_in(&b)).cloned().collect();
    let with_s = |local: &[PauliOperator]| {
        GeneratorList::new(n, code.basis().iter().chain(local).cloned()).expect("same register")
    };
    let (group_a, group_b) = (with_s(&local_a), with_s(&local_b));

    let mut candidates = Vec::new();
    for p in &logicals {
        if in_group(p, &group_a)?.is_some() || in_group(p, &group_b)?.is_some() {
            continue;
        }
        if local_a.iter().chain(&local_b).all(|l| l.commutes(p).unwrap()) {
            candidates.push(p.clone());
        }
    }
    for (i, p) in candidates.iter().enumerate() {
        for q in &candidates[i + 1..] {
            if !p.commutes(q)? {
                return Ok(Some((p.clone(), q.clone())));
            }
        }
    }
    Ok(None)
}
