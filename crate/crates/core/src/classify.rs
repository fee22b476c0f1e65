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

//! Classification of logical operators by where they can be supported.
//!
//! For a bipartition `(A, B)` every logical operator falls in exactly one of
//!
//! * `M_A`: definable inside `A` but not inside `B`,
//! * `M_B`: definable inside `B` but not inside `A`,
//! * `M_AB`: definable inside either side,
//! * `M_φ`: definable inside neither.
//!
//! The representatives are derived from canonical forms:
//!
//! * `ℓ_i` are the singles of `O^A` beyond `S_A`, with counterparts `ℓ_i′`
//!   obtained by restricting the same stabilizer product to `B`;
//! * `(α_i, α_i′)` are the anti-commuting pairs of the centralizer `C_A`
//!   of `O^A` inside `A`, and `(β_i, β_i′)` likewise inside `B`;
//! * `r_i` inside `A` anti-commutes with `ℓ_i` only, `r_i′` inside `B`
//!   with `ℓ_i′` only, and `δ_i = r_i r_i′` is non-local.

use crate::bipartition::{counterpart, decompose, overlap_group, restricted_tracked};
use crate::bits::BitVector;
use crate::canonical::{canonicalize_tracked, TrackedOperator};
use crate::codes::StabilizerCode;
use crate::error::{check_dim, Error, Result};
use crate::pauli::{centralizer_within, GeneratorList, PauliOperator, QubitSubset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LogicalClass {
    MA,
    MB,
    MAB,
    MPhi,
}

/// How a logical qubit's defining operator pair is distributed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QubitType {
    /// Both operators of the pair live inside `A`.
    LocalA,
    /// Both operators of the pair live inside `B`.
    LocalB,
    /// One operator in `M_AB`, its partner in `M_φ`.
    Nonlocal,
}

impl QubitType {
    pub fn as_str(&self) -> &'static str {
        match self {
            QubitType::LocalA => "LOCAL_A",
            QubitType::LocalB => "LOCAL_B",
            QubitType::Nonlocal => "NONLOCAL",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Counts {
    pub k: usize,
    pub m_a: usize,
    pub m_b: usize,
    pub m_ab: usize,
    pub m_phi: usize,
    pub g_a: usize,
    pub g_b: usize,
}

pub type OperatorPair = (PauliOperator, PauliOperator);

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub subset: QubitSubset,
    pub counts: Counts,
    pub g_sa: usize,
    pub g_sb: usize,
    pub g_sab: usize,
    /// `(ℓ_i, ℓ_i′)`: equivalent representatives inside `A` and inside `B`.
    pub mab_pairs: Vec<OperatorPair>,
    /// `(r_i, r_i′)`: the partners of `ℓ_i` inside `A` and of `ℓ_i′` inside `B`.
    pub r_pairs: Vec<OperatorPair>,
    /// `δ_i = r_i r_i′`.
    pub deltas: Vec<PauliOperator>,
    pub alpha_pairs: Vec<OperatorPair>,
    pub beta_pairs: Vec<OperatorPair>,
    pub qubit_types: Vec<QubitType>,
}

impl ClassificationReport {
    /// `k` commuting logical operators fixing the ground state of least
    /// entanglement: every `ℓ_i`, plus one operator of each `α` and `β` pair.
    pub fn min_entropy_logicals(&self) -> GeneratorList {
        self.fixed_logicals(self.mab_pairs.iter().map(|(l, _)| l.clone()))
    }

    /// As [`Self::min_entropy_logicals`] with every `ℓ_i` replaced by `δ_i`.
    pub fn max_entropy_logicals(&self) -> GeneratorList {
        self.fixed_logicals(self.deltas.iter().cloned())
    }

    fn fixed_logicals<I: Iterator<Item = PauliOperator>>(&self, shared: I) -> GeneratorList {
        let local = self.alpha_pairs.iter().chain(&self.beta_pairs).map(|(a, _)| a.clone());
        GeneratorList::new(self.subset.n(), shared.chain(local)).expect("same register")
    }

    /// Every logical representative in the report, tagged with its class.
    pub fn logical_representatives(&self) -> Vec<(LogicalClass, &PauliOperator)> {
        let mut out = Vec::new();
        for (l, lp) in &self.mab_pairs {
            out.push((LogicalClass::MAB, l));
            out.push((LogicalClass::MAB, lp));
        }
        for d in &self.deltas {
            out.push((LogicalClass::MPhi, d));
        }
        for (a, ap) in &self.alpha_pairs {
            out.push((LogicalClass::MA, a));
            out.push((LogicalClass::MA, ap));
        }
        for (b, bp) in &self.beta_pairs {
            out.push((LogicalClass::MB, b));
            out.push((LogicalClass::MB, bp));
        }
        out
    }
}

/// `ℓ_i` (tracked) together with `ℓ_i′`.
fn shared_logicals(code: &StabilizerCode, a: &QubitSubset) -> Result<(Vec<TrackedOperator>, Vec<PauliOperator>)> {
    let oa = overlap_group(code, a)?;
    let b = a.complement();
    let ells = oa.shared_logicals().to_vec();
    let primes = ells
        .iter()
        .map(|t| counterpart(code, t, &b))
        .collect::<Result<Vec<_>>>()?;
    Ok((ells, primes))
}

/// Independent `ℓ_1 … ℓ_d` inside `a`, each with its equivalent `ℓ_i′`
/// inside the complement.
pub fn mab_operators(code: &StabilizerCode, a: &QubitSubset) -> Result<Vec<OperatorPair>> {
    check_dim(code.n(), a.n())?;
    let (ells, primes) = shared_logicals(code, a)?;
    Ok(ells.into_iter().map(|t| t.op).zip(primes).collect())
}

fn tracked_seeds<'a, I>(n: usize, ops: I) -> (usize, Vec<TrackedOperator>)
where
    I: IntoIterator<Item = &'a PauliOperator>,
{
    let ops: Vec<PauliOperator> = ops.into_iter().cloned().collect();
    let len = ops.len();
    let seeds = ops
        .into_iter()
        .enumerate()
        .map(|(i, op)| TrackedOperator::source(op, i, len))
        .collect();
    debug_assert!(n > 0);
    (len, seeds)
}

/// Anti-commuting pairs of `C_side`, the operators inside `side` commuting
/// with every stabilizer. The canonicalization is seeded with `S_side` and
/// the shared logicals, which are central and therefore stay single.
///
/// Returns the pairs and `G(C_side)`.
fn centralizer_pairs(
    code: &StabilizerCode,
    side: &QubitSubset,
    restricted: &[PauliOperator],
    shared: &[PauliOperator],
) -> Result<(Vec<OperatorPair>, usize)> {
    let centralizer = centralizer_within(side, code.basis().as_slice())?;
    let dim = centralizer.len();
    let (len, seeds) = tracked_seeds(code.n(), restricted.iter().chain(shared).chain(&centralizer));
    let form = canonicalize_tracked(code.n(), len, seeds)?;
    if form.rank() != dim {
        return Err(Error::Invariant(format!(
            "centralizer seeds changed its rank: {} != {dim}",
            form.rank()
        )));
    }
    if form.single_count() != restricted.len() + shared.len() {
        return Err(Error::Invariant(
            "centralizer centre differs from S_side plus shared logicals".into(),
        ));
    }
    let pairs = form
        .pairs()
        .iter()
        .map(|p| (p.xbar.op.clone(), p.zbar.op.clone()))
        .collect();
    Ok((pairs, dim))
}

/// `(α_i, α_i′)` pairs: logical operators inside `a` with no equivalent
/// inside the complement.
pub fn local_pairs(code: &StabilizerCode, a: &QubitSubset) -> Result<Vec<OperatorPair>> {
    check_dim(code.n(), a.n())?;
    let restricted: Vec<PauliOperator> = restricted_tracked(code, a)?.into_iter().map(|t| t.op).collect();
    let (ells, _) = shared_logicals(code, a)?;
    let ells: Vec<PauliOperator> = ells.into_iter().map(|t| t.op).collect();
    Ok(centralizer_pairs(code, a, &restricted, &ells)?.0)
}

/// For each `ℓ_i`, an operator `r_i` inside `side` that anti-commutes with
/// `ℓ_i` and commutes with every other `ℓ_j`, every canonical pair of the
/// overlap group, every local pair and every restricted stabilizer.
///
/// `C(S_side)` is canonicalized seeded with `[pairs, local pairs, S_side,
/// ℓ_1..ℓ_d]`. The `ℓ`s end up as the first members of `d` pairs, but
/// possibly recombined as `ℓ̃_k = Σ_m T_km ℓ_m` by the single-repair step.
/// With partners `r̃_k` dual to `ℓ̃_k`, `r_i = Σ_k T_ki r̃_k` is dual to `ℓ_i`.
fn boundary_partners(
    side: &QubitSubset,
    pairs: &[OperatorPair],
    local: &[OperatorPair],
    restricted: &[PauliOperator],
    shared: &[PauliOperator],
) -> Result<Vec<PauliOperator>> {
    let d = shared.len();
    if d == 0 {
        return Ok(Vec::new());
    }
    let n = side.n();
    let centralizer = centralizer_within(side, restricted)?;
    let fixed: Vec<&PauliOperator> = pairs
        .iter()
        .chain(local)
        .flat_map(|(x, z)| [x, z])
        .chain(restricted)
        .collect();
    let shared_start = fixed.len();
    let (len, seeds) = tracked_seeds(n, fixed.iter().copied().chain(shared).chain(&centralizer));
    let form = canonicalize_tracked(n, len, seeds)?;

    let shared_range = shared_start..shared_start + d;
    let mut transform: Vec<BitVector> = Vec::with_capacity(d);
    let mut duals: Vec<&PauliOperator> = Vec::with_capacity(d);
    for pair in form.pairs() {
        let idx = pair.xbar.provenance_indices();
        if !idx.is_empty() && idx.iter().all(|i| shared_range.contains(i)) {
            transform.push(BitVector::from_indices(d, idx.iter().map(|i| i - shared_start)));
            duals.push(&pair.zbar.op);
        }
    }
    if transform.len() != d {
        return Err(Error::Invariant(format!(
            "found {} partners for {d} shared logical operators",
            transform.len()
        )));
    }

    let partners: Vec<PauliOperator> = (0..d)
        .map(|i| {
            let mut r = PauliOperator::identity(n);
            for (row, dual) in transform.iter().zip(&duals) {
                if row.get(i) {
                    r.mul_assign(dual);
                }
            }
            r
        })
        .collect();

    for (i, r) in partners.iter().enumerate() {
        if !r.supported_in(side) {
            return Err(Error::Invariant("boundary partner leaves its side".into()));
        }
        for (j, l) in shared.iter().enumerate() {
            if r.anticommutes_with(l) != (i == j) {
                return Err(Error::Invariant(format!(
                    "partner {i} has wrong commutation with shared logical {j}"
                )));
            }
        }
        if fixed.iter().any(|f| r.anticommutes_with(f)) {
            return Err(Error::Invariant(format!(
                "partner {i} anti-commutes with a fixed generator"
            )));
        }
    }
    Ok(partners)
}

/// The non-local logical operators `δ_i = r_i r_i′`.
pub fn nonlocal_operators(code: &StabilizerCode, a: &QubitSubset) -> Result<Vec<PauliOperator>> {
    Ok(classify(code, a)?.deltas)
}

pub fn classify(code: &StabilizerCode, a: &QubitSubset) -> Result<ClassificationReport> {
    check_dim(code.n(), a.n())?;
    let n = code.n();
    let k = code.k();
    let b = a.complement();

    let dec = decompose(code, a)?;
    let oa = overlap_group(code, a)?;
    let ob = overlap_group(code, &b)?;
    if oa.form.pair_count() != ob.form.pair_count() {
        return Err(Error::Invariant(format!(
            "O^A has {} anti-commuting pairs but O^B has {}",
            oa.form.pair_count(),
            ob.form.pair_count()
        )));
    }
    if oa.shared_logicals().len() != ob.shared_logicals().len() {
        return Err(Error::Invariant(
            "O^A and O^B disagree on the number of shared logicals".into(),
        ));
    }

    let sa: Vec<PauliOperator> = dec.sa.iter().map(|t| t.op.clone()).collect();
    let sb: Vec<PauliOperator> = dec.sb.iter().map(|t| t.op.clone()).collect();
    let ells: Vec<PauliOperator> = oa.shared_logicals().iter().map(|t| t.op.clone()).collect();
    let ell_primes = oa
        .shared_logicals()
        .iter()
        .map(|t| counterpart(code, t, &b))
        .collect::<Result<Vec<_>>>()?;
    let pairs_a: Vec<OperatorPair> = oa
        .form
        .pairs()
        .iter()
        .map(|p| (p.xbar.op.clone(), p.zbar.op.clone()))
        .collect();
    let pairs_b = oa
        .form
        .pairs()
        .iter()
        .map(|p| Ok((counterpart(code, &p.xbar, &b)?, counterpart(code, &p.zbar, &b)?)))
        .collect::<Result<Vec<OperatorPair>>>()?;

    let (alpha_pairs, dim_ca) = centralizer_pairs(code, a, &sa, &ells)?;
    let (beta_pairs, dim_cb) = centralizer_pairs(code, &b, &sb, &ell_primes)?;

    // G(C_A) = 2 V_A - G(O^A)
    if dim_ca != 2 * a.len() - oa.rank() || dim_cb != 2 * b.len() - ob.rank() {
        return Err(Error::Invariant("G(C_A) != 2 V_A - G(O^A)".into()));
    }
    let g_a = dim_ca - dec.g_sa();
    let g_b = dim_cb - dec.g_sb();

    let r = boundary_partners(a, &pairs_a, &alpha_pairs, &sa, &ells)?;
    let r_prime = boundary_partners(&b, &pairs_b, &beta_pairs, &sb, &ell_primes)?;
    let deltas: Vec<PauliOperator> = r
        .iter()
        .zip(&r_prime)
        .map(|(x, y)| x.multiply(y))
        .collect::<Result<_>>()?;

    for (i, delta) in deltas.iter().enumerate() {
        if !code.commutes_with_all(delta)? {
            return Err(Error::Invariant(format!("delta_{i} = {delta} does not commute with S")));
        }
        if code.in_stabilizer(delta)? {
            return Err(Error::Invariant(format!("delta_{i} = {delta} lies in S")));
        }
        if !delta.anticommutes_with(&ells[i]) || !delta.anticommutes_with(&ell_primes[i]) {
            return Err(Error::Invariant(format!("delta_{i} commutes with its shared logical")));
        }
    }
    for (i, (l, lp)) in ells.iter().zip(&ell_primes).enumerate() {
        if !code.in_stabilizer(&l.multiply(lp)?)? {
            return Err(Error::Invariant(format!("l_{i} l_{i}' is not a stabilizer")));
        }
    }

    let m_ab = ells.len();
    let m_a = 2 * alpha_pairs.len();
    let m_b = 2 * beta_pairs.len();
    let localized = m_a + m_b + m_ab;
    if localized > 2 * k {
        return Err(Error::Invariant(format!(
            "m_A + m_B + m_AB = {localized} exceeds 2k = {}",
            2 * k
        )));
    }
    let m_phi = 2 * k - localized;
    let counts = Counts {
        k,
        m_a,
        m_b,
        m_ab,
        m_phi,
        g_a,
        g_b,
    };
    verify_counts(&counts)?;
    if deltas.len() != m_phi {
        return Err(Error::Invariant(format!(
            "|Delta| = {} but m_phi = {m_phi}",
            deltas.len()
        )));
    }

    let qubit_types = std::iter::repeat_n(QubitType::LocalA, alpha_pairs.len())
        .chain(std::iter::repeat_n(QubitType::LocalB, beta_pairs.len()))
        .chain(std::iter::repeat_n(QubitType::Nonlocal, m_ab))
        .collect::<Vec<_>>();
    debug_assert_eq!(qubit_types.len(), k);
    debug_assert_eq!(n, a.n());

    Ok(ClassificationReport {
        subset: a.clone(),
        counts,
        g_sa: dec.g_sa(),
        g_sb: dec.g_sb(),
        g_sab: dec.g_sab(),
        mab_pairs: ells.into_iter().zip(ell_primes).collect(),
        r_pairs: r.into_iter().zip(r_prime).collect(),
        deltas,
        alpha_pairs,
        beta_pairs,
        qubit_types,
    })
}

/// The count identities every classification must satisfy.
pub fn verify_counts(c: &Counts) -> Result<()> {
    if c.g_a != c.m_a + c.m_ab || c.g_b != c.m_b + c.m_ab {
        return Err(Error::Invariant(format!(
            "g_A = m_A + m_AB or g_B = m_B + m_AB fails: {c:?}"
        )));
    }
    if c.g_a + c.g_b != 2 * c.k {
        return Err(Error::Invariant(format!(
            "g_A + g_B = {} != 2k = {}",
            c.g_a + c.g_b,
            2 * c.k
        )));
    }
    if c.m_ab != c.m_phi {
        return Err(Error::Invariant(format!("m_AB = {} != m_phi = {}", c.m_ab, c.m_phi)));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SecretSharing {
    /// Classical bits shareable between the two parties, `m_φ`.
    pub classical_bits: usize,
    /// Always `false`: no quantum information can be shared secretly.
    pub quantum_sharable: bool,
    /// `m_AB ≠ 0`.
    pub classical_sharing_possible: bool,
}

pub fn secret_sharing(report: &ClassificationReport) -> SecretSharing {
    SecretSharing {
        classical_bits: report.counts.m_phi,
        quantum_sharable: false,
        classical_sharing_possible: report.counts.m_ab != 0,
    }
}

/// `k ≤ N − 2(d − 1)`.
pub fn singleton_check(code: &StabilizerCode, d: usize) -> Result<bool> {
    if d == 0 {
        return Err(Error::Parameter("distance must be at least 1".into()));
    }
    Ok(2 * (d - 1) <= code.n() && code.k() <= code.n() - 2 * (d - 1))
}
