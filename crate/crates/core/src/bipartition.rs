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

//! Overlapping operator groups and the split `S = ⟨S_A, S_B, S_AB⟩`.
//!
//! All provenance sets in this module index the code's independent
//! generator basis ([`StabilizerCode::basis`]).

use crate::bits::{BitVector, Echelon};
use crate::canonical::{canonicalize_tracked, CanonicalForm, TrackedOperator};
use crate::codes::StabilizerCode;
use crate::error::{check_dim, Error, Result};
use crate::pauli::{GeneratorList, PauliOperator, QubitSubset};

/// The group generated by the restrictions `S_j|_A` of all stabilizer
/// generators, in canonical form.
///
/// The form is seeded with a basis of `S_A`, so its first `restricted_count`
/// singles are exactly that basis and the remaining singles are the
/// localized logical operators shared with the complement.
#[derive(Clone, Debug)]
pub struct OverlapGroup {
    pub subset: QubitSubset,
    pub form: CanonicalForm,
    pub restricted_count: usize,
}

impl OverlapGroup {
    /// The `S_A` part of the singles.
    pub fn restricted(&self) -> &[TrackedOperator] {
        &self.form.singles()[..self.restricted_count]
    }

    /// Singles beyond `S_A`: logical operators definable on both sides.
    pub fn shared_logicals(&self) -> &[TrackedOperator] {
        &self.form.singles()[self.restricted_count..]
    }

    /// `G(O^A)`.
    pub fn rank(&self) -> usize {
        self.form.rank()
    }
}

/// Stabilizers supported entirely inside `a`, with provenance.
///
/// Computed as the kernel of `c ↦ ∏_j (S_j|_B)^{c_j}`: every linear
/// dependency among the complement restrictions is a product of generators
/// that acts trivially outside `a`.
pub fn restricted_tracked(code: &StabilizerCode, a: &QubitSubset) -> Result<Vec<TrackedOperator>> {
    check_dim(code.n(), a.n())?;
    let basis = code.basis();
    let m = basis.len();
    let b = a.complement();
    let mut e = Echelon::new(2 * code.n(), m);
    let mut out = Vec::new();
    for (j, s) in basis.iter().enumerate() {
        if let Err(dependency) = e.insert_tagged(s.restrict(&b)?.symplectic(), j) {
            let op = basis.product(dependency.iter_ones());
            debug_assert!(op.supported_in(a));
            out.push(TrackedOperator::new(op, dependency));
        }
    }
    Ok(out)
}

/// Independent basis of `S_A`, the stabilizers supported inside `a`.
pub fn restriction_stabilizers(code: &StabilizerCode, a: &QubitSubset) -> Result<GeneratorList> {
    GeneratorList::new(code.n(), restricted_tracked(code, a)?.into_iter().map(|t| t.op))
}

pub fn overlap_group(code: &StabilizerCode, a: &QubitSubset) -> Result<OverlapGroup> {
    check_dim(code.n(), a.n())?;
    let m = code.basis().len();
    let restricted = restricted_tracked(code, a)?;
    let restricted_count = restricted.len();
    let overlaps = code
        .basis()
        .iter()
        .enumerate()
        .map(|(j, s)| Ok(TrackedOperator::source(s.restrict(a)?, j, m)))
        .collect::<Result<Vec<_>>>()?;
    let form = canonicalize_tracked(code.n(), m, restricted.into_iter().chain(overlaps))?;
    if form.single_count() < restricted_count {
        return Err(Error::Invariant(
            "restricted stabilizers did not survive canonicalization".into(),
        ));
    }
    Ok(OverlapGroup {
        subset: a.clone(),
        form,
        restricted_count,
    })
}

/// `∏_{j ∈ provenance} S_j|_target`.
pub fn counterpart(code: &StabilizerCode, t: &TrackedOperator, target: &QubitSubset) -> Result<PauliOperator> {
    check_dim(code.n(), target.n())?;
    check_dim(code.basis().len(), t.provenance.len())?;
    code.basis().product(t.provenance.iter_ones()).restrict(target)
}

/// Which canonical generator of `O^A` an `S_AB` generator comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryOrigin {
    /// `X̄_i X̄_i′` for pair `i`.
    PairX(usize),
    /// `Z̄_i Z̄_i′` for pair `i`.
    PairZ(usize),
    /// `ℓ_i ℓ_i′` for shared logical `i`.
    Shared(usize),
}

#[derive(Clone, Debug)]
pub struct BoundaryGenerator {
    pub origin: BoundaryOrigin,
    pub stabilizer: TrackedOperator,
}

#[derive(Clone, Debug)]
pub struct BoundaryDecomposition {
    pub subset: QubitSubset,
    /// Independent generators of `S_A`.
    pub sa: Vec<TrackedOperator>,
    /// Independent generators of `S_B`.
    pub sb: Vec<TrackedOperator>,
    /// Independent generators of the non-local part `S_AB`.
    pub sab: Vec<BoundaryGenerator>,
    /// Anti-commuting pairs of `O^A` (and of `O^B`).
    pub pair_count: usize,
    /// Shared logical operators (`m_AB`).
    pub shared_count: usize,
}

impl BoundaryDecomposition {
    pub fn g_sa(&self) -> usize {
        self.sa.len()
    }

    pub fn g_sb(&self) -> usize {
        self.sb.len()
    }

    pub fn g_sab(&self) -> usize {
        self.sab.len()
    }

    pub fn sab_generators(&self) -> GeneratorList {
        let n = self.subset.n();
        GeneratorList::new(n, self.sab.iter().map(|g| g.stabilizer.op.clone())).expect("same register")
    }
}

pub fn decompose(code: &StabilizerCode, a: &QubitSubset) -> Result<BoundaryDecomposition> {
    check_dim(code.n(), a.n())?;
    let m = code.rank();
    let basis = code.basis();
    let full = |p: &BitVector| TrackedOperator::new(basis.product(p.iter_ones()), p.clone());

    if a.is_empty() || a.is_full() {
        let all: Vec<TrackedOperator> = (0..m)
            .map(|j| TrackedOperator::source(basis.as_slice()[j].clone(), j, m))
            .collect();
        let (sa, sb) = if a.is_full() {
            (all, Vec::new())
        } else {
            (Vec::new(), all)
        };
        return Ok(BoundaryDecomposition {
            subset: a.clone(),
            sa,
            sb,
            sab: Vec::new(),
            pair_count: 0,
            shared_count: 0,
        });
    }

    let oa = overlap_group(code, a)?;
    let sa = oa.restricted().to_vec();
    let sb = restricted_tracked(code, &a.complement())?;

    let mut sab = Vec::new();
    for (i, pair) in oa.form.pairs().iter().enumerate() {
        sab.push(BoundaryGenerator {
            origin: BoundaryOrigin::PairX(i),
            stabilizer: full(&pair.xbar.provenance),
        });
        sab.push(BoundaryGenerator {
            origin: BoundaryOrigin::PairZ(i),
            stabilizer: full(&pair.zbar.provenance),
        });
    }
    for (i, l) in oa.shared_logicals().iter().enumerate() {
        sab.push(BoundaryGenerator {
            origin: BoundaryOrigin::Shared(i),
            stabilizer: full(&l.provenance),
        });
    }

    let dec = BoundaryDecomposition {
        subset: a.clone(),
        sa,
        sb,
        sab,
        pair_count: oa.form.pair_count(),
        shared_count: oa.shared_logicals().len(),
    };

    let total = dec.g_sa() + dec.g_sb() + dec.g_sab();
    if total != m {
        return Err(Error::Invariant(format!(
            "G(S_A) + G(S_B) + G(S_AB) = {} + {} + {} != G(S) = {m}",
            dec.g_sa(),
            dec.g_sb(),
            dec.g_sab()
        )));
    }
    let span: Vec<BitVector> = dec
        .sa
        .iter()
        .chain(&dec.sb)
        .chain(dec.sab.iter().map(|g| &g.stabilizer))
        .map(|t| t.op.symplectic())
        .collect();
    if crate::bits::rank(&span) != m {
        return Err(Error::Invariant("S_A, S_B and S_AB generators do not span S".into()));
    }
    if dec.g_sab() != 2 * dec.pair_count + dec.shared_count {
        return Err(Error::Invariant("G(S_AB) != 2a + m_AB".into()));
    }
    Ok(dec)
}
