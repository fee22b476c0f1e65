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

//! Entanglement entropy of stabilizer ground states, in bits.

use std::fmt;

use crate::bipartition::decompose;
use crate::classify::classify;
use crate::codes::{CodeOrigin, StabilizerCode};
use crate::error::{check_dim, Error, Result};
use crate::pauli::{GeneratorList, QubitSubset};

/// A non-negative multiple of one half, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfBits(u64);

impl HalfBits {
    pub fn from_halves(halves: u64) -> Self {
        HalfBits(halves)
    }

    pub fn halves(&self) -> u64 {
        self.0
    }

    pub fn as_f64(&self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for HalfBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.0 / 2, if self.0 % 2 == 1 { 5 } else { 0 })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EntropyBounds {
    pub e_min: HalfBits,
    pub e_max: HalfBits,
    pub g_sab: usize,
    pub m_phi: usize,
}

/// Range of `E_A` over the ground space: `(G(S_AB) ∓ m_φ) / 2`.
pub fn entropy_bounds(code: &StabilizerCode, a: &QubitSubset) -> Result<EntropyBounds> {
    check_dim(code.n(), a.n())?;
    let g_sab = decompose(code, a)?.g_sab();
    let m_phi = classify(code, a)?.counts.m_phi;
    if m_phi > g_sab {
        return Err(Error::Invariant(format!("m_phi = {m_phi} exceeds G(S_AB) = {g_sab}")));
    }
    Ok(EntropyBounds {
        e_min: HalfBits((g_sab - m_phi) as u64),
        e_max: HalfBits((g_sab + m_phi) as u64),
        g_sab,
        m_phi,
    })
}

/// One ground state of `code`, selected as the +1 eigenstate of `k`
/// commuting logical operators.
#[derive(Clone, Debug)]
pub struct GroundStateSpec {
    code: StabilizerCode,
    fixed_logicals: GeneratorList,
}

impl GroundStateSpec {
    pub fn new(code: StabilizerCode, fixed_logicals: GeneratorList) -> Result<Self> {
        check_dim(code.n(), fixed_logicals.n())?;
        let spec_err = |m: String| Err(Error::Specification(m));
        if fixed_logicals.len() != code.k() {
            return spec_err(format!(
                "{} fixed logicals supplied, code encodes k = {}",
                fixed_logicals.len(),
                code.k()
            ));
        }
        let fixed = fixed_logicals.as_slice();
        for i in 0..fixed.len() {
            if !code.commutes_with_all(&fixed[i])? {
                return spec_err(format!(
                    "fixed logical {} does not commute with the stabilizers",
                    fixed[i]
                ));
            }
            for j in i + 1..fixed.len() {
                if !fixed[i].commutes(&fixed[j])? {
                    return spec_err(format!("fixed logicals {} and {} anti-commute", fixed[i], fixed[j]));
                }
            }
        }
        let all = GeneratorList::new(code.n(), code.basis().iter().chain(fixed).cloned())?;
        if all.rank() != code.n() {
            return spec_err("fixed logicals are not independent of the stabilizer group".into());
        }
        Ok(GroundStateSpec { code, fixed_logicals })
    }

    pub fn code(&self) -> &StabilizerCode {
        &self.code
    }

    pub fn fixed_logicals(&self) -> &GeneratorList {
        &self.fixed_logicals
    }

    /// The `k = 0` code whose unique state is this ground state.
    pub fn state_code(&self) -> StabilizerCode {
        let gens = self.code.basis().iter().chain(&self.fixed_logicals).cloned();
        let gens = GeneratorList::new(self.code.n(), gens).expect("same register");
        StabilizerCode::with_origin(gens, CodeOrigin::Custom).expect("validated spec commutes")
    }
}

/// `½ G(S(0)_AB)` for the full-rank group `S(0) = ⟨S, fixed_logicals⟩`.
pub fn entropy_of_state(spec: &GroundStateSpec, a: &QubitSubset) -> Result<HalfBits> {
    check_dim(spec.code.n(), a.n())?;
    Ok(HalfBits(decompose(&spec.state_code(), a)?.g_sab() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{repetition_code, toric_code, toric_rectangle, toric_regions};

    fn subset(n: usize, q: &[usize]) -> QubitSubset {
        QubitSubset::new(n, q.iter().copied()).unwrap()
    }

    #[test]
    fn half_bits_display() {
        assert_eq!(HalfBits::from_halves(12).to_string(), "6.0");
        assert_eq!(HalfBits::from_halves(3).to_string(), "1.5");
        assert_eq!(HalfBits::from_halves(3).as_f64(), 1.5);
    }

    #[test]
    fn repetition_bounds() {
        let b = entropy_bounds(&repetition_code(3).unwrap(), &subset(3, &[0])).unwrap();
        assert_eq!((b.e_min.as_f64(), b.e_max.as_f64(), b.g_sab, b.m_phi), (0.0, 1.0, 1, 1));
    }

    #[test]
    fn bell_bounds() {
        let code = StabilizerCode::new(GeneratorList::parse(&["XX", "ZZ"]).unwrap()).unwrap();
        let b = entropy_bounds(&code, &subset(2, &[0])).unwrap();
        assert_eq!((b.e_min.as_f64(), b.e_max.as_f64()), (1.0, 1.0));
    }

    #[test]
    fn toric_square() {
        let code = toric_code(6).unwrap();
        let rect = toric_rectangle(6, 2, 2).unwrap();
        let b = entropy_bounds(&code, &rect.subset).unwrap();
        assert_eq!((b.e_min.halves(), b.e_max.halves(), b.m_phi), (12, 12, 0));
    }

    #[test]
    fn repetition_states() {
        let code = repetition_code(3).unwrap();
        let a = subset(3, &[0]);
        let product = GroundStateSpec::new(code.clone(), GeneratorList::parse(&["ZII"]).unwrap()).unwrap();
        assert_eq!(entropy_of_state(&product, &a).unwrap().halves(), 0);
        let ghz = GroundStateSpec::new(code, GeneratorList::parse(&["XXX"]).unwrap()).unwrap();
        assert_eq!(entropy_of_state(&ghz, &a).unwrap().halves(), 2);
    }

    #[test]
    fn invalid_specs() {
        let code = repetition_code(3).unwrap();
        for fixed in [vec!["ZZI"], vec!["XII"], vec!["ZII", "XXX"], vec![]] {
            let r = GroundStateSpec::new(
                code.clone(),
                GeneratorList::parse(&fixed).unwrap_or(GeneratorList::empty(3)),
            );
            assert!(matches!(r, Err(Error::Specification(_))), "{fixed:?}");
        }
    }

    #[test]
    fn toric_states_differ_by_m_phi() {
        let code = toric_code(3).unwrap();
        let qx = toric_regions(3).unwrap().qx.subset;
        let report = classify(&code, &qx).unwrap();
        let low = GroundStateSpec::new(code.clone(), report.min_entropy_logicals()).unwrap();
        let high = GroundStateSpec::new(code.clone(), report.max_entropy_logicals()).unwrap();
        let (lo, hi) = (
            entropy_of_state(&low, &qx).unwrap(),
            entropy_of_state(&high, &qx).unwrap(),
        );
        let b = entropy_bounds(&code, &qx).unwrap();
        assert_eq!((lo, hi), (b.e_min, b.e_max));
        assert_eq!(hi.halves() - lo.halves(), 2 * 2);
        // pure state: complement gives the same value
        assert_eq!(entropy_of_state(&high, &qx.complement()).unwrap(), hi);
    }
}
