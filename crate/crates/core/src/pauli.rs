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

//! Phaseless Pauli operators and the GF(2) linear algebra on them.
//!
//! A Pauli operator on `n` qubits is stored as two length-`n` bit vectors.
//! Qubit `i` carries `I`, `X`, `Z` or `Y` when `(x_i, z_i)` is `(0,0)`,
//! `(1,0)`, `(0,1)` or `(1,1)`. Phases are never tracked, so products are
//! taken in the Pauli group modulo `⟨iI⟩` and multiplication is a XOR.

use std::fmt;
use std::str::FromStr;

use crate::bits::{BitVector, Echelon};
use crate::error::{check_dim, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    x: BitVector,
    z: BitVector,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
        }
    }

    pub fn from_parts(x: BitVector, z: BitVector) -> Result<Self> {
        check_dim(x.len(), z.len())?;
        Ok(PauliOperator { x, z })
    }

    /// Single-letter operator `letter` on `qubit`, identity elsewhere.
    pub fn single(n: usize, qubit: usize, letter: char) -> Result<Self> {
        if qubit >= n {
            return Err(Error::Parameter(format!("qubit {qubit} out of range for {n} qubits")));
        }
        let mut p = PauliOperator::identity(n);
        let (x, z) = letter_bits(letter).ok_or_else(|| Error::Parse(format!("bad Pauli letter {letter:?}")))?;
        p.x.set(qubit, x);
        p.z.set(qubit, z);
        Ok(p)
    }

    /// Product of `letter` over every listed qubit.
    pub fn on_qubits<I: IntoIterator<Item = usize>>(n: usize, qubits: I, letter: char) -> Result<Self> {
        let mut p = PauliOperator::identity(n);
        for q in qubits {
            p.mul_assign(&PauliOperator::single(n, q, letter)?);
        }
        Ok(p)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x_part(&self) -> &BitVector {
        &self.x
    }

    pub fn z_part(&self) -> &BitVector {
        &self.z
    }

    pub fn letter(&self, qubit: usize) -> char {
        match (self.x.get(qubit), self.z.get(qubit)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (false, true) => 'Z',
            (true, true) => 'Y',
        }
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        self.x.or_count_ones(&self.z)
    }

    /// Qubits acted on non-trivially, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.x.get(i) || self.z.get(i)).collect()
    }

    /// Binary symplectic form `x_p·z_q + z_p·x_q (mod 2)`; `true` means the
    /// operators anti-commute. Panics on a qubit-count mismatch.
    #[inline]
    pub(crate) fn anticommutes_with(&self, other: &PauliOperator) -> bool {
        assert_eq!(self.n(), other.n(), "qubit count mismatch");
        self.x.dot(&other.z) ^ self.z.dot(&other.x)
    }

    pub fn commutes(&self, other: &PauliOperator) -> Result<bool> {
        check_dim(self.n(), other.n())?;
        Ok(!self.anticommutes_with(other))
    }

    pub fn multiply(&self, other: &PauliOperator) -> Result<PauliOperator> {
        check_dim(self.n(), other.n())?;
        let mut out = self.clone();
        out.mul_assign(other);
        Ok(out)
    }

    /// In-place product. Panics on a qubit-count mismatch.
    #[inline]
    pub(crate) fn mul_assign(&mut self, other: &PauliOperator) {
        assert_eq!(self.n(), other.n(), "qubit count mismatch");
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    /// Keeps the letters on `subset`, identity elsewhere. The result still
    /// lives on all `n` qubits.
    pub fn restrict(&self, subset: &QubitSubset) -> Result<PauliOperator> {
        check_dim(self.n(), subset.n())?;
        Ok(PauliOperator {
            x: self.x.and(subset.mask()),
            z: self.z.and(subset.mask()),
        })
    }

    /// `true` when every non-identity letter lies inside `subset`.
    pub fn supported_in(&self, subset: &QubitSubset) -> bool {
        self.support().iter().all(|&q| subset.contains(q))
    }

    /// Concatenated `x ‖ z` vector used for elimination.
    pub(crate) fn symplectic(&self) -> BitVector {
        self.x.concat(&self.z)
    }
}

fn letter_bits(c: char) -> Option<(bool, bool)> {
    match c {
        'I' => Some((false, false)),
        'X' => Some((true, false)),
        'Z' => Some((false, true)),
        'Y' => Some((true, true)),
        _ => None,
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            write!(f, "{}", self.letter(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    /// Parses one of `I`, `X`, `Y`, `Z` per qubit, qubit 0 leftmost.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::Parse("empty Pauli string".into()));
        }
        let n = s.chars().count();
        let mut p = PauliOperator::identity(n);
        for (i, c) in s.chars().enumerate() {
            let (x, z) = letter_bits(c).ok_or_else(|| {
                Error::Parse(format!("invalid character {c:?} at position {i} in Pauli string {s:?}"))
            })?;
            p.x.set(i, x);
            p.z.set(i, z);
        }
        Ok(p)
    }
}

/// Free-function form of [`PauliOperator::commutes`].
pub fn commutes(p: &PauliOperator, q: &PauliOperator) -> Result<bool> {
    p.commutes(q)
}

/// Free-function form of [`PauliOperator::multiply`].
pub fn multiply(p: &PauliOperator, q: &PauliOperator) -> Result<PauliOperator> {
    p.multiply(q)
}

/// Free-function form of [`PauliOperator::restrict`].
pub fn restrict(p: &PauliOperator, a: &QubitSubset) -> Result<PauliOperator> {
    p.restrict(a)
}

pub fn weight(p: &PauliOperator) -> usize {
    p.weight()
}

/// A set of qubit indices inside an `n`-qubit register.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QubitSubset {
    n: usize,
    members: Vec<usize>,
    mask: BitVector,
}

impl QubitSubset {
    /// Accepts indices in any order; rejects duplicates and out-of-range entries.
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Result<Self> {
        let mut members: Vec<usize> = indices.into_iter().collect();
        members.sort_unstable();
        if let Some(&bad) = members.iter().find(|&&i| i >= n) {
            return Err(Error::Parameter(format!(
                "qubit index {bad} out of range for {n} qubits"
            )));
        }
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parameter(format!("duplicate qubit index {}", w[0])));
        }
        let mask = BitVector::from_indices(n, members.iter().copied());
        Ok(QubitSubset { n, members, mask })
    }

    pub fn empty(n: usize) -> Self {
        QubitSubset {
            n,
            members: Vec::new(),
            mask: BitVector::zeros(n),
        }
    }

    pub fn full(n: usize) -> Self {
        QubitSubset::new(n, 0..n).expect("full range is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.n
    }

    pub fn contains(&self, q: usize) -> bool {
        q < self.n && self.mask.get(q)
    }

    pub fn complement(&self) -> QubitSubset {
        QubitSubset::new(self.n, (0..self.n).filter(|&q| !self.mask.get(q))).expect("complement is valid")
    }

    pub fn union(&self, other: &QubitSubset) -> Result<QubitSubset> {
        check_dim(self.n, other.n)?;
        QubitSubset::new(self.n, (0..self.n).filter(|&q| self.contains(q) || other.contains(q)))
    }

    pub fn is_subset_of(&self, other: &QubitSubset) -> bool {
        self.n == other.n && self.members.iter().all(|&q| other.contains(q))
    }

    pub(crate) fn mask(&self) -> &BitVector {
        &self.mask
    }
}

impl fmt::Debug for QubitSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QubitSubset({}; {:?})", self.n, self.members)
    }
}

/// Ordered list of non-identity Pauli operators on a common register.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GeneratorList {
    n: usize,
    gens: Vec<PauliOperator>,
}

impl GeneratorList {
    pub fn empty(n: usize) -> Self {
        GeneratorList { n, gens: Vec::new() }
    }

    /// Identity operators are dropped.
    pub fn new<I: IntoIterator<Item = PauliOperator>>(n: usize, gens: I) -> Result<Self> {
        let mut list = GeneratorList::empty(n);
        for g in gens {
            list.push(g)?;
        }
        Ok(list)
    }

    pub fn parse(strings: &[&str]) -> Result<Self> {
        let ops = strings
            .iter()
            .map(|s| s.parse::<PauliOperator>())
            .collect::<Result<Vec<_>>>()?;
        let n = ops
            .first()
            .map(PauliOperator::n)
            .ok_or_else(|| Error::Parse("no generators".into()))?;
        GeneratorList::new(n, ops)
    }

    pub fn push(&mut self, g: PauliOperator) -> Result<()> {
        check_dim(self.n, g.n())?;
        if !g.is_identity() {
            self.gens.push(g);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PauliOperator> {
        self.gens.iter()
    }

    pub fn as_slice(&self) -> &[PauliOperator] {
        &self.gens
    }

    pub fn get(&self, i: usize) -> Option<&PauliOperator> {
        self.gens.get(i)
    }

    /// GF(2) rank of the list, i.e. `G(⟨gens⟩)`.
    pub fn rank(&self) -> usize {
        reduce(self).len()
    }

    /// Product of the generators selected by `indices`.
    pub fn product<I: IntoIterator<Item = usize>>(&self, indices: I) -> PauliOperator {
        let mut p = PauliOperator::identity(self.n);
        for i in indices {
            p.mul_assign(&self.gens[i]);
        }
        p
    }

    pub(crate) fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(2 * self.n, self.gens.len());
        for (i, g) in self.gens.iter().enumerate() {
            let _ = e.insert_tagged(g.symplectic(), i);
        }
        e
    }
}

impl fmt::Debug for GeneratorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter().map(|g| g.to_string())).finish()
    }
}

impl<'a> IntoIterator for &'a GeneratorList {
    type Item = &'a PauliOperator;
    type IntoIter = std::slice::Iter<'a, PauliOperator>;
    fn into_iter(self) -> Self::IntoIter {
        self.gens.iter()
    }
}

/// Independent sublist spanning the same group: each generator is kept when
/// it is independent of the ones kept before it.
pub fn reduce(gens: &GeneratorList) -> GeneratorList {
    let mut e = Echelon::new(2 * gens.n, 0);
    let mut kept = GeneratorList::empty(gens.n);
    for g in &gens.gens {
        if e.insert(g.symplectic(), BitVector::zeros(0)).is_ok() {
            kept.gens.push(g.clone());
        }
    }
    kept
}

/// Finds `R` with `∏_{j∈R} gens[j] = p` up to phase. The returned indices
/// are ascending; when `gens` is independent the solution is unique.
pub fn in_group(p: &PauliOperator, gens: &GeneratorList) -> Result<Option<Vec<usize>>> {
    check_dim(gens.n, p.n())?;
    Ok(gens.echelon().solve(&p.symplectic()).map(|c| c.iter_ones().collect()))
}

/// Basis of all Pauli operators supported on `subset` that commute with
/// every operator in `ops`, obtained as a GF(2) null space.
pub fn centralizer_within(subset: &QubitSubset, ops: &[PauliOperator]) -> Result<Vec<PauliOperator>> {
    let n = subset.n();
    let members = subset.members();
    let m = members.len();
    let rows = ops
        .iter()
        .map(|g| {
            check_dim(n, g.n())?;
            let mut row = BitVector::zeros(2 * m);
            for (i, &q) in members.iter().enumerate() {
                // x_q pairs with the generator's z_q, and vice versa.
                row.set(i, g.z.get(q));
                row.set(m + i, g.x.get(q));
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(crate::bits::nullspace(&rows, 2 * m)
        .into_iter()
        .map(|v| {
            let mut p = PauliOperator::identity(n);
            for (i, &q) in members.iter().enumerate() {
                p.x.set(q, v.get(i));
                p.z.set(q, v.get(m + i));
            }
            p
        })
        .collect())
}

/// All pairwise products commute.
pub fn mutually_commuting(ops: &[PauliOperator]) -> bool {
    ops.iter()
        .enumerate()
        .all(|(i, a)| ops[i + 1..].iter().all(|b| !a.anticommutes_with(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn single_qubit_anticommutation() {
        assert!(!commutes(&p("X"), &p("Z")).unwrap());
        assert!(commutes(&p("XX"), &p("ZZ")).unwrap());
        assert!(commutes(&p("Y"), &p("Y")).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(matches!(commutes(&p("X"), &p("XX")), Err(Error::Dimension { .. })));
        assert!(matches!(multiply(&p("X"), &p("XX")), Err(Error::Dimension { .. })));
        let a = QubitSubset::new(3, [0]).unwrap();
        assert!(restrict(&p("XX"), &a).is_err());
    }

    #[test]
    fn products_are_xor() {
        assert_eq!(multiply(&p("X"), &p("Z")).unwrap(), p("Y"));
        assert_eq!(multiply(&p("ZZI"), &p("IZZ")).unwrap(), p("ZIZ"));
        assert!(multiply(&p("XYZ"), &p("XYZ")).unwrap().is_identity());
    }

    #[test]
    fn restriction_and_weight() {
        let a = QubitSubset::new(3, [0]).unwrap();
        assert_eq!(restrict(&p("XXX"), &a).unwrap(), p("XII"));
        assert_eq!(restrict(&p("XYZ"), &QubitSubset::full(3)).unwrap(), p("XYZ"));
        assert_eq!(weight(&PauliOperator::identity(4)), 0);
        assert_eq!(weight(&p("IIYII")), 1);
        assert_eq!(weight(&p("XIZY")), 3);
    }

    #[test]
    fn parse_rejects_bad_characters() {
        assert!("XIZA".parse::<PauliOperator>().is_err());
        assert!("xz".parse::<PauliOperator>().is_err());
        assert!("".parse::<PauliOperator>().is_err());
        assert_eq!(p("XIZZY").to_string(), "XIZZY");
    }

    #[test]
    fn reduce_drops_dependent_generators() {
        let g = GeneratorList::parse(&["XX", "ZZ", "YY"]).unwrap();
        assert_eq!(reduce(&g).len(), 2);
        assert!(reduce(&GeneratorList::empty(3)).is_empty());
        let kept = reduce(&GeneratorList::parse(&["ZZI", "ZZI", "IZZ"]).unwrap());
        assert_eq!(kept.as_slice(), &[p("ZZI"), p("IZZ")]);
    }

    #[test]
    fn membership_returns_combination() {
        let g = GeneratorList::parse(&["ZZI", "IZZ"]).unwrap();
        assert_eq!(in_group(&p("ZIZ"), &g).unwrap(), Some(vec![0, 1]));
        let g = GeneratorList::parse(&["ZZ"]).unwrap();
        assert_eq!(in_group(&p("XI"), &g).unwrap(), None);
        assert_eq!(in_group(&p("II"), &g).unwrap(), Some(vec![]));
    }

    #[test]
    fn subsets_validate() {
        assert!(QubitSubset::new(3, [3]).is_err());
        assert!(QubitSubset::new(3, [1, 1]).is_err());
        let a = QubitSubset::new(5, [4, 0, 2]).unwrap();
        assert_eq!(a.members(), &[0, 2, 4]);
        assert_eq!(a.complement().members(), &[1, 3]);
        assert!(QubitSubset::empty(2).complement().is_full());
    }

    #[test]
    fn identity_is_never_stored() {
        let g = GeneratorList::new(2, [PauliOperator::identity(2), p("XX")]).unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn centralizer_of_repetition_restricted() {
        let b = QubitSubset::new(3, [1, 2]).unwrap();
        let c = centralizer_within(&b, &[p("IZZ")]).unwrap();
        assert_eq!(c.len(), 3);
        for op in &c {
            assert!(op.supported_in(&b));
            assert!(op.commutes(&p("IZZ")).unwrap());
        }
        assert_eq!(
            centralizer_within(&QubitSubset::empty(3), &[p("XXX")]).unwrap().len(),
            0
        );
    }

    #[test]
    fn weight_beyond_one_word() {
        let mut s = "I".repeat(130);
        s.replace_range(127..128, "Y");
        s.replace_range(3..4, "X");
        assert_eq!(p(&s).weight(), 2);
        assert_eq!(p(&s).support(), vec![3, 127]);
    }
}
