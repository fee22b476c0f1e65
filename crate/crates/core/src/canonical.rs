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

//! Canonical generators of arbitrary (possibly non-abelian) Pauli subgroups.
//!
//! A canonical form splits a generating set into anti-commuting pairs
//! `(X̄_i, Z̄_i)` and commuting singles; any two generators that are not
//! partners in the same pair commute. The form is built one generator at a
//! time: the incoming operator is first made to commute with every pair by
//! multiplying in the appropriate partners, and then either joins the
//! singles or pairs up with the first single it anti-commutes with.
//!
//! Every generator carries a provenance set recording which source
//! operators it is the product of. Multiplication XORs provenance sets, so
//! the bookkeeping is exact GF(2) arithmetic.

use crate::bits::{BitVector, Echelon};
use crate::error::{check_dim, Error, Result};
use crate::pauli::{GeneratorList, PauliOperator};

/// A Pauli operator together with the set of source operators whose
/// product it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackedOperator {
    pub op: PauliOperator,
    pub provenance: BitVector,
}

impl TrackedOperator {
    pub fn new(op: PauliOperator, provenance: BitVector) -> Self {
        TrackedOperator { op, provenance }
    }

    /// The `index`-th operator of a source list of length `source_len`.
    pub fn source(op: PauliOperator, index: usize, source_len: usize) -> Self {
        TrackedOperator {
            op,
            provenance: BitVector::from_indices(source_len, [index]),
        }
    }

    pub fn provenance_indices(&self) -> Vec<usize> {
        self.provenance.iter_ones().collect()
    }

    /// Product of the source operators named by the provenance set.
    pub fn reconstruct(&self, source: &[PauliOperator]) -> PauliOperator {
        let mut p = PauliOperator::identity(self.op.n());
        for i in self.provenance.iter_ones() {
            p.mul_assign(&source[i]);
        }
        p
    }

    pub(crate) fn mul_assign(&mut self, other: &TrackedOperator) {
        self.op.mul_assign(&other.op);
        self.provenance.xor_assign(&other.provenance);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalPair {
    pub xbar: TrackedOperator,
    pub zbar: TrackedOperator,
}

/// What [`CanonicalForm::push`] did with the incoming operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extension {
    /// Already in the generated group; the form is unchanged.
    Dependent,
    /// Joined the commuting singles.
    Single,
    /// Became the partner of a former single, forming a new pair.
    Paired,
}

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    n: usize,
    source_len: usize,
    pairs: Vec<CanonicalPair>,
    singles: Vec<TrackedOperator>,
    span: Echelon,
}

impl CanonicalForm {
    /// The form of the trivial group on `n` qubits, with provenance sets
    /// over a source list of length `source_len`.
    pub fn new(n: usize, source_len: usize) -> Self {
        CanonicalForm {
            n,
            source_len,
            pairs: Vec::new(),
            singles: Vec::new(),
            span: Echelon::new(2 * n, 0),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source_len(&self) -> usize {
        self.source_len
    }

    pub fn pairs(&self) -> &[CanonicalPair] {
        &self.pairs
    }

    pub fn singles(&self) -> &[TrackedOperator] {
        &self.singles
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn single_count(&self) -> usize {
        self.singles.len()
    }

    /// Number of independent generators, `2a + b`.
    pub fn rank(&self) -> usize {
        2 * self.pairs.len() + self.singles.len()
    }

    /// All canonical generators: pairs as `X̄_1, Z̄_1, X̄_2, ...`, then singles.
    pub fn generators(&self) -> impl Iterator<Item = &TrackedOperator> {
        self.pairs
            .iter()
            .flat_map(|p| [&p.xbar, &p.zbar])
            .chain(self.singles.iter())
    }

    pub fn generator_list(&self) -> GeneratorList {
        GeneratorList::new(self.n, self.generators().map(|t| t.op.clone())).expect("same register")
    }

    /// Whether `op` lies in the generated group.
    pub fn contains(&self, op: &PauliOperator) -> bool {
        op.n() == self.n && self.span.contains(&op.symplectic())
    }

    /// Adds `u` to the generating set, keeping the form canonical.
    pub fn push(&mut self, u: TrackedOperator) -> Result<Extension> {
        check_dim(self.n, u.op.n())?;
        check_dim(self.source_len, u.provenance.len())?;
        if self.span.insert(u.op.symplectic(), BitVector::zeros(0)).is_err() {
            return Ok(Extension::Dependent);
        }

        // Make u commute with every pair: multiply by Z̄_i when it
        // anti-commutes with X̄_i and by X̄_i when it anti-commutes with Z̄_i.
        let mut w = u;
        for pair in &self.pairs {
            let p = pair.xbar.op.anticommutes_with(&w.op);
            let q = pair.zbar.op.anticommutes_with(&w.op);
            if q {
                w.mul_assign(&pair.xbar);
            }
            if p {
                w.mul_assign(&pair.zbar);
            }
        }

        let anti: Vec<usize> = self
            .singles
            .iter()
            .enumerate()
            .filter(|(_, s)| s.op.anticommutes_with(&w.op))
            .map(|(i, _)| i)
            .collect();

        let Some((&first, rest)) = anti.split_first() else {
            self.singles.push(w);
            return Ok(Extension::Single);
        };

        let partner = self.singles[first].clone();
        for &j in rest {
            self.singles[j].mul_assign(&partner);
        }
        self.singles.remove(first);
        self.pairs.push(CanonicalPair { xbar: partner, zbar: w });
        Ok(Extension::Paired)
    }

    /// Verifies the pairwise commutation block structure and independence.
    pub fn check_structure(&self) -> Result<()> {
        let gens: Vec<&TrackedOperator> = self.generators().collect();
        let a = self.pairs.len();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let partners = i < 2 * a && j == i + 1 && i % 2 == 0;
                let anti = gens[i].op.anticommutes_with(&gens[j].op);
                if anti != partners {
                    return Err(Error::Invariant(format!(
                        "canonical generators {i} and {j} ({} / {}) violate the block structure",
                        gens[i].op, gens[j].op
                    )));
                }
            }
        }
        let ops: Vec<BitVector> = gens.iter().map(|t| t.op.symplectic()).collect();
        if crate::bits::rank(&ops) != gens.len() {
            return Err(Error::Invariant("canonical generators are dependent".into()));
        }
        Ok(())
    }
}

/// Canonical form of `⟨form, u⟩`.
pub fn extend(mut form: CanonicalForm, u: TrackedOperator) -> Result<CanonicalForm> {
    form.push(u)?;
    Ok(form)
}

/// Folds [`extend`] over `gens` in order. Provenance sets index `gens`.
pub fn canonicalize(gens: &GeneratorList) -> CanonicalForm {
    let m = gens.len();
    canonicalize_tracked(
        gens.n(),
        m,
        gens.iter()
            .enumerate()
            .map(|(i, g)| TrackedOperator::source(g.clone(), i, m)),
    )
    .expect("generators share the register")
}

/// Folds [`extend`] over already-tracked operators.
pub fn canonicalize_tracked<I>(n: usize, source_len: usize, items: I) -> Result<CanonicalForm>
where
    I: IntoIterator<Item = TrackedOperator>,
{
    let mut form = CanonicalForm::new(n, source_len);
    for item in items {
        form.push(item)?;
    }
    Ok(form)
}

/// The commuting singles `X̄_{a+1}, …, X̄_{a+b}`.
pub fn max_abelian_part(form: &CanonicalForm) -> GeneratorList {
    GeneratorList::new(form.n, form.singles.iter().map(|t| t.op.clone())).expect("same register")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    fn ops(form: &CanonicalForm) -> (Vec<(String, String)>, Vec<String>) {
        (
            form.pairs()
                .iter()
                .map(|c| (c.xbar.op.to_string(), c.zbar.op.to_string()))
                .collect(),
            form.singles().iter().map(|t| t.op.to_string()).collect(),
        )
    }

    #[test]
    fn two_commuting_operators_stay_single() {
        let g = GeneratorList::parse(&["XX", "ZZ"]).unwrap();
        let f = canonicalize(&g);
        assert_eq!(f.pair_count(), 0);
        assert_eq!(ops(&f).1, vec!["XX", "ZZ"]);
    }

    #[test]
    fn two_anticommuting_operators_pair() {
        let g = GeneratorList::parse(&["XI", "ZZ"]).unwrap();
        let f = canonicalize(&g);
        assert_eq!(ops(&f).0, vec![("XI".to_string(), "ZZ".to_string())]);
        assert!(f.singles().is_empty());
    }

    // O1 = ZI, O2 = IZ commute; O3 = XX anti-commutes with both.
    #[test]
    fn three_operator_example_repairs_the_second_single() {
        let g = GeneratorList::parse(&["ZI", "IZ", "XX"]).unwrap();
        let f = canonicalize(&g);
        let (pairs, singles) = ops(&f);
        assert_eq!(pairs, vec![("ZI".to_string(), "XX".to_string())]);
        assert_eq!(singles, vec!["ZZ"]);
        assert_eq!(f.singles()[0].provenance_indices(), vec![0, 1]);
        assert_eq!(max_abelian_part(&f).as_slice(), &[p("ZZ")]);
        f.check_structure().unwrap();
    }

    #[test]
    fn dependent_input_leaves_form_unchanged() {
        let mut f = canonicalize(&GeneratorList::parse(&["XI", "ZZ"]).unwrap());
        let before = ops(&f);
        let u = TrackedOperator::new(p("YZ"), BitVector::zeros(2));
        assert_eq!(f.push(u).unwrap(), Extension::Dependent);
        assert_eq!(ops(&f), before);
    }

    #[test]
    fn full_single_qubit_group_is_one_pair() {
        let f = canonicalize(&GeneratorList::parse(&["X", "Z"]).unwrap());
        assert_eq!(f.pair_count(), 1);
        assert_eq!(f.single_count(), 0);
        assert!(max_abelian_part(&f).is_empty());
    }

    #[test]
    fn abelian_input_gives_reduced_basis() {
        let g = GeneratorList::parse(&["ZZI", "IZZ", "ZIZ", "XXX"]).unwrap();
        let f = canonicalize(&g);
        assert_eq!(f.pair_count(), 0);
        assert_eq!(f.single_count(), 3);
    }

    #[test]
    fn provenance_reconstructs_every_generator() {
        let g = GeneratorList::parse(&["XZIY", "ZZXI", "IYYX", "XIIZ", "ZXZX", "YYII"]).unwrap();
        let f = canonicalize(&g);
        f.check_structure().unwrap();
        for t in f.generators() {
            assert_eq!(t.reconstruct(g.as_slice()), t.op);
        }
        assert_eq!(f.rank(), g.rank());
    }

    #[test]
    fn wrong_register_is_rejected() {
        let mut f = CanonicalForm::new(2, 1);
        let u = TrackedOperator::source(p("XXX"), 0, 1);
        assert!(matches!(f.push(u), Err(Error::Dimension { .. })));
    }
}
