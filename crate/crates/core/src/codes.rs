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

//! Stabilizer codes and the reference families used throughout the crate.

use rand::{Rng, RngExt};

use crate::bits::BitVector;
use crate::error::{check_dim, Error, Result};
use crate::pauli::{centralizer_within, in_group, reduce, GeneratorList, PauliOperator, QubitSubset};

/// Where a code came from. Named Toric regions are only meaningful for
/// codes built by [`toric_code`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeOrigin {
    Toric { l: usize },
    Repetition { n: usize },
    FiveQubit,
    Custom,
}

/// A stabilizer code given by pairwise commuting generators.
///
/// The generators are kept as supplied (minus identities) and an
/// independent sublist is derived from them; provenance sets elsewhere in
/// the crate index that independent basis.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    generators: GeneratorList,
    basis: GeneratorList,
    origin: CodeOrigin,
}

impl StabilizerCode {
    pub fn new(generators: GeneratorList) -> Result<Self> {
        StabilizerCode::with_origin(generators, CodeOrigin::Custom)
    }

    pub fn with_origin(generators: GeneratorList, origin: CodeOrigin) -> Result<Self> {
        if generators.n() == 0 {
            return Err(Error::Parameter("a code needs at least one qubit".into()));
        }
        let gens = generators.as_slice();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if gens[i].anticommutes_with(&gens[j]) {
                    return Err(Error::NonCommuting(i, j));
                }
            }
        }
        let basis = reduce(&generators);
        Ok(StabilizerCode {
            generators,
            basis,
            origin,
        })
    }

    pub fn n(&self) -> usize {
        self.generators.n()
    }

    /// Number of logical qubits, `N − G(S)`.
    pub fn k(&self) -> usize {
        self.n() - self.basis.len()
    }

    /// `G(S)`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn generators(&self) -> &GeneratorList {
        &self.generators
    }

    pub fn basis(&self) -> &GeneratorList {
        &self.basis
    }

    pub fn origin(&self) -> CodeOrigin {
        self.origin
    }

    pub fn in_stabilizer(&self, op: &PauliOperator) -> Result<bool> {
        Ok(in_group(op, &self.basis)?.is_some())
    }

    pub fn commutes_with_all(&self, op: &PauliOperator) -> Result<bool> {
        check_dim(self.n(), op.n())?;
        Ok(self.basis.iter().all(|s| !s.anticommutes_with(op)))
    }

    /// In the centralizer but not in the stabilizer group.
    pub fn is_logical(&self, op: &PauliOperator) -> Result<bool> {
        Ok(self.commutes_with_all(op)? && !self.in_stabilizer(op)?)
    }
}

/// Edge indexing of the `L × L` periodic square lattice.
///
/// Horizontal edge `(r, c)` joins vertices `(r, c)` and `(r, c+1)` and has
/// index `r·L + c`; vertical edge `(r, c)` joins `(r, c)` and `(r+1, c)` and
/// has index `L² + r·L + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ToricLayout {
    l: usize,
}

impl ToricLayout {
    pub fn new(l: usize) -> Result<Self> {
        if l < 2 {
            return Err(Error::Parameter(format!(
                "Toric lattice size must be at least 2, got {l}"
            )));
        }
        Ok(ToricLayout { l })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn qubits(&self) -> usize {
        2 * self.l * self.l
    }

    pub fn horizontal(&self, r: usize, c: usize) -> usize {
        (r % self.l) * self.l + c % self.l
    }

    pub fn vertical(&self, r: usize, c: usize) -> usize {
        self.l * self.l + (r % self.l) * self.l + c % self.l
    }

    /// The four edges meeting at vertex `(r, c)`.
    pub fn star(&self, r: usize, c: usize) -> [usize; 4] {
        let l = self.l;
        [
            self.horizontal(r, c),
            self.horizontal(r, c + l - 1),
            self.vertical(r, c),
            self.vertical(r + l - 1, c),
        ]
    }

    /// The four edges around the face whose top-left vertex is `(r, c)`.
    pub fn plaquette(&self, r: usize, c: usize) -> [usize; 4] {
        [
            self.horizontal(r, c),
            self.horizontal(r + 1, c),
            self.vertical(r, c),
            self.vertical(r, c + 1),
        ]
    }
}

/// Toric code on an `L × L` torus: `L²` star operators (`X` on the four
/// edges at a vertex) followed by `L²` plaquette operators (`Z` around a
/// face), both in row-major order.
pub fn toric_code(l: usize) -> Result<StabilizerCode> {
    let layout = ToricLayout::new(l)?;
    let n = layout.qubits();
    let mut gens = GeneratorList::empty(n);
    for r in 0..l {
        for c in 0..l {
            gens.push(PauliOperator::on_qubits(n, layout.star(r, c), 'X')?)?;
        }
    }
    for r in 0..l {
        for c in 0..l {
            gens.push(PauliOperator::on_qubits(n, layout.plaquette(r, c), 'Z')?)?;
        }
    }
    StabilizerCode::with_origin(gens, CodeOrigin::Toric { l })
}

/// `⟨Z_i Z_{i+1}⟩` on `n` qubits.
pub fn repetition_code(n: usize) -> Result<StabilizerCode> {
    if n < 2 {
        return Err(Error::Parameter(format!(
            "repetition code needs at least 2 qubits, got {n}"
        )));
    }
    let gens = GeneratorList::new(
        n,
        (0..n - 1).map(|i| PauliOperator::on_qubits(n, [i, i + 1], 'Z').expect("in range")),
    )?;
    StabilizerCode::with_origin(gens, CodeOrigin::Repetition { n })
}

/// The `[[5,1,3]]` code with generators `XZZXI` and its cyclic shifts.
pub fn five_qubit_code() -> StabilizerCode {
    let gens = GeneratorList::parse(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]).expect("valid strings");
    StabilizerCode::with_origin(gens, CodeOrigin::FiveQubit).expect("generators commute")
}

/// A Toric region with its declared winding label `(w_x, w_y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricRegion {
    pub name: String,
    pub subset: QubitSubset,
    pub winding: (u8, u8),
}

#[derive(Clone, Debug)]
pub struct ToricRegions {
    /// Horizontal and vertical edges of row 0; winds in `x`.
    pub qx: ToricRegion,
    /// Vertical and horizontal edges of column 0; winds in `y`.
    pub qy: ToricRegion,
    /// `Q_x ∪ Q_y`.
    pub r1: ToricRegion,
}

pub fn toric_regions(l: usize) -> Result<ToricRegions> {
    let layout = ToricLayout::new(l)?;
    let n = layout.qubits();
    let qx = QubitSubset::new(n, (0..l).flat_map(|c| [layout.horizontal(0, c), layout.vertical(0, c)]))?;
    let qy = QubitSubset::new(n, (0..l).flat_map(|r| [layout.vertical(r, 0), layout.horizontal(r, 0)]))?;
    let r1 = qx.union(&qy)?;
    Ok(ToricRegions {
        qx: ToricRegion {
            name: "Qx".into(),
            subset: qx,
            winding: (1, 0),
        },
        qy: ToricRegion {
            name: "Qy".into(),
            subset: qy,
            winding: (0, 1),
        },
        r1: ToricRegion {
            name: "R1".into(),
            subset: r1,
            winding: (1, 1),
        },
    })
}

/// The `2·n_x·n_y` edges of the `n_x × n_y` block of faces whose top-left
/// vertex is `(0, 0)`: for each face, its top and left edge.
pub fn toric_rectangle(l: usize, nx: usize, ny: usize) -> Result<ToricRegion> {
    let layout = ToricLayout::new(l)?;
    if nx == 0 || ny == 0 {
        return Err(Error::Parameter("rectangle sides must be at least 1".into()));
    }
    if nx >= l || ny >= l {
        return Err(Error::Parameter(format!(
            "rectangle {nx}x{ny} wraps the {l}x{l} lattice; sides must be smaller than L"
        )));
    }
    let subset = QubitSubset::new(
        layout.qubits(),
        (0..ny).flat_map(|r| (0..nx).flat_map(move |c| [layout.horizontal(r, c), layout.vertical(r, c)])),
    )?;
    Ok(ToricRegion {
        name: format!("rect:{nx}x{ny}"),
        subset,
        winding: (0, 0),
    })
}

/// Samples `g` independent commuting generators on `n` qubits.
///
/// Each new generator is a uniformly random element of the centralizer of
/// the ones chosen so far, rejected while it lies in their span.
pub fn random_stabilizer_code<R: Rng + ?Sized>(n: usize, g: usize, rng: &mut R) -> Result<StabilizerCode> {
    if n == 0 || g > n {
        return Err(Error::Parameter(format!(
            "cannot place {g} independent commuting generators on {n} qubits"
        )));
    }
    let all = QubitSubset::full(n);
    let mut gens = GeneratorList::empty(n);
    while gens.len() < g {
        let basis = centralizer_within(&all, gens.as_slice())?;
        let pick = BitVector::from_indices(basis.len(), (0..basis.len()).filter(|_| rng.random_bool(0.5)));
        let mut candidate = PauliOperator::identity(n);
        for i in pick.iter_ones() {
            candidate.mul_assign(&basis[i]);
        }
        if in_group(&candidate, &gens)?.is_none() {
            gens.push(candidate)?;
        }
    }
    StabilizerCode::new(gens)
}

/// Samples a uniformly random subset of `{0, …, n−1}` of the given size.
pub fn random_subset<R: Rng + ?Sized>(n: usize, size: usize, rng: &mut R) -> Result<QubitSubset> {
    if size > n {
        return Err(Error::Parameter(format!("cannot choose {size} of {n} qubits")));
    }
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..size {
        let j = rng.random_range(i..n);
        pool.swap(i, j);
    }
    QubitSubset::new(n, pool[..size].iter().copied())
}
