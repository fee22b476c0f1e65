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

//! Locality of logical operators in stabilizer codes.
//!
//! Given a stabilizer code and a bipartition `(A, B)` of its qubits, the
//! crate classifies every logical operator by whether it can be supported
//! inside `A`, inside `B`, inside both or inside neither, and derives the
//! entanglement-entropy range of the ground space from the same data.

pub mod bipartition;
pub mod bits;
pub mod canonical;
pub mod classify;
pub mod codefile;
pub mod codes;
pub mod entropy;
pub mod error;
pub mod oracle;
pub mod pauli;
pub mod report;

pub use bipartition::{decompose, overlap_group, restriction_stabilizers, BoundaryDecomposition, OverlapGroup};
pub use canonical::{canonicalize, extend, max_abelian_part, CanonicalForm, CanonicalPair, TrackedOperator};
pub use classify::{
    classify, local_pairs, mab_operators, nonlocal_operators, secret_sharing, singleton_check, ClassificationReport,
    Counts, LogicalClass, QubitType, SecretSharing,
};
pub use codes::{five_qubit_code, repetition_code, toric_code, toric_rectangle, toric_regions, StabilizerCode};
pub use entropy::{entropy_bounds, entropy_of_state, EntropyBounds, GroundStateSpec, HalfBits};
pub use error::{Error, Result};
pub use oracle::OracleBudget;
pub use pauli::{commutes, in_group, multiply, reduce, restrict, weight, GeneratorList, PauliOperator, QubitSubset};
