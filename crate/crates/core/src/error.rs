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

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} qubits, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("stabilizer generators {0} and {1} do not commute")]
    NonCommuting(usize, usize),

    #[error("invalid ground-state specification: {0}")]
    Specification(String),

    #[error("oracle budget exceeded: {0}")]
    Budget(String),

    #[error("code distance is undefined for a code without logical qubits")]
    UndefinedDistance,

    /// A count identity or commutation relation that must hold for every
    /// valid input failed. Always an implementation bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}
