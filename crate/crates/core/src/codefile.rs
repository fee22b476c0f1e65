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

//! Text formats for codes and regions.
//!
//! A code file looks like
//!
//! ```text
//! # generated-by: toric L=3
//! qubits 18
//! stab XXIIII...
//! ```
//!
//! `#` starts a comment line. The `generated-by` comment is what allows
//! named Toric regions to be used with a code read back from disk.

use std::fmt::Write as _;

use crate::codes::{
    five_qubit_code, repetition_code, toric_code, toric_rectangle, toric_regions, CodeOrigin, StabilizerCode,
};
use crate::error::{Error, Result};
use crate::pauli::{GeneratorList, PauliOperator, QubitSubset};

const GENERATED_BY: &str = "generated-by:";

fn parse_err<T>(line: usize, msg: impl std::fmt::Display) -> Result<T> {
    Err(Error::Parse(format!("line {line}: {msg}")))
}

fn origin_from_header(value: &str) -> Option<CodeOrigin> {
    let mut words = value.split_whitespace();
    let kind = words.next()?;
    let param = |w: Option<&str>, key: &str| w?.strip_prefix(key)?.parse::<usize>().ok();
    match kind {
        "toric" => Some(CodeOrigin::Toric {
            l: param(words.next(), "L=")?,
        }),
        "repetition" => Some(CodeOrigin::Repetition {
            n: param(words.next(), "n=")?,
        }),
        "five-qubit" => Some(CodeOrigin::FiveQubit),
        _ => None,
    }
}

fn header_for(origin: CodeOrigin) -> Option<String> {
    match origin {
        CodeOrigin::Toric { l } => Some(format!("toric L={l}")),
        CodeOrigin::Repetition { n } => Some(format!("repetition n={n}")),
        CodeOrigin::FiveQubit => Some("five-qubit".into()),
        CodeOrigin::Custom => None,
    }
}

fn reference_code(origin: CodeOrigin) -> Result<Option<StabilizerCode>> {
    Ok(match origin {
        CodeOrigin::Toric { l } => Some(toric_code(l)?),
        CodeOrigin::Repetition { n } => Some(repetition_code(n)?),
        CodeOrigin::FiveQubit => Some(five_qubit_code()),
        CodeOrigin::Custom => None,
    })
}

/// Parses a code file. A `generated-by` header is honoured only when the
/// stabilizer lines match the named construction exactly.
pub fn parse_code(text: &str) -> Result<StabilizerCode> {
    let mut qubits: Option<usize> = None;
    let mut origin = CodeOrigin::Custom;
    let mut gens: Vec<PauliOperator> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(value) = comment.trim().strip_prefix(GENERATED_BY) {
                match origin_from_header(value) {
                    Some(o) => origin = o,
                    None => return parse_err(lineno, format!("unknown generator header `{}`", value.trim())),
                }
            }
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap_or_default();
        let value = words.next();
        if words.next().is_some() {
            return parse_err(lineno, "trailing text");
        }
        match (keyword, value, qubits) {
            ("qubits", Some(v), None) => match v.parse::<usize>() {
                Ok(n) if n > 0 => qubits = Some(n),
                _ => return parse_err(lineno, format!("bad qubit count `{v}`")),
            },
            ("qubits", _, Some(_)) => return parse_err(lineno, "repeated `qubits` line"),
            ("stab", Some(v), Some(n)) => {
                let p: PauliOperator = v.parse().map_err(|e| Error::Parse(format!("line {lineno}: {e}")))?;
                if p.n() != n {
                    return parse_err(lineno, format!("stabilizer has length {}, expected {n}", p.n()));
                }
                gens.push(p);
            }
            ("stab", _, None) => return parse_err(lineno, "`stab` before `qubits`"),
            _ => return parse_err(lineno, format!("unrecognized line `{line}`")),
        }
    }
    let Some(n) = qubits else {
        return Err(Error::Parse("missing `qubits` line".into()));
    };
    if gens.is_empty() {
        return Err(Error::Parse("no `stab` lines".into()));
    }
    let list = GeneratorList::new(n, gens.iter().cloned())?;
    if let Some(reference) = reference_code(origin)? {
        if reference.generators().as_slice() != gens.as_slice() {
            return Err(Error::Parse("stabilizers do not match the generated-by header".into()));
        }
    }
    StabilizerCode::with_origin(list, origin)
}

/// Renders a code in the format read by [`parse_code`].
pub fn format_code(code: &StabilizerCode) -> String {
    let mut out = String::new();
    if let Some(h) = header_for(code.origin()) {
        writeln!(out, "# {GENERATED_BY} {h}").unwrap();
    }
    writeln!(out, "qubits {}", code.n()).unwrap();
    for g in code.generators() {
        writeln!(out, "stab {g}").unwrap();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedRegion {
    Qx,
    Qy,
    R1,
    Rect { nx: usize, ny: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegionSpec {
    Indices(Vec<usize>),
    /// `@path`: one index per line; blank and `#` lines ignored.
    File(String),
    Toric(NamedRegion),
}

fn parse_indices<'a, I: Iterator<Item = &'a str>>(parts: I) -> Result<Vec<usize>> {
    parts
        .map(str::trim)
        .filter(|s| !s.is_empty() && !s.starts_with('#'))
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad qubit index `{s}`")))
        })
        .collect()
}

impl RegionSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(path) = s.strip_prefix('@') {
            return Ok(RegionSpec::File(path.to_string()));
        }
        if let Some(name) = s.strip_prefix("toric:") {
            let named = match name {
                "Qx" => NamedRegion::Qx,
                "Qy" => NamedRegion::Qy,
                "R1" => NamedRegion::R1,
                _ => {
                    let dims = name
                        .strip_prefix("rect:")
                        .and_then(|d| d.split_once('x'))
                        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)));
                    match dims {
                        Some((nx, ny)) => NamedRegion::Rect { nx, ny },
                        None => return Err(Error::Parse(format!("unknown Toric region `{name}`"))),
                    }
                }
            };
            return Ok(RegionSpec::Toric(named));
        }
        Ok(RegionSpec::Indices(parse_indices(s.split(','))?))
    }

    pub fn resolve(&self, code: &StabilizerCode) -> Result<QubitSubset> {
        let n = code.n();
        match self {
            RegionSpec::Indices(v) => QubitSubset::new(n, v.iter().copied()),
            RegionSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("cannot read region file {path}: {e}")))?;
                QubitSubset::new(n, parse_indices(text.lines())?)
            }
            RegionSpec::Toric(named) => {
                let CodeOrigin::Toric { l } = code.origin() else {
                    return Err(Error::Parameter(
                        "named Toric regions need a generated Toric code".into(),
                    ));
                };
                Ok(match named {
                    NamedRegion::Qx => toric_regions(l)?.qx.subset,
                    NamedRegion::Qy => toric_regions(l)?.qy.subset,
                    NamedRegion::R1 => toric_regions(l)?.r1.subset,
                    NamedRegion::Rect { nx, ny } => toric_rectangle(l, *nx, *ny)?.subset,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_generated_codes() {
        for code in [toric_code(3).unwrap(), repetition_code(4).unwrap(), five_qubit_code()] {
            let text = format_code(&code);
            let back = parse_code(&text).unwrap();
            assert_eq!(back.generators(), code.generators());
            assert_eq!(back.origin(), code.origin());
            assert_eq!(format_code(&back), text);
        }
    }

    #[test]
    fn toric_file_shape() {
        let text = format_code(&toric_code(3).unwrap());
        assert!(text.contains("qubits 18\n"));
        assert_eq!(text.lines().filter(|l| l.starts_with("stab ")).count(), 18);
    }

    #[test]
    fn custom_code_with_comments() {
        let code = parse_code("# a Bell pair\nqubits 2\n\nstab XX\n# middle\nstab ZZ\n").unwrap();
        assert_eq!(code.k(), 0);
        assert_eq!(code.origin(), CodeOrigin::Custom);
    }

    #[test]
    fn rejects_bad_files() {
        for text in [
            "stab XX\n",
            "qubits 2\n",
            "qubits 2\nstab XXX\n",
            "qubits 2\nstab XQ\n",
            "qubits two\nstab XX\n",
            "qubits 2\nqubits 2\nstab XX\n",
            "qubits 2\nstab XX extra\n",
            "# generated-by: toric L=2\nqubits 2\nstab XX\n",
            "# generated-by: moebius\nqubits 2\nstab XX\n",
        ] {
            assert!(matches!(parse_code(text), Err(Error::Parse(_))), "{text:?}");
        }
        assert!(matches!(
            parse_code("qubits 2\nstab XI\nstab ZI\n"),
            Err(Error::NonCommuting(0, 1))
        ));
    }

    #[test]
    fn region_specs() {
        let toric = toric_code(3).unwrap();
        assert_eq!(RegionSpec::parse("0, 5,1").unwrap(), RegionSpec::Indices(vec![0, 5, 1]));
        assert_eq!(RegionSpec::parse("toric:Qx").unwrap().resolve(&toric).unwrap().len(), 6);
        assert_eq!(
            RegionSpec::parse("toric:R1").unwrap().resolve(&toric).unwrap().len(),
            10
        );
        assert_eq!(
            RegionSpec::parse("toric:rect:2x1")
                .unwrap()
                .resolve(&toric)
                .unwrap()
                .len(),
            4
        );
        assert!(RegionSpec::parse("toric:disc").is_err());
        assert!(RegionSpec::parse("0,a").is_err());
        let rep = repetition_code(3).unwrap();
        assert!(RegionSpec::parse("toric:Qx").unwrap().resolve(&rep).is_err());
        assert!(RegionSpec::parse("3").unwrap().resolve(&rep).is_err());
        assert!(RegionSpec::parse("").unwrap().resolve(&rep).unwrap().is_empty());
    }
}
