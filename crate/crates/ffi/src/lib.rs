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

//! C ABI for stabilizer-locality.
//!
//! Conventions:
//!
//! * Every fallible function returns a [`StablocStatus`] and writes its
//!   result through an out-pointer. On failure the out-pointer is left
//!   untouched and [`stabloc_last_error_message`] describes the problem.
//! * Handles are opaque. Anything returned through `*_out` must be released
//!   with the matching `*_free` function.
//! * Panics never cross the boundary; they surface as `STABLOC_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use stabilizer_locality::classify::{classify, ClassificationReport};
use stabilizer_locality::codefile::{parse_code, RegionSpec};
use stabilizer_locality::codes::{five_qubit_code, repetition_code, toric_code, StabilizerCode};
use stabilizer_locality::entropy::entropy_bounds;
use stabilizer_locality::oracle::{brute_distance, OracleBudget};
use stabilizer_locality::pauli::QubitSubset;
use stabilizer_locality::report::classify_json;
use stabilizer_locality::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StablocStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ParameterError = 4,
    DimensionError = 5,
    NonCommuting = 6,
    SpecificationError = 7,
    BudgetExceeded = 8,
    UndefinedDistance = 9,
    InvariantViolated = 10,
    Panic = 11,
}

/// A stabilizer code.
pub struct StablocCode {
    code: StabilizerCode,
}

/// The classification of one bipartition.
pub struct StablocReport {
    code: StabilizerCode,
    report: ClassificationReport,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StablocCounts {
    pub k: usize,
    pub m_a: usize,
    pub m_b: usize,
    pub m_ab: usize,
    pub m_phi: usize,
    pub g_a: usize,
    pub g_b: usize,
    pub g_sa: usize,
    pub g_sb: usize,
    pub g_sab: usize,
}

/// Entropy range in bits.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct StablocEntropyBounds {
    pub e_min: f64,
    pub e_max: f64,
    pub g_sab: usize,
    pub m_phi: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> StablocStatus {
    match e {
        Error::Dimension { .. } => StablocStatus::DimensionError,
        Error::Parse(_) => StablocStatus::ParseError,
        Error::Parameter(_) => StablocStatus::ParameterError,
        Error::NonCommuting(..) => StablocStatus::NonCommuting,
        Error::Specification(_) => StablocStatus::SpecificationError,
        Error::Budget(_) => StablocStatus::BudgetExceeded,
        Error::UndefinedDistance => StablocStatus::UndefinedDistance,
        Error::Invariant(_) => StablocStatus::InvariantViolated,
    }
}

enum Failure {
    Status(StablocStatus, String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn null(what: &str) -> Failure {
    Failure::Status(StablocStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, translating errors and panics into a status.
fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> StablocStatus {
    set_error(String::new());
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => StablocStatus::Ok,
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            StablocStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Status(StablocStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn code_arg<'a>(p: *const StablocCode) -> Result<&'a StabilizerCode, Failure> {
    p.as_ref().map(|c| &c.code).ok_or_else(|| null("code"))
}

unsafe fn region_arg(code: &StabilizerCode, qubits: *const usize, len: usize) -> Result<QubitSubset, Failure> {
    let slice = if len == 0 {
        &[][..]
    } else if qubits.is_null() {
        return Err(null("region"));
    } else {
        std::slice::from_raw_parts(qubits, len)
    };
    Ok(QubitSubset::new(code.n(), slice.iter().copied())?)
}

unsafe fn emit<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Message for the most recent failure on this thread; empty after a
/// success. Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn stabloc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a code file (`qubits N` followed by `stab ...` lines).
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stabloc_code_from_text(text: *const c_char, out: *mut *mut StablocCode) -> StablocStatus {
    guard(|| {
        let code = parse_code(str_arg(text, "text")?)?;
        emit(out, StablocCode { code })
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stabloc_code_toric(l: usize, out: *mut *mut StablocCode) -> StablocStatus {
    guard(|| emit(out, StablocCode { code: toric_code(l)? }))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stabloc_code_repetition(n: usize, out: *mut *mut StablocCode) -> StablocStatus {
    guard(|| {
        emit(
            out,
            StablocCode {
                code: repetition_code(n)?,
            },
        )
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stabloc_code_five_qubit(out: *mut *mut StablocCode) -> StablocStatus {
    guard(|| {
        emit(
            out,
            StablocCode {
                code: five_qubit_code(),
            },
        )
    })
}

/// # Safety
/// `code` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stabloc_code_free(code: *mut StablocCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Number of physical qubits, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stabloc_code_qubits(code: *const StablocCode) -> usize {
    code.as_ref().map_or(0, |c| c.code.n())
}

/// Number of logical qubits, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stabloc_code_logical_qubits(code: *const StablocCode) -> usize {
    code.as_ref().map_or(0, |c| c.code.k())
}

/// Classifies the bipartition whose `A` side is `qubits[0..len]`.
///
/// # Safety
/// `code` must be live, `qubits` must point to `len` values (may be null
/// when `len` is 0), and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stabloc_classify(
    code: *const StablocCode,
    qubits: *const usize,
    len: usize,
    out: *mut *mut StablocReport,
) -> StablocStatus {
    guard(|| {
        let code = code_arg(code)?;
        let a = region_arg(code, qubits, len)?;
        let report = classify(code, &a)?;
        emit(
            out,
            StablocReport {
                code: code.clone(),
                report,
            },
        )
    })
}

/// As [`stabloc_classify`], with the region given in the CLI syntax
/// (`"0,1,5"` or a named Toric region such as `"toric:Qx"`).
///
/// # Safety
/// `code` must be live, `region` nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stabloc_classify_region(
    code: *const StablocCode,
    region: *const c_char,
    out: *mut *mut StablocReport,
) -> StablocStatus {
    guard(|| {
        let code = code_arg(code)?;
        let a = RegionSpec::parse(str_arg(region, "region")?)?.resolve(code)?;
        let report = classify(code, &a)?;
        emit(
            out,
            StablocReport {
                code: code.clone(),
                report,
            },
        )
    })
}

/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stabloc_report_free(report: *mut StablocReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `report` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stabloc_report_counts(report: *const StablocReport, out: *mut StablocCounts) -> StablocStatus {
    guard(|| {
        let r = &report.as_ref().ok_or_else(|| null("report"))?.report;
        let out = out.as_mut().ok_or_else(|| null("output pointer"))?;
        let c = r.counts;
        *out = StablocCounts {
            k: c.k,
            m_a: c.m_a,
            m_b: c.m_b,
            m_ab: c.m_ab,
            m_phi: c.m_phi,
            g_a: c.g_a,
            g_b: c.g_b,
            g_sa: r.g_sa,
            g_sb: r.g_sb,
            g_sab: r.g_sab,
        };
        Ok(())
    })
}

/// The report as JSON, in the same schema as `stabloc classify --format json`.
/// Release the string with [`stabloc_string_free`].
///
/// # Safety
/// `report` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stabloc_report_json(report: *const StablocReport, out: *mut *mut c_char) -> StablocStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| null("report"))?;
        let out = out.as_mut().ok_or_else(|| null("output pointer"))?;
        let text = serde_json::to_string(&classify_json(&r.code, &r.report, Vec::new())).expect("serializable");
        *out = CString::new(text).expect("JSON has no nul bytes").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stabloc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// As [`stabloc_classify`], with `out` pointing to writable storage.
#[no_mangle]
pub unsafe extern "C" fn stabloc_entropy_bounds(
    code: *const StablocCode,
    qubits: *const usize,
    len: usize,
    out: *mut StablocEntropyBounds,
) -> StablocStatus {
    guard(|| {
        let code = code_arg(code)?;
        let a = region_arg(code, qubits, len)?;
        let out = out.as_mut().ok_or_else(|| null("output pointer"))?;
        let b = entropy_bounds(code, &a)?;
        *out = StablocEntropyBounds {
            e_min: b.e_min.as_f64(),
            e_max: b.e_max.as_f64(),
            g_sab: b.g_sab,
            m_phi: b.m_phi,
        };
        Ok(())
    })
}

/// Brute-force code distance with the default search budget.
///
/// # Safety
/// `code` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stabloc_distance(code: *const StablocCode, out: *mut usize) -> StablocStatus {
    guard(|| {
        let code = code_arg(code)?;
        let out = out.as_mut().ok_or_else(|| null("output pointer"))?;
        *out = brute_distance(code, &OracleBudget::default())?;
        Ok(())
    })
}
