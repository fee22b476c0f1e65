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

use std::ffi::{CStr, CString};
use std::ptr;

use stabloc_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(stabloc_last_error_message()) }
        .to_str()
        .unwrap()
        .to_string()
}

fn owned_code(f: impl FnOnce(*mut *mut StablocCode) -> StablocStatus) -> *mut StablocCode {
    let mut code = ptr::null_mut();
    assert_eq!(f(&mut code), StablocStatus::Ok, "{}", last_error());
    assert!(!code.is_null());
    code
}

#[test]
fn repetition_round_trip() {
    unsafe {
        let text = CString::new("qubits 3\nstab ZZI\nstab IZZ\n").unwrap();
        let code = owned_code(|out| stabloc_code_from_text(text.as_ptr(), out));
        assert_eq!((stabloc_code_qubits(code), stabloc_code_logical_qubits(code)), (3, 1));

        let region = [0usize];
        let mut report = ptr::null_mut();
        assert_eq!(
            stabloc_classify(code, region.as_ptr(), 1, &mut report),
            StablocStatus::Ok
        );
        let mut counts = StablocCounts::default();
        assert_eq!(stabloc_report_counts(report, &mut counts), StablocStatus::Ok);
        assert_eq!(
            (counts.m_ab, counts.m_phi, counts.g_a, counts.g_b, counts.g_sab),
            (1, 1, 1, 1, 1)
        );

        let mut json = ptr::null_mut();
        assert_eq!(stabloc_report_json(report, &mut json), StablocStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert_eq!(v["operators"]["deltas"][0], "XXX");
        stabloc_string_free(json);
        stabloc_report_free(report);

        let mut bounds = StablocEntropyBounds::default();
        assert_eq!(
            stabloc_entropy_bounds(code, region.as_ptr(), 1, &mut bounds),
            StablocStatus::Ok
        );
        assert_eq!((bounds.e_min, bounds.e_max), (0.0, 1.0));

        let mut d = 0;
        assert_eq!(stabloc_distance(code, &mut d), StablocStatus::Ok);
        assert_eq!(d, 1);
        stabloc_code_free(code);
    }
}

#[test]
fn toric_named_region() {
    unsafe {
        let code = owned_code(|out| stabloc_code_toric(4, out));
        let region = CString::new("toric:R1").unwrap();
        let mut report = ptr::null_mut();
        assert_eq!(
            stabloc_classify_region(code, region.as_ptr(), &mut report),
            StablocStatus::Ok
        );
        let mut c = StablocCounts::default();
        stabloc_report_counts(report, &mut c);
        assert_eq!((c.g_a, c.g_b, c.m_a), (4, 0, 4));
        stabloc_report_free(report);
        stabloc_code_free(code);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut code = ptr::null_mut();
        assert_eq!(stabloc_code_toric(1, &mut code), StablocStatus::ParameterError);
        assert!(code.is_null());
        assert!(last_error().contains("at least 2"));

        let bad = CString::new("qubits 2\nstab XI\nstab ZI\n").unwrap();
        assert_eq!(
            stabloc_code_from_text(bad.as_ptr(), &mut code),
            StablocStatus::NonCommuting
        );
        let garbage = CString::new("hello").unwrap();
        assert_eq!(
            stabloc_code_from_text(garbage.as_ptr(), &mut code),
            StablocStatus::ParseError
        );
        assert_eq!(
            stabloc_code_from_text(ptr::null(), &mut code),
            StablocStatus::NullPointer
        );
        let invalid = [0xffu8, 0];
        assert_eq!(
            stabloc_code_from_text(invalid.as_ptr().cast(), &mut code),
            StablocStatus::InvalidUtf8
        );

        let bell_text = CString::new("qubits 2\nstab XX\nstab ZZ\n").unwrap();
        let bell = owned_code(|out| stabloc_code_from_text(bell_text.as_ptr(), out));
        assert!(last_error().is_empty());
        let mut d = 0;
        assert_eq!(stabloc_distance(bell, &mut d), StablocStatus::UndefinedDistance);
        let mut report = ptr::null_mut();
        assert_eq!(
            stabloc_classify(bell, ptr::null(), 3, &mut report),
            StablocStatus::NullPointer
        );
        let far = [5usize];
        assert_eq!(
            stabloc_classify(bell, far.as_ptr(), 1, &mut report),
            StablocStatus::ParameterError
        );
        assert_eq!(
            stabloc_classify(ptr::null(), far.as_ptr(), 1, &mut report),
            StablocStatus::NullPointer
        );
        assert_eq!(stabloc_classify(bell, ptr::null(), 0, &mut report), StablocStatus::Ok);
        stabloc_report_free(report);
        stabloc_code_free(bell);

        assert_eq!(stabloc_code_qubits(ptr::null()), 0);
        stabloc_code_free(ptr::null_mut());
        stabloc_report_free(ptr::null_mut());
        stabloc_string_free(ptr::null_mut());
    }
}
