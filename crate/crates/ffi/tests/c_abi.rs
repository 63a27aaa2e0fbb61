use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use liekit_ffi::*;

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { liekit_string_free(p) };
    s
}

fn last_error() -> String {
    let p = liekit_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn cartan_round_trip() {
    let label = CString::new("G2").unwrap();
    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { liekit_algebra_from_cartan(label.as_ptr(), 0, &mut alg) }, LiekitStatus::Ok);
    assert_eq!(unsafe { liekit_algebra_dim(alg) }, 14);

    let mut failures = usize::MAX;
    assert_eq!(unsafe { liekit_algebra_check(alg, 1, 0, 0, &mut failures) }, LiekitStatus::Ok);
    assert_eq!(failures, 0);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { liekit_algebra_classify(alg, ptr::null(), 0, &mut out) }, LiekitStatus::Ok);
    assert_eq!(take_string(out), r#"[{"rank":2,"type":"G"}]"#);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { liekit_algebra_to_json(alg, &mut json) }, LiekitStatus::Ok);
    let text = CString::new(take_string(json)).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { liekit_algebra_from_json(text.as_ptr(), &mut back) }, LiekitStatus::Ok);
    assert_eq!(unsafe { liekit_algebra_dim(back) }, 14);
    unsafe {
        liekit_algebra_free(back);
        liekit_algebra_free(alg);
    }
}

#[test]
fn family_and_explicit_cartan_basis() {
    let name = CString::new("sl").unwrap();
    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { liekit_algebra_from_family(name.as_ptr(), 3, &mut alg) }, LiekitStatus::Ok);
    assert_eq!(unsafe { liekit_algebra_dim(alg) }, 8);
    let idx = [3usize, 4];
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { liekit_algebra_classify(alg, idx.as_ptr(), idx.len(), &mut out) }, LiekitStatus::Ok);
    assert_eq!(take_string(out), r#"[{"rank":2,"type":"A"}]"#);
    unsafe { liekit_algebra_free(alg) };
}

#[test]
fn error_codes() {
    let mut alg = ptr::null_mut();
    let bad = CString::new("{\"basis\": [").unwrap();
    assert_eq!(unsafe { liekit_algebra_from_json(bad.as_ptr(), &mut alg) }, LiekitStatus::InvalidInput);
    assert!(last_error().contains("line 1"));
    assert!(alg.is_null());

    assert_eq!(unsafe { liekit_algebra_from_json(ptr::null(), &mut alg) }, LiekitStatus::NullPointer);
    assert_eq!(unsafe { liekit_algebra_dim(ptr::null()) }, 0);

    let label = CString::new("E9").unwrap();
    assert_eq!(unsafe { liekit_algebra_from_cartan(label.as_ptr(), 0, &mut alg) }, LiekitStatus::InvalidInput);

    let upper = CString::new("upper").unwrap();
    assert_eq!(unsafe { liekit_algebra_from_family(upper.as_ptr(), 2, &mut alg) }, LiekitStatus::Ok);
    let idx = [0usize, 2];
    let mut out = ptr::null_mut();
    let s = unsafe { liekit_algebra_classify(alg, idx.as_ptr(), idx.len(), &mut out) };
    assert_eq!(s, LiekitStatus::NotSemisimple);
    assert!(out.is_null());
    unsafe { liekit_algebra_free(alg) };

    let broken = CString::new(r#"{"basis":["x","y","z"],"bracket":{"0,1":[[2,"1"]],"1,2":[[0,"1"]],"0,2":[[2,"1"]]}}"#).unwrap();
    assert_eq!(unsafe { liekit_algebra_from_json(broken.as_ptr(), &mut alg) }, LiekitStatus::Ok);
    let mut failures = 0;
    assert_eq!(unsafe { liekit_algebra_check(alg, 1, 0, 0, &mut failures) }, LiekitStatus::CheckFailed);
    assert_eq!(failures, 1);
    assert!(last_error().contains("(0, 1, 2)"));
    unsafe { liekit_algebra_free(alg) };
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/liekit.h")).unwrap();
    for f in [
        "liekit_last_error",
        "liekit_algebra_from_json",
        "liekit_algebra_from_cartan",
        "liekit_algebra_from_family",
        "liekit_algebra_dim",
        "liekit_algebra_to_json",
        "liekit_algebra_check",
        "liekit_algebra_classify",
        "liekit_string_free",
        "liekit_algebra_free",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/liekit.h");
    let Ok(status) = Command::new("cc").args(["-fsyntax-only", "-x", "c", "-std=c99"]).arg(&header).status() else {
        eprintln!("no C compiler available; skipped");
        return;
    };
    assert!(status.success());
}
