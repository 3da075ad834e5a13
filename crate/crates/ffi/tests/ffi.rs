use std::ffi::{c_char, CStr, CString};
use std::ptr;

use ddrel_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { ddrel_string_free(p) };
    s
}

fn last_error() -> String {
    let p = ddrel_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn spec(json: &str) -> Result<*mut DdrelSpec, DdrelStatus> {
    let c = CString::new(json).unwrap();
    let mut out = ptr::null_mut();
    match unsafe { ddrel_spec_from_json(c.as_ptr(), &mut out) } {
        DdrelStatus::Ok => Ok(out),
        s => Err(s),
    }
}

const LEGENDRE: &str = r#"{"family":"V","m":1,"lambda":"1","mu":"1","upper":[],"lower":["1"]}"#;

#[test]
fn build_and_check_legendre() {
    let s = spec(LEGENDRE).unwrap();
    for kind in [DdrelKind::X, DdrelKind::D] {
        let mut rel = ptr::null_mut();
        assert_eq!(
            unsafe { ddrel_relation_build(s, kind, &mut rel) },
            DdrelStatus::Ok
        );
        let mut degenerate = true;
        assert_eq!(
            unsafe { ddrel_relation_is_degenerate(rel, &mut degenerate) },
            DdrelStatus::Ok
        );
        assert!(!degenerate);

        let mut json = ptr::null_mut();
        assert_eq!(
            unsafe { ddrel_relation_to_json(rel, &mut json) },
            DdrelStatus::Ok
        );
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["degenerate"], false);

        let mut passed = false;
        let mut report = ptr::null_mut();
        let st = unsafe { ddrel_relation_check(rel, s, 0, 10, 20, &mut passed, &mut report) };
        assert_eq!(st, DdrelStatus::Ok);
        assert!(passed);
        let v: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
        assert_eq!(v["summary"]["passed"], 11);
        unsafe { ddrel_relation_free(rel) };
    }
    unsafe { ddrel_spec_free(s) };
}

#[test]
fn check_without_report() {
    let s = spec(LEGENDRE).unwrap();
    let mut rel = ptr::null_mut();
    unsafe { ddrel_relation_build(s, DdrelKind::X, &mut rel) };
    let mut passed = false;
    let st = unsafe { ddrel_relation_check(rel, s, 0, 3, 6, &mut passed, ptr::null_mut()) };
    assert_eq!(st, DdrelStatus::Ok);
    assert!(passed);
    unsafe {
        ddrel_relation_free(rel);
        ddrel_spec_free(s);
    }
}

#[test]
fn error_codes_and_messages() {
    assert_eq!(spec("{").unwrap_err(), DdrelStatus::Json);
    assert!(!last_error().is_empty());

    let same = r#"{"family":"III","m":1,"lambda":"1","mu":"1","upper":[],"lower":[]}"#;
    assert_eq!(spec(same).unwrap_err(), DdrelStatus::InvalidSpec);
    assert!(last_error().contains("distinct"));

    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { ddrel_spec_from_json(ptr::null(), &mut out) },
        DdrelStatus::NullPointer
    );
    assert_eq!(
        unsafe { ddrel_relation_build(ptr::null(), DdrelKind::X, ptr::null_mut()) },
        DdrelStatus::NullPointer
    );

    let bad = CString::new("S + (").unwrap();
    let mut op = ptr::null_mut();
    assert_eq!(
        unsafe { ddrel_operator_parse(bad.as_ptr(), &mut op) },
        DdrelStatus::Parse
    );

    let s = spec(LEGENDRE).unwrap();
    let mut rel = ptr::null_mut();
    unsafe { ddrel_relation_build(s, DdrelKind::X, &mut rel) };
    let mut passed = false;
    let st = unsafe { ddrel_relation_check(rel, s, 5, 2, 10, &mut passed, ptr::null_mut()) };
    assert_eq!(st, DdrelStatus::InvalidArgument);
    unsafe {
        ddrel_relation_free(rel);
        ddrel_spec_free(s);
    }
}

#[test]
fn success_clears_last_error() {
    let _ = spec("[]");
    assert!(!ddrel_last_error().is_null());
    let s = spec(LEGENDRE).unwrap();
    assert!(ddrel_last_error().is_null());
    unsafe { ddrel_spec_free(s) };
}

#[test]
fn operator_product_and_text() {
    let parse = |t: &str| {
        let c = CString::new(t).unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { ddrel_operator_parse(c.as_ptr(), &mut out) },
            DdrelStatus::Ok
        );
        out
    };
    let a = parse("S");
    let b = parse("n");
    let mut ab = ptr::null_mut();
    assert_eq!(
        unsafe { ddrel_operator_mul(a, b, &mut ab) },
        DdrelStatus::Ok
    );
    let mut text = ptr::null_mut();
    assert_eq!(
        unsafe { ddrel_operator_to_string(ab, &mut text) },
        DdrelStatus::Ok
    );
    assert_eq!(take_string(text), "(n+1)*S");
    unsafe {
        ddrel_operator_free(a);
        ddrel_operator_free(b);
        ddrel_operator_free(ab);
        ddrel_operator_free(ptr::null_mut());
        ddrel_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_interface() {
    let h =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/ddrel.h")).unwrap();
    for name in [
        "ddrel_last_error",
        "ddrel_string_free",
        "ddrel_spec_from_json",
        "ddrel_relation_build",
        "ddrel_relation_check",
        "ddrel_relation_to_json",
        "ddrel_operator_parse",
        "ddrel_operator_mul",
        "ddrel_operator_to_string",
        "typedef struct DdrelRelation DdrelRelation",
        "DDREL_STATUS_OK = 0",
    ] {
        assert!(h.contains(name), "{name}");
    }
}
