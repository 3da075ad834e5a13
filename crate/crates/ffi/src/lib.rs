//! C interface to the relation builder and checker.
//!
//! Objects are opaque handles released with their `_free` function.
//! Functions return a `DdrelStatus`; on failure the message is available
//! from `ddrel_last_error` until the next call on the same thread.
//! Strings returned through out-parameters are released with
//! `ddrel_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ddrel::hypergeom::FamilySpec;
use ddrel::json::{relation_to_json, report_to_json, spec_from_json};
use ddrel::ore::OreOperator;
use ddrel::theorem::{build_relation, Relation, RelationKind};
use ddrel::verify::{check_relation, CheckConfig};
use ddrel::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DdrelStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidSpec = 4,
    Degenerate = 5,
    Json = 6,
    InvalidArgument = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DdrelKind {
    X = 0,
    D = 1,
}

pub struct DdrelSpec(FamilySpec);
pub struct DdrelRelation(Relation);
pub struct DdrelOperator(OreOperator);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> DdrelStatus {
    match e {
        Error::Parse { .. } => DdrelStatus::Parse,
        Error::InvalidSpec(_) | Error::UndefinedSeries { .. } => DdrelStatus::InvalidSpec,
        Error::DegenerateFactor { .. } | Error::UnexpectedDegeneracy(_) => DdrelStatus::Degenerate,
        Error::Json(_) => DdrelStatus::Json,
        Error::InvalidArgument(_) | Error::Config(_) | Error::EntryConstraint { .. } => {
            DdrelStatus::InvalidArgument
        }
        Error::ZeroDivisor | Error::ZeroOperator | Error::OrderMismatch(..) => {
            DdrelStatus::Internal
        }
    }
}

struct Fail(DdrelStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> DdrelStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DdrelStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            DdrelStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(DdrelStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(DdrelStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn obj<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(DdrelStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(DdrelStatus::NullPointer, "null out-parameter".into()));
    }
    *out = Box::into_raw(Box::new(v));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(DdrelStatus::NullPointer, "null out-parameter".into()));
    }
    *out = CString::new(s)
        .map_err(|_| Fail(DdrelStatus::Internal, "interior nul".into()))?
        .into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or null.
#[no_mangle]
pub extern "C" fn ddrel_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn ddrel_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{family, m, lambda, mu?, upper, lower}`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ddrel_spec_from_json(
    json: *const c_char,
    out: *mut *mut DdrelSpec,
) -> DdrelStatus {
    guard(|| {
        let v: serde_json::Value = serde_json::from_str(str_arg(json)?).map_err(Error::from)?;
        put(out, DdrelSpec(spec_from_json(&v)?))
    })
}

/// # Safety
/// `spec` must be null or a handle from `ddrel_spec_from_json`.
#[no_mangle]
pub unsafe extern "C" fn ddrel_spec_free(spec: *mut DdrelSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// # Safety
/// `spec` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ddrel_relation_build(
    spec: *const DdrelSpec,
    kind: DdrelKind,
    out: *mut *mut DdrelRelation,
) -> DdrelStatus {
    guard(|| {
        let kind = match kind {
            DdrelKind::X => RelationKind::X,
            DdrelKind::D => RelationKind::D,
        };
        put(out, DdrelRelation(build_relation(&obj(spec)?.0, kind)?))
    })
}

/// # Safety
/// `rel` must be null or a handle from `ddrel_relation_build`.
#[no_mangle]
pub unsafe extern "C" fn ddrel_relation_free(rel: *mut DdrelRelation) {
    if !rel.is_null() {
        drop(Box::from_raw(rel));
    }
}

/// # Safety
/// `rel` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ddrel_relation_is_degenerate(
    rel: *const DdrelRelation,
    out: *mut bool,
) -> DdrelStatus {
    guard(|| {
        let d = obj(rel)?.0.degenerate;
        if out.is_null() {
            return Err(Fail(DdrelStatus::NullPointer, "null out-parameter".into()));
        }
        *out = d;
        Ok(())
    })
}

/// # Safety
/// `rel` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ddrel_relation_to_json(
    rel: *const DdrelRelation,
    out: *mut *mut c_char,
) -> DdrelStatus {
    guard(|| put_string(out, relation_to_json(&obj(rel)?.0).to_string()))
}

/// Checks `rel` on the series of `spec` for `n_min..=n_max` at order `order`.
/// `passed` receives the verdict and `report_json`, when not null, the report.
///
/// # Safety
/// Handles must be live; `passed` writable; `report_json` null or writable.
#[no_mangle]
pub unsafe extern "C" fn ddrel_relation_check(
    rel: *const DdrelRelation,
    spec: *const DdrelSpec,
    n_min: i64,
    n_max: i64,
    order: usize,
    passed: *mut bool,
    report_json: *mut *mut c_char,
) -> DdrelStatus {
    guard(|| {
        let (rel, spec) = (&obj(rel)?.0, &obj(spec)?.0);
        if passed.is_null() {
            return Err(Fail(DdrelStatus::NullPointer, "null out-parameter".into()));
        }
        let report = check_relation(rel, spec, &CheckConfig::new(n_min, n_max, order)?)?;
        *passed = report.is_pass();
        if !report_json.is_null() {
            put_string(
                report_json,
                report_to_json(&report, Some(rel), Some(spec)).to_string(),
            )?;
        }
        Ok(())
    })
}

/// Parses `c_J(n)*S^J + ... + c_0(n)`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ddrel_operator_parse(
    text: *const c_char,
    out: *mut *mut DdrelOperator,
) -> DdrelStatus {
    guard(|| put(out, DdrelOperator(str_arg(text)?.parse()?)))
}

/// The product `a·b`.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ddrel_operator_mul(
    a: *const DdrelOperator,
    b: *const DdrelOperator,
    out: *mut *mut DdrelOperator,
) -> DdrelStatus {
    guard(|| put(out, DdrelOperator(&obj(a)?.0 * &obj(b)?.0)))
}

/// # Safety
/// `op` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ddrel_operator_to_string(
    op: *const DdrelOperator,
    out: *mut *mut c_char,
) -> DdrelStatus {
    guard(|| put_string(out, obj(op)?.0.to_string()))
}

/// # Safety
/// `op` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ddrel_operator_free(op: *mut DdrelOperator) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}
