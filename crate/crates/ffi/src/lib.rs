//! C interface to liekit.
//!
//! Algebras are opaque handles released with [`liekit_algebra_free`];
//! strings returned through out-parameters are released with
//! [`liekit_string_free`]. Every call returns a [`LiekitStatus`]; on failure
//! [`liekit_last_error`] describes the problem for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use liekit::io::AlgebraDocument;
use liekit::lie::CheckMode;
use liekit::{presets, Error, Status};

/// Result codes; values 0 to 6 match the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiekitStatus {
    Ok = 0,
    CheckFailed = 1,
    InvalidInput = 2,
    BadCartan = 3,
    NotNilpotent = 4,
    NonSplit = 5,
    NotSemisimple = 6,
    NullPointer = 7,
    Internal = 8,
}

impl From<Status> for LiekitStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::Ok => LiekitStatus::Ok,
            Status::CheckFailed => LiekitStatus::CheckFailed,
            Status::Usage => LiekitStatus::InvalidInput,
            Status::BadCartan => LiekitStatus::BadCartan,
            Status::NotNilpotent => LiekitStatus::NotNilpotent,
            Status::NonSplit => LiekitStatus::NonSplit,
            Status::NotSemisimple => LiekitStatus::NotSemisimple,
        }
    }
}

/// Opaque algebra handle.
pub struct LiekitAlgebra {
    doc: AlgebraDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(LiekitStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.status().into(), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(LiekitStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LiekitStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LiekitStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            LiekitStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(LiekitStatus::InvalidInput, format!("{what} is not valid UTF-8")))
}

unsafe fn alg_arg<'a>(p: *const LiekitAlgebra) -> Result<&'a LiekitAlgebra, Failure> {
    p.as_ref().ok_or_else(|| null("algebra"))
}

unsafe fn put_algebra(out: *mut *mut LiekitAlgebra, doc: AlgebraDocument) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(LiekitAlgebra { doc }));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| Failure(LiekitStatus::Internal, "interior NUL in output".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn index_arg(indices: *const usize, len: usize) -> Result<Option<Vec<usize>>, Failure> {
    if len == 0 {
        return Ok(None);
    }
    if indices.is_null() {
        return Err(null("indices"));
    }
    Ok(Some(std::slice::from_raw_parts(indices, len).to_vec()))
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn liekit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses algebra JSON. The axioms are not checked; see
/// [`liekit_algebra_check`].
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn liekit_algebra_from_json(json: *const c_char, out: *mut *mut LiekitAlgebra) -> LiekitStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let doc = AlgebraDocument::from_json(text).map_err(Error::from)?;
        put_algebra(out, doc)
    })
}

/// Chevalley algebra of a named Cartan type, e.g. `"E8"` with `rank` 0,
/// or `"B"` with `rank` 3.
///
/// # Safety
/// `label` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn liekit_algebra_from_cartan(
    label: *const c_char,
    rank: usize,
    out: *mut *mut LiekitAlgebra,
) -> LiekitStatus {
    guard(|| {
        let label = str_arg(label, "label")?;
        let a = presets::cartan_from_label(label, (rank > 0).then_some(rank))?;
        put_algebra(out, presets::construct_cartan(&a)?)
    })
}

/// Classical family by name (`"sl"`, `"sp"`, `"so-jd"`, ...), with the
/// size convention of the command line.
///
/// # Safety
/// `family` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn liekit_algebra_from_family(
    family: *const c_char,
    n: usize,
    out: *mut *mut LiekitAlgebra,
) -> LiekitStatus {
    guard(|| {
        let family = str_arg(family, "family")?;
        put_algebra(out, presets::construct_family(family, n, None)?)
    })
}

/// Dimension, or 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn liekit_algebra_dim(alg: *const LiekitAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.doc.algebra.dim())
}

/// # Safety
/// `alg` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn liekit_algebra_to_json(alg: *const LiekitAlgebra, out: *mut *mut c_char) -> LiekitStatus {
    guard(|| {
        let a = alg_arg(alg)?;
        put_string(out, a.doc.to_json())
    })
}

/// Checks the Jacobi identity on every basis triple when `full` is
/// nonzero, otherwise on `count` triples sampled with `seed`. Returns
/// `CheckFailed` if any triple fails, and stores the number of failing
/// triples in `failures` when it is not null.
///
/// # Safety
/// `alg` must be a live handle; `failures` null or writable.
#[no_mangle]
pub unsafe extern "C" fn liekit_algebra_check(
    alg: *const LiekitAlgebra,
    full: i32,
    seed: u64,
    count: usize,
    failures: *mut usize,
) -> LiekitStatus {
    guard(|| {
        let a = alg_arg(alg)?;
        let mode = if full != 0 { CheckMode::Full } else { CheckMode::Sampled { seed, count } };
        let report = a.doc.algebra.check_axioms(mode);
        if let Some(f) = failures.as_mut() {
            *f = report.failures.len();
        }
        match report.failures.first() {
            None => Ok(()),
            Some(t) => Err(Failure(
                LiekitStatus::CheckFailed,
                format!("Jacobi identity fails on basis triple {:?} ({} failing)", t.triple, report.failures.len()),
            )),
        }
    })
}

/// Simple components as JSON, e.g. `[{"rank":4,"type":"F"}]`. The Cartan
/// subalgebra is spanned by the listed basis vectors; with `len` 0 the
/// algebra's own Cartan indices are used.
///
/// # Safety
/// `alg` must be a live handle, `indices` readable for `len` entries, and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn liekit_algebra_classify(
    alg: *const LiekitAlgebra,
    indices: *const usize,
    len: usize,
    out: *mut *mut c_char,
) -> LiekitStatus {
    guard(|| {
        let a = alg_arg(alg)?;
        let explicit = index_arg(indices, len)?;
        let doc = presets::verified(a.doc.clone())?;
        let idx = presets::cartan_basis(&doc, explicit.as_deref())?;
        let comps = presets::classify(&doc.algebra, &idx)?;
        let items: Vec<String> = comps.iter().map(|(t, r)| format!("{{\"rank\":{r},\"type\":\"{t}\"}}")).collect();
        put_string(out, format!("[{}]", items.join(",")))
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn liekit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `alg` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn liekit_algebra_free(alg: *mut LiekitAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}
