//! C ABI over `wanas-core`.
//!
//! Catalogs and algebras are opaque handles owned by the caller and released
//! with their `_free` function. Results come back as UTF-8 JSON strings that
//! must be released with [`wanas_string_free`]. Every call returns a
//! [`WanasStatus`]; on failure [`wanas_last_error`] describes it (per thread).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde_json::json;
use wanas_core::catalog::{Catalog, GroupId};
use wanas_core::geometry::{matrix_json, table3_json, table4_json, ConnectionKind, Pipeline, ProductStructure};
use wanas_core::liealg::{evaluate_spec, validate_assignment, LieAlgebraSpec, LieError, ParameterAssignment, SpecFile};
use wanas_core::soliton::{soliton_decide, SolitonKind};
use wanas_core::verify::{check_jacobi, verify_paper, VerifyOptions};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WanasStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    UnknownGroup = 3,
    InvalidInput = 4,
    Catalog = 5,
    Computation = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WanasKind {
    First = 0,
    Second = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WanasConnection {
    Canonical = 0,
    LeviCivita = 1,
}

/// A loaded, checksum-verified catalog.
pub struct WanasCatalog {
    inner: Catalog,
}

/// One Lie algebra with its metric and constraints.
pub struct WanasAlgebra {
    label: String,
    spec: LieAlgebraSpec,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Error(WanasStatus, String);

type Res<T> = Result<T, Error>;

fn err(status: WanasStatus, msg: impl Into<String>) -> Error {
    Error(status, msg.into())
}

fn set_last_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).expect("NULs replaced"));
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Res<()>) -> WanasStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(None);
            WanasStatus::Ok
        }
        Ok(Err(Error(status, msg))) => {
            set_last_error(Some(msg));
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(Some(format!("internal panic: {msg}")));
            WanasStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Res<&'a str> {
    if p.is_null() {
        return Err(err(WanasStatus::NullArgument, format!("{name} is NULL")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| err(WanasStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn opt_str_arg<'a>(p: *const c_char, name: &str) -> Res<Option<&'a str>> {
    if p.is_null() {
        Ok(None)
    } else {
        str_arg(p, name).map(Some)
    }
}

unsafe fn handle<'a, T>(p: *const T, name: &str) -> Res<&'a T> {
    p.as_ref().ok_or_else(|| err(WanasStatus::NullArgument, format!("{name} is NULL")))
}

unsafe fn write_out<T>(out: *mut *mut T, value: *mut T) -> Res<()> {
    if out.is_null() {
        return Err(err(WanasStatus::NullArgument, "output pointer is NULL"));
    }
    *out = value;
    Ok(())
}

unsafe fn write_json(out: *mut *mut c_char, v: &serde_json::Value) -> Res<()> {
    let s = serde_json::to_string(v).map_err(|e| err(WanasStatus::Computation, e.to_string()))?;
    write_out(out, CString::new(s).expect("JSON has no NUL").into_raw())
}

fn group(name: &str) -> Res<GroupId> {
    name.parse().map_err(|_| err(WanasStatus::UnknownGroup, format!("unknown group {name:?}")))
}

fn point(spec: &LieAlgebraSpec, at: &str) -> Res<ParameterAssignment> {
    let bad = |e: LieError| err(WanasStatus::InvalidInput, e.to_string());
    let sigma = ParameterAssignment::parse(at).map_err(bad)?;
    let violations = validate_assignment(spec, &sigma).map_err(bad)?;
    if !violations.is_empty() {
        return Err(bad(LieError::InvalidAssignment(violations)));
    }
    Ok(sigma)
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn wanas_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn wanas_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn wanas_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads the catalog, honouring `WANAS_CATALOG` like the CLI.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wanas_catalog_load(out: *mut *mut WanasCatalog) -> WanasStatus {
    guard(|| {
        let inner = Catalog::load().map_err(|e| err(WanasStatus::Catalog, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(WanasCatalog { inner })))
    })
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wanas_catalog_embedded(out: *mut *mut WanasCatalog) -> WanasStatus {
    guard(|| {
        let inner = Catalog::embedded().map_err(|e| err(WanasStatus::Catalog, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(WanasCatalog { inner })))
    })
}

/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wanas_catalog_from_path(path: *const c_char, out: *mut *mut WanasCatalog) -> WanasStatus {
    guard(|| {
        let path = str_arg(path, "path")?;
        let inner = Catalog::from_path(path.as_ref()).map_err(|e| err(WanasStatus::Catalog, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(WanasCatalog { inner })))
    })
}

/// # Safety
/// `cat` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn wanas_catalog_free(cat: *mut WanasCatalog) {
    if !cat.is_null() {
        drop(Box::from_raw(cat));
    }
}

/// The catalog's checksum as a new string.
///
/// # Safety
/// `cat` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wanas_catalog_checksum(cat: *const WanasCatalog, out: *mut *mut c_char) -> WanasStatus {
    guard(|| {
        let cat = handle(cat, "catalog")?;
        write_out(out, CString::new(cat.inner.checksum.clone()).expect("hex").into_raw())
    })
}

/// Algebra of catalog group `name` ("G1".."G7", case-insensitive).
///
/// # Safety
/// `cat` must be a live handle, `name` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wanas_algebra_from_group(
    cat: *const WanasCatalog,
    name: *const c_char,
    out: *mut *mut WanasAlgebra,
) -> WanasStatus {
    guard(|| {
        let cat = handle(cat, "catalog")?;
        let id = group(str_arg(name, "name")?)?;
        let alg = WanasAlgebra { label: id.to_string(), spec: cat.inner.get_group(id).spec.clone() };
        write_out(out, Box::into_raw(Box::new(alg)))
    })
}

/// Algebra from a spec document, the same JSON the CLI's `--spec-file` takes.
///
/// # Safety
/// `json` must be NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wanas_algebra_from_json(json: *const c_char, out: *mut *mut WanasAlgebra) -> WanasStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let file: SpecFile =
            serde_json::from_str(text).map_err(|e| err(WanasStatus::InvalidInput, format!("invalid spec: {e}")))?;
        let spec = file.to_spec(&|_| None).map_err(|e| err(WanasStatus::InvalidInput, format!("invalid spec: {e}")))?;
        write_out(out, Box::into_raw(Box::new(WanasAlgebra { label: "custom".into(), spec })))
    })
}

/// # Safety
/// `alg` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn wanas_algebra_free(alg: *mut WanasAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Sets `*holds` to whether the Jacobi identity holds identically or on the
/// algebra's constraint variety.
///
/// # Safety
/// `alg` must be a live handle and `holds` valid.
#[no_mangle]
pub unsafe extern "C" fn wanas_algebra_jacobi(alg: *const WanasAlgebra, holds: *mut bool) -> WanasStatus {
    guard(|| {
        let alg = handle(alg, "algebra")?;
        if holds.is_null() {
            return Err(err(WanasStatus::NullArgument, "holds is NULL"));
        }
        *holds = check_jacobi(&alg.spec).verdict != wanas_core::verify::Verdict::Mismatch;
        Ok(())
    })
}

/// Every tensor of the chosen connection as JSON, symbolic or at the point
/// `at` (e.g. "alpha=1,beta=-1/2"; NULL for symbolic).
///
/// # Safety
/// `alg` must be a live handle, `at` NULL or NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wanas_tensors_json(
    alg: *const WanasAlgebra,
    connection: WanasConnection,
    at: *const c_char,
    out: *mut *mut c_char,
) -> WanasStatus {
    guard(|| {
        let alg = handle(alg, "algebra")?;
        let sigma = opt_str_arg(at, "at")?.map(|s| point(&alg.spec, s)).transpose()?;
        let spec = match &sigma {
            Some(s) => evaluate_spec(&alg.spec, s).map_err(|e| err(WanasStatus::InvalidInput, e.to_string()))?,
            None => alg.spec.clone(),
        };
        let kind = match connection {
            WanasConnection::Canonical => ConnectionKind::Canonical,
            WanasConnection::LeviCivita => ConnectionKind::LeviCivita,
        };
        let p = Pipeline::compute(&spec, &ProductStructure::standard(), kind);
        write_json(
            out,
            &json!({
                "algebra": alg.label,
                "at": sigma,
                "tensors": {
                    "connection": table3_json(&p.connection.gamma),
                    "torsion": table3_json(&p.torsion.t),
                    "curvature": table4_json(&p.curvature.r),
                    "a-tensor": table4_json(&p.a_tensor.k),
                    "wanas": table4_json(&p.wanas.k),
                    "abar": matrix_json(&p.abar),
                    "ric": matrix_json(&p.ric),
                    "wan": matrix_json(&p.wan),
                    "wan-tilde": matrix_json(&p.wan_tilde),
                },
            }),
        )
    })
}

/// Decides whether the algebra at `at` is an algebraic Wanas soliton.
///
/// # Safety
/// `alg` must be a live handle, `at` NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wanas_check_json(
    alg: *const WanasAlgebra,
    kind: WanasKind,
    at: *const c_char,
    out: *mut *mut c_char,
) -> WanasStatus {
    guard(|| {
        let alg = handle(alg, "algebra")?;
        let sigma = point(&alg.spec, str_arg(at, "at")?)?;
        let numeric = evaluate_spec(&alg.spec, &sigma).map_err(|e| err(WanasStatus::InvalidInput, e.to_string()))?;
        let kind = match kind {
            WanasKind::First => SolitonKind::First,
            WanasKind::Second => SolitonKind::Second,
        };
        let verdict = soliton_decide(&numeric, kind, &Pipeline::canonical(&numeric))
            .map_err(|e| err(WanasStatus::Computation, e.to_string()))?;
        write_json(out, &json!({ "algebra": alg.label, "kind": kind, "at": sigma, "verdict": verdict }))
    })
}

/// Full reproduction report for one group, or all groups when `group` is NULL.
/// `*all_pass` (if non-NULL) receives the report's overall result.
///
/// # Safety
/// `cat` must be a live handle, `group` NULL or NUL-terminated, `out` valid,
/// `all_pass` NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn wanas_verify_json(
    cat: *const WanasCatalog,
    group_name: *const c_char,
    all_pass: *mut bool,
    out: *mut *mut c_char,
) -> WanasStatus {
    guard(|| {
        let cat = handle(cat, "catalog")?;
        let mut opts = VerifyOptions::default();
        if let Some(g) = opt_str_arg(group_name, "group")? {
            opts.groups = vec![group(g)?];
        }
        let report = verify_paper(&cat.inner, &opts);
        if !all_pass.is_null() {
            *all_pass = report.summary.all_pass;
        }
        write_out(out, CString::new(report.to_json()).expect("JSON has no NUL").into_raw())
    })
}
