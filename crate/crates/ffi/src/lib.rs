//! C interface to the tautring engine.
//!
//! Models are passed as opaque `TrModel` handles. Every fallible function
//! returns a `TrStatus`; on failure `tr_last_error_message` describes the
//! error for the calling thread. Strings returned through out-parameters
//! are owned by the caller and must be released with `tr_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tautring::catalog::{case_by_label, enumerate_cases};
use tautring::cycle::CycleJson;
use tautring::json::to_canonical;
use tautring::model::ModelJson;
use tautring::oracle::xi_pair;
use tautring::{Cycle, Error, Model};

/// Result codes. Values match the command-line exit codes where they
/// overlap.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrStatus {
    Ok = 0,
    VerificationFailed = 1,
    InvalidInput = 2,
    Inconsistent = 3,
    NullPointer = 4,
    Panic = 5,
}

/// Which product `tr_product_json` computes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrProduct {
    Star = 0,
    Dot = 1,
}

/// Opaque resolved model.
pub struct TrModel {
    inner: Model,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TrStatus {
    match e {
        Error::DimensionMismatch { .. } => TrStatus::VerificationFailed,
        Error::Inconsistent(_) | Error::Underdetermined(_) => TrStatus::Inconsistent,
        _ => TrStatus::InvalidInput,
    }
}

enum Fail {
    Null(&'static str),
    Engine(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Engine(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> TrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TrStatus::Ok
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            TrStatus::NullPointer
        }
        Ok(Err(Fail::Engine(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".to_string());
            TrStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Engine(Error::InvalidInput(format!("{what} is not UTF-8"))))
}

unsafe fn model_ref<'a>(p: *const TrModel) -> Result<&'a Model, Fail> {
    p.as_ref().map(|m| &m.inner).ok_or(Fail::Null("model"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null("out"));
    }
    let c = CString::new(s).map_err(|_| Fail::Engine(Error::InvalidInput("interior NUL".into())))?;
    *out = c.into_raw();
    Ok(())
}

fn parse_cycle(text: &str, model: &Model) -> Result<Cycle, Error> {
    let c = Cycle::from_json(&serde_json::from_str::<CycleJson>(text)?)?;
    if c.genus() != model.genus() {
        return Err(Error::GenusMismatch(c.genus(), model.genus()));
    }
    if let Some(k) = c.keys().find(|k| !model.is_basis_column(&k.index)) {
        return Err(Error::InvalidInput(format!("{k} is not a basis element of the model")));
    }
    Ok(c)
}

/// Resolves the listed case `label` of genus `genus`.
///
/// # Safety
/// `label` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tr_model_build(genus: u32, label: *const c_char, out: *mut *mut TrModel) -> TrStatus {
    guard(|| {
        let label = read_str(label, "label")?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let model = case_by_label(genus, label)?.resolve()?.model;
        *out = Box::into_raw(Box::new(TrModel { inner: model }));
        Ok(())
    })
}

/// Parses a model from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tr_model_from_json(json: *const c_char, out: *mut *mut TrModel) -> TrStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let parsed: ModelJson = serde_json::from_str(text).map_err(Error::from)?;
        let model = Model::from_json(&parsed)?;
        *out = Box::into_raw(Box::new(TrModel { inner: model }));
        Ok(())
    })
}

/// Releases a model. Null is ignored.
///
/// # Safety
/// `model` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn tr_model_free(model: *mut TrModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// # Safety
/// `model` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tr_model_genus(model: *const TrModel, out: *mut u32) -> TrStatus {
    guard(|| {
        let m = model_ref(model)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = m.genus();
        Ok(())
    })
}

/// # Safety
/// `model` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tr_model_dimension(model: *const TrModel, out: *mut u64) -> TrStatus {
    guard(|| {
        let m = model_ref(model)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = m.dimension();
        Ok(())
    })
}

/// Canonical JSON form of a model.
///
/// # Safety
/// `model` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tr_model_to_json(model: *const TrModel, out: *mut *mut c_char) -> TrStatus {
    guard(|| {
        let m = model_ref(model)?;
        write_string(out, to_canonical(&m.to_json())?)
    })
}

/// Fourier transform of a cycle given in JSON form.
///
/// # Safety
/// `model`, `cycle_json` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tr_fourier_json(
    model: *const TrModel,
    cycle_json: *const c_char,
    out: *mut *mut c_char,
) -> TrStatus {
    guard(|| {
        let m = model_ref(model)?;
        let c = parse_cycle(read_str(cycle_json, "cycle_json")?, m)?;
        write_string(out, to_canonical(&c.fourier().to_json())?)
    })
}

/// Pontryagin or intersection product of two cycles in JSON form.
///
/// # Safety
/// `model`, `x_json`, `y_json` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tr_product_json(
    model: *const TrModel,
    product: TrProduct,
    x_json: *const c_char,
    y_json: *const c_char,
    out: *mut *mut c_char,
) -> TrStatus {
    guard(|| {
        let m = model_ref(model)?;
        let x = parse_cycle(read_str(x_json, "x_json")?, m)?;
        let y = parse_cycle(read_str(y_json, "y_json")?, m)?;
        let v = match product {
            TrProduct::Star => m.pontryagin(&x, &y)?,
            TrProduct::Dot => m.intersect(&x, &y)?,
        };
        write_string(out, to_canonical(&v.to_json())?)
    })
}

/// `ξ_{i,j}^[t]` as a `"p/q"` string.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tr_xi_pair(genus: u32, i: u32, j: u32, t: u32, out: *mut *mut c_char) -> TrStatus {
    guard(|| write_string(out, xi_pair(genus, i, j, t).to_string()))
}

/// The case list of one genus, with dimensions, as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tr_enumerate_json(genus: u32, out: *mut *mut c_char) -> TrStatus {
    guard(|| {
        let cases = enumerate_cases(genus)?;
        let v: Vec<_> = cases.iter().map(|c| c.to_json()).collect();
        write_string(out, to_canonical(&v)?)
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn tr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn tr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
