use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use tautring_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { tr_string_free(s) };
    out
}

fn last_error() -> String {
    let p = tr_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn build(g: u32, label: &str) -> *mut TrModel {
    let label = CString::new(label).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { tr_model_build(g, label.as_ptr(), &mut m) }, TrStatus::Ok);
    m
}

#[test]
fn build_and_query() {
    let m = build(7, "f");
    let mut g = 0u32;
    let mut dim = 0u64;
    unsafe {
        assert_eq!(tr_model_genus(m, &mut g), TrStatus::Ok);
        assert_eq!(tr_model_dimension(m, &mut dim), TrStatus::Ok);
        tr_model_free(m);
    }
    assert_eq!((g, dim), (7, 22));
    assert!(tr_last_error_message().is_null());
}

#[test]
fn json_round_trip() {
    let m = build(6, "e");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { tr_model_to_json(m, &mut s) }, TrStatus::Ok);
    let first = take(s);
    let c = CString::new(first.clone()).unwrap();
    let mut m2 = ptr::null_mut();
    assert_eq!(unsafe { tr_model_from_json(c.as_ptr(), &mut m2) }, TrStatus::Ok);
    let mut s2 = ptr::null_mut();
    assert_eq!(unsafe { tr_model_to_json(m2, &mut s2) }, TrStatus::Ok);
    assert_eq!(take(s2), first);
    unsafe {
        tr_model_free(m);
        tr_model_free(m2);
    }
}

#[test]
fn products_and_fourier() {
    let m = build(6, "d");
    let x = CString::new(r#"{"genus":6,"terms":[{"index":[1],"m":0,"coeff":"1"}]}"#).unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { tr_fourier_json(m, x.as_ptr(), &mut s) }, TrStatus::Ok);
    let f: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(f["terms"][0]["m"], 3);
    assert_eq!(f["terms"][0]["coeff"], "1");

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { tr_product_json(m, TrProduct::Star, x.as_ptr(), x.as_ptr(), &mut s) }, TrStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["genus"], 6);
    assert!(!v["terms"].as_array().unwrap().is_empty());

    let bad = CString::new(r#"{"genus":6,"terms":[{"index":[4],"m":0,"coeff":"1"}]}"#).unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { tr_fourier_json(m, bad.as_ptr(), &mut s) }, TrStatus::InvalidInput);
    assert!(s.is_null());
    assert!(!last_error().is_empty());
    unsafe { tr_model_free(m) };
}

#[test]
fn error_codes() {
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { tr_model_build(6, ptr::null(), &mut m) }, TrStatus::NullPointer);
    assert!(last_error().contains("label"));
    let label = CString::new("z").unwrap();
    assert_eq!(unsafe { tr_model_build(6, label.as_ptr(), &mut m) }, TrStatus::InvalidInput);
    assert!(m.is_null());
    let label = CString::new("a").unwrap();
    assert_eq!(unsafe { tr_model_build(6, label.as_ptr(), ptr::null_mut()) }, TrStatus::NullPointer);
    let mut dim = 0u64;
    assert_eq!(unsafe { tr_model_dimension(ptr::null(), &mut dim) }, TrStatus::NullPointer);
    let junk = CString::new("{").unwrap();
    assert_eq!(unsafe { tr_model_from_json(junk.as_ptr(), &mut m) }, TrStatus::InvalidInput);
    unsafe {
        tr_model_free(ptr::null_mut());
        tr_string_free(ptr::null_mut());
    }
}

#[test]
fn oracle_and_enumerate() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { tr_xi_pair(7, 1, 1, 2, &mut s) }, TrStatus::Ok);
    assert_eq!(take(s), "-6");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { tr_enumerate_json(5, &mut s) }, TrStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(unsafe { tr_enumerate_json(2, &mut s) }, TrStatus::InvalidInput);
}

#[test]
fn header_declares_api() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/tautring.h")).unwrap();
    for name in [
        "typedef struct TrModel TrModel;",
        "TR_STATUS_OK = 0",
        "TR_STATUS_NULL_POINTER",
        "TR_PRODUCT_DOT = 1",
        "tr_model_build(",
        "tr_model_free(",
        "tr_model_to_json(",
        "tr_model_from_json(",
        "tr_product_json(",
        "tr_fourier_json(",
        "tr_xi_pair(",
        "tr_enumerate_json(",
        "tr_string_free(",
        "const char *tr_last_error_message(void);",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("probe.c");
    std::fs::write(&src, "#include \"tautring.h\"\nint main(void) { void (*f)(TrModel *) = tr_model_free; return f == 0; }\n").unwrap();
    let status = match Command::new("cc").arg("-fsyntax-only").arg("-Wall").arg("-Werror").arg("-I").arg(&include).arg(&src).status() {
        Ok(s) => s,
        Err(_) => {
            eprintln!("cc not available; skipping");
            return;
        }
    };
    assert!(status.success());
}
