//! Exercises the C ABI from the Rust side, plus one end-to-end check that a
//! real C program compiles against the generated header and links the static
//! library.

use martensite_ffi::*;
use std::ffi::{c_char, c_int, CString};

fn from_material(name: &str) -> *mut MartensiteVariants {
    let name = CString::new(name).unwrap();
    let mut handle: *mut MartensiteVariants = std::ptr::null_mut();
    let status = unsafe { martensite_variants_from_material(name.as_ptr(), &mut handle) };
    assert_eq!(status, MartensiteStatus::Ok);
    assert!(!handle.is_null());
    handle
}

#[test]
fn handle_lifecycle_and_queries() {
    let handle = from_material("NiTi");
    assert_eq!(unsafe { martensite_regime(handle) }, 0);
    assert_eq!(unsafe { martensite_is_generic(handle) }, 1);

    // det(e2 - e1) = 0 (compatible pair), det(e6 - e1) != 0
    let mut sign: c_int = 99;
    let status = unsafe { martensite_pair_det_sign(handle, 1, 2, &mut sign) };
    assert_eq!(status, MartensiteStatus::Ok);
    assert_eq!(sign, 0);
    let status = unsafe { martensite_pair_det_sign(handle, 1, 6, &mut sign) };
    assert_eq!(status, MartensiteStatus::Ok);
    assert_eq!(sign, -1);
    let status = unsafe { martensite_pair_det_sign(handle, 1, 8, &mut sign) };
    assert_eq!(status, MartensiteStatus::Ok);
    assert_eq!(sign, 1);

    let mut count = 0usize;
    let status = unsafe { martensite_facet_count(handle, &mut count) };
    assert_eq!(status, MartensiteStatus::Ok);
    assert_eq!(count, 25);

    unsafe { martensite_variants_free(handle) };
}

#[test]
fn lambda_decimal_matches_published_value() {
    let handle = from_material("NiTi");
    let mut needed = 0usize;
    let status = unsafe {
        martensite_t3_lambda_decimal(handle, 1, 8, 10, 6, std::ptr::null_mut(), 0, &mut needed)
    };
    assert_eq!(status, MartensiteStatus::BufferTooSmall);
    let mut buf = vec![0 as c_char; needed];
    let status = unsafe {
        martensite_t3_lambda_decimal(handle, 1, 8, 10, 6, buf.as_mut_ptr(), buf.len(), &mut needed)
    };
    assert_eq!(status, MartensiteStatus::Ok);
    let text = unsafe { std::ffi::CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap();
    assert_eq!(text, "0.683045");
    unsafe { martensite_variants_free(handle) };
}

#[test]
fn facets_json_round_trips() {
    let handle = from_material("NiTi");
    let mut needed = 0usize;
    let status =
        unsafe { martensite_facets_json(handle, std::ptr::null_mut(), 0, &mut needed) };
    assert_eq!(status, MartensiteStatus::BufferTooSmall);
    let mut buf = vec![0 as c_char; needed];
    let status =
        unsafe { martensite_facets_json(handle, buf.as_mut_ptr(), buf.len(), &mut needed) };
    assert_eq!(status, MartensiteStatus::Ok);
    let text = unsafe { std::ffi::CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap();
    let doc: serde_json::Value = serde_json::from_str(text).unwrap();
    assert_eq!(doc["count"], 25);
    assert_eq!(doc["facets"].as_array().unwrap().len(), 25);
    unsafe { martensite_variants_free(handle) };
}

#[test]
fn error_paths_set_messages() {
    let name = CString::new("Nonsense").unwrap();
    let mut handle: *mut MartensiteVariants = std::ptr::null_mut();
    let status = unsafe { martensite_variants_from_material(name.as_ptr(), &mut handle) };
    assert_eq!(status, MartensiteStatus::UnknownMaterial);
    let mut needed = 0usize;
    assert_eq!(
        unsafe { martensite_last_error(std::ptr::null_mut(), 0, &mut needed) },
        MartensiteStatus::BufferTooSmall
    );
    let mut buf = vec![0 as c_char; needed];
    assert_eq!(
        unsafe { martensite_last_error(buf.as_mut_ptr(), buf.len(), &mut needed) },
        MartensiteStatus::Ok
    );
    let text = unsafe { std::ffi::CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap();
    assert!(text.contains("unknown material"));

    // degenerate parameters surface as a dedicated status
    let a = CString::new("3/8").unwrap();
    let b = CString::new("0").unwrap();
    let d = CString::new("1/2").unwrap();
    let e = CString::new("1/4").unwrap();
    let status = unsafe {
        martensite_variants_from_params(a.as_ptr(), b.as_ptr(), d.as_ptr(), e.as_ptr(), &mut handle)
    };
    assert_eq!(status, MartensiteStatus::Ok);
    let mut count = 0usize;
    let status = unsafe { martensite_facet_count(handle, &mut count) };
    assert_eq!(status, MartensiteStatus::DegenerateParams);
    unsafe { martensite_variants_free(handle) };
}

#[test]
fn verify_reports_zero_failures() {
    let handle = from_material("NiTi");
    let mut failed = 7usize;
    let status = unsafe { martensite_verify(handle, &mut failed) };
    assert_eq!(status, MartensiteStatus::Ok);
    assert_eq!(failed, 0);
    unsafe { martensite_variants_free(handle) };
}

#[test]
fn c_program_compiles_and_runs_against_the_header() {
    let manifest = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include_dir = manifest.join("include");
    let lib_dir = manifest.join("../../target/debug");
    let staticlib = lib_dir.join("libmartensite_ffi.a");
    assert!(staticlib.exists(), "static library missing at {staticlib:?}");

    let dir = std::env::temp_dir().join("martensite-ffi-c-test");
    std::fs::create_dir_all(&dir).unwrap();
    let source = dir.join("smoke.c");
    std::fs::write(
        &source,
        r#"
#include "martensite.h"
#include <stdio.h>
#include <string.h>

int main(void) {
    MartensiteVariants *handle = NULL;
    if (martensite_variants_from_material("NiTi", &handle) != MARTENSITE_STATUS_OK) return 1;
    if (martensite_regime(handle) != 0) return 2;
    size_t count = 0;
    if (martensite_facet_count(handle, &count) != MARTENSITE_STATUS_OK) return 3;
    if (count != 25) return 4;
    char lambda[32];
    size_t written = 0;
    if (martensite_t3_lambda_decimal(handle, 1, 8, 10, 4, lambda, sizeof lambda, &written)
        != MARTENSITE_STATUS_OK) return 5;
    if (strcmp(lambda, "0.6830") != 0) return 6;
    martensite_variants_free(handle);
    printf("ok %s\n", lambda);
    return 0;
}
"#,
    )
    .unwrap();
    let binary = dir.join("smoke");
    let compile = std::process::Command::new("cc")
        .arg(&source)
        .arg("-I")
        .arg(&include_dir)
        .arg(staticlib)
        .arg("-lpthread")
        .arg("-ldl")
        .arg("-lm")
        .arg("-o")
        .arg(&binary)
        .output()
        .expect("invoke cc");
    assert!(
        compile.status.success(),
        "cc failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );
    let run = std::process::Command::new(&binary).output().expect("run smoke test");
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok 0.6830\n");
}
