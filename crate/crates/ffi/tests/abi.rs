use std::ffi::{CStr, CString};
use std::ptr;

use grr_ffi::*;

fn new_group(spec: &str) -> *mut GrrGroup {
    let spec = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { grr_group_new(spec.as_ptr(), &mut g) }, GrrStatus::Ok);
    assert!(!g.is_null());
    g
}

fn take_json(p: *mut libc::c_char) -> serde_json::Value {
    let v = serde_json::from_str(unsafe { CStr::from_ptr(p) }.to_str().unwrap()).unwrap();
    unsafe { grr_string_free(p) };
    v
}

fn last_error() -> String {
    let p = grr_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn group_lifecycle_and_order() {
    let g = new_group("symmetric:4");
    let mut n = 0;
    assert_eq!(unsafe { grr_group_order(g, &mut n) }, GrrStatus::Ok);
    assert_eq!(n, 24);
    unsafe { grr_group_free(g) };
    let h = new_group("heisenberg");
    assert_eq!(unsafe { grr_group_order(h, &mut n) }, GrrStatus::Ok);
    assert_eq!(n, 0);
    unsafe { grr_group_free(h) };
    unsafe { grr_group_free(ptr::null_mut()) };
}

#[test]
fn bad_input_sets_status_and_message() {
    let spec = CString::new("nosuchgroup").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { grr_group_new(spec.as_ptr(), &mut g) }, GrrStatus::Parse);
    assert!(g.is_null());
    assert!(last_error().contains("nosuchgroup"));
    assert_eq!(unsafe { grr_group_new(ptr::null(), &mut g) }, GrrStatus::InvalidArgument);
    let mut n = 0;
    assert_eq!(unsafe { grr_group_order(ptr::null(), &mut n) }, GrrStatus::InvalidArgument);
}

#[test]
fn classify_q8() {
    let g = new_group("q8");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { grr_classify(g, GrrMode::Grr, &mut out) }, GrrStatus::Ok);
    assert_eq!(take_json(out)["label"], "EXCEPTION_GEN_DICYCLIC");
    unsafe { grr_group_free(g) };
}

#[test]
fn verify_and_is_regular() {
    let g = new_group("cyclic:4");
    let set = CString::new("1\n3\n").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { grr_verify(g, set.as_ptr(), GrrMode::Grr, &mut out) }, GrrStatus::Ok);
    let v = take_json(out);
    assert_eq!(v["is_grr"], false);
    assert_eq!(v["aut_order"], "8");
    let mut regular = true;
    assert_eq!(unsafe { grr_is_regular(g, set.as_ptr(), GrrMode::Grr, &mut regular) }, GrrStatus::Ok);
    assert!(!regular);
    let half = CString::new("1").unwrap();
    assert_eq!(unsafe { grr_is_regular(g, half.as_ptr(), GrrMode::Grr, &mut regular) }, GrrStatus::InvalidArgument);
    assert_eq!(unsafe { grr_is_regular(g, half.as_ptr(), GrrMode::Drr, &mut regular) }, GrrStatus::Ok);
    assert!(regular);
    unsafe { grr_group_free(g) };
}

#[test]
fn construct_reports_refusal_and_success() {
    let z = new_group("cyclic:8");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { grr_construct(z, ptr::null(), 0, &mut out) }, GrrStatus::HypothesisRefused);
    assert!(out.is_null());
    unsafe { grr_group_free(z) };

    let h = new_group("heisenberg");
    assert_eq!(unsafe { grr_construct(h, ptr::null(), 0, &mut out) }, GrrStatus::Ok);
    let trace = take_json(out);
    assert_eq!(trace["postconditions"]["distinct_mod_inverse"], true);
    unsafe { grr_group_free(h) };
}

#[test]
fn probe_is_seeded() {
    let g = new_group("dinf");
    let mut a = GrrEstimate::default();
    let mut b = GrrEstimate::default();
    assert_eq!(unsafe { grr_probe(g, GrrQuantity::Involution, 100, 20_000, 5, &mut a) }, GrrStatus::Ok);
    assert_eq!(unsafe { grr_probe(g, GrrQuantity::Involution, 100, 20_000, 5, &mut b) }, GrrStatus::Ok);
    assert_eq!(a, b);
    assert!((a.estimate - 0.5).abs() < 0.05);
    unsafe { grr_group_free(g) };
}

#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/grr.h");
    let src = format!(
        "#include \"{header}\"\nint main(void) {{\n  GrrGroup *g = NULL;\n  GrrStatus s = grr_group_new(\"q8\", &g);\n  grr_group_free(g);\n  return s == GRR_STATUS_OK ? 0 : 1;\n}}\n"
    );
    let dir = tempfile_dir();
    let c = dir.join("t.c");
    std::fs::write(&c, src).unwrap();
    match std::process::Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror"]).arg(&c).status() {
        Ok(s) => assert!(s.success(), "header does not compile"),
        Err(_) => eprintln!("no C compiler; skipping header check"),
    }
}

fn tempfile_dir() -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("grr-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}
