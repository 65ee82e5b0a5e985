use std::ffi::{CStr, CString};
use std::ptr;

use spaceform_ffi::*;

fn last_error() -> String {
    let p = sf_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn build(tuple: &str) -> *mut SfGroup {
    let t = CString::new(tuple).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sf_build_tuple(t.as_ptr(), &mut g) }, SfStatus::Ok);
    g
}

fn classify(g: *const SfGroup) -> Result<String, String> {
    let mut s = ptr::null_mut();
    match unsafe { sf_classify(g, false, &mut s) } {
        SfStatus::Ok => {
            let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
            unsafe { sf_string_free(s) };
            Ok(out)
        }
        SfStatus::Rejected => Err(last_error()),
        other => panic!("{other:?}: {}", last_error()),
    }
}

#[test]
fn build_and_classify_round_trip() {
    let tuple = "TYPE=I;g=12;a=3;Gbar=[1,2];b=1;t=4";
    let g = build(tuple);
    assert_eq!(unsafe { sf_group_order(g) }, 12);
    assert_eq!(classify(g).unwrap(), tuple);
    unsafe { sf_group_free(g) };
}

#[test]
fn table_input_and_rejection() {
    // Z/2 × Z/2
    let table: [u32; 16] = [0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sf_group_from_table(4, table.as_ptr(), &mut g) }, SfStatus::Ok);
    assert_eq!(unsafe { sf_group_mul(g, 1, 2) }, 3);
    assert_eq!(unsafe { sf_group_mul(g, 4, 0) }, usize::MAX);
    let msg = classify(g).unwrap_err();
    assert!(msg.starts_with("REJECT multiple-involutions:"), "{msg}");
    unsafe { sf_group_free(g) };
}

#[test]
fn bad_table_reports_status() {
    let table: [u32; 4] = [0, 1, 1, 1];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sf_group_from_table(2, table.as_ptr(), &mut g) }, SfStatus::InvalidTable);
    assert!(g.is_null());
    assert!(last_error().starts_with("NotLatinSquare:"), "{}", last_error());
}

#[test]
fn parse_and_isomorphism() {
    let text = CString::new("3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sf_group_parse(text.as_ptr(), &mut g) }, SfStatus::Ok);
    let h = build("TYPE=I;g=3;a=3;Gbar=[1];b=1;t=1");
    let mut iso = false;
    assert_eq!(unsafe { sf_is_isomorphic(g, h, &mut iso) }, SfStatus::Ok);
    assert!(iso);
    unsafe {
        sf_group_free(g);
        sf_group_free(h);
    }
}

#[test]
fn malformed_tuple_and_nulls() {
    let t = CString::new("TYPE=I;g=6;a=3;Gbar=[1,2];b=1;t=2").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sf_build_tuple(t.as_ptr(), &mut g) }, SfStatus::InvalidTuple);
    assert_eq!(unsafe { sf_build_tuple(ptr::null(), &mut g) }, SfStatus::NullPointer);
    assert_eq!(unsafe { sf_group_order(ptr::null()) }, 0);
    unsafe {
        sf_group_free(ptr::null_mut());
        sf_string_free(ptr::null_mut());
    }
}

#[test]
fn enumerate_and_count() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sf_enumerate(8, &mut s) }, SfStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { sf_string_free(s) };
    assert_eq!(text.lines().count(), 9);
    assert!(text.contains("TYPE=II;g=8;a=1;Gbar=[];b=1;t=8\n"));

    let mut counts = [0usize; 16];
    assert_eq!(unsafe { sf_count_by_order(16, counts.as_mut_ptr(), 16) }, SfStatus::Ok);
    assert_eq!(counts, [1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2]);
    assert_eq!(unsafe { sf_count_by_order(16, counts.as_mut_ptr(), 8) }, SfStatus::BadParameter);
    assert_eq!(unsafe { sf_enumerate(1 << 20, &mut s) }, SfStatus::TooLarge);
}
