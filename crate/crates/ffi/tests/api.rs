use std::ffi::{CStr, CString};
use std::ptr;

use coset_spectra_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cs_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn space(spec: &str) -> *mut CsSpace {
    let mut out = ptr::null_mut();
    let status = unsafe { cs_space_new(c(spec).as_ptr(), &mut out) };
    assert_eq!(status, CsStatus::Ok, "{}", last_error());
    out
}

#[test]
fn weyl_orders_of_b2_over_d2() {
    let s = space("B2/D2");
    let (mut g, mut e, mut t) = (0, 0, 0);
    assert_eq!(
        unsafe { cs_space_weyl_orders(s, &mut g, &mut e, &mut t) },
        CsStatus::Ok
    );
    assert_eq!((g, e, t), (8, 4, 2));
    unsafe { cs_space_free(s) };
}

#[test]
fn lowest_records() {
    let s = space("B1/torus;mu=5/2");
    let mut rec = CsLowest::default();
    assert_eq!(unsafe { cs_space_lowest(s, &mut rec) }, CsStatus::Ok);
    assert!(rec.kostant_attained);
    assert_eq!(rec.kostant_multiplicity, 5);
    assert_eq!(rec.kostant_energy, CsRational { num: -1, den: 2 });
    assert_eq!(rec.frobenius_energy, CsRational { num: 5, den: 1 });
    assert_eq!(rec.frobenius_degeneracy, 6);
    unsafe { cs_space_free(s) };

    let s = space("B2/D2;mu=0,0");
    assert_eq!(unsafe { cs_space_lowest(s, &mut rec) }, CsStatus::Ok);
    assert!(!rec.kostant_attained);
    assert_eq!(rec.kostant_multiplicity, 0);
    unsafe { cs_space_free(s) };

    let s = space("B1/torus;mu=5/2;scale=2");
    assert_eq!(unsafe { cs_space_lowest(s, &mut rec) }, CsStatus::Ok);
    assert_eq!(rec.kostant_energy, CsRational { num: -1, den: 1 });
    assert_eq!(rec.frobenius_energy, CsRational { num: 10, den: 1 });
    unsafe { cs_space_free(s) };
}

#[test]
fn error_codes_and_messages() {
    let mut out = ptr::null_mut();
    let cases = [
        ("E8/D8", CsStatus::Unsupported),
        ("B2/X2", CsStatus::Parse),
        ("B2/roots:(1,0),(0,1)", CsStatus::InvalidSubsystem),
        ("B2/roots:(1,2)", CsStatus::InvalidSubsystem),
    ];
    for (spec, want) in cases {
        assert_eq!(
            unsafe { cs_space_new(c(spec).as_ptr(), &mut out) },
            want,
            "{spec}"
        );
        assert!(out.is_null());
        assert!(!last_error().is_empty());
    }
    assert_eq!(
        unsafe { cs_space_new(ptr::null(), &mut out) },
        CsStatus::NullPointer
    );
    assert_eq!(
        unsafe { cs_space_new(c("B2/D2").as_ptr(), ptr::null_mut()) },
        CsStatus::NullPointer
    );
    let bad = [0x42u8, 0xff, 0];
    assert_eq!(
        unsafe { cs_space_new(bad.as_ptr().cast(), &mut out) },
        CsStatus::InvalidUtf8
    );

    let s = space("B2/D2;mu=1/3,0");
    let mut rec = CsLowest::default();
    assert_eq!(
        unsafe { cs_space_lowest(s, &mut rec) },
        CsStatus::InvalidWeight
    );
    assert_eq!(
        unsafe { cs_space_lowest(s, ptr::null_mut()) },
        CsStatus::NullPointer
    );
    unsafe { cs_space_free(s) };
    assert!(last_error().contains("out"));

    let s = space("B2/D2");
    assert_eq!(
        unsafe { cs_space_weyl_orders(s, &mut 0, &mut 0, &mut 0) },
        CsStatus::Ok
    );
    assert!(last_error().is_empty());
    unsafe { cs_space_free(s) };
    unsafe { cs_space_free(ptr::null_mut()) };
}

#[test]
fn run_json_round_trip() {
    let mut json = ptr::null_mut();
    let status = unsafe {
        cs_run_json(
            c("spectrum").as_ptr(),
            c("B1/torus;mu=0").as_ptr(),
            3,
            0,
            &mut json,
        )
    };
    assert_eq!(status, CsStatus::Ok);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
    unsafe { cs_string_free(json) };
    assert!(text.contains("\"command\": \"spectrum\""));
    assert!(!text.contains('.'));

    let status = unsafe {
        cs_run_json(
            c("gkrs-check").as_ptr(),
            c("B2/D2").as_ptr(),
            0,
            40,
            &mut json,
        )
    };
    assert_eq!(status, CsStatus::Ok);
    unsafe { cs_string_free(json) };

    let status = unsafe { cs_run_json(c("nope").as_ptr(), c("B2/D2").as_ptr(), 3, 0, &mut json) };
    assert_eq!(status, CsStatus::Parse);
    assert!(json.is_null());
    unsafe { cs_string_free(ptr::null_mut()) };
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(cs_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
