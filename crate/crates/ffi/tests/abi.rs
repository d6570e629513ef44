use std::ffi::{CStr, CString};
use std::ptr;

use ratlink_ffi::*;

fn last_error() -> String {
    let p = ratlink_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn writhe_values() {
    let mut wr = 0i64;
    unsafe {
        assert_eq!(ratlink_writhe(3, 8, false, &mut wr), RatlinkStatus::Ok);
        assert_eq!(wr, -1);
        assert_eq!(ratlink_writhe(8, 11, false, &mut wr), RatlinkStatus::Ok);
        assert_eq!(wr, 2);
    }
    assert!(ratlink_last_error().is_null());
}

#[test]
fn writhe_errors() {
    let mut wr = 0i64;
    unsafe {
        assert_eq!(ratlink_writhe(1, 0, false, &mut wr), RatlinkStatus::OutOfRange);
        assert!(!last_error().is_empty());
        assert_eq!(ratlink_writhe(1, 3, true, &mut wr), RatlinkStatus::NotTwoComponent);
        assert_eq!(ratlink_writhe(3, 8, false, ptr::null_mut()), RatlinkStatus::NullPointer);
        assert_eq!(last_error(), "out is null");
    }
}

#[test]
fn orbit_numerators() {
    let mut out = [0u64; 4];
    unsafe {
        assert_eq!(ratlink_orbit(7, 17, out.as_mut_ptr()), RatlinkStatus::Ok);
    }
    let mut sorted = out;
    sorted.sort();
    assert_eq!(out[0], 7);
    assert_eq!(sorted, [5, 7, 10, 12]);
    unsafe {
        assert_eq!(ratlink_orbit(5, 4, out.as_mut_ptr()), RatlinkStatus::OutOfRange);
    }
}

#[test]
fn frieze_handle() {
    let word = CString::new("LLRRL").unwrap();
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(ratlink_frieze_from_word(word.as_ptr(), &mut f), RatlinkStatus::Ok);
        let (mut max, mut order, mut height) = (0, 0, 0);
        assert_eq!(ratlink_frieze_shape(f, &mut max, &mut order, &mut height), RatlinkStatus::Ok);
        assert_eq!((max, height), (17, 6));
        assert_eq!(ratlink_frieze_shape(f, ptr::null_mut(), ptr::null_mut(), ptr::null_mut()), RatlinkStatus::Ok);

        let mut ones = 0;
        let mut found_one = false;
        for col in 0..2 {
            if ratlink_frieze_entry(f, 0, col, &mut ones) == RatlinkStatus::Ok {
                found_one = true;
                assert_eq!(ones, 1);
            }
        }
        assert!(found_one);

        let mut json = ptr::null_mut();
        assert_eq!(ratlink_frieze_json(f, &mut json), RatlinkStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        ratlink_string_free(json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["order"].as_u64(), Some(order));
        ratlink_frieze_free(f);
    }
}

#[test]
fn frieze_bad_word() {
    let word = CString::new("LXR").unwrap();
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(ratlink_frieze_from_word(word.as_ptr(), &mut f), RatlinkStatus::InvalidInput);
        assert!(f.is_null());
        assert_eq!(ratlink_frieze_from_word(ptr::null(), &mut f), RatlinkStatus::NullPointer);
        ratlink_frieze_free(ptr::null_mut());
    }
}

#[test]
fn frieze_of_fraction_matches_word() {
    let mut a = ptr::null_mut();
    unsafe {
        assert_eq!(ratlink_frieze_new(7, 17, &mut a), RatlinkStatus::Ok);
        let mut max = 0;
        assert_eq!(ratlink_frieze_shape(a, &mut max, ptr::null_mut(), ptr::null_mut()), RatlinkStatus::Ok);
        assert_eq!(max, 17);
        ratlink_frieze_free(a);
    }
}

#[test]
fn jones_terms() {
    let mut j = ptr::null_mut();
    unsafe {
        assert_eq!(ratlink_jones_new(1, 4, false, &mut j), RatlinkStatus::Ok);
        let mut n = 0;
        assert_eq!(ratlink_jones_term_count(j, &mut n), RatlinkStatus::Ok);
        let mut terms = Vec::new();
        for k in 0..n {
            let (mut e, mut c) = (0, 0);
            assert_eq!(ratlink_jones_term(j, k, &mut e, &mut c), RatlinkStatus::Ok);
            terms.push((e, c));
        }
        // t^(3/2)(-t^3 - t + 1 - t^-1) in powers of t^(1/2)
        assert_eq!(terms, [(9, -1), (5, -1), (3, 1), (1, -1)]);
        let (mut e, mut c) = (0, 0);
        assert_eq!(ratlink_jones_term(j, n, &mut e, &mut c), RatlinkStatus::OutOfRange);

        let mut s = ptr::null_mut();
        assert_eq!(ratlink_jones_string(j, true, 3, &mut s), RatlinkStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "t^(3/2)(-t^3 - t + 1 - t^-1)");
        ratlink_string_free(s);
        ratlink_jones_free(j);
    }
}

#[test]
fn jones_plus_minus_needs_two_components() {
    let mut j = ptr::null_mut();
    unsafe {
        assert_eq!(ratlink_jones_new(1, 3, true, &mut j), RatlinkStatus::NotTwoComponent);
        assert!(j.is_null());
        assert_eq!(ratlink_jones_new(1, 4, true, &mut j), RatlinkStatus::Ok);
        ratlink_jones_free(j);
    }
}

#[test]
fn errors_are_per_thread() {
    let mut wr = 0i64;
    unsafe {
        assert_eq!(ratlink_writhe(1, 0, false, &mut wr), RatlinkStatus::OutOfRange);
    }
    std::thread::spawn(|| assert!(ratlink_last_error().is_null())).join().unwrap();
    assert!(!ratlink_last_error().is_null());
}
