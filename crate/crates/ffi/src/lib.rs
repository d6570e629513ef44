//! C ABI over `ratlink`. Every function returns a [`RatlinkStatus`]; on
//! failure `ratlink_last_error` describes the problem. Strings handed out
//! must be released with `ratlink_string_free`, handles with their own
//! `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use num_traits::ToPrimitive;
use ratlink::frieze::{frieze_from_word, frieze_of, Frieze};
use ratlink::jones::{jones, jones_plus_minus, JonesValue};
use ratlink::lr_words::{LRWord, Orbit};
use ratlink::rational::Fraction;
use ratlink::writhe::{writhe_plus_minus, writhe_principal};
use ratlink::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatlinkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    OutOfRange = 3,
    NotTwoComponent = 4,
    Overflow = 5,
    Internal = 6,
}

/// Opaque frieze handle.
pub struct RatlinkFrieze(Frieze);

/// Opaque Jones polynomial handle.
pub struct RatlinkJones(JonesValue);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> RatlinkStatus {
    match e {
        Error::OutOfRange(_) | Error::NonPositive(_) | Error::InvalidQ(_) => RatlinkStatus::OutOfRange,
        Error::NotTwoComponent(_) => RatlinkStatus::NotTwoComponent,
        Error::Overflow => RatlinkStatus::Overflow,
        Error::PathMismatch(_) | Error::DiamondRule { .. } | Error::Internal(_) => RatlinkStatus::Internal,
        _ => RatlinkStatus::InvalidInput,
    }
}

/// Runs `f`, recording errors and containing panics.
fn guard(f: impl FnOnce() -> Result<(), (RatlinkStatus, String)> + UnwindSafe) -> RatlinkStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            RatlinkStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            RatlinkStatus::Internal
        }
    }
}

type FfiResult<T> = Result<T, (RatlinkStatus, String)>;

fn lift<T>(r: ratlink::Result<T>) -> FfiResult<T> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn fraction(p: u64, q: u64) -> FfiResult<Fraction> {
    lift(Fraction::new(p, q))
}

fn null(name: &str) -> (RatlinkStatus, String) {
    (RatlinkStatus::NullPointer, format!("{name} is null"))
}

/// # Safety
/// `out` must be null or valid for a write of `T`.
unsafe fn write_out<T>(out: *mut T, value: T, name: &str) -> FfiResult<()> {
    if out.is_null() {
        return Err(null(name));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> FfiResult<*mut c_char> {
    CString::new(s).map(CString::into_raw).map_err(|e| (RatlinkStatus::Internal, e.to_string()))
}

/// Message for the last failed call on this thread, or null. Owned by the
/// library; valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ratlink_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Writhe of `D(T(p/q))`; with `plus_minus` nonzero, the second component
/// is reversed.
///
/// # Safety
/// `out` must be valid for a write of `int64_t`.
#[no_mangle]
pub unsafe extern "C" fn ratlink_writhe(p: u64, q: u64, plus_minus: bool, out: *mut i64) -> RatlinkStatus {
    guard(move || {
        let a = fraction(p, q)?;
        let wr = lift(if plus_minus { writhe_plus_minus(a) } else { writhe_principal(a) })?;
        write_out(out, wr, "out")
    })
}

/// Numerators of `p/q`, `i`, `r`, `ir`, in that order.
///
/// # Safety
/// `out` must point to four writable `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn ratlink_orbit(p: u64, q: u64, out: *mut u64) -> RatlinkStatus {
    guard(move || {
        let o = lift(Orbit::of(fraction(p, q)?))?;
        if out.is_null() {
            return Err(null("out"));
        }
        for (k, m) in o.as_array().iter().enumerate() {
            out.add(k).write(m.num());
        }
        Ok(())
    })
}

/// Frieze of `p/q`.
///
/// # Safety
/// `out` must be valid for a write of a pointer.
#[no_mangle]
pub unsafe extern "C" fn ratlink_frieze_new(p: u64, q: u64, out: *mut *mut RatlinkFrieze) -> RatlinkStatus {
    guard(move || {
        let f = lift(frieze_of(fraction(p, q)?))?;
        write_out(out, Box::into_raw(Box::new(RatlinkFrieze(f))), "out")
    })
}

/// Frieze of an `L`/`R` word; the empty string gives the frieze of `1/2`.
///
/// # Safety
/// `word` must be a NUL-terminated string and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ratlink_frieze_from_word(word: *const c_char, out: *mut *mut RatlinkFrieze) -> RatlinkStatus {
    guard(move || {
        if word.is_null() {
            return Err(null("word"));
        }
        let text = CStr::from_ptr(word).to_str().map_err(|e| (RatlinkStatus::InvalidInput, e.to_string()))?;
        let w: LRWord = lift(text.parse())?;
        let f = lift(frieze_from_word(&w))?;
        write_out(out, Box::into_raw(Box::new(RatlinkFrieze(f))), "out")
    })
}

/// Largest entry, `order` (period) and `height` (interior rows).
///
/// # Safety
/// `frieze` must come from `ratlink_frieze_new`; outputs may be null.
#[no_mangle]
pub unsafe extern "C" fn ratlink_frieze_shape(
    frieze: *const RatlinkFrieze,
    max: *mut u64,
    order: *mut u64,
    height: *mut u64,
) -> RatlinkStatus {
    guard(move || {
        let f = &frieze.as_ref().ok_or_else(|| null("frieze"))?.0;
        if !max.is_null() {
            max.write(f.max_entry_with_neighbors().max);
        }
        if !order.is_null() {
            order.write(f.order() as u64);
        }
        if !height.is_null() {
            height.write(f.height() as u64);
        }
        Ok(())
    })
}

/// Entry at `row` (0 and `height + 1` are the rows of 1s) and half-column
/// `col`. Positions off the row's lattice give `InvalidInput`.
///
/// # Safety
/// `frieze` must come from `ratlink_frieze_new`; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ratlink_frieze_entry(
    frieze: *const RatlinkFrieze,
    row: u64,
    col: i64,
    out: *mut u64,
) -> RatlinkStatus {
    guard(move || {
        let f = &frieze.as_ref().ok_or_else(|| null("frieze"))?.0;
        let v = f
            .entry(row as usize, col)
            .ok_or((RatlinkStatus::InvalidInput, format!("no entry at row {row}, column {col}")))?;
        write_out(out, v, "out")
    })
}

/// JSON `{"order", "rows", "offsets"}`; free with `ratlink_string_free`.
///
/// # Safety
/// `frieze` must come from `ratlink_frieze_new`; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ratlink_frieze_json(frieze: *const RatlinkFrieze, out: *mut *mut c_char) -> RatlinkStatus {
    guard(move || {
        let f = &frieze.as_ref().ok_or_else(|| null("frieze"))?.0;
        let json = serde_json::to_string(f).map_err(|e| (RatlinkStatus::Internal, e.to_string()))?;
        write_out(out, into_c_string(json)?, "out")
    })
}

/// # Safety
/// `frieze` must be null or come from `ratlink_frieze_new`, freed once.
#[no_mangle]
pub unsafe extern "C" fn ratlink_frieze_free(frieze: *mut RatlinkFrieze) {
    if !frieze.is_null() {
        drop(Box::from_raw(frieze));
    }
}

/// Jones polynomial of `D(T(p/q))`, or of the link with its second
/// component reversed when `plus_minus` is nonzero.
///
/// # Safety
/// `out` must be valid for a write of a pointer.
#[no_mangle]
pub unsafe extern "C" fn ratlink_jones_new(p: u64, q: u64, plus_minus: bool, out: *mut *mut RatlinkJones) -> RatlinkStatus {
    guard(move || {
        let a = fraction(p, q)?;
        let v = lift(if plus_minus { jones_plus_minus(a) } else { jones(a) })?;
        write_out(out, Box::into_raw(Box::new(RatlinkJones(v))), "out")
    })
}

/// Number of terms in `t^(1/2)`.
///
/// # Safety
/// `jones` must come from `ratlink_jones_new`; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ratlink_jones_term_count(jones: *const RatlinkJones, out: *mut u64) -> RatlinkStatus {
    guard(move || {
        let v = &jones.as_ref().ok_or_else(|| null("jones"))?.0;
        write_out(out, v.poly_t.term_count() as u64, "out")
    })
}

/// Term `index` in descending order: the power of `t^(1/2)` and its
/// coefficient. Coefficients beyond `int64_t` give `Overflow`.
///
/// # Safety
/// `jones` must come from `ratlink_jones_new`; outputs valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ratlink_jones_term(
    jones: *const RatlinkJones,
    index: u64,
    exponent: *mut i64,
    coefficient: *mut i64,
) -> RatlinkStatus {
    guard(move || {
        let v = &jones.as_ref().ok_or_else(|| null("jones"))?.0;
        let (e, c) = v
            .poly_t
            .terms()
            .rev()
            .nth(index as usize)
            .ok_or((RatlinkStatus::OutOfRange, format!("term {index} out of range")))?;
        let c = c.to_i64().ok_or((RatlinkStatus::Overflow, format!("coefficient {c} exceeds int64_t")))?;
        write_out(exponent, e, "exponent")?;
        write_out(coefficient, c, "coefficient")
    })
}

/// Text form `t^(k/2)(...)`. With `use_prefactor` zero a default `k` is
/// chosen. Free with `ratlink_string_free`.
///
/// # Safety
/// `jones` must come from `ratlink_jones_new`; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ratlink_jones_string(
    jones: *const RatlinkJones,
    use_prefactor: bool,
    prefactor: i64,
    out: *mut *mut c_char,
) -> RatlinkStatus {
    guard(move || {
        let v = &jones.as_ref().ok_or_else(|| null("jones"))?.0;
        let text = v.pretty(use_prefactor.then_some(prefactor));
        write_out(out, into_c_string(text)?, "out")
    })
}

/// # Safety
/// `jones` must be null or come from `ratlink_jones_new`, freed once.
#[no_mangle]
pub unsafe extern "C" fn ratlink_jones_free(jones: *mut RatlinkJones) {
    if !jones.is_null() {
        drop(Box::from_raw(jones));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn ratlink_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
