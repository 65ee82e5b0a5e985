//! C ABI over `spaceform`.
//!
//! Groups are opaque `SfGroup` handles released with `sf_group_free`.
//! Every fallible call returns an `SfStatus`; on failure the message is
//! available from `sf_last_error_message` on the same thread. Strings
//! returned through out-parameters are owned by the caller and released
//! with `sf_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spaceform::builders::{build_tuple_with_limit, count_by_order, enumerate_tuples, SpaceFormTuple};
use spaceform::group::{is_isomorphic, DEFAULT_MAX_ORDER};
use spaceform::recognition::{classify_with, ClassifyOptions};
use spaceform::{Error, Group};

/// Opaque handle to a finite group given by its Cayley table.
pub struct SfGroup {
    group: Group,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidTable = 2,
    ParseError = 3,
    InvalidTuple = 4,
    TooLarge = 5,
    BadParameter = 6,
    /// The group is not a space-form group; the message holds the reason.
    Rejected = 7,
    Internal = 8,
    Panic = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SfStatus {
    match e {
        Error::NotSquare { .. }
        | Error::EntryOutOfRange { .. }
        | Error::WrongIdentity { .. }
        | Error::NotAssociative { .. }
        | Error::NotLatinSquare { .. } => SfStatus::InvalidTable,
        Error::Parse { .. } | Error::TupleParse { .. } | Error::UnitParse(_) => SfStatus::ParseError,
        Error::InvalidTuple(_) => SfStatus::InvalidTuple,
        Error::TooLarge { .. } => SfStatus::TooLarge,
        Error::BadParameter(_) | Error::PreconditionViolated(_) => SfStatus::BadParameter,
        _ => SfStatus::Internal,
    }
}

fn fail(e: Error) -> SfStatus {
    set_error(format!("{}: {e}", e.name()));
    status_of(&e)
}

fn guard<F: FnOnce() -> SfStatus>(f: F) -> SfStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("panic inside spaceform".into());
        SfStatus::Panic
    })
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, SfStatus> {
    if s.is_null() {
        set_error("null string argument".into());
        return Err(SfStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not UTF-8".into());
        SfStatus::ParseError
    })
}

unsafe fn give_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).expect("no interior nul").into_raw();
}

unsafe fn give_group(out: *mut *mut SfGroup, group: Group) {
    *out = Box::into_raw(Box::new(SfGroup { group }));
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            set_error(format!("null pointer: {}", stringify!($p)));
            return SfStatus::NullPointer;
        })+
    };
}

/// Message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a group from a row-major `n × n` table with identity 0.
///
/// # Safety
/// `table` must point to `n * n` readable entries; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_group_from_table(n: usize, table: *const u32, out: *mut *mut SfGroup) -> SfStatus {
    non_null!(table, out);
    guard(|| {
        if n == 0 || n > DEFAULT_MAX_ORDER {
            return fail(Error::TooLarge { order: n, cap: DEFAULT_MAX_ORDER });
        }
        let flat = std::slice::from_raw_parts(table, n * n).to_vec();
        match Group::from_flat(n, flat) {
            Ok(g) => {
                give_group(out, g);
                SfStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Parses the text table format: the order on the first line, then rows.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_group_parse(text: *const c_char, out: *mut *mut SfGroup) -> SfStatus {
    non_null!(out);
    guard(|| {
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Group::parse_table(text) {
            Ok(g) => {
                give_group(out, g);
                SfStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Builds the group of a canonical tuple such as
/// `TYPE=I;g=12;a=3;Gbar=[1,2];b=1;t=4`.
///
/// # Safety
/// `tuple` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_build_tuple(tuple: *const c_char, out: *mut *mut SfGroup) -> SfStatus {
    non_null!(out);
    guard(|| {
        let text = match read_str(tuple) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let built = text.parse::<SpaceFormTuple>().and_then(|t| build_tuple_with_limit(&t, DEFAULT_MAX_ORDER));
        match built {
            Ok(s) => {
                give_group(out, s.group);
                SfStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a group. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_group_free(g: *mut SfGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Order of the group, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sf_group_order(g: *const SfGroup) -> usize {
    g.as_ref().map_or(0, |g| g.group.order())
}

/// Product `a * b`, or `SIZE_MAX` if either id is out of range.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sf_group_mul(g: *const SfGroup, a: usize, b: usize) -> usize {
    match g.as_ref() {
        Some(g) if a < g.group.order() && b < g.group.order() => g.group.mul(a, b),
        _ => usize::MAX,
    }
}

/// Classifies a group. On success `*out` receives the canonical tuple.
/// A group that is not a space-form group gives `Rejected`, and the error
/// message reads `REJECT <code>: <reason>`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_classify(g: *const SfGroup, paranoid: bool, out: *mut *mut c_char) -> SfStatus {
    non_null!(g, out);
    guard(|| {
        let opts = ClassifyOptions { paranoid, ..ClassifyOptions::default() };
        match classify_with(&(*g).group, opts) {
            Ok(c) => {
                give_string(out, c.tuple.to_string());
                SfStatus::Ok
            }
            Err(r) => {
                set_error(format!("REJECT {}: {r}", r.reason.code()));
                SfStatus::Rejected
            }
        }
    })
}

/// Decides isomorphism by exhaustive search.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_is_isomorphic(a: *const SfGroup, b: *const SfGroup, out: *mut bool) -> SfStatus {
    non_null!(a, b, out);
    guard(|| match is_isomorphic(&(*a).group, &(*b).group) {
        Ok(iso) => {
            *out = iso.is_some();
            SfStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Every tuple of order at most `max_order`, one per line in canonical order.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_enumerate(max_order: u64, out: *mut *mut c_char) -> SfStatus {
    non_null!(out);
    guard(|| {
        if max_order > DEFAULT_MAX_ORDER as u64 {
            return fail(Error::TooLarge { order: max_order as usize, cap: DEFAULT_MAX_ORDER });
        }
        let lines: String = enumerate_tuples(max_order).iter().map(|t| format!("{t}\n")).collect();
        give_string(out, lines);
        SfStatus::Ok
    })
}

/// Writes the number of tuples of order `n` to `counts[n - 1]` for
/// `n = 1..=max_order`. `len` must be at least `max_order`.
///
/// # Safety
/// `counts` must point to `len` writable entries.
#[no_mangle]
pub unsafe extern "C" fn sf_count_by_order(max_order: u64, counts: *mut usize, len: usize) -> SfStatus {
    non_null!(counts);
    guard(|| {
        if max_order > DEFAULT_MAX_ORDER as u64 {
            return fail(Error::TooLarge { order: max_order as usize, cap: DEFAULT_MAX_ORDER });
        }
        if (len as u64) < max_order {
            return fail(Error::BadParameter(format!("buffer of {len} entries is shorter than {max_order}")));
        }
        let slots = std::slice::from_raw_parts_mut(counts, len);
        for (n, c) in count_by_order(max_order) {
            slots[n as usize - 1] = c;
        }
        SfStatus::Ok
    })
}
