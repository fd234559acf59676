//! C ABI over `intervalia`.
//!
//! Objects live behind opaque handles freed with their `*_free` function.
//! Every call returns an `IvStatus`; on failure `iv_last_error()` holds a
//! message for the calling thread. Strings handed out by the library must be
//! released with `iv_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use intervalia::construct2::two_count_permutation;
use intervalia::height3::two_count_height3;
use intervalia::io::{self, OrderAnalysisDoc, OrderDoc, PermAnalysisDoc, RepresentationDoc, VerdictDoc};
use intervalia::kcount::{is_k_count_order_with, is_k_count_perm_with, Options};
use intervalia::order::order_from_ascent;
use intervalia::perm::perm_depth;
use intervalia::{AscentSequence, Error, IntervalFamily, IntervalOrder, Permutation};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IvStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    NotAnIntervalOrder = 4,
    DepthExceeded = 5,
    HeightExceeded = 6,
    TooLarge = 7,
    IndexOutOfRange = 8,
    Internal = 9,
    Panic = 10,
}

pub struct IvOrder {
    inner: IntervalOrder,
}

pub struct IvPerm {
    inner: Permutation,
}

pub struct IvRep {
    inner: IntervalFamily,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> IvStatus {
    match e {
        Error::NotAnIntervalOrder { .. } | Error::NotAPartialOrder(_) => IvStatus::NotAnIntervalOrder,
        Error::DepthExceeded(_) => IvStatus::DepthExceeded,
        Error::HeightExceeded(_) => IvStatus::HeightExceeded,
        Error::TooLarge { .. } => IvStatus::TooLarge,
        Error::Internal(_)
        | Error::InfeasibleNormalization
        | Error::MissingExtremalAtLine(_)
        | Error::StructureViolation { .. }
        | Error::KeyInequalityViolated { .. } => IvStatus::Internal,
        _ => IvStatus::ParseError,
    }
}

/// Runs `f`, recording the error text and mapping panics.
fn guard(f: impl FnOnce() -> Result<(), IvStatus>) -> IvStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IvStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside intervalia");
            IvStatus::Panic
        }
    }
}

fn lib<T>(r: intervalia::Result<T>) -> Result<T, IvStatus> {
    r.map_err(|e| {
        set_error(&format!("{}: {e}", e.kind()));
        status_of(&e)
    })
}

fn null() -> IvStatus {
    set_error("null argument");
    IvStatus::NullArgument
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, IvStatus> {
    if s.is_null() {
        return Err(null());
    }
    unsafe { CStr::from_ptr(s) }.to_str().map_err(|_| {
        set_error("input is not valid UTF-8");
        IvStatus::InvalidUtf8
    })
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, IvStatus> {
    unsafe { p.as_ref() }.ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), IvStatus> {
    if out.is_null() {
        return Err(null());
    }
    unsafe { out.write(v) };
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), IvStatus> {
    let c = CString::new(s).map_err(|_| IvStatus::Internal)?;
    unsafe { put(out, c.into_raw()) }
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Message for the last failing call on this thread. Owned by the library;
/// valid until the next failing call.
#[no_mangle]
pub extern "C" fn iv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static version string.
#[no_mangle]
pub extern "C" fn iv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn iv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

// ---- orders

/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_order_from_ascent(text: *const c_char, out: *mut *mut IvOrder) -> IvStatus {
    guard(|| {
        let seq = lib(AscentSequence::parse(unsafe { read_str(text) }?))?;
        let o = order_from_ascent(&seq);
        unsafe { put(out, boxed(IvOrder { inner: o })) }
    })
}

/// Accepts the order JSON document (1-based relation pairs).
///
/// # Safety
/// `json` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_order_from_json(json: *const c_char, out: *mut *mut IvOrder) -> IvStatus {
    guard(|| {
        let doc: OrderDoc = lib(io::from_json(unsafe { read_str(json) }?))?;
        let o = lib(doc.to_interval_order())?;
        unsafe { put(out, boxed(IvOrder { inner: o })) }
    })
}

/// # Safety
/// `order` comes from this library or is null.
#[no_mangle]
pub unsafe extern "C" fn iv_order_free(order: *mut IvOrder) {
    if !order.is_null() {
        drop(unsafe { Box::from_raw(order) });
    }
}

/// # Safety
/// `order` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_order_len(order: *const IvOrder, out: *mut usize) -> IvStatus {
    guard(|| {
        let o = unsafe { deref(order) }?;
        unsafe { put(out, o.inner.len()) }
    })
}

/// 1 when `x` precedes `y` (0-based ids).
///
/// # Safety
/// `order` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_order_precedes(order: *const IvOrder, x: usize, y: usize, out: *mut i32) -> IvStatus {
    guard(|| {
        let o = unsafe { deref(order) }?;
        if x >= o.inner.len() || y >= o.inner.len() {
            set_error("element id out of range");
            return Err(IvStatus::IndexOutOfRange);
        }
        unsafe { put(out, i32::from(o.inner.lt(x, y))) }
    })
}

/// Analysis document as JSON; free with `iv_string_free`.
///
/// # Safety
/// `order` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_order_analyze_json(order: *const IvOrder, out: *mut *mut c_char) -> IvStatus {
    guard(|| {
        let o = unsafe { deref(order) }?;
        let d = lib(OrderAnalysisDoc::analyze(&o.inner))?;
        unsafe { put_string(out, io::to_json(&d)) }
    })
}

/// # Safety
/// `order` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_order_two_count(order: *const IvOrder, out: *mut *mut IvRep) -> IvStatus {
    guard(|| {
        let o = unsafe { deref(order) }?;
        let f = lib(two_count_height3(&o.inner))?;
        unsafe { put(out, boxed(IvRep { inner: f })) }
    })
}

/// Writes the verdict document as JSON.
///
/// # Safety
/// `order` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_order_k_count_json(
    order: *const IvOrder,
    k: usize,
    allow_large: bool,
    out: *mut *mut c_char,
) -> IvStatus {
    guard(|| {
        let o = unsafe { deref(order) }?;
        let v = lib(is_k_count_order_with(&o.inner, k, Options { allow_large, ..Default::default() }))?;
        unsafe { put_string(out, io::to_json(&VerdictDoc::from_verdict(&v))) }
    })
}

// ---- permutations

/// # Safety
/// `text` is a NUL-terminated string like `"[2,1,3]"`; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_perm_parse(text: *const c_char, out: *mut *mut IvPerm) -> IvStatus {
    guard(|| {
        let p = lib(Permutation::parse(unsafe { read_str(text) }?))?;
        unsafe { put(out, boxed(IvPerm { inner: p })) }
    })
}

/// # Safety
/// `perm` comes from this library or is null.
#[no_mangle]
pub unsafe extern "C" fn iv_perm_free(perm: *mut IvPerm) {
    if !perm.is_null() {
        drop(unsafe { Box::from_raw(perm) });
    }
}

/// Longest decreasing subsequence.
///
/// # Safety
/// `perm` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_perm_depth(perm: *const IvPerm, out: *mut usize) -> IvStatus {
    guard(|| {
        let p = unsafe { deref(perm) }?;
        unsafe { put(out, perm_depth(&p.inner)) }
    })
}

/// # Safety
/// `perm` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_perm_analyze_json(perm: *const IvPerm, out: *mut *mut c_char) -> IvStatus {
    guard(|| {
        let p = unsafe { deref(perm) }?;
        unsafe { put_string(out, io::to_json(&PermAnalysisDoc::analyze(&p.inner))) }
    })
}

/// # Safety
/// `perm` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_perm_two_count(perm: *const IvPerm, out: *mut *mut IvRep) -> IvStatus {
    guard(|| {
        let p = unsafe { deref(perm) }?;
        let f = lib(two_count_permutation(&p.inner))?;
        unsafe { put(out, boxed(IvRep { inner: f })) }
    })
}

/// # Safety
/// `perm` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_perm_k_count_json(
    perm: *const IvPerm,
    k: usize,
    allow_large: bool,
    out: *mut *mut c_char,
) -> IvStatus {
    guard(|| {
        let p = unsafe { deref(perm) }?;
        let v = lib(is_k_count_perm_with(&p.inner, k, Options { allow_large, ..Default::default() }))?;
        unsafe { put_string(out, io::to_json(&VerdictDoc::from_verdict(&v))) }
    })
}

// ---- representations

/// # Safety
/// `rep` comes from this library or is null.
#[no_mangle]
pub unsafe extern "C" fn iv_rep_free(rep: *mut IvRep) {
    if !rep.is_null() {
        drop(unsafe { Box::from_raw(rep) });
    }
}

/// # Safety
/// `rep` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_rep_len(rep: *const IvRep, out: *mut usize) -> IvStatus {
    guard(|| {
        let r = unsafe { deref(rep) }?;
        unsafe { put(out, r.inner.len()) }
    })
}

/// Number of distinct interval lengths.
///
/// # Safety
/// `rep` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_rep_length_count(rep: *const IvRep, out: *mut usize) -> IvStatus {
    guard(|| {
        let r = unsafe { deref(rep) }?;
        unsafe { put(out, r.inner.distinct_lengths().len()) }
    })
}

/// Endpoints of element `i` (0-based) as `"p/q"` strings; free both.
///
/// # Safety
/// `rep` is a live handle; `l` and `r` are writable.
#[no_mangle]
pub unsafe extern "C" fn iv_rep_interval(
    rep: *const IvRep,
    i: usize,
    l: *mut *mut c_char,
    r: *mut *mut c_char,
) -> IvStatus {
    guard(|| {
        let rp = unsafe { deref(rep) }?;
        if l.is_null() || r.is_null() {
            return Err(null());
        }
        if i >= rp.inner.len() {
            set_error("element id out of range");
            return Err(IvStatus::IndexOutOfRange);
        }
        let iv = rp.inner.get(i);
        unsafe {
            put_string(l, intervalia::rational::format(&iv.l))?;
            put_string(r, intervalia::rational::format(&iv.r))
        }
    })
}

/// Representation document as JSON.
///
/// # Safety
/// `rep` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn iv_rep_to_json(rep: *const IvRep, out: *mut *mut c_char) -> IvStatus {
    guard(|| {
        let r = unsafe { deref(rep) }?;
        unsafe { put_string(out, io::to_json(&RepresentationDoc::from_family(&r.inner))) }
    })
}
