//! C interface to `stringhodge`.
//!
//! Polytopes and groups live behind opaque handles. Results that carry
//! structure are returned as JSON strings in the same schemas the CLI prints;
//! release them with [`sx_string_free`]. Every fallible call returns an
//! [`SxStatus`] and records a message readable through [`sx_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde::Serialize;
use stringhodge::io::{parse_json, GroupFile};
use stringhodge::orbifold::{orbifold_hodge, OrbifoldInput};
use stringhodge::quotient::FiniteGroup;
use stringhodge::stringy::{self, Mode};
use stringhodge::{Error, LatticePolytope};

/// Status codes; the nonzero values below 5 match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SxStatus {
    Ok = 0,
    InvalidInput = 2,
    LimitExceeded = 3,
    IdentityViolation = 4,
    NullPointer = 5,
    Panic = 6,
}

/// Opaque lattice polytope.
pub struct SxPolytope(LatticePolytope);

/// Opaque finite group with its conjugacy classes.
pub struct SxGroup(FiniteGroup);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SxStatus {
    match e.exit_code() {
        3 => SxStatus::LimitExceeded,
        4 => SxStatus::IdentityViolation,
        _ => SxStatus::InvalidInput,
    }
}

fn guard(f: impl FnOnce() -> Result<(), SxStatus>) -> SxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SxStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            SxStatus::Panic
        }
    }
}

fn lift<T>(r: stringhodge::Result<T>) -> Result<T, SxStatus> {
    r.map_err(|e| {
        set_error(&e.to_string());
        status_of(&e)
    })
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, SxStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(SxStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not UTF-8");
        SxStatus::InvalidInput
    })
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, SxStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle");
        SxStatus::NullPointer
    })
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), SxStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(SxStatus::NullPointer);
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn write_json<T: Serialize>(out: *mut *mut c_char, value: &T) -> Result<(), SxStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(SxStatus::NullPointer);
    }
    let text = lift(serde_json::to_string(value).map_err(Error::from))?;
    *out = CString::new(text).expect("JSON has no interior NUL").into_raw();
    Ok(())
}

/// Message for the most recent failure on this thread; empty after success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn sx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn sx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{"ambient_dim": d, "vertices": [[...], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sx_polytope_from_json(json: *const c_char, out: *mut *mut SxPolytope) -> SxStatus {
    guard(|| {
        let p: LatticePolytope = lift(parse_json(read_str(json)?))?;
        write_out(out, SxPolytope(p))
    })
}

/// # Safety
/// `p` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn sx_polytope_free(p: *mut SxPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Dimension of the polytope, or `-1` for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sx_polytope_dim(p: *const SxPolytope) -> i64 {
    p.as_ref().map_or(-1, |p| p.0.dim() as i64)
}

/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sx_polytope_is_reflexive(p: *const SxPolytope) -> bool {
    p.as_ref().is_some_and(|p| p.0.is_reflexive())
}

/// # Safety
/// `p` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sx_polytope_dual(p: *const SxPolytope, out: *mut *mut SxPolytope) -> SxStatus {
    guard(|| {
        let dual = lift(deref(p)?.0.polar_dual())?;
        write_out(out, SxPolytope(dual))
    })
}

/// `{"s": [...], "s_tilde": [...] | null}`.
///
/// # Safety
/// `p` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sx_polytope_s_polynomial(p: *const SxPolytope, out: *mut *mut c_char) -> SxStatus {
    guard(|| {
        let p = &deref(p)?.0;
        let s_tilde = if p.is_simplex() { Some(lift(p.box_polynomials())?.1) } else { None };
        write_json(out, &serde_json::json!({ "s": p.s_polynomial(), "s_tilde": s_tilde }))
    })
}

/// # Safety
/// `p` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sx_stringy_fano(p: *const SxPolytope, out: *mut *mut c_char) -> SxStatus {
    guard(|| {
        let e = lift(stringy::e_st_fano(&deref(p)?.0))?;
        write_json(out, &serde_json::json!({ "e_st": e, "hodge_diamond": e.hodge_numbers() }))
    })
}

/// Hypersurface invariants; `u1` selects the `u = 1` specialization.
///
/// # Safety
/// `p` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sx_stringy_hypersurface(p: *const SxPolytope, u1: bool, out: *mut *mut c_char) -> SxStatus {
    guard(|| {
        let mode = if u1 { Mode::UEqualsOne } else { Mode::FullSimplex };
        let inv = lift(stringy::e_st_hypersurface(&deref(p)?.0, mode))?;
        write_json(out, &inv)
    })
}

/// # Safety
/// `p` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sx_stringy_mirror(p: *const SxPolytope, out: *mut *mut c_char) -> SxStatus {
    guard(|| {
        let r = lift(stringy::mirror_check(&deref(p)?.0))?;
        write_json(out, &r)
    })
}

/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sx_stringy_dwork(d: u32, out: *mut *mut c_char) -> SxStatus {
    guard(|| {
        let inv = lift(stringy::dwork_invariants(d as usize))?;
        write_json(out, &inv)
    })
}

/// Parses `{"degree": d, "generators": [...]}` and closes the group, failing
/// with `LimitExceeded` past `cap` elements.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sx_group_from_json(json: *const c_char, cap: usize, out: *mut *mut SxGroup) -> SxStatus {
    guard(|| {
        let f: GroupFile = lift(parse_json(read_str(json)?))?;
        let g = lift(f.generate(cap))?;
        write_out(out, SxGroup(g))
    })
}

/// # Safety
/// `g` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn sx_group_free(g: *mut SxGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Group order, or `0` for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sx_group_order(g: *const SxGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sx_group_num_classes(g: *const SxGroup) -> usize {
    g.as_ref().map_or(0, |g| g.0.classes().len())
}

/// `{"s": [...], "s_tilde": [...]}`.
///
/// # Safety
/// `g` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sx_group_s_polynomials(g: *const SxGroup, out: *mut *mut c_char) -> SxStatus {
    guard(|| {
        let (s, s_tilde) = lift(deref(g)?.0.s_polynomials())?;
        write_json(out, &serde_json::json!({ "s": s, "s_tilde": s_tilde }))
    })
}

/// Orbifold Hodge numbers from a sector file given as a JSON string.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sx_orbifold_hodge(json: *const c_char, out: *mut *mut c_char) -> SxStatus {
    guard(|| {
        let input: OrbifoldInput = lift(parse_json(read_str(json)?))?;
        let r = lift(orbifold_hodge(&input))?;
        write_json(out, &r)
    })
}
