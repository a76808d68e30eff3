//! C ABI over the `mdepth` engine.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `*_free`. Every fallible call returns an `MdStatus`;
//! on failure `md_last_error` describes the most recent error on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use mdepth::filtration::{self, SeqCmVerdict};
use mdepth::invariants;
use mdepth::parse;
use mdepth::report::{self, Format};
use mdepth::{Error, FieldSpec, ModuleProfile, MonomialIdeal};

/// Status codes; the numeric values match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdStatus {
    Ok = 0,
    Consistency = 1,
    Malformed = 2,
    CapExceeded = 3,
    Precondition = 4,
    NullArgument = 5,
    Panic = 6,
}

/// A monomial ideal together with its ring.
pub struct MdIdeal(MonomialIdeal);

/// Computed invariants of a quotient ring.
pub struct MdProfile(ModuleProfile);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> MdStatus {
    match e.exit_code() {
        1 => MdStatus::Consistency,
        2 => MdStatus::Malformed,
        3 => MdStatus::CapExceeded,
        _ => MdStatus::Precondition,
    }
}

fn guard(f: impl FnOnce() -> Result<(), MdStatus>) -> MdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MdStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            MdStatus::Panic
        }
    }
}

fn lift<T>(r: mdepth::Result<T>) -> Result<T, MdStatus> {
    r.map_err(|e| {
        set_error(format!("{}: {}", e.kind(), e));
        status_of(&e)
    })
}

fn null() -> MdStatus {
    set_error("null argument".into());
    MdStatus::NullArgument
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, MdStatus> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("input is not valid UTF-8".into());
        MdStatus::Malformed
    })
}

fn field(characteristic: u64) -> Result<FieldSpec, MdStatus> {
    if characteristic == 0 {
        Ok(FieldSpec::Rationals)
    } else {
        lift(FieldSpec::prime(characteristic))
    }
}

unsafe fn put<T>(out: *mut *mut T, v: T) -> Result<(), MdStatus> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(v));
    Ok(())
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, MdStatus> {
    p.as_ref().ok_or_else(null)
}

/// Message for the last failed call on this thread. The pointer stays valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn md_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses generator text, ideal JSON, facet JSON or an edge list.
/// `characteristic` 0 selects the rationals.
///
/// # Safety
/// `input` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_ideal_parse(input: *const c_char, characteristic: u64, out: *mut *mut MdIdeal) -> MdStatus {
    guard(|| {
        let t = text(input)?;
        let f = field(characteristic)?;
        put(out, MdIdeal(lift(parse::parse_any(t, None, f))?))
    })
}

/// Edge ideal of a graph given as `n=5; edges=1-2,2-3`.
///
/// # Safety
/// `edges` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_ideal_from_edges(edges: *const c_char, characteristic: u64, out: *mut *mut MdIdeal) -> MdStatus {
    guard(|| {
        let t = text(edges)?;
        let f = field(characteristic)?;
        let g = lift(parse::parse_edge_list(t))?;
        put(out, MdIdeal(lift(g.edge_ideal(f))?))
    })
}

/// # Safety
/// `ideal` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn md_ideal_free(ideal: *mut MdIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Number of ring variables, or 0 for a null handle.
///
/// # Safety
/// `ideal` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_ideal_nvars(ideal: *const MdIdeal) -> usize {
    ideal.as_ref().map_or(0, |i| i.0.nvars())
}

/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_profile_compute(ideal: *const MdIdeal, out: *mut *mut MdProfile) -> MdStatus {
    guard(|| {
        let i = get(ideal)?;
        put(out, MdProfile(lift(invariants::profile(&i.0))?))
    })
}

/// # Safety
/// `profile` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn md_profile_free(profile: *mut MdProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

/// Krull dimension; 0 for a null handle.
///
/// # Safety
/// `profile` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_profile_dim(profile: *const MdProfile) -> usize {
    profile.as_ref().map_or(0, |p| p.0.dim)
}

/// Depth; 0 for a null handle.
///
/// # Safety
/// `profile` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_profile_depth(profile: *const MdProfile) -> usize {
    profile.as_ref().map_or(0, |p| p.0.depth)
}

/// Smallest dimension of an associated prime; 0 for a null handle.
///
/// # Safety
/// `profile` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_profile_mdepth(profile: *const MdProfile) -> usize {
    profile.as_ref().map_or(0, |p| p.0.mdepth)
}

/// Whether depth equals mdepth; false for a null handle.
///
/// # Safety
/// `profile` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_profile_maximal_depth(profile: *const MdProfile) -> bool {
    profile.as_ref().is_some_and(|p| p.0.flags.maximal_depth)
}

/// Whether depth equals dimension; false for a null handle.
///
/// # Safety
/// `profile` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_profile_cohen_macaulay(profile: *const MdProfile) -> bool {
    profile.as_ref().is_some_and(|p| p.0.flags.cohen_macaulay)
}

/// Whether all associated primes have the top dimension; false for a null handle.
///
/// # Safety
/// `profile` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_profile_unmixed(profile: *const MdProfile) -> bool {
    profile.as_ref().is_some_and(|p| p.0.flags.unmixed)
}

/// Whether every lower local cohomology module has finite length; false for a null handle.
///
/// # Safety
/// `profile` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_profile_generalized_cm(profile: *const MdProfile) -> bool {
    profile.as_ref().is_some_and(|p| p.0.flags.generalized_cm)
}

/// Number of associated primes; 0 for a null handle.
///
/// # Safety
/// `profile` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn md_profile_ass_count(profile: *const MdProfile) -> usize {
    profile.as_ref().map_or(0, |p| p.0.ass.len())
}

/// Profile as JSON. Free the string with `md_string_free`.
///
/// # Safety
/// `profile` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_profile_to_json(profile: *const MdProfile, out: *mut *mut c_char) -> MdStatus {
    guard(|| {
        let p = get(profile)?;
        if out.is_null() {
            return Err(null());
        }
        let json = report::profile(&p.0, Format::Json);
        *out = CString::new(json).expect("JSON has no nul bytes").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn md_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Sequential Cohen-Macaulay decision: `*out` is 1, 0, or -1 when undecided
/// (non-squarefree input).
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn md_seqcm(ideal: *const MdIdeal, out: *mut i32) -> MdStatus {
    guard(|| {
        let i = get(ideal)?;
        if out.is_null() {
            return Err(null());
        }
        *out = match lift(filtration::is_sequentially_cm(&i.0))? {
            SeqCmVerdict::Decided { sequentially_cm, .. } => i32::from(sequentially_cm),
            SeqCmVerdict::Undecided(_) => -1,
        };
        Ok(())
    })
}
