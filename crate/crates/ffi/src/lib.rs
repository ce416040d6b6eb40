//! C ABI for `grr-core`.
//!
//! Groups are opaque handles created from spec strings. Element lists are
//! passed as text in the CLI set-file format. Structured results come back
//! as JSON strings owned by the caller and released with
//! [`grr_string_free`]. Every call returns a [`GrrStatus`]; on failure the
//! message is available from [`grr_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, size_t};

use grr_core::autgrp;
use grr_core::cli::classify;
use grr_core::construct::{grr_pipeline, ConstructOptions, DEFAULT_BUDGET};
use grr_core::groups::classify::Mode;
use grr_core::groups::{AnyGroup, Group};
use grr_core::randwalk::{self, StepMeasure};
use grr_core::set::{parse_elements, SymmetricSet};
use grr_core::{with_group, Error};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrrStatus {
    Ok = 0,
    InvalidArgument = 1,
    HypothesisRefused = 2,
    SearchFailure = 3,
    Io = 4,
    Parse = 5,
    Unsupported = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrrMode {
    Grr = 0,
    Drr = 1,
    Orr = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrrQuantity {
    Commute = 0,
    /// `P(g_n² = 1)`.
    Involution = 1,
}

/// A Monte Carlo estimate with its Hoeffding radius at `δ = 0.01`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct GrrEstimate {
    pub estimate: f64,
    pub radius: f64,
    pub samples: u64,
    pub hits: u64,
}

/// Opaque group handle.
pub struct GrrGroup {
    inner: AnyGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> GrrStatus {
    match e {
        Error::HypothesisRefused { .. } => GrrStatus::HypothesisRefused,
        Error::SearchFailure { .. } | Error::BudgetExhausted(_) => GrrStatus::SearchFailure,
        Error::Io(_) => GrrStatus::Io,
        Error::ParseElement { .. } | Error::UnknownGroup(_) | Error::Malformed(_) | Error::Json(_) => GrrStatus::Parse,
        Error::Unsupported(_) | Error::ScopeRequired(_) => GrrStatus::Unsupported,
        Error::InvalidSet(_) => GrrStatus::InvalidArgument,
        Error::Internal(_) => GrrStatus::Internal,
    }
}

/// Runs `f`, converting errors and panics into a status and the
/// thread-local message.
fn guard(f: impl FnOnce() -> Result<(), Error>) -> GrrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            GrrStatus::Ok
        }
        Ok(Err(e)) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("panic inside grr".into());
            GrrStatus::Internal
        }
    }
}

fn invalid(what: &str) -> Error {
    Error::InvalidSet(format!("invalid argument: {what}"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Error> {
    if p.is_null() {
        return Err(invalid(&format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Error::Malformed(format!("{what} is not UTF-8")))
}

unsafe fn group<'a>(g: *const GrrGroup) -> Result<&'a AnyGroup, Error> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| invalid("group handle is null"))
}

unsafe fn write_json(out: *mut *mut c_char, value: &serde_json::Value) -> Result<(), Error> {
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    let s = CString::new(serde_json::to_string(value)?).map_err(|e| Error::Internal(e.to_string()))?;
    *out = s.into_raw();
    Ok(())
}

fn mode(m: GrrMode) -> Mode {
    match m {
        GrrMode::Grr => Mode::Grr,
        GrrMode::Drr => Mode::Drr,
        GrrMode::Orr => Mode::Orr,
    }
}

/// The last error message on this thread, or null. Valid until the next
/// call on this thread.
#[no_mangle]
pub extern "C" fn grr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn grr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a group from a spec string such as `"symmetric:4"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn grr_group_new(spec: *const c_char, out: *mut *mut GrrGroup) -> GrrStatus {
    guard(|| {
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        let inner = AnyGroup::from_spec(text(spec, "spec")?)?;
        *out = Box::into_raw(Box::new(GrrGroup { inner }));
        Ok(())
    })
}

/// Releases a group handle. Null is ignored.
///
/// # Safety
/// `g` must come from [`grr_group_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn grr_group_free(g: *mut GrrGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Writes the order, or 0 for an infinite group.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn grr_group_order(g: *const GrrGroup, out: *mut size_t) -> GrrStatus {
    guard(|| {
        let g = group(g)?;
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        *out = g.order().unwrap_or(0);
        Ok(())
    })
}

/// Classification against the exception list of `mode`, as JSON.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn grr_classify(g: *const GrrGroup, m: GrrMode, out: *mut *mut c_char) -> GrrStatus {
    guard(|| {
        let c = classify(group(g)?, mode(m));
        write_json(out, &serde_json::to_value(c)?)
    })
}

/// Full regularity report for Cay(G, S) as JSON. `set` lists the
/// connection set; for [`GrrMode::Grr`] it must be closed under inverses.
///
/// # Safety
/// `g` must be a live handle, `set` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn grr_verify(
    g: *const GrrGroup,
    set: *const c_char,
    m: GrrMode,
    out: *mut *mut c_char,
) -> GrrStatus {
    guard(|| {
        let set = text(set, "set")?;
        let report = with_group!(group(g)?, g => {
            let s = SymmetricSet::new(g, parse_elements(g, set)?, m == GrrMode::Grr)?;
            autgrp::verify(g, &s, mode(m))?
        });
        write_json(out, &serde_json::to_value(report)?)
    })
}

/// Whether Cay(G, S) is a regular representation of the given kind.
///
/// # Safety
/// `g` must be a live handle, `set` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn grr_is_regular(
    g: *const GrrGroup,
    set: *const c_char,
    m: GrrMode,
    out: *mut bool,
) -> GrrStatus {
    guard(|| {
        let set = text(set, "set")?;
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        *out = with_group!(group(g)?, g => {
            let s = SymmetricSet::new(g, parse_elements(g, set)?, m == GrrMode::Grr)?;
            autgrp::is_regular(g, &s, mode(m))?
        });
        Ok(())
    })
}

/// Runs the construction pipeline from `gens` (null for the declared
/// generators) and writes the trace as JSON. `budget` 0 means the default.
/// On a search failure the partial trace is still written.
///
/// # Safety
/// `g` must be a live handle, `gens` null or NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn grr_construct(
    g: *const GrrGroup,
    gens: *const c_char,
    budget: size_t,
    out: *mut *mut c_char,
) -> GrrStatus {
    guard(|| {
        let gens = if gens.is_null() { None } else { Some(text(gens, "gens")?) };
        let opts = ConstructOptions { budget: if budget == 0 { DEFAULT_BUDGET } else { budget }, ..Default::default() };
        let (doc, err) = with_group!(group(g)?, g => {
            let gens = match gens {
                Some(t) => parse_elements(g, t)?,
                None => g.generators(),
            };
            let (_, trace, err) = grr_pipeline(g, &gens, &opts)?;
            (trace.to_json(g), err)
        });
        write_json(out, &doc)?;
        err.map_or(Ok(()), Err)
    })
}

/// Estimates a random-walk probability at walk length `n` with the lazy
/// uniform measure on the declared generators.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn grr_probe(
    g: *const GrrGroup,
    q: GrrQuantity,
    n: size_t,
    samples: size_t,
    seed: u64,
    out: *mut GrrEstimate,
) -> GrrStatus {
    guard(|| {
        if out.is_null() || samples == 0 {
            return Err(invalid("null output or zero samples"));
        }
        let e = with_group!(group(g)?, g => {
            let mu = StepMeasure::lazy_uniform(g, &g.generators())?;
            match q {
                GrrQuantity::Commute => randwalk::estimate_commute_probability(g, &mu, n, samples, seed),
                GrrQuantity::Involution => {
                    randwalk::estimate_square_probability(g, &mu, &g.identity(), n, samples, seed)
                }
            }
        });
        *out = GrrEstimate { estimate: e.estimate, radius: e.radius, samples: e.samples as u64, hits: e.hits as u64 };
        Ok(())
    })
}
