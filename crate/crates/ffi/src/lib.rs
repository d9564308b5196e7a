//! C ABI over the fermion-diagrams engine.
//!
//! Every fallible call returns an [`FdStatus`]; on failure a message is kept
//! per thread and read with [`fd_last_error_message`]. Objects are opaque
//! handles released with their `*_free` function, and strings returned
//! through out-parameters are released with [`fd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fermion_diagrams::bimodule::{
    functoriality_check, make_context, soundness_check, verify_adjunctions, verify_dimensions, verify_zigzags,
    RepContext,
};
use fermion_diagrams::diagram::{direct_sum_witness, hom_dim, normalize, oracle_sweep, Morphism};
use fermion_diagrams::label::Label;
use fermion_diagrams::lang::{parse_diagram, parse_word, render_ascii, ParseError};
use fermion_diagrams::report::Report;
use fermion_diagrams::sign_words::inner_product_from;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    BoundaryError = 4,
    DomainError = 5,
    VerificationFailed = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdSuite {
    Iso = 0,
    Adjunction = 1,
    Zigzag = 2,
    Soundness = 3,
    Sweep = 4,
    Dimension = 5,
    Functoriality = 6,
}

/// A normalized 2-morphism.
pub struct FdMorphism {
    inner: Morphism,
}

/// A representation context for a fixed matrix size.
pub struct FdRepContext {
    inner: RepContext,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(FdStatus, String);

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        let status = match e {
            ParseError::Boundary { .. } => FdStatus::BoundaryError,
            _ => FdStatus::ParseError,
        };
        Failure(status, e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> FdStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FdStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FdStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(FdStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Failure(FdStatus::InvalidUtf8, e.to_string()))
}

fn label(value: i32) -> Result<Label, Failure> {
    Label::try_from(value).map_err(|e| Failure(FdStatus::DomainError, e.to_string()))
}

fn out_ptr<T>(out: *mut T) -> Result<&'static mut T, Failure> {
    // SAFETY: callers pass a pointer valid for writes, checked for null here.
    unsafe { out.as_mut() }.ok_or_else(|| Failure(FdStatus::NullPointer, "null output pointer".into()))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior nuls removed").into_raw()
}

/// Normalizes a diagram expression. `source` is 0 or 1 for the labeled
/// 2-category, or -1 for the unlabeled category.
///
/// # Safety
/// `diagram` must be a valid NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fd_normalize(diagram: *const c_char, source: i32, out: *mut *mut FdMorphism) -> FdStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let d = parse_diagram(text(diagram)?)?;
        let source = if source == -1 { None } else { Some(label(source)?) };
        *out = Box::into_raw(Box::new(FdMorphism { inner: normalize(&d, source) }));
        Ok(())
    })
}

/// Writes the morphism as JSON; release with `fd_string_free`.
///
/// # Safety
/// `m` must come from `fd_normalize` and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fd_morphism_to_json(m: *const FdMorphism, out: *mut *mut c_char) -> FdStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| Failure(FdStatus::NullPointer, "null morphism".into()))?;
        *out_ptr(out)? = into_c_string(m.inner.to_json().to_string());
        Ok(())
    })
}

/// Writes the ASCII rendering; release with `fd_string_free`.
///
/// # Safety
/// `m` must come from `fd_normalize` and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fd_morphism_render(m: *const FdMorphism, out: *mut *mut c_char) -> FdStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| Failure(FdStatus::NullPointer, "null morphism".into()))?;
        *out_ptr(out)? = into_c_string(render_ascii(&m.inner));
        Ok(())
    })
}

/// # Safety
/// `m` must come from `fd_normalize` and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fd_morphism_is_zero(m: *const FdMorphism, out: *mut bool) -> FdStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| Failure(FdStatus::NullPointer, "null morphism".into()))?;
        *out_ptr(out)? = m.inner.is_zero();
        Ok(())
    })
}

/// # Safety
/// `m` must be null or come from `fd_normalize`, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fd_morphism_free(m: *mut FdMorphism) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Dimension of the 2-morphisms from `bottom` to `top` read from `source`.
///
/// # Safety
/// String arguments must be valid NUL-terminated strings and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fd_hom_dim(bottom: *const c_char, top: *const c_char, source: i32, out: *mut usize) -> FdStatus {
    guard(|| {
        let b = parse_word(text(bottom)?)?;
        let t = parse_word(text(top)?)?;
        *out_ptr(out)? = hom_dim(&b, &t, label(source)?);
        Ok(())
    })
}

/// Fock inner product `<A_left n | A_right n>` for the reference state `|n>`.
///
/// # Safety
/// String arguments must be valid NUL-terminated strings and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fd_inner_product(
    left: *const c_char,
    right: *const c_char,
    reference: i32,
    out: *mut u64,
) -> FdStatus {
    guard(|| {
        let l = parse_word(text(left)?)?;
        let r = parse_word(text(right)?)?;
        let n = label(reference)?.value() as u8;
        *out_ptr(out)? = inner_product_from(&l, &r, n);
        Ok(())
    })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fd_rep_context_new(n: usize, out: *mut *mut FdRepContext) -> FdStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let ctx = make_context(n).map_err(|e| Failure(FdStatus::DomainError, e.to_string()))?;
        *out = Box::into_raw(Box::new(FdRepContext { inner: ctx }));
        Ok(())
    })
}

/// # Safety
/// `ctx` must be null or come from `fd_rep_context_new`, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fd_rep_context_free(ctx: *mut FdRepContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Runs a verification suite and writes its JSON report (when `report_json`
/// is non-null). Returns `FD_STATUS_VERIFICATION_FAILED` if any check fails.
///
/// # Safety
/// `ctx` must come from `fd_rep_context_new`; `report_json` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fd_verify(
    ctx: *const FdRepContext,
    suite: FdSuite,
    max_len: usize,
    samples: usize,
    seed: u64,
    report_json: *mut *mut c_char,
) -> FdStatus {
    guard(|| {
        let ctx = &ctx.as_ref().ok_or_else(|| Failure(FdStatus::NullPointer, "null context".into()))?.inner;
        let report = match suite {
            FdSuite::Iso => direct_sum_witness(),
            FdSuite::Adjunction => verify_adjunctions(ctx),
            FdSuite::Zigzag => verify_zigzags(ctx),
            FdSuite::Soundness => soundness_check(ctx, max_len, samples, seed),
            FdSuite::Dimension => verify_dimensions(ctx, max_len),
            FdSuite::Functoriality => functoriality_check(ctx, max_len, samples, seed),
            FdSuite::Sweep => {
                let mut r = Report::new(None);
                for s in Label::ALL {
                    let sweep = oracle_sweep(max_len, s);
                    r.push(format!("sweep from {s}"), sweep.mismatches.is_empty(), format!("{} pairs", sweep.pairs));
                }
                r
            }
        };
        if let Some(out) = report_json.as_mut() {
            *out = into_c_string(serde_json::to_string(&report).expect("reports serialize"));
        }
        if report.all_pass() {
            Ok(())
        } else {
            let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
            Err(Failure(FdStatus::VerificationFailed, format!("failed: {}", failed.join(", "))))
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn fd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
