//! C ABI for `abcover`.
//!
//! Objects are opaque handles created by `abc_*_new`/`abc_*_parse` and
//! released by the matching `abc_*_free`. Fallible calls return an
//! [`AbcStatus`] and write their result through an out-pointer; the message
//! of the last failure on the calling thread is available from
//! [`abc_last_error`]. Strings returned by the library are owned by the
//! caller and must be released with [`abc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use abcover::output::{evaluate, row_json};
use abcover::{Behavior, CompleteIntersection, Configuration, CoverSpec, Error, ObstructionResult, OutputRow, Summary};

/// Result codes of fallible calls.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    EmptyMultidegree = 3,
    DegreeTooSmall = 4,
    CodimTooLarge = 5,
    InvalidCover = 6,
    InvalidParameter = 7,
    Internal = 8,
}

/// Strongest behaviour shown by a configuration.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbcSummary {
    Inconclusive = 0,
    DegreePreserved = 1,
    HalvesDegree = 2,
    Birational = 3,
    Embedding = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbcBehavior {
    DegreePreserved = 0,
    Birational = 1,
    EmbeddingA = 2,
    EmbeddingB = 3,
    HalvesDegree = 4,
    HalvesDegreeSmoothImage = 5,
}

/// Outcome of the complete-intersection obstruction search.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbcObstruction {
    Solvable = 0,
    InfeasibleAmGm = 1,
    InfeasibleExhausted = 2,
    SearchBudgetExceeded = 3,
}

/// A smooth complete intersection in projective space.
pub struct AbcCi(CompleteIntersection);

/// A cover description.
pub struct AbcCover(CoverSpec);

/// All computed data for one (complete intersection, cover) pair.
pub struct AbcReport(Configuration);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: AbcStatus, msg: String) -> AbcStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> AbcStatus {
    match e {
        Error::EmptyMultidegree => AbcStatus::EmptyMultidegree,
        Error::DegreeTooSmall(_) => AbcStatus::DegreeTooSmall,
        Error::CodimTooLarge { .. } => AbcStatus::CodimTooLarge,
        Error::InvalidCover(_) => AbcStatus::InvalidCover,
        _ => AbcStatus::InvalidParameter,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard<T>(out: *mut *mut T, f: impl FnOnce() -> Result<T, (AbcStatus, String)>) -> AbcStatus {
    if out.is_null() {
        return fail(AbcStatus::NullPointer, "output pointer is null".into());
    }
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(value)) => {
            // SAFETY: `out` is non-null and points to writable storage per the contract.
            unsafe { *out = Box::into_raw(Box::new(value)) };
            AbcStatus::Ok
        }
        Ok(Err((status, msg))) => fail(status, msg),
        Err(_) => fail(AbcStatus::Internal, "internal error".into()),
    }
}

fn lib_err(e: Error) -> (AbcStatus, String) {
    (status_of(&e), e.to_string())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message describing the last failed call on this thread, or NULL.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn abc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn abc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates `CI(P^ambient; degrees)`; the degrees are sorted.
///
/// # Safety
/// `degrees` must point to `len` readable integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abc_ci_new(ambient: i64, degrees: *const i64, len: usize, out: *mut *mut AbcCi) -> AbcStatus {
    if degrees.is_null() && len > 0 {
        return fail(AbcStatus::NullPointer, "degrees pointer is null".into());
    }
    let degrees: &[i64] = if len == 0 { &[] } else { std::slice::from_raw_parts(degrees, len) };
    guard(out, || CompleteIntersection::new(ambient, degrees).map(AbcCi).map_err(lib_err))
}

/// # Safety
/// `ci` must be NULL or a handle from [`abc_ci_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abc_ci_free(ci: *mut AbcCi) {
    if !ci.is_null() {
        drop(Box::from_raw(ci));
    }
}

/// `h^0(O_Y(a))` as a decimal string, or NULL if `ci` is NULL.
///
/// # Safety
/// `ci` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abc_ci_h0(ci: *const AbcCi, a: i64) -> *mut c_char {
    match ci.as_ref() {
        Some(ci) => into_c_string(ci.0.h0(a).to_string()),
        None => ptr::null_mut(),
    }
}

/// Parses `cyclic:n,k`, `product:n1,k1;n2,k2;...` or `split:t1,...:ram`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abc_cover_parse(text: *const c_char, out: *mut *mut AbcCover) -> AbcStatus {
    if text.is_null() {
        return fail(AbcStatus::NullPointer, "cover text is null".into());
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return fail(AbcStatus::InvalidUtf8, "cover text is not UTF-8".into());
    };
    guard(out, || text.parse::<CoverSpec>().map(AbcCover).map_err(lib_err))
}

/// The simple cyclic cover of order `n` with twist `k`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abc_cover_simple_cyclic(n: u64, k: i64, out: *mut *mut AbcCover) -> AbcStatus {
    guard(out, || CoverSpec::simple_cyclic(n, k).map(AbcCover).map_err(lib_err))
}

/// The fibre product of cyclic covers with the given orders and twists.
///
/// # Safety
/// `orders` and `twists` must each point to `len` readable values; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn abc_cover_product(
    orders: *const u64,
    twists: *const i64,
    len: usize,
    out: *mut *mut AbcCover,
) -> AbcStatus {
    if len > 0 && (orders.is_null() || twists.is_null()) {
        return fail(AbcStatus::NullPointer, "factor arrays are null".into());
    }
    let factors: Vec<(u64, i64)> = if len == 0 {
        Vec::new()
    } else {
        let o = std::slice::from_raw_parts(orders, len);
        let t = std::slice::from_raw_parts(twists, len);
        o.iter().copied().zip(t.iter().copied()).collect()
    };
    guard(out, || CoverSpec::cyclic_product(&factors).map(AbcCover).map_err(lib_err))
}

/// # Safety
/// `cover` must be NULL or a live handle, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abc_cover_free(cover: *mut AbcCover) {
    if !cover.is_null() {
        drop(Box::from_raw(cover));
    }
}

/// Computes invariants, behaviour certificates and the obstruction for the
/// pair. The inputs are copied; they may be freed afterwards.
///
/// # Safety
/// `ci` and `cover` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn abc_report_new(ci: *const AbcCi, cover: *const AbcCover, out: *mut *mut AbcReport) -> AbcStatus {
    let (Some(ci), Some(cover)) = (ci.as_ref(), cover.as_ref()) else {
        return fail(AbcStatus::NullPointer, "ci or cover handle is null".into());
    };
    guard(out, || Ok(AbcReport(evaluate(ci.0.clone(), cover.0.clone()))))
}

/// # Safety
/// `report` must be NULL or a live handle, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abc_report_free(report: *mut AbcReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Dimension `m` of the cover; 0 if `report` is NULL.
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abc_report_dim(report: *const AbcReport) -> i64 {
    report.as_ref().map_or(0, |r| r.0.analysis.dim)
}

/// The integer `s` with `K_X = L^s`; 0 if `report` is NULL.
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abc_report_subcanonicity(report: *const AbcReport) -> i64 {
    report.as_ref().map_or(0, |r| r.0.analysis.subcanonicity)
}

/// `L^m` as a decimal string (NULL if `report` is NULL).
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abc_report_l_top(report: *const AbcReport) -> *mut c_char {
    report.as_ref().map_or(ptr::null_mut(), |r| into_c_string(r.0.analysis.l_top.to_string()))
}

/// `K_X^m` as a decimal string (NULL if `report` is NULL).
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abc_report_k_top(report: *const AbcReport) -> *mut c_char {
    report.as_ref().map_or(ptr::null_mut(), |r| into_c_string(r.0.analysis.k_top.to_string()))
}

/// Geometric genus as a decimal string (NULL if `report` is NULL).
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abc_report_geometric_genus(report: *const AbcReport) -> *mut c_char {
    report.as_ref().map_or(ptr::null_mut(), |r| into_c_string(r.0.analysis.geometric_genus.to_string()))
}

/// Strongest behaviour shown; `Inconclusive` if `report` is NULL.
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abc_report_summary(report: *const AbcReport) -> AbcSummary {
    match report.as_ref().map(|r| r.0.verdict.summary) {
        Some(Summary::DegreePreserved) => AbcSummary::DegreePreserved,
        Some(Summary::HalvesDegree) => AbcSummary::HalvesDegree,
        Some(Summary::Birational) => AbcSummary::Birational,
        Some(Summary::Embedding) => AbcSummary::Embedding,
        Some(Summary::Inconclusive) | None => AbcSummary::Inconclusive,
    }
}

/// Whether a certificate for `behavior` was found.
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abc_report_has_behavior(report: *const AbcReport, behavior: AbcBehavior) -> bool {
    let b = match behavior {
        AbcBehavior::DegreePreserved => Behavior::DegreePreserved,
        AbcBehavior::Birational => Behavior::Birational,
        AbcBehavior::EmbeddingA => Behavior::EmbeddingA,
        AbcBehavior::EmbeddingB => Behavior::EmbeddingB,
        AbcBehavior::HalvesDegree => Behavior::HalvesDegree,
        AbcBehavior::HalvesDegreeSmoothImage => Behavior::HalvesDegreeSmoothImage,
    };
    report.as_ref().is_some_and(|r| r.0.verdict.has(b))
}

/// Outcome of the obstruction search.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn abc_report_obstruction(report: *const AbcReport) -> AbcObstruction {
    use abcover::InfeasibleReason;
    match report.as_ref().map(|r| &r.0.obstruction.result) {
        Some(ObstructionResult::Solvable(_)) => AbcObstruction::Solvable,
        Some(ObstructionResult::Infeasible(InfeasibleReason::AmGm)) => AbcObstruction::InfeasibleAmGm,
        Some(ObstructionResult::Infeasible(InfeasibleReason::ExhaustedSearch)) => AbcObstruction::InfeasibleExhausted,
        Some(ObstructionResult::SearchBudgetExceeded) | None => AbcObstruction::SearchBudgetExceeded,
    }
}

/// The full row as a JSON object (NULL if `report` is NULL).
///
/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abc_report_json(report: *const AbcReport) -> *mut c_char {
    report.as_ref().map_or(ptr::null_mut(), |r| into_c_string(row_json(&OutputRow::from(&r.0))))
}
