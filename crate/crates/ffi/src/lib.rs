//! C ABI for the `ivqrof` library.
//!
//! Every function returns an [`IvqStatus`] and writes results through
//! out-pointers, which are left untouched on failure. The message of the
//! latest failure on the calling thread is available from
//! [`ivq_last_error_message`]. Problems and reports are opaque handles owned
//! by the caller and released with their `_free` function; strings returned
//! by the library are released with [`ivq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ivqrof::cli::problem_file::ProblemFile;
use ivqrof::magdm::{evaluate, DecisionProblem, EvaluationReport, PipelineConfig};
use ivqrof::{owa_aggregate, Error, Ivqrofn, OperatorFamily, Rung, WeightVector};

/// Outcome of a call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IvqStatus {
    Ok = 0,
    /// A required pointer argument was null.
    Null = 1,
    /// An input or result is not a valid number at the given rung.
    InvalidNumber = 2,
    /// A rung, family parameter, weight or index is out of range.
    InvalidParam = 3,
    /// Two lengths that must agree do not.
    Length = 4,
    /// A JSON document or C string could not be read.
    Parse = 5,
    /// The decision pipeline failed.
    Pipeline = 6,
    /// The library panicked; this is a bug.
    Panic = 7,
}

/// `<[mu_lo, mu_hi], [nu_lo, nu_hi]>`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IvqNumber {
    pub mu_lo: f64,
    pub mu_hi: f64,
    pub nu_lo: f64,
    pub nu_hi: f64,
}

pub const IVQ_FAMILY_WEBER: u32 = 0;
pub const IVQ_FAMILY_ALGEBRAIC: u32 = 1;
pub const IVQ_FAMILY_FRANK: u32 = 2;
pub const IVQ_FAMILY_HAMACHER: u32 = 3;

/// Operator family: one of the `IVQ_FAMILY_*` kinds and its parameter
/// (lambda, alpha or gamma; ignored for the algebraic family).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IvqFamily {
    pub kind: u32,
    pub parameter: f64,
}

/// A parsed decision problem.
pub struct IvqProblem(DecisionProblem);

/// The result of evaluating a problem.
pub struct IvqReport(EvaluationReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: IvqStatus,
    message: String,
}

impl Failure {
    fn new(status: IvqStatus, message: impl Into<String>) -> Self {
        Self {
            status,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::MalformedBounds(..) | Error::InvalidNumber { .. } | Error::OutsideRung { .. } => {
                IvqStatus::InvalidNumber
            }
            Error::LengthMismatch { .. } => IvqStatus::Length,
            _ => IvqStatus::InvalidParam,
        };
        Self::new(status, e.to_string())
    }
}

fn set_last_error(message: Option<String>) {
    let c = message.map(|m| CString::new(m.replace('\0', " ")).expect("nul bytes removed"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Runs `f`, records its failure message and converts panics.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> IvqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(None);
            IvqStatus::Ok
        }
        Ok(Err(e)) => {
            set_last_error(Some(e.message));
            e.status
        }
        Err(_) => {
            set_last_error(Some("internal panic".into()));
            IvqStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::new(IvqStatus::Null, format!("{what} is null"))
}

unsafe fn read<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(p: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    p.write(value);
    Ok(())
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        Ok(&[])
    } else if p.is_null() {
        Err(null(what))
    } else {
        Ok(std::slice::from_raw_parts(p, len))
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    let s = read(p, what)?;
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure::new(IvqStatus::Parse, format!("{what}: {e}")))
}

fn rung(q: f64) -> Result<Rung, Failure> {
    Ok(Rung::new(q)?)
}

fn number(n: &IvqNumber) -> Result<Ivqrofn, Failure> {
    Ok(Ivqrofn::new(n.mu_lo, n.mu_hi, n.nu_lo, n.nu_hi)?)
}

fn checked(p: *const IvqNumber, q: Rung, what: &str) -> Result<Ivqrofn, Failure> {
    let n = number(unsafe { read(p, what)? })?;
    n.ensure_valid(q)?;
    Ok(n)
}

fn to_c(n: Ivqrofn) -> IvqNumber {
    IvqNumber {
        mu_lo: n.mu_lo(),
        mu_hi: n.mu_hi(),
        nu_lo: n.nu_lo(),
        nu_hi: n.nu_hi(),
    }
}

fn family(p: *const IvqFamily) -> Result<OperatorFamily, Failure> {
    let f = unsafe { read(p, "family")? };
    let family = match f.kind {
        IVQ_FAMILY_WEBER => OperatorFamily::Weber { lambda: f.parameter },
        IVQ_FAMILY_ALGEBRAIC => OperatorFamily::Algebraic,
        IVQ_FAMILY_FRANK => OperatorFamily::Frank { alpha: f.parameter },
        IVQ_FAMILY_HAMACHER => OperatorFamily::Hamacher { gamma: f.parameter },
        k => {
            return Err(Failure::new(
                IvqStatus::InvalidParam,
                format!("unknown family kind {k}"),
            ))
        }
    };
    family.validate()?;
    Ok(family)
}

/// Message of the latest failure on this thread, or null after a success.
/// The pointer stays valid until the next call into the library on the same
/// thread.
#[no_mangle]
pub extern "C" fn ivq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// `IVQ_STATUS_OK` when `n` is a valid number at rung `q`,
/// `IVQ_STATUS_INVALID_NUMBER` otherwise.
///
/// # Safety
/// `n` must be null or point to an `IvqNumber`.
#[no_mangle]
pub unsafe extern "C" fn ivq_number_check(n: *const IvqNumber, q: f64) -> IvqStatus {
    guard(|| checked(n, rung(q)?, "number").map(|_| ()))
}

/// Score `(sum of membership powers - sum of non-membership powers) / 2`.
///
/// # Safety
/// `n` must point to an `IvqNumber` and `out` to a writable `double`.
#[no_mangle]
pub unsafe extern "C" fn ivq_number_score(n: *const IvqNumber, q: f64, out: *mut f64) -> IvqStatus {
    guard(|| {
        let q = rung(q)?;
        write(out, checked(n, q, "number")?.score(q)?, "out")
    })
}

/// # Safety
/// `n` must point to an `IvqNumber` and `out` to a writable `double`.
#[no_mangle]
pub unsafe extern "C" fn ivq_number_accuracy(n: *const IvqNumber, q: f64, out: *mut f64) -> IvqStatus {
    guard(|| {
        let q = rung(q)?;
        write(out, checked(n, q, "number")?.accuracy(q)?, "out")
    })
}

/// Mean absolute difference of the q-th powers, in `[0, 1]`.
///
/// # Safety
/// `a` and `b` must point to `IvqNumber`s and `out` to a writable `double`.
#[no_mangle]
pub unsafe extern "C" fn ivq_number_distance(
    a: *const IvqNumber,
    b: *const IvqNumber,
    q: f64,
    out: *mut f64,
) -> IvqStatus {
    guard(|| {
        let q = rung(q)?;
        let (a, b) = (checked(a, q, "a")?, checked(b, q, "b")?);
        write(out, a.distance(&b, q)?, "out")
    })
}

/// Writes -1, 0 or 1 as `a` ranks below, level with or above `b`.
///
/// # Safety
/// `a` and `b` must point to `IvqNumber`s and `out` to a writable `int`.
#[no_mangle]
pub unsafe extern "C" fn ivq_number_compare(
    a: *const IvqNumber,
    b: *const IvqNumber,
    q: f64,
    out: *mut i32,
) -> IvqStatus {
    guard(|| {
        let q = rung(q)?;
        let (a, b) = (checked(a, q, "a")?, checked(b, q, "b")?);
        write(out, a.compare(&b, q)? as i32, "out")
    })
}

/// `a ⊕ b` under `family`.
///
/// # Safety
/// `family`, `a` and `b` must be readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivq_add(
    family: *const IvqFamily,
    a: *const IvqNumber,
    b: *const IvqNumber,
    q: f64,
    out: *mut IvqNumber,
) -> IvqStatus {
    guard(|| {
        let q = rung(q)?;
        let ops = self::family(family)?.ops(q)?;
        let r = ops.add(&checked(a, q, "a")?, &checked(b, q, "b")?)?;
        write(out, to_c(r), "out")
    })
}

/// `a ⊗ b` under `family`.
///
/// # Safety
/// `family`, `a` and `b` must be readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivq_mul(
    family: *const IvqFamily,
    a: *const IvqNumber,
    b: *const IvqNumber,
    q: f64,
    out: *mut IvqNumber,
) -> IvqStatus {
    guard(|| {
        let q = rung(q)?;
        let ops = self::family(family)?.ops(q)?;
        let r = ops.mul(&checked(a, q, "a")?, &checked(b, q, "b")?)?;
        write(out, to_c(r), "out")
    })
}

/// `k · a` for real `k > 0`.
///
/// # Safety
/// `family` and `a` must be readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivq_scalar(
    family: *const IvqFamily,
    k: f64,
    a: *const IvqNumber,
    q: f64,
    out: *mut IvqNumber,
) -> IvqStatus {
    guard(|| {
        let q = rung(q)?;
        let r = self::family(family)?.ops(q)?.scalar(k, &checked(a, q, "a")?)?;
        write(out, to_c(r), "out")
    })
}

/// `a ^ k` for real `k > 0`.
///
/// # Safety
/// `family` and `a` must be readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivq_power(
    family: *const IvqFamily,
    a: *const IvqNumber,
    k: f64,
    q: f64,
    out: *mut IvqNumber,
) -> IvqStatus {
    guard(|| {
        let q = rung(q)?;
        let r = self::family(family)?.ops(q)?.pow(&checked(a, q, "a")?, k)?;
        write(out, to_c(r), "out")
    })
}

/// Ordered weighted aggregation of `len` values with `weights_len` weights
/// summing to one.
///
/// # Safety
/// `values` and `weights` must point to arrays of the stated lengths,
/// `family` must be readable and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivq_owa(
    family: *const IvqFamily,
    values: *const IvqNumber,
    len: usize,
    weights: *const f64,
    weights_len: usize,
    q: f64,
    out: *mut IvqNumber,
) -> IvqStatus {
    guard(|| {
        let q = rung(q)?;
        let family = self::family(family)?;
        let values = slice(values, len, "values")?
            .iter()
            .map(number)
            .collect::<Result<Vec<_>, _>>()?;
        let weights = WeightVector::new(slice(weights, weights_len, "weights")?.to_vec())?;
        write(out, to_c(owa_aggregate(&values, &weights, &family, q)?), "out")
    })
}

/// Parses a problem document (the CLI's JSON format).
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivq_problem_from_json(json: *const c_char, out: *mut *mut IvqProblem) -> IvqStatus {
    guard(|| {
        let parse = |e: ivqrof::cli::CliError| Failure::new(IvqStatus::Parse, e.to_string());
        let problem = ProblemFile::from_json(text(json, "json")?)
            .and_then(|f| f.to_problem())
            .map_err(parse)?;
        write(out, Box::into_raw(Box::new(IvqProblem(problem))), "out")
    })
}

/// Releases a problem. Null is ignored.
///
/// # Safety
/// `problem` must be null or a handle from `ivq_problem_from_json` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ivq_problem_free(problem: *mut IvqProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

/// Evaluates a problem. `config_json` is a pipeline configuration document;
/// null or `{}` selects the defaults (automatic rung, Weber lambda = 2,
/// swing weights).
///
/// # Safety
/// `problem` must be a live handle, `config_json` null or a nul-terminated
/// string, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivq_evaluate(
    problem: *const IvqProblem,
    config_json: *const c_char,
    out: *mut *mut IvqReport,
) -> IvqStatus {
    guard(|| {
        let problem = &read(problem, "problem")?.0;
        let config = if config_json.is_null() {
            PipelineConfig::default()
        } else {
            serde_json::from_str(text(config_json, "config")?)
                .map_err(|e| Failure::new(IvqStatus::Parse, format!("config: {e}")))?
        };
        let report = evaluate(problem, &config).map_err(|e| Failure::new(IvqStatus::Pipeline, e.to_string()))?;
        write(out, Box::into_raw(Box::new(IvqReport(report))), "out")
    })
}

/// Releases a report. Null is ignored.
///
/// # Safety
/// `report` must be null or a handle from `ivq_evaluate` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ivq_report_free(report: *mut IvqReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Number of alternatives in the report.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivq_report_len(report: *const IvqReport, out: *mut usize) -> IvqStatus {
    guard(|| write(out, read(report, "report")?.0.alternatives.len(), "out"))
}

/// Rung the report was computed at.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivq_report_rung(report: *const IvqReport, out: *mut f64) -> IvqStatus {
    guard(|| write(out, read(report, "report")?.0.q.get(), "out"))
}

fn index(r: &EvaluationReport, i: usize) -> Result<usize, Failure> {
    if i < r.alternatives.len() {
        Ok(i)
    } else {
        Err(Failure::new(
            IvqStatus::InvalidParam,
            format!("alternative index {i} out of range 0..{}", r.alternatives.len()),
        ))
    }
}

/// Aggregate of alternative `i`, in problem order.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivq_report_aggregate(report: *const IvqReport, i: usize, out: *mut IvqNumber) -> IvqStatus {
    guard(|| {
        let r = &read(report, "report")?.0;
        write(out, to_c(r.aggregates[index(r, i)?]), "out")
    })
}

/// Normalized score of alternative `i`, in problem order.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivq_report_normalized_score(report: *const IvqReport, i: usize, out: *mut f64) -> IvqStatus {
    guard(|| {
        let r = &read(report, "report")?.0;
        write(out, r.normalized_scores[index(r, i)?], "out")
    })
}

/// Alternative indices from best to worst into `order`, which holds `len`
/// entries; `len` must equal the number of alternatives.
///
/// # Safety
/// `report` must be a live handle and `order` point to `len` writable slots.
#[no_mangle]
pub unsafe extern "C" fn ivq_report_ranking(report: *const IvqReport, order: *mut usize, len: usize) -> IvqStatus {
    guard(|| {
        let r = &read(report, "report")?.0;
        let ranked = r.ranking.order();
        if len != ranked.len() {
            return Err(Failure::from(Error::LengthMismatch {
                what: "ranking buffer",
                expected: ranked.len(),
                found: len,
            }));
        }
        if order.is_null() {
            return Err(null("order"));
        }
        std::slice::from_raw_parts_mut(order, len).copy_from_slice(&ranked);
        Ok(())
    })
}

/// The full report as a JSON document, released with `ivq_string_free`.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivq_report_to_json(report: *const IvqReport, out: *mut *mut c_char) -> IvqStatus {
    guard(|| {
        let json = serde_json::to_string(&read(report, "report")?.0)
            .map_err(|e| Failure::new(IvqStatus::Parse, e.to_string()))?;
        let c = CString::new(json).map_err(|e| Failure::new(IvqStatus::Parse, e.to_string()))?;
        write(out, c.into_raw(), "out")
    })
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ivq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
