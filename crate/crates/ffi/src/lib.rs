//! C ABI for convwam.
//!
//! Codes are parsed from the same text formats the CLI reads and held
//! behind an opaque `CwCode` handle. Every call returns a `CwStatus`;
//! results come back as heap strings that the caller releases with
//! `cw_string_free`. The message for the most recent failure on the
//! calling thread is available from `cw_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use convwam::block::{hwgf, macwilliams_hwgf, LinearCode};
use convwam::conv::{macwilliams_wam, wam};
use convwam::formats::{self, ConvFile, FileKind};
use convwam::quantum::{quantum_dual_wam, quantum_wam, EaqccSpec};
use convwam::{verify, Error};

/// Status codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    Budget = 5,
    Arithmetic = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwKind {
    Block = 0,
    Conv = 1,
    Quantum = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwFormat {
    Text = 0,
    Json = 1,
}

enum Code {
    Block(LinearCode),
    Conv(ConvFile),
    Quantum(EaqccSpec),
}

/// Opaque handle to a parsed code.
pub struct CwCode {
    inner: Code,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

fn status_of(err: &Error) -> CwStatus {
    match err {
        Error::Parse { .. } => CwStatus::Parse,
        Error::Budget { .. } => CwStatus::Budget,
        Error::NonIntegral { .. }
        | Error::NonRational
        | Error::NegativeCoefficient(_)
        | Error::Overflow
        | Error::NotHomogeneous(_) => CwStatus::Arithmetic,
        _ => CwStatus::InvalidInput,
    }
}

fn fail(err: Error) -> CwStatus {
    set_error(err.to_string());
    status_of(&err)
}

/// Runs `f`, turning panics into `CwStatus::Panic`.
fn guard(f: impl FnOnce() -> CwStatus) -> CwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            CwStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, CwStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(CwStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        CwStatus::InvalidUtf8
    })
}

unsafe fn write_out(out: *mut *mut c_char, s: String) -> CwStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            CwStatus::Ok
        }
        Err(_) => {
            set_error("result contains a NUL byte");
            CwStatus::InvalidInput
        }
    }
}

fn parse(text: &str, kind: FileKind) -> Result<Code, Error> {
    Ok(match kind {
        FileKind::Block => Code::Block(formats::parse_block(text)?),
        FileKind::Conv => Code::Conv(formats::parse_conv(text)?),
        FileKind::Quantum => Code::Quantum(formats::parse_quantum(text)?),
    })
}

/// Parses a block, convolutional or quantum code file. The kind is
/// detected from the contents.
///
/// # Safety
///
/// `text` must be a NUL-terminated string and `out` a valid pointer.
/// On success `*out` owns a handle that must be released with
/// `cw_code_free`.
#[no_mangle]
pub unsafe extern "C" fn cw_code_parse(text: *const c_char, out: *mut *mut CwCode) -> CwStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return CwStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse(text, formats::detect(text)) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(CwCode { inner }));
                CwStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
///
/// `code` must be null or a handle from `cw_code_parse` that has not
/// been freed.
#[no_mangle]
pub unsafe extern "C" fn cw_code_free(code: *mut CwCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// # Safety
///
/// `code` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cw_code_kind(code: *const CwCode, out: *mut CwKind) -> CwStatus {
    if code.is_null() || out.is_null() {
        set_error("null pointer argument");
        return CwStatus::NullPointer;
    }
    *out = match (*code).inner {
        Code::Block(_) => CwKind::Block,
        Code::Conv(_) => CwKind::Conv,
        Code::Quantum(_) => CwKind::Quantum,
    };
    CwStatus::Ok
}

/// Caps the number of words any exhaustive enumeration may visit.
///
/// # Safety
///
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cw_code_set_budget(code: *mut CwCode, budget: u64) -> CwStatus {
    if code.is_null() {
        set_error("null handle");
        return CwStatus::NullPointer;
    }
    let c = &mut *code;
    let b = u128::from(budget);
    c.inner = match &c.inner {
        Code::Block(x) => Code::Block(x.clone().with_budget(b)),
        Code::Conv(f) => {
            let mut f = f.clone();
            f.seed = f.seed.with_budget(b);
            Code::Conv(f)
        }
        Code::Quantum(s) => Code::Quantum(s.clone().with_budget(b)),
    };
    CwStatus::Ok
}

fn enumerator(code: &Code, dual: bool, format: CwFormat) -> Result<String, Error> {
    let matrix = match code {
        Code::Block(c) => {
            let w = hwgf(c)?;
            let w = if dual {
                macwilliams_hwgf(&w, c.k(), c.field().q())?
            } else {
                w
            };
            return Ok(match format {
                CwFormat::Text => w.to_string(),
                CwFormat::Json => serde_json::to_string(&w.to_string()).expect("string serializes"),
            });
        }
        Code::Conv(f) => {
            let s = &f.seed;
            let l = wam(s)?;
            if dual {
                macwilliams_wam(&l, s.field(), s.n(), s.k(), s.m())?
            } else {
                l
            }
        }
        Code::Quantum(s) => {
            if dual {
                quantum_dual_wam(s)?
            } else {
                quantum_wam(s)?
            }
        }
    };
    Ok(match format {
        CwFormat::Text => matrix.render(),
        CwFormat::Json => {
            serde_json::to_string(&matrix.to_structured()).expect("matrix serializes")
        }
    })
}

unsafe fn enumerator_call(
    code: *const CwCode,
    dual: bool,
    format: CwFormat,
    out: *mut *mut c_char,
) -> CwStatus {
    guard(|| {
        if code.is_null() || out.is_null() {
            set_error("null pointer argument");
            return CwStatus::NullPointer;
        }
        *out = ptr::null_mut();
        match enumerator(&(*code).inner, dual, format) {
            Ok(s) => write_out(out, s),
            Err(e) => fail(e),
        }
    })
}

/// Weight enumerator of the code: the Hamming enumerator for block codes,
/// the weight adjacency matrix otherwise.
///
/// # Safety
///
/// `code` must be a live handle and `out` a valid pointer. `*out` must be
/// released with `cw_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cw_wam(
    code: *const CwCode,
    format: CwFormat,
    out: *mut *mut c_char,
) -> CwStatus {
    enumerator_call(code, false, format, out)
}

/// Enumerator of the dual code, computed by the MacWilliams transform.
///
/// # Safety
///
/// Same contract as `cw_wam`.
#[no_mangle]
pub unsafe extern "C" fn cw_dual_wam(
    code: *const CwCode,
    format: CwFormat,
    out: *mut *mut c_char,
) -> CwStatus {
    enumerator_call(code, true, format, out)
}

/// Checks the duality identities against exhaustive oracles. `*report`
/// receives one "PASS name" or "FAIL name: detail" line per check and
/// `*passed` is set to 1 when all of them hold.
///
/// # Safety
///
/// `code` must be a live handle; `report` and `passed` must be valid
/// pointers. `*report` must be released with `cw_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cw_verify(
    code: *const CwCode,
    d_max: u32,
    report: *mut *mut c_char,
    passed: *mut i32,
) -> CwStatus {
    guard(|| {
        if code.is_null() || report.is_null() || passed.is_null() {
            set_error("null pointer argument");
            return CwStatus::NullPointer;
        }
        *report = ptr::null_mut();
        let checks = match &(*code).inner {
            Code::Block(c) => verify::verify_block(c),
            Code::Conv(f) => verify::verify_conv(f, d_max),
            Code::Quantum(s) => verify::verify_quantum(s, d_max),
        };
        match checks {
            Ok(checks) => {
                *passed = i32::from(checks.iter().all(|c| c.passed));
                let mut text = String::new();
                for c in &checks {
                    text.push_str(&c.line());
                    text.push('\n');
                }
                write_out(report, text)
            }
            Err(e) => fail(e),
        }
    })
}

/// Message for the last failure on this thread, or null if none. The
/// returned string must be released with `cw_string_free`.
#[no_mangle]
pub extern "C" fn cw_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |s| s.clone().into_raw())
    })
}

/// # Safety
///
/// `s` must be null or a string returned by this library that has not
/// already been freed.
#[no_mangle]
pub unsafe extern "C" fn cw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, a static string that must not be freed.
#[no_mangle]
pub extern "C" fn cw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
