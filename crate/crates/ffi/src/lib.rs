//! C ABI over `coset-spectra`.
//!
//! Every fallible call returns a [`CsStatus`]. On failure the message is
//! kept per thread and read back with [`cs_last_error_message`]. Strings
//! returned through out-parameters are owned by the caller and released
//! with [`cs_string_free`]; spaces with [`cs_space_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use coset_spectra::cli::{render_json, run, Command, Options, Payload, SpaceSpec};
use coset_spectra::{Error, Q};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Unsupported = 4,
    InvalidWeight = 5,
    InvalidSubsystem = 6,
    LimitExceeded = 7,
    Arithmetic = 8,
    VerificationFailed = 9,
    Panic = 10,
}

/// An exact rational `num/den` with `den > 0`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CsRational {
    pub num: i64,
    pub den: i64,
}

impl From<Q> for CsRational {
    fn from(x: Q) -> Self {
        CsRational {
            num: *x.numer(),
            den: *x.denom(),
        }
    }
}

/// Both lowest-level records for the space's `μ`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CsLowest {
    /// False when `μ+ρ_η` is singular and the kostant fields are zero.
    pub kostant_attained: bool,
    pub kostant_energy: CsRational,
    pub kostant_multiplicity: u64,
    pub frobenius_energy: CsRational,
    pub frobenius_degeneracy: u64,
    pub frobenius_multiplicity: u64,
}

/// Opaque handle to a parsed space specification.
pub struct CsSpace {
    spec: SpaceSpec,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> CsStatus {
    match e {
        Error::Parse { .. } => CsStatus::Parse,
        Error::UnsupportedSeries(_) | Error::InvalidRank { .. } => CsStatus::Unsupported,
        Error::NotARoot(_)
        | Error::NotASubsystem
        | Error::ClosureViolation(_)
        | Error::EmptyComplement
        | Error::NotInTransversal => CsStatus::InvalidSubsystem,
        Error::DimensionMismatch { .. }
        | Error::ZeroRoot
        | Error::NotDominant { .. }
        | Error::NotIntegral { .. }
        | Error::NotWInvariant(_)
        | Error::NonPositiveScale(_) => CsStatus::InvalidWeight,
        Error::GroupTooLarge { .. } | Error::CutoffBeforeFirstLine(_) => CsStatus::LimitExceeded,
        Error::NonIntegralPeel(_) | Error::Overflow(_) => CsStatus::Arithmetic,
    }
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (CsStatus, String)>) -> CsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            CsStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CsStatus::Panic
        }
    }
}

fn core_err(e: Error) -> (CsStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (CsStatus, String)> {
    if p.is_null() {
        return Err((CsStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (CsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn null(what: &str) -> (CsStatus, String) {
    (CsStatus::NullPointer, format!("{what} is null"))
}

/// Parses `spec` and builds the pair. On success `*out` owns a new handle.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cs_space_new(spec: *const c_char, out: *mut *mut CsSpace) -> CsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let spec = SpaceSpec::parse(read_str(spec, "spec")?).map_err(core_err)?;
        spec.pair().map_err(core_err)?;
        *out = Box::into_raw(Box::new(CsSpace { spec }));
        Ok(())
    })
}

/// Releases a handle from [`cs_space_new`]. Null is ignored.
///
/// # Safety
/// `space` must come from [`cs_space_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cs_space_free(space: *mut CsSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// `|W_g|`, `|W_η|` and the transversal size `|C|`.
///
/// # Safety
/// `space` must be a live handle; the out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cs_space_weyl_orders(
    space: *const CsSpace,
    order_g: *mut u64,
    order_eta: *mut u64,
    transversal: *mut u64,
) -> CsStatus {
    guard(|| {
        let space = space.as_ref().ok_or_else(|| null("space"))?;
        if order_g.is_null() || order_eta.is_null() || transversal.is_null() {
            return Err(null("output"));
        }
        let report = run(Command::WeylInfo, &space.spec, &Options::default()).map_err(core_err)?;
        let Payload::WeylInfo(info) = report.payload else {
            unreachable!("weyl-info returns its own payload")
        };
        *order_g = info.order_g as u64;
        *order_eta = info.order_eta as u64;
        *transversal = info.transversal.len() as u64;
        Ok(())
    })
}

/// Both lowest-level records for the space's `μ`, energies multiplied by
/// the spec's `scale`.
///
/// # Safety
/// `space` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cs_space_lowest(space: *const CsSpace, out: *mut CsLowest) -> CsStatus {
    guard(|| {
        let space = space.as_ref().ok_or_else(|| null("space"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let report = run(Command::Lowest, &space.spec, &Options::default()).map_err(core_err)?;
        let Payload::Lowest {
            kostant, frobenius, ..
        } = report.payload
        else {
            unreachable!("lowest returns its own payload")
        };
        let mut rec = CsLowest {
            frobenius_energy: frobenius.energy.into(),
            frobenius_degeneracy: frobenius.degeneracy,
            frobenius_multiplicity: frobenius.frobenius_multiplicity,
            ..CsLowest::default()
        };
        if let Some(k) = kostant {
            rec.kostant_attained = true;
            rec.kostant_energy = k.energy.into();
            rec.kostant_multiplicity = k.multiplicity;
        }
        *out = rec;
        Ok(())
    })
}

/// Runs a CLI command (`spectrum`, `lowest`, `gkrs-check`, `weyl-info`) and
/// returns its JSON report in `*out_json`. A `gkrs-check` with an
/// unverified weight still fills `*out_json` but returns
/// `CS_STATUS_VERIFICATION_FAILED`.
///
/// # Safety
/// `command` and `spec` must be NUL-terminated; `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cs_run_json(
    command: *const c_char,
    spec: *const c_char,
    lines: usize,
    dim_bound: u64,
    out_json: *mut *mut c_char,
) -> CsStatus {
    guard(|| {
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        *out_json = ptr::null_mut();
        let command: Command = read_str(command, "command")?
            .parse()
            .map_err(|m: String| (CsStatus::Parse, m))?;
        let spec = SpaceSpec::parse(read_str(spec, "spec")?).map_err(core_err)?;
        let options = Options {
            lines,
            dim_bound,
            ..Options::default()
        };
        let report = run(command, &spec, &options).map_err(core_err)?;
        let json = CString::new(render_json(&report)).expect("JSON has no NUL");
        *out_json = json.into_raw();
        if report.passed() {
            Ok(())
        } else {
            Err((CsStatus::VerificationFailed, "verification failed".into()))
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn cs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn cs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
