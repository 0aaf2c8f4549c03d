//! C ABI over the vjcal engine: opaque rational handles, status codes, and
//! UTF-8 strings allocated on the Rust side.
//!
//! Conventions:
//! - Every fallible call returns a [`VjStatus`]; outputs go through `out`
//!   pointers and are written only on `VJ_STATUS_OK`.
//! - `VjRational` handles are created by this library and must be released
//!   with [`vj_rational_free`]; strings with [`vj_string_free`].
//! - Null handle or output arguments yield `VJ_STATUS_NULL_ARGUMENT`.

use std::ffi::{c_char, CStr, CString};
use std::str::FromStr;

use vjcal::precession::{self, EclipticLongitude, Epoch, PrecessionRate};
use vjcal::rational::MAX_DECIMAL_PLACES;
use vjcal::tally;
use vjcal::yuga::{self, NaksatraNameTable, YugaParameters};
use vjcal::{Error, Rational};

/// Status code for every fallible FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VjStatus {
    Ok = 0,
    NullArgument = 1,
    ZeroDenominator = 2,
    DivisionByZero = 3,
    ParseError = 4,
    DomainError = 5,
}

impl From<&Error> for VjStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::ZeroDenominator => VjStatus::ZeroDenominator,
            Error::DivisionByZero => VjStatus::DivisionByZero,
            Error::Parse { .. } => VjStatus::ParseError,
            _ => VjStatus::DomainError,
        }
    }
}

/// Opaque exact rational handle.
pub struct VjRational(Rational);

fn boxed(r: Rational) -> *mut VjRational {
    Box::into_raw(Box::new(VjRational(r)))
}

/// # Safety
/// `ptr` must be null or a handle previously returned by this library.
unsafe fn deref<'a>(ptr: *const VjRational) -> Option<&'a Rational> {
    unsafe { ptr.as_ref().map(|h| &h.0) }
}

fn write_out(out: *mut *mut VjRational, r: Rational) -> VjStatus {
    if out.is_null() {
        return VjStatus::NullArgument;
    }
    unsafe { *out = boxed(r) };
    VjStatus::Ok
}

fn string_out(s: String) -> *mut c_char {
    CString::new(s)
        .map(CString::into_raw)
        .unwrap_or(std::ptr::null_mut())
}

/// Creates the rational `num/den` in lowest terms.
#[no_mangle]
pub extern "C" fn vj_rational_new(
    num: i64,
    den: i64,
    out: *mut *mut VjRational,
) -> VjStatus {
    match Rational::new(num, den) {
        Ok(r) => write_out(out, r),
        Err(e) => VjStatus::from(&e),
    }
}

/// Parses "n/d" or a bare integer.
///
/// # Safety
/// `text` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn vj_rational_parse(
    text: *const c_char,
    out: *mut *mut VjRational,
) -> VjStatus {
    if text.is_null() {
        return VjStatus::NullArgument;
    }
    let Ok(s) = unsafe { CStr::from_ptr(text) }.to_str() else {
        return VjStatus::ParseError;
    };
    match Rational::from_str(s) {
        Ok(r) => write_out(out, r),
        Err(e) => VjStatus::from(&e),
    }
}

/// Releases a rational handle. Null is a no-op.
///
/// # Safety
/// `ptr` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn vj_rational_free(ptr: *mut VjRational) {
    if !ptr.is_null() {
        drop(unsafe { Box::from_raw(ptr) });
    }
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `ptr` must be null or an unreleased string from this library.
#[no_mangle]
pub unsafe extern "C" fn vj_string_free(ptr: *mut c_char) {
    if !ptr.is_null() {
        drop(unsafe { CString::from_raw(ptr) });
    }
}

macro_rules! binop {
    ($(#[$doc:meta])* $name:ident, |$a:ident, $b:ident| $body:expr) => {
        $(#[$doc])*
        /// # Safety
        /// Handles must be valid; see module docs.
        #[no_mangle]
        pub unsafe extern "C" fn $name(
            a: *const VjRational,
            b: *const VjRational,
            out: *mut *mut VjRational,
        ) -> VjStatus {
            let (Some($a), Some($b)) = (unsafe { deref(a) }, unsafe { deref(b) }) else {
                return VjStatus::NullArgument;
            };
            match $body {
                Ok(r) => write_out(out, r),
                Err(e) => VjStatus::from(&e),
            }
        }
    };
}

binop!(
    /// `a + b`, exact.
    vj_rational_add, |a, b| Ok::<_, Error>(a + b));
binop!(
    /// `a - b`, exact.
    vj_rational_sub, |a, b| Ok::<_, Error>(a - b));
binop!(
    /// `a × b`, exact.
    vj_rational_mul, |a, b| Ok::<_, Error>(a * b));
binop!(
    /// `a / b`, exact; `b` must be nonzero.
    vj_rational_div, |a, b| a.checked_div(b));

/// The rule of three: `b·c/d` exactly; `d` must be nonzero.
///
/// # Safety
/// Handles must be valid; see module docs.
#[no_mangle]
pub unsafe extern "C" fn vj_rule_of_three(
    b: *const VjRational,
    c: *const VjRational,
    d: *const VjRational,
    out: *mut *mut VjRational,
) -> VjStatus {
    let (Some(b), Some(c), Some(d)) =
        (unsafe { deref(b) }, unsafe { deref(c) }, unsafe { deref(d) })
    else {
        return VjStatus::NullArgument;
    };
    match Rational::rule_of_three(b, c, d) {
        Ok(r) => write_out(out, r),
        Err(e) => VjStatus::from(&e),
    }
}

/// Reduces `r` onto the circle `[0, modulus)`; `modulus` must be positive.
///
/// # Safety
/// Handles must be valid; see module docs.
#[no_mangle]
pub unsafe extern "C" fn vj_rational_mod_circle(
    r: *const VjRational,
    modulus: u64,
    out: *mut *mut VjRational,
) -> VjStatus {
    let Some(r) = (unsafe { deref(r) }) else {
        return VjStatus::NullArgument;
    };
    if modulus == 0 {
        return VjStatus::DomainError;
    }
    write_out(out, r.mod_circle(modulus))
}

/// Canonical "n/d" rendering; caller frees with `vj_string_free`.
///
/// # Safety
/// Handle must be valid; see module docs.
#[no_mangle]
pub unsafe extern "C" fn vj_rational_to_string(r: *const VjRational) -> *mut c_char {
    match unsafe { deref(r) } {
        Some(r) => string_out(r.to_string()),
        None => std::ptr::null_mut(),
    }
}

/// Mixed-number "w n/d" rendering; caller frees with `vj_string_free`.
///
/// # Safety
/// Handle must be valid; see module docs.
#[no_mangle]
pub unsafe extern "C" fn vj_rational_to_mixed_string(r: *const VjRational) -> *mut c_char {
    match unsafe { deref(r) } {
        Some(r) => string_out(r.to_mixed().to_string()),
        None => std::ptr::null_mut(),
    }
}

/// Decimal rendering rounded half-away-from-zero; `places` at most 50.
/// Caller frees with `vj_string_free`.
///
/// # Safety
/// Handle must be valid; see module docs.
#[no_mangle]
pub unsafe extern "C" fn vj_rational_to_decimal_string(
    r: *const VjRational,
    places: usize,
) -> *mut c_char {
    if places > MAX_DECIMAL_PLACES {
        return std::ptr::null_mut();
    }
    match unsafe { deref(r) } {
        Some(r) => string_out(r.to_decimal_string(places)),
        None => std::ptr::null_mut(),
    }
}

/// Moon nakṣatra position after `fortnight` fortnights under the default
/// five-year-yuga parameters. Writes the segment index and a new handle for
/// the progress fraction in [0, 1).
#[no_mangle]
pub extern "C" fn vj_moon_position(
    fortnight: u64,
    out_segment: *mut u64,
    out_progress: *mut *mut VjRational,
) -> VjStatus {
    if out_segment.is_null() || out_progress.is_null() {
        return VjStatus::NullArgument;
    }
    let pos = yuga::moon_position(&YugaParameters::default(), fortnight);
    unsafe { *out_segment = pos.segment() };
    write_out(out_progress, pos.progress().clone())
}

/// Sun nakṣatra position after `fortnight` fortnights under the default
/// parameters (model-completed 135/124 rate).
#[no_mangle]
pub extern "C" fn vj_sun_position(
    fortnight: u64,
    out_segment: *mut u64,
    out_progress: *mut *mut VjRational,
) -> VjStatus {
    if out_segment.is_null() || out_progress.is_null() {
        return VjStatus::NullArgument;
    }
    let pos = yuga::sun_position(&YugaParameters::default(), fortnight);
    unsafe { *out_segment = pos.segment() };
    write_out(out_progress, pos.progress().clone())
}

/// Years elapsed between two ecliptic longitudes (degrees) at a precession
/// rate in years per degree; all three are rational handles.
///
/// # Safety
/// Handles must be valid; see module docs.
#[no_mangle]
pub unsafe extern "C" fn vj_elapsed_years(
    longitude_a_deg: *const VjRational,
    longitude_b_deg: *const VjRational,
    years_per_degree: *const VjRational,
    out: *mut *mut VjRational,
) -> VjStatus {
    let (Some(a), Some(b), Some(rate)) = (
        unsafe { deref(longitude_a_deg) },
        unsafe { deref(longitude_b_deg) },
        unsafe { deref(years_per_degree) },
    ) else {
        return VjStatus::NullArgument;
    };
    let rate = match PrecessionRate::new(rate.clone()) {
        Ok(r) => r,
        Err(e) => return VjStatus::from(&e),
    };
    let la = EclipticLongitude::new(a.clone());
    let lb = EclipticLongitude::new(b.clone());
    write_out(out, precession::elapsed_years(&la, &lb, &rate))
}

/// Steps back from a known astronomical year by the elapsed years (rounded
/// half away from zero), writing the resulting astronomical year.
///
/// # Safety
/// Handles must be valid; see module docs.
#[no_mangle]
pub unsafe extern "C" fn vj_conjunction_year(
    known_astronomical: i64,
    elapsed_years: *const VjRational,
    out_astronomical: *mut i64,
) -> VjStatus {
    let Some(elapsed) = (unsafe { deref(elapsed_years) }) else {
        return VjStatus::NullArgument;
    };
    if out_astronomical.is_null() {
        return VjStatus::NullArgument;
    }
    if elapsed.is_negative() {
        return VjStatus::DomainError;
    }
    let date = precession::conjunction_date(Epoch::from_astronomical(known_astronomical), elapsed);
    unsafe { *out_astronomical = date.astronomical() };
    VjStatus::Ok
}

/// BCE/CE label for an astronomical year (0 = 1 BCE); caller frees with
/// `vj_string_free`.
#[no_mangle]
pub extern "C" fn vj_epoch_label(astronomical: i64) -> *mut c_char {
    string_out(Epoch::from_astronomical(astronomical).label())
}

/// Greedy unit-fraction denominators of a proper fraction in (0,1), as a
/// comma-separated string like "2,12,186"; caller frees with
/// `vj_string_free`.
///
/// # Safety
/// Handle must be valid; see module docs.
#[no_mangle]
pub unsafe extern "C" fn vj_unit_fraction_denominators(
    r: *const VjRational,
    out: *mut *mut c_char,
) -> VjStatus {
    let Some(r) = (unsafe { deref(r) }) else {
        return VjStatus::NullArgument;
    };
    if out.is_null() {
        return VjStatus::NullArgument;
    }
    match tally::greedy_unit_fractions(r) {
        Ok(d) => {
            let text = d
                .denominators()
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",");
            unsafe { *out = string_out(text) };
            VjStatus::Ok
        }
        Err(e) => VjStatus::from(&e),
    }
}

/// Whether the whole-number tally model and the rational model agree at the
/// given fortnight under the default parameters (they always should).
#[no_mangle]
pub extern "C" fn vj_models_agree(fortnight: u64, out_agree: *mut bool) -> VjStatus {
    if out_agree.is_null() {
        return VjStatus::NullArgument;
    }
    let witness = tally::models_agree(&YugaParameters::default(), fortnight);
    unsafe { *out_agree = witness.agree() };
    VjStatus::Ok
}

/// Full default yuga table as a JSON array (the same schema as the CLI's
/// `yuga table --format json`); caller frees with `vj_string_free`.
#[no_mangle]
pub extern "C" fn vj_yuga_table_json() -> *mut c_char {
    let p = YugaParameters::default();
    let table = NaksatraNameTable::default_table();
    let rows = yuga::yuga_table(&p, &table);
    match serde_json_string(&rows) {
        Some(s) => string_out(s),
        None => std::ptr::null_mut(),
    }
}

// vjcal re-exports nothing from serde_json; serialize via the crate's own
// JSON rendering to keep this crate's dependency list minimal
fn serde_json_string(rows: &[yuga::FortnightRecord]) -> Option<String> {
    yuga::table_to_json(rows).ok()
}
