//! C ABI for txray.
//!
//! Values cross the boundary as opaque handles (`TxrXray`, `TxrChamber`,
//! `TxrVerdict`) or as JSON documents. Every fallible call returns a
//! `TxrStatus`; on failure `txr_last_error_message` describes the error for
//! the calling thread. Handles and strings returned by the library are owned
//! by the caller and released with the matching `*_free` function.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use txray::cutting::{cut_u2, CutSpec};
use txray::document::{Document, Payload};
use txray::geometry::{LatticeVector, Rational};
use txray::group::Lambda;
use txray::obstruction::{tolman_check, Verdict};
use txray::render::{render_svg, Overlays};
use txray::scenarios::{hirzebruch, HnParams};
use txray::xray::{chamber_to_xray, flag_xray, ChamberData, XRay};
use txray::Error;

pub struct TxrXray(XRay);
pub struct TxrChamber(ChamberData);
pub struct TxrVerdict(Verdict);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TxrStatus {
    Ok = 0,
    ZeroVector,
    NonPrimitive,
    DegenerateCone,
    EmptyInput,
    EmptyCut,
    DegenerateCut,
    NotFullDimensional,
    InvalidPolygon,
    NonGenericLambda,
    NotDelzant,
    VerticalEdgeUnsupported,
    DuplicatePosition,
    AmbiguousPairing,
    DanglingWeight,
    InvalidChamber,
    WallNotPerpendicular,
    VertexOnCutLine,
    NonFreeAction,
    WrongDimensionScope,
    InvalidXRay,
    InvalidParameter,
    Document,
    NullPointer = 100,
    InvalidUtf8,
    Panic,
}

impl From<&Error> for TxrStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::ZeroVector => TxrStatus::ZeroVector,
            Error::NonPrimitive(_) => TxrStatus::NonPrimitive,
            Error::DegenerateCone { .. } => TxrStatus::DegenerateCone,
            Error::EmptyInput => TxrStatus::EmptyInput,
            Error::EmptyCut => TxrStatus::EmptyCut,
            Error::DegenerateCut => TxrStatus::DegenerateCut,
            Error::NotFullDimensional => TxrStatus::NotFullDimensional,
            Error::InvalidPolygon => TxrStatus::InvalidPolygon,
            Error::NonGenericLambda(..) => TxrStatus::NonGenericLambda,
            Error::NotDelzant { .. } => TxrStatus::NotDelzant,
            Error::VerticalEdgeUnsupported { .. } => TxrStatus::VerticalEdgeUnsupported,
            Error::DuplicatePosition(_) => TxrStatus::DuplicatePosition,
            Error::AmbiguousPairing { .. } => TxrStatus::AmbiguousPairing,
            Error::DanglingWeight { .. } => TxrStatus::DanglingWeight,
            Error::InvalidChamber(_) => TxrStatus::InvalidChamber,
            Error::WallNotPerpendicular { .. } => TxrStatus::WallNotPerpendicular,
            Error::VertexOnCutLine(_) => TxrStatus::VertexOnCutLine,
            Error::NonFreeAction { .. } => TxrStatus::NonFreeAction,
            Error::WrongDimensionScope { .. } => TxrStatus::WrongDimensionScope,
            Error::InvalidXRay(_) => TxrStatus::InvalidXRay,
            Error::InvalidParameter(_) => TxrStatus::InvalidParameter,
            Error::Document { .. } => TxrStatus::Document,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(status: TxrStatus, message: String) -> TxrStatus {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
    status
}

/// Runs `f`, recording any error or panic for `txr_last_error_message`.
fn guard(f: impl FnOnce() -> Result<(), TxrStatusError>) -> TxrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = CString::default());
            TxrStatus::Ok
        }
        Ok(Err(TxrStatusError(status, message))) => set_error(status, message),
        Err(_) => set_error(TxrStatus::Panic, "internal panic".into()),
    }
}

struct TxrStatusError(TxrStatus, String);

impl From<Error> for TxrStatusError {
    fn from(e: Error) -> Self {
        TxrStatusError((&e).into(), e.to_string())
    }
}

fn null(what: &str) -> TxrStatusError {
    TxrStatusError(TxrStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, TxrStatusError> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), TxrStatusError> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, TxrStatusError> {
    if s.is_null() {
        return Err(null("string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| TxrStatusError(TxrStatus::InvalidUtf8, e.to_string()))
}

fn rational(num: i64, den: i64) -> Result<Rational, TxrStatusError> {
    if den == 0 {
        return Err(Error::InvalidParameter("zero denominator".into()).into());
    }
    Ok(Rational::new(num, den))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn txr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Stable name of a status code.
#[no_mangle]
pub extern "C" fn txr_status_name(status: TxrStatus) -> *const c_char {
    let name: &'static CStr = match status {
        TxrStatus::Ok => c"Ok",
        TxrStatus::ZeroVector => c"ZeroVector",
        TxrStatus::NonPrimitive => c"NonPrimitive",
        TxrStatus::DegenerateCone => c"DegenerateCone",
        TxrStatus::EmptyInput => c"EmptyInput",
        TxrStatus::EmptyCut => c"EmptyCut",
        TxrStatus::DegenerateCut => c"DegenerateCut",
        TxrStatus::NotFullDimensional => c"NotFullDimensional",
        TxrStatus::InvalidPolygon => c"InvalidPolygon",
        TxrStatus::NonGenericLambda => c"NonGenericLambda",
        TxrStatus::NotDelzant => c"NotDelzant",
        TxrStatus::VerticalEdgeUnsupported => c"VerticalEdgeUnsupported",
        TxrStatus::DuplicatePosition => c"DuplicatePosition",
        TxrStatus::AmbiguousPairing => c"AmbiguousPairing",
        TxrStatus::DanglingWeight => c"DanglingWeight",
        TxrStatus::InvalidChamber => c"InvalidChamber",
        TxrStatus::WallNotPerpendicular => c"WallNotPerpendicular",
        TxrStatus::VertexOnCutLine => c"VertexOnCutLine",
        TxrStatus::NonFreeAction => c"NonFreeAction",
        TxrStatus::WrongDimensionScope => c"WrongDimensionScope",
        TxrStatus::InvalidXRay => c"InvalidXRay",
        TxrStatus::InvalidParameter => c"InvalidParameter",
        TxrStatus::Document => c"Document",
        TxrStatus::NullPointer => c"NullPointer",
        TxrStatus::InvalidUtf8 => c"InvalidUtf8",
        TxrStatus::Panic => c"Panic",
    };
    name.as_ptr()
}

/// X-ray of the coadjoint orbit through `λ = (num[i] / den[i])`.
#[no_mangle]
pub unsafe extern "C" fn txr_xray_flag(
    num: *const i64,
    den: *const i64,
    out: *mut *mut TxrXray,
) -> TxrStatus {
    guard(|| {
        if num.is_null() || den.is_null() {
            return Err(null("lambda"));
        }
        let (num, den) = (
            std::slice::from_raw_parts(num, 3),
            std::slice::from_raw_parts(den, 3),
        );
        let lambda = Lambda::new(
            rational(num[0], den[0])?,
            rational(num[1], den[1])?,
            rational(num[2], den[2])?,
        )?;
        put(out, TxrXray(flag_xray(&lambda)?))
    })
}

/// Decodes an X-ray document.
#[no_mangle]
pub unsafe extern "C" fn txr_xray_from_json(
    json: *const c_char,
    out: *mut *mut TxrXray,
) -> TxrStatus {
    guard(|| put(out, TxrXray(Document::decode(text(json)?)?.into_xray()?)))
}

/// Encodes an X-ray document; free the result with `txr_string_free`.
#[no_mangle]
pub unsafe extern "C" fn txr_xray_to_json(x: *const TxrXray, out: *mut *mut c_char) -> TxrStatus {
    guard(|| {
        let x = borrow(x, "xray")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = owned_string(Document::new(Payload::XRay(x.0.clone()), "ffi").encode());
        Ok(())
    })
}

/// Number of fixed points, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn txr_xray_fixed_point_count(x: *const TxrXray) -> usize {
    x.as_ref().map_or(0, |x| x.0.fixed_points().len())
}

/// Number of edges, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn txr_xray_edge_count(x: *const TxrXray) -> usize {
    x.as_ref().map_or(0, |x| x.0.edges().len())
}

#[no_mangle]
pub unsafe extern "C" fn txr_chamber_from_json(
    json: *const c_char,
    out: *mut *mut TxrChamber,
) -> TxrStatus {
    guard(|| {
        put(
            out,
            TxrChamber(Document::decode(text(json)?)?.into_chamber()?),
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn txr_chamber_to_json(
    c: *const TxrChamber,
    out: *mut *mut c_char,
) -> TxrStatus {
    guard(|| {
        let c = borrow(c, "chamber")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = owned_string(Document::new(Payload::Chamber(c.0.clone()), "ffi").encode());
        Ok(())
    })
}

/// Cuts by `<(x, y), p> <= level_num / level_den`.
#[no_mangle]
pub unsafe extern "C" fn txr_cut_u2(
    c: *const TxrChamber,
    x: i64,
    y: i64,
    level_num: i64,
    level_den: i64,
    out: *mut *mut TxrChamber,
) -> TxrStatus {
    guard(|| {
        let c = borrow(c, "chamber")?;
        let spec = CutSpec::new(LatticeVector::new(x, y), rational(level_num, level_den)?)?;
        put(out, TxrChamber(cut_u2(&c.0, &spec)?.chamber))
    })
}

#[no_mangle]
pub unsafe extern "C" fn txr_chamber_to_xray(
    c: *const TxrChamber,
    out: *mut *mut TxrXray,
) -> TxrStatus {
    guard(|| put(out, TxrXray(chamber_to_xray(&borrow(c, "chamber")?.0)?)))
}

/// `H_n` with default parameters. Either output may be null.
#[no_mangle]
pub unsafe extern "C" fn txr_scenario_hn(
    n: i64,
    out_xray: *mut *mut TxrXray,
    out_verdict: *mut *mut TxrVerdict,
) -> TxrStatus {
    guard(|| {
        let h = hirzebruch(&HnParams::defaults(n)?)?;
        if !out_xray.is_null() {
            put(out_xray, TxrXray(h.xray))?;
        }
        if !out_verdict.is_null() {
            put(out_verdict, TxrVerdict(h.verdict))?;
        }
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn txr_tolman_check(
    x: *const TxrXray,
    out: *mut *mut TxrVerdict,
) -> TxrStatus {
    guard(|| put(out, TxrVerdict(tolman_check(&borrow(x, "xray")?.0)?)))
}

/// 1 if an obstruction was found, 0 otherwise (including a null handle).
#[no_mangle]
pub unsafe extern "C" fn txr_verdict_is_obstructed(v: *const TxrVerdict) -> i32 {
    v.as_ref().map_or(0, |v| i32::from(v.0.is_obstructed()))
}

#[no_mangle]
pub unsafe extern "C" fn txr_verdict_certificate_count(v: *const TxrVerdict) -> usize {
    v.as_ref().map_or(0, |v| v.0.certificates().len())
}

#[no_mangle]
pub unsafe extern "C" fn txr_verdict_to_json(
    v: *const TxrVerdict,
    out: *mut *mut c_char,
) -> TxrStatus {
    guard(|| {
        let v = borrow(v, "verdict")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = owned_string(Document::new(Payload::Verdict(v.0.clone()), "ffi").encode());
        Ok(())
    })
}

/// SVG drawing of `x`, highlighting the uncovered faces of `highlight` when
/// it is not null. Free the result with `txr_string_free`.
#[no_mangle]
pub unsafe extern "C" fn txr_render_svg(
    x: *const TxrXray,
    highlight: *const TxrVerdict,
    out: *mut *mut c_char,
) -> TxrStatus {
    guard(|| {
        let x = borrow(x, "xray")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let overlays = Overlays {
            highlight: highlight
                .as_ref()
                .map(|v| {
                    v.0.certificates()
                        .iter()
                        .map(|c| c.uncovered_face)
                        .collect()
                })
                .unwrap_or_default(),
            ..Overlays::default()
        };
        *out = owned_string(render_svg(&x.0, &overlays));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn txr_xray_free(x: *mut TxrXray) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

#[no_mangle]
pub unsafe extern "C" fn txr_chamber_free(c: *mut TxrChamber) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

#[no_mangle]
pub unsafe extern "C" fn txr_verdict_free(v: *mut TxrVerdict) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

#[no_mangle]
pub unsafe extern "C" fn txr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_error_has_a_matching_status_name() {
        let samples = [
            Error::EmptyCut,
            Error::NonFreeAction {
                edge: String::new(),
                determinant: 2,
            },
            Error::Document {
                path: String::new(),
                message: String::new(),
            },
        ];
        for e in samples {
            let name = unsafe { CStr::from_ptr(txr_status_name((&e).into())) };
            assert_eq!(name.to_str().unwrap(), e.code());
        }
    }
}
