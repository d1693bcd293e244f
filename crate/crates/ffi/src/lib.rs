//! C ABI for the asincert certification library.
//!
//! Certificates are returned through opaque handles; every entry point
//! reports an [`AsincertStatus`], catches panics at the boundary, and leaves
//! output parameters untouched on failure. Strings handed out by this layer
//! must be released with [`asincert_string_free`], certificates with
//! [`asincert_certificate_free`].
//!
//! The `include/asincert.h` header is generated by cbindgen at build time.

use asincert::{
    classify, find_bounds, max_gap, replay_json, verify, Certificate, Claim, ClaimTarget,
    FamilyParams, ReducedParam, RegimeTag, Relation, Verdict, VerifierConfig,
};
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Status and verdict codes, mirroring the CLI exit codes where they exist.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AsincertStatus {
    /// Success; for verification calls, the claim is PROVEN.
    Ok = 0,
    /// The claim is REFUTED.
    Refuted = 1,
    /// The verifier exhausted its budget, or a parameter search could not
    /// decide its predicate.
    Undecided = 2,
    /// Null pointer, malformed UTF-8, or an argument outside its domain.
    InvalidArgument = 64,
    /// A certificate failed to parse or its evidence did not re-derive.
    ReplayRejected = 65,
    /// A panic crossed the boundary; state is unchanged.
    Panic = 70,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AsincertRelation {
    /// Distance `>= 0`.
    Ge = 0,
    /// Distance `<= 0`.
    Le = 1,
}

impl From<AsincertRelation> for Relation {
    fn from(r: AsincertRelation) -> Self {
        match r {
            AsincertRelation::Ge => Relation::Ge,
            AsincertRelation::Le => Relation::Le,
        }
    }
}

/// The four derivative-sign regimes of the distance `f_b - asin`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AsincertRegime {
    DerivativeNonnegative = 0,
    Hump = 1,
    Crossing = 2,
    DerivativeNonpositive = 3,
}

impl From<RegimeTag> for AsincertRegime {
    fn from(t: RegimeTag) -> Self {
        match t {
            RegimeTag::DerivativeNonnegative => AsincertRegime::DerivativeNonnegative,
            RegimeTag::Hump => AsincertRegime::Hump,
            RegimeTag::Crossing => AsincertRegime::Crossing,
            RegimeTag::DerivativeNonpositive => AsincertRegime::DerivativeNonpositive,
        }
    }
}

/// Classification of one parameter value.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct AsincertClassification {
    pub b: f64,
    pub regime: AsincertRegime,
    pub golden_ratio: f64,
    pub b1: f64,
    pub b2: f64,
    /// Stationary abscissa `d(b)`; NaN when undefined (`b` outside `[1, 2]`).
    pub critical_point: f64,
    pub endpoint_gap: f64,
}

/// Location and size of the maximum distance for one parameter.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct AsincertGapReport {
    pub b: f64,
    pub argmax_x: f64,
    pub max_gap: f64,
    pub endpoint_gap: f64,
    pub regime: AsincertRegime,
}

/// Opaque certificate handle.
pub struct AsincertCertificate {
    inner: Certificate,
}

fn verdict_status(v: Verdict) -> AsincertStatus {
    match v {
        Verdict::Proven => AsincertStatus::Ok,
        Verdict::Refuted => AsincertStatus::Refuted,
        Verdict::Undecided => AsincertStatus::Undecided,
    }
}

fn guarded(f: impl FnOnce() -> AsincertStatus) -> AsincertStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(AsincertStatus::Panic)
}

fn run_verify(
    claim: Result<Claim, asincert::Error>,
    max_depth: u32,
    out: *mut *mut AsincertCertificate,
) -> AsincertStatus {
    if out.is_null() || max_depth == 0 {
        return AsincertStatus::InvalidArgument;
    }
    let claim = match claim {
        Ok(c) => c,
        Err(_) => return AsincertStatus::InvalidArgument,
    };
    let cfg = VerifierConfig {
        max_depth,
        ..VerifierConfig::default()
    };
    match verify(&claim, &cfg) {
        Ok(cert) => {
            let status = verdict_status(cert.verdict);
            let handle = Box::new(AsincertCertificate { inner: cert });
            unsafe { *out = Box::into_raw(handle) };
            status
        }
        Err(_) => AsincertStatus::InvalidArgument,
    }
}

/// Certifies `f_b - asin <relation> 0` on `[0, 1]` with endpoint equalities
/// detected automatically. On success `*out_certificate` owns the
/// certificate regardless of the verdict.
///
/// # Safety
/// `out_certificate` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn asincert_verify_reduced(
    b: f64,
    relation: AsincertRelation,
    max_depth: u32,
    out_certificate: *mut *mut AsincertCertificate,
) -> AsincertStatus {
    guarded(|| run_verify(Claim::reduced(b, relation.into()), max_depth, out_certificate))
}

/// Certifies `phi_{a,b} - asin <relation> 0` on `[0, 1]`.
///
/// # Safety
/// `out_certificate` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn asincert_verify_family(
    a: f64,
    b: f64,
    relation: AsincertRelation,
    max_depth: u32,
    out_certificate: *mut *mut AsincertCertificate,
) -> AsincertStatus {
    guarded(|| {
        let claim = FamilyParams::new(a, b)
            .and_then(|p| Claim::with_auto_equality(ClaimTarget::Family(p), relation.into()));
        run_verify(claim, max_depth, out_certificate)
    })
}

/// Certifies `phi_{a1,b1} - phi_{a2,b2} <relation> 0` on `[0, 1]`.
///
/// # Safety
/// `out_certificate` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn asincert_verify_difference(
    a1: f64,
    b1: f64,
    a2: f64,
    b2: f64,
    relation: AsincertRelation,
    max_depth: u32,
    out_certificate: *mut *mut AsincertCertificate,
) -> AsincertStatus {
    guarded(|| {
        let claim = FamilyParams::new(a1, b1).and_then(|lhs| {
            let rhs = FamilyParams::new(a2, b2)?;
            Claim::with_auto_equality(ClaimTarget::Difference(lhs, rhs), relation.into())
        });
        run_verify(claim, max_depth, out_certificate)
    })
}

/// The verdict carried by a certificate.
///
/// # Safety
/// `certificate` must come from a verification call and not be freed.
#[no_mangle]
pub unsafe extern "C" fn asincert_certificate_verdict(
    certificate: *const AsincertCertificate,
) -> AsincertStatus {
    if certificate.is_null() {
        return AsincertStatus::InvalidArgument;
    }
    verdict_status(unsafe { &*certificate }.inner.verdict)
}

/// Serializes a certificate to JSON. Release with [`asincert_string_free`];
/// returns null on invalid input.
///
/// # Safety
/// `certificate` must come from a verification call and not be freed.
#[no_mangle]
pub unsafe extern "C" fn asincert_certificate_json(
    certificate: *const AsincertCertificate,
) -> *mut c_char {
    if certificate.is_null() {
        return ptr::null_mut();
    }
    let json = unsafe { &*certificate }.inner.to_json();
    match CString::new(json) {
        Ok(s) => s.into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// Replays a serialized certificate; `Ok` means the evidence re-derives.
///
/// # Safety
/// `json` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn asincert_replay_json(json: *const c_char) -> AsincertStatus {
    guarded(|| {
        if json.is_null() {
            return AsincertStatus::InvalidArgument;
        }
        let Ok(text) = unsafe { CStr::from_ptr(json) }.to_str() else {
            return AsincertStatus::InvalidArgument;
        };
        match replay_json(text) {
            Ok(()) => AsincertStatus::Ok,
            Err(_) => AsincertStatus::ReplayRejected,
        }
    })
}

/// Frees a certificate handle; null is ignored.
///
/// # Safety
/// `certificate` must come from a verification call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn asincert_certificate_free(certificate: *mut AsincertCertificate) {
    if !certificate.is_null() {
        drop(unsafe { Box::from_raw(certificate) });
    }
}

/// Frees a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn asincert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Classifies a parameter into its regime with the associated witnesses.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn asincert_classify(
    b: f64,
    out: *mut AsincertClassification,
) -> AsincertStatus {
    guarded(|| {
        if out.is_null() {
            return AsincertStatus::InvalidArgument;
        }
        match classify(b) {
            Ok(c) => {
                unsafe {
                    *out = AsincertClassification {
                        b: c.b,
                        regime: c.tag.into(),
                        golden_ratio: c.thresholds.golden_ratio,
                        b1: c.thresholds.b1,
                        b2: c.thresholds.b2,
                        critical_point: c.critical_point.unwrap_or(f64::NAN),
                        endpoint_gap: c.endpoint_gap,
                    };
                }
                AsincertStatus::Ok
            }
            Err(_) => AsincertStatus::InvalidArgument,
        }
    })
}

/// Runs both extremal parameter searches at the given tolerance
/// (`tol >= 1e-12`).
///
/// # Safety
/// `out_b1` and `out_b2` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn asincert_find_bounds(
    tol: f64,
    out_b1: *mut f64,
    out_b2: *mut f64,
) -> AsincertStatus {
    guarded(|| {
        if out_b1.is_null() || out_b2.is_null() {
            return AsincertStatus::InvalidArgument;
        }
        match find_bounds(tol) {
            Ok(r) => {
                unsafe {
                    *out_b1 = r.b1;
                    *out_b2 = r.b2;
                }
                AsincertStatus::Ok
            }
            Err(asincert::Error::Undecided { .. }) => AsincertStatus::Undecided,
            Err(_) => AsincertStatus::InvalidArgument,
        }
    })
}

/// Reports the maximum of the distance for one parameter.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn asincert_max_gap(
    b: f64,
    out: *mut AsincertGapReport,
) -> AsincertStatus {
    guarded(|| {
        if out.is_null() {
            return AsincertStatus::InvalidArgument;
        }
        let param = match ReducedParam::new(b) {
            Ok(p) => p,
            Err(_) => return AsincertStatus::InvalidArgument,
        };
        match max_gap(param) {
            Ok(r) => {
                unsafe {
                    *out = AsincertGapReport {
                        b: r.b,
                        argmax_x: r.argmax_x,
                        max_gap: r.max_gap,
                        endpoint_gap: r.endpoint_gap,
                        regime: r.regime.into(),
                    };
                }
                AsincertStatus::Ok
            }
            Err(_) => AsincertStatus::InvalidArgument,
        }
    })
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn asincert_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
