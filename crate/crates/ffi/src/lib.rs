//! C ABI for the martensite library: opaque handles, status codes, and
//! string-buffer outputs so other languages can bind without knowing any
//! Rust types. Exact values cross the boundary as decimal or rational
//! strings; nothing is ever rounded on the way in.

use martensite::rat::decimal_string;
use martensite::report::{run_verification, ClaimStatus};
use martensite::t3::solve_t3_indices;
use martensite::variants::{build_variants, builtin_registry, LatticeParams, Regime, VariantSet};
use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MartensiteStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidParams = 2,
    UnknownMaterial = 3,
    DegenerateParams = 4,
    FlatPolytope = 5,
    ComputationFailed = 6,
    BufferTooSmall = 7,
    InvalidUtf8 = 8,
}

/// Opaque variant-set handle.
pub struct MartensiteVariants {
    inner: VariantSet,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(message: impl Into<String>) {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message.into());
}

fn write_str(
    text: &str,
    buffer: *mut c_char,
    capacity: usize,
    written: *mut usize,
) -> MartensiteStatus {
    let bytes = text.as_bytes();
    let needed = bytes.len() + 1;
    if !written.is_null() {
        unsafe { *written = needed };
    }
    if buffer.is_null() || capacity < needed {
        return MartensiteStatus::BufferTooSmall;
    }
    unsafe {
        std::ptr::copy_nonoverlapping(bytes.as_ptr(), buffer.cast(), bytes.len());
        *buffer.add(bytes.len()) = 0;
    }
    MartensiteStatus::Ok
}

unsafe fn cstr<'a>(ptr: *const c_char) -> Result<&'a str, MartensiteStatus> {
    if ptr.is_null() {
        return Err(MartensiteStatus::NullArgument);
    }
    unsafe { CStr::from_ptr(ptr) }.to_str().map_err(|_| MartensiteStatus::InvalidUtf8)
}

/// The message describing the most recent failure on this thread.
///
/// # Safety
/// `buffer` must point to `capacity` writable bytes (or be null to query the
/// required length via `written`).
#[no_mangle]
pub unsafe extern "C" fn martensite_last_error(
    buffer: *mut c_char,
    capacity: usize,
    written: *mut usize,
) -> MartensiteStatus {
    LAST_ERROR.with(|slot| write_str(&slot.borrow(), buffer, capacity, written))
}

/// Builds a handle from a material in the shipped registry.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn martensite_variants_from_material(
    name: *const c_char,
    out: *mut *mut MartensiteVariants,
) -> MartensiteStatus {
    if out.is_null() {
        return MartensiteStatus::NullArgument;
    }
    let name = match unsafe { cstr(name) } {
        Ok(s) => s,
        Err(status) => return status,
    };
    match builtin_registry().lookup(name) {
        Ok(params) => {
            let handle = Box::new(MartensiteVariants { inner: build_variants(params) });
            unsafe { *out = Box::into_raw(handle) };
            MartensiteStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            MartensiteStatus::UnknownMaterial
        }
    }
}

/// Builds a handle from four exact parameter strings (decimals or `a/b`).
///
/// # Safety
/// All four strings must be NUL-terminated; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn martensite_variants_from_params(
    alpha: *const c_char,
    beta: *const c_char,
    delta: *const c_char,
    epsilon: *const c_char,
    out: *mut *mut MartensiteVariants,
) -> MartensiteStatus {
    if out.is_null() {
        return MartensiteStatus::NullArgument;
    }
    let fields = [alpha, beta, delta, epsilon].map(|p| unsafe { cstr(p) });
    let mut texts = Vec::with_capacity(4);
    for f in fields {
        match f {
            Ok(s) => texts.push(s),
            Err(status) => return status,
        }
    }
    match LatticeParams::parse(texts[0], texts[1], texts[2], texts[3]) {
        Ok(params) => {
            let handle = Box::new(MartensiteVariants { inner: build_variants(params) });
            unsafe { *out = Box::into_raw(handle) };
            MartensiteStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            MartensiteStatus::InvalidParams
        }
    }
}

/// Releases a handle. Null is allowed.
///
/// # Safety
/// `handle` must have come from one of the constructors and not been freed.
#[no_mangle]
pub unsafe extern "C" fn martensite_variants_free(handle: *mut MartensiteVariants) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Regime code: 0 = Ia (eps < delta), 1 = boundary, 2 = Ib; -1 on null.
///
/// # Safety
/// `handle` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn martensite_regime(handle: *const MartensiteVariants) -> c_int {
    let Some(h) = (unsafe { handle.as_ref() }) else {
        return -1;
    };
    match h.inner.params().regime() {
        Regime::Ia => 0,
        Regime::Boundary => 1,
        Regime::Ib => 2,
    }
}

/// 1 when the parameters are generic (neither degenerate nor flat), else 0.
///
/// # Safety
/// `handle` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn martensite_is_generic(handle: *const MartensiteVariants) -> c_int {
    let Some(h) = (unsafe { handle.as_ref() }) else {
        return 0;
    };
    h.inner.params().is_generic() as c_int
}

/// Sign of `det(e_j - e_i)` for 1-based variant indices: -1, 0 or +1.
///
/// # Safety
/// `handle` and `sign` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn martensite_pair_det_sign(
    handle: *const MartensiteVariants,
    i: c_int,
    j: c_int,
    sign: *mut c_int,
) -> MartensiteStatus {
    let Some(h) = (unsafe { handle.as_ref() }) else {
        return MartensiteStatus::NullArgument;
    };
    if sign.is_null() {
        return MartensiteStatus::NullArgument;
    }
    if !(1..=12).contains(&i) || !(1..=12).contains(&j) {
        set_error("variant indices must lie in 1..=12");
        return MartensiteStatus::InvalidParams;
    }
    let det = h.inner.pair_det(j as usize, i as usize);
    let value = match det.cmp(&num_traits::Zero::zero()) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    };
    unsafe { *sign = value };
    MartensiteStatus::Ok
}

/// Number of facets of the variant polytope (25, 7 or 33 by regime).
///
/// # Safety
/// `handle` and `count` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn martensite_facet_count(
    handle: *const MartensiteVariants,
    count: *mut usize,
) -> MartensiteStatus {
    let Some(h) = (unsafe { handle.as_ref() }) else {
        return MartensiteStatus::NullArgument;
    };
    if count.is_null() {
        return MartensiteStatus::NullArgument;
    }
    match martensite::polytope::enumerate_facets(&h.inner) {
        Ok(facets) => {
            unsafe { *count = facets.len() };
            MartensiteStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            match e {
                martensite::polytope::PolytopeError::FlatPolytope(_) => {
                    MartensiteStatus::FlatPolytope
                }
                martensite::polytope::PolytopeError::DegenerateParams => {
                    MartensiteStatus::DegenerateParams
                }
            }
        }
    }
}

/// Facet list as a JSON document (vertex indices, exact normals, offsets,
/// orbit-group labels).
///
/// # Safety
/// `handle` must be live; `buffer` must point to `capacity` writable bytes
/// (or be null to query the required length via `written`).
#[no_mangle]
pub unsafe extern "C" fn martensite_facets_json(
    handle: *const MartensiteVariants,
    buffer: *mut c_char,
    capacity: usize,
    written: *mut usize,
) -> MartensiteStatus {
    let Some(h) = (unsafe { handle.as_ref() }) else {
        return MartensiteStatus::NullArgument;
    };
    let facets = match martensite::polytope::enumerate_facets(&h.inner) {
        Ok(f) => f,
        Err(e) => {
            set_error(e.to_string());
            return match e {
                martensite::polytope::PolytopeError::FlatPolytope(_) => {
                    MartensiteStatus::FlatPolytope
                }
                martensite::polytope::PolytopeError::DegenerateParams => {
                    MartensiteStatus::DegenerateParams
                }
            };
        }
    };
    let items: Vec<serde_json::Value> = facets
        .iter()
        .map(|f| {
            serde_json::json!({
                "vertices": f.vertices,
                "group": f.group.label(),
                "normal": f.normal.entries().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "offset": f.offset.to_string(),
            })
        })
        .collect();
    let doc = serde_json::json!({ "count": facets.len(), "facets": items });
    write_str(&doc.to_string(), buffer, capacity, written)
}

/// Decimal rendering (truncated at `digits` places) of the scaffold
/// parameter of the T3 on variants `(i, j, k)`.
///
/// # Safety
/// `handle` must be live; `buffer` must point to `capacity` writable bytes
/// (or be null to query the required length via `written`).
#[no_mangle]
pub unsafe extern "C" fn martensite_t3_lambda_decimal(
    handle: *const MartensiteVariants,
    i: c_int,
    j: c_int,
    k: c_int,
    digits: usize,
    buffer: *mut c_char,
    capacity: usize,
    written: *mut usize,
) -> MartensiteStatus {
    let Some(h) = (unsafe { handle.as_ref() }) else {
        return MartensiteStatus::NullArgument;
    };
    let mut triple = [i, j, k];
    triple.sort_unstable();
    if triple[0] < 1 || triple[2] > 12 || triple[0] == triple[1] || triple[1] == triple[2] {
        set_error("triple must be three distinct indices in 1..=12");
        return MartensiteStatus::InvalidParams;
    }
    let triple = triple.map(|x| x as usize);
    let digits = digits.clamp(1, 40);
    let result = catch_unwind(AssertUnwindSafe(|| {
        let record = solve_t3_indices(&h.inner, triple)?;
        let width = martensite::rat::Rat::new(1.into(), pow10(digits + 2));
        let mid = record.lambdas[0].refined_interval(&width).midpoint();
        Ok::<String, martensite::t3::T3Error>(decimal_string(&mid, digits))
    }));
    match result {
        Ok(Ok(text)) => write_str(&text, buffer, capacity, written),
        Ok(Err(e)) => {
            set_error(e.to_string());
            MartensiteStatus::ComputationFailed
        }
        Err(_) => {
            set_error("internal panic");
            MartensiteStatus::ComputationFailed
        }
    }
}

fn pow10(digits: usize) -> num_bigint::BigInt {
    let mut acc = num_bigint::BigInt::from(1);
    for _ in 0..digits {
        acc *= 10;
    }
    acc
}

/// Runs the full verification ledger; `failed` receives the number of
/// failing claims (0 for a clean run).
///
/// # Safety
/// `handle` and `failed` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn martensite_verify(
    handle: *const MartensiteVariants,
    failed: *mut usize,
) -> MartensiteStatus {
    let Some(h) = (unsafe { handle.as_ref() }) else {
        return MartensiteStatus::NullArgument;
    };
    if failed.is_null() {
        return MartensiteStatus::NullArgument;
    }
    let config = martensite::report::RunConfig {
        material: None,
        params: h.inner.params().clone(),
        format: martensite::report::OutputFormat::Json,
        width: martensite::rat::Rat::new(1.into(), 1_000_000_000.into()),
        samples: 32,
        seed: 0,
    };
    let result = catch_unwind(AssertUnwindSafe(|| run_verification(&config)));
    match result {
        Ok(ledger) => {
            let failures = ledger
                .entries
                .iter()
                .filter(|(_, s)| matches!(s, ClaimStatus::Fail(_)))
                .count();
            unsafe { *failed = failures };
            MartensiteStatus::Ok
        }
        Err(_) => {
            set_error("internal panic");
            MartensiteStatus::ComputationFailed
        }
    }
}
