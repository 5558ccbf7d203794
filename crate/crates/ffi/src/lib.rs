//! C ABI for the enumeration engine: opaque handles, integer error codes,
//! UTF-8 strings allocated here and released through `br_string_free`.
//!
//! Every entry point catches panics; a panic surfaces as `BR_ERR_INTERNAL`
//! rather than unwinding across the boundary.

use braidrep::census;
use braidrep::golden;
use braidrep::json::{to_json_string, BnHomJson, CycleSetJson, KnHomJson};
use braidrep::perm::Degree;
use braidrep::shift::{enumerate_cycles, to_dot, CycleKind, CycleSet};
use braidrep::tower::{enumerate_hom_bn, enumerate_hom_kn};
use braidrep::Error;
use std::ffi::{c_char, c_int, CString};
use std::panic::{catch_unwind, UnwindSafe};

/// Success.
pub const BR_OK: c_int = 0;
/// A pointer argument was null.
pub const BR_ERR_NULL: c_int = 1;
/// Degree or level out of the supported range.
pub const BR_ERR_RANGE: c_int = 2;
/// The arguments are outside an operation's domain.
pub const BR_ERR_DOMAIN: c_int = 3;
/// Index beyond the end of a collection.
pub const BR_ERR_INDEX: c_int = 4;
/// Internal failure (a bug; never expected).
pub const BR_ERR_INTERNAL: c_int = 5;

fn error_code(e: &Error) -> c_int {
    match e {
        Error::DegreeOutOfRange { .. } | Error::RankOutOfRange { .. } | Error::InvalidLevel { .. } => {
            BR_ERR_RANGE
        }
        Error::ConjectureDomain { .. } => BR_ERR_DOMAIN,
        _ => BR_ERR_INTERNAL,
    }
}

fn guarded<F: FnOnce() -> c_int + UnwindSafe>(f: F) -> c_int {
    catch_unwind(f).unwrap_or(BR_ERR_INTERNAL)
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> c_int {
    if out.is_null() {
        return BR_ERR_NULL;
    }
    match CString::new(text) {
        Ok(s) => {
            *out = s.into_raw();
            BR_OK
        }
        Err(_) => BR_ERR_INTERNAL,
    }
}

/// An enumerated cycle decomposition; create with `br_cycle_set_new`, release
/// with `br_cycle_set_free`.
pub struct BrCycleSet {
    inner: CycleSet,
}

/// Enumerates the level-3 cycle decomposition for degree `r` and stores a
/// handle in `*out`.
///
/// # Safety
/// `out` must be a valid pointer to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn br_cycle_set_new(r: u8, out: *mut *mut BrCycleSet) -> c_int {
    if out.is_null() {
        return BR_ERR_NULL;
    }
    guarded(move || match Degree::new(r) {
        Ok(d) => {
            let set = BrCycleSet {
                inner: enumerate_cycles(d),
            };
            unsafe { *out = Box::into_raw(Box::new(set)) };
            BR_OK
        }
        Err(e) => error_code(&e),
    })
}

/// Releases a handle from `br_cycle_set_new`. Null is a no-op.
///
/// # Safety
/// `set` must be null or a pointer previously returned by
/// `br_cycle_set_new` that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn br_cycle_set_free(set: *mut BrCycleSet) {
    if !set.is_null() {
        drop(unsafe { Box::from_raw(set) });
    }
}

/// Number of cycles in the decomposition.
///
/// # Safety
/// `set` must be a live handle from `br_cycle_set_new`.
#[no_mangle]
pub unsafe extern "C" fn br_cycle_set_len(set: *const BrCycleSet) -> u64 {
    if set.is_null() {
        return 0;
    }
    unsafe { &*set }.inner.cycles().len() as u64
}

/// Sum of all cycle periods, i.e. the total number of representations
/// (always `(r!)^2`).
///
/// # Safety
/// `set` must be a live handle from `br_cycle_set_new`.
#[no_mangle]
pub unsafe extern "C" fn br_cycle_set_total_reps(set: *const BrCycleSet) -> u64 {
    if set.is_null() {
        return 0;
    }
    unsafe { &*set }.inner.total_reps()
}

/// Copies the cycle at `index` into the out-parameters: canonical vertex
/// ranks, period, and whether the cycle is type II.
///
/// # Safety
/// `set` must be a live handle; the out pointers must each be null or valid.
#[no_mangle]
pub unsafe extern "C" fn br_cycle_set_cycle(
    set: *const BrCycleSet,
    index: u64,
    vertex0: *mut u32,
    vertex1: *mut u32,
    period: *mut u64,
    is_type2: *mut c_int,
) -> c_int {
    if set.is_null() {
        return BR_ERR_NULL;
    }
    let set = unsafe { &*set };
    let Some(cycle) = set.inner.cycles().get(index as usize) else {
        return BR_ERR_INDEX;
    };
    let (v0, v1) = cycle.canonical_vertex().ranks();
    unsafe {
        if !vertex0.is_null() {
            *vertex0 = v0.0;
        }
        if !vertex1.is_null() {
            *vertex1 = v1.0;
        }
        if !period.is_null() {
            *period = cycle.period() as u64;
        }
        if !is_type2.is_null() {
            *is_type2 = (cycle.kind() == CycleKind::TypeII) as c_int;
        }
    }
    BR_OK
}

/// Renders the cycle set in the reference-table text format
/// (`type2_only != 0` restricts to type II). The string must be released
/// with `br_string_free`.
///
/// # Safety
/// `set` must be a live handle; `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn br_cycle_set_table(
    set: *const BrCycleSet,
    type2_only: c_int,
    out: *mut *mut c_char,
) -> c_int {
    if set.is_null() || out.is_null() {
        return BR_ERR_NULL;
    }
    guarded(move || {
        let text = golden::format_paper_table(&unsafe { &*set }.inner, type2_only != 0);
        unsafe { write_string(out, text) }
    })
}

/// Renders the cycle set as JSON (ranks only; degree-tagged). Release with
/// `br_string_free`.
///
/// # Safety
/// `set` must be a live handle; `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn br_cycle_set_json(
    set: *const BrCycleSet,
    out: *mut *mut c_char,
) -> c_int {
    if set.is_null() || out.is_null() {
        return BR_ERR_NULL;
    }
    guarded(move || {
        let text = to_json_string(&CycleSetJson::from(&unsafe { &*set }.inner));
        unsafe { write_string(out, text) }
    })
}

/// Renders the shift graph in dot format. Release with `br_string_free`.
///
/// # Safety
/// `set` must be a live handle; `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn br_cycle_set_dot(set: *const BrCycleSet, out: *mut *mut c_char) -> c_int {
    if set.is_null() || out.is_null() {
        return BR_ERR_NULL;
    }
    guarded(move || {
        let text = to_dot(&unsafe { &*set }.inner);
        unsafe { write_string(out, text) }
    })
}

/// Writes `|Hom(K_n, S_r)|` into `*count`.
///
/// # Safety
/// `count` must be valid for one u64 write.
#[no_mangle]
pub unsafe extern "C" fn br_hom_kn_count(n: u32, r: u8, count: *mut u64) -> c_int {
    if count.is_null() {
        return BR_ERR_NULL;
    }
    guarded(move || match Degree::new(r).and_then(|d| enumerate_hom_kn(n, d)) {
        Ok(hom) => {
            unsafe { *count = hom.total_reps() };
            BR_OK
        }
        Err(e) => error_code(&e),
    })
}

/// Writes `|Hom(B_n, S_r)|` into `*count`.
///
/// # Safety
/// `count` must be valid for one u64 write.
#[no_mangle]
pub unsafe extern "C" fn br_hom_bn_count(n: u32, r: u8, count: *mut u64) -> c_int {
    if count.is_null() {
        return BR_ERR_NULL;
    }
    guarded(move || match Degree::new(r).and_then(|d| enumerate_hom_bn(n, d)) {
        Ok(hom) => {
            unsafe { *count = hom.total_reps() };
            BR_OK
        }
        Err(e) => error_code(&e),
    })
}

/// Renders `Hom(K_n, S_r)` as JSON. Release with `br_string_free`.
///
/// # Safety
/// `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn br_hom_kn_json(n: u32, r: u8, out: *mut *mut c_char) -> c_int {
    if out.is_null() {
        return BR_ERR_NULL;
    }
    guarded(move || match Degree::new(r).and_then(|d| enumerate_hom_kn(n, d)) {
        Ok(hom) => unsafe { write_string(out, to_json_string(&KnHomJson::from(&hom))) },
        Err(e) => error_code(&e),
    })
}

/// Renders `Hom(B_n, S_r)` as JSON. Release with `br_string_free`.
///
/// # Safety
/// `out` must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn br_hom_bn_json(n: u32, r: u8, out: *mut *mut c_char) -> c_int {
    if out.is_null() {
        return BR_ERR_NULL;
    }
    guarded(move || match Degree::new(r).and_then(|d| enumerate_hom_bn(n, d)) {
        Ok(hom) => unsafe { write_string(out, to_json_string(&BnHomJson::from(&hom))) },
        Err(e) => error_code(&e),
    })
}

/// Census counts for one `(n, r)`, written into the out-parameters.
/// `conjecture` receives -1 (out of domain), 0 (fails) or 1 (holds).
#[repr(C)]
pub struct BrCensus {
    pub n: u32,
    pub degree: u8,
    pub total_reps: u64,
    pub type1_cycles: u64,
    pub type2_cycles: u64,
    pub transitive_reps: u64,
    pub subgroup_count: u64,
    pub conjecture: i8,
}

/// Fills `*out` with the census of `(n, r)`.
///
/// # Safety
/// `out` must be valid for one `BrCensus` write.
#[no_mangle]
pub unsafe extern "C" fn br_census(n: u32, r: u8, out: *mut BrCensus) -> c_int {
    if out.is_null() {
        return BR_ERR_NULL;
    }
    guarded(move || match Degree::new(r).and_then(|d| census::census(n, d)) {
        Ok(report) => {
            unsafe {
                *out = BrCensus {
                    n: report.n,
                    degree: report.degree,
                    total_reps: report.total_reps,
                    type1_cycles: report.type1_cycles,
                    type2_cycles: report.type2_cycles,
                    transitive_reps: report.transitive_reps,
                    subgroup_count: report.subgroup_count,
                    conjecture: match report.conjecture_holds {
                        None => -1,
                        Some(false) => 0,
                        Some(true) => 1,
                    },
                };
            }
            BR_OK
        }
        Err(e) => error_code(&e),
    })
}

/// Probes the triviality/transitivity conjecture at `(n, r)`; writes 1 or 0
/// into `*holds`. Returns `BR_ERR_DOMAIN` outside `n >= 5`, `r <= n`.
///
/// # Safety
/// `holds` must be valid for one int write.
#[no_mangle]
pub unsafe extern "C" fn br_conjecture_probe(n: u32, r: u8, holds: *mut c_int) -> c_int {
    if holds.is_null() {
        return BR_ERR_NULL;
    }
    guarded(move || match Degree::new(r).and_then(|d| census::conjecture_probe(n, d)) {
        Ok(h) => {
            unsafe { *holds = h as c_int };
            BR_OK
        }
        Err(e) => error_code(&e),
    })
}

/// Re-derives every embedded reference table and count. Writes 1 into
/// `*all_passed` when everything matches; the full textual report goes to
/// `*report` (release with `br_string_free`; pass null to skip it).
///
/// # Safety
/// `all_passed` must be valid for one int write; `report` null or valid.
#[no_mangle]
pub unsafe extern "C" fn br_verify_reference(
    all_passed: *mut c_int,
    report: *mut *mut c_char,
) -> c_int {
    if all_passed.is_null() {
        return BR_ERR_NULL;
    }
    guarded(move || {
        let rep = golden::verify_golden();
        unsafe {
            *all_passed = rep.all_passed() as c_int;
            if !report.is_null() {
                return write_string(report, rep.render());
            }
        }
        BR_OK
    })
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string pointer returned by this library that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn br_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// The crate version as a static string; do not free.
#[no_mangle]
pub extern "C" fn br_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
