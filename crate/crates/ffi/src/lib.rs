//! C ABI over `cyclic-faces`.
//!
//! Sequences and triangles cross the boundary as opaque handles that the
//! caller releases with the matching `*_free` function. Counts are arbitrary
//! precision, so entries are handed out as decimal strings; a `u64` accessor
//! exists for values that fit. Every fallible call returns a [`CfStatus`] and
//! leaves a message retrievable with [`cf_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cyclic_faces::sweep::{self, Format, SweepConfig};
use cyclic_faces::{
    analyze_shape, audit_dip_propagation, build_triangle, f_vector_direct, f_vector_from_triangle,
    f_vector_streaming, find_dips, h_vector, lemma_check, oracle_f_vector, pascal_extend, Count,
    Error, FanTriangle, PolytopeParams, PositiveSequence,
};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CfStatus {
    Ok = 0,
    NullPointer = 1,
    /// `d < 2` or `v < d + 1`.
    InvalidParams = 2,
    IndexOutOfRange = 3,
    /// A precondition on a sequence or seed does not hold.
    Domain = 4,
    /// The oracle enumeration cap was exceeded.
    ResourceGuard = 5,
    /// The value does not fit the requested fixed-width type.
    Overflow = 6,
    Io = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CfRoute {
    Direct = 0,
    Triangle = 1,
    Streaming = 2,
    Oracle = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CfFormat {
    Json = 0,
    Csv = 1,
    Text = 2,
}

/// Shape summary of a sequence. Peak fields are meaningful only when
/// `unimodal` is true. Indices are logical: the first entry is at -1.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CfShapeReport {
    pub log_concave: bool,
    pub unimodal: bool,
    pub peak_start: i64,
    pub peak_end: i64,
    pub dip_count: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CfAuditReport {
    pub passed: bool,
    pub prefix_rows_ok: bool,
    pub implications_ok: bool,
    pub seeds_ok: bool,
    pub final_row_ok: bool,
}

/// Opaque positive sequence, first logical index -1.
pub struct CfSequence {
    inner: PositiveSequence,
}

/// Opaque generalized Pascal triangle.
pub struct CfTriangle {
    inner: FanTriangle,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

struct Failure(CfStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidParams { .. } => CfStatus::InvalidParams,
            Error::IndexOutOfRange { .. } => CfStatus::IndexOutOfRange,
            Error::Domain(_) => CfStatus::Domain,
            Error::ResourceGuard { .. } => CfStatus::ResourceGuard,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(CfStatus::NullPointer, format!("{what} is null"))
}

fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> CfStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|panic| {
        let msg = panic
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| panic.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown panic".into());
        Err(Failure(CfStatus::Panic, msg))
    });
    match outcome {
        Ok(()) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CfStatus::Ok
        }
        Err(Failure(status, msg)) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
            status
        }
    }
}

fn into_c_string(s: String) -> *mut c_char {
    // Rendered numbers and reports never contain interior NULs.
    CString::new(s).expect("no interior NUL").into_raw()
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn seq_ref<'a>(seq: *const CfSequence) -> Result<&'a PositiveSequence, Failure> {
    seq.as_ref()
        .map(|s| &s.inner)
        .ok_or_else(|| null("sequence handle"))
}

fn boxed(inner: PositiveSequence) -> *mut CfSequence {
    Box::into_raw(Box::new(CfSequence { inner }))
}

/// Message describing the most recent failure on this thread, or null.
/// Free the result with [`cf_string_free`].
#[no_mangle]
pub extern "C" fn cf_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(msg) => into_c_string(msg.clone()),
        None => ptr::null_mut(),
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, freed only once.
#[no_mangle]
pub unsafe extern "C" fn cf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// h-vector `h_0 .. h_d` of `C(v,d)`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cf_h_vector(v: u32, d: u32, out: *mut *mut CfSequence) -> CfStatus {
    guard(|| {
        let params = PolytopeParams::new(v, d)?;
        let h = h_vector(params);
        let seq = PositiveSequence::new(h.entries().to_vec())?;
        write_out(out, boxed(seq))
    })
}

/// Extended f-sequence `f_{-1} .. f_{d-1}, 1` of `C(v,d)` by the chosen
/// route. `oracle_cap` only matters for [`CfRoute::Oracle`].
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cf_f_vector(
    v: u32,
    d: u32,
    route: CfRoute,
    oracle_cap: u32,
    out: *mut *mut CfSequence,
) -> CfStatus {
    guard(|| {
        let params = PolytopeParams::new(v, d)?;
        let f = match route {
            CfRoute::Direct => f_vector_direct(params),
            CfRoute::Triangle => f_vector_from_triangle(&build_triangle(params)),
            CfRoute::Streaming => f_vector_streaming(params),
            CfRoute::Oracle => oracle_f_vector(params, oracle_cap)?,
        };
        write_out(out, boxed(PositiveSequence::from(&f)))
    })
}

/// Wraps caller-supplied positive values for shape analysis.
///
/// # Safety
/// `values` must point to `len` readable `u64`s; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cf_sequence_from_u64(
    values: *const u64,
    len: usize,
    out: *mut *mut CfSequence,
) -> CfStatus {
    guard(|| {
        if values.is_null() {
            return Err(null("values"));
        }
        let slice = std::slice::from_raw_parts(values, len);
        let seq = PositiveSequence::from_u64s(slice)?;
        write_out(out, boxed(seq))
    })
}

/// # Safety
/// `seq` must be null or a live handle from this library, freed only once.
#[no_mangle]
pub unsafe extern "C" fn cf_sequence_free(seq: *mut CfSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Number of entries; 0 for a null handle.
///
/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cf_sequence_len(seq: *const CfSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.inner.len())
}

fn entry(seq: &PositiveSequence, index: i64) -> Result<&Count, Failure> {
    seq.get(index).ok_or_else(|| {
        Failure::from(Error::IndexOutOfRange {
            index,
            min: -1,
            max: seq.last_index(),
        })
    })
}

/// Entry at logical `index` as a decimal string (free with
/// [`cf_string_free`]).
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cf_sequence_entry_string(
    seq: *const CfSequence,
    index: i64,
    out: *mut *mut c_char,
) -> CfStatus {
    guard(|| {
        let s = seq_ref(seq)?;
        let value = entry(s, index)?.to_string();
        write_out(out, into_c_string(value))
    })
}

/// Entry at logical `index` as `u64`, or [`CfStatus::Overflow`].
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cf_sequence_entry_u64(
    seq: *const CfSequence,
    index: i64,
    out: *mut u64,
) -> CfStatus {
    guard(|| {
        let s = seq_ref(seq)?;
        let value = entry(s, index)?;
        let value = u64::try_from(value)
            .map_err(|_| Failure(CfStatus::Overflow, format!("{value} does not fit in u64")))?;
        write_out(out, value)
    })
}

/// All entries, space separated.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cf_sequence_to_string(
    seq: *const CfSequence,
    out: *mut *mut c_char,
) -> CfStatus {
    guard(|| {
        let s = seq_ref(seq)?;
        let text: Vec<String> = s.entries().iter().map(|x| x.to_string()).collect();
        write_out(out, into_c_string(text.join(" ")))
    })
}

/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cf_sequence_analyze(
    seq: *const CfSequence,
    out: *mut CfShapeReport,
) -> CfStatus {
    guard(|| {
        let r = analyze_shape(seq_ref(seq)?);
        write_out(
            out,
            CfShapeReport {
                log_concave: r.log_concave,
                unimodal: r.unimodal,
                peak_start: r.peak_start.unwrap_or(0),
                peak_end: r.peak_end.unwrap_or(0),
                dip_count: r.dips.len(),
            },
        )
    })
}

/// Writes up to `capacity` dip indices into `buf` and the total count into
/// `count`. Passing `capacity = 0` with a null `buf` only queries the count.
///
/// # Safety
/// `buf` must hold `capacity` writable `i64`s unless `capacity` is 0.
#[no_mangle]
pub unsafe extern "C" fn cf_sequence_dips(
    seq: *const CfSequence,
    buf: *mut i64,
    capacity: usize,
    count: *mut usize,
) -> CfStatus {
    guard(|| {
        let dips = find_dips(seq_ref(seq)?);
        if capacity > 0 {
            if buf.is_null() {
                return Err(null("dip buffer"));
            }
            let n = capacity.min(dips.len());
            ptr::copy_nonoverlapping(dips.as_ptr(), buf, n);
        }
        write_out(count, dips.len())
    })
}

/// One Pascal step with diagonal `seed`; the input must start with 1.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cf_sequence_pascal_extend(
    seq: *const CfSequence,
    seed: u64,
    out: *mut *mut CfSequence,
) -> CfStatus {
    guard(|| {
        let next = pascal_extend(seq_ref(seq)?, &Count::from(seed))?;
        write_out(out, boxed(next))
    })
}

/// Whether the Pascal extension by `seed` stays log-concave. Returns
/// [`CfStatus::Domain`] when the input is not log-concave, does not start
/// with 1, or `seed` exceeds its last entry.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cf_sequence_lemma_check(
    seq: *const CfSequence,
    seed: u64,
    out: *mut bool,
) -> CfStatus {
    guard(|| {
        let ok = lemma_check(seq_ref(seq)?, &Count::from(seed))?;
        write_out(out, ok)
    })
}

/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cf_triangle_new(v: u32, d: u32, out: *mut *mut CfTriangle) -> CfStatus {
    guard(|| {
        let params = PolytopeParams::new(v, d)?;
        let tri = Box::new(CfTriangle {
            inner: build_triangle(params),
        });
        write_out(out, Box::into_raw(tri))
    })
}

/// # Safety
/// `tri` must be null or a live handle, freed only once.
#[no_mangle]
pub unsafe extern "C" fn cf_triangle_free(tri: *mut CfTriangle) {
    if !tri.is_null() {
        drop(Box::from_raw(tri));
    }
}

/// Number of rows (`d + 1`); 0 for a null handle.
///
/// # Safety
/// `tri` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cf_triangle_rows(tri: *const CfTriangle) -> usize {
    tri.as_ref().map_or(0, |t| t.inner.rows().len())
}

/// Copy of row `k` as a new sequence handle.
///
/// # Safety
/// `tri` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cf_triangle_row(
    tri: *const CfTriangle,
    k: u32,
    out: *mut *mut CfSequence,
) -> CfStatus {
    guard(|| {
        let t = tri.as_ref().ok_or_else(|| null("triangle handle"))?;
        let row = t.inner.row(k).ok_or_else(|| {
            Failure::from(Error::IndexOutOfRange {
                index: k as i64,
                min: 0,
                max: t.inner.params().d() as i64,
            })
        })?;
        write_out(out, boxed(PositiveSequence::new(row.to_vec())?))
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cf_audit(v: u32, d: u32, out: *mut CfAuditReport) -> CfStatus {
    guard(|| {
        let a = audit_dip_propagation(PolytopeParams::new(v, d)?);
        write_out(
            out,
            CfAuditReport {
                passed: a.passed,
                prefix_rows_ok: a.prefix_rows_ok,
                implications_ok: a.implications_ok,
                seeds_ok: a.seeds_ok,
                final_row_ok: a.final_row_ok,
            },
        )
    })
}

/// Runs the default sweep checks (log-concavity, Euler relation, sampled
/// route equivalence) and renders the per-pair records. `v_min = 0` starts
/// every dimension at `d + 1`; `jobs = 0` uses all cores.
///
/// # Safety
/// `out` and `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cf_sweep(
    d_min: u32,
    d_max: u32,
    v_min: u32,
    v_max: u32,
    jobs: usize,
    format: CfFormat,
    out: *mut *mut c_char,
    passed: *mut bool,
) -> CfStatus {
    guard(|| {
        if out.is_null() || passed.is_null() {
            return Err(null("output pointer"));
        }
        let cfg = SweepConfig {
            d_min,
            d_max,
            v_min: (v_min > 0).then_some(v_min),
            v_max,
            jobs,
            ..SweepConfig::default()
        };
        let io_err = |e: std::io::Error| Failure(CfStatus::Io, e.to_string());
        let report = sweep::run_sweep(&cfg).map_err(io_err)?;
        let format = match format {
            CfFormat::Json => Format::Json,
            CfFormat::Csv => Format::Csv,
            CfFormat::Text => Format::Text,
        };
        let mut buf = Vec::new();
        sweep::render(&report, format, &mut buf).map_err(io_err)?;
        let text = String::from_utf8(buf).expect("rendered output is UTF-8");
        write_out(passed, report.passed())?;
        write_out(out, into_c_string(text))
    })
}
