//! C ABI over `vizbound`.
//!
//! Graphs are opaque `VzGraph` handles owned by the caller and released with
//! `vz_graph_free`. Every fallible call returns a `VzStatus`; on failure the
//! message is available from `vz_last_error` until the next call on the same
//! thread. Strings returned by the library are released with
//! `vz_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use vizbound::family::parse_graph_arg;
use vizbound::harness::{check_pair, remark_search, HarnessConfig, PairReport};
use vizbound::product::cartesian_product_with_limit;
use vizbound::solver::gamma_bb;
use vizbound::trace::{build_trace, verify_trace, TraceHints, TraceReport};
use vizbound::{encode_graph6, parse_graph6, Error, Graph, VertexSet};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed graph, edge, vertex or parameter.
    InvalidInput = 3,
    /// The supplied vertex set does not dominate.
    NotDominating = 4,
    /// Node budget, size or combination limit reached.
    Limit = 5,
    /// Output buffer too small; the required length was written.
    BufferTooSmall = 6,
    /// Projection onto the first factor is not a minimal dominating set.
    ProjectionNotMinimal = 7,
    Panic = 8,
}

/// Opaque graph handle.
pub struct VzGraph {
    inner: Graph,
}

/// Summary of one pair check.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct VzPairReport {
    pub gamma_g: usize,
    pub gamma_h: usize,
    pub gamma_product: usize,
    pub bound_conjecture: u64,
    pub bound_new: u64,
    pub bound_st_half: u64,
    pub bound_st_body: u64,
    pub bound_cs: u64,
    pub slack_new: i64,
    pub trace_ok: bool,
    pub violation: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_for(e: &Error) -> VzStatus {
    match e {
        Error::NotDominating => VzStatus::NotDominating,
        Error::ProjectionNotMinimal => VzStatus::ProjectionNotMinimal,
        e if e.is_limit() => VzStatus::Limit,
        _ => VzStatus::InvalidInput,
    }
}

fn fail(status: VzStatus, msg: &str) -> VzStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning errors and panics into status codes.
fn guard<F>(f: F) -> VzStatus
where
    F: FnOnce() -> Result<(), VzStatus>,
{
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => VzStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(VzStatus::Panic, "internal panic"),
    }
}

fn lib<T>(r: vizbound::Result<T>) -> Result<T, VzStatus> {
    r.map_err(|e| fail(status_for(&e), &e.to_string()))
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, VzStatus> {
    if p.is_null() {
        return Err(fail(VzStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(VzStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn graph_arg<'a>(p: *const VzGraph) -> Result<&'a Graph, VzStatus> {
    p.as_ref()
        .map(|g| &g.inner)
        .ok_or_else(|| fail(VzStatus::NullPointer, "null graph handle"))
}

unsafe fn out_arg<'a, T>(p: *mut T) -> Result<&'a mut T, VzStatus> {
    p.as_mut()
        .ok_or_else(|| fail(VzStatus::NullPointer, "null output pointer"))
}

fn into_handle(g: Graph) -> *mut VzGraph {
    Box::into_raw(Box::new(VzGraph { inner: g }))
}

fn into_c_string(s: String) -> Result<*mut c_char, VzStatus> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| fail(VzStatus::InvalidInput, "output contains a nul byte"))
}

fn config(node_budget: u64) -> HarnessConfig {
    let mut cfg = HarnessConfig::default();
    if node_budget > 0 {
        cfg.limits.node_budget = node_budget;
    }
    cfg
}

/// Message for the last failed call on this thread. Empty after success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn vz_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a graph6 string.
///
/// # Safety
/// `g6` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vz_graph_from_graph6(
    g6: *const c_char,
    out: *mut *mut VzGraph,
) -> VzStatus {
    guard(|| {
        let s = str_arg(g6)?;
        let out = out_arg(out)?;
        *out = into_handle(lib(parse_graph6(s))?);
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` as `u0, v0, u1, v1, ...`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` values (or be null when
/// `edge_count` is zero) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn vz_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut VzGraph,
) -> VzStatus {
    guard(|| {
        let out = out_arg(out)?;
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(fail(VzStatus::NullPointer, "null edge array"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        *out = into_handle(lib(Graph::new(n, &pairs))?);
        Ok(())
    })
}

/// Builds a graph from a spec such as `path:5`, `grid:3x4` or a graph6
/// string.
///
/// # Safety
/// `spec` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vz_graph_from_spec(
    spec: *const c_char,
    out: *mut *mut VzGraph,
) -> VzStatus {
    guard(|| {
        let s = str_arg(spec)?;
        let out = out_arg(out)?;
        *out = into_handle(lib(parse_graph_arg(s))?);
        Ok(())
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn vz_graph_free(g: *mut VzGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vz_graph_vertex_count(g: *const VzGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vz_graph_edge_count(g: *const VzGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// Encodes the graph as graph6. Free the result with `vz_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vz_graph_to_graph6(g: *const VzGraph, out: *mut *mut c_char) -> VzStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let out = out_arg(out)?;
        *out = into_c_string(lib(encode_graph6(g))?)?;
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn vz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Cartesian product `g □ h`; vertex `(u, v)` gets index `u * |V(h)| + v`.
/// `max_vertices` of 0 means the default limit.
///
/// # Safety
/// `g` and `h` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vz_cartesian_product(
    g: *const VzGraph,
    h: *const VzGraph,
    max_vertices: usize,
    out: *mut *mut VzGraph,
) -> VzStatus {
    guard(|| {
        let (g, h) = (graph_arg(g)?, graph_arg(h)?);
        let out = out_arg(out)?;
        let limit = if max_vertices == 0 {
            vizbound::product::DEFAULT_MAX_VERTICES
        } else {
            max_vertices
        };
        let pg = lib(cartesian_product_with_limit(g, h, limit))?;
        *out = into_handle(pg.into_graph());
        Ok(())
    })
}

/// Domination number of `g`, written to `gamma`. When `witness` is not
/// null the minimum set is written there in increasing order; `capacity`
/// is its length and must be at least the domination number, otherwise
/// `BufferTooSmall` is returned with `gamma` set. `node_budget` of 0 means
/// the default.
///
/// # Safety
/// `g` must be a live handle, `gamma` valid, and `witness` null or valid
/// for `capacity` writes.
#[no_mangle]
pub unsafe extern "C" fn vz_domination_number(
    g: *const VzGraph,
    node_budget: u64,
    gamma: *mut usize,
    witness: *mut usize,
    capacity: usize,
) -> VzStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let gamma = out_arg(gamma)?;
        let r = lib(gamma_bb(g, &config(node_budget).limits))?;
        *gamma = r.gamma;
        if !witness.is_null() {
            if capacity < r.gamma {
                return Err(fail(VzStatus::BufferTooSmall, "witness buffer too small"));
            }
            let buf = std::slice::from_raw_parts_mut(witness, capacity);
            for (slot, v) in buf.iter_mut().zip(r.witness.iter()) {
                *slot = v;
            }
        }
        Ok(())
    })
}

fn summary(r: &PairReport) -> VzPairReport {
    VzPairReport {
        gamma_g: r.gamma_g,
        gamma_h: r.gamma_h,
        gamma_product: r.gamma_product,
        bound_conjecture: r.bound_conjecture,
        bound_new: r.bound_new,
        bound_st_half: r.bound_st_half,
        bound_st_body: r.bound_st_body,
        bound_cs: r.bound_cs,
        slack_new: r.slack_new,
        trace_ok: r.trace_ok,
        violation: r.is_violation(),
    }
}

/// Solves both factors and the product, evaluates all bounds and verifies
/// the counting trace.
///
/// # Safety
/// `g` and `h` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vz_check_pair(
    g: *const VzGraph,
    h: *const VzGraph,
    node_budget: u64,
    out: *mut VzPairReport,
) -> VzStatus {
    guard(|| {
        let (g, h) = (graph_arg(g)?, graph_arg(h)?);
        let out = out_arg(out)?;
        *out = summary(&lib(check_pair(g, h, &config(node_budget)))?);
        Ok(())
    })
}

/// Full pair report as JSON, trace included when `include_trace` is set.
/// Free the result with `vz_string_free`.
///
/// # Safety
/// `g` and `h` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vz_pair_report_json(
    g: *const VzGraph,
    h: *const VzGraph,
    node_budget: u64,
    include_trace: bool,
    out: *mut *mut c_char,
) -> VzStatus {
    guard(|| {
        let (g, h) = (graph_arg(g)?, graph_arg(h)?);
        let out = out_arg(out)?;
        let mut cfg = config(node_budget);
        cfg.include_trace = include_trace;
        let r = lib(check_pair(g, h, &cfg))?;
        *out = into_c_string(serde_json::to_string(&r).expect("reports serialize"))?;
        Ok(())
    })
}

/// Builds and verifies the trace for the dominating set `d` of `g □ h`,
/// given as `d_len` product vertex indices. Writes the report as JSON and
/// sets `passed`.
///
/// # Safety
/// `g` and `h` must be live handles, `d` valid for `d_len` reads, and
/// `passed` and `out` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn vz_trace_json(
    g: *const VzGraph,
    h: *const VzGraph,
    d: *const usize,
    d_len: usize,
    node_budget: u64,
    passed: *mut bool,
    out: *mut *mut c_char,
) -> VzStatus {
    guard(|| {
        let (g, h) = (graph_arg(g)?, graph_arg(h)?);
        let passed = out_arg(passed)?;
        let out = out_arg(out)?;
        let ids: &[usize] = if d_len == 0 {
            &[]
        } else if d.is_null() {
            return Err(fail(VzStatus::NullPointer, "null vertex array"));
        } else {
            std::slice::from_raw_parts(d, d_len)
        };
        let universe = g.vertex_count().saturating_mul(h.vertex_count());
        let set = lib(VertexSet::from_vertices(universe, ids.iter().copied()))?;
        let limits = config(node_budget).limits;
        let t = lib(build_trace(g, h, &set, TraceHints::default(), &limits))?;
        let verdict = verify_trace(&t);
        let report = TraceReport::new(&t, &verdict);
        *passed = report.passed;
        *out = into_c_string(serde_json::to_string(&report).expect("reports serialize"))?;
        Ok(())
    })
}

/// Scans up to `cap` minimum dominating sets of `g □ h` for one whose
/// projection onto `g` is minimal. Writes the search report as JSON.
///
/// # Safety
/// `g` and `h` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vz_remark_search(
    g: *const VzGraph,
    h: *const VzGraph,
    cap: usize,
    out: *mut *mut c_char,
) -> VzStatus {
    guard(|| {
        let (g, h) = (graph_arg(g)?, graph_arg(h)?);
        let out = out_arg(out)?;
        let r = lib(remark_search(g, h, cap, &HarnessConfig::default()))?;
        *out = into_c_string(serde_json::to_string(&r).expect("reports serialize"))?;
        Ok(())
    })
}
