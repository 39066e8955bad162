//! C ABI over the graph kernel and verifiers: opaque `MtfGraph` handles,
//! `MtfStatus` codes, and a thread-local last-error message. The header is
//! generated into `include/mtf.h` at build time.
//!
//! Ownership rules: every `*mut MtfGraph` returned through an out-parameter
//! is owned by the caller and released with `mtf_graph_free`; strings
//! returned through out-parameters are released with `mtf_string_free`.

use mtf_core::error::Error;
use mtf_core::graph::{max_cut, Graph};
use mtf_core::{enumeration, graph6, mis, structure};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Opaque graph handle (a simple undirected graph on at most 64 vertices).
pub struct MtfGraph(Graph);

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MtfStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Arguments violate a precondition (range, divisibility, regime).
    InvalidArgument = 2,
    /// Malformed graph6 text or other unparsable input.
    Parse = 3,
    /// The instance exceeds a capacity or exact-search regime.
    Capacity = 4,
    /// A hypothesis of the checked statement is violated by the input.
    Hypothesis = 5,
    /// An internal invariant failed; the library considers this a bug.
    Internal = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("error").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> MtfStatus {
    match err {
        Error::Graph6(_) => MtfStatus::Parse,
        Error::Capacity { .. } | Error::Regime { .. } => MtfStatus::Capacity,
        Error::NotTriangleFree(_) | Error::NotEdgeDisjoint(_) | Error::MixedTriangle { .. } => {
            MtfStatus::Hypothesis
        }
        Error::Internal(_) => MtfStatus::Internal,
        _ => MtfStatus::InvalidArgument,
    }
}

fn fail(err: Error) -> MtfStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

fn guard(body: impl FnOnce() -> MtfStatus) -> MtfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("panic across the C boundary".into());
            MtfStatus::Internal
        }
    }
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mtf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null(), |c| c.as_ptr())
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs laid out as
/// `[u0, v0, u1, v1, ...]`. Duplicate edges collapse.
///
/// # Safety
/// `endpoints` must point to `2 * edge_count` readable `uint32_t`s (or be
/// null when `edge_count` is 0); `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mtf_graph_from_edges(
    n: u32,
    endpoints: *const u32,
    edge_count: usize,
    out: *mut *mut MtfGraph,
) -> MtfStatus {
    if out.is_null() || (endpoints.is_null() && edge_count > 0) {
        return MtfStatus::NullPointer;
    }
    let pairs = if edge_count == 0 {
        &[][..]
    } else {
        std::slice::from_raw_parts(endpoints, 2 * edge_count)
    };
    guard(|| {
        let edges: Vec<(usize, usize)> = pairs
            .chunks_exact(2)
            .map(|c| (c[0] as usize, c[1] as usize))
            .collect();
        match Graph::from_edges(n as usize, &edges) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(MtfGraph(g)));
                MtfStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Decodes a graph6 string (`1 <= n <= 64`).
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mtf_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut MtfGraph,
) -> MtfStatus {
    if text.is_null() || out.is_null() {
        return MtfStatus::NullPointer;
    }
    let s = match CStr::from_ptr(text).to_str() {
        Ok(s) => s,
        Err(_) => {
            set_error("graph6 text is not UTF-8".into());
            return MtfStatus::Parse;
        }
    };
    guard(|| match graph6::decode(s) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(MtfGraph(g)));
            MtfStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Encodes the graph in graph6 form; release the string with
/// `mtf_string_free`.
///
/// # Safety
/// `g` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mtf_graph_to_graph6(
    g: *const MtfGraph,
    out: *mut *mut c_char,
) -> MtfStatus {
    if g.is_null() || out.is_null() {
        return MtfStatus::NullPointer;
    }
    guard(|| match graph6::encode(&(*g).0) {
        Ok(s) => {
            *out = CString::new(s).expect("graph6 has no NUL").into_raw();
            MtfStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must have been returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mtf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a graph handle.
///
/// # Safety
/// `g` must have been returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mtf_graph_free(g: *mut MtfGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn mtf_graph_vertex_count(g: *const MtfGraph) -> u32 {
    if g.is_null() {
        return 0;
    }
    (*g).0.n() as u32
}

/// Number of edges; 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn mtf_graph_edge_count(g: *const MtfGraph) -> u64 {
    if g.is_null() {
        return 0;
    }
    (*g).0.edge_count() as u64
}

/// Number of triangles.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn mtf_graph_triangle_count(g: *const MtfGraph) -> u64 {
    (*g).0.triangle_count()
}

/// True iff triangle-free and every non-edge closes a triangle.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn mtf_graph_is_maximal_triangle_free(g: *const MtfGraph) -> bool {
    (*g).0.is_maximal_triangle_free()
}

/// Exact number of maximal independent sets (fits u64 for n <= 64).
///
/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mtf_count_mis(g: *const MtfGraph, out: *mut u64) -> MtfStatus {
    if g.is_null() || out.is_null() {
        return MtfStatus::NullPointer;
    }
    guard(|| {
        *out = mis::count_mis(&(*g).0).to_u64();
        MtfStatus::Ok
    })
}

/// Size of a maximum family of vertex-disjoint P3's (n <= 30).
///
/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mtf_max_p3_packing_size(
    g: *const MtfGraph,
    out: *mut u32,
) -> MtfStatus {
    if g.is_null() || out.is_null() {
        return MtfStatus::NullPointer;
    }
    guard(|| match mis::max_p3_packing(&(*g).0) {
        Ok(p) => {
            *out = p.k() as u32;
            MtfStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Checks `MIS(G) <= 2^(n/2 - k/25)` on a triangle-free graph: writes the
/// logarithmic slack and whether the exact integer form holds.
///
/// # Safety
/// `g` must be a live handle; `out_slack` and `out_exact_holds` must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn mtf_mis_bound_check(
    g: *const MtfGraph,
    out_slack: *mut f64,
    out_exact_holds: *mut bool,
) -> MtfStatus {
    if g.is_null() || out_slack.is_null() || out_exact_holds.is_null() {
        return MtfStatus::NullPointer;
    }
    guard(|| match mis::verify_mis_bound(&(*g).0) {
        Ok(check) => {
            *out_slack = check.slack;
            *out_exact_holds = check.exact_holds;
            MtfStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Exhaustive max-cut (n <= 28): writes the cut size and the deterministic
/// X-side mask (vertex 0 on the X side, smallest mask among maximizers).
///
/// # Safety
/// `g` must be a live handle; `out_size` and `out_x_mask` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mtf_max_cut(
    g: *const MtfGraph,
    out_size: *mut u32,
    out_x_mask: *mut u64,
) -> MtfStatus {
    if g.is_null() || out_size.is_null() || out_x_mask.is_null() {
        return MtfStatus::NullPointer;
    }
    guard(|| match max_cut(&(*g).0) {
        Ok((size, cut)) => {
            *out_size = size as u32;
            *out_x_mask = cut.x_mask;
            MtfStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Minimum edge deletions to a bipartite graph (n <= 28).
///
/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mtf_closeness_to_bipartite(
    g: *const MtfGraph,
    out: *mut u32,
) -> MtfStatus {
    if g.is_null() || out.is_null() {
        return MtfStatus::NullPointer;
    }
    guard(|| match structure::closeness_to_bipartite(&(*g).0) {
        Ok(c) => {
            *out = c as u32;
            MtfStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Searches for a partition with `G[X]` an induced perfect matching and `Y`
/// independent (n <= 24). Writes whether one exists and, if so, the side
/// masks of the deterministic witness.
///
/// # Safety
/// `g` must be a live handle; all out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn mtf_structure_witness(
    g: *const MtfGraph,
    out_found: *mut bool,
    out_x_mask: *mut u64,
    out_y_mask: *mut u64,
) -> MtfStatus {
    if g.is_null() || out_found.is_null() || out_x_mask.is_null() || out_y_mask.is_null() {
        return MtfStatus::NullPointer;
    }
    guard(|| match structure::find_structure_partition(&(*g).0) {
        Ok(Some(w)) => {
            *out_found = true;
            *out_x_mask = w.partition.x_mask;
            *out_y_mask = w.partition.y_mask;
            MtfStatus::Ok
        }
        Ok(None) => {
            *out_found = false;
            *out_x_mask = 0;
            *out_y_mask = 0;
            MtfStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Extends a triangle-free graph to a maximal one by lexicographic greedy
/// addition; the result is a new handle.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mtf_maximal_completion(
    g: *const MtfGraph,
    out: *mut *mut MtfGraph,
) -> MtfStatus {
    if g.is_null() || out.is_null() {
        return MtfStatus::NullPointer;
    }
    guard(|| match enumeration::maximal_completion(&(*g).0, None) {
        Ok(c) => {
            *out = Box::into_raw(Box::new(MtfGraph(c)));
            MtfStatus::Ok
        }
        Err(e) => fail(e),
    })
}
