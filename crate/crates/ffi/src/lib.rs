//! C ABI for the rainbow Turán toolkit.
//!
//! Graphs and patterns are opaque handles created and destroyed through
//! this interface; every function returns an [`RtStatus`] code and writes
//! results through out-pointers. Structured results (census reports,
//! extremal values, lemma paths) come back as JSON strings, which the
//! caller releases with [`rt_string_free`]. A human-readable message for
//! the most recent failure on the current thread is available from
//! [`rt_last_error_message`].
//!
//! Safety contract, shared by every function here: pointer arguments must
//! be null or valid for the pointee type (nulls are rejected with
//! `RT_STATUS_NULL_ARGUMENT` where a value is required), strings must be
//! NUL-terminated, array parameters must match their length arguments, and
//! handles must not be used after being freed.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::time::Duration;

use rainbow_turan::census::{self, CensusError, CensusOptions};
use rainbow_turan::cge;
use rainbow_turan::constructions;
use rainbow_turan::graph::ColoredGraph;
use rainbow_turan::lemma::{LemmaError, LemmaInstance};
use rainbow_turan::oracle::{self, ExtremalStatus, OracleError, SearchBudget};
use rainbow_turan::pattern::{Pattern, PatternError};

/// Status codes returned by every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RtStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    Utf8 = 2,
    /// A graph or pattern failed to parse.
    Parse = 3,
    /// Arguments were structurally invalid (bad vertex, bad parameter, ...).
    InvalidArgument = 4,
    /// The request exceeds a hard limit of the implementation.
    Unsupported = 5,
    /// A node or time budget cut the computation.
    Budget = 6,
    /// An internal invariant failed; report this as a bug.
    Internal = 7,
}

/// Opaque colored-graph handle.
pub struct RtGraph {
    inner: ColoredGraph,
}

/// Opaque pattern handle.
pub struct RtPattern {
    inner: Pattern,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: RtStatus, message: impl Into<String>) -> RtStatus {
    let message = message.into();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(message).ok();
    });
    status
}

fn pattern_status(e: &PatternError) -> RtStatus {
    match e {
        PatternError::Parse { .. } => RtStatus::Parse,
        PatternError::TooLarge { .. } => RtStatus::Unsupported,
        _ => RtStatus::InvalidArgument,
    }
}

fn census_status(e: &CensusError) -> RtStatus {
    match e {
        CensusError::BudgetExhausted { .. } => RtStatus::Budget,
        CensusError::Internal(_) | CensusError::VisitorAborted { .. } => RtStatus::Internal,
        CensusError::Pattern(inner) => pattern_status(inner),
        _ => RtStatus::InvalidArgument,
    }
}

fn oracle_status(e: &OracleError) -> RtStatus {
    match e {
        OracleError::HostTooLarge { .. } => RtStatus::Unsupported,
        OracleError::Internal(_) => RtStatus::Internal,
        OracleError::Census(inner) => census_status(inner),
        OracleError::Pattern(inner) => pattern_status(inner),
        _ => RtStatus::InvalidArgument,
    }
}

unsafe fn utf8_arg<'a>(p: *const c_char) -> Result<&'a str, RtStatus> {
    if p.is_null() {
        return Err(fail(RtStatus::NullArgument, "string argument is null"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(RtStatus::Utf8, "string argument is not UTF-8"))
}

unsafe fn graph_arg<'a>(p: *const RtGraph) -> Result<&'a ColoredGraph, RtStatus> {
    if p.is_null() {
        return Err(fail(RtStatus::NullArgument, "graph handle is null"));
    }
    Ok(&(*p).inner)
}

unsafe fn pattern_arg<'a>(p: *const RtPattern) -> Result<&'a Pattern, RtStatus> {
    if p.is_null() {
        return Err(fail(RtStatus::NullArgument, "pattern handle is null"));
    }
    Ok(&(*p).inner)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> RtStatus {
    if out.is_null() {
        return fail(RtStatus::NullArgument, "out pointer is null");
    }
    out.write(value);
    RtStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> RtStatus {
    match CString::new(text) {
        Ok(s) => write_out(out, s.into_raw()),
        Err(_) => fail(RtStatus::Internal, "result contained an interior NUL"),
    }
}

fn census_options(node_limit: u64, threads: usize) -> CensusOptions {
    CensusOptions {
        node_limit: (node_limit != 0).then_some(node_limit),
        threads: threads.max(1),
    }
}

// ---------------------------------------------------------------------------
// Errors and strings
// ---------------------------------------------------------------------------

/// Returns a copy of the last error message raised on this thread, or null.
/// The caller frees it with [`rt_string_free`].
#[no_mangle]
pub extern "C" fn rt_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Frees a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------------------
// Graph handles
// ---------------------------------------------------------------------------

/// Parses a graph in CGE text form into a new handle.
#[no_mangle]
pub unsafe extern "C" fn rt_graph_parse_cge(
    text: *const c_char,
    out: *mut *mut RtGraph,
) -> RtStatus {
    let text = match utf8_arg(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match cge::parse_cge(text) {
        Ok(inner) => write_out(out, Box::into_raw(Box::new(RtGraph { inner }))),
        Err(e) => fail(RtStatus::Parse, e.to_string()),
    }
}

/// Serializes a graph to canonical CGE text.
#[no_mangle]
pub unsafe extern "C" fn rt_graph_to_cge(g: *const RtGraph, out: *mut *mut c_char) -> RtStatus {
    let g = match graph_arg(g) {
        Ok(g) => g,
        Err(status) => return status,
    };
    write_string(out, cge::write_cge(g))
}

/// Renders a graph in DOT form with color ids as edge labels.
#[no_mangle]
pub unsafe extern "C" fn rt_graph_to_dot(
    g: *const RtGraph,
    name: *const c_char,
    out: *mut *mut c_char,
) -> RtStatus {
    let g = match graph_arg(g) {
        Ok(g) => g,
        Err(status) => return status,
    };
    let name = match utf8_arg(name) {
        Ok(n) => n,
        Err(status) => return status,
    };
    write_string(out, cge::write_dot(g, name))
}

#[no_mangle]
pub unsafe extern "C" fn rt_graph_vertex_count(g: *const RtGraph, out: *mut usize) -> RtStatus {
    match graph_arg(g) {
        Ok(g) => write_out(out, g.vertex_count()),
        Err(status) => status,
    }
}

#[no_mangle]
pub unsafe extern "C" fn rt_graph_edge_count(g: *const RtGraph, out: *mut usize) -> RtStatus {
    match graph_arg(g) {
        Ok(g) => write_out(out, g.edge_count()),
        Err(status) => status,
    }
}

/// Number of properness violations (uncolored edges and same-colored edges
/// sharing a vertex); zero on a totally and properly colored graph.
#[no_mangle]
pub unsafe extern "C" fn rt_graph_proper_violation_count(
    g: *const RtGraph,
    out: *mut usize,
) -> RtStatus {
    match graph_arg(g) {
        Ok(g) => write_out(out, g.validate_proper().len()),
        Err(status) => status,
    }
}

/// Releases a graph handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rt_graph_free(g: *mut RtGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

// ---------------------------------------------------------------------------
// Pattern handles
// ---------------------------------------------------------------------------

/// Parses a pattern shorthand (P4, C6, S3, S2.3, M2, K4) or an edge-list
/// literal (`0-1,1-2` or `5@0-1,2-3`).
#[no_mangle]
pub unsafe extern "C" fn rt_pattern_parse(
    spec: *const c_char,
    out: *mut *mut RtPattern,
) -> RtStatus {
    let spec = match utf8_arg(spec) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match Pattern::parse(spec) {
        Ok(inner) => write_out(out, Box::into_raw(Box::new(RtPattern { inner }))),
        Err(e) => fail(pattern_status(&e), e.to_string()),
    }
}

#[no_mangle]
pub unsafe extern "C" fn rt_pattern_vertex_count(
    p: *const RtPattern,
    out: *mut usize,
) -> RtStatus {
    match pattern_arg(p) {
        Ok(p) => write_out(out, p.vertex_count()),
        Err(status) => status,
    }
}

#[no_mangle]
pub unsafe extern "C" fn rt_pattern_edge_count(p: *const RtPattern, out: *mut usize) -> RtStatus {
    match pattern_arg(p) {
        Ok(p) => write_out(out, p.edge_count()),
        Err(status) => status,
    }
}

/// Order of the pattern's automorphism group (patterns up to 12 vertices).
#[no_mangle]
pub unsafe extern "C" fn rt_pattern_automorphism_count(
    p: *const RtPattern,
    out: *mut u64,
) -> RtStatus {
    let p = match pattern_arg(p) {
        Ok(p) => p,
        Err(status) => return status,
    };
    match p.automorphism_count() {
        Ok(aut) => write_out(out, aut),
        Err(e) => fail(pattern_status(&e), e.to_string()),
    }
}

/// Releases a pattern handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rt_pattern_free(p: *mut RtPattern) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

/// Exact number of copies of the pattern in the graph. `node_limit` 0 means
/// unlimited; `threads` 0 means 1.
#[no_mangle]
pub unsafe extern "C" fn rt_count_copies(
    g: *const RtGraph,
    p: *const RtPattern,
    node_limit: u64,
    threads: usize,
    out: *mut u64,
) -> RtStatus {
    let g = match graph_arg(g) {
        Ok(g) => g,
        Err(status) => return status,
    };
    let p = match pattern_arg(p) {
        Ok(p) => p,
        Err(status) => return status,
    };
    match census::count_copies_with(g, p, &census_options(node_limit, threads)) {
        Ok(count) => write_out(out, count),
        Err(e) => fail(census_status(&e), e.to_string()),
    }
}

/// Whether the (totally colored) graph contains a rainbow copy of the
/// pattern.
#[no_mangle]
pub unsafe extern "C" fn rt_find_rainbow_copy(
    g: *const RtGraph,
    p: *const RtPattern,
    node_limit: u64,
    out_found: *mut bool,
) -> RtStatus {
    let g = match graph_arg(g) {
        Ok(g) => g,
        Err(status) => return status,
    };
    let p = match pattern_arg(p) {
        Ok(p) => p,
        Err(status) => return status,
    };
    match census::find_rainbow_copy_with(g, p, &census_options(node_limit, 1)) {
        Ok(witness) => write_out(out_found, witness.is_some()),
        Err(e) => fail(census_status(&e), e.to_string()),
    }
}

/// Full census report (copy count, rainbow verdict, witness, node and
/// timing accounting) as a JSON string.
#[no_mangle]
pub unsafe extern "C" fn rt_census_json(
    g: *const RtGraph,
    p: *const RtPattern,
    node_limit: u64,
    threads: usize,
    out_json: *mut *mut c_char,
) -> RtStatus {
    let g = match graph_arg(g) {
        Ok(g) => g,
        Err(status) => return status,
    };
    let p = match pattern_arg(p) {
        Ok(p) => p,
        Err(status) => return status,
    };
    match census::run_census(g, p, &census_options(node_limit, threads)) {
        Ok(report) => match serde_json::to_string(&report) {
            Ok(json) => write_string(out_json, json),
            Err(e) => fail(RtStatus::Internal, e.to_string()),
        },
        Err(e) => fail(census_status(&e), e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Builds a construction by family name (`path-lower`, `odd-cycle-lower`,
/// `even-cycle-lower`, `c4-lower`, `disjoint-components`, `tree-lower`,
/// `tree-leaf-blowup`, `tree-star-case`, `tree-bare-path`, `clique-lower`,
/// `p4-extremal`). Zero-valued `k`, `r` and `b` mean "absent"; `pattern`
/// may be null for families that do not take one. On success the graph
/// handle is written to `out_graph` and, when `out_provenance_json` is not
/// null, the provenance header is written there as JSON.
#[no_mangle]
pub unsafe extern "C" fn rt_construct(
    family: *const c_char,
    k: usize,
    r: usize,
    pattern: *const c_char,
    n_target: usize,
    b: usize,
    out_graph: *mut *mut RtGraph,
    out_provenance_json: *mut *mut c_char,
) -> RtStatus {
    let family = match utf8_arg(family) {
        Ok(f) => f,
        Err(status) => return status,
    };
    let parsed_pattern = if pattern.is_null() {
        None
    } else {
        let spec = match utf8_arg(pattern) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match Pattern::parse(spec) {
            Ok(p) => Some(p),
            Err(e) => return fail(pattern_status(&e), e.to_string()),
        }
    };
    let built = match constructions::build_by_name(
        family,
        (k != 0).then_some(k),
        (r != 0).then_some(r),
        parsed_pattern.as_ref(),
        n_target,
        (b != 0).then_some(b),
    ) {
        Ok(built) => built,
        Err(e) => return fail(RtStatus::InvalidArgument, e.to_string()),
    };
    if !out_provenance_json.is_null() {
        match serde_json::to_string(&built.provenance) {
            Ok(json) => {
                let status = write_string(out_provenance_json, json);
                if status != RtStatus::Ok {
                    return status;
                }
            }
            Err(e) => return fail(RtStatus::Internal, e.to_string()),
        }
    }
    write_out(out_graph, Box::into_raw(Box::new(RtGraph { inner: built.graph })))
}

// ---------------------------------------------------------------------------
// Oracle
// ---------------------------------------------------------------------------

/// Exact extremal value ex(n, h, rainbow-f) as JSON
/// `{n, h, f, value, status, binding, witness_cge}`. Zero caps mean
/// "unlimited" (and a zero time limit means one hour). An incomplete
/// search still returns `RT_STATUS_OK`; the JSON carries
/// `"status": "incomplete"` and the binding cap.
#[no_mangle]
pub unsafe extern "C" fn rt_exact_extremal_json(
    n: usize,
    h: *const RtPattern,
    f: *const RtPattern,
    max_graphs: u64,
    max_coloring_nodes: u64,
    dedupe: bool,
    time_limit_millis: u64,
    out_json: *mut *mut c_char,
) -> RtStatus {
    let h = match pattern_arg(h) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let f = match pattern_arg(f) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let budget = SearchBudget {
        max_graphs: if max_graphs == 0 { u64::MAX } else { max_graphs },
        max_coloring_nodes: if max_coloring_nodes == 0 {
            u64::MAX
        } else {
            max_coloring_nodes
        },
        dedupe,
        time_limit: if time_limit_millis == 0 {
            Duration::from_secs(3600)
        } else {
            Duration::from_millis(time_limit_millis)
        },
    };
    let result = match oracle::exact_extremal(n, h, f, &budget) {
        Ok(result) => result,
        Err(e) => return fail(oracle_status(&e), e.to_string()),
    };
    let (status, binding) = match &result.status {
        ExtremalStatus::Exact => ("exact", None),
        ExtremalStatus::Incomplete { binding } => ("incomplete", Some(binding.as_str())),
    };
    let json = serde_json::json!({
        "n": result.n,
        "h": h.name(),
        "f": f.name(),
        "value": result.value,
        "status": status,
        "binding": binding,
        "graphs_examined": result.graphs_examined,
        "witness_cge": result.witness.as_ref().map(cge::write_cge),
    });
    write_string(out_json, json.to_string())
}

// ---------------------------------------------------------------------------
// Lemma path
// ---------------------------------------------------------------------------

/// Runs the greedy rainbow alternating-path step. Anchor, forbidden-vertex
/// and forbidden-color arrays are passed as pointer/length pairs (null with
/// length 0 is fine for the forbidden sets). The result JSON matches the
/// CLI: `{found, vertices, colors, ...}` on success, `{found: false, ...}`
/// when the search legitimately reports no path.
#[no_mangle]
pub unsafe extern "C" fn rt_lemma_path_json(
    g: *const RtGraph,
    anchors: *const usize,
    anchors_len: usize,
    forbid_vertices: *const usize,
    forbid_vertices_len: usize,
    forbid_colors: *const u32,
    forbid_colors_len: usize,
    best_effort: bool,
    out_json: *mut *mut c_char,
) -> RtStatus {
    let g = match graph_arg(g) {
        Ok(g) => g,
        Err(status) => return status,
    };
    if anchors.is_null() && anchors_len > 0 {
        return fail(RtStatus::NullArgument, "anchors pointer is null");
    }
    let read = |ptr: *const usize, len: usize| -> Vec<usize> {
        if ptr.is_null() || len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(ptr, len).to_vec()
        }
    };
    let anchors = read(anchors, anchors_len);
    let forbidden_vertices = read(forbid_vertices, forbid_vertices_len);
    let forbidden_colors: Vec<u32> = if forbid_colors.is_null() || forbid_colors_len == 0 {
        Vec::new()
    } else {
        std::slice::from_raw_parts(forbid_colors, forbid_colors_len).to_vec()
    };
    let inst = match LemmaInstance::new(g, &anchors, &forbidden_vertices, &forbidden_colors) {
        Ok(inst) => inst,
        Err(e) => return fail(RtStatus::InvalidArgument, e.to_string()),
    };
    let bound = inst.common_neighbor_bound();
    let json = match inst.find_rainbow_alternating_path(best_effort) {
        Ok(path) => serde_json::json!({
            "found": true,
            "vertices": path.vertices,
            "colors": path.colors,
            "bound": bound,
            "precondition_ok": path.precondition_ok,
            "max_forbidden_observed": path.max_forbidden_observed,
        }),
        Err(LemmaError::NotFound {
            stuck_index,
            candidates,
        }) => serde_json::json!({
            "found": false,
            "stuck_index": stuck_index,
            "candidates_at_stuck_step": candidates,
            "bound": bound,
            "precondition_ok": false,
        }),
        Err(LemmaError::PreconditionViolated {
            pair_index,
            common,
            required,
        }) => serde_json::json!({
            "found": false,
            "precondition_ok": false,
            "violation": {
                "pair_index": pair_index,
                "common_neighbors": common,
                "required": required,
            },
            "bound": bound,
        }),
        Err(e @ LemmaError::GuaranteeViolated { .. }) => {
            return fail(RtStatus::Internal, e.to_string());
        }
        Err(e) => return fail(RtStatus::InvalidArgument, e.to_string()),
    };
    write_string(out_json, json.to_string())
}
