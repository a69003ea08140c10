//! C ABI for the contagion toolkit.
//!
//! Conventions: graphs are opaque handles created by the constructor
//! functions and released with [`contagion_graph_free`]; every fallible
//! call returns a [`ContagionStatus`] and writes results through out
//! pointers, which are only touched on `OK`; strings returned through
//! `char**` outs are NUL-terminated, owned by the library, and must be
//! released with [`contagion_string_free`]. A per-thread message for the
//! most recent failure is available via
//! [`contagion_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use contagion::bitset::VertexSet;
use contagion::constructive::{construct_dense_seed, construct_ore_seed, SeedMethod};
use contagion::error::Error;
use contagion::generators::FamilySpec;
use contagion::graph::Graph;
use contagion::io::{emit_graph_document, parse_graph_document, GraphDocument};
use contagion::oracle::{min_contagious, scan_seeds, MinContagiousOutcome, SearchConfig};
use contagion::percolation::{closure, percolate};

/// Result codes for every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContagionStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    /// An enumeration would exceed the configured budget.
    BudgetExceeded = 4,
    /// `m(G, r)` exceeds the supplied upper bound (not an error: the
    /// bounded outcome of a minimum-contagious-set search).
    BoundExceeded = 5,
    /// A caller-supplied output buffer is too small.
    BufferTooSmall = 6,
    InternalError = 7,
}

/// How a constructed seed was chosen; mirrors the library's recipe.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContagionSeedMethod {
    NeighborsOfAnchor = 0,
    DcCrossPair = 1,
    OreLemma17 = 2,
    BruteForceFallback = 3,
}

impl From<SeedMethod> for ContagionSeedMethod {
    fn from(m: SeedMethod) -> Self {
        match m {
            SeedMethod::NeighborsOfAnchor => ContagionSeedMethod::NeighborsOfAnchor,
            SeedMethod::DcCrossPair => ContagionSeedMethod::DcCrossPair,
            SeedMethod::OreLemma17 => ContagionSeedMethod::OreLemma17,
            SeedMethod::BruteForceFallback => ContagionSeedMethod::BruteForceFallback,
        }
    }
}

/// Opaque graph handle.
pub struct ContagionGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> ContagionStatus {
    match err {
        Error::InvalidArgument(_) => ContagionStatus::InvalidArgument,
        Error::Parse { .. } => ContagionStatus::ParseError,
        Error::BudgetExceeded { .. } => ContagionStatus::BudgetExceeded,
        Error::Internal(_) => ContagionStatus::InternalError,
        Error::Io(_) => ContagionStatus::InvalidArgument,
    }
}

fn fail(err: Error) -> ContagionStatus {
    set_error(&err.to_string());
    status_of(&err)
}

fn fail_with(status: ContagionStatus, message: &str) -> ContagionStatus {
    set_error(message);
    status
}

/// Message describing the most recent failure on this thread. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn contagion_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

unsafe fn graph_ref<'a>(g: *const ContagionGraph) -> Option<&'a Graph> {
    g.as_ref().map(|h| &h.inner)
}

fn boxed(graph: Graph, out: *mut *mut ContagionGraph) -> ContagionStatus {
    let handle = Box::new(ContagionGraph { inner: graph });
    unsafe {
        *out = Box::into_raw(handle);
    }
    ContagionStatus::Ok
}

unsafe fn collect_seed(
    g: &Graph,
    seed: *const u32,
    seed_len: usize,
) -> Result<VertexSet, ContagionStatus> {
    if seed.is_null() && seed_len > 0 {
        return Err(fail_with(
            ContagionStatus::NullPointer,
            "seed pointer is null",
        ));
    }
    let mut set = VertexSet::new(g.n());
    for i in 0..seed_len {
        let v = *seed.add(i) as usize;
        if v >= g.n() {
            return Err(fail_with(
                ContagionStatus::InvalidArgument,
                &format!("seed vertex {v} out of range for n = {}", g.n()),
            ));
        }
        set.insert(v);
    }
    Ok(set)
}

unsafe fn write_members(
    set: &VertexSet,
    buf: *mut u32,
    cap: usize,
    out_len: *mut usize,
) -> ContagionStatus {
    let needed = set.len();
    if needed > cap {
        return fail_with(
            ContagionStatus::BufferTooSmall,
            &format!("need capacity {needed}, got {cap}"),
        );
    }
    if buf.is_null() && needed > 0 {
        return fail_with(ContagionStatus::NullPointer, "output buffer is null");
    }
    for (i, v) in set.iter().enumerate() {
        *buf.add(i) = v as u32;
    }
    if !out_len.is_null() {
        *out_len = needed;
    }
    ContagionStatus::Ok
}

fn string_out(text: String, out: *mut *mut c_char) -> ContagionStatus {
    match CString::new(text) {
        Ok(owned) => {
            unsafe {
                *out = owned.into_raw();
            }
            ContagionStatus::Ok
        }
        Err(_) => fail_with(ContagionStatus::InternalError, "output contains NUL"),
    }
}

/// Empty graph on `n` vertices.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn contagion_graph_new(
    n: u32,
    out: *mut *mut ContagionGraph,
) -> ContagionStatus {
    if out.is_null() {
        return fail_with(ContagionStatus::NullPointer, "out pointer is null");
    }
    boxed(Graph::empty(n as usize), out)
}

/// Graph from `edge_count` undirected edges given as `2 * edge_count`
/// endpoints `(u0, v0, u1, v1, ...)`. Rejects self-loops, duplicates and
/// out-of-range ids.
///
/// # Safety
/// `endpoints` must point to `2 * edge_count` readable `u32`s; `out`
/// must be valid.
#[no_mangle]
pub unsafe extern "C" fn contagion_graph_from_edges(
    n: u32,
    endpoints: *const u32,
    edge_count: usize,
    out: *mut *mut ContagionGraph,
) -> ContagionStatus {
    if out.is_null() || (endpoints.is_null() && edge_count > 0) {
        return fail_with(ContagionStatus::NullPointer, "null pointer argument");
    }
    let mut edges = Vec::with_capacity(edge_count);
    for i in 0..edge_count {
        let u = *endpoints.add(2 * i) as usize;
        let v = *endpoints.add(2 * i + 1) as usize;
        edges.push((u, v));
    }
    match Graph::from_edges(n as usize, &edges) {
        Ok(g) => boxed(g, out),
        Err(e) => fail(e),
    }
}

/// Builds a named family from its provenance string, e.g. `"dc n=8"` or
/// `"ore_groups n=12 c=4 sizes=2,2,2,2"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn contagion_graph_generate(
    spec: *const c_char,
    out: *mut *mut ContagionGraph,
) -> ContagionStatus {
    if spec.is_null() || out.is_null() {
        return fail_with(ContagionStatus::NullPointer, "null pointer argument");
    }
    let text = match CStr::from_ptr(spec).to_str() {
        Ok(text) => text,
        Err(_) => return fail_with(ContagionStatus::InvalidArgument, "spec is not UTF-8"),
    };
    let family: FamilySpec = match text.parse() {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    match family.build() {
        Ok(g) => boxed(g, out),
        Err(e) => fail(e),
    }
}

/// Parses the edge-list document format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn contagion_graph_parse(
    text: *const c_char,
    out: *mut *mut ContagionGraph,
) -> ContagionStatus {
    if text.is_null() || out.is_null() {
        return fail_with(ContagionStatus::NullPointer, "null pointer argument");
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(text) => text,
        Err(_) => return fail_with(ContagionStatus::ParseError, "document is not UTF-8"),
    };
    match parse_graph_document(text) {
        Ok(doc) => boxed(doc.graph, out),
        Err(e) => fail(e),
    }
}

/// Releases a graph handle. Null is a no-op.
///
/// # Safety
/// `g` must be a pointer returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn contagion_graph_free(g: *mut ContagionGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count; 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn contagion_graph_vertex_count(g: *const ContagionGraph) -> u32 {
    graph_ref(g).map_or(0, |g| g.n() as u32)
}

/// Edge count; 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn contagion_graph_edge_count(g: *const ContagionGraph) -> u64 {
    graph_ref(g).map_or(0, |g| g.edge_count() as u64)
}

/// Degree of one vertex.
///
/// # Safety
/// `g` must be a live handle; `out_degree` must be valid.
#[no_mangle]
pub unsafe extern "C" fn contagion_graph_degree(
    g: *const ContagionGraph,
    v: u32,
    out_degree: *mut u32,
) -> ContagionStatus {
    let Some(g) = graph_ref(g) else {
        return fail_with(ContagionStatus::NullPointer, "graph handle is null");
    };
    if out_degree.is_null() {
        return fail_with(ContagionStatus::NullPointer, "out pointer is null");
    }
    match g.degree(v as usize) {
        Ok(d) => {
            *out_degree = d as u32;
            ContagionStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Copy of the graph with one extra edge (graphs are immutable).
///
/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn contagion_graph_with_edge(
    g: *const ContagionGraph,
    u: u32,
    v: u32,
    out: *mut *mut ContagionGraph,
) -> ContagionStatus {
    let Some(g) = graph_ref(g) else {
        return fail_with(ContagionStatus::NullPointer, "graph handle is null");
    };
    if out.is_null() {
        return fail_with(ContagionStatus::NullPointer, "out pointer is null");
    }
    match g.with_edge(u as usize, v as usize) {
        Ok(copy) => boxed(copy, out),
        Err(e) => fail(e),
    }
}

/// True iff every non-adjacent pair has degree sum at least n.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn contagion_graph_is_ore(
    g: *const ContagionGraph,
    out: *mut bool,
) -> ContagionStatus {
    let Some(g) = graph_ref(g) else {
        return fail_with(ContagionStatus::NullPointer, "graph handle is null");
    };
    if out.is_null() {
        return fail_with(ContagionStatus::NullPointer, "out pointer is null");
    }
    *out = g.is_ore();
    ContagionStatus::Ok
}

/// True iff the graph is two n/2-cliques joined by a perfect matching.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn contagion_graph_is_dc(
    g: *const ContagionGraph,
    out: *mut bool,
) -> ContagionStatus {
    let Some(g) = graph_ref(g) else {
        return fail_with(ContagionStatus::NullPointer, "graph handle is null");
    };
    if out.is_null() {
        return fail_with(ContagionStatus::NullPointer, "out pointer is null");
    }
    *out = g.detect_dc().is_some();
    ContagionStatus::Ok
}

/// Canonical edge-list document for the graph. Free with
/// [`contagion_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out_text` must be valid.
#[no_mangle]
pub unsafe extern "C" fn contagion_graph_emit(
    g: *const ContagionGraph,
    out_text: *mut *mut c_char,
) -> ContagionStatus {
    let Some(g) = graph_ref(g) else {
        return fail_with(ContagionStatus::NullPointer, "graph handle is null");
    };
    if out_text.is_null() {
        return fail_with(ContagionStatus::NullPointer, "out pointer is null");
    }
    string_out(
        emit_graph_document(&GraphDocument::new(g.clone())),
        out_text,
    )
}

/// Percolates a seed at threshold `r`; reports contagiousness and the
/// number of rounds the process ran.
///
/// # Safety
/// `g` must be a live handle; `seed` must point to `seed_len` readable
/// `u32`s; out pointers must be valid or null (nulls are skipped).
#[no_mangle]
pub unsafe extern "C" fn contagion_percolate(
    g: *const ContagionGraph,
    seed: *const u32,
    seed_len: usize,
    r: u32,
    out_contagious: *mut bool,
    out_rounds: *mut u32,
) -> ContagionStatus {
    let Some(g) = graph_ref(g) else {
        return fail_with(ContagionStatus::NullPointer, "graph handle is null");
    };
    if r == 0 {
        return fail_with(
            ContagionStatus::InvalidArgument,
            "threshold r must be at least 1",
        );
    }
    let seed = match collect_seed(g, seed, seed_len) {
        Ok(seed) => seed,
        Err(status) => return status,
    };
    let trace = percolate(g, &seed, r as usize);
    if !out_contagious.is_null() {
        *out_contagious = trace.contagious;
    }
    if !out_rounds.is_null() {
        *out_rounds = trace.rounds as u32;
    }
    ContagionStatus::Ok
}

/// Full percolation trace as a JSON document (fields `n`, `r`, `seed`,
/// `waves`, `contagious`, `rounds`). Free with [`contagion_string_free`].
///
/// # Safety
/// As [`contagion_percolate`]; `out_json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn contagion_percolate_json(
    g: *const ContagionGraph,
    seed: *const u32,
    seed_len: usize,
    r: u32,
    out_json: *mut *mut c_char,
) -> ContagionStatus {
    let Some(g) = graph_ref(g) else {
        return fail_with(ContagionStatus::NullPointer, "graph handle is null");
    };
    if out_json.is_null() {
        return fail_with(ContagionStatus::NullPointer, "out pointer is null");
    }
    if r == 0 {
        return fail_with(
            ContagionStatus::InvalidArgument,
            "threshold r must be at least 1",
        );
    }
    let seed = match collect_seed(g, seed, seed_len) {
        Ok(seed) => seed,
        Err(status) => return status,
    };
    let trace = percolate(g, &seed, r as usize);
    let json = serde_json::to_string(&trace).expect("trace serializes");
    string_out(json, out_json)
}

/// Writes the closure (eventually infected set) of a seed into
/// `out_members`, which must have capacity for `n` entries.
///
/// # Safety
/// As [`contagion_percolate`]; `out_members` must have room for `cap`
/// entries.
#[no_mangle]
pub unsafe extern "C" fn contagion_closure(
    g: *const ContagionGraph,
    seed: *const u32,
    seed_len: usize,
    r: u32,
    out_members: *mut u32,
    cap: usize,
    out_len: *mut usize,
) -> ContagionStatus {
    let Some(g) = graph_ref(g) else {
        return fail_with(ContagionStatus::NullPointer, "graph handle is null");
    };
    if r == 0 {
        return fail_with(
            ContagionStatus::InvalidArgument,
            "threshold r must be at least 1",
        );
    }
    let seed = match collect_seed(g, seed, seed_len) {
        Ok(seed) => seed,
        Err(status) => return status,
    };
    let closed = closure(g, &seed, r as usize);
    write_members(&closed, out_members, cap, out_len)
}

/// Exact minimum contagious set. `upper_bound < 0` means unbounded;
/// with a bound, `BOUND_EXCEEDED` reports `m > upper_bound`. `budget`
/// and `workers` of 0 select the defaults. The witness (ascending) is
/// written to `out_witness`.
///
/// # Safety
/// `g` must be a live handle; `out_witness` must have room for `cap`
/// entries; other out pointers must be valid or null.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn contagion_min_contagious(
    g: *const ContagionGraph,
    r: u32,
    upper_bound: i64,
    budget: u64,
    workers: u32,
    out_m: *mut u32,
    out_witness: *mut u32,
    cap: usize,
    out_witness_len: *mut usize,
    out_seeds_examined: *mut u64,
) -> ContagionStatus {
    let Some(g) = graph_ref(g) else {
        return fail_with(ContagionStatus::NullPointer, "graph handle is null");
    };
    if r == 0 {
        return fail_with(
            ContagionStatus::InvalidArgument,
            "threshold r must be at least 1",
        );
    }
    let cfg = SearchConfig {
        budget: if budget == 0 {
            SearchConfig::default().budget
        } else {
            budget
        },
        workers: if workers == 0 { 1 } else { workers as usize },
    };
    let bound = if upper_bound < 0 {
        None
    } else {
        Some(upper_bound as usize)
    };
    match min_contagious(g, r as usize, bound, &cfg) {
        Ok(MinContagiousOutcome::Exact(res)) => {
            if !out_seeds_examined.is_null() {
                *out_seeds_examined = res.seeds_examined;
            }
            let status = write_members(&res.witness, out_witness, cap, out_witness_len);
            if status != ContagionStatus::Ok {
                return status;
            }
            if !out_m.is_null() {
                *out_m = res.m as u32;
            }
            ContagionStatus::Ok
        }
        Ok(MinContagiousOutcome::ExceedsBound {
            bound,
            seeds_examined,
            ..
        }) => {
            if !out_seeds_examined.is_null() {
                *out_seeds_examined = seeds_examined;
            }
            fail_with(
                ContagionStatus::BoundExceeded,
                &format!("m(G, {r}) exceeds the bound {bound}"),
            )
        }
        Err(e) => fail(e),
    }
}

/// Seed-space statistics at one seed size. `out_max_rounds` is -1 when
/// no seed of this size is contagious; otherwise `out_argmax` (capacity
/// `cap`) receives a seed attaining the maximum.
///
/// # Safety
/// `g` must be a live handle; out pointers must be valid or null.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn contagion_scan_seeds(
    g: *const ContagionGraph,
    r: u32,
    size: usize,
    budget: u64,
    workers: u32,
    out_total: *mut u64,
    out_contagious: *mut u64,
    out_max_rounds: *mut i64,
    out_argmax: *mut u32,
    cap: usize,
    out_argmax_len: *mut usize,
) -> ContagionStatus {
    let Some(g) = graph_ref(g) else {
        return fail_with(ContagionStatus::NullPointer, "graph handle is null");
    };
    if r == 0 {
        return fail_with(
            ContagionStatus::InvalidArgument,
            "threshold r must be at least 1",
        );
    }
    let cfg = SearchConfig {
        budget: if budget == 0 {
            SearchConfig::default().budget
        } else {
            budget
        },
        workers: if workers == 0 { 1 } else { workers as usize },
    };
    match scan_seeds(g, r as usize, size, &cfg) {
        Ok(stats) => {
            if let Some(argmax) = &stats.argmax_seed {
                let status = write_members(argmax, out_argmax, cap, out_argmax_len);
                if status != ContagionStatus::Ok {
                    return status;
                }
            } else if !out_argmax_len.is_null() {
                *out_argmax_len = 0;
            }
            if !out_total.is_null() {
                *out_total = stats.total;
            }
            if !out_contagious.is_null() {
                *out_contagious = stats.contagious_count;
            }
            if !out_max_rounds.is_null() {
                *out_max_rounds = stats.max_rounds.map_or(-1, |m| m as i64);
            }
            ContagionStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Contagious seed of size k for a graph with minimum degree at least
/// ⌈(k-1)/k · n⌉ (thresholds k). Writes the seed, the method, and the
/// anchor vertex (-1 when the method has none).
///
/// # Safety
/// `g` must be a live handle; `out_seed` must have room for `cap`
/// entries; other out pointers must be valid or null.
#[no_mangle]
pub unsafe extern "C" fn contagion_construct_dense_seed(
    g: *const ContagionGraph,
    k: u32,
    out_seed: *mut u32,
    cap: usize,
    out_seed_len: *mut usize,
    out_method: *mut ContagionSeedMethod,
    out_anchor: *mut i64,
) -> ContagionStatus {
    let Some(g) = graph_ref(g) else {
        return fail_with(ContagionStatus::NullPointer, "graph handle is null");
    };
    match construct_dense_seed(g, k as usize) {
        Ok(recipe) => {
            let status = write_members(&recipe.seed, out_seed, cap, out_seed_len);
            if status != ContagionStatus::Ok {
                return status;
            }
            if !out_method.is_null() {
                *out_method = recipe.method.into();
            }
            if !out_anchor.is_null() {
                *out_anchor = recipe.anchor.map_or(-1, |a| a as i64);
            }
            ContagionStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Contagious pair for an Ore graph (thresholds two).
///
/// # Safety
/// As [`contagion_construct_dense_seed`].
#[no_mangle]
pub unsafe extern "C" fn contagion_construct_ore_seed(
    g: *const ContagionGraph,
    out_seed: *mut u32,
    cap: usize,
    out_seed_len: *mut usize,
    out_method: *mut ContagionSeedMethod,
    out_anchor: *mut i64,
) -> ContagionStatus {
    let Some(g) = graph_ref(g) else {
        return fail_with(ContagionStatus::NullPointer, "graph handle is null");
    };
    match construct_ore_seed(g) {
        Ok(recipe) => {
            let status = write_members(&recipe.seed, out_seed, cap, out_seed_len);
            if status != ContagionStatus::Ok {
                return status;
            }
            if !out_method.is_null() {
                *out_method = recipe.method.into();
            }
            if !out_anchor.is_null() {
                *out_anchor = recipe.anchor.map_or(-1, |a| a as i64);
            }
            ContagionStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Frees a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn contagion_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
