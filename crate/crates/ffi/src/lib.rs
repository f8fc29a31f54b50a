//! C ABI over the `tightpaths` library.
//!
//! Graphs, dags and result lists are opaque heap handles created by a
//! `tp_*_parse_*` or query function and released by the matching
//! `tp_*_free`. Every fallible call returns a [`TpStatus`]; on failure a
//! description is available from [`tp_last_error_message`] on the same
//! thread. Strings handed out by a list stay valid until that list is freed.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tightpaths::tightpair::all_tight_pairs;
use tightpaths::tightpath::{all_tight_paths, tight_paths_from_root};
use tightpaths::{
    graph::{parse_edge_list, parse_vertex_weighted},
    Budget, Error, PairAlgorithm, VertexWeightedDag, WeightedDigraph,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Validation = 4,
    UnknownVertex = 5,
    InvalidThreshold = 6,
    IndexOutOfRange = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TpPairAlgorithm {
    Tighten = 0,
    Stacked = 1,
    Weights = 2,
}

impl From<TpPairAlgorithm> for PairAlgorithm {
    fn from(a: TpPairAlgorithm) -> Self {
        match a {
            TpPairAlgorithm::Tighten => PairAlgorithm::Tighten,
            TpPairAlgorithm::Stacked => PairAlgorithm::Stacked,
            TpPairAlgorithm::Weights => PairAlgorithm::Weights,
        }
    }
}

/// Positively weighted digraph.
pub struct TpGraph {
    inner: WeightedDigraph,
}

/// Acyclic vertex-weighted graph.
pub struct TpDag {
    inner: VertexWeightedDag,
}

/// Tight paths returned by [`tp_graph_tight_paths`].
pub struct TpPathList {
    names: Vec<CString>,
    paths: Vec<(Vec<usize>, f64)>,
}

/// Tight pairs returned by [`tp_dag_tight_pairs`].
pub struct TpPairList {
    names: Vec<CString>,
    pairs: Vec<(usize, usize)>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: TpStatus, message: &str) -> TpStatus {
    set_error(message);
    status
}

fn status_of(e: &Error) -> TpStatus {
    match e {
        Error::Parse { .. } => TpStatus::Parse,
        Error::UnknownVertex(_) => TpStatus::UnknownVertex,
        Error::InvalidThreshold(_) | Error::InvalidTolerance(_) => TpStatus::InvalidThreshold,
        _ => TpStatus::Validation,
    }
}

fn from_error(e: Error) -> TpStatus {
    fail(status_of(&e), &e.to_string())
}

/// Runs `body`, turning a panic into [`TpStatus::Panic`].
fn guarded(body: impl FnOnce() -> TpStatus) -> TpStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(TpStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, TpStatus> {
    if text.is_null() {
        return Err(fail(TpStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(TpStatus::InvalidUtf8, "string argument is not valid UTF-8"))
}

fn c_names(names: &[String]) -> Vec<CString> {
    names
        .iter()
        .map(|n| CString::new(n.as_str()).expect("names come from C strings"))
        .collect()
}

fn budget(gamma: f64, tolerance: f64) -> Result<Budget, TpStatus> {
    Budget::new(gamma)
        .and_then(|b| b.with_tolerance(tolerance))
        .map_err(from_error)
}

/// Message for the last failed call on this thread; empty if none. The
/// pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn tp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses an edge list (`SRC DST COST` per line).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn tp_graph_parse_elist(text: *const c_char, out: *mut *mut TpGraph) -> TpStatus {
    guarded(|| {
        if out.is_null() {
            return fail(TpStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_edge_list(text) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(TpGraph { inner: g }));
                TpStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle from [`tp_graph_parse_elist`].
#[no_mangle]
pub unsafe extern "C" fn tp_graph_vertex_count(graph: *const TpGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// # Safety
/// `graph` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn tp_graph_free(graph: *mut TpGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Tight paths at threshold `gamma`, from every vertex or only from `root`
/// when it is not null.
///
/// # Safety
/// `graph` must be a live handle, `root` null or a NUL-terminated string,
/// `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn tp_graph_tight_paths(
    graph: *const TpGraph,
    gamma: f64,
    tolerance: f64,
    root: *const c_char,
    out: *mut *mut TpPathList,
) -> TpStatus {
    guarded(|| {
        let Some(g) = graph.as_ref() else {
            return fail(TpStatus::NullPointer, "null graph");
        };
        if out.is_null() {
            return fail(TpStatus::NullPointer, "null output pointer");
        }
        let b = match budget(gamma, tolerance) {
            Ok(b) => b,
            Err(s) => return s,
        };
        let found = if root.is_null() {
            all_tight_paths(&g.inner, b)
        } else {
            let name = match read_str(root) {
                Ok(n) => n,
                Err(s) => return s,
            };
            match g.inner.vertex(name).and_then(|r| tight_paths_from_root(&g.inner, r, b)) {
                Ok(found) => found,
                Err(e) => return from_error(e),
            }
        };
        let list = TpPathList {
            names: c_names(g.inner.names()),
            paths: found.iter().map(|p| (p.vertices.clone(), p.cost)).collect(),
        };
        *out = Box::into_raw(Box::new(list));
        TpStatus::Ok
    })
}

/// Number of paths, or 0 for a null list.
///
/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tp_path_list_len(list: *const TpPathList) -> usize {
    list.as_ref().map_or(0, |l| l.paths.len())
}

unsafe fn path_at<'a>(list: *const TpPathList, index: usize) -> Result<&'a (Vec<usize>, f64), TpStatus> {
    let l = list
        .as_ref()
        .ok_or_else(|| fail(TpStatus::NullPointer, "null path list"))?;
    l.paths.get(index).ok_or_else(|| {
        fail(
            TpStatus::IndexOutOfRange,
            &format!("path {index} out of range for {} paths", l.paths.len()),
        )
    })
}

/// Vertex count of path `index`.
///
/// # Safety
/// `list` must be a live handle and `out_len` writable.
#[no_mangle]
pub unsafe extern "C" fn tp_path_list_path_len(
    list: *const TpPathList,
    index: usize,
    out_len: *mut usize,
) -> TpStatus {
    if out_len.is_null() {
        return fail(TpStatus::NullPointer, "null output pointer");
    }
    match path_at(list, index) {
        Ok(p) => {
            *out_len = p.0.len();
            TpStatus::Ok
        }
        Err(s) => s,
    }
}

/// Cost of path `index`.
///
/// # Safety
/// `list` must be a live handle and `out_cost` writable.
#[no_mangle]
pub unsafe extern "C" fn tp_path_list_cost(
    list: *const TpPathList,
    index: usize,
    out_cost: *mut f64,
) -> TpStatus {
    if out_cost.is_null() {
        return fail(TpStatus::NullPointer, "null output pointer");
    }
    match path_at(list, index) {
        Ok(p) => {
            *out_cost = p.1;
            TpStatus::Ok
        }
        Err(s) => s,
    }
}

/// Name of vertex `position` on path `index`. The string is owned by the
/// list.
///
/// # Safety
/// `list` must be a live handle and `out_name` writable.
#[no_mangle]
pub unsafe extern "C" fn tp_path_list_vertex(
    list: *const TpPathList,
    index: usize,
    position: usize,
    out_name: *mut *const c_char,
) -> TpStatus {
    if out_name.is_null() {
        return fail(TpStatus::NullPointer, "null output pointer");
    }
    let p = match path_at(list, index) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let names = &(&*list).names;
    match p.0.get(position) {
        Some(&v) => {
            *out_name = names[v].as_ptr();
            TpStatus::Ok
        }
        None => fail(
            TpStatus::IndexOutOfRange,
            &format!("position {position} out of range for a path of {} vertices", p.0.len()),
        ),
    }
}

/// # Safety
/// `list` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn tp_path_list_free(list: *mut TpPathList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Parses a vertex-weighted dag (`v NAME WEIGHT` and `e SRC DST` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn tp_dag_parse_vwg(text: *const c_char, out: *mut *mut TpDag) -> TpStatus {
    guarded(|| {
        if out.is_null() {
            return fail(TpStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_vertex_weighted(text) {
            Ok(d) => {
                *out = Box::into_raw(Box::new(TpDag { inner: d }));
                TpStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `dag` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn tp_dag_free(dag: *mut TpDag) {
    if !dag.is_null() {
        drop(Box::from_raw(dag));
    }
}

/// All tight pairs at threshold `gamma`, ordered by endpoint weights.
///
/// # Safety
/// `dag` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn tp_dag_tight_pairs(
    dag: *const TpDag,
    gamma: f64,
    tolerance: f64,
    algorithm: TpPairAlgorithm,
    out: *mut *mut TpPairList,
) -> TpStatus {
    guarded(|| {
        let Some(d) = dag.as_ref() else {
            return fail(TpStatus::NullPointer, "null dag");
        };
        if out.is_null() {
            return fail(TpStatus::NullPointer, "null output pointer");
        }
        let b = match budget(gamma, tolerance) {
            Ok(b) => b,
            Err(s) => return s,
        };
        let found = all_tight_pairs(&d.inner, b, algorithm.into());
        let list = TpPairList {
            names: c_names(d.inner.names()),
            pairs: found.sorted_by_weight(&d.inner),
        };
        *out = Box::into_raw(Box::new(list));
        TpStatus::Ok
    })
}

/// Number of pairs, or 0 for a null list.
///
/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tp_pair_list_len(list: *const TpPairList) -> usize {
    list.as_ref().map_or(0, |l| l.pairs.len())
}

/// Endpoint names of pair `index`. Strings are owned by the list.
///
/// # Safety
/// `list` must be a live handle; `out_first` and `out_last` writable.
#[no_mangle]
pub unsafe extern "C" fn tp_pair_list_get(
    list: *const TpPairList,
    index: usize,
    out_first: *mut *const c_char,
    out_last: *mut *const c_char,
) -> TpStatus {
    let Some(l) = list.as_ref() else {
        return fail(TpStatus::NullPointer, "null pair list");
    };
    if out_first.is_null() || out_last.is_null() {
        return fail(TpStatus::NullPointer, "null output pointer");
    }
    match l.pairs.get(index) {
        Some(&(u, v)) => {
            *out_first = l.names[u].as_ptr();
            *out_last = l.names[v].as_ptr();
            TpStatus::Ok
        }
        None => {
            *out_first = ptr::null();
            *out_last = ptr::null();
            fail(
                TpStatus::IndexOutOfRange,
                &format!("pair {index} out of range for {} pairs", l.pairs.len()),
            )
        }
    }
}

/// # Safety
/// `list` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn tp_pair_list_free(list: *mut TpPairList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}
