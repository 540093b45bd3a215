//! C ABI over the `pathdecomp` solver.
//!
//! Graphs and decompositions are opaque heap handles owned by the caller
//! and released with the matching `*_free` function. Every fallible call
//! returns a [`PdStatus`]; on failure a description is available from
//! [`pd_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pathdecomp::decomp::{verify, Path, PathDecomposition};
use pathdecomp::graph::Graph;
use pathdecomp::harness::parse_graph6;
use pathdecomp::solver::{solve_with, SolveError, SolveOptions, DEFAULT_BUDGET};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    NotConnected = 3,
    MaxDegree = 4,
    NoEdges = 5,
    BudgetExhausted = 6,
    OutOfRange = 7,
    Internal = 8,
}

/// Opaque graph handle.
pub struct PdGraph(Graph);

/// Opaque decomposition handle.
pub struct PdDecomposition(PathDecomposition);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let msg = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: PdStatus, message: impl Into<String>) -> PdStatus {
    set_error(message);
    status
}

/// Runs `f`, turning a panic into `Internal`.
fn guard(f: impl FnOnce() -> PdStatus) -> PdStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(PdStatus::Internal, "panic inside pathdecomp"))
}

/// Message for the last failed call on this thread; empty if none. The
/// pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn pd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses one graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_from_graph6(text: *const c_char, out: *mut *mut PdGraph) -> PdStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(PdStatus::NullPointer, "null argument");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(PdStatus::InvalidInput, "graph6 text is not UTF-8");
        };
        match parse_graph6(s) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(PdGraph(g)));
                PdStatus::Ok
            }
            Err(e) => fail(PdStatus::InvalidInput, e.to_string()),
        }
    })
}

/// Builds a graph on `n` vertices from `m` edges stored as `2m` endpoint ids.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or be null when `m` is 0)
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut PdGraph,
) -> PdStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && m > 0) {
            return fail(PdStatus::NullPointer, "null argument");
        }
        let flat = if m == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * m) };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        match Graph::from_edges(n, &pairs) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(PdGraph(g)));
                PdStatus::Ok
            }
            Err(e) => fail(PdStatus::InvalidInput, e.to_string()),
        }
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_order(g: *const PdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_size(g: *const PdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.size())
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_free(g: *mut PdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Decomposes `g` into at most `ceil(n/2)` paths. `budget` bounds each exact
/// base-case search in nodes; 0 selects the default.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_solve(g: *const PdGraph, budget: u64, out: *mut *mut PdDecomposition) -> PdStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(PdStatus::NullPointer, "null argument");
        };
        let opts = SolveOptions {
            budget: if budget == 0 { DEFAULT_BUDGET } else { budget },
        };
        match solve_with(&g.0, &opts) {
            Ok(r) => {
                *out = Box::into_raw(Box::new(PdDecomposition(r.decomposition)));
                PdStatus::Ok
            }
            Err(e) => {
                let status = match &e {
                    SolveError::Disconnected => PdStatus::NotConnected,
                    SolveError::MaxDegree(_) => PdStatus::MaxDegree,
                    SolveError::Edgeless => PdStatus::NoEdges,
                    e if e.is_budget() => PdStatus::BudgetExhausted,
                    _ => PdStatus::Internal,
                };
                fail(status, e.to_string())
            }
        }
    })
}

/// Empty decomposition, to be filled with [`pd_decomposition_push_path`].
#[no_mangle]
pub extern "C" fn pd_decomposition_new() -> *mut PdDecomposition {
    Box::into_raw(Box::new(PdDecomposition(PathDecomposition::default())))
}

/// Appends a path given by `len` vertex ids. The path is not checked here;
/// use [`pd_verify`].
///
/// # Safety
/// `d` must be a live handle and `vertices` must point to `len` values.
#[no_mangle]
pub unsafe extern "C" fn pd_decomposition_push_path(
    d: *mut PdDecomposition,
    vertices: *const usize,
    len: usize,
) -> PdStatus {
    guard(|| {
        let (Some(d), false) = (d.as_mut(), vertices.is_null()) else {
            return fail(PdStatus::NullPointer, "null argument");
        };
        let vs = std::slice::from_raw_parts(vertices, len).to_vec();
        let mut paths = std::mem::take(&mut d.0).into_paths();
        paths.push(Path::raw(vs));
        d.0 = PathDecomposition::new(paths);
        PdStatus::Ok
    })
}

/// Number of paths, or 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_decomposition_len(d: *const PdDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.0.len())
}

/// Number of vertices on path `i`, or 0 if there is no such path.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_path_len(d: *const PdDecomposition, i: usize) -> usize {
    d.as_ref()
        .and_then(|d| d.0.paths().get(i))
        .map_or(0, |p| p.vertices().len())
}

/// Copies up to `cap` vertices of path `i` into `buf` and stores the path's
/// full vertex count in `written`.
///
/// # Safety
/// `d` must be a live handle, `buf` writable for `cap` values, `written` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_path_vertices(
    d: *const PdDecomposition,
    i: usize,
    buf: *mut usize,
    cap: usize,
    written: *mut usize,
) -> PdStatus {
    guard(|| {
        let Some(d) = d.as_ref() else {
            return fail(PdStatus::NullPointer, "null decomposition");
        };
        if written.is_null() || (buf.is_null() && cap > 0) {
            return fail(PdStatus::NullPointer, "null argument");
        }
        let Some(p) = d.0.paths().get(i) else {
            return fail(PdStatus::OutOfRange, format!("no path {i}"));
        };
        let vs = p.vertices();
        let k = vs.len().min(cap);
        if k > 0 {
            ptr::copy_nonoverlapping(vs.as_ptr(), buf, k);
        }
        *written = vs.len();
        PdStatus::Ok
    })
}

/// Checks that `d` partitions the edges of `g` into simple paths. `valid`
/// and `good` (valid and at most `ceil(n/2)` paths) are written on success.
///
/// # Safety
/// `g` and `d` must be live handles; `valid` and `good` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_verify(
    g: *const PdGraph,
    d: *const PdDecomposition,
    valid: *mut bool,
    good: *mut bool,
) -> PdStatus {
    guard(|| {
        let (Some(g), Some(d)) = (g.as_ref(), d.as_ref()) else {
            return fail(PdStatus::NullPointer, "null handle");
        };
        if valid.is_null() || good.is_null() {
            return fail(PdStatus::NullPointer, "null argument");
        }
        let r = verify(&g.0, &d.0);
        if let Some(v) = r.violations.first() {
            set_error(v.to_string());
        }
        *valid = r.valid;
        *good = r.good;
        PdStatus::Ok
    })
}

/// # Safety
/// `d` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pd_decomposition_free(d: *mut PdDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn last_error() -> String {
        unsafe { CStr::from_ptr(pd_last_error_message()) }.to_string_lossy().into_owned()
    }

    #[test]
    fn solve_petersen_through_handles() {
        let text = CString::new("IheA@GUAo").unwrap();
        let mut g = ptr::null_mut();
        unsafe {
            assert_eq!(pd_graph_from_graph6(text.as_ptr(), &mut g), PdStatus::Ok);
            assert_eq!((pd_graph_order(g), pd_graph_size(g)), (10, 15));
            let mut d = ptr::null_mut();
            assert_eq!(pd_solve(g, 0, &mut d), PdStatus::Ok);
            assert_eq!(pd_decomposition_len(d), 5);
            let mut covered = 0;
            for i in 0..5 {
                let mut buf = [0usize; 16];
                let mut n = 0;
                assert_eq!(pd_path_vertices(d, i, buf.as_mut_ptr(), buf.len(), &mut n), PdStatus::Ok);
                assert_eq!(n, pd_path_len(d, i));
                covered += n - 1;
            }
            assert_eq!(covered, 15);
            let (mut valid, mut good) = (false, false);
            assert_eq!(pd_verify(g, d, &mut valid, &mut good), PdStatus::Ok);
            assert!(valid && good);
            let mut n = 0;
            assert_eq!(pd_path_vertices(d, 9, ptr::null_mut(), 0, &mut n), PdStatus::OutOfRange);
            pd_decomposition_free(d);
            pd_graph_free(g);
        }
    }

    #[test]
    fn errors_are_reported() {
        let mut g = ptr::null_mut();
        unsafe {
            let bad = CString::new("A").unwrap();
            assert_eq!(pd_graph_from_graph6(bad.as_ptr(), &mut g), PdStatus::InvalidInput);
            assert!(last_error().contains("truncated"));
            let loops = [0usize, 0];
            assert_eq!(pd_graph_from_edges(1, loops.as_ptr(), 1, &mut g), PdStatus::InvalidInput);
            assert!(last_error().contains("self-loop"));
            let two = [0usize, 1, 2, 3];
            assert_eq!(pd_graph_from_edges(4, two.as_ptr(), 2, &mut g), PdStatus::Ok);
            let mut d = ptr::null_mut();
            assert_eq!(pd_solve(g, 0, &mut d), PdStatus::NotConnected);
            assert!(d.is_null());
            pd_graph_free(g);
            assert_eq!(pd_solve(ptr::null(), 0, &mut d), PdStatus::NullPointer);
        }
    }

    #[test]
    fn verify_user_decomposition() {
        let cycle = [0usize, 1, 1, 2, 2, 3, 3, 0];
        let mut g = ptr::null_mut();
        unsafe {
            assert_eq!(pd_graph_from_edges(4, cycle.as_ptr(), 4, &mut g), PdStatus::Ok);
            let d = pd_decomposition_new();
            let closed = [0usize, 1, 2, 3, 0];
            assert_eq!(pd_decomposition_push_path(d, closed.as_ptr(), closed.len()), PdStatus::Ok);
            let (mut valid, mut good) = (true, true);
            assert_eq!(pd_verify(g, d, &mut valid, &mut good), PdStatus::Ok);
            assert!(!valid && !good);
            assert!(last_error().contains("repeated vertex"));
            pd_decomposition_free(d);
            pd_graph_free(g);
        }
    }
}
