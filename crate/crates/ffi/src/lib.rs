//! C ABI over `zf-core`.
//!
//! Graphs, catalogs and zero forcing graphs are opaque handles created by a
//! `*_new` call and released by the matching `*_free`. Every fallible call
//! returns a [`ZfStatus`]; on failure [`zf_last_error`] describes the problem.
//! Strings returned by this library must be released with [`zf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use zf_core::forcing::{enumerate_min_zfs, is_zero_forcing_set, zero_forcing_number};
use zf_core::laws::{run_law, LawParams};
use zf_core::reconfig::{from_catalog, zfg_distance};
use zf_core::{io, Error, Graph, ReconfigGraph, VertexSet, ZfsCatalog};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZfStatus {
    Ok = 0,
    ErrInput = 1,
    ErrCapacity = 2,
    ErrContract = 3,
    ErrUnknownLaw = 4,
    ErrIo = 5,
    ErrNullPointer = 6,
    ErrBufferTooSmall = 7,
    ErrPanic = 8,
}

pub struct ZfGraph {
    inner: Graph,
}

pub struct ZfCatalog {
    inner: ZfsCatalog,
}

pub struct ZfReconfig {
    inner: ReconfigGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> ZfStatus {
    match e {
        Error::Input(_) => ZfStatus::ErrInput,
        Error::Capacity { .. } => ZfStatus::ErrCapacity,
        Error::Contract(_) => ZfStatus::ErrContract,
        Error::UnknownLaw(_) => ZfStatus::ErrUnknownLaw,
        Error::Io(_) => ZfStatus::ErrIo,
    }
}

fn fail(status: ZfStatus, msg: impl Into<String>) -> ZfStatus {
    set_error(msg.into());
    status
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), ZfStatus>) -> ZfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ZfStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(ZfStatus::ErrPanic, "internal panic"),
    }
}

trait OrStatus<T> {
    fn or_status(self) -> Result<T, ZfStatus>;
}

impl<T> OrStatus<T> for zf_core::Result<T> {
    fn or_status(self) -> Result<T, ZfStatus> {
        self.map_err(|e| fail(status_of(&e), e.to_string()))
    }
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, ZfStatus> {
    p.as_ref().ok_or_else(|| fail(ZfStatus::ErrNullPointer, "null handle"))
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, ZfStatus> {
    p.as_mut().ok_or_else(|| fail(ZfStatus::ErrNullPointer, "null output pointer"))
}

unsafe fn slice<'a>(p: *const usize, len: usize) -> Result<&'a [usize], ZfStatus> {
    if len == 0 {
        Ok(&[])
    } else if p.is_null() {
        Err(fail(ZfStatus::ErrNullPointer, "null array with nonzero length"))
    } else {
        Ok(std::slice::from_raw_parts(p, len))
    }
}

unsafe fn string<'a>(p: *const c_char) -> Result<&'a str, ZfStatus> {
    if p.is_null() {
        return Err(fail(ZfStatus::ErrNullPointer, "null string"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(ZfStatus::ErrInput, "string is not UTF-8"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn vertex_set(g: &Graph, members: &[usize]) -> Result<VertexSet, ZfStatus> {
    VertexSet::new(g.order(), members.iter().copied()).or_status()
}

/// Copies the last error message of this thread, or returns NULL if there is none.
#[no_mangle]
pub extern "C" fn zf_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().clone()).map_or(ptr::null_mut(), into_c_string)
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a graph on `n` vertices from `m` edges stored as `2 * m` endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or be NULL when `m` is 0);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_new(
    n: usize,
    edges: *const usize,
    m: usize,
    out_graph: *mut *mut ZfGraph,
) -> ZfStatus {
    guard(|| {
        let target = out(out_graph)?;
        let len = m.checked_mul(2).ok_or_else(|| fail(ZfStatus::ErrInput, "edge count overflow"))?;
        let flat = slice(edges, len)?;
        let g = Graph::new(n, flat.chunks_exact(2).map(|p| (p[0], p[1]))).or_status()?;
        *target = Box::into_raw(Box::new(ZfGraph { inner: g }));
        Ok(())
    })
}

/// Parses an edge-list or JSON graph.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_parse(text: *const c_char, out_graph: *mut *mut ZfGraph) -> ZfStatus {
    guard(|| {
        let target = out(out_graph)?;
        let g = io::parse_graph(string(text)?).or_status()?;
        *target = Box::into_raw(Box::new(ZfGraph { inner: g }));
        Ok(())
    })
}

/// Builds a named family such as `"cycle"` with parameters `params[0..len]`.
///
/// # Safety
/// `name` must be a NUL-terminated string, `params` must hold `len` values,
/// and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_family(
    name: *const c_char,
    params: *const usize,
    len: usize,
    out_graph: *mut *mut ZfGraph,
) -> ZfStatus {
    guard(|| {
        let target = out(out_graph)?;
        let g = zf_core::families::by_name(string(name)?, slice(params, len)?).or_status()?;
        *target = Box::into_raw(Box::new(ZfGraph { inner: g }));
        Ok(())
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_free(g: *mut ZfGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_order(g: *const ZfGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.order())
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_size(g: *const ZfGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.size())
}

/// The graph as JSON; free with [`zf_string_free`]. NULL for a NULL handle.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_to_json(g: *const ZfGraph) -> *mut c_char {
    g.as_ref().map_or(ptr::null_mut(), |g| into_c_string(io::write_json(&g.inner)))
}

/// # Safety
/// `g` must be a live graph handle and `out_z` writable.
#[no_mangle]
pub unsafe extern "C" fn zf_zero_forcing_number(g: *const ZfGraph, out_z: *mut usize) -> ZfStatus {
    guard(|| {
        let g = deref(g)?;
        let target = out(out_z)?;
        *target = zero_forcing_number(&g.inner).or_status()?;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live graph handle, `set` must hold `len` values and
/// `out_result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_is_zero_forcing_set(
    g: *const ZfGraph,
    set: *const usize,
    len: usize,
    out_result: *mut bool,
) -> ZfStatus {
    guard(|| {
        let g = deref(g)?;
        let target = out(out_result)?;
        let s = vertex_set(&g.inner, slice(set, len)?)?;
        *target = is_zero_forcing_set(&g.inner, &s);
        Ok(())
    })
}

/// Enumerates every minimum zero forcing set.
///
/// # Safety
/// `g` must be a live graph handle and `out_catalog` writable.
#[no_mangle]
pub unsafe extern "C" fn zf_catalog_new(g: *const ZfGraph, out_catalog: *mut *mut ZfCatalog) -> ZfStatus {
    guard(|| {
        let g = deref(g)?;
        let target = out(out_catalog)?;
        let c = enumerate_min_zfs(&g.inner).or_status()?;
        *target = Box::into_raw(Box::new(ZfCatalog { inner: c }));
        Ok(())
    })
}

/// # Safety
/// `c` must be NULL or a catalog handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zf_catalog_free(c: *mut ZfCatalog) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// The zero forcing number recorded in the catalog, 0 for NULL.
///
/// # Safety
/// `c` must be NULL or a live catalog handle.
#[no_mangle]
pub unsafe extern "C" fn zf_catalog_z(c: *const ZfCatalog) -> usize {
    c.as_ref().map_or(0, |c| c.inner.z)
}

/// Number of minimum zero forcing sets, 0 for NULL.
///
/// # Safety
/// `c` must be NULL or a live catalog handle.
#[no_mangle]
pub unsafe extern "C" fn zf_catalog_len(c: *const ZfCatalog) -> usize {
    c.as_ref().map_or(0, |c| c.inner.sets.len())
}

/// Copies set `index` (members ascending) into `buf[0..cap]`; `written` gets
/// the member count. Sets are in lexicographic order.
///
/// # Safety
/// `c` must be a live catalog handle, `buf` must have room for `cap` values
/// and `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_catalog_set(
    c: *const ZfCatalog,
    index: usize,
    buf: *mut usize,
    cap: usize,
    written: *mut usize,
) -> ZfStatus {
    guard(|| {
        let c = deref(c)?;
        let count = out(written)?;
        let s = c
            .inner
            .sets
            .get(index)
            .ok_or_else(|| fail(ZfStatus::ErrInput, format!("set index {index} out of range")))?;
        *count = s.len();
        if s.len() > cap {
            return Err(fail(ZfStatus::ErrBufferTooSmall, format!("need room for {} vertices", s.len())));
        }
        if !s.is_empty() {
            if buf.is_null() {
                return Err(fail(ZfStatus::ErrNullPointer, "null buffer"));
            }
            ptr::copy_nonoverlapping(s.members().as_ptr(), buf, s.len());
        }
        Ok(())
    })
}

/// Builds the zero forcing graph from a catalog.
///
/// # Safety
/// `c` must be a live catalog handle and `out_reconfig` writable.
#[no_mangle]
pub unsafe extern "C" fn zf_reconfig_new(c: *const ZfCatalog, out_reconfig: *mut *mut ZfReconfig) -> ZfStatus {
    guard(|| {
        let c = deref(c)?;
        let target = out(out_reconfig)?;
        *target = Box::into_raw(Box::new(ZfReconfig {
            inner: from_catalog(&c.inner),
        }));
        Ok(())
    })
}

/// # Safety
/// `r` must be NULL or a reconfiguration handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zf_reconfig_free(r: *mut ZfReconfig) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// The zero forcing graph itself as a new graph handle (node `i` is catalog set `i`).
///
/// # Safety
/// `r` must be a live reconfiguration handle and `out_graph` writable.
#[no_mangle]
pub unsafe extern "C" fn zf_reconfig_graph(r: *const ZfReconfig, out_graph: *mut *mut ZfGraph) -> ZfStatus {
    guard(|| {
        let r = deref(r)?;
        let target = out(out_graph)?;
        *target = Box::into_raw(Box::new(ZfGraph {
            inner: r.inner.graph.clone(),
        }));
        Ok(())
    })
}

/// # Safety
/// `r` must be NULL or a live reconfiguration handle.
#[no_mangle]
pub unsafe extern "C" fn zf_reconfig_is_connected(r: *const ZfReconfig) -> bool {
    r.as_ref().is_some_and(|r| r.inner.graph.is_connected())
}

/// Token-jumping distance between two minimum sets; `-1` when unreachable.
///
/// # Safety
/// `r` must be a live handle, `a`/`b` must hold `a_len`/`b_len` values and
/// `out_distance` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_reconfig_distance(
    r: *const ZfReconfig,
    a: *const usize,
    a_len: usize,
    b: *const usize,
    b_len: usize,
    out_distance: *mut i64,
) -> ZfStatus {
    guard(|| {
        let r = deref(r)?;
        let target = out(out_distance)?;
        let universe = r.inner.nodes.first().map_or(0, VertexSet::universe);
        let sa = VertexSet::new(universe, slice(a, a_len)?.iter().copied()).or_status()?;
        let sb = VertexSet::new(universe, slice(b, b_len)?.iter().copied()).or_status()?;
        let d = zfg_distance(&r.inner, &sa, &sb).or_status()?;
        *target = d.map_or(-1, |d| d as i64);
        Ok(())
    })
}

/// Runs a registered law. `max_n` of 0 selects the law's default. On
/// success `passed` tells whether every instance held and `report_json`
/// (if non-NULL) receives the JSON report, to be freed with [`zf_string_free`].
///
/// # Safety
/// `law_id` must be a NUL-terminated string, `passed` writable, and
/// `report_json` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn zf_run_law(
    law_id: *const c_char,
    max_n: usize,
    seed: u64,
    passed: *mut bool,
    report_json: *mut *mut c_char,
) -> ZfStatus {
    guard(|| {
        let id = string(law_id)?;
        let flag = out(passed)?;
        let params = LawParams {
            max_n: (max_n > 0).then_some(max_n),
            seed,
            samples: None,
        };
        let report = run_law(id, &params).or_status()?;
        *flag = report.passed();
        if let Some(target) = report_json.as_mut() {
            *target = into_c_string(serde_json::to_string(&report).expect("report serializes"));
        }
        Ok(())
    })
}
