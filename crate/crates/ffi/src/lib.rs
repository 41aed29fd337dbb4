//! C ABI over `coadjoint-core`.
//!
//! Graphs and polynomials are opaque heap handles released with their
//! `_free` function. Every fallible call returns a [`CoadjStatus`]; on
//! failure a description is available from [`coadj_last_error_message`] on
//! the same thread. Strings returned through `char **` are owned by the
//! caller and released with [`coadj_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use coadjoint_core::analysis::sokal_constant;
use coadjoint_core::graph::{parse_graph6, NamedGraph, SimpleGraph};
use coadjoint_core::oracles::zigzag_numbers;
use coadjoint_core::tutte::{specialize_coadjoint, tutte_value};
use coadjoint_core::{family_poly, Error, FamilyKind, IntPoly};
use num_traits::ToPrimitive;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoadjStatus {
    Ok = 0,
    NullPointer = 1,
    /// A string argument is not valid UTF-8 or a kind is out of range.
    InvalidArgument = 2,
    Capacity = 3,
    InvalidEdge = 4,
    Parse = 5,
    UnknownGraph = 6,
    Domain = 7,
    Numeric = 8,
    Consistency = 9,
    BufferTooSmall = 10,
    /// The value does not fit the requested integer type.
    Overflow = 11,
    Panic = 12,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoadjKind {
    Matching = 0,
    Chromatic = 1,
    Adjoint = 2,
    CoAdjoint = 3,
}

fn family_kind(raw: u32) -> Result<FamilyKind, Fail> {
    Ok(match raw {
        x if x == CoadjKind::Matching as u32 => FamilyKind::Matching,
        x if x == CoadjKind::Chromatic as u32 => FamilyKind::Chromatic,
        x if x == CoadjKind::Adjoint as u32 => FamilyKind::Adjoint,
        x if x == CoadjKind::CoAdjoint as u32 => FamilyKind::CoAdjoint,
        other => return Err(Fail(CoadjStatus::InvalidArgument, format!("unknown kind {other}"))),
    })
}

/// A simple graph on at most 32 vertices.
pub struct CoadjGraph(SimpleGraph);

/// A polynomial with arbitrary-precision integer coefficients.
pub struct CoadjPoly(IntPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> CoadjStatus {
    match e {
        Error::Capacity { .. } => CoadjStatus::Capacity,
        Error::InvalidEdge { .. } => CoadjStatus::InvalidEdge,
        Error::Parse { .. } => CoadjStatus::Parse,
        Error::UnknownGraph(_) => CoadjStatus::UnknownGraph,
        Error::Domain(_) => CoadjStatus::Domain,
        Error::Numeric(_) => CoadjStatus::Numeric,
        Error::Consistency(_) => CoadjStatus::Consistency,
    }
}

struct Fail(CoadjStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> CoadjStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CoadjStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            CoadjStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(CoadjStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(CoadjStatus::InvalidArgument, format!("{what} is not valid UTF-8")))
}

unsafe fn graph_ref<'a>(g: *const CoadjGraph) -> Result<&'a SimpleGraph, Fail> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn poly_ref<'a>(p: *const CoadjPoly) -> Result<&'a IntPoly, Fail> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| null("polynomial"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(s)
        .map_err(|_| Fail(CoadjStatus::Consistency, "string contains NUL".into()))?
        .into_raw();
    Ok(())
}

/// Description of the last failure on this thread, or NULL. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn coadj_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses one graph6 line.
///
/// # Safety
/// `line` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn coadj_graph_from_graph6(line: *const c_char, out: *mut *mut CoadjGraph) -> CoadjStatus {
    guard(|| {
        let g = parse_graph6(text(line, "graph6 text")?)?;
        put(out, CoadjGraph(g))
    })
}

/// Builds `K<n>`, `K<m>,<n>`, `P<n>`, `C<n>` or `E<n>`.
///
/// # Safety
/// `name` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn coadj_graph_from_name(name: *const c_char, out: *mut *mut CoadjGraph) -> CoadjStatus {
    guard(|| {
        let g = NamedGraph::parse(text(name, "name")?)?.build()?;
        put(out, CoadjGraph(g))
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored as
/// `pairs[2i], pairs[2i+1]`.
///
/// # Safety
/// `pairs` must point to `2 * edge_count` values (may be NULL when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn coadj_graph_from_edges(
    n: usize,
    pairs: *const u32,
    edge_count: usize,
    out: *mut *mut CoadjGraph,
) -> CoadjStatus {
    guard(|| {
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if pairs.is_null() {
            return Err(null("pairs"));
        } else {
            std::slice::from_raw_parts(pairs, 2 * edge_count)
        };
        let edges: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        put(out, CoadjGraph(SimpleGraph::from_edges(n, &edges)?))
    })
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn coadj_graph_vertex_count(g: *const CoadjGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn coadj_graph_edge_count(g: *const CoadjGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Writes the graph6 encoding and a terminating NUL into `buf`. `needed`
/// (if not NULL) receives the required size including the NUL; when
/// `capacity` is smaller nothing is written and BufferTooSmall is returned.
///
/// # Safety
/// `buf` must have room for `capacity` bytes; `needed` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn coadj_graph_to_graph6(
    g: *const CoadjGraph,
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> CoadjStatus {
    guard(|| {
        let s = graph_ref(g)?.to_graph6();
        let size = s.len() + 1;
        if !needed.is_null() {
            *needed = size;
        }
        if capacity < size {
            return Err(Fail(CoadjStatus::BufferTooSmall, format!("need {size} bytes, have {capacity}")));
        }
        if buf.is_null() {
            return Err(null("buffer"));
        }
        ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
        *buf.add(s.len()) = 0;
        Ok(())
    })
}

/// # Safety
/// `g` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn coadj_graph_free(g: *mut CoadjGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Family polynomial of `g` by the edge recursion; `kind` is a
/// `CoadjKind` value.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn coadj_family_poly(g: *const CoadjGraph, kind: u32, out: *mut *mut CoadjPoly) -> CoadjStatus {
    guard(|| {
        let p = family_poly(graph_ref(g)?, family_kind(kind)?)?;
        put(out, CoadjPoly(p))
    })
}

/// Co-adjoint polynomial read off the Tutte polynomial.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn coadj_coadjoint_via_tutte(g: *const CoadjGraph, out: *mut *mut CoadjPoly) -> CoadjStatus {
    guard(|| {
        let p = specialize_coadjoint(graph_ref(g)?)?;
        put(out, CoadjPoly(p))
    })
}

/// Degree, or -1 for the zero polynomial or a NULL handle.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn coadj_poly_degree(p: *const CoadjPoly) -> i64 {
    p.as_ref()
        .and_then(|p| p.0.degree())
        .map_or(-1, |d| d as i64)
}

/// Coefficient of `x^k`; Overflow if it does not fit in 64 bits.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn coadj_poly_coeff_i64(p: *const CoadjPoly, k: usize, out: *mut i64) -> CoadjStatus {
    guard(|| {
        let c = poly_ref(p)?.coeff(k);
        let v = c
            .to_i64()
            .ok_or_else(|| Fail(CoadjStatus::Overflow, format!("coefficient {c} exceeds 64 bits")))?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = v;
        Ok(())
    })
}

/// Coefficient of `x^k` as a decimal string.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn coadj_poly_coeff_string(p: *const CoadjPoly, k: usize, out: *mut *mut c_char) -> CoadjStatus {
    guard(|| put_string(out, poly_ref(p)?.coeff(k).to_string()))
}

/// Text form such as `x^4-6x^3+7x^2-2x`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn coadj_poly_to_string(p: *const CoadjPoly, out: *mut *mut c_char) -> CoadjStatus {
    guard(|| put_string(out, poly_ref(p)?.to_string()))
}

/// # Safety
/// `p` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn coadj_poly_free(p: *mut CoadjPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn coadj_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `T(g; x, y)` as a decimal string.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn coadj_tutte_eval(g: *const CoadjGraph, x: i64, y: i64, out: *mut *mut c_char) -> CoadjStatus {
    guard(|| put_string(out, tutte_value(graph_ref(g)?, x, y)?.to_string()))
}

/// Minimum of `(a + e^a) / ln(1 + a e^{-a})` over `a > 0`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn coadj_sokal_constant(tolerance: f64, out: *mut f64) -> CoadjStatus {
    guard(|| {
        let k = sokal_constant(tolerance)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = k;
        Ok(())
    })
}

/// Writes `E_0..E_max_n` to `out`, which must hold `max_n + 1` values.
///
/// # Safety
/// `out` must have room for `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn coadj_zigzag(max_n: usize, out: *mut u64, capacity: usize) -> CoadjStatus {
    guard(|| {
        let values = zigzag_numbers(max_n)?;
        if capacity < values.len() {
            return Err(Fail(
                CoadjStatus::BufferTooSmall,
                format!("need {} values, have {capacity}", values.len()),
            ));
        }
        if out.is_null() {
            return Err(null("output pointer"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_overflow() {
        let big = IntPoly::from_i64s(&[i64::MAX]);
        let p = CoadjPoly(&big * &big);
        let mut c = 0i64;
        let status = unsafe { coadj_poly_coeff_i64(&p, 0, &mut c) };
        assert_eq!(status, CoadjStatus::Overflow);
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { coadj_poly_coeff_string(&p, 0, &mut s) }, CoadjStatus::Ok);
        let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
        unsafe { coadj_string_free(s) };
        assert_eq!(text, "85070591730234615847396907784232501249");
    }
}
