use std::ffi::{CStr, CString};
use std::ptr;

use coadjoint_ffi::*;

fn owned(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { coadj_string_free(s) };
    out
}

fn last_error() -> String {
    let p = coadj_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn complete_graph_polynomial() {
    let name = CString::new("K4").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(coadj_graph_from_name(name.as_ptr(), &mut g), CoadjStatus::Ok);
        assert_eq!(coadj_graph_vertex_count(g), 4);
        assert_eq!(coadj_graph_edge_count(g), 6);
        let mut p = ptr::null_mut();
        assert_eq!(coadj_family_poly(g, CoadjKind::CoAdjoint as u32, &mut p), CoadjStatus::Ok);
        assert_eq!(coadj_poly_degree(p), 4);
        let mut c = 0i64;
        assert_eq!(coadj_poly_coeff_i64(p, 2, &mut c), CoadjStatus::Ok);
        assert_eq!(c, 7);
        let mut s = ptr::null_mut();
        assert_eq!(coadj_poly_to_string(p, &mut s), CoadjStatus::Ok);
        assert_eq!(owned(s), "x^4-6x^3+7x^2-2x");
        let mut q = ptr::null_mut();
        assert_eq!(coadj_coadjoint_via_tutte(g, &mut q), CoadjStatus::Ok);
        assert_eq!(coadj_poly_coeff_string(q, 1, &mut s), CoadjStatus::Ok);
        assert_eq!(owned(s), "-2");
        assert_eq!(coadj_tutte_eval(g, 1, -1, &mut s), CoadjStatus::Ok);
        assert_eq!(owned(s), "2");
        coadj_poly_free(p);
        coadj_poly_free(q);
        coadj_graph_free(g);
    }
}

#[test]
fn graph6_round_trip_and_buffers() {
    let line = CString::new("Bw").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(coadj_graph_from_graph6(line.as_ptr(), &mut g), CoadjStatus::Ok);
        let mut needed = 0usize;
        assert_eq!(coadj_graph_to_graph6(g, ptr::null_mut(), 0, &mut needed), CoadjStatus::BufferTooSmall);
        assert_eq!(needed, 3);
        let mut buf = vec![0 as std::ffi::c_char; needed];
        assert_eq!(coadj_graph_to_graph6(g, buf.as_mut_ptr(), buf.len(), ptr::null_mut()), CoadjStatus::Ok);
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "Bw");
        coadj_graph_free(g);
    }
}

#[test]
fn graph_from_edges() {
    let pairs = [0u32, 1, 1, 2, 2, 0];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(coadj_graph_from_edges(3, pairs.as_ptr(), 3, &mut g), CoadjStatus::Ok);
        let mut p = ptr::null_mut();
        assert_eq!(coadj_family_poly(g, CoadjKind::Chromatic as u32, &mut p), CoadjStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(coadj_poly_to_string(p, &mut s), CoadjStatus::Ok);
        assert_eq!(owned(s), "x^3-3x^2+2x");
        coadj_poly_free(p);
        coadj_graph_free(g);
        assert_eq!(coadj_graph_from_edges(3, pairs.as_ptr(), 0, &mut g), CoadjStatus::Ok);
        assert_eq!(coadj_graph_edge_count(g), 0);
        coadj_graph_free(g);
    }
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    unsafe {
        let bad = CString::new("Q5").unwrap();
        assert_eq!(coadj_graph_from_name(bad.as_ptr(), &mut g), CoadjStatus::UnknownGraph);
        assert!(last_error().contains("Q5"));
        let bad = CString::new("~~").unwrap();
        assert_eq!(coadj_graph_from_graph6(bad.as_ptr(), &mut g), CoadjStatus::Parse);
        let big = CString::new("K40").unwrap();
        assert_eq!(coadj_graph_from_name(big.as_ptr(), &mut g), CoadjStatus::Capacity);
        let c2 = CString::new("C2").unwrap();
        assert_eq!(coadj_graph_from_name(c2.as_ptr(), &mut g), CoadjStatus::Domain);
        let pairs = [0u32, 0];
        assert_eq!(coadj_graph_from_edges(2, pairs.as_ptr(), 1, &mut g), CoadjStatus::InvalidEdge);
        assert_eq!(coadj_graph_from_name(ptr::null(), &mut g), CoadjStatus::NullPointer);
        let k3 = CString::new("K3").unwrap();
        assert_eq!(coadj_graph_from_name(k3.as_ptr(), ptr::null_mut()), CoadjStatus::NullPointer);
        assert_eq!(coadj_graph_from_name(k3.as_ptr(), &mut g), CoadjStatus::Ok);
        assert!(coadj_last_error_message().is_null());
        let mut p = ptr::null_mut();
        assert_eq!(coadj_family_poly(g, 9, &mut p), CoadjStatus::InvalidArgument);
        assert_eq!(coadj_family_poly(ptr::null(), 0, &mut p), CoadjStatus::NullPointer);
        coadj_graph_free(g);
        assert_eq!(coadj_poly_degree(ptr::null()), -1);
        coadj_graph_free(ptr::null_mut());
        coadj_poly_free(ptr::null_mut());
        coadj_string_free(ptr::null_mut());
    }
}

#[test]
fn numerics() {
    let mut k = 0.0;
    unsafe {
        assert_eq!(coadj_sokal_constant(1e-6, &mut k), CoadjStatus::Ok);
        assert!((k - 7.963907).abs() < 1e-5);
        assert_eq!(coadj_sokal_constant(1e-12, &mut k), CoadjStatus::Domain);
        let mut e = [0u64; 8];
        assert_eq!(coadj_zigzag(7, e.as_mut_ptr(), e.len()), CoadjStatus::Ok);
        assert_eq!(e, [1, 1, 1, 2, 5, 16, 61, 272]);
        assert_eq!(coadj_zigzag(7, e.as_mut_ptr(), 3), CoadjStatus::BufferTooSmall);
    }
}
