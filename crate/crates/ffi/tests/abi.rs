use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use vizbound_ffi::*;

fn graph(spec: &str) -> *mut VzGraph {
    let s = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { vz_graph_from_spec(s.as_ptr(), &mut g) },
        VzStatus::Ok
    );
    g
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { vz_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(vz_last_error()) }
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn graph_round_trip_through_handles() {
    let edges = [0usize, 1, 1, 2, 2, 3];
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { vz_graph_from_edges(4, edges.as_ptr(), 3, &mut g) },
        VzStatus::Ok
    );
    assert_eq!(unsafe { vz_graph_vertex_count(g) }, 4);
    assert_eq!(unsafe { vz_graph_edge_count(g) }, 3);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { vz_graph_to_graph6(g, &mut s) }, VzStatus::Ok);
    let g6 = take_string(s);
    assert_eq!(g6, "Ch");

    let c = CString::new(g6).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(
        unsafe { vz_graph_from_graph6(c.as_ptr(), &mut back) },
        VzStatus::Ok
    );
    assert_eq!(unsafe { vz_graph_edge_count(back) }, 3);
    unsafe {
        vz_graph_free(g);
        vz_graph_free(back);
    }
}

#[test]
fn domination_and_witness_buffer() {
    let g = graph("grid:4x4");
    let mut gamma = 0;
    let mut buf = [usize::MAX; 4];
    let st = unsafe { vz_domination_number(g, 0, &mut gamma, buf.as_mut_ptr(), buf.len()) };
    assert_eq!(st, VzStatus::Ok);
    assert_eq!(gamma, 4);
    assert!(buf.iter().all(|&v| v < 16));

    let mut small = [0usize; 2];
    let st = unsafe { vz_domination_number(g, 0, &mut gamma, small.as_mut_ptr(), 2) };
    assert_eq!(st, VzStatus::BufferTooSmall);
    assert_eq!(gamma, 4);

    let st = unsafe { vz_domination_number(g, 1, &mut gamma, ptr::null_mut(), 0) };
    assert_eq!(st, VzStatus::Limit);
    assert!(last_error().contains("budget"));
    unsafe { vz_graph_free(g) };
}

#[test]
fn product_and_pair_report() {
    let (g, h) = (graph("path:4"), graph("path:4"));
    let mut pg = ptr::null_mut();
    assert_eq!(
        unsafe { vz_cartesian_product(g, h, 0, &mut pg) },
        VzStatus::Ok
    );
    assert_eq!(unsafe { vz_graph_vertex_count(pg) }, 16);
    assert_eq!(unsafe { vz_graph_edge_count(pg) }, 24);
    assert_eq!(
        unsafe { vz_cartesian_product(g, h, 10, &mut pg) },
        VzStatus::Limit
    );

    let mut r = VzPairReport::default();
    assert_eq!(unsafe { vz_check_pair(g, h, 0, &mut r) }, VzStatus::Ok);
    assert_eq!((r.gamma_g, r.gamma_h, r.gamma_product), (2, 2, 4));
    assert_eq!(
        (r.bound_new, r.bound_st_half, r.bound_cs, r.slack_new),
        (3, 3, 2, 1)
    );
    assert!(r.trace_ok && !r.violation);

    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { vz_pair_report_json(g, h, 0, true, &mut s) },
        VzStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["gamma_product"], 4);
    assert_eq!(v["trace"]["passed"], true);
    unsafe {
        vz_graph_free(pg);
        vz_graph_free(g);
        vz_graph_free(h);
    }
}

#[test]
fn trace_and_remark_json() {
    let (g, h) = (graph("path:4"), graph("path:4"));
    // (0,1) (1,3) (2,0) (3,2)
    let d = [1usize, 7, 8, 14];
    let mut passed = false;
    let mut s = ptr::null_mut();
    let st = unsafe { vz_trace_json(g, h, d.as_ptr(), d.len(), 0, &mut passed, &mut s) };
    assert_eq!(st, VzStatus::Ok);
    assert!(passed);
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["sizes"]["k"], 2);

    let st = unsafe { vz_trace_json(g, h, d.as_ptr(), 1, 0, &mut passed, &mut s) };
    assert_eq!(st, VzStatus::NotDominating);

    assert_eq!(
        unsafe { vz_remark_search(g, h, 1000, &mut s) },
        VzStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert!(v["found"].is_null());
    assert_eq!(v["truncated"], false);
    unsafe {
        vz_graph_free(g);
        vz_graph_free(h);
    }
}

#[test]
fn null_and_malformed_arguments() {
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { vz_graph_from_spec(ptr::null(), &mut g) },
        VzStatus::NullPointer
    );
    let bad = CString::new("?!").unwrap();
    assert_eq!(
        unsafe { vz_graph_from_graph6(bad.as_ptr(), &mut g) },
        VzStatus::InvalidInput
    );
    assert!(!last_error().is_empty());
    let edges = [0usize, 5];
    assert_eq!(
        unsafe { vz_graph_from_edges(3, edges.as_ptr(), 1, &mut g) },
        VzStatus::InvalidInput
    );
    let mut r = VzPairReport::default();
    assert_eq!(
        unsafe { vz_check_pair(ptr::null(), ptr::null(), 0, &mut r) },
        VzStatus::NullPointer
    );
    assert_eq!(unsafe { vz_graph_vertex_count(ptr::null()) }, 0);
    unsafe {
        vz_graph_free(ptr::null_mut());
        vz_string_free(ptr::null_mut());
    }
    // a successful call clears the message
    let ok = CString::new("A_").unwrap();
    assert_eq!(
        unsafe { vz_graph_from_graph6(ok.as_ptr(), &mut g) },
        VzStatus::Ok
    );
    assert!(last_error().is_empty());
    unsafe { vz_graph_free(g) };
}

#[test]
fn generated_header_declares_every_export() {
    let header = std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/vizbound.h"),
    )
    .unwrap();
    for name in [
        "vz_last_error",
        "vz_graph_from_graph6",
        "vz_graph_from_edges",
        "vz_graph_from_spec",
        "vz_graph_free",
        "vz_graph_vertex_count",
        "vz_graph_edge_count",
        "vz_graph_to_graph6",
        "vz_string_free",
        "vz_cartesian_product",
        "vz_domination_number",
        "vz_check_pair",
        "vz_pair_report_json",
        "vz_trace_json",
        "vz_remark_search",
        "typedef struct VzGraph VzGraph",
        "VZ_STATUS_OK = 0",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

/// Compiles the C smoke program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // CARGO_TARGET_TMPDIR is <target>/tmp; the library sits in the profile dir
    // next to the test executable
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libvizbound_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("vizbound_smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
