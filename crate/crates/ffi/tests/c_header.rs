//! Compiles and runs a C program against the generated header and the
//! static library.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "coadjoint.h"

int main(void) {
    CoadjGraph *g = NULL;
    if (coadj_graph_from_name("K5", &g) != COADJ_STATUS_OK) return 1;
    CoadjPoly *p = NULL;
    if (coadj_family_poly(g, COADJ_KIND_CO_ADJOINT, &p) != COADJ_STATUS_OK) return 2;
    char *text = NULL;
    if (coadj_poly_to_string(p, &text) != COADJ_STATUS_OK) return 3;
    int same = strcmp(text, "x^5-10x^4+25x^3-20x^2+5x") == 0;
    printf("%s\n", text);
    coadj_string_free(text);
    coadj_poly_free(p);
    coadj_graph_free(g);
    CoadjGraph *bad = NULL;
    if (coadj_graph_from_graph6("~", &bad) != COADJ_STATUS_PARSE) return 4;
    if (coadj_last_error_message() == NULL) return 5;
    return same ? 0 : 6;
}
"#;

fn static_lib() -> Option<PathBuf> {
    // target/<profile>/deps/c_header-<hash>
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let lib = profile_dir.join("libcoadjoint_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_and_runs() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(include.join("coadjoint.h").exists(), "header not generated");
    let Some(lib) = static_lib() else {
        panic!("static library not found next to the test binary");
    };
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("coadjoint_smoke.c");
    let bin = dir.join("coadjoint_smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("run cc");
    assert!(status.success(), "C compile failed");
    let out = Command::new(&bin).output().expect("run smoke binary");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "x^5-10x^4+25x^3-20x^2+5x\n");
}
