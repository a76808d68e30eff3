//! Compiles a small C program against the generated header and the static
//! library, then runs it.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "mdepth.h"

int main(void) {
    MdIdeal *ideal = NULL;
    if (md_ideal_parse("x1*x3,x1*x4,x2*x3,x2*x4", 0, &ideal) != MD_STATUS_OK) return 10;
    MdProfile *p = NULL;
    if (md_profile_compute(ideal, &p) != MD_STATUS_OK) return 11;
    if (md_profile_depth(p) != 1 || md_profile_mdepth(p) != 2) return 12;
    if (md_profile_maximal_depth(p) || !md_profile_generalized_cm(p)) return 13;
    char *json = NULL;
    if (md_profile_to_json(p, &json) != MD_STATUS_OK) return 14;
    if (strstr(json, "\"depth\": 1") == NULL) return 15;
    md_string_free(json);
    md_profile_free(p);
    md_ideal_free(ideal);

    MdIdeal *bad = NULL;
    if (md_ideal_parse("x1^", 0, &bad) != MD_STATUS_MALFORMED) return 16;
    if (strncmp(md_last_error(), "malformed-input", 15) != 0) return 17;
    puts("ok");
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links() {
    let crate_dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libmdepth_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let work = std::env::temp_dir().join(format!("mdepth-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("smoke.c");
    let bin = work.join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("a C compiler on PATH");
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&bin).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
    std::fs::remove_dir_all(&work).ok();
}
