//! Compiles and runs a small C program against the generated header and the
//! static library. Skipped when no C compiler or static library is present.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "spaceform.h"

int main(void) {
    SfGroup *g = NULL;
    if (sf_build_tuple("TYPE=III;g=24;a=1;Gbar=[];b=1;theta=3", &g) != SF_STATUS_OK) return 1;
    if (sf_group_order(g) != 24) return 2;
    char *tuple = NULL;
    if (sf_classify(g, true, &tuple) != SF_STATUS_OK) return 3;
    int ok = strcmp(tuple, "TYPE=III;g=24;a=1;Gbar=[];b=1;theta=3") == 0;
    sf_string_free(tuple);
    sf_group_free(g);
    uint32_t bad[4] = {0, 1, 1, 1};
    if (sf_group_from_table(2, bad, &g) != SF_STATUS_INVALID_TABLE) return 4;
    printf("%s\n", sf_last_error_message());
    return ok ? 0 : 5;
}
"#;

fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links() {
    let lib = profile_dir().join("libspaceform_ffi.a");
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    if !lib.exists() || !include.join("spaceform.h").exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler, header or static library");
        return;
    }
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("smoke.c");
    let bin = dir.join("smoke");
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
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("NotLatinSquare:"));
}
