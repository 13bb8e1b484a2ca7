//! Compiles the C smoke test against the generated header and the shared
//! library, then runs it.

use std::path::{Path, PathBuf};
use std::process::Command;

fn target_dir() -> PathBuf {
    // target/<profile>/deps/<test-binary>
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

fn shared_lib(dir: &Path) -> Option<PathBuf> {
    ["liblomax_ffi.so", "liblomax_ffi.dylib"]
        .iter()
        .map(|name| dir.join(name))
        .find(|p| p.exists())
}

#[test]
fn c_smoke_test_runs() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("cc not found; skipping");
        return;
    }
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let dir = target_dir();
    let lib = shared_lib(&dir).expect("cdylib not built next to the test binary");
    let out = tempfile::tempdir().unwrap();
    let exe = out.path().join("smoke");

    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-o")
        .arg(&exe)
        .arg(&lib)
        .arg(format!("-Wl,-rpath,{}", dir.display()))
        .arg("-lm")
        .status()
        .unwrap();
    assert!(status.success(), "compiling smoke.c failed");

    let run = Command::new(&exe).output().unwrap();
    assert!(
        run.status.success(),
        "smoke test failed: {}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}

#[test]
fn header_declares_public_api() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/lomax.h")).unwrap();
    for sym in [
        "lomax_last_error_message",
        "lomax_dataset_new",
        "lomax_dataset_free",
        "lomax_log_posterior",
        "lomax_fit",
        "lomax_fit_free",
        "lomax_fit_summary",
        "lomax_fit_psrf",
        "lomax_fit_copy_lambda_means",
        "typedef struct LomaxFit LomaxFit",
    ] {
        assert!(header.contains(sym), "{sym} missing from header");
    }
}
