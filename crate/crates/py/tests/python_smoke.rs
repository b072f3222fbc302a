use std::path::Path;
use std::process::Command;

/// Runs python/smoke_test.py against the freshly built extension when a
/// Python interpreter is available.
#[test]
fn python_smoke_script() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let script = root.join("python/smoke_test.py");
    let Ok(out) = Command::new("python3").arg(&script).output() else {
        eprintln!("python3 not found; skipping");
        return;
    };
    let stdout = String::from_utf8_lossy(&out.stdout);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(out.status.success(), "{stdout}\n{stderr}");
    assert!(stdout.contains("python smoke test: ok"));
}
