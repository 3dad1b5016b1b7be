use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn orbifold(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orbifold")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn lattice_info_on_e8_codes() {
    let (code, out, _) = orbifold(&["lattice", "info", "--C", &data("e8_k.code"), "--D", &data("tetracode.code")]);
    assert_eq!(code, 0);
    assert!(out.contains("rank        8"));
    assert!(out.contains("determinant 1"));
    assert!(out.contains("even        true"));
}

#[test]
fn theta_dump() {
    let (code, out, _) = orbifold(&["lattice", "theta", "--D", &data("tetracode.code"), "--order", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("q^2        240") && out.contains("q^4        2160"), "{out}");
}

#[test]
fn codes_check_reports_self_duality() {
    let (code, out, _) = orbifold(&["codes", "check", &data("hexacode.code")]);
    assert_eq!(code, 0);
    assert!(out.contains("self-dual       true") && out.contains("tau-invariant   true"));
}

#[test]
fn fusion_subcommands() {
    let (code, out, _) = orbifold(&["fusion", "mult", "V(c,0)", "V(c,0)", "--ring", "vl"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "V(c,0) × V(c,0) = V(0,0)[0] + V(0,0)[1] + V(0,0)[2] + 2 V(c,0)");
    let (code, out, _) = orbifold(&["fusion", "table", "--ring", "vl"]);
    assert_eq!(code, 0);
    assert!(out.lines().last().unwrap().ends_with("pass"));
    let (code, out, _) = orbifold(&["--format", "json", "fusion", "mult", "T(0,1)[0]", "T(0,1)[0]"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"product\": null"));
}

#[test]
fn twisted_catalog_counts() {
    let (code, out, _) = orbifold(&["twisted", "catalog", "--D", &data("tetracode.code")]);
    assert_eq!(code, 0);
    assert!(out.contains("1 classes; |D^⊥/D| = 1"));
}

#[test]
fn character_commands() {
    let (code, out, _) = orbifold(&["char", "module", "V(c,0)", "--order", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("lowest weight 1/2"));
    let (code, out, _) = orbifold(&["char", "decompose", "--D", &data("repetition3.code"), "--eta", "012", "--power", "1"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.matches("equal").count(), 4);
}

#[test]
fn verify_and_ops_exit_zero() {
    let (code, out, _) = orbifold(&["verify", "all"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"));
    let (code, out, _) = orbifold(&["ops", "tables"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("12/12").count(), 6);
}

#[test]
fn errors_have_diagnostics() {
    let (code, _, err) = orbifold(&["fusion"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
    let dir = std::env::temp_dir().join(format!("orbifold-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.code");
    std::fs::write(&bad, "kind: K\nlength: 2\ngenerators:\na q\n").unwrap();
    let (code, _, err) = orbifold(&["codes", "check", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 4, column 3"), "{err}");
    let (code, _, err) = orbifold(&["char", "module", "V(x,0)"]);
    assert_eq!(code, 2);
    assert!(err.contains("error"));
}
