use std::io::Write;
use std::process::{Command, Stdio};

use lcodes::cli::run;

fn call(args: &[&str], input: &str) -> (i32, String, String) {
    let mut argv = vec!["lcodes"];
    argv.extend_from_slice(args);
    let mut stdin = input.as_bytes();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(argv, &mut stdin, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str], input: &str) -> String {
    let (code, out, err) = call(args, input);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn named_then_swe() {
    let code = ok(&["named", "Upsilon3"], "");
    assert_eq!(ok(&["wenum", "--kind", "swe"], &code), "x^3 + 3*x*z^2 + 3*y^2*z + z^3\n");
    assert_eq!(ok(&["wenum", "--kind", "euclid"], &code), "a^6 + 6*a^2*b^4 + b^6\n");
    assert_eq!(ok(&["wenum", "--kind", "hamming"], &code), "u^3 + 3*u*v^2 + 4*v^3\n");
}

#[test]
fn classify_then_census() {
    let db = ok(&["classify", "--length", "2"], "");
    assert_eq!(db.lines().count(), 5);
    let census = ok(&["census"], &db);
    assert!(census.starts_with("classes 5\n"), "{census}");
    let db = ok(&["classify", "--length", "3", "--threads", "1"], "");
    assert!(ok(&["census", "-"], &db).starts_with("classes 13\n"));
}

#[test]
fn mass_report() {
    assert_eq!(ok(&["mass", "--length", "3"], ""), "135 OK\n");
    assert_eq!(ok(&["mass", "--length", "3", "--even"], ""), "30 OK\n");
}

#[test]
fn json_output_is_tagged() {
    let out = ok(&["--json", "mass", "--length", "2"], "");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "lcodes/1");
    assert_eq!(v["class_sum"], "15");
    assert_eq!(v["match"], true);
    let code = ok(&["named", "Gamma1"], "");
    let v: serde_json::Value = serde_json::from_str(&ok(&["info", "--json"], &code)).unwrap();
    assert_eq!(v["self_dual"], true);
    assert_eq!(v["code"]["basis"][0], "1");
}

#[test]
fn maps_and_symmetry() {
    let xi = ok(&["named", "Xi1"], "");
    assert_eq!(ok(&["map", "--which", "phi"], &xi), "K n=1\nb\n");
    let eps = ok(&["named", "epsilon2"], "");
    let marked = ok(&["map", "--which", "phi-inv", "--marking", "ab"], &eps);
    assert!(marked.starts_with("L n=2\n"));
    let info = ok(&["info"], &marked);
    assert!(info.contains("even false"), "{info}");
    assert_eq!(ok(&["map", "--which", "beta"], &xi), "101\n");
    let aut = ok(&["aut"], &ok(&["named", "Upsilon3"], ""));
    assert!(aut.starts_with("order 6\n"), "{aut}");
    let canon = ok(&["canon"], &ok(&["named", "Gamma1 Xi1"], ""));
    assert_eq!(canon, ok(&["canon"], &ok(&["named", "Xi1 Gamma1"], "")));
}

#[test]
fn equivalence_files() {
    let dir = std::env::temp_dir().join(format!("lcodes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.txt");
    let b = dir.join("b.txt");
    let c = dir.join("c.txt");
    std::fs::write(&a, "L n=2\n1w\n").unwrap();
    std::fs::write(&b, "L n=2\nW1\n").unwrap();
    std::fs::write(&c, "L n=2\n11\n").unwrap();
    let t = ok(&["equiv", a.to_str().unwrap(), b.to_str().unwrap()], "");
    assert_ne!(t, "inequivalent\n");
    assert_eq!(ok(&["equiv", a.to_str().unwrap(), c.to_str().unwrap()], ""), "inequivalent\n");
    let out = dir.join("db.txt");
    ok(&["classify", "--length", "3", "--even", "--out", out.to_str().unwrap()], "");
    let census = ok(&["census", out.to_str().unwrap()], "");
    assert!(census.starts_with("classes 4\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn markings_and_extremal() {
    let d = ok(&["named", "deltaplus_3"], "");
    let lines = ok(&["markings"], &d);
    let orbits: u64 = lines
        .lines()
        .map(|l| l.split(' ').nth(2).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!((lines.lines().count(), orbits), (5, 27));
    let ext = ok(&["extremal", "--length", "4", "--even"], "");
    assert!(ext.contains("extremal 2\n"), "{ext}");
}

#[test]
fn tables_command() {
    assert_eq!(ok(&["tables", "1"], ""), lcodes::tables::TABLE1);
}

#[test]
fn exit_codes() {
    let (code, _, err) = call(&["named", "Nope"], "");
    assert_eq!(code, 1);
    assert!(err.contains("unknown code name"));
    assert_eq!(call(&["frobnicate"], "").0, 2);
    assert_eq!(call(&["wenum", "--kind", "bogus"], "").0, 2);
    assert_eq!(call(&["info"], "L n=2\n1\n").0, 1);
    assert_eq!(call(&["map", "--which", "phi", "--marking", "a"], "L n=1\n1\n").0, 2);
    assert_eq!(call(&["--help"], "").0, 0);
}

#[test]
fn binary_pipes_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lcodes"))
        .args(["wenum", "--kind", "swe"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"L n=2\n1w\nw1\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "x^2 + 2*y*z + z^2\n");
}
