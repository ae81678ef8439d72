use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fblow::Dossier;
use tempfile::TempDir;

fn fblow(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fblow"));
    cmd.args(args).env_remove("FBLOW_BUDGET_SECONDS");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn dossier(out: &Output) -> Dossier {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    Dossier::from_json(&String::from_utf8(out.stdout.clone()).unwrap()).unwrap()
}

const D41: &str = r#"{"char": 2, "vars": ["x", "y", "z"], "relations": ["z^2+x^2*y+x*y^2+x*y*z"], "name": "d4-1"}"#;
const E60: &str = r#"{"char": 2, "vars": ["x", "y", "z"], "relations": ["z^2+x^3+y^2*z"]}"#;
const PLANE: &str = r#"{"char": 2, "vars": ["x", "y"]}"#;

#[test]
fn rees_of_the_plane_at_the_origin() {
    let dir = TempDir::new().unwrap();
    let ring = write(&dir, "plane.json", PLANE);
    let d = dossier(&fblow(&["rees", "--ring", s(&ring), "--ideal", "x,y"], &[]));
    let rees = d.rees.unwrap();
    assert_eq!(rees.ideal, vec!["y*t0 + x*t1".to_string()]);
    assert_eq!(rees.generators, vec!["x".to_string(), "y".to_string()]);
    assert!(d.charts.is_empty());
}

#[test]
fn push_e6_gives_two_rank_two_blocks() {
    let dir = TempDir::new().unwrap();
    let ring = write(&dir, "e60.json", E60);
    let d = dossier(&fblow(&["push", "--ring", s(&ring), "--e", "1"], &[]));
    let push = d.pushforward.unwrap();
    assert_eq!(push.rank, Some(4));
    let ranks: Vec<usize> = push.blocks.iter().map(|b| b.rank).collect();
    assert_eq!(ranks, vec![2, 2]);
    assert_eq!(push.blocks[0].signature, push.blocks[1].signature);
}

#[test]
fn fblowup_d4_round_trips() {
    let dir = TempDir::new().unwrap();
    let ring = write(&dir, "d41.json", D41);
    let out = dir.path().join("d41-out.json");
    let run = fblow(&["fblowup", "--ring", s(&ring), "--e", "1", "--out", s(&out)], &[]);
    assert!(run.status.success());
    let text = fs::read_to_string(&out).unwrap();
    let d = Dossier::from_json(&text).unwrap();
    assert_eq!(d.to_json(), text);
    assert_eq!(d.schema, 1);
    assert_eq!(d.seed, 0x5eed);
    let ranks: Vec<usize> = d.pushforward.as_ref().unwrap().blocks.iter().map(|b| b.rank).collect();
    assert_eq!(ranks, vec![1, 1, 1, 1]);
    assert_eq!(d.kunz, Some(true));
    assert!(d.charts.iter().any(|c| c.smooth == Some(false)));
    assert!(d.timings.is_none());
    assert!(!dir.path().join("d41-out.json.tmp").exists());
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let ring = write(&dir, "d41.json", D41);
    let a = fblow(&["fblowup", "--ring", s(&ring), "--e", "1"], &[]);
    let b = fblow(&["fblowup", "--ring", s(&ring), "--e", "1"], &[]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_and_timings_are_recorded() {
    let dir = TempDir::new().unwrap();
    let ring = write(&dir, "e60.json", E60);
    let d = dossier(&fblow(
        &["--seed", "7", "--timings", "push", "--ring", s(&ring), "--e", "1"],
        &[],
    ));
    assert_eq!(d.seed, 7);
    assert!(d.timings.unwrap().contains_key("total"));
}

#[test]
fn villamayor_from_e_and_from_module() {
    let dir = TempDir::new().unwrap();
    let ring = write(&dir, "plane.json", PLANE);
    // the maximal ideal, presented by its Koszul relation
    let m = write(&dir, "m.json", r#"[["y"], ["x"]]"#);
    let d = dossier(&fblow(&["villamayor", "--ring", s(&ring), "--module", s(&m)], &[]));
    let mut gens = d.villamayor.unwrap();
    gens.sort();
    assert_eq!(gens, vec!["x".to_string(), "y".to_string()]);
    let ring = write(&dir, "e60.json", E60);
    let d = dossier(&fblow(&["villamayor", "--ring", s(&ring), "--e", "1"], &[]));
    assert!(!d.villamayor.unwrap().is_empty());
}

#[test]
fn decompose_compares_blocks() {
    let dir = TempDir::new().unwrap();
    let ring = write(&dir, "e60.json", E60);
    let m = write(
        &dir,
        "a1sum.json",
        r#"[["z","y","x","0","0","0","0","0"],["y*z","z","0","x","0","0","0","0"],["x^2","0","z","y","0","0","0","0"],["0","x^2","y*z","z","0","0","0","0"],
           ["0","0","0","0","z","y","x","0"],["0","0","0","0","y*z","z","0","x"],["0","0","0","0","x^2","0","z","y"],["0","0","0","0","0","x^2","y*z","z"]]"#,
    );
    let d = dossier(&fblow(&["decompose", "--ring", s(&ring), "--matrix", s(&m)], &[]));
    let module = d.module.unwrap();
    assert_eq!(module.blocks.len(), 2);
    assert_eq!(d.comparisons.len(), 1);
    assert!(d.comparisons[0].same_signature);
    assert_eq!(d.comparisons[0].isomorphic, Some(true));
}

#[test]
fn catalog_lists_and_runs_atomically() {
    let list = fblow(&["catalog"], &[]);
    assert!(list.status.success());
    let text = String::from_utf8(list.stdout).unwrap();
    assert_eq!(text.lines().count(), 12);
    assert!(text.contains("e6-1") && text.contains("same ring as d4-1"));

    let dir = TempDir::new().unwrap();
    let out = dir.path().join("out");
    let run = fblow(
        &[
            "catalog",
            "--run-all",
            "--only",
            "d4-1,e6t-nfp",
            "--jobs",
            "2",
            "--out-dir",
            s(&out),
        ],
        &[],
    );
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    let mut names: Vec<String> = fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names, vec!["d4-1.json", "e6t-nfp.json"]);
    for n in &names {
        let d = Dossier::from_json(&fs::read_to_string(out.join(n)).unwrap()).unwrap();
        assert!(d.checks.unwrap().passed, "{n}");
    }
}

#[test]
fn catalog_export_writes_rings_and_matrices() {
    let dir = TempDir::new().unwrap();
    let run = fblow(
        &["catalog", "--export", "--only", "e6-0", "--out-dir", s(dir.path())],
        &[],
    );
    assert!(run.status.success());
    let ring = dir.path().join("e6-0.json");
    let a1 = dir.path().join("e6-0-A1.json");
    assert!(ring.exists() && a1.exists());
    let d = dossier(&fblow(&["decompose", "--ring", s(&ring), "--matrix", s(&a1)], &[]));
    assert_eq!(d.module.unwrap().blocks.len(), 1);
}

#[test]
fn exhausted_budget_writes_a_partial_dossier() {
    let dir = TempDir::new().unwrap();
    let ring = write(&dir, "d41.json", D41);
    let out = dir.path().join("partial.json");
    let run = fblow(
        &["fblowup", "--ring", s(&ring), "--e", "2", "--out", s(&out)],
        &[("FBLOW_BUDGET_SECONDS", "0.001")],
    );
    assert_eq!(run.status.code(), Some(3), "{}", String::from_utf8_lossy(&run.stderr));
    let d = Dossier::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(!d.status.complete);
    assert!(d.status.reason.is_some());
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let ring = write(&dir, "d41.json", D41);
    let code = |args: &[&str], envs: &[(&str, &str)]| fblow(args, envs).status.code();

    // usage
    assert_eq!(code(&["push", "--ring", s(&ring)], &[]), Some(1));
    assert_eq!(code(&["frobnicate"], &[]), Some(1));
    assert_eq!(code(&["push", "--ring", "/nonexistent.json", "--e", "1"], &[]), Some(1));
    assert_eq!(code(&["push", "--ring", s(&ring), "--e", "0"], &[]), Some(1));
    assert_eq!(code(&["catalog", "--only", "nope"], &[]), Some(1));
    assert_eq!(
        code(
            &["push", "--ring", s(&ring), "--e", "1"],
            &[("FBLOW_BUDGET_SECONDS", "soon")]
        ),
        Some(1)
    );
    assert_eq!(code(&["--help"], &[]), Some(0));

    // parse errors
    let bad_json = write(&dir, "bad.json", "{\"char\": 2,");
    assert_eq!(code(&["push", "--ring", s(&bad_json), "--e", "1"], &[]), Some(2));
    let bad_poly = write(
        &dir,
        "poly.json",
        r#"{"char": 2, "vars": ["x"], "relations": ["x^^2"]}"#,
    );
    assert_eq!(code(&["push", "--ring", s(&bad_poly), "--e", "1"], &[]), Some(2));
    let unknown = write(&dir, "var.json", r#"{"char": 2, "vars": ["x"], "relations": ["w"]}"#);
    assert_eq!(code(&["push", "--ring", s(&unknown), "--e", "1"], &[]), Some(2));
    let composite = write(&dir, "p4.json", r#"{"char": 4, "vars": ["x"]}"#);
    assert_eq!(code(&["push", "--ring", s(&composite), "--e", "1"], &[]), Some(2));
    assert_eq!(code(&["rees", "--ring", s(&ring), "--ideal", "x,q"], &[]), Some(2));
}
