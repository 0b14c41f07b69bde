//! End-to-end coverage of every CLI path against the worked fixtures,
//! including the error exits: 1 not found, 2 input error, 3 verification
//! failure, 4 budget exceeded.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn fx(name: &str) -> String {
    fixtures().join(name).to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modmotif"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).to_string()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn decompose_formats() {
    let out = run(&["decompose", "-g", &fx("example11.gm")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("- prime: v1 v2"));

    let out = run(&["decompose", "-g", &fx("example11.gm"), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["nodes"][0]["kind"], "prime");
    assert_eq!(doc["n"], 11);

    let out = run(&["decompose", "-g", &fx("example11.gm"), "--format", "dot"]);
    assert!(stdout(&out).starts_with("graph mdtree {"));
    assert!(stdout(&out).contains("n0 -- n1;"));
}

#[test]
fn decompose_input_errors() {
    let out = run(&["decompose", "-g", "/nonexistent/g.gm"]);
    assert_eq!(code(&out), 2);

    let tmp = tempfile::tempdir().unwrap();
    let bad = tmp.path().join("bad.gm");
    std::fs::write(&bad, "v 0 a\ne 0 0\n").unwrap();
    let out = run(&["decompose", "-g", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("self-loop"));

    let empty = tmp.path().join("empty.gm");
    std::fs::write(&empty, "# nothing\n").unwrap();
    let out = run(&["decompose", "-g", empty.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn usage_error_is_exit_2() {
    let out = run(&["frobnicate"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn solve_module_motif_found_and_not_found() {
    let out = run(&["solve", "module-motif", "-g", &fx("paths12.gm"), "-m", &fx("paths12.motif")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "v1_1 v1_3 v1_5 v3_2 v3_4 v3_6\n");

    let out = run(&[
        "solve", "module-motif", "-g", &fx("paths12.gm"), "-m", &fx("paths12_wrong.motif"),
    ]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "no solution\n");

    let out = run(&[
        "solve", "module-motif", "-g", &fx("paths12.gm"), "-m", &fx("paths12_wrong.motif"), "--json",
    ]);
    assert_eq!(code(&out), 1);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["found"], false);
}

#[test]
fn solve_module_motif_all_lists_every_solution() {
    let tmp = tempfile::tempdir().unwrap();
    let g = tmp.path().join("g.gm");
    let m = tmp.path().join("m.motif");
    std::fs::write(&g, "v 0 a\nv 1 a\nv 2 b\nv 3 b\n").unwrap();
    std::fs::write(&m, "a 1\nb 1\n").unwrap();
    let out = run(&[
        "solve", "module-motif", "-g", g.to_str().unwrap(), "-m", m.to_str().unwrap(), "--all",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0 2\n0 3\n1 2\n1 3\n");

    let out = run(&[
        "solve", "module-motif", "-g", g.to_str().unwrap(), "-m", m.to_str().unwrap(),
        "--all", "--cap", "2", "--json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["count"], 2);
}

#[test]
fn solve_rejects_bad_modes() {
    let tmp = tempfile::tempdir().unwrap();
    let g = tmp.path().join("list.gm");
    let m = tmp.path().join("m.motif");
    std::fs::write(&g, "v a red|blue\nv b green\ne a b\n").unwrap();
    std::fs::write(&m, "red 1\n").unwrap();
    // Simple-mode solver on a list-colored graph: input error.
    let out = run(&["solve", "module-motif", "-g", g.to_str().unwrap(), "-m", m.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    // Empty motif: input error.
    let empty = tmp.path().join("empty.motif");
    std::fs::write(&empty, "").unwrap();
    let out = run(&[
        "solve", "module-motif", "-g", &fx("paths12.gm"), "-m", empty.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn solve_strong_only_misses_weak_solution() {
    // The paths12 motif is realized only by a weak module (union of two
    // paths), so the strong-module scan comes up empty.
    let out = run(&["solve", "strong-only", "-g", &fx("paths12.gm"), "-m", &fx("paths12.motif")]);
    assert_eq!(code(&out), 1);

    // A single path's color triple is a strong module (the component).
    let tmp = tempfile::tempdir().unwrap();
    let m = tmp.path().join("triple.motif");
    std::fs::write(&m, "c1 1\nc3 1\nc5 1\n").unwrap();
    let out = run(&["solve", "strong-only", "-g", &fx("paths12.gm"), "-m", m.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "v1_1 v1_3 v1_5\n");
}

#[test]
fn solve_list_colored_reports_assignment() {
    let tmp = tempfile::tempdir().unwrap();
    let g = tmp.path().join("list.gm");
    let m = tmp.path().join("m.motif");
    std::fs::write(&g, "v a red|blue\nv b green\nv c blue\ne a b\ne b c\n").unwrap();
    std::fs::write(&m, "red 1\nblue 1\n").unwrap();
    let out = run(&["solve", "list-colored", "-g", g.to_str().unwrap(), "-m", m.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "a c\na=red c=blue\n");

    let out = run(&[
        "solve", "list-colored", "-g", g.to_str().unwrap(), "-m", m.to_str().unwrap(), "--json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["assignment"]["a"], "red");
    // {a, c} is found as a child union of the series root.
    assert_eq!(doc["tree_node_kind"], "series");
}

#[test]
fn oracle_commands() {
    let tmp = tempfile::tempdir().unwrap();
    let p3 = tmp.path().join("p3.gm");
    std::fs::write(&p3, "v a x\nv b x\nv c x\ne a b\ne b c\n").unwrap();
    let out = run(&["oracle", "enumerate-modules", "-g", p3.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "a\na b c\na c\nb\nc\n");

    let out = run(&["oracle", "find-motif", "-g", &fx("paths12.gm"), "-m", &fx("paths12.motif")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "v1_1 v1_3 v1_5 v3_2 v3_4 v3_6\n");

    let out = run(&["oracle", "mis", "-g", &fx("mis5.gm")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "v1 v5\n");

    let out = run(&["oracle", "setcover", "-i", &fx("cover3.txt")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "S1 S2\n");

    let out = run(&["oracle", "x3c", "-i", &fx("x3c6.txt")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "S1 S3\n");
}

#[test]
fn oracle_not_found_and_budget() {
    let tmp = tempfile::tempdir().unwrap();
    let sys = tmp.path().join("nocover.txt");
    std::fs::write(&sys, "3\n1 2 3\n1 2 3\n").unwrap();
    // Duplicate triple cannot cover exactly; and removing x1 entirely:
    let out = run(&["oracle", "x3c", "-i", sys.to_str().unwrap()]);
    assert_eq!(code(&out), 0); // one copy of {1,2,3} is an exact cover
    let sys2 = tmp.path().join("nocover2.txt");
    std::fs::write(&sys2, "6\n1 2 3\n1 4 5\n").unwrap();
    let out = run(&["oracle", "x3c", "-i", sys2.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "no exact cover\n");

    // Budget: a 5-vertex graph against --budget 3.
    let out = run(&["oracle", "mis", "-g", &fx("mis5.gm"), "--budget", "3"]);
    assert_eq!(code(&out), 4);
    assert!(stderr(&out).contains("budget"));

    // Uncoverable set system is an input error.
    let sys3 = tmp.path().join("uncov.txt");
    std::fs::write(&sys3, "3\n1 2\n").unwrap();
    let out = run(&["oracle", "setcover", "-i", sys3.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not covered"));
}

#[test]
fn gen_expansions_match_formulas() {
    let tmp = tempfile::tempdir().unwrap();
    let t = |n: &str| tmp.path().join(n).to_str().unwrap().to_string();

    let out = run(&["gen", "mis2maxmotif", "-i", &fx("mis5.gm"), "-o", &t("mm.gm")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("138 vertices"));
    assert!(stdout(&out).contains("motif size 132"));

    let out = run(&["gen", "sc2minsubst", "-i", &fx("cover3.txt"), "-o", &t("sc.gm")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("24 vertices"));
    assert!(stdout(&out).contains("motif size 13"));

    let out = run(&[
        "gen", "x3c2module", "-i", &fx("x3c6.txt"), "-o", &t("x.gm"),
        "--provenance", &t("x.prov.json"),
    ]);
    assert_eq!(code(&out), 0);
    // The committed paths12 fixture is exactly this generator's output.
    assert_eq!(
        std::fs::read(tmp.path().join("x.gm")).unwrap(),
        std::fs::read(fixtures().join("paths12.gm")).unwrap()
    );
    assert_eq!(
        std::fs::read(tmp.path().join("x.motif")).unwrap(),
        std::fs::read(fixtures().join("paths12.motif")).unwrap()
    );
}

#[test]
fn gen_corpus_writes_instances() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("corpus");
    let out = run(&[
        "gen", "corpus", "--seed", "7", "-o", dir.to_str().unwrap(),
        "--count", "4", "--min-n", "3", "--max-n", "6",
    ]);
    assert_eq!(code(&out), 0);
    let names: Vec<String> = {
        let mut v: Vec<String> = std::fs::read_dir(&dir)
            .unwrap()
            .map(|e| e.unwrap().file_name().to_str().unwrap().to_string())
            .collect();
        v.sort();
        v
    };
    assert_eq!(
        names,
        vec![
            "0000.gm", "0000.motif", "0001.gm", "0001.motif",
            "0002.gm", "0002.motif", "0003.gm", "0003.motif",
        ]
    );
}

#[test]
fn verify_lemma_pipeline() {
    let tmp = tempfile::tempdir().unwrap();
    let t = |n: &str| tmp.path().join(n).to_str().unwrap().to_string();

    assert_eq!(
        code(&run(&[
            "gen", "mis2maxmotif", "-i", &fx("mis5.gm"), "-o", &t("mm.gm"),
            "--provenance", &t("mm.prov.json"),
        ])),
        0
    );
    std::fs::write(tmp.path().join("is.txt"), "v3 v4\n").unwrap();
    let out = run(&[
        "verify", "lemma1", "-c", &t("mm.prov.json"), "-s", &t("is.txt"), "-o", &t("sol.txt"),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("|V'| = 55 >= |IS|*n^2 = 50"));
    assert!(stdout(&out).contains("VERIFIED"));

    // A dependent pair fails verification.
    std::fs::write(tmp.path().join("dep.txt"), "v1 v2\n").unwrap();
    let out = run(&["verify", "lemma1", "-c", &t("mm.prov.json"), "-s", &t("dep.txt")]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("adjacent"));

    let out = run(&["verify", "lemma2", "-c", &t("mm.prov.json"), "-s", &t("sol.txt")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("independent set: v3 v4"));
    assert!(stdout(&out).contains("= 2 >="));

    assert_eq!(
        code(&run(&[
            "gen", "sc2minsubst", "-i", &fx("cover3.txt"), "-o", &t("sc.gm"),
            "--provenance", &t("sc.prov.json"),
        ])),
        0
    );
    std::fs::write(tmp.path().join("cover.txt"), "S1 S2\n").unwrap();
    let out = run(&[
        "verify", "lemma3", "-c", &t("sc.prov.json"), "-s", &t("cover.txt"), "-o", &t("scsol.txt"),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("substitutions: 2 = |cover| = 2"));

    // Redundant covers are rejected by the forward construction.
    std::fs::write(tmp.path().join("redundant.txt"), "S1 S2 S3\n").unwrap();
    let out = run(&["verify", "lemma3", "-c", &t("sc.prov.json"), "-s", &t("redundant.txt")]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("redundant"));

    let out = run(&["verify", "lemma4", "-c", &t("sc.prov.json"), "-s", &t("scsol.txt")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("cover: S1 S2"));
    assert!(stdout(&out).contains("|S'| = 2 <= s = 2"));

    // A tampered certificate is rejected.
    let cert = std::fs::read_to_string(t("sc.prov.json")).unwrap();
    assert!(cert.contains("\"cr\""));
    std::fs::write(tmp.path().join("tampered.json"), cert.replace("\"cr\"", "\"cx\"")).unwrap();
    let out = run(&["verify", "lemma3", "-c", &t("tampered.json"), "-s", &t("cover.txt")]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_x3c_equiv_and_tree() {
    let out = run(&["verify", "x3c-equiv", "-i", &fx("x3c6.txt")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("exact cover: S1 S3"));
    assert!(stdout(&out).contains("VERIFIED"));

    let tmp = tempfile::tempdir().unwrap();
    let sys = tmp.path().join("no.txt");
    std::fs::write(&sys, "6\n1 2 3\n1 4 5\n").unwrap();
    let out = run(&["verify", "x3c-equiv", "-i", sys.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("exact cover: none"));

    let out = run(&["verify", "tree", "-g", &fx("example11.gm")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("tree valid (17 nodes, 11 leaves)"));
}

#[test]
fn motif_with_unseen_color_is_absent() {
    let tmp = tempfile::tempdir().unwrap();
    let m = tmp.path().join("m.motif");
    std::fs::write(&m, "c1 1\nnosuch 1\n").unwrap();
    let out = run(&["solve", "module-motif", "-g", &fx("paths12.gm"), "-m", m.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
}
