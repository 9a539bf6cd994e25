//! End-to-end coverage of the `starcore` binary: exit codes, file outputs,
//! and byte-level determinism.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use starcore::matrix::Matrix;
use starcore::theorems::{check_corollary_3_3, Verdict};
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_starcore"))
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .env_remove("STARCORE_SEED")
        .output()
        .expect("binary runs")
}

fn write_matrix(dir: &Path, name: &str, rows: &[&[i64]]) -> PathBuf {
    let path = dir.join(name);
    let matrix = Matrix::from_int_rows(rows);
    fs::write(&path, serde_json::to_string_pretty(&matrix).unwrap()).unwrap();
    path
}

fn read_matrix(path: &Path) -> Matrix {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn stdout_str(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn inv_core_writes_matrix_and_certificate() {
    let tmp = TempDir::new().unwrap();
    let input = write_matrix(tmp.path(), "a.json", &[&[1, 1], &[0, 0]]);
    let out = tmp.path().join("core.json");
    let output = run_in(
        tmp.path(),
        &["inv", "--kind", "core", "--in", input.to_str().unwrap(), "--out", out.to_str().unwrap()],
    );
    assert!(output.status.success(), "{output:?}");
    assert_eq!(read_matrix(&out), Matrix::from_int_rows(&[&[1, 0], &[0, 0]]));
    let cert: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("core.json.cert.json")).unwrap())
            .unwrap();
    assert_eq!(cert["kind"], "core");
    assert_eq!(cert["index"], 1);
    assert!(cert["certificate"].as_array().unwrap().len() >= 3);
}

#[test]
fn inv_moore_penrose_of_zero_matrix() {
    let tmp = TempDir::new().unwrap();
    let input = write_matrix(tmp.path(), "z.json", &[&[0, 0, 0], &[0, 0, 0]]);
    let out = tmp.path().join("mp.json");
    let output = run_in(
        tmp.path(),
        &["inv", "--kind", "mp", "--in", input.to_str().unwrap(), "--out", out.to_str().unwrap()],
    );
    assert!(output.status.success());
    let result = read_matrix(&out);
    assert_eq!((result.rows(), result.cols()), (3, 2));
    assert!(result.is_zero());
}

#[test]
fn inv_group_of_nilpotent_exits_4() {
    let tmp = TempDir::new().unwrap();
    let input = write_matrix(tmp.path(), "n.json", &[&[0, 1], &[0, 0]]);
    let out = tmp.path().join("g.json");
    let output = run_in(
        tmp.path(),
        &["inv", "--kind", "group", "--in", input.to_str().unwrap(), "--out", out.to_str().unwrap()],
    );
    assert_eq!(output.status.code(), Some(4));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("no group inverse: rank(A^2) < rank(A)"), "{stderr}");
    assert!(!out.exists());
}

#[test]
fn inv_rejects_malformed_input() {
    let tmp = TempDir::new().unwrap();
    let input = tmp.path().join("bad.json");
    fs::write(&input, "{\"rows\": 1}").unwrap();
    let out = tmp.path().join("x.json");
    let output = run_in(
        tmp.path(),
        &["inv", "--kind", "mp", "--in", input.to_str().unwrap(), "--out", out.to_str().unwrap()],
    );
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn check_t31_on_orthogonal_diagonals_exits_0() {
    let tmp = TempDir::new().unwrap();
    let a = write_matrix(tmp.path(), "a.json", &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
    let b = write_matrix(tmp.path(), "b.json", &[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
    let report = tmp.path().join("report.json");
    let output = run_in(
        tmp.path(),
        &[
            "check", "--theorem", "T3.1", "--a", a.to_str().unwrap(), "--b", b.to_str().unwrap(),
            "--report", report.to_str().unwrap(),
        ],
    );
    assert!(output.status.success(), "{output:?}");
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(doc["verdict"], "EquivalenceHolds");
    assert_eq!(doc["theorem"], "T3.1");
    assert!(stdout_str(&output).contains("EquivalenceHolds"));
}

#[test]
fn check_l24_with_nilpotent_a_exits_2() {
    let tmp = TempDir::new().unwrap();
    let a = write_matrix(tmp.path(), "a.json", &[&[0, 1], &[0, 0]]);
    let b = write_matrix(tmp.path(), "b.json", &[&[1, 0], &[0, 1]]);
    let report = tmp.path().join("report.json");
    let output = run_in(
        tmp.path(),
        &[
            "check", "--theorem", "L2.4", "--a", a.to_str().unwrap(), "--b", b.to_str().unwrap(),
            "--report", report.to_str().unwrap(),
        ],
    );
    assert_eq!(output.status.code(), Some(2));
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(doc["verdict"], "HypothesisFailed");
    assert_eq!(doc["hypotheses"][0]["name"], "a is EP");
    assert_eq!(doc["hypotheses"][0]["holds"], false);
}

#[test]
fn check_t43_one_by_one_negative_lambda_exits_0() {
    let tmp = TempDir::new().unwrap();
    let a = write_matrix(tmp.path(), "a.json", &[&[1]]);
    let b = write_matrix(tmp.path(), "b.json", &[&[1]]);
    let c = write_matrix(tmp.path(), "c.json", &[&[1]]);
    let d = write_matrix(tmp.path(), "d.json", &[&[-1]]);
    let report = tmp.path().join("report.json");
    let output = run_in(
        tmp.path(),
        &[
            "check", "--theorem", "T4.3", "--a", a.to_str().unwrap(), "--b", b.to_str().unwrap(),
            "--c", c.to_str().unwrap(), "--d", d.to_str().unwrap(), "--lambda", "-1",
            "--report", report.to_str().unwrap(),
        ],
    );
    assert!(output.status.success(), "{output:?}");
}

#[test]
fn check_missing_required_matrix_exits_1() {
    let tmp = TempDir::new().unwrap();
    let a = write_matrix(tmp.path(), "a.json", &[&[1]]);
    let report = tmp.path().join("report.json");
    let output = run_in(
        tmp.path(),
        &[
            "check", "--theorem", "L4.1", "--a", a.to_str().unwrap(),
            "--report", report.to_str().unwrap(),
        ],
    );
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn check_rejects_unknown_flag() {
    let tmp = TempDir::new().unwrap();
    let output = run_in(tmp.path(), &["check", "--theorem", "T3.1", "--frobnicate", "x"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn gen_ep_is_deterministic_and_respects_rank() {
    let tmp = TempDir::new().unwrap();
    let args = ["gen", "--family", "ep", "--n", "4", "--rank", "2", "--seed", "7", "--out", "out"];
    let first = run_in(tmp.path(), &args);
    assert!(first.status.success(), "{first:?}");
    let path = tmp.path().join("out/ep_n4_r2_s7.json");
    let bytes_one = fs::read(&path).unwrap();
    let matrix = read_matrix(&path);
    assert_eq!(matrix.rank(), 2);

    let second = run_in(tmp.path(), &args);
    assert!(second.status.success());
    assert_eq!(bytes_one, fs::read(&path).unwrap(), "re-run must be bit-identical");

    // rank 0 gives the zero matrix.
    let zero_run = run_in(
        tmp.path(),
        &["gen", "--family", "ep", "--n", "3", "--rank", "0", "--out", "out"],
    );
    assert!(zero_run.status.success());
    assert!(read_matrix(&tmp.path().join("out/ep_n3_r0_s0.json")).is_zero());
}

#[test]
fn gen_commuting_pair_passes_c33_hypotheses() {
    let tmp = TempDir::new().unwrap();
    let output = run_in(
        tmp.path(),
        &["gen", "--family", "commuting-ep-pair", "--n", "2", "--seed", "1", "--out", "pairs"],
    );
    assert!(output.status.success(), "{output:?}");
    let a = read_matrix(&tmp.path().join("pairs/commuting-ep-pair_n2_s1_a.json"));
    let b = read_matrix(&tmp.path().join("pairs/commuting-ep-pair_n2_s1_b.json"));
    let report = check_corollary_3_3(&a, &b).unwrap();
    assert_ne!(report.verdict, Verdict::HypothesisFailed);
}

#[test]
fn gen_triangular_passes_triangular_hypotheses() {
    let tmp = TempDir::new().unwrap();
    let output = run_in(
        tmp.path(),
        &["gen", "--family", "triangular", "--n", "3", "--rank", "2", "--seed", "4", "--out", "tri"],
    );
    assert!(output.status.success(), "{output:?}");
    let p = read_matrix(&tmp.path().join("tri/triangular_n3_r2_s4_p.json"));
    let x = read_matrix(&tmp.path().join("tri/triangular_n3_r2_s4_x.json"));
    assert!(p.is_projection());
    assert_eq!(p.rank(), 2);
    let report = starcore::theorems::check_lemma_2_2(&p, &x).unwrap();
    assert_ne!(report.verdict, Verdict::HypothesisFailed);
}

#[test]
fn gen_rejects_bad_parameters() {
    let tmp = TempDir::new().unwrap();
    let bad_rank = run_in(
        tmp.path(),
        &["gen", "--family", "ep", "--n", "2", "--rank", "5", "--out", "x"],
    );
    assert_eq!(bad_rank.status.code(), Some(1));
    let bad_family = run_in(tmp.path(), &["gen", "--family", "nope", "--n", "2", "--out", "x"]);
    assert_eq!(bad_family.status.code(), Some(1));
    let rank_for_pair = run_in(
        tmp.path(),
        &["gen", "--family", "commuting-ep-pair", "--n", "2", "--rank", "1", "--out", "x"],
    );
    assert_eq!(rank_for_pair.status.code(), Some(1));
}

#[test]
fn suite_single_theorem_is_deterministic() {
    let tmp = TempDir::new().unwrap();
    let args = ["suite", "--theorem", "T3.1", "--trials", "1", "--seed", "9"];
    let first = run_in(tmp.path(), &args);
    let second = run_in(tmp.path(), &args);
    assert!(first.status.success(), "{first:?}");
    assert_eq!(first.stdout, second.stdout, "identical seeds must print identical reports");
}

#[test]
fn suite_all_small_run_exits_0() {
    let tmp = TempDir::new().unwrap();
    let output = run_in(
        tmp.path(),
        &["suite", "--theorem", "all", "--trials", "2", "--size", "3", "--seed", "42"],
    );
    assert!(output.status.success(), "{output:?}");
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&output)).unwrap();
    let theorems = doc["theorems"].as_array().unwrap();
    assert_eq!(theorems.len(), 11);
    for entry in theorems {
        assert_eq!(entry["equivalence_holds"], 2);
        assert_eq!(entry["violations"], 0);
    }
}

#[test]
fn suite_zero_trials_is_a_usage_error() {
    let tmp = TempDir::new().unwrap();
    let output = run_in(tmp.path(), &["suite", "--trials", "0"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn suite_jobs_do_not_change_output() {
    let tmp = TempDir::new().unwrap();
    let base = [
        "suite", "--theorem", "L2.4", "--trials", "4", "--size", "3", "--seed", "11",
    ];
    let mut one = base.to_vec();
    one.extend(["--jobs", "1"]);
    let mut four = base.to_vec();
    four.extend(["--jobs", "4"]);
    let sequential = run_in(tmp.path(), &one);
    let parallel = run_in(tmp.path(), &four);
    assert!(sequential.status.success());
    assert_eq!(sequential.stdout, parallel.stdout);
}

#[test]
fn suite_seed_env_fallback_and_flag_priority() {
    let tmp = TempDir::new().unwrap();
    let flagged = run_in(tmp.path(), &["suite", "--theorem", "C3.3", "--trials", "2", "--seed", "5"]);
    let env_only = bin()
        .args(["suite", "--theorem", "C3.3", "--trials", "2"])
        .current_dir(tmp.path())
        .env("STARCORE_SEED", "5")
        .output()
        .unwrap();
    let flag_wins = bin()
        .args(["suite", "--theorem", "C3.3", "--trials", "2", "--seed", "5"])
        .current_dir(tmp.path())
        .env("STARCORE_SEED", "99")
        .output()
        .unwrap();
    assert!(flagged.status.success());
    assert_eq!(flagged.stdout, env_only.stdout);
    assert_eq!(flagged.stdout, flag_wins.stdout);

    let bad_env = bin()
        .args(["suite", "--theorem", "C3.3", "--trials", "1"])
        .current_dir(tmp.path())
        .env("STARCORE_SEED", "not-a-seed")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(1));
}
