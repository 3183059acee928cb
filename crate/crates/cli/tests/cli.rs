use std::path::PathBuf;
use std::process::{Command, Output};

use selfext_cli::report::{SummaryRow, VerdictRecord};

fn selfext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfext"))
        .args(args)
        .env_remove(selfext_cli::OUTPUT_DIR_ENV)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    path.to_string_lossy().into_owned()
}

#[test]
fn kupisch_scalars() {
    let out = selfext(&[
        "kupisch", "rigid", "--series", "4,4", "--shape", "cyclic", "--module", "0,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "non-rigid");

    let out = selfext(&[
        "kupisch", "pd", "--series", "2,3", "--shape", "cyclic", "--module", "0,1",
    ]);
    assert_eq!(stdout(&out).trim(), "2");

    let out = selfext(&[
        "kupisch", "hom", "--series", "3,3", "--module", "0,3", "--target", "0,1",
    ]);
    assert_eq!(stdout(&out).trim(), "1");

    let out = selfext(&[
        "kupisch", "ext", "--series", "4,4", "--module", "0,2", "--target", "0,2", "--i", "5",
    ]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn invalid_input_exits_two() {
    let out = selfext(&["kupisch", "validate", "--series", "4,2", "--shape", "cyclic"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("MonotonicityViolation"));

    let out = selfext(&["kupisch", "rigid", "--series", "2,2", "--module", "0,5"]);
    assert_eq!(out.status.code(), Some(2));

    let out = selfext(&["kupisch", "tate", "--series", "2,3", "--module", "0,1", "--i", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotSelfInjective"));

    let out = selfext(&["quiver", "period", "--catalog", "triangle", "--module", "P0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = selfext(&["catalog", "verify", "no_such_algebra"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kupisch_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("alg.toml");
    std::fs::write(&path, "schema_version = 1\nshape = \"cyclic\"\nkupisch = [4, 4]\n").unwrap();
    let out = selfext(&["kupisch", "rigid", "--file", path.to_str().unwrap(), "--module", "0,2"]);
    assert_eq!(stdout(&out).trim(), "non-rigid");
}

#[test]
fn tate_negative_degree() {
    // Ω(0,1) = (1,2) over [3,3], and Ext^1((1,2),(0,1)) vanishes
    let out = selfext(&["kupisch", "tate", "--series", "3,3", "--module", "0,1", "--i", "-2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn json_report_carries_schema_and_seed() {
    let out = selfext(&[
        "--format", "json", "--seed", "9", "kupisch", "pd", "--series", "2,3", "--module", "0,1",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["seed"], 9);
    assert_eq!(v["proj_dim"]["finite"], 2);
}

#[test]
fn local_sweep_streams_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_selfext"))
        .args([
            "--format",
            "json",
            "--output",
            "sweep.jsonl",
            "sweep",
            "--n-max",
            "1",
            "--c-max",
            "5",
        ])
        .args(["--summary", "summary.csv"])
        .env(selfext_cli::OUTPUT_DIR_ENV, dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let lines = std::fs::read_to_string(dir.path().join("sweep.jsonl")).unwrap();
    let records: Vec<VerdictRecord> = lines.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!records.is_empty());
    for r in &records {
        assert_eq!(r.schema_version, 1);
        assert_ne!(r.verdict.status, selfext_core::verdict::Status::Fail, "{r:?}");
        let back: VerdictRecord = serde_json::from_str(&serde_json::to_string(r).unwrap()).unwrap();
        assert_eq!(&back, r);
    }
    let ext: Vec<_> = records
        .iter()
        .filter(|r| r.verdict.check == "ext_nonvanishing" && r.verdict.instance != "[1] cyclic")
        .collect();
    assert_eq!(ext.len(), 4);
    assert!(ext
        .iter()
        .all(|r| r.verdict.detail.contains("certified for all degrees")));

    let mut reader = csv::Reader::from_path(dir.path().join("summary.csv")).unwrap();
    let rows: Vec<SummaryRow> = reader.deserialize().map(Result::unwrap).collect();
    assert_eq!(rows.len(), records.len());
}

#[test]
fn empty_sweep_range_is_not_an_error() {
    let out = selfext(&[
        "--format", "json", "sweep", "--n-max", "1", "--c-max", "5", "--shapes", "linear",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
}

#[test]
fn acceptance_sweep_command_passes() {
    let out = selfext(&[
        "--format",
        "json",
        "sweep",
        "--n-max",
        "2",
        "--c-max",
        "6",
        "--checks",
        "1.5,1.7,1.8,rigidity,oracle",
        "--p",
        "2,3",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn quiver_commands_on_data_files() {
    let out = selfext(&[
        "quiver",
        "ext",
        "--file",
        &data("loop_triangle.toml"),
        "--simple",
        "1",
        "--target",
        "1",
        "--i",
        "3",
    ]);
    assert_eq!(stdout(&out).trim(), "0");
    let out = selfext(&[
        "quiver",
        "ext",
        "--file",
        &data("loop_triangle.toml"),
        "--simple",
        "1",
        "--target",
        "1",
        "--i",
        "1",
    ]);
    assert_eq!(stdout(&out).trim(), "1");

    let out = selfext(&[
        "quiver",
        "period",
        "--file",
        &data("sd2b3_c1.toml"),
        "--module",
        "W",
        "--bound",
        "8",
    ]);
    assert_eq!(stdout(&out).trim(), "2");
    // with c = 0 the module W is its own syzygy
    let out = selfext(&[
        "quiver",
        "period",
        "--file",
        &data("sd2b3.toml"),
        "--module",
        "W",
        "--bound",
        "8",
    ]);
    assert_eq!(stdout(&out).trim(), "1");

    let out = selfext(&["--format", "json", "quiver", "build", "--file", &data("sd2b3.toml")]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["cartan"], serde_json::json!([[4, 2], [2, 4]]));
    assert_eq!(v["weakly_symmetric"], true);

    let out = selfext(&[
        "--format",
        "json",
        "quiver",
        "resolve",
        "--catalog",
        "triangle",
        "--module",
        "S0",
        "--depth",
        "4",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["steps"][4]["dims"], serde_json::json!([1, 0, 0]));
}

#[test]
fn module_expressions() {
    let out = selfext(&[
        "quiver",
        "period",
        "--catalog",
        "sd3c1",
        "--module",
        "arrow:rho",
        "--bound",
        "6",
    ]);
    assert_eq!(stdout(&out).trim(), "3");
    let out = selfext(&[
        "quiver",
        "period",
        "--catalog",
        "triangle",
        "--module",
        "S0+S1",
        "--bound",
        "8",
    ]);
    assert_eq!(stdout(&out).trim(), "4");
    let out = selfext(&[
        "quiver",
        "ext",
        "--catalog",
        "sd2a2",
        "--module",
        "omega:path:alpha.beta",
        "--target",
        "S1",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn data_files_match_catalog() {
    for entry in selfext_core::hybrid::catalog::entries() {
        let file = std::fs::read_to_string(data(&format!("{}.toml", entry.name))).unwrap();
        let exported = selfext(&["catalog", "export", entry.name]);
        assert_eq!(stdout(&exported), file, "data/{}.toml is stale", entry.name);
    }
}

#[test]
fn catalog_verification_examples() {
    for name in ["sd3c1", "triangle", "loop_triangle"] {
        let out = selfext(&["--format", "json", "catalog", "verify", name, "--depth", "12"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let records: Vec<VerdictRecord> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert!(
            records
                .iter()
                .all(|r| r.verdict.status == selfext_core::verdict::Status::Pass),
            "{name}"
        );
    }
    // the alias resolves to the same entry
    let out = selfext(&["catalog", "verify", "example_2_8"]);
    assert!(stdout(&out).contains("zero at [3, 6]"));
}

#[test]
fn csv_output() {
    let out = selfext(&["--format", "csv", "catalog", "verify", "gf2_c2"]);
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<SummaryRow> = reader.deserialize().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.instance == "gf2_c2"));
}
