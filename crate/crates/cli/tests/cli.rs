use std::io::Write;
use std::process::{Command, Output, Stdio};

use lcd_codes::constructions::{
    between, mod9_construction, repetition, zero_prefixed_repetition, Mod9Case,
};
use lcd_codes::{LinearCode, Prime};

fn lcd(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lcd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn lcd");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let out = lcd(args, stdin);
    assert!(
        out.status.success(),
        "lcd {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("lcd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn check_on_two_bit_example() {
    let path = temp_file("g.txt", "2 2 1\n0 1\n");
    let out = ok(&["check", path.to_str().unwrap()], None);
    assert!(out.contains("LCD: true"), "{out}");
    assert!(out.contains("hull_dim 0"), "{out}");
}

#[test]
fn mod9_case3_distance_through_a_pipe() {
    let g = ok(&["construct", "mod9-3", "--m", "1"], None);
    assert_eq!(ok(&["mindist", "-"], Some(&g)).trim(), "4");
}

#[test]
fn stated_bound_at_twelve() {
    assert_eq!(
        ok(
            &[
                "bound",
                "--n",
                "12",
                "--k",
                "2",
                "--q",
                "3",
                "--formula",
                "stated"
            ],
            None
        )
        .trim(),
        "4"
    );
    assert_eq!(
        ok(&["bound", "--n", "4", "--k", "2", "--q", "3"], None).trim(),
        "1"
    );
    assert_eq!(
        ok(
            &[
                "bound",
                "--n",
                "4",
                "--k",
                "2",
                "--q",
                "3",
                "--formula",
                "singleton"
            ],
            None
        )
        .trim(),
        "3"
    );
}

fn check_fields(text: &str) -> serde_json::Value {
    serde_json::from_str(text.trim()).unwrap()
}

#[test]
fn construct_then_check_matches_in_process() {
    let p3 = Prime::THREE;
    let first = repetition(4, p3).unwrap();
    let second = zero_prefixed_repetition(4, p3).unwrap();
    let a = temp_file("a.txt", &first.to_string());
    let b = temp_file("b.txt", &second.to_string());
    let cases: Vec<(Vec<&str>, LinearCode)> = vec![
        (vec!["repetition", "--n", "5"], repetition(5, p3).unwrap()),
        (
            vec!["repetition", "--n", "6", "--q", "2"],
            repetition(6, Prime::TWO).unwrap(),
        ),
        (
            vec!["zero-rep", "--n", "6"],
            zero_prefixed_repetition(6, p3).unwrap(),
        ),
        (
            vec!["zero-rep", "--n", "4", "--q", "7"],
            zero_prefixed_repetition(4, Prime::SEVEN).unwrap(),
        ),
        (
            vec!["mod9-3", "--m", "2"],
            mod9_construction(Mod9Case::Three, 2).unwrap(),
        ),
        (
            vec!["mod9-4", "--m", "1"],
            mod9_construction(Mod9Case::Four, 1).unwrap(),
        ),
        (
            vec!["between", a.to_str().unwrap(), b.to_str().unwrap()],
            between(&first, &second).unwrap(),
        ),
    ];
    for (args, code) in cases {
        let mut full = vec!["construct"];
        full.extend(&args);
        let text = ok(&full, None);
        assert_eq!(text, code.to_string(), "{args:?}");
        let reparsed = LinearCode::parse(&text).unwrap();
        assert_eq!(reparsed, code);
        let record = check_fields(&ok(&["check", "-", "--format", "structured"], Some(&text)));
        assert_eq!(record["is_lcd"], code.is_lcd(), "{args:?}");
        assert_eq!(record["hull_dim"], code.hull_dim(), "{args:?}");
        assert_eq!(record["n"], code.n());
        assert_eq!(record["k"], code.k());
    }
}

#[test]
fn between_subcommand_equals_construct_between() {
    let a = temp_file("c1.txt", "3 3 1\n1 1 1\n");
    let b = temp_file("c2.txt", "3 3 1\n0 1 1\n");
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    assert_eq!(
        ok(&["between", a, b], None),
        ok(&["construct", "between", a, b], None)
    );
}

#[test]
fn dual_and_weights() {
    let g = ok(&["construct", "repetition", "--n", "4"], None);
    let dual = ok(&["dual", "-"], Some(&g));
    assert_eq!(ok(&["mindist", "-"], Some(&dual)).trim(), "2");
    let w = ok(&["weights", "-", "--format", "structured"], Some(&g));
    let rec = check_fields(&w);
    assert_eq!(rec["d"], 4);
    assert_eq!(rec["t"], 1);
    assert_eq!(
        rec["weight_distribution"],
        serde_json::json!(["1", "0", "0", "0", "2"])
    );
}

#[test]
fn malformed_matrix_reports_position() {
    let out = lcd(&["check", "-"], Some("3 3 2\n1 0 2\n0 x 1\n"));
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(lcd(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(lcd(&["bound", "--n", "4"], None).status.code(), Some(1));
    assert_eq!(lcd(&["construct", "mod9-3"], None).status.code(), Some(1));
    assert_eq!(
        lcd(&["construct", "mod9-3", "--m", "1", "--case", "4"], None)
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        lcd(&["bound", "--n", "4", "--k", "2", "--q", "1"], None)
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        lcd(&["search", "--n", "4", "--k", "2", "--q", "4"], None)
            .status
            .code(),
        Some(1)
    );
    assert_eq!(lcd(&["--help"], None).status.code(), Some(0));
}

#[test]
fn table_is_identical_across_job_counts() {
    let base = [
        "table",
        "--n",
        "2..10",
        "--k",
        "1..3",
        "--q",
        "3",
        "--format",
        "structured",
        "--seed",
        "7",
    ];
    let one = ok(&[&base[..], &["--jobs", "1"]].concat(), None);
    let four = ok(&[&base[..], &["--jobs", "4"]].concat(), None);
    assert_eq!(one, four);
    assert_eq!(one.lines().count(), 9 * 3);
    for line in one.lines() {
        let rec: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(rec["version"], 1);
    }
}

#[test]
fn search_records_seed_when_falling_back() {
    let out = lcd(
        &[
            "search",
            "--n",
            "14",
            "--k",
            "4",
            "--q",
            "3",
            "--budget",
            "100",
            "--trials",
            "50",
            "--format",
            "structured",
        ],
        None,
    );
    assert!(out.status.success());
    let rec: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rec["method"], "random");
    assert!(rec["seed"].is_u64());
    let seed = rec["seed"].as_u64().unwrap().to_string();
    let again = ok(
        &[
            "search",
            "--n",
            "14",
            "--k",
            "4",
            "--q",
            "3",
            "--budget",
            "100",
            "--trials",
            "50",
            "--format",
            "structured",
            "--seed",
            &seed,
        ],
        None,
    );
    assert_eq!(String::from_utf8(out.stdout).unwrap(), again);
}

#[test]
fn exhaustive_search_refutes_stated_bound_cell() {
    let rec = check_fields(&ok(
        &[
            "search",
            "--n",
            "4",
            "--k",
            "2",
            "--q",
            "3",
            "--format",
            "structured",
        ],
        None,
    ));
    assert_eq!(rec["d_lcd"], 2);
    assert_eq!(rec["method"], "exhaustive");
    assert_eq!(rec["explored_count"], 45);
}

#[test]
fn verify_paper_strict_gates_on_refutations() {
    let out = lcd(
        &[
            "verify-paper",
            "--strict",
            "--format",
            "structured",
            "--seed",
            "3",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["record"], "summary");
    assert_eq!(last["seed"], 3);
    assert!(last["refuted"].as_u64().unwrap() > 0);
    assert_eq!(
        lcd(&["verify-paper", "--seed", "3"], None).status.code(),
        Some(0)
    );
}
