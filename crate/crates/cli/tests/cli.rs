use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn algknot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algknot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", stdout(o)))
}

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_valid(name: &str, doc: &Value) {
    let validator = jsonschema::validator_for(&schema(name)).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}\n{doc:#}");
    assert_eq!(doc["schema_version"], 1);
}

#[test]
fn pf_text_output() {
    let o = algknot(&["pf", "--exponents", "2,3", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "t^(5/6) + t^(7/6)");
}

#[test]
fn witt_false_exits_one() {
    let o = algknot(&["witt", "--a", "2,3", "--b", "2,5"]);
    assert_eq!(o.status.code(), Some(1));
    let doc = json_of(&o);
    assert_eq!(doc["witt_over_R"], false);
    assert_valid("witt", &doc);
    assert_eq!(
        algknot(&["witt", "--a", "2,3", "--b", "3,2"]).status.code(),
        Some(0)
    );
}

#[test]
fn example3_passes() {
    let o = algknot(&["example3", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json_of(&o);
    assert_eq!(doc["pass"], true);
    assert_valid("verification", &doc);
    let o = algknot(&["example3", "--n", "4", "--ps", "5"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    let o = algknot(&["pf", "--weights", "3/2,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));
    assert_eq!(
        algknot(&["pf", "--exponents", "2,x"]).status.code(),
        Some(2)
    );
    assert_eq!(
        algknot(&["cot", "--a", "5/2", "--b", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        algknot(&["witt", "--a", "2,3", "--b", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(algknot(&["pf"]).status.code(), Some(2));
    assert_eq!(algknot(&["example3", "--n", "4"]).status.code(), Some(2));
    assert_eq!(
        algknot(&["recover", "--lambdas", "5,1", "--count", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn documents_match_schemas() {
    let cases: &[(&str, &[&str])] = &[
        ("pf", &["pf", "--weights", "5/2,5"]),
        ("delta", &["delta", "--exponents", "2,3,7"]),
        ("signatures", &["sig", "--exponents", "2,3,2"]),
        ("signatures", &["sig", "--exponents", "2,3"]),
        ("cot", &["cot", "--a", "2,3", "--b", "2,3"]),
        ("report", &["report", "--a", "8,8,4,4", "--b", "6,6,6,6"]),
        ("recover", &["recover", "--exponents", "2,3,7"]),
        (
            "verification",
            &["verify", "--check", "two-var", "--max", "6"],
        ),
        (
            "verification",
            &[
                "verify",
                "--check",
                "properties",
                "--vars",
                "3",
                "--max",
                "9",
                "--trials",
                "5",
            ],
        ),
    ];
    for (name, args) in cases {
        let o = algknot(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_valid(name, &json_of(&o));
    }
}

#[test]
fn signature_values() {
    let doc = json_of(&algknot(&["sig", "--exponents", "2,3,2"]));
    assert_eq!(doc["total_signature"], -2);
    assert_eq!(doc["stabilized"], false);
    let doc = json_of(&algknot(&["sig", "--exponents", "2,3"]));
    assert_eq!(doc["stabilized"], true);
    assert_eq!(doc["total_signature"], -2);
}

#[test]
fn report_csv_columns() {
    let o = algknot(&["report", "--a", "2,3,7", "--b", "7,3,2", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("input_a,input_b,witt,cot,mod2,odd_sets,fox_milnor,verdict")
    );
    assert_eq!(
        lines.next(),
        Some("\"2,3,7\",\"7,3,2\",true,true,true,true,true,Cobordant")
    );
}

#[test]
fn recover_from_lambdas() {
    let o = algknot(&[
        "recover",
        "--lambdas",
        "6,3,2,1",
        "--count",
        "2",
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2,3");
}

#[test]
fn verify_is_deterministic_and_writes_out() {
    let dir = std::env::temp_dir().join(format!("algknot-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let args = [
        "verify",
        "--check",
        "properties",
        "--vars",
        "2",
        "--max",
        "7",
        "--trials",
        "20",
        "--seed",
        "3",
        "--jobs",
        "2",
    ];
    let mut first = json_of(&algknot(
        &[&args[..], &["--out", path.to_str().unwrap()][..]].concat(),
    ));
    let mut second = json_of(&algknot(&args));
    first["elapsed_seconds"] = 0.into();
    second["elapsed_seconds"] = 0.into();
    assert_eq!(first, second);
    let mut written: Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    written["elapsed_seconds"] = 0.into();
    assert_eq!(written, first);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn verify_csv_summary() {
    let o = algknot(&[
        "verify", "--check", "theorem2", "--vars", "2", "--max", "3", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "property,checked,violations,pass\nwitt_iff_equal_multisets,1,0,true\n"
    );
}

#[test]
fn input_round_trip() {
    for text in ["2,3,7", "5/2,5/1"] {
        let o = algknot(&["witt", "--a", text, "--b", text]);
        assert_eq!(json_of(&o)["input_a"], text);
    }
}
