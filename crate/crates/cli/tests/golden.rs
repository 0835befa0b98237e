use std::process::{Command, Output};

use modrep::an::{classify_tensor, make_label, ClassificationOutcome, Sign};
use modrep::branching::classify_nodes;
use modrep::js::enumerate_js;
use modrep::partition::{enumerate_partitions, Partition, PrimeParam};
use modrep::verify::{run_all, CheckId, VerifyConfig};
use modrep::{mullineux, NodeClassification};

fn modrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modrep"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = modrep(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn p(v: u32) -> PrimeParam {
    PrimeParam::new(v).unwrap()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn mull_of_a_row() {
    assert_eq!(stdout(&["mull", "7", "--p", "5"]), "2,2,2,1\n");
}

#[test]
fn mull_matches_library() {
    for lambda in enumerate_partitions(9, p(3), true) {
        let text = lambda.to_string();
        let expected = mullineux(&lambda, p(3)).unwrap().image;
        assert_eq!(
            stdout(&["mull", &text, "--p", "3"]).trim(),
            expected.to_string()
        );
        let value: serde_json::Value =
            serde_json::from_str(&stdout(&["mull", &text, "--p", "3", "--json"])).unwrap();
        let image: Partition = serde_json::from_value(value["image"].clone()).unwrap();
        assert_eq!(image, expected);
    }
}

#[test]
fn fixed_js_at_three() {
    assert_eq!(
        stdout(&["js", "--n", "6", "--p", "3", "--fixed-only"]),
        "4,1,1\n"
    );
    let all: Vec<Partition> =
        serde_json::from_str(&stdout(&["js", "--n", "12", "--json"])).unwrap();
    assert_eq!(all, enumerate_js(12, p(5), false).unwrap());
}

#[test]
fn nodes_json_is_the_classification() {
    let c: NodeClassification =
        serde_json::from_str(&stdout(&["nodes", "8,2", "--p", "5", "--json"])).unwrap();
    assert_eq!(c, classify_nodes(&part("8,2"), p(5)));
    assert_eq!(c.epsilon, vec![1, 0, 1, 0, 0]);
}

#[test]
fn enumerate_matches_library() {
    let shown = stdout(&["enumerate", "--n", "7", "--p", "3"]);
    let expected: Vec<String> = enumerate_partitions(7, p(3), true)
        .map(|l| l.to_string())
        .collect();
    assert_eq!(shown.lines().collect::<Vec<_>>(), expected);
    assert_eq!(
        stdout(&["enumerate", "--n", "7", "--all"]).lines().count(),
        15
    );
}

#[test]
fn classify_irreducible_product() {
    let out: ClassificationOutcome = serde_json::from_str(&stdout(&[
        "classify",
        "--split",
        "6,3,1,1",
        "--sign",
        "-",
        "--nonsplit",
        "10,1",
        "--json",
    ]))
    .unwrap();
    let split = make_label(&part("6,3,1,1"), Some(Sign::Minus), p(5)).unwrap();
    let natural = make_label(&part("10,1"), None, p(5)).unwrap();
    assert_eq!(out, classify_tensor(&split, &natural).unwrap());
    assert_eq!(
        out,
        ClassificationOutcome::Irreducible {
            nu: part("5,3,1,1,1")
        }
    );
}

#[test]
fn classify_two_split_labels() {
    let shown = stdout(&[
        "classify", "--split", "6,3,1,1", "--sign", "+", "--split", "6,3,1,1", "--sign", "minus",
    ]);
    assert!(shown.contains("DoubleSplit"), "{shown}");
}

#[test]
fn classify_rejects_one_dimensional_factor() {
    let out = modrep(&[
        "classify",
        "--split",
        "2,2",
        "--sign",
        "+",
        "--nonsplit",
        "3,1",
        "--p",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1-dimensional"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["mull", "2,2,2,2,2"][..],
        &["mull", "3", "--p", "4"],
        &["mull", "3,x"],
        &["classify", "--split", "6,3,1,1"],
        &[
            "classify",
            "--nonsplit",
            "10,1",
            "--p",
            "3",
            "--nonsplit",
            "9,2",
        ],
        &["verify", "--max-n", "41"],
        &["nonsense"],
    ] {
        let out = modrep(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_json_lines_match_library() {
    let shown = stdout(&["verify", "--max-n", "9", "--json"]);
    let config = VerifyConfig {
        max_n: Some(9),
        ..VerifyConfig::default()
    };
    let expected = run_all(&config).unwrap().reports;
    let lines: Vec<serde_json::Value> = shown
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), CheckId::ALL.len());
    for (mut got, want) in lines.into_iter().zip(expected) {
        let mut want = serde_json::to_value(want).unwrap();
        got["elapsed_ms"] = 0.into();
        want["elapsed_ms"] = 0.into();
        assert_eq!(got, want);
    }
}

#[test]
fn verify_under_flipped_orientation_exits_one() {
    let out = modrep(&["verify", "--max-n", "8", "--orientation", "bottom-up"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn report_fields() {
    let value: serde_json::Value =
        serde_json::from_str(&stdout(&["report", "6,3,1,1", "--json"])).unwrap();
    assert_eq!(value["js"], true);
    assert_eq!(value["mullineux_fixed"], true);
    assert_eq!(value["specht_dimension"], "1232");
    let singular: serde_json::Value =
        serde_json::from_str(&stdout(&["report", "1,1,1", "--p", "3", "--json"])).unwrap();
    assert_eq!(singular["p_regular"], false);
    assert!(singular["mullineux"].is_null());
}
