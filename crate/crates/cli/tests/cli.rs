use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn knotcert(args: &[&str], input: &str) -> Output {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(input.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let mut full: Vec<&str> = args.to_vec();
    full.insert(1, &path);
    Command::new(env!("CARGO_BIN_EXE_knotcert"))
        .args(&full)
        .output()
        .unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

const CORPUS: &str = "\
# trefoil, granny, split trefoils
X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)
X(1,4,2,5) X(3,6,4,1) X(5,8,6,3) X(7,10,8,11) X(9,12,10,7) X(11,2,12,9)
FREE_LOOPS=0 X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(7,10,8,11) X(9,12,10,7) X(11,8,12,9)
";

#[test]
fn corpus_verdicts() {
    let out = knotcert(&["analyze"], CORPUS);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0]["splitness"], "nonsplit-certified");
    assert_eq!(lines[0]["primeness"], "prime-certified");
    assert_eq!(lines[1]["splitness"], "nonsplit-certified");
    assert_eq!(lines[1]["primeness"], "inconclusive");
    assert_eq!(lines[1]["invariants"]["genus"], 2);
    assert_eq!(lines[2]["splitness"], "split-certified");
    assert_eq!(lines[2]["primeness"], "inconclusive");
    assert_eq!(lines[3]["summary"]["records"], 3);
    for line in &lines[..3] {
        assert_eq!(line["schema"], 1);
    }
}

#[test]
fn granny_from_braid_is_not_prime_certified() {
    // two trefoil braids on separate strand pairs, joined by one crossing
    let out = knotcert(&["analyze"], "BR(3; 1 1 1 2 2 2)\n");
    let lines = json_lines(&out);
    assert_eq!(lines[0]["splitness"], "nonsplit-certified");
    assert_eq!(lines[0]["primeness"], "inconclusive");
    assert_eq!(lines[0]["diagram_prime"]["prime"], false);
}

#[test]
fn empty_file_gives_zero_summary() {
    let out = knotcert(&["analyze"], "");
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 1);
    let summary = &lines[0]["summary"];
    assert_eq!(summary["records"], 0);
    assert_eq!(summary["errors"], 0);
}

#[test]
fn malformed_line_sets_exit_status() {
    let out = knotcert(
        &["analyze"],
        "BR(2; 1 1 1)\nX(1,4,2,5) X(3,6,4\nX(1,2,2,1)\n",
    );
    assert_eq!(out.status.code(), Some(1));
    let lines = json_lines(&out);
    assert!(lines[0]["splitness"].is_string());
    assert!(lines[1]["error"].is_string());
    assert!(lines[2]["splitness"].is_string());
    assert_eq!(lines[3]["summary"]["errors"], 1);
}

#[test]
fn usage_errors_exit_2() {
    let out = Command::new(env!("CARGO_BIN_EXE_knotcert"))
        .args(["analyze"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_knotcert"))
        .args(["analyze", "/definitely/not/here"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = knotcert(&["analyze", "--format", "xml"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn forced_format_and_flag() {
    let out = knotcert(
        &["analyze", "--format", "pd", "--assume-nontrivial"],
        "X(1,2,2,1)\n",
    );
    let lines = json_lines(&out);
    assert_eq!(lines[0]["nontrivial"]["status"], "asserted-by-flag");
    assert_eq!(lines[0]["primeness"], "prime-certified");
    let out = knotcert(&["analyze", "--format", "braid"], "X(1,2,2,1)\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_array_input() {
    let input = r#"[{"pd": [[1,4,2,5],[3,6,4,1],[5,2,6,3]]}, {"braid": {"strands": 2, "word": [1,1]}}, {"gauss": ["O1-U2-O3-U1-O2-U3-"]}]"#;
    let out = knotcert(&["analyze"], input);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[1]["invariants"]["components"], 2);
    assert_eq!(lines[2]["positivity"]["positive"], false);
}

#[test]
fn text_output_and_jobs_agree() {
    let text = knotcert(&["analyze", "--text"], CORPUS);
    let s = String::from_utf8(text.stdout).unwrap();
    assert!(s.contains("splitness split-certified"));
    assert!(s.starts_with("#0 X(1,4,2,5)"));
    let a = knotcert(&["analyze", "--jobs", "1"], CORPUS).stdout;
    let b = knotcert(&["analyze", "--jobs", "4"], CORPUS).stdout;
    assert_eq!(a, b);
}

#[test]
fn invariants_and_bridges_commands() {
    let out = knotcert(&["invariants"], "BR(2; -1 -1 -1)\n");
    let lines = json_lines(&out);
    assert_eq!(lines[0]["invariants"]["writhe"], -3);
    let out = knotcert(
        &["bridges"],
        "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)\nFREE_LOOPS=1\n",
    );
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines[0]["bridges"]["n"], 4);
    assert!(lines[1]["bridges"].is_null());
    assert!(lines[1]["note"].is_string());
}
