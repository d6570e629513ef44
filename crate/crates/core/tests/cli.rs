use std::process::{Command, Output};

use serde_json::Value;

fn ratlink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratlink"))
        .args(args)
        .env_remove("FRIEZE_COLOR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> Value {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn jones_json_goldens() {
    for (alpha, k, file) in [("1/4", "3", "jones_1_4.json"), ("3/10", "9", "jones_3_10.json"), ("3/14", "-3", "jones_3_14.json")] {
        let o = ratlink(&["jones", alpha, "--prefactor", k, "--json"]);
        assert!(o.status.success());
        let got: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(got, golden(file), "{alpha}");
    }
}

#[test]
fn jones_text() {
    let o = ratlink(&["jones", "1/4", "--prefactor", "3"]);
    assert_eq!(stdout(&o).trim(), "t^(3/2)(-t^3 - t + 1 - t^-1)");
    let o = ratlink(&["jones", "1/4", "--plus-minus"]);
    assert!(o.status.success());
}

#[test]
fn report_contents() {
    let o = ratlink(&["report", "3/8"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("wr = -1"), "{text}");
    assert!(text.contains("signs     = -1 +1 +1"), "{text}");

    let text = stdout(&ratlink(&["report", "7/17"]));
    assert!(text.contains("{7/17, 10/17, 5/17, 12/17}"), "{text}");
    assert!(stdout(&ratlink(&["report", "1/2"])).contains("word      = ∅"));
}

#[test]
fn report_json() {
    let o = ratlink(&["report", "8/11", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["wr"], 2);
    assert_eq!(v["alpha"], "8/11");
}

#[test]
fn frieze_ascii() {
    let o = ratlink(&["frieze", "LLRRL"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    assert_eq!(lines.len(), 8);
    for edge in [lines[0], lines[7]] {
        assert!(edge.split_whitespace().all(|x| x == "1"));
    }
    assert!(lines[3].split_whitespace().any(|x| x == "17"));
    assert!(!text.contains('\x1b'));
}

#[test]
fn frieze_fraction_matches_word() {
    let by_word = ratlink(&["frieze", "--format", "json", "LLRRL"]);
    let word: Value = serde_json::from_str(&stdout(&by_word)).unwrap();
    assert_eq!(word["order"].as_u64(), Some(9));
    let rep: Value = serde_json::from_str(&stdout(&ratlink(&["report", "7/17", "--json"]))).unwrap();
    let w = rep["word"].as_str().unwrap();
    let a = stdout(&ratlink(&["frieze", "--format", "json", "7/17"]));
    assert_eq!(a, stdout(&ratlink(&["frieze", "--format", "json", "--word", w])));
    let bad = ratlink(&["frieze", "LQR"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn frieze_color() {
    let o = Command::new(env!("CARGO_BIN_EXE_ratlink"))
        .args(["frieze", "LLRRL", "--mark-max"])
        .env("FRIEZE_COLOR", "1")
        .output()
        .unwrap();
    assert!(stdout(&o).contains('\x1b'));
}

#[test]
fn orbit_and_classify() {
    let v: Value = serde_json::from_str(&stdout(&ratlink(&["orbit", "7/17", "--json"]))).unwrap();
    assert_eq!(v["members"].as_array().unwrap().len(), 4);
    assert_eq!(stdout(&ratlink(&["classify", "5", "--csv"])), "q,members,size,canonical\n5,1 4,2,1/5\n5,2 3,2,2/5\n");
    assert_eq!(stdout(&ratlink(&["classify", "10"])), "1/10  [1, 9]\n3/10  [3, 7]\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["report", "5/3"][..],
        &["report", "abc"],
        &["jones", "1/3", "--plus-minus"],
        &["classify", "1"],
        &["verify", "--suite", "nope"],
        &["verify", "--max-q", "1"],
        &["verify", "--jobs", "0"],
        &["bogus"],
    ] {
        let o = ratlink(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn verify_small_sweep() {
    let o = ratlink(&["verify", "--suite", "lemma15", "--suite", "thm32", "--max-q", "40", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 2);
    assert!(suites.iter().all(|s| s["failed"] == 0 && s["checked"].as_u64().unwrap() > 0));
}

#[test]
fn verify_text_lines() {
    let o = ratlink(&["verify", "--suite", "thm36", "--max-q", "20"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS"));
}
