use std::process::{Command, Output};

use serde_json::Value;

fn hoggatt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hoggatt"))
        .args(args)
        .env_remove("HOGGATT_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = hoggatt(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn json_lines(text: &str) -> Vec<Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn bfile_values(text: &str) -> Vec<String> {
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            let (idx, val) = line.split_once(' ').unwrap();
            assert_eq!(idx, i.to_string());
            val.to_string()
        })
        .collect()
}

#[test]
fn pascal_rows() {
    assert_eq!(ok(&["triangle", "--family", "classic", "--d", "1", "--rows", "0..3"]), "1\n1  1\n1  2  1\n1  3  3  1\n");
}

#[test]
fn fibonacci_hoggatt_display() {
    let text = ok(&["triangle", "--family", "fib", "--d", "3", "--rows", "0..5", "--format", "pretty"]);
    let expected = "\
1
1    1
1    3     1
1   15    15     1
1   60   300    60    1
1  260  5200  5200  260  1
";
    assert_eq!(text, expected);
}

#[test]
fn s0_display() {
    let text = ok(&["triangle", "--family", "general", "--d", "2", "--s", "0", "--rows", "0..6"]);
    let last = text.lines().last().unwrap();
    let cells: Vec<&str> = last.split_whitespace().collect();
    assert_eq!(cells, ["1", "3*t^5", "9*t^8", "9*t^9", "9*t^8", "3*t^5", "1"]);
}

#[test]
fn triangle_json_envelope() {
    let v: Value = serde_json::from_str(&ok(&["triangle", "--family", "q", "--d", "2", "--rows", "0..3", "--format", "json"])).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["tool_version", "config", "records", "summary"]);
    assert_eq!(v["config"]["family"], "q");
    assert_eq!(v["records"][2]["row"][1], "q^2 + q + 1");
    assert_eq!(v["records"][3]["row"][0], 1);
    assert_eq!(v["summary"]["entries"], 10);
}

#[test]
fn a010048_prefix() {
    let text = ok(&["export", "--family", "fib", "--d", "1", "--rows", "0..5", "--format", "bfile"]);
    assert_eq!(bfile_values(&text).join(","), "1,1,1,1,1,1,1,2,2,1,1,3,6,3,1,1,5,15,15,5,1");
}

#[test]
fn a088855_prefix() {
    let text = ok(&["export", "--family", "general", "--d", "2", "--s", "0", "--t", "1", "--rows", "0..7"]);
    assert_eq!(
        bfile_values(&text).join(","),
        "1,1,1,1,1,1,1,2,2,1,1,2,4,2,1,1,3,6,6,3,1,1,3,9,9,9,3,1,1,4,12,18,18,12,4,1"
    );
}

#[test]
fn symbolic_bfile_is_a_config_error() {
    let out = hoggatt(&["export", "--family", "general", "--symbolic", "--format", "bfile"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("integers"));
}

#[test]
fn export_csv() {
    let text = ok(&["export", "--family", "classic", "--d", "2", "--rows", "2..2", "--format", "csv"]);
    assert_eq!(text, "n,k,value\n2,0,1\n2,1,3\n2,2,1\n");
}

#[test]
fn verify_single_cell() {
    let lines = json_lines(&ok(&["verify", "--id", "eq9", "--n", "3", "--d", "4"]));
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["id"], "binomial-hankel-unit");
    assert_eq!(lines[0]["left"], 1);
    assert_eq!(lines[0]["right"], 1);
    assert_eq!(lines[0]["pass"], true);
    assert_eq!(lines[1]["summary"]["failed"], 0);
}

#[test]
fn verify_sweep_all_pass() {
    let lines = json_lines(&ok(&["verify", "--all", "--d-max", "3", "--n-max", "6"]));
    let summary = &lines.last().unwrap()["summary"];
    assert_eq!(summary["failed"], 0);
    assert_eq!(summary["passed"].as_u64().unwrap() as usize, lines.len() - 1);
    assert_eq!(summary["per_identity"].as_object().unwrap().len(), 21);
}

#[test]
fn verify_with_bindings() {
    let lines = json_lines(&ok(&["verify", "--id", "st-toeplitz", "--n", "5", "--k", "2", "--d", "2", "--s", "1", "--t", "1"]));
    assert_eq!(lines[0]["left"], lines[0]["right"]);
    assert!(lines[0]["left"].is_number());
}

#[test]
fn verify_error_paths() {
    let out = hoggatt(&["verify", "--id", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown identity"));
    assert_eq!(hoggatt(&["verify"]).status.code(), Some(2));
    assert_eq!(hoggatt(&["verify", "--id", "eq26-condensation", "--n", "2", "--d", "1"]).status.code(), Some(2));
    assert_eq!(hoggatt(&["verify", "--all", "--n", "2", "--n-max", "3"]).status.code(), Some(2));
}

#[test]
fn conjecture_reports_printed_polynomial() {
    let lines = json_lines(&ok(&["conjecture", "--which", "c14", "--d", "3", "--k", "5"]));
    assert_eq!(
        lines[0]["numerator"],
        "x^8 - 105*x^7 + 9450*x^6 + 7917*x^5 + 166712*x^4 - 7917*x^3 + 9450*x^2 + 105*x + 1"
    );
    assert_eq!(lines[0]["tail_zero"], true);
}

#[test]
fn conjecture_q_narayana_cell() {
    let lines = json_lines(&ok(&["conjecture", "--which", "c10", "--d", "2", "--k", "3"]));
    assert_eq!(lines[0]["tail_zero"], true);
    assert_eq!(lines[0]["nonnegative"], true);
    assert_eq!(lines[0]["q_palindromic"], true);
    assert_eq!(lines[0]["consistent"], true);
    assert_eq!(lines[1]["summary"]["counterexample_candidates"], serde_json::json!([]));
}

#[test]
fn conjecture_symbolic_degrees() {
    let lines = json_lines(&ok(&["conjecture", "--which", "c18", "--d", "2", "--k-max", "4", "--symbolic"]));
    assert_eq!(lines.len(), 5);
    for (i, r) in lines[..4].iter().enumerate() {
        assert_eq!(r["k"], i + 1);
        assert_eq!(r["degree"], i);
        assert_eq!(r["degree_ok"], true);
    }
    assert_eq!(lines[4]["summary"]["consistent"], 4);
}

#[test]
fn conjecture_grid_and_config_errors() {
    let v: Value = serde_json::from_str(&ok(&["conjecture", "--which", "c10", "--grid", "3", "2", "--format", "json"])).unwrap();
    assert_eq!(v["records"].as_array().unwrap().len(), 4);
    assert_eq!(hoggatt(&["conjecture", "--which", "c99"]).status.code(), Some(2));
    assert_eq!(hoggatt(&["conjecture", "--which", "c14", "--d", "1", "--k", "2"]).status.code(), Some(2));
    assert_eq!(hoggatt(&["conjecture", "--which", "c10", "--s", "2", "--d", "2", "--k", "2"]).status.code(), Some(2));
}

#[test]
fn ssyt_three_routes() {
    let lines = json_lines(&ok(&["ssyt", "--n", "1..5", "--d", "1..3", "--k", "0..2"]));
    let summary = &lines.last().unwrap()["summary"];
    assert_eq!(summary["cells"], 45);
    assert_eq!(summary["disagree"], 0);
    let out = hoggatt(&["ssyt", "--n", "6", "--d", "4", "--k", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let roomy = ok(&["ssyt", "--n", "5", "--d", "4", "--k", "4", "--max-cells", "16"]);
    // complementing a 4x4 rectangle inside entries 1..=5 leaves one row of 4
    assert_eq!(json_lines(&roomy)[0]["count"], 70);
}

#[test]
fn series_modes() {
    assert_eq!(ok(&["series", "--family", "classic", "--k", "1", "--order", "4"]), "4*x^3 + 3*x^2 + 2*x + 1 + O(x^4)\n");
    assert!(ok(&["series", "--family", "fib", "--k", "3", "--mode", "reciprocal", "--order", "20"]).ends_with("holds\n"));
    let n = json_lines(&ok(&["series", "--family", "classic", "--d", "3", "--k", "4", "--mode", "numerator", "--format", "jsonl"]));
    assert_eq!(n[0]["numerator"], "x^6 + 22*x^5 + 113*x^4 + 190*x^3 + 113*x^2 + 22*x + 1");
    assert_eq!(hoggatt(&["series", "--family", "fib", "--d", "2", "--k", "1", "--mode", "reciprocal"]).status.code(), Some(2));
    assert_eq!(hoggatt(&["series", "--k", "1", "--order", "0"]).status.code(), Some(2));
    assert_eq!(hoggatt(&["series", "--d", "3", "--k", "4", "--mode", "numerator", "--order", "5"]).status.code(), Some(2));
}

#[test]
fn coeff_routes_agree() {
    assert_eq!(ok(&["coeff", "--d", "3", "--n", "6", "--k", "3"]), "980\n");
    assert_eq!(ok(&["coeff", "--family", "q", "--d", "1", "--n", "2", "--k", "1", "--q", "1"]), "2\n");
    assert_eq!(ok(&["coeff", "--n", "3", "--k", "5"]), "0\n");
}

#[test]
fn output_is_independent_of_thread_count() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_hoggatt"))
            .args(["verify", "--all", "--d-max", "2", "--n-max", "5", "--format", "json"])
            .env("HOGGATT_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let sequential = hoggatt(&["verify", "--all", "--d-max", "2", "--n-max", "5", "--format", "json", "--sequential"]);
    assert_eq!(sequential.stdout, one.stdout);
}

#[test]
fn bad_thread_count_is_a_config_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_hoggatt")).args(["triangle"]).env("HOGGATT_THREADS", "0").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_hoggatt")).args(["triangle"]).env("HOGGATT_THREADS", "many").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unsupported_format_is_a_config_error() {
    assert_eq!(hoggatt(&["export", "--format", "pretty"]).status.code(), Some(2));
    assert_eq!(hoggatt(&["verify", "--all", "--format", "bfile"]).status.code(), Some(2));
    assert_eq!(hoggatt(&["triangle", "--d", "0"]).status.code(), Some(2));
    assert_eq!(hoggatt(&["triangle", "--s", "1/2"]).status.code(), Some(2));
}
