use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn eulerian_tables_match_golden() {
    assert_eq!(
        stdout(&["tables", "eulerian"]),
        golden("tables_eulerian.txt")
    );
    assert_eq!(
        stdout(&["tables", "eulerian", "--format", "csv"]),
        golden("tables_eulerian.csv")
    );
    assert_eq!(
        stdout(&["tables", "eulerian", "--format", "json"]),
        golden("tables_eulerian.json")
    );
}

#[test]
fn euler_numbers_match_golden() {
    assert_eq!(
        stdout(&["tables", "euler-numbers"]),
        golden("euler_numbers.txt")
    );
    assert_eq!(
        stdout(&["tables", "euler-numbers", "--format", "csv"]),
        golden("euler_numbers.csv")
    );
}

#[test]
fn table_spot_values() {
    let csv = stdout(&["tables", "eulerian", "--format", "csv"]);
    assert!(csv
        .lines()
        .any(|l| l == "1,7,\"1,120,1191,2416,1191,120,1\""));
    assert!(csv
        .lines()
        .any(|l| l == "2,8,\"64,1611,7197,8422,2682,183,1\""));
    assert!(csv.lines().any(|l| l == "5,8,\"125,171,39,1\""));
    let r4 = stdout(&["tables", "eulerian", "--r", "4", "--format", "csv"]);
    assert_eq!(r4.lines().count(), 1 + 5);
    assert_eq!(r4.lines().next(), Some("r,n,coefficients"));
    let euler = stdout(&["tables", "euler-numbers", "--format", "csv"]);
    assert!(euler.lines().any(|l| l == "11,353792"));
    assert!(euler.lines().any(|l| l == "14,199360981"));
}

#[test]
fn json_coefficients_are_strings() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "tables", "eulerian", "--r", "1", "--format", "json",
    ]))
    .unwrap();
    let last = v.as_array().unwrap().last().unwrap();
    assert_eq!(last["n"], 8);
    assert_eq!(last["r"], 1);
    assert_eq!(last["coeffs"][3], "15619");
}

#[test]
fn stat_of_running_example() {
    assert_eq!(stdout(&["stat", "6 4 1 2 5 3"]), golden("stat_example.txt"));
    assert_eq!(
        stdout(&["stat", "6 4 1 2 5 3", "--stats", "E"]),
        "E = (6,3,0,0,1,0)\n"
    );
    assert_eq!(
        stdout(&["stat", "6,4,1,2,5,3", "--stats", "ΔD"]),
        "ΔD = (3,0,2,2,0)\n"
    );
    assert_eq!(stdout(&["stat", "1", "--stats", "z"]), "z = 1\n");
    assert_eq!(
        stdout(&["stat", "6 4 1 2 5 3", "--stats", "Δ'²E,dd'E"]),
        "Δ'²E = (0,0,1,0)\ndd'E = (2,0,0,0)\n"
    );
}

#[test]
fn maps_of_running_example() {
    assert_eq!(
        stdout(&["map", "fundamental", "6 4 1 2 5 3"]),
        "4 2 5 6 1 3\n"
    );
    assert_eq!(stdout(&["map", "bar", "6 4 1 2 5 3"]), "6 3 2 1 4 5\n");
    assert_eq!(stdout(&["map", "tilde", "1 2"]), "2 1\n");
    assert_eq!(
        stdout(&["map", "bar", "6 4 1 2 5 3", "--verbose"]),
        golden("map_bar_verbose.txt")
    );
}

#[test]
fn poly_methods_agree() {
    let methods = ["enumeration", "shift", "triangle", "explicit", "series"];
    let outs: Vec<String> = methods
        .iter()
        .map(|m| stdout(&["poly", "eulerian", "--n", "6", "--r", "2", "--method", m]))
        .collect();
    assert!(outs.windows(2).all(|w| w[0] == w[1]), "{outs:?}");
    assert_eq!(outs[0], "32 + 262t + 342t^2 + 82t^3 + 2t^4\n");
}

#[test]
fn series_tan_coefficients() {
    let csv = stdout(&["series", "tan", "--order", "7", "--format", "csv"]);
    assert!(csv.lines().any(|l| l == "7,272"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["tables", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    let bad = run(&["stat", "1 1 2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("position 2"));
    let pre = run(&["map", "prime", "1 2 3"]);
    assert_eq!(pre.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&pre.stderr).contains("last-is-1"));
}

#[test]
fn verify_small_suites_pass() {
    for suite in ["chapter1", "chapter5"] {
        let out = run(&["verify", suite, "--max-n", "6"]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
    let out = run(&["verify", "series", "--order", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["suite"], "series");
    assert!(report["entries"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["passed"] == true));
}
