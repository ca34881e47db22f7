use std::process::{Command, Output};

use dyckgen::oracle::{self, PathTable};
use dyckgen::Guards;
use num_bigint::BigUint;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyckgen"))
        .args(args)
        .env_remove("DYCKGEN_GUARD_OVERRIDE")
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

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn zigzag_rows() {
    let csv = stdout(&["genfun", "--k", "1", "--max-len", "6", "--format", "csv"]);
    assert_eq!(csv, "l,A,num,den\n0,0,1,1\n2,0,1,1\n4,0,1,1\n6,0,1,1\n");
}

#[test]
fn diamond_convention_halves_exponents() {
    let v = json(&[
        "genfun",
        "--k",
        "inf",
        "--max-len",
        "6",
        "--convention",
        "double-step-diamond",
    ]);
    assert_eq!(v["convention"], "double-step-diamond");
    assert_eq!(v["spec"]["k"], "inf");
    let z3: Vec<(i64, String)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|t| t["l"] == 3)
        .map(|t| {
            (
                t["A"].as_i64().unwrap(),
                t["coeff"]["num"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let want: Vec<(i64, String)> = [(0, "1"), (1, "2"), (2, "1"), (3, "1")]
        .iter()
        .map(|&(a, c)| (a, c.into()))
        .collect();
    assert_eq!(z3, want);

    let plain = json(&["genfun", "--k", "4", "--m", "1", "--n", "2", "--max-len", "9"]);
    let half = json(&[
        "genfun",
        "--k",
        "4",
        "--m",
        "1",
        "--n",
        "2",
        "--max-len",
        "9",
        "--convention",
        "double-step-diamond",
    ]);
    let (p, h) = (plain["terms"].as_array().unwrap(), half["terms"].as_array().unwrap());
    assert_eq!(p.len(), h.len());
    for (a, b) in p.iter().zip(h) {
        for key in ["l", "A"] {
            let twice = b[key]
                .get("twice")
                .and_then(Value::as_i64)
                .unwrap_or_else(|| 2 * b[key].as_i64().unwrap());
            assert_eq!(twice, a[key].as_i64().unwrap());
        }
        assert_eq!(a["coeff"], b["coeff"]);
    }
}

#[test]
fn long_meander_row_and_roof() {
    let csv = stdout(&[
        "table",
        "--k",
        "4",
        "--m",
        "1",
        "--n",
        "2",
        "--max-len",
        "13",
        "--touchdowns",
        "--format",
        "csv",
    ]);
    assert!(csv.starts_with("l,A,s,count\n"));
    let row = csv.lines().find(|l| l.starts_with("13,21,1,")).expect("row present");
    assert!(row.rsplit(',').next().unwrap().parse::<u64>().unwrap() >= 1);
    let max = csv
        .lines()
        .skip(1)
        .filter(|l| l.starts_with("13,"))
        .map(|l| l.split(',').nth(1).unwrap().parse::<i64>().unwrap())
        .max();
    assert_eq!(max, Some(35));
    let genfun = stdout(&[
        "genfun",
        "--k",
        "4",
        "--m",
        "1",
        "--n",
        "2",
        "--max-len",
        "13",
        "--format",
        "csv",
    ]);
    assert!(genfun.lines().any(|l| l.starts_with("13,21,")));
}

#[test]
fn small_table_and_empty_table() {
    let csv = stdout(&["table", "--k", "2", "--max-len", "4", "--touchdowns", "--format", "csv"]);
    assert_eq!(csv, "l,A,s,count\n0,0,0,1\n2,0,1,1\n4,0,2,1\n4,2,1,1\n");
    let v = json(&["table", "--k", "3", "--m", "0", "--n", "1", "--max-len", "0"]);
    assert!(v["terms"].as_array().unwrap().is_empty());
}

fn table_from_json(v: &Value) -> PathTable {
    let spec = &v["spec"];
    let get = |k: &str| spec[k].as_u64().unwrap() as usize;
    let mut table = PathTable::new(get("k"), get("m"), get("n"), get("max_len"));
    for t in v["terms"].as_array().unwrap() {
        assert_eq!(t["coeff"]["den"], "1");
        let count: BigUint = t["coeff"]["num"].as_str().unwrap().parse().unwrap();
        table.insert(
            t["l"].as_u64().unwrap() as usize,
            t["A"].as_i64().unwrap(),
            t["s"].as_u64().unwrap() as u32,
            count,
        );
    }
    table
}

#[test]
fn table_json_round_trip() {
    for (k, m, n, len) in [(2, 0, 0, 8), (4, 1, 2, 13), (5, 3, 0, 12), (3, 1, 1, 0)] {
        let args = [
            "table",
            "--k",
            &k.to_string(),
            "--m",
            &m.to_string(),
            "--n",
            &n.to_string(),
            "--max-len",
            &len.to_string(),
            "--touchdowns",
        ];
        let parsed = table_from_json(&json(&args));
        assert_eq!(parsed, oracle::enumerate(k, m, n, len, &Guards::default()).unwrap());
    }
}

#[test]
fn methods_agree_under_cross_check() {
    for args in [
        vec!["genfun", "--k", "5", "--max-len", "12", "--cross-check"],
        vec![
            "genfun",
            "--k",
            "inf",
            "--max-len",
            "10",
            "--method",
            "cluster-exp",
            "--cross-check",
        ],
        vec![
            "genfun",
            "--k",
            "4",
            "--m",
            "3",
            "--n",
            "1",
            "--max-len",
            "10",
            "--cross-check",
        ],
        vec![
            "genfun",
            "--k",
            "4",
            "--m",
            "1",
            "--n",
            "3",
            "--max-len",
            "10",
            "--touchdown",
            "--cross-check",
        ],
    ] {
        assert!(run(&args).status.success(), "{args:?}");
    }
    let det = stdout(&["genfun", "--k", "6", "--max-len", "12", "--format", "csv"]);
    let cf = stdout(&[
        "genfun",
        "--k",
        "6",
        "--max-len",
        "12",
        "--format",
        "csv",
        "--method",
        "continued-fraction",
    ]);
    assert_eq!(det, cf);
}

#[test]
fn touchdown_output() {
    let v = json(&["genfun", "--k", "1", "--max-len", "6", "--touchdown"]);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 4);
    for t in terms {
        assert_eq!(t["s"].as_u64().unwrap() * 2, t["l"].as_u64().unwrap());
    }
    let plain = json(&["genfun", "--k", "1", "--max-len", "6"]);
    assert!(plain["terms"][0].get("s").is_none());
}

#[test]
fn cluster_csv() {
    let csv = stdout(&["cluster", "--k", "inf", "--a-max", "2", "--format", "csv"]);
    assert_eq!(csv, "a,q,num,den\n1,0,1,1\n2,0,1,2\n2,1,1,1\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["genfun", "--k", "x", "--max-len", "3"],
        vec!["genfun", "--k", "2", "--m", "3", "--max-len", "3"],
        vec![
            "genfun",
            "--k",
            "2",
            "--m",
            "1",
            "--max-len",
            "3",
            "--method",
            "continued-fraction",
        ],
        vec!["genfun", "--k", "2", "--max-len", "3", "--format", "xml"],
        vec!["table", "--k", "2", "--max-len", "40"],
        vec!["verify", "--suite", "nothing"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn guard_override_lifts_limit() {
    let out = Command::new(env!("CARGO_BIN_EXE_dyckgen"))
        .args(["table", "--k", "1", "--max-len", "30", "--format", "csv"])
        .env("DYCKGEN_GUARD_OVERRIDE", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("30,0,1\n"));
}

#[test]
fn verify_passes() {
    let out = stdout(&["verify", "--suite", "all", "--k-max", "3", "--len-max", "10"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS suite")).count(), 6);
    assert!(!out.contains("FAIL"));
    let det = stdout(&["verify", "--suite", "determinants", "--k-max", "8"]);
    assert!(det.starts_with("PASS suite determinants"));
    stdout(&["verify", "--suite", "cluster", "--k-max", "4", "--len-max", "16"]);
}
