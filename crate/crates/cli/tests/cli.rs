use std::process::{Command, Output};

use coxgrowth::catalog::lookup;
use coxgrowth::growth::steinberg_series;
use coxgrowth::IntPolynomial;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxgrowth"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn poly(v: &Value) -> IntPolynomial {
    serde_json::from_value(v.clone()).expect("polynomial")
}

#[test]
fn growth_json_round_trip() {
    let o = run(&["growth", "--catalog", "lanner-5334", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let sys = lookup("lanner-5334").unwrap().system().cloned().unwrap();
    let s = steinberg_series(&sys).unwrap();
    let c = s.complete.as_ref().unwrap();
    assert_eq!(poly(&v["reduced"]["num"]), *s.reduced.num());
    assert_eq!(poly(&v["reduced"]["den"]), *s.reduced.den());
    assert_eq!(poly(&v["virgin"]), s.virgin);
    assert_eq!(poly(&v["complete"]["numerator"]), c.numerator);
    assert_eq!(poly(&v["complete"]["denominator"]), c.denominator);
    assert_eq!(v["complete"]["blocks"], serde_json::json!([2, 8, 12, 20, 30]));
}

#[test]
fn hexagon_taylor_table() {
    let o = run(&["taylor", "--catalog", "ra-hexagon", "--upto", "10", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let want = [
        "1", "6", "24", "90", "336", "1254", "4680", "17466", "65184", "243270", "907896",
    ];
    assert_eq!(v["coefficients"], serde_json::json!(want));
}

#[test]
fn cell_120_poles_from_fvector() {
    let o = run(&["poles", "--fvector", "600,1200,720,120", "--dim", "4", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let real = v["real_poles"]["intervals"].as_array().unwrap();
    assert_eq!(real.len(), 4);
    assert_eq!(v["simple"], Value::Bool(true));
    assert_eq!(v["unit_interval"]["intervals"].as_array().unwrap().len(), 2);
}

#[test]
fn text_reports() {
    let o = run(&["conjecture", "--catalog", "lanner-5333"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("verdict for n = 4: holds"));
    let o = run(&["euler", "--catalog", "ra-120cell-fvector"]);
    assert!(stdout(&o).contains("volume = 34*pi^2/3"));
    let o = run(&["rightangled", "--facets", "12", "--dim", "3"]);
    assert!(stdout(&o).contains("4 + sqrt(15)"));
    let o = run(&["classify", "--catalog", "lehmer-fixture"]);
    assert!(stdout(&o).starts_with("SalemLayout"));
    let o = run(&["helpfn", "--catalog", "lanner-5334", "--family", "L"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("decomposition verified: true"));
    let o = run(&["oracle", "--catalog", "triangle-2-3-7", "--upto", "6"]);
    assert!(o.status.success());
    let o = run(&["rebase", "--catalog", "lanner-5334", "--blocks", "2,6,8,12,20,30"]);
    assert!(o.status.success());
}

#[test]
fn reads_system_files() {
    let dir = std::env::temp_dir().join(format!("coxgrowth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hexagon.txt");
    let mut text = String::from("rank 6\n");
    for i in 1..=6 {
        for j in i + 1..=6 {
            if j - i != 1 && j - i != 5 {
                text.push_str(&format!("edge {i} {j} inf\n"));
            }
        }
    }
    std::fs::write(&path, text).unwrap();
    let o = run(&["taylor", path.to_str().unwrap(), "--upto", "3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("3 90"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["growth", "--catalog", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["growth"]).status.code(), Some(2));
    assert_eq!(run(&["growth", "/nonexistent/system.txt"]).status.code(), Some(2));
    assert_eq!(
        run(&["conjecture", "--catalog", "lehmer-fixture"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["oracle", "--catalog", "lanner-5334", "--upto", "13"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn integrity_failures_exit_1() {
    // The wrong parity flips the signs in the recursion, so the exact check fails.
    let o = run(&["recursion", "--catalog", "lanner-5334", "--dim", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("integrity failure"));
}
