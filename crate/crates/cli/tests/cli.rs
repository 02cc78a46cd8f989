use std::process::{Command, Output};

fn ncverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncverify"))
        .args(args)
        .output()
        .expect("run ncverify")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn normal_forms() {
    let o = ncverify(&["nf", "--algebra", "D", "v*x"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x*v + x*u - g + 1");
    assert_eq!(
        stdout(&ncverify(&["nf", "--algebra", "D", "q*s - s*q"])),
        "0"
    );
    assert_eq!(stdout(&ncverify(&["nf", "--algebra", "D", "0"])), "0");
    assert_eq!(stdout(&ncverify(&["nf", "[y,x]"])), "-1/2*x^2");
    assert_eq!(
        stdout(&ncverify(&["nf", "--algebra", "D_LX", "x^-1"])),
        "x^-1"
    );
    assert_eq!(
        stdout(&ncverify(&["nf", "--algebra", "T", "[v,y]"])),
        "3/2*u*y + 1/2*x*v - 2"
    );
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(ncverify(&["nf", "x^-1"]).status.code(), Some(2));
    assert_eq!(ncverify(&["nf", "2*+"]).status.code(), Some(2));
    assert_eq!(
        ncverify(&["nf", "--algebra", "Q", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(ncverify(&["check", "no-such-check"]).status.code(), Some(2));
    assert_eq!(ncverify(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bad_budget_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_ncverify"))
        .args(["check", "centre"])
        .env("NCVERIFY_STEP_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tiny_budget_fails_checks() {
    let o = Command::new(env!("CARGO_BIN_EXE_ncverify"))
        .args(["check", "centre-relation"])
        .env("NCVERIFY_STEP_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn weyl_glob_and_json() {
    let dir = std::env::temp_dir().join(format!("ncverify-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("weyl.json");
    let o = ncverify(&["check", "weyl-*", "--json", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let checks = v["checks"].as_array().unwrap();
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["weyl-A", "weyl-B", "weyl-C", "weyl-D"]);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    assert_eq!(v["convention_elected"]["status"], "report");
    for key in ["id", "claim", "status", "details", "wall_time_ms"] {
        assert!(checks[0].get(key).is_some(), "{key}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn report_rows_do_not_fail_the_run() {
    let o = ncverify(&["check", "pq-square-claim"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("REPORT"));
}

#[test]
fn membership_and_growth() {
    let o = ncverify(&[
        "member",
        "--ideal",
        "z,omega,theta",
        "--target",
        "q^2",
        "--bound",
        "2",
        "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "witness");
    assert_eq!(v["cofactors"][0]["cofactor"], "g");

    let o = ncverify(&["member", "--ideal", "q", "--target", "s", "--bound", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("no witness at bound 3"));

    let o = ncverify(&["growth", "--max", "12", "--json"]);
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows[1]["monomial_count"], 8);
    assert_eq!(rows[2]["monomial_count"], 35);
    assert_eq!(rows.as_array().unwrap().len(), 13);
}
