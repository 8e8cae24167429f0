//! End-to-end checks of the `syt` binary: golden outputs and the
//! exit-code contract (0 success, 1 verification failure, 2 usage or
//! parse error, 3 resource limit).

use std::process::{Command, Output};

fn syt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn apply_promote_with_path() {
    let out = syt(&[
        "apply",
        "--op",
        "promote",
        "--tableau",
        "1 4 5/2 6 8/3 7 13/9 10 15/11 14/12",
        "--show-path",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "1 2 6/3 5 7/4 8 9/10 11 14/12 15/13\npath: (4,3) (3,3) (2,3) (2,2) (1,2) (1,1)\n"
    );
}

#[test]
fn apply_negative_power_is_inverse() {
    let fwd = syt(&["apply", "--op", "promote", "--tableau", "1 2 6/3 5/4"]);
    let back = syt(&[
        "apply",
        "--op",
        "promote",
        "--power",
        "-1",
        "--tableau",
        stdout(&fwd).trim(),
    ]);
    assert_eq!(stdout(&back).trim(), "1 2 6/3 5/4");
}

#[test]
fn apply_json_round_trip() {
    let out = syt(&[
        "apply",
        "--op",
        "evacuate",
        "--tableau",
        "1 3 8/2 4/5 9/6 10/7",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["tableau"]["rows"][0], serde_json::json!([1, 3, 8]));
    // feed the JSON back in as input
    let again = syt(&[
        "apply",
        "--op",
        "evacuate",
        "--tableau",
        &v["tableau"].to_string(),
    ]);
    assert_eq!(stdout(&again).trim(), "1 3 8/2 4/5 9/6 10/7");
}

#[test]
fn embed_golden() {
    let out = syt(&["embed", "--tableau", "1 2 6/3 5/4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1 2 6/3 5 10/4 7 11/8 9 12");
    let wide = syt(&["embed", "--wide", "--tableau", "1 2 6/3 5/4"]);
    assert_eq!(stdout(&wide).trim(), "1 2 6 10/3 5 7 11/4 8 9 12");
}

#[test]
fn desc_golden() {
    let out = syt(&["desc", "--tableau", "1 4 5/2 6/3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "xx..xx..xx..\ndots: {1,2,5,6,9,10}\nperiod: 4\n");
}

#[test]
fn orbits_json() {
    let out = syt(&["orbits", "--shape", "sc:3", "--op", "promote", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["N"], 12);
    assert_eq!(v["cycles"]["12"], 1);
    assert_eq!(v["cycles"]["4"], 1);
    assert_eq!(v["empirical"], false);
}

#[test]
fn csp_factor_exit_codes() {
    let good = syt(&[
        "csp", "--shape", "sc:3", "--op", "promote", "--factors", "2,4^2,6,8,12",
    ]);
    assert_eq!(good.status.code(), Some(0));
    assert_eq!(stdout(&good).trim(), "CSP polynomial: yes");
    let bad = syt(&["csp", "--shape", "sc:3", "--op", "promote", "--factors", "2"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(stdout(&bad).trim(), "CSP polynomial: no");
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        vec!["apply", "--op", "promote", "--tableau", "1 3/2 2"],
        vec!["apply", "--op", "promote", "--tableau", "1 2/4 5"],
        vec!["orbits", "--shape", "0,1", "--op", "promote"],
        vec!["desc", "--tableau", "1 2/3 4/5"], // neither rectangle nor staircase
    ] {
        let out = syt(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
    // clap usage errors also exit 2
    let out = syt(&["apply", "--op", "rotate", "--tableau", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumeration_limit_exits_3() {
    // 6x6 rectangle has 877,217,833,152 tableaux, far past the limit
    let out = syt(&["orbits", "--shape", "6^6", "--op", "promote"]);
    assert_eq!(out.status.code(), Some(3));
}
