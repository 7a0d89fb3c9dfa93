use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wallcross"))
        .args(args)
        .env_remove("WALLCROSS_DEBUG")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn map_commands() {
    let out = run(&["map", "mullineux", "--p", "5,4,2", "--b", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "4,2,2,2,1\n");

    let out = run(&["map", "core", "--p", "6,5,3,3,2,1,1", "--b", "4"]);
    assert_eq!(stdout(&out), "4,1\n");

    let out = run(&["map", "quotient", "--p", "6,5,3,3,2,1,1", "--b", "4"]);
    assert_eq!(stdout(&out), "(1),(2,1),∅,∅\n");

    let out = run(&["map", "wallcross-map", "--p", "1^5", "--b", "5"]);
    assert_eq!(stdout(&out), "5\n");

    let out = run(&["map", "transpose", "--p", "2^2,1", "--format", "json"]);
    assert_eq!(stdout(&out), "[3,2]\n");

    let out = run(&["map", "colreg", "--p", "3,2,2,1", "--a", "2", "--b", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2,2,2,1,1\n");
}

#[test]
fn colreg_failure_exits_two_with_boxes() {
    let out = run(&["map", "colreg", "--p", "3,2,2", "--a", "2", "--b", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("{(1,1) (1,2) (2,1) (3,1) (3,2) (4,1) (5,1)}"));
    let out = run(&[
        "map", "colreg", "--p", "3,2,2", "--a", "2", "--b", "3", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["boxes"].as_array().unwrap().len(), 7);
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["map", "core", "--p", "2,3", "--b", "2"][..],
        &["map", "core", "--p", "5,4,2"],
        &["map", "mullineux", "--p", "2,2", "--b", "2"],
        &["map", "colreg", "--p", "3,1", "--a", "2", "--b", "4"],
        &["trajectory", "--p", "3,1", "--n", "5"],
        &["verify", "main", "--n-max", "1"],
        &["verify", "main", "--parallel", "0"],
        &["no-such-command"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn row_of_seven_markdown_is_stable() {
    let expected = "\
| Intervals | [0,1/7] | [1/7,1/5] | [1/5,1/3] | [1/3,1/2] | [1/2,2/3] | [2/3,4/5] | [4/5,6/7] | [6/7,1] |
|---|---|---|---|---|---|---|---|---|
| Partitions | (7) | (6,1) | (5,2) | (4,2,1) | (3,2,1^2) | (2^2,1^3) | (2,1^5) | (1^7) |
| D | 0 | 0 | 0 | 0 | 0 | 0 | 0 | - |
";
    let a = run(&[
        "trajectory",
        "--algo",
        "wallcross",
        "--p",
        "7",
        "--n",
        "7",
        "--format",
        "markdown",
    ]);
    let b = run(&[
        "trajectory",
        "--algo",
        "wallcross",
        "--p",
        "7",
        "--n",
        "7",
        "--format",
        "markdown",
    ]);
    assert_eq!(stdout(&a), expected);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["trajectory", "--algo", "colreg", "--p", "7", "--n", "7"]);
    assert_eq!(c.stdout, a.stdout);
}

#[test]
fn first_algorithm_csv_row() {
    let out = run(&[
        "trajectory",
        "--algo",
        "first",
        "--p",
        "4,1",
        "--n",
        "5",
        "--format",
        "csv",
    ]);
    let text = stdout(&out);
    let d: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(d, ["0", "4", "0", "0", "4", "0", "0", "0", "0", "-"]);
    assert!(text.contains("\"4,1\",2/5,1/2,\"4,1\",4"));
    assert!(text.contains("\"4,1\",1/2,3/5,\"2,2,1\",0"));
}

#[test]
fn json_trajectory_round_trips() {
    let out = run(&[
        "trajectory",
        "--algo",
        "wallcross",
        "--p",
        "3,1^2",
        "--format",
        "json",
    ]);
    let text = stdout(&out);
    let t: wallcross::Trajectory = serde_json::from_str(&text).unwrap();
    assert_eq!(t.n, 5);
    assert_eq!(wallcross::render::trajectory_json(&t), text);
}

#[test]
fn all_starts_table() {
    let out = run(&["trajectory", "--algo", "first", "--all", "--n", "5"]);
    let text = stdout(&out);
    assert!(text.contains("| (3,2) | (3,2) |"));
    assert_eq!(text.lines().count(), 2 + 2 * 7);
}

#[test]
fn verify_commands() {
    let out = run(&["verify", "conjecture", "--n-max", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(v["n"], serde_json::json!([2, 3, 4, 5]));

    let out = run(&["verify", "monotone", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("monotone: holds"));

    let serial = run(&["verify", "all", "--n-max", "6", "--format", "json"]);
    let parallel = run(&[
        "verify",
        "all",
        "--n-max",
        "6",
        "--parallel",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(serial.status.code(), Some(0));
    let strip = |o: &Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        for item in v.as_array_mut().unwrap() {
            item["elapsed_ms"] = 0.into();
        }
        v
    };
    assert_eq!(strip(&serial), strip(&parallel));
    assert_eq!(strip(&serial).as_array().unwrap().len(), 9);
}
