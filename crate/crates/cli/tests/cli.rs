use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logseries"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_rows(o: &Output) -> Vec<Vec<String>> {
    stdout(o)
        .lines()
        .skip(1)
        .map(|l| l.split('\t').map(|c| c.trim().to_string()).collect())
        .collect()
}

#[test]
fn coefficients() {
    for (t, n, want) in [
        ("2", "2", "11/12"),
        ("0", "0", "1"),
        ("9", "2", "12"),
        ("-1", "1", "1/2"),
    ] {
        let o = run(&["coeff", "-t", t, "-n", n]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), want, "t={t} n={n}");
    }
    let o = run(&["coeff", "-t", "1", "--order", "2"]);
    assert_eq!(stdout(&o).trim(), r#"["1","-1/2","1/3"]"#);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["coeff", "-t", "x", "-n", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["coeff", "-t", "1.5", "-n", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["reconstruct", "--c1", "0.5"]).status.code(), Some(2));
    assert_eq!(run(&["reconstruct", "--c1", "0"]).status.code(), Some(2));
    assert_eq!(
        run(&["valtable", "-p", "4", "-t", "8", "-m", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn valuation_table_matches_worked_example() {
    let o = run(&["valtable", "-p", "3", "-t", "9", "-m", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = data_rows(&o);
    let actual: Vec<&str> = rows.iter().map(|r| r[2].as_str()).collect();
    assert_eq!(actual, ["1", "0", "-2", "-2", "-3", "-5", "-5", "-6", "-9"]);
    assert!(rows.iter().all(|r| r[4] == "true"));
}

#[test]
fn valuation_table_formula_p2() {
    let o = run(&["valtable", "-p", "2", "-t", "4", "-m", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let predicted: Vec<String> = data_rows(&o).iter().map(|r| r[3].clone()).collect();
    assert_eq!(predicted, ["1", "-1", "-1", "-4"]);
}

#[test]
fn hypothesis_violation_exits_3() {
    let o = run(&["valtable", "-p", "3", "-t", "9", "-m", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("out of range"));
    let o = run(&[
        "verify",
        "multinomial",
        "--p",
        "3",
        "--t",
        "9",
        "--tuple",
        "[5,5]",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "zero", "--max-m", "60"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = data_rows(&o);
    assert_eq!(rows.len(), 59);
    assert!(rows.iter().all(|r| r[8] == "true"));

    let o = run(&["verify", "main", "--p", "3", "--t", "-9", "--m-max", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(data_rows(&o).len(), 9);

    let o = run(&["verify", "reconstruct", "--c1", "1/2", "--order", "40"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(data_rows(&o)[0][0], "reconstruct");

    for args in [
        &["verify", "multinomial", "--count", "200"][..],
        &[
            "verify",
            "c-recursion",
            "--max-r",
            "4",
            "--max-entry",
            "4",
            "--count",
            "50",
        ],
        &["verify", "c-valuation", "--max-r", "4", "--max-entry", "4"],
        &["verify", "lower-bound", "--p", "5"],
        &["verify", "equality", "--p", "7", "--t", "-49"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn lower_bound_for_p2_is_empty() {
    let o = run(&["verify", "lower-bound", "--p", "2", "--t", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(data_rows(&o).is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("p = 2"));
}

#[test]
fn json_lines_output() {
    let o = run(&["verify", "main", "--p", "2", "--t", "2", "--format", "json"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    for l in lines {
        assert!(l.starts_with(r#"{"result_id":"valuation","p":2,"t":2,"#));
        assert!(l.contains(r#""pass":true"#));
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "multinomial", "--count", "100", "--seed", "5"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn bernoulli_numbers() {
    assert_eq!(stdout(&run(&["bernoulli", "-n", "12"])).trim(), "-691/2730");
    assert_eq!(stdout(&run(&["bernoulli", "-n", "3"])).trim(), "0");
    let o = run(&["bernoulli", "-n", "4", "--all"]);
    assert_eq!(stdout(&o).lines().last().unwrap(), "4\t-1/30");
}

#[test]
fn reconstruct_prints_series() {
    let o = run(&["reconstruct", "--c1", "1/2", "--order", "3"]);
    assert_eq!(stdout(&o).trim(), r#"["1","1/2","-1/12","1/24"]"#);
    let o = run(&["reconstruct", "--c1", "-3/7", "--order", "2"]);
    assert_eq!(stdout(&o).trim(), r#"["1","-3/7","-3/49"]"#);
}
