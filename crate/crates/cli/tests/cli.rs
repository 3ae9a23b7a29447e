use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_orthoasym"));
    cmd.args(args).env_remove("ORTHOASYM_MAX_BITS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const ISMAIL_5: &[&str] = &[
    "compare",
    "--family",
    "ismail",
    "--region",
    "oscillatory",
    "--n",
    "5",
    "--point",
    "0.25,0",
];

const HEADER: &str = "family,region,n,point_re,point_im,exact_sign_or_phase,exact_log10,\
approx_sign_or_phase,approx_log10,rel_err,bits_used";

#[test]
fn exact_eval_prints_a_fraction() {
    let o = run(&[
        "eval", "--family", "legendre", "--n", "2", "--point", "2,0", "--exact",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "11/3\n");
    let o = run(&[
        "eval", "--family", "ismail", "--n", "5", "--point", "50,0", "--exact",
    ]);
    assert_eq!(stdout(&o), "1256170817/8\n");
}

#[test]
fn compare_emits_one_report_row() {
    let o = run(ISMAIL_5);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], HEADER);
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(fields.len(), 11);
    let rel: f64 = fields[9].parse().unwrap();
    assert!((rel - 0.045).abs() < 0.002, "{rel}");
    assert!(text.ends_with('\n'));
}

#[test]
fn json_round_trips_the_csv_values() {
    let csv = stdout(&run(ISMAIL_5));
    let mut args = ISMAIL_5.to_vec();
    args.extend(["--format", "json"]);
    let json: Value = serde_json::from_str(&stdout(&run(&args))).unwrap();
    let obj = json.as_array().unwrap()[0].as_object().unwrap();
    let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    let mut header: Vec<&str> = HEADER.split(',').collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    header.sort_unstable();
    assert_eq!(sorted, header);
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    let rel = obj["rel_err"].as_f64().unwrap();
    assert_eq!(format!("{rel:.16e}"), row[9]);
    let lg = obj["exact_log10"].as_f64().unwrap();
    assert_eq!(format!("{lg:.16e}"), row[6]);
}

#[test]
fn repeated_sweeps_are_byte_identical() {
    let args = [
        "sweep",
        "--family",
        "hermite",
        "--region",
        "oscillatory",
        "--ns",
        "16,32,64,128",
        "--point",
        "0.5,0.05",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let ns: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(ns, ["16", "32", "64", "128"]);
}

#[test]
fn empty_sweep_exits_one_without_a_body() {
    let o = run(&[
        "sweep",
        "--family",
        "ismail",
        "--region",
        "oscillatory",
        "--ns",
        "16,32",
        "--point",
        "0.25,0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    let cases: [&[&str]; 5] = [
        &[
            "compare", "--family", "legendre", "--region", "outer", "--n", "5", "--point", "2",
        ],
        &[
            "compare", "--family", "legendre", "--region", "outer", "--ns", "8,4", "--point", "2,0",
        ],
        &[
            "eval", "--family", "hermite", "--n", "3", "--point", "1,1", "--exact",
        ],
        &[
            "compare", "--family", "legendre", "--region", "outer", "--n", "5", "--point", "0.5,0",
        ],
        &["eval", "--family", "laguerre", "--n", "3", "--point", "1,0"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn precision_cap_exits_three() {
    let args = [
        "compare", "--family", "legendre", "--region", "outer", "--n", "40", "--point", "2,0.5",
    ];
    let o = run_env(&args, &[("ORTHOASYM_MAX_BITS", "100")]);
    assert_eq!(o.status.code(), Some(3));
    let o = run_env(&args, &[("ORTHOASYM_MAX_BITS", "lots")]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&args).status.code(), Some(0));
}

#[test]
fn quadrature_suite_passes() {
    let o = run(&["check", "--suite", "quadrature"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 18);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn impossible_tolerance_fails_every_suite() {
    for suite in ["quadrature", "lemma", "zeros"] {
        let o = run(&["check", "--suite", suite, "--tol", "1e-300"]);
        assert_eq!(o.status.code(), Some(1), "{suite}");
        assert!(stdout(&o).contains(",false"), "{suite}");
    }
    // a relative margin of 10 or a zero growth bound cannot be met
    for (suite, tol) in [("brackets", "10"), ("gamma", "0"), ("matching", "0")] {
        let o = run(&["check", "--suite", suite, "--tol", tol]);
        assert_eq!(o.status.code(), Some(1), "{suite}");
    }
    let mut args = ISMAIL_5.to_vec();
    args.extend(["--tol", "1e-12"]);
    let o = run(&args);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn zeros_are_listed_in_order() {
    let o = run(&[
        "zeros", "--family", "hermite", "--n", "4", "--format", "json",
    ]);
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let zs: Vec<f64> = json
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["zero"].as_str().unwrap().parse().unwrap())
        .collect();
    // monic Hermite pi_4 = x^4 - 3x^2 + 3/4
    let r = ((3.0 + 6f64.sqrt()) / 2.0).sqrt();
    assert_eq!(zs.len(), 4);
    assert!((zs[3] - r).abs() < 1e-15 && (zs[0] + r).abs() < 1e-15);
    assert!(zs.windows(2).all(|w| w[0] < w[1]));
}
