use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bohr-lab"))
        .args(args)
        .env("BOHR_LAB_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

/// Fixed-format value of `"key": value` as printed (not re-parsed).
fn printed_field(text: &str, key: &str) -> String {
    let pat = format!("\"{key}\": ");
    let start = text.find(&pat).unwrap_or_else(|| panic!("{key} missing")) + pat.len();
    text[start..].split([',', '\n']).next().unwrap().to_string()
}

fn csv_column(text: &str, name: &str) -> Vec<String> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let idx = reader.headers().unwrap().iter().position(|h| h == name).unwrap();
    reader.records().map(|r| r.unwrap()[idx].to_string()).collect()
}

#[test]
fn radius_golden_values() {
    let o = run(&["radius", "--theorem", "quasi-starlike", "--psi", "janowski:1,-1", "--K", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(printed_field(&text, "r0"), "0.171572875254");
    assert_eq!(printed_field(&text, "capped"), "false");
    let v = json(&o);
    for key in ["theorem", "psi", "K", "r0", "r_star", "capped", "residual", "iterations", "order_used"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }

    let o = run(&["radius", "--theorem", "log-convex", "--psi", "janowski:1,-1"]);
    assert_eq!(printed_field(&stdout(&o), "r0"), "0.632120558829");

    let o = run(&["radius", "--theorem", "quasi-convex", "--psi", "janowski:1,-1", "--K", "1"]);
    assert_eq!(printed_field(&stdout(&o), "r0"), "0.333333333333");
}

#[test]
fn radius_csv_and_precision() {
    let o = run(&["radius", "--theorem", "convex-univalent", "--K", "3", "--format", "csv", "--precision", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(csv_column(&stdout(&o), "r0"), ["0.2500"]);
}

#[test]
fn rogosinski_radius() {
    let o = run(&["radius", "--theorem", "rogosinski", "--n", "1", "--N", "1", "--K", "1"]);
    assert_eq!(printed_field(&stdout(&o), "r0"), format!("{:.12}", 5.0 - 24f64.sqrt()));
}

#[test]
fn series_golden_values() {
    let o = run(&["series", "--target", "extremal-starlike", "--psi", "janowski:1,-1", "--order", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("exponent,re,im\n"));
    let re: Vec<f64> = csv_column(&text, "re").iter().map(|x| x.parse().unwrap()).collect();
    assert_eq!(re, [0.0, 1.0, 2.0, 3.0, 4.0, 5.0]);

    let o = run(&["series", "--target", "bb-dominant", "--psi", "janowski:1,-1", "--order", "4"]);
    let re: Vec<f64> = csv_column(&stdout(&o), "re").iter().map(|x| x.parse().unwrap()).collect();
    assert_eq!(re, [1.0; 5]);

    let o = run(&["series", "--target", "log-gamma", "--of", "extremal-convex", "--terms", "4"]);
    let text = stdout(&o);
    assert!(text.starts_with("m,gamma_re,gamma_im\n"));
    assert_eq!(
        csv_column(&text, "gamma_re"),
        ["0.500000000000", "0.250000000000", "0.166666666667", "0.125000000000"]
    );
}

#[test]
fn table_sweeps() {
    let o = run(&["table", "--sweep", "k", "--k-list", "1,2,3,5,10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let diffs = csv_column(&text, "abs_diff");
    assert_eq!(diffs.len(), 5);
    assert!(diffs.iter().all(|d| d.parse::<f64>().unwrap() < 1e-9));

    let o = run(&["table", "--sweep", "alpha"]);
    let text = stdout(&o);
    let k_formula = run(&["table", "--sweep", "k", "--k-list", "1"]);
    assert_eq!(csv_column(&text, "r0")[0], csv_column(&stdout(&k_formula), "r0")[0]);

    let o = run(&["table", "--sweep", "b1"]);
    let r0: Vec<f64> = csv_column(&stdout(&o), "r0").iter().map(|x| x.parse().unwrap()).collect();
    assert!(r0.windows(2).all(|w| w[1] <= w[0]));
    assert!(r0.first() > r0.last());
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "--suite", "majorant", "--samples", "1000", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v["max_slack"].as_f64().unwrap() <= 1e-9);
    assert!(v.get("runtime_ms").is_none());

    let o = run(&["verify", "--suite", "bohr", "--psi", "janowski:1,-1", "--K", "2", "--samples", "500", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let eq = &v["equality_cases"][0];
    assert!(eq["abs_diff"].as_f64().unwrap() < 1e-8);
    assert_eq!(v["controls"][0]["violated"], true);

    let o = run(&["verify", "--suite", "log-gamma", "--psi", "janowski:1,-1", "--samples", "200"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!json(&o)["equality_cases"].as_array().unwrap().is_empty());

    let o = run(&["verify", "--suite", "rogosinski", "--samples", "50", "--timing"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["runtime_ms"].is_u64());
}

#[test]
fn verify_failures_exit_one() {
    // the tail form with N = 2 has counterexamples among the samples
    let o = run(&["verify", "--suite", "majorant", "--N", "2", "--samples", "50", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("sample_id,check,r,lhs,rhs,slack\n"));
    assert!(text.lines().count() > 1);
}

#[test]
fn output_is_byte_stable() {
    let args = ["verify", "--suite", "bohr", "--K", "3", "--samples", "40", "--seed", "9"];
    let a = run(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_bohr-lab"))
        .args(args)
        .env("BOHR_LAB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.contains(&b'\r'));
}

#[test]
fn parameter_errors_exit_three() {
    let cases: [(&[&str], &str); 6] = [
        (&["radius", "--theorem", "quasi-starlike", "--K", "0.5"], "--K"),
        (&["radius", "--theorem", "quasi-starlike", "--psi", "janowski:1"], "--psi"),
        (&["radius", "--theorem", "quasi-starlike", "--psi", "janowski:-1,1"], "--psi"),
        (&["radius", "--theorem", "order-alpha"], "--alpha"),
        (&["verify", "--suite", "majorant", "--samples", "0"], "--samples"),
        (&["radius", "--theorem", "bogus"], "--theorem"),
    ];
    for (args, flag) in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(3), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert!(err.contains(flag), "{args:?}: {err}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn admissibility_and_probe_errors_exit_three() {
    let o = run(&["radius", "--theorem", "kucst", "--k-uniform", "1", "--alpha", "0"]);
    assert_eq!(o.status.code(), Some(3));
    // 1 + z + 5 z^5 is not convex, so the convex-psi log theorem is refused
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("psi.csv");
    std::fs::write(&path, "exponent,re,im\n0,1,0\n1,1,0\n5,5,0\n").unwrap();
    let spec = format!("custom:@{}", path.display());
    let o = run(&["radius", "--theorem", "log-starlike", "--psi", &spec]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8(o.stderr).unwrap().contains("probe"));
}

#[test]
fn custom_series_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("linear.csv");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# 1 + z/2").unwrap();
    writeln!(f, "0,1,0").unwrap();
    writeln!(f, "1,0.5").unwrap();
    drop(f);
    let spec = format!("custom:@{}", path.display());
    let custom = run(&["radius", "--theorem", "quasi-starlike", "--psi", &spec, "--K", "2", "--format", "csv"]);
    assert_eq!(custom.status.code(), Some(0), "{}", String::from_utf8_lossy(&custom.stderr));
    let named = run(&["radius", "--theorem", "quasi-starlike", "--psi", "janowski:0.5,0", "--K", "2", "--format", "csv"]);
    let a: f64 = csv_column(&stdout(&custom), "r0")[0].parse().unwrap();
    let b: f64 = csv_column(&stdout(&named), "r0")[0].parse().unwrap();
    assert!((a - b).abs() < 1e-10, "{a} vs {b}");
}

#[test]
fn config_file_merges_under_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    std::fs::write(&path, r#"{"theorem": "quasi-convex", "K": 3, "format": "csv"}"#).unwrap();
    let cfg = path.to_str().unwrap();
    let o = run(&["radius", "--config", cfg]);
    assert_eq!(csv_column(&stdout(&o), "r0"), ["0.250000000000"]);
    let o = run(&["radius", "--config", cfg, "--K", "1"]);
    assert_eq!(csv_column(&stdout(&o), "r0"), ["0.333333333333"]);

    let o = run(&["radius", "--config", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&[]).status.code(), Some(3));
}
