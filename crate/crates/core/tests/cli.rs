use linwave::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("linwave").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn verify_passes_for_every_spin() {
    for spin in ["1/2", "1", "3/2", "0.5", "1.5"] {
        let (code, out, _) = call(&["verify", "--spin", spin]);
        assert_eq!(code, 0, "{out}");
        assert!(!out.contains("FAIL"));
    }
}

#[test]
fn verify_json_lists_checks() {
    let (code, out, _) = call(&["verify", "--spin", "1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["spin"], "1");
    assert_eq!(v["all_passed"], true);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["check_name"].as_str().unwrap()).collect();
    assert!(names.contains(&"commutation identity"));
    assert!(names.contains(&"factorization"));
}

#[test]
fn reduce_json_reports_kappa() {
    let (code, out, _) = call(&["reduce", "--spin", "3/2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["kappa"], "2/3");
    assert_eq!(v["decomposition"]["c"], "-3/2");
    assert_eq!(v["dimension"], 4);
}

#[test]
fn reduce_free_particle() {
    for spin in ["1/2", "1", "3/2"] {
        let (code, out, _) = call(&["reduce", "--spin", spin, "--omega", "0", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["free_particle"], true);
        assert!(v["decomposition"].is_null());
    }
}

#[test]
fn json_output_is_byte_stable() {
    for args in [
        &["reduce", "--spin", "1", "--json"][..],
        &["verify", "--spin", "3/2", "--json"][..],
        &["matrices", "--spin", "3/2"][..],
        &["spectrum", "--spin", "1", "--emax", "3", "--format", "json", "--grid-n", "500"][..],
    ] {
        let first = call(args);
        let second = call(args);
        assert_eq!(first.0, 0);
        assert_eq!(first.1, second.1, "{args:?}");
    }
}

#[test]
fn spectrum_csv_ground_row() {
    let (code, out, _) = call(&["spectrum", "--spin", "1/2", "--emax", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "spin,n_r,l,j,E_analytic,E_numeric,deviation,degeneracy");
    let row = lines.find(|l| l.starts_with("1/2,0,0,1/2,")).expect("ground row");
    let cols: Vec<&str> = row.split(',').collect();
    assert_eq!(cols[4], "0");
    assert!(cols[5].parse::<f64>().unwrap().abs() < 5e-4);
    assert_eq!(cols[7], "2");
}

#[test]
fn spectrum_json_parses() {
    let (code, out, _) = call(&["spectrum", "--spin", "3/2", "--emax", "1", "--lmax", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["kappa"], "2/3");
    assert!(v["max_abs_dev"].as_f64().unwrap() < 5e-4);
}

#[test]
fn matrices_single_field_round_trips() {
    let (code, out, _) = call(&["matrices", "--spin", "1", "--field", "B2"]);
    assert_eq!(code, 0);
    let m = linwave::algebra::json::from_json(out.trim()).unwrap();
    assert_eq!(m, linwave::build_model(linwave::Spin::One).b[1]);
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("linwave-cli-{}.json", std::process::id()));
    let (code, out, _) = call(&["reduce", "--spin", "1/2", "--json", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(written.contains("\"kappa\": \"2\""));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--spin", "2"][..],
        &["verify"][..],
        &["verify", "--spin", "1", "--bogus"][..],
        &["frobnicate"][..],
        &["spectrum", "--spin", "1", "--radius", "-1"][..],
        &["spectrum", "--spin", "1", "--emax", "-2"][..],
        &["spectrum", "--spin", "1", "--grid-n", "3"][..],
        &["matrices", "--spin", "1/2", "--field", "K1"][..],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}
