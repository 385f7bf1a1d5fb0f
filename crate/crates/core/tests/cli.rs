use serde_json::Value;
use sharpmap::cli::{run, EXIT_ASSERTION, EXIT_FAILS, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE};
use sharpmap::report::strip_timing;
use sharpmap::Polynomial;

fn ok(args: &[&str]) -> Value {
    let mut argv = vec!["sharpmap"];
    argv.extend_from_slice(args);
    let out = run(argv);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    let mut argv = vec!["sharpmap"];
    argv.extend_from_slice(args);
    run(argv).code
}

fn tmp(name: &str) -> String {
    let dir = std::env::temp_dir().join(format!("sharpmap-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name).to_string_lossy().into_owned()
}

fn all_pass(v: &Value) -> bool {
    v["assertions"].as_array().unwrap().iter().all(|a| a["pass"] == true)
}

#[test]
fn emitted_polynomial_round_trips_and_verifies() {
    let path = tmp("f9.json");
    let r = ok(&["family", "f", "--degree", "9", "--poly-out", &path]);
    assert!(all_pass(&r));
    let text = std::fs::read_to_string(&path).unwrap();
    let p = Polynomial::from_json_str(&text).unwrap();
    assert_eq!(p, sharpmap::families::f(9).unwrap());
    assert_eq!(p.to_json_string(), text.trim_end());

    let v = ok(&["verify", "--file", &path, "--expect-degree", "9", "--expect-terms", "6"]);
    assert!(all_pass(&v));
    assert_eq!(code(&["verify", "--file", &path, "--expect-terms", "7"]), EXIT_ASSERTION);

    let m = ok(&["map", "--file", &path, "--samples", "200"]);
    assert!(all_pass(&m));
}

#[test]
fn reports_are_deterministic_up_to_timing() {
    for args in [
        &["construct", "h", "--m", "3"][..],
        &["search", "--degree", "5"],
        &["gaps", "table", "--n", "4", "--to", "20"],
        &["map", "--file", "does-not-matter"],
    ] {
        let a = run(std::iter::once("sharpmap").chain(args.iter().copied()));
        let b = run(std::iter::once("sharpmap").chain(args.iter().copied()));
        assert_eq!(a.code, b.code);
        if a.code != EXIT_OK {
            continue;
        }
        let mut va: Value = serde_json::from_str(&a.stdout).unwrap();
        let mut vb: Value = serde_json::from_str(&b.stdout).unwrap();
        strip_timing(&mut va);
        strip_timing(&mut vb);
        assert_eq!(va, vb, "{args:?}");
    }
}

#[test]
fn pell_degrees() {
    let r = ok(&["pell", "--lambda", "12", "--count", "5"]);
    let ds: Vec<&str> = r["outputs"].as_array().unwrap().iter().map(|s| s["d"].as_str().unwrap()).collect();
    assert_eq!(ds, ["7", "97", "1351", "18817", "262087"]);
    assert!(all_pass(&r));
}

#[test]
fn search_statuses_and_exit_codes() {
    let r = ok(&["search", "--degree", "3"]);
    assert_eq!(r["outputs"]["status"], "Unique");
    let reps = &r["outputs"]["certificate"]["representatives"];
    let p = Polynomial::from_json_value(&reps[0]).unwrap();
    assert_eq!(p, sharpmap::families::f(3).unwrap());

    assert_eq!(ok(&["search", "--degree", "5"])["outputs"]["status"], "UniqueUpToEquivalence");
    assert_eq!(code(&["search", "--degree", "7"]), EXIT_FAILS);
    assert_eq!(code(&["search", "--degree", "9", "--budget-seconds", "0"]), EXIT_UNKNOWN);
}

#[test]
fn input_errors_exit_with_usage_code() {
    assert_eq!(code(&["construct", "q", "--degree", "9"]), EXIT_USAGE);
    assert_eq!(code(&["no-such-command"]), EXIT_USAGE);
    assert_eq!(code(&["verify", "--file", "/nonexistent/p.json"]), EXIT_USAGE);
    assert_eq!(code(&["gaps", "witness", "--n", "4", "--N", "9"]), EXIT_USAGE);
    assert_eq!(code(&["signature", "--recipe", "bogus"]), EXIT_USAGE);
}

#[test]
fn other_subcommands_pass_their_checks() {
    for args in [
        &["family", "even", "--k", "4"][..],
        &["construct", "q", "--degree", "97"],
        &["construct", "h-coefficients", "--m", "6"],
        &["construct", "mod6", "--k", "2"],
        &["construct", "ratio4-sites", "--r-max", "200"],
        &["construct", "ratio4", "--r", "5", "--s", "1"],
        &["gaps", "witness", "--n", "4", "--N", "10"],
        &["signature", "--find", "2,1", "--max-degree", "2"],
    ] {
        let r = ok(args);
        assert!(all_pass(&r), "{args:?}");
    }
    let md = run(["sharpmap", "gaps", "table", "--n", "3", "--to", "6", "--format", "markdown"]);
    assert_eq!(md.code, EXIT_OK);
    assert!(md.stdout.contains("| 5 | yes |"));
}
