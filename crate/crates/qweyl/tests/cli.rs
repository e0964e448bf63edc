//! End-to-end runs of the command dispatcher.

use qweyl::aut::TorusCheck;
use qweyl::ce::CEStructureReport;
use qweyl::cli::{run, Outcome, EXIT_ERROR, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE};
use qweyl::config::{Format, RunConfig};
use qweyl::quantum::IdentityReport;
use qweyl::spectrum::{Atlas, SpectrumReport};
use serde::de::DeserializeOwned;
use serde_json::Value;

fn qweyl(args: &[&str]) -> Outcome {
    run(std::iter::once("qweyl").chain(args.iter().copied()))
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

/// Parses into the typed report and checks that re-serializing gives the same JSON.
fn round_trip<T: DeserializeOwned + serde::Serialize>(out: &Outcome) -> T {
    let v = json(out);
    let typed: T = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&typed).unwrap(), v);
    typed
}

const F5: &str = "Fp:5;n=2;q=4";
const F7: &str = "Fp:7;n=3;q=2";
const F13: &str = "Fp:13;n=4;q=5";

#[test]
fn classify_split_quaternion_algebra() {
    let out = qweyl(&["ce", "classify", "--field", F5, "--s", "2", "--a", "3"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let r: CEStructureReport = round_trip(&out);
    let v = json(&out);
    assert_eq!(v["index"], 1);
    assert_eq!(v["matrix_size"], 2);
    assert_eq!(r, serde_json::from_value(v).unwrap());
}

#[test]
fn weyl_identities_report() {
    let out = qweyl(&["verify", "identities", "--algebra", "A1", "--field", F7]);
    assert_eq!(out.code, EXIT_OK);
    let r: IdentityReport = round_trip(&out);
    let failing: Vec<_> = r.checks.iter().filter(|c| !c.passed).collect();
    assert!(failing.iter().all(|c| c.as_stated && c.name.starts_with("[x, y^")), "{failing:?}");
    let rederived: Vec<_> = r.checks.iter().filter(|c| !c.as_stated).collect();
    assert!(!rederived.is_empty() && rederived.iter().all(|c| c.passed));
}

#[test]
fn identity_matrix_is_a_torus_automorphism() {
    let out = qweyl(&[
        "aut", "check", "--algebra", "B", "--matrix", "1,0,0,1", "--lambda", "1", "--mu", "1", "--field", F13,
    ]);
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["valid"], true);
    let check: TorusCheck = serde_json::from_value(v["check"].clone()).unwrap();
    assert!(check.automorphism && check.det == 1);
    assert_eq!(v["automorphism"]["inner"], true);
}

#[test]
fn rejected_torus_matrix_is_reported() {
    let out = qweyl(&["aut", "check", "--algebra", "B", "--matrix", "2,0,0,1", "--field", F13]);
    assert_eq!(out.code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["valid"], false);
    assert!(v["reason"].is_string());
}

#[test]
fn unknown_index_has_its_own_exit_code() {
    let out = qweyl(&["ce", "classify", "--field", "Frat:Fp:7;n=3;q=2", "--s", "t", "--a", "3"]);
    assert_eq!(out.code, EXIT_UNKNOWN);
    assert_eq!(json(&out)["verdict"], "Unknown");
}

#[test]
fn errors_are_machine_readable() {
    let out = qweyl(&["ce", "classify", "--field", "Fp:5;n=2;q=2", "--s", "2", "--a", "3"]);
    assert_eq!(out.code, EXIT_ERROR);
    let v = json(&out);
    assert!(v["error"]["kind"].is_string() && v["error"]["message"].is_string());
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(qweyl(&["ce", "classify", "--field", F5, "--s", "2"]).code, EXIT_USAGE);
    assert_eq!(qweyl(&["frobnicate"]).code, EXIT_USAGE);
    let two = qweyl(&["spec", "classify", "--algebra", "A1", "--field", F7, "--zero", "--named", "t"]);
    assert_eq!(two.code, EXIT_USAGE);
    let dot = qweyl(&["--format", "dot", "ce", "classify", "--field", F5, "--s", "2", "--a", "3"]);
    assert_eq!(dot.code, EXIT_USAGE);
    assert_eq!(qweyl(&["--help"]).code, EXIT_OK);
}

#[test]
fn spectrum_reports_round_trip() {
    let out = qweyl(&["spec", "classify", "--algebra", "A1", "--field", F7, "--point", "r=1,t=3"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let r: SpectrumReport = round_trip(&out);
    assert!(r.primes.iter().all(|p| p.primitive == p.maximal));
    let out = qweyl(&["spec", "atlas", "--algebra", "B", "--field", F5, "--max-ext-degree", "2"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let atlas: Atlas = round_trip(&out);
    assert!(atlas.checks.passed());
    let dot = qweyl(&["--format", "dot", "spec", "atlas", "--algebra", "B", "--field", F5]);
    assert!(dot.stdout.starts_with("graph"), "{}", dot.stdout);
}

#[test]
fn text_output_is_not_json() {
    let out = qweyl(&["--format", "text", "a1", "module-l", "--field", F7]);
    assert_eq!(out.code, EXIT_OK);
    assert!(serde_json::from_str::<Value>(&out.stdout).is_err());
    assert!(!out.stdout.trim().is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["ce", "classify", "--field", F13, "--s", "2", "--a", "7"];
    let first = qweyl(&args);
    for _ in 0..3 {
        assert_eq!(qweyl(&args).stdout, first.stdout);
    }
    let frat = ["ce", "classify", "--field", "Frat:Fp:3;n=2;q=2", "--s", "t", "--a", "t+1"];
    assert_eq!(qweyl(&frat).stdout, qweyl(&frat).stdout);
}

#[test]
fn config_file_sets_bounds_and_format() {
    let dir = std::env::temp_dir().join(format!("qweyl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.toml");
    std::fs::write(&good, "search_budget = 5000\nfunction_field_degree_bound = 2\nformat = \"text\"\n").unwrap();
    let cfg = RunConfig::load(&good).unwrap();
    assert_eq!((cfg.search_budget, cfg.function_field_degree_bound), (5000, 2));
    assert_eq!(cfg.format, Format::Text);
    assert_eq!(cfg.atlas_ext_degree, 1);
    let out = qweyl(&["--config", good.to_str().unwrap(), "ce", "classify", "--field", F5, "--s", "2", "--a", "3"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(serde_json::from_str::<Value>(&out.stdout).is_err());

    let zero = dir.join("zero.toml");
    std::fs::write(&zero, "search_budget = 0\n").unwrap();
    assert!(RunConfig::load(&zero).is_err());
    let out = qweyl(&["--config", zero.to_str().unwrap(), "ce", "classify", "--field", F5, "--s", "2", "--a", "3"]);
    assert_eq!(out.code, EXIT_USAGE);

    assert!(RunConfig::from_toml("budget = 3\n").is_err());
    assert!(qweyl(&["--config", dir.join("missing.toml").to_str().unwrap(), "a1", "module-l", "--field", F7]).code != EXIT_OK);
    std::fs::remove_dir_all(&dir).unwrap();
}
