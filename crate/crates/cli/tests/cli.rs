use std::path::PathBuf;
use std::process::{Command, Output};

fn xi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xi")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("xi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn ring_info_reports_invariants() {
    let a = xi(&["ring", "info", "--ring", "A"]);
    assert_eq!(code(&a), 0);
    let text = stdout(&a);
    assert!(text.contains("Gorenstein    true"), "{text}");
    assert!(text.contains("Loewy length  3"), "{text}");
    let b = stdout(&xi(&["ring", "info", "--ring", "B"]));
    assert!(b.contains("(type 2)") && b.contains("Gorenstein    false"), "{b}");
}

#[test]
fn ring_files_and_error_codes() {
    let good = scratch("good.json");
    std::fs::write(&good, r#"{"p": 5, "kind": "monomial_quotient", "vars": ["x", "y"], "relations": ["x^2", "y^2"]}"#).unwrap();
    let o = xi(&["ring", "check", "--ring", good.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let malformed = scratch("malformed.json");
    std::fs::write(&malformed, r#"{"p": 5, "kind": "#).unwrap();
    assert_eq!(code(&xi(&["ring", "check", "--ring", malformed.to_str().unwrap()])), 2);

    // x·x = 1 makes x a unit: not local.
    let invalid = scratch("invalid.json");
    std::fs::write(&invalid, r#"{"p": 5, "kind": "structure_constants", "basis": ["1", "x"], "table": [[[1,0],[0,1]],[[0,1],[1,0]]]}"#)
        .unwrap();
    assert_eq!(code(&xi(&["ring", "check", "--ring", invalid.to_str().unwrap()])), 3);
    assert_eq!(code(&xi(&["ring", "check", "--ring", "no-such-ring"])), 2);
}

#[test]
fn xi_over_a_self_injective_ring() {
    let o = xi(&["xi", "--ring", "A", "--module", "k", "--seq", "--max", "6"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let values: Vec<&str> = text.lines().skip(1).take(7).map(|l| l.split_whitespace().nth(1).unwrap()).collect();
    assert_eq!(values, ["0"; 7]);
    assert!(text.contains("limit 0, certificate self-injective"), "{text}");

    let free = stdout(&xi(&["xi", "--ring", "A", "--module", "free:3", "--n", "0"]));
    assert_eq!(free.trim(), "xi(0) = 3");
}

#[test]
fn xi_report_json() {
    let path = scratch("report.json");
    let o = xi(&["xi", "--ring", "C", "--module", "m", "--seq", "--max", "3", "--json", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["module"], "m");
    assert_eq!(v["xi"].as_array().unwrap().len(), 4);
    assert_eq!(v["certificate"], "self-injective");
    assert_eq!(v["mu"], 2);
}

#[test]
fn budget_exhaustion_exits_4() {
    let o = xi(&["xi", "--ring", "B", "--module", "k", "--seq", "--max", "40"]);
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn hull_of_k_over_a_gorenstein_ring() {
    let o = xi(&["approx", "hull", "--ring", "A", "--module", "k", "--n", "0"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("mu(Y) - mu(X) = 0"), "{text}");
    assert!(text.contains("seed 0") && !text.contains("FAIL"), "{text}");
}

#[test]
fn origin_outside_the_class_exits_5() {
    let o = xi(&["approx", "origin", "--ring", "B", "--module", "k", "--n", "1"]);
    assert_eq!(code(&o), 5);
    assert!(String::from_utf8_lossy(&o.stderr).contains("Ext^1"));
}

#[test]
fn ab_of_a_free_module_is_the_identity() {
    let o = xi(&["approx", "ab", "--ring", "D", "--module", "free:1", "--n", "3", "--minimize"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("left   dim    0"), "{text}");
    assert!(text.contains("mid    dim    4  mu   1  free rank   1"), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn sequences_round_trip_through_verify() {
    for (kind, ring, n) in [("ab", "C", "2"), ("hull", "C", "1"), ("origin", "E", "1"), ("ab", "B", "1")] {
        let path = scratch(&format!("seq-{kind}-{ring}.json"));
        let made = xi(&["approx", kind, "--ring", ring, "--module", "m", "--n", n, "--minimize", "--json", path.to_str().unwrap()]);
        assert_eq!(code(&made), 0, "{}", stdout(&made));
        let checked = xi(&["verify", "--sequence", path.to_str().unwrap()]);
        assert_eq!(code(&checked), 0, "{}", stdout(&checked));
        let report = |s: &str| s.lines().filter(|l| !l.starts_with("seed") && !l.starts_with("mu(Y)")).collect::<Vec<_>>().join("\n");
        assert_eq!(report(&stdout(&made)), report(&stdout(&checked)));
    }
}

#[test]
fn census_is_deterministic() {
    let run = |seed: &str| stdout(&xi(&["census", "--ring", "D", "--count", "12", "--seed", seed, "--dim-max", "8", "--max", "4"]));
    let first = run("17");
    assert!(first.starts_with("census of 12 modules over D, seed 17"));
    assert_eq!(first, run("17"));
    assert_ne!(first, run("18"));
}

fn census_json(ring: &str) -> serde_json::Value {
    let path = scratch(&format!("census-{ring}.json"));
    let o = xi(&["census", "--ring", ring, "--count", "15", "--seed", "5", "--max", "5", "--json", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

#[test]
fn census_profiles_are_constant_over_a_and_b() {
    for ring in ["A", "B"] {
        let v = census_json(ring);
        for row in v["rows"].as_array().unwrap() {
            let xi: Vec<u64> = row["xi"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            assert!(xi.iter().all(|&x| x == xi[0]), "{ring}: {xi:?}");
        }
        assert_eq!(v["summary"]["constant"], v["summary"]["modules"]);
    }
}

#[test]
fn index_of_the_gorenstein_corpus() {
    for (ring, expected) in [("E", 2), ("A", 3), ("C", 3)] {
        let text = stdout(&xi(&["index", "--ring", ring]));
        assert!(text.trim_end().ends_with(&format!("index = {expected}")), "{ring}: {text}");
    }
}
