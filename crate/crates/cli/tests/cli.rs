use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewring")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    });
    (v, out.status.code().unwrap())
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn verify_accepts_and_rejects() {
    let (v, code) = json(&["verify", &data("snake.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["valid"], true);
    assert_eq!(v["input"], "action");

    let out = run(&["verify", &data("left_zero.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("witness"), "{}", stderr(&out));

    let out = run(&["verify", &data("empty.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("parse error"));

    let (v, code) = json(&["verify", &data("pair_groupoid.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["idempotents"], serde_json::json!(["(1,1)", "(2,2)"]));
}

#[test]
fn malformed_json_reports_position() {
    let dir = std::env::temp_dir().join(format!("skewring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("broken.json");
    std::fs::write(&f, "{\n  \"elements\": [\"a\"],\n  \"table\": [[0]\n}\n").unwrap();
    let out = run(&["verify", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 4"), "{}", stderr(&out));
}

#[test]
fn snake_stack() {
    let (v, code) = json(&["analyze", &data("snake.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["minimal"]["minimal"], false);
    assert_eq!(v["principal"]["principal"], true);
    assert_eq!(v["free"]["free"], false);
    assert_eq!(v["max_commutative"]["max_commutative"], false);
    assert_eq!(v["simple"], false);
    assert_eq!(v["max_commutative"]["witness"], "1_{tail,inf}δ_z");
    assert!(v["witness"].as_str().unwrap().starts_with("proper invariant ideal"));
    assert_eq!(v["agree"], true);

    let (v, _) = json(&["analyze", &data("snake.json"), "--window", "5", "--carrier", "q"]);
    assert_eq!(v["snake"]["window"], 5);
    assert_eq!(v["carrier"], "q");
    assert_eq!(v["quotient_dim"], 7);
}

#[test]
fn translation_is_simple() {
    let (v, code) = json(&["analyze", &data("z2_translation.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["carrier"], "gf:3");
    for key in ["minimal", "principal", "free", "s_simple", "max_commutative"] {
        assert!(v[key].as_object().unwrap().values().any(|x| x == true), "{key}");
    }
    assert_eq!(v["simple"], true);
    assert!(v["witness"].is_null());
    assert_eq!(v["bruteforce"]["simple"], true);
}

#[test]
fn groupoid_stack() {
    let (v, code) = json(&["analyze", &data("pair_groupoid.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["effective"], true);
    assert_eq!(v["minimal"], true);
    assert_eq!(v["simple"], true);
    assert_eq!(v["isomorphism"]["psi_inverts_phi"], true);

    let (v, _) = json(&["analyze", &data("pair_groupoid.json"), "--carrier", "zmod:4"]);
    assert_eq!(v["simple"], false);
    assert_eq!(v["non_field_ideal"]["factor"], 2);
    assert_eq!(v["witness"], "proper ideal 2·A_R(G)");
}

#[test]
fn gallery_entries() {
    let (v, code) = json(&["gallery", "unit-groupoid"]);
    assert_eq!(code, 0);
    assert_eq!(v["minimal"], false);
    assert_eq!(v["minimal_witness"], serde_json::json!(["1"]));

    let (v, _) = json(&["gallery", "z4-coefficients"]);
    assert_eq!(v["simple"], false);
    assert_eq!(v["carrier_is_field"], false);

    let (v, _) = json(&["gallery", "snake"]);
    assert_eq!(v["snake"]["window"], 4);

    let out = run(&["gallery", "nope"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("munn-semilattice"));
}

#[test]
fn cap_exceeded_exit_code() {
    let out = run(&["analyze", &data("snake.json"), "--bruteforce-cap", "3", "--require-bruteforce"]);
    assert_eq!(out.status.code(), Some(3));
    let (v, code) = json(&["analyze", &data("snake.json"), "--bruteforce-cap", "3"]);
    assert_eq!(code, 0);
    assert!(v["bruteforce"].is_null());
    assert!(v["bruteforce_skipped"].as_str().unwrap().contains("cap"));
}

#[test]
fn window_rejected_off_the_snake() {
    let out = run(&["analyze", &data("z2_translation.json"), "--window", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        vec!["--json", "analyze", "SNAKE"],
        vec!["--json", "analyze", "PAIR"],
        vec!["--json", "corpus", "--n", "10", "--seed", "5"],
        vec!["gallery", "munn-semilattice"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| match *a {
                "SNAKE" => data("snake.json"),
                "PAIR" => data("pair_groupoid.json"),
                other => other.to_string(),
            })
            .collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn text_and_json_agree() {
    fn leaves(v: &Value, path: &str, out: &mut Vec<String>) {
        match v {
            Value::Object(m) => {
                for (k, c) in m {
                    leaves(c, &if path.is_empty() { k.clone() } else { format!("{path}.{k}") }, out);
                }
            }
            Value::Array(a) if a.iter().any(|i| i.is_object() || i.is_array()) => {
                for (i, c) in a.iter().enumerate() {
                    leaves(c, &format!("{path}[{i}]"), out);
                }
            }
            _ => out.push(path.to_string()),
        }
    }
    for args in [vec!["analyze", "SNAKE"], vec!["gallery", "pair-groupoid"], vec!["gallery", "z4-coefficients"]] {
        let args: Vec<String> =
            args.iter().map(|a| if *a == "SNAKE" { data("snake.json") } else { a.to_string() }).collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (v, _) = json(&args);
        let text = String::from_utf8(run(&args).stdout).unwrap();
        let mut paths = Vec::new();
        leaves(&v, "", &mut paths);
        let text_paths: Vec<&str> = text.lines().map(|l| l.split_once(": ").unwrap().0).collect();
        assert_eq!(paths, text_paths);
        assert!(text.lines().any(|l| l == "simple: false" || l == "simple: true"));
    }
}

#[test]
fn corpus_runs_clean() {
    let (v, code) = json(&["corpus", "--n", "12", "--seed", "9"]);
    assert_eq!(code, 0);
    assert_eq!(v["instances"], 12);
    assert_eq!(v["failures"], serde_json::json!([]));
}
