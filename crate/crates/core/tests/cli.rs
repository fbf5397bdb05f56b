use std::io::Write;
use std::process::{Command, Output, Stdio};

fn glover(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_glover"))
        .args(args)
        .env_remove("GLOVER_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn dnsa_furtherex_root_zero() {
    let out = glover(&["dnsa", "--fixture", "furtherex", "--root", "0", "--format", "json"], "");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["halt_reason"], "dense");
    assert_eq!(v["marked_node"], 1);
    assert_eq!(v["oracle_confirms"], true);
}

#[test]
fn generated_cycle_piped_into_analyze() {
    let generated = glover(&["gen", "--kind", "cycle", "--n", "5"], "");
    assert_eq!(generated.status.code(), Some(0));
    let doc = String::from_utf8(generated.stdout).unwrap();
    let out = glover(&["analyze", "--format", "json"], &doc);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["seymour_set"].as_array().unwrap().len(), 5);
}

#[test]
fn claims_backtri_reports_back_arc_witness() {
    let out = glover(&["claims", "--fixture", "backtri", "--root", "0"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let line = text.lines().find(|l| l.starts_with("nbacase1")).unwrap();
    assert!(line.contains("VIOLATED"), "{line}");
}

#[test]
fn gen_seed_from_environment() {
    let run = |seed: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_glover"));
        cmd.args(["gen", "--kind", "random", "--n", "12", "--p", "0.4"]);
        match seed {
            Some(s) => cmd.env("GLOVER_SEED", s),
            None => cmd.env_remove("GLOVER_SEED"),
        };
        cmd.output().unwrap().stdout
    };
    assert_eq!(run(Some("7")), run(Some("7")));
    assert_ne!(run(Some("7")), run(Some("8")));
    let explicit = glover(&["gen", "--kind", "random", "--n", "12", "--p", "0.4", "--seed", "0"], "");
    assert_eq!(run(None), explicit.stdout);
}

#[test]
fn input_errors_exit_one() {
    let out = glover(&["analyze"], "not json");
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    assert_eq!(glover(&["layering", "--bogus"], "").status.code(), Some(1));
    assert_eq!(glover(&["dnsa", "--fixture", "cycle5", "--root", "9"], "").status.code(), Some(1));
    assert_eq!(glover(&["analyze", "--input", "/nonexistent/graph.json"], "").status.code(), Some(1));
}

#[test]
fn every_subcommand_runs_on_a_fixture() {
    for cmd in ["analyze", "layering", "triangles", "dnsa", "claims", "roundtrip"] {
        for format in ["table", "json"] {
            let out = glover(&[cmd, "--fixture", "irrint", "--format", format], "");
            assert_eq!(out.status.code(), Some(0), "{cmd} {format}: {}", String::from_utf8_lossy(&out.stderr));
            if format == "json" {
                json(&out);
            }
        }
    }
    let out = glover(&["split", "--fixture", "irrint", "--root", "0", "--boundary", "1", "--format", "json"], "");
    assert_eq!(out.status.code(), Some(0));
    let out = glover(&["bench", "--sizes", "500,1000", "--repeats", "1", "--format", "json"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn roundtrip_emit_is_canonical() {
    let doc = r#"{"2":{"targets":[0]},"0":{"targets":[1]}}"#;
    let out = glover(&["roundtrip", "--emit"], doc);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"0\":{\"targets\":[1]},\"1\":{\"targets\":[]},\"2\":{\"targets\":[0]}}\n");
}

#[test]
fn triangles_listing() {
    let out = glover(&["triangles", "--fixture", "furtherex", "--root", "0", "--list", "--format", "json"], "");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["triangles"].as_array().unwrap().len(), v["census"]["total"].as_u64().unwrap() as usize);
}
