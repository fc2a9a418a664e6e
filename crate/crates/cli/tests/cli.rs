//! End-to-end tests of the ns-bound binary: exit codes, report schemas, and
//! the worst-case-section invariance property.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_ns-bound"))
}

fn testdata(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../testdata")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn invariants_of_quadric() {
    let out = run(&["invariants", testdata("quadric.ideal").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(
        text.contains("dim X = 2   codim X = 1   deg X = 2"),
        "{text}"
    );
    assert!(text.contains("t^2 + 2*t + 1"), "{text}");
}

#[test]
fn invariants_json_fragment() {
    let tmp = std::env::temp_dir().join("nsbound-cli-invariants.json");
    let out = run(&[
        "invariants",
        testdata("twisted_cubic.ideal").to_str().unwrap(),
        "--json",
        tmp.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&tmp).unwrap()).unwrap();
    assert_eq!(v["schema"], "ns-bound/1");
    assert_eq!(v["invariants"]["dimX"], 1);
    assert_eq!(v["invariants"]["degX"], 3);
    assert_eq!(v["invariants"]["hp"], "3*t + 1");
    std::fs::remove_file(&tmp).ok();
}

#[test]
fn bound_degenerate_cases() {
    let out = run(&["bound", testdata("twisted_cubic.ideal").to_str().unwrap()]);
    assert!(out.status.success());
    assert!(
        stdout_of(&out).contains("torsion bound: 1"),
        "{}",
        stdout_of(&out)
    );

    let out = run(&["bound", testdata("hyperplane.ideal").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("torsion bound: 1"), "{text}");
    assert!(text.contains("hyperplane"), "{text}");
}

#[test]
fn bound_json_round_trips() {
    let tmp = std::env::temp_dir().join("nsbound-cli-roundtrip.json");
    let out = run(&[
        "bound",
        testdata("quadric.ideal").to_str().unwrap(),
        "--check-smooth",
        "--json",
        tmp.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&tmp).unwrap();
    // Typed round trip: parse(serialize(report)) == report.
    let typed: nsbound_cli::report::BoundDocument = serde_json::from_str(&text).unwrap();
    let re_serialized = serde_json::to_string_pretty(&typed).unwrap() + "\n";
    assert_eq!(text, re_serialized);
    let re_parsed: nsbound_cli::report::BoundDocument =
        serde_json::from_str(&re_serialized).unwrap();
    assert_eq!(typed, re_parsed);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["smoothness"], "smooth");
    assert_eq!(doc["closed_form"]["t_closed"], "429981696");
    assert_eq!(
        doc["closed_form"]["hilbert_route"]["value"]["kind"],
        "tower"
    );
    assert_eq!(
        doc["closed_form"]["hilbert_route"]["value"]["inner_exp"],
        "216"
    );
    assert_eq!(doc["sharpened"]["phi_exact"], 2);
    assert_eq!(doc["sharpened"]["t_sharp"], 24);
    assert_eq!(doc["generator_bound"]["value"]["decimal"], "0");
    std::fs::remove_file(&tmp).ok();
}

#[test]
fn paper_faithful_depends_only_on_numerical_data() {
    // Two different smooth quadrics in P^3: same (d, r, codim, deg), so the
    // worst-case sections must be identical.
    let tmp_dir = std::env::temp_dir();
    let other = tmp_dir.join("nsbound-other-quadric.ideal");
    std::fs::write(&other, "vars 4\nx0^2 + x1^2 + x2^2 + x3^2\n").unwrap();
    let json_a = tmp_dir.join("nsbound-faithful-a.json");
    let json_b = tmp_dir.join("nsbound-faithful-b.json");
    let out = run(&[
        "bound",
        testdata("quadric.ideal").to_str().unwrap(),
        "--paper-faithful",
        "--json",
        json_a.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&[
        "bound",
        other.to_str().unwrap(),
        "--paper-faithful",
        "--json",
        json_b.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let a: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_a).unwrap()).unwrap();
    let b: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_b).unwrap()).unwrap();
    assert_eq!(a["closed_form"], b["closed_form"]);
    assert_eq!(a["generator_bound"], b["generator_bound"]);
    assert!(a["sharpened"].is_null());
    for f in [&json_a, &json_b, &other] {
        std::fs::remove_file(f).ok();
    }
}

#[test]
fn singular_input_warns_but_reports() {
    // Quadric cone in P^3: singular at the vertex (0:0:0:1).
    let tmp = std::env::temp_dir().join("nsbound-cone.ideal");
    std::fs::write(&tmp, "vars 4\nx0*x1 - x2^2\n").unwrap();
    let out = run(&["bound", tmp.to_str().unwrap(), "--check-smooth"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("smoothness:         singular"), "{text}");
    assert!(text.contains("smoothness hypothesis FAILS"), "{text}");
    assert!(
        text.contains("torsion bound (hilbert scheme route)"),
        "{text}"
    );
    std::fs::remove_file(&tmp).ok();
}

#[test]
fn gotzmann_hp_examples() {
    let out = run(&["gotzmann", "--hp", "2t+1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("[1, 1]"), "{text}");
    assert!(text.contains("gotzmann number:    2"), "{text}");

    let out = run(&["gotzmann", "--hp", "1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("[0]"), "{text}");
    assert!(text.contains("gotzmann number:    1"), "{text}");
}

#[test]
fn gotzmann_inadmissible_reports_trace_and_exits_2() {
    let out = run(&["gotzmann", "--hp", "t^2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not an admissible"), "{err}");
    assert!(err.contains("step 2"), "{err}");
}

#[test]
fn gotzmann_from_ideal_file() {
    let out = run(&["gotzmann", testdata("quadric.ideal").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    // Subscheme polynomial (t+1)^2 decomposes as [2, 2].
    assert!(text.contains("[2, 2]"), "{text}");
}

#[test]
fn parse_error_exits_2_and_names_line() {
    let tmp = std::env::temp_dir().join("nsbound-bad.ideal");
    std::fs::write(&tmp, "vars 3\nx0^2 + x1\n").unwrap();
    let out = run(&["invariants", tmp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains(":2:"), "{err}");
    assert!(err.contains("not homogeneous"), "{err}");
    std::fs::remove_file(&tmp).ok();
}

#[test]
fn resource_limit_exits_3() {
    let out = run(&[
        "bound",
        testdata("ci_2_3.ideal").to_str().unwrap(),
        "--max-pairs",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("budget"), "{err}");
}

#[test]
fn verify_small_grid_succeeds() {
    let tmp = std::env::temp_dir().join("nsbound-verify.json");
    let out = run(&[
        "verify",
        "--r",
        "3..4",
        "--d",
        "2..3",
        "--json",
        tmp.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&tmp).unwrap()).unwrap();
    assert_eq!(v["schema"], "ns-bound/1");
    assert_eq!(v["failures"], 0);
    assert!(v["total"].as_u64().unwrap() > 0);
    std::fs::remove_file(&tmp).ok();
}

#[test]
fn verify_rejects_r2_without_only_binom() {
    let out = run(&["verify", "--r", "2..2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "--r", "2..2", "--only", "binom"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn verify_hoa_step_surfaces_discrepancies_with_exit_4() {
    let out = run(&["verify", "--r", "4..4", "--d", "2..2", "--only", "hoa-step"]);
    assert_eq!(out.status.code(), Some(4));
    let text = stdout_of(&out);
    assert!(text.contains("DISCREPANCY LOG"), "{text}");
    assert!(text.contains("a=3"), "{text}");
}
