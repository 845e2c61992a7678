use std::fs;

use axial::cli::{EXIT_INTERNAL, EXIT_INVALID, EXIT_OK, EXIT_UNSUPPORTED, EXIT_USAGE};
use axial::format::PresentationDoc;
use axial::report::RunReport;
use axial::run;
use axial_core::{Strictness, TrianglePresentation};

fn axial(args: &[&str]) -> axial::Outcome {
    let mut full = vec!["axial"];
    full.extend_from_slice(args);
    run(full)
}

#[test]
fn validate_builtin() {
    let o = axial(&["validate", "builtin:c1"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.contains("m = 7, q = 2"));
    assert!(o.stdout.contains("14 nodes, 21 edges, 3-regular, girth 6, diameter 3"));
}

#[test]
fn validate_reports_torsion() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("torsion.txt");
    fs::write(&path, "generators 7\nrelator 0 0 0\n").unwrap();
    let o = axial(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_INVALID);
    assert!(o.stderr.contains("torsion"), "{}", o.stderr);
}

#[test]
fn validate_accepts_other_representatives() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rotated.txt");
    let mut doc = PresentationDoc::from_presentation(&TrianglePresentation::c1());
    for r in &mut doc.relators {
        r.rotate_right(1);
    }
    fs::write(&path, doc.to_lines()).unwrap();
    let o = axial(&["validate", "--presentation", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
}

#[test]
fn syntax_errors_are_validation_failures() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "generators 7\nrelator 0 0\n").unwrap();
    let o = axial(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_INVALID);
    assert!(o.stderr.contains("line 2"));
}

#[test]
fn lenient_mode_keeps_warnings() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k33.txt");
    fs::write(&path, "generators 3\nrelator 0 0 1\nrelator 1 1 2\nrelator 2 2 0\n").unwrap();
    let strict = axial(&["validate", path.to_str().unwrap()]);
    assert_eq!(strict.code, EXIT_INVALID);
    let lenient = axial(&["validate", path.to_str().unwrap(), "--lenient"]);
    assert_eq!(lenient.code, EXIT_OK, "{}", lenient.stderr);
    assert!(lenient.stdout.contains("warning"));
}

#[test]
fn missing_inputs_are_usage_errors() {
    assert_eq!(axial(&["validate"]).code, EXIT_USAGE);
    assert_eq!(axial(&["validate", "builtin:nope"]).code, EXIT_USAGE);
    assert_eq!(axial(&["validate", "/nonexistent/file"]).code, EXIT_USAGE);
    assert_eq!(axial(&["centralizer", "builtin:c1", "--word", "0,x"]).code, EXIT_USAGE);
    assert_eq!(axial(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(
        axial(&["validate", "builtin:c1", "--presentation", "other.txt"]).code,
        EXIT_USAGE
    );
    assert_eq!(axial(&["--help"]).code, EXIT_OK);
}

#[test]
fn bent_word_is_unsupported() {
    let o = axial(&["centralizer", "builtin:c1", "--word", "0,2"]);
    assert_eq!(o.code, EXIT_UNSUPPORTED);
    assert!(o.stderr.contains("positions 0 and 1"));
    assert!(o.stderr.contains("out of scope"));
    assert_eq!(axial(&["centralizer", "builtin:c1", "--word", "9"]).code, EXIT_UNSUPPORTED);
    assert_eq!(
        axial(&["strips", "builtin:c1", "--wall", "0,5", "--length", "3"]).code,
        EXIT_UNSUPPORTED
    );
    // the internal-error code is reserved for broken invariants
    assert_ne!(EXIT_INTERNAL, EXIT_UNSUPPORTED);
}

#[test]
fn centralizer_text() {
    let o = axial(&["centralizer", "builtin:c1", "--word", "0,5"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("Z(g)/<g> = Z * (Z/2)^{*2} * (Z/4)"));
    assert!(o.stdout.contains("7 vertices, 7 edges, Betti number 1"));
    assert!(o.stdout.contains("h = x6^-1 x2 x6"));
}

#[test]
fn output_is_byte_stable() {
    for format in ["text", "json", "dot"] {
        let a = axial(&["centralizer", "builtin:c1", "--word", "0,1,4", "--format", format]);
        let b = axial(&["centralizer", "--presentation", "builtin:c1", "--word", "0,1,4", "--format", format]);
        assert_eq!(a, b, "{format}");
    }
}

#[test]
fn json_round_trips() {
    let o = axial(&["centralizer", "builtin:c1", "--word", "0,5", "--format", "structured"]);
    assert_eq!(o.code, EXIT_OK);
    let report: RunReport = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(report.iso_type(), Some("Z * (Z/2)^{*2} * (Z/4)"));
    assert_eq!(report.graph.vertex_count, 7);
    assert_eq!(report.to_json(), o.stdout);
    assert!(report.timing_ms.is_none());

    let timed = axial(&["centralizer", "builtin:c1", "--word", "0,5", "--format", "json", "--timing"]);
    let report: RunReport = serde_json::from_str(&timed.stdout).unwrap();
    assert!(report.timing_ms.is_some());
}

#[test]
fn dot_output_shape() {
    let o = axial(&["centralizer", "builtin:c1", "--word", "0,5", "--format", "dot"]);
    assert!(o.stdout.starts_with("graph quotient {"));
    assert_eq!(o.stdout.matches(" -- ").count(), 7);
    assert_eq!(o.stdout.matches("label=\"Z/2\"").count(), 3);
    assert_eq!(o.stdout.matches("style=dashed").count(), 1);
    assert!(o.stdout.contains("[0]\\nZ/4"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = axial(&[
        "centralizer",
        "builtin:c1",
        "--word",
        "0,5",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.is_empty());
    let written = fs::read_to_string(&path).unwrap();
    assert!(written.contains("\"iso_type\""));
}

#[test]
fn strips_at_a_wall_of_period_one() {
    let o = axial(&["strips", "builtin:c1", "--wall", "6", "--length", "2"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.contains("3 periodic strips, 2 up to the wall stabilizer"));
    let json = axial(&["strips", "builtin:c1", "--wall", "0,5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["strips"].as_array().unwrap().len(), 3);
    assert_eq!(v["classes"], 3);
}

#[test]
fn link_statistics() {
    let o = axial(&["link", "builtin:c1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["nodes"], 14);
    assert_eq!(v["girth"], 6);
    assert_eq!(v["diameter"], 3);
    assert_eq!(v["generalized_triangle"], true);
    assert_eq!(axial(&["link", "builtin:c1", "--format", "dot"]).code, EXIT_USAGE);
}

#[test]
fn dump_then_load_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (format, name) in [("text", "c1.txt"), ("json", "c1.json")] {
        let path = dir.path().join(name);
        let o = axial(&["dump", "builtin:c1", "--format", format, "--out", path.to_str().unwrap()]);
        assert_eq!(o.code, EXIT_OK);
        let text = fs::read_to_string(&path).unwrap();
        let loaded = PresentationDoc::parse(&text).unwrap().build(Strictness::Strict).unwrap();
        assert_eq!(loaded.relator_classes(), TrianglePresentation::c1().relator_classes());
        let from_file = axial(&["centralizer", path.to_str().unwrap(), "--word", "0,5", "--format", "json"]);
        let report: RunReport = serde_json::from_str(&from_file.stdout).unwrap();
        assert_eq!(report.iso_type(), Some("Z * (Z/2)^{*2} * (Z/4)"));
        let builtin = axial(&["centralizer", "builtin:c1", "--word", "0,5", "--format", "json"]);
        let builtin: RunReport = serde_json::from_str(&builtin.stdout).unwrap();
        assert_eq!(report.presentation.sha256, builtin.presentation.sha256);
    }
}
