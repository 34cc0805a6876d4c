use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn inull(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inull")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json_of(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = inull(&all);
    assert!(o.status.success(), "{}", stderr(&o));
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn no_floats(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_u64() || n.is_i64(),
        Value::Array(a) => a.iter().all(no_floats),
        Value::Object(m) => m.values().all(no_floats),
        _ => true,
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn analyze_g54_text() {
    let o = inull(&["analyze", "g54"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("forms_dim: 4"), "{s}");
    assert!(s.contains("quadratic: yes"));
    assert!(s.contains("I-null: no"));
    assert!(s.contains("I_B = ω^{1,2,3} = dω^{1,5}"), "{s}");
}

#[test]
fn analyze_g54_json_keys() {
    let v = json_of(&["analyze", "g54"]);
    for key in ["forms_dim", "ell", "dim_ker_I", "dim_Im_I", "I_null", "I_exact", "quadratic", "witnesses"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["forms_dim"], 4);
    assert_eq!(v["ell"], 2);
    assert_eq!(v["dim_ker_I"], 3);
    assert_eq!(v["dim_Im_I"], 1);
    assert_eq!(v["I_null"], false);
    assert_eq!(v["I_exact"], true);
    assert_eq!(v["quadratic"]["value"], true);
    let w = &v["witnesses"][0];
    assert_eq!(w["I_B"]["terms"], serde_json::json!([[[1, 2, 3], "1"]]));
    assert_eq!(w["gamma"]["terms"], serde_json::json!([[[1, 5], "1"]]));
    assert!(no_floats(&v));
}

#[test]
fn text_and_json_agree() {
    let v = json_of(&["analyze", "g724"]);
    let s = stdout(&inull(&["analyze", "g724"]));
    assert!(s.contains(&format!("forms_dim: {}", v["forms_dim"])));
    assert!(s.contains(&format!("dim ker I: {}", v["dim_ker_I"])));
    assert!(s.contains(&format!("dim Im I: {}", v["dim_Im_I"])));
    assert!(s.contains(v["witnesses"][0]["I_B"]["text"].as_str().unwrap()));
}

#[test]
fn analyze_abelian_and_f4plus() {
    let v = json_of(&["analyze", "abelian:3"]);
    assert_eq!(v["I_null"], true);
    assert_eq!(v["forms_dim"], 6);
    let v = json_of(&["analyze", "f4plus"]);
    assert_eq!(v["I_null"], true);
    assert_eq!(v["dim"], 24);
}

#[test]
fn analyze_with_betti_and_leibniz() {
    let v = json_of(&["analyze", "g54", "--betti", "trivial", "--leibniz"]);
    assert_eq!(v["betti"]["numbers"], serde_json::json!([1, 2, 3, 3, 2, 1]));
    assert_eq!(v["leibniz"]["ZL2_0"], 6);
    assert_eq!(v["leibniz"]["coupled"], 2);
    assert_eq!(v["leibniz"]["uncoupling"], false);
    assert_eq!(v["leibniz"]["HL2"], 17);
}

#[test]
fn analyze_file_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "h3.txt", "dim 3\n[1,2] = 3\n");
    let v = json_of(&["analyze", &good]);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["I_null"], true);

    let bad = write(dir.path(), "bad.txt", "dim 3\n[1,2] = 3\n[1,3] = 1\n[2,3] = 1\n");
    let o = inull(&["analyze", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("Jacobi identity fails: triple (1,2,3)"), "{}", stderr(&o));

    let garbled = write(dir.path(), "garbled.txt", "dim 3\n[1,2 = 3\n");
    let o = inull(&["analyze", &garbled]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let o = inull(&["analyze", "no-such-algebra"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn roots_and_property_p() {
    let o = inull(&["roots", "E6", "--check-P"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "36 positive roots; property (P): holds");
    assert_eq!(stdout(&inull(&["roots", "E", "7"])).trim(), "63 positive roots");
    let s = stdout(&inull(&["roots", "F4", "--check-P"]));
    assert!(s.starts_with("24 positive roots; property (P): fails"), "{s}");
    let v = json_of(&["roots", "F4", "--check-P"]);
    assert_eq!(v["property_P"]["holds"], false);
    assert_eq!(v["property_P"]["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn roots_list_is_rational_vectors() {
    let s = stdout(&inull(&["roots", "B2", "--list"]));
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "4 positive roots");
    assert_eq!(lines.len(), 5);
    assert!(lines[1..].iter().all(|l| l.starts_with('(') && l.ends_with(')') && !l.contains('.')));
}

#[test]
fn invalid_type_or_rank_exits_two() {
    for args in [&["roots", "E9"][..], &["roots", "X", "3"], &["nilradical", "G", "3"], &["borel", "D1"]] {
        let o = inull(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn nilradical_and_borel() {
    let o = inull(&["nilradical", "D", "2", "--check-inull"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "dim 2; I-null: yes");
    assert_eq!(stdout(&inull(&["nilradical", "G2", "--check-inull"])).trim(), "dim 6; I-null: yes");
    assert_eq!(stdout(&inull(&["borel", "A", "2", "--check-inull"])).trim(), "dim 5; I-null: yes");
    let s = stdout(&inull(&["nilradical", "A2", "--relations"]));
    assert!(s.contains("dim 3"), "{s}");
}

#[test]
fn relations_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let s = stdout(&inull(&["nilradical", "G2", "--relations", "--check-inull"]));
    assert!(s.starts_with("# dim 6; I-null: yes"), "{s}");
    let f = write(dir.path(), "g2.txt", &s);
    let v = json_of(&["analyze", &f]);
    assert_eq!(v["name"], "nil:G2");
    assert_eq!(v["dim"], 6);
    assert_eq!(v["I_null"], true);
}

#[test]
fn gcm_of_catalog_algebras() {
    let o = inull(&["gcm", "g54", "--generators", "1,2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "[[2,-2],[-2,2]] affine:A1~1");
    assert_eq!(stdout(&inull(&["gcm", "g3"])).trim(), "[[2,-1],[-1,2]] finite:A2");
    assert_eq!(stdout(&inull(&["gcm", "--matrix", "2,-3;-3,2"])).trim(), "[[2,-3],[-3,2]] indefinite:hyperbolic");
    let v = json_of(&["gcm", "g724", "--generators", "1,2"]);
    assert_eq!(v["type"], "affine:A2~2");
    assert_eq!(v["matrix"], serde_json::json!([[2, -4], [-1, 2]]));
}

#[test]
fn gcm_degenerate_weights_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "deg.txt", "dim 4\n[1,2] = 3\n[2,4] = 3\n");
    let o = inull(&["gcm", &f, "--generators", "1,2,4"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn cohomology_numbers_and_cap() {
    assert_eq!(stdout(&inull(&["cohomology", "heisenberg:3"])).trim(), "Betti (trivial): 1 2 2 1");
    let s = stdout(&inull(&["cohomology", "g2plus", "--coefficients", "adjoint"]));
    assert_eq!(s.trim(), "Betti (adjoint): 1 4 7 8 7 5 2");
    let s = stdout(&inull(&["cohomology", "g54", "--degree", "2", "--coefficients", "adjoint"]));
    assert_eq!(s.trim(), "dim H^2 (adjoint): 9");
    let o = inull(&["cohomology", "heisenberg:11"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("dim <= 10"), "{}", stderr(&o));
}

#[test]
fn list_shows_names_and_facts() {
    let s = stdout(&inull(&["list"]));
    let g54 = s.lines().find(|l| l.starts_with("g54 ")).expect("g54 listed");
    assert!(g54.contains("dim 5") && g54.contains("forms_dim") && g54.contains("gcm"), "{g54}");
    assert!(s.contains("families:"));
}

#[test]
fn report_tables_builtin_passes() {
    let o = inull(&["report-tables"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(!s.lines().any(|l| l.trim_start().starts_with("FAIL")));
    assert!(s.contains(" 0 FAIL"));
    assert!(s.contains("PASS  forms_dim"));
}

#[test]
fn report_tables_corrupted_fixture_fails() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g54.txt", "dim 5\nname g54\n[1,2] = 3\n[1,3] = 4\n");
    let o = inull(&["report-tables", "--extra", &dir.path().display().to_string()]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    let line = s.lines().find(|l| l.contains("forms_dim") && l.contains("computed 6")).expect("forms_dim cell");
    assert!(line.trim_start().starts_with("FAIL"), "{line}");
}

#[test]
fn report_tables_extra_rows_are_conditional() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g55.txt", "dim 5\nname g5,5\n[1,2] = 3\n[1,3] = 4\n[1,4] = 5\n");
    let v = json_of(&["report-tables", "--extra", &dir.path().display().to_string()]);
    let row = v["rows"].as_array().unwrap().iter().find(|r| r["name"] == "g5,5").expect("extra row");
    assert_eq!(row["conditional"], true);
    let cells = row["cells"].as_array().unwrap();
    assert!(cells.iter().any(|c| c["check"] == "gcm_matrix" && c["status"] == "PASS"));
    assert!(cells.iter().all(|c| c["status"] != "FAIL"));
    assert_eq!(v["summary"]["fail"], 0);
}
