use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn vci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vci"))
        .args(args)
        .output()
        .expect("run vci")
}

fn write(dir: &TempDir, name: &str, v: &Value) -> String {
    let path: PathBuf = dir.path().join(name);
    fs::write(&path, serde_json::to_string(v).unwrap()).unwrap();
    path.to_string_lossy().into_owned()
}

fn term(c: &str, e: [u32; 4]) -> Value {
    json!({"coeff": c, "exp": e})
}

fn two_points() -> Value {
    json!({"field": "QQ", "points": [[["1","0"],["0","1"]], [["0","1"],["1","0"]]]})
}

fn hyperbola_points() -> Value {
    json!({"field": "QQ", "points": [
        [["1","1"],["1","1"]], [["2","1"],["1","2"]], [["3","1"],["1","3"]],
        [["4","1"],["1","4"]], [["1","0"],["1","1"]], [["1","0"],["1","0"]]
    ]})
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

#[test]
fn certify_two_point_pair() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "pts.json", &two_points());
    let cert = write(
        &dir,
        "cert.json",
        &json!({"field": "QQ", "f": [term("1", [1,0,1,0])], "g": [term("1", [0,1,0,1])], "degrees": [[1,1],[1,1]]}),
    );
    for mode in ["fast", "saturation", "both"] {
        let o = vci(&["certify", &pts, "--cert", &cert, "--mode", mode]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert_eq!(stdout_json(&o)["accepted"], true);
    }
}

#[test]
fn certify_wrong_point_set() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "pts.json", &hyperbola_points());
    let cert = write(
        &dir,
        "cert.json",
        &json!({"field": "QQ",
                "f": [term("1", [0,1,0,1])],
                "g": [term("-1", [2,0,0,1]), term("1", [1,1,0,1]), term("1", [2,0,1,0]), term("-1", [1,1,1,0])],
                "degrees": [[1,1],[2,1]]}),
    );
    let o = vci(&["certify", &pts, "--cert", &cert]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout_json(&o)["accepted"], false);
}

#[test]
fn hilbert_of_two_points() {
    let dir = TempDir::new().unwrap();
    let ideal = write(
        &dir,
        "ideal.json",
        &json!({"field": "QQ", "generators": [
            [term("1", [1,1,0,0])], [term("1", [1,0,1,0])], [term("1", [0,1,0,1])], [term("1", [0,0,1,1])]
        ]}),
    );
    let o = vci(&["hilbert", &ideal, "--bidegree", "5,5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "2");
}

#[test]
fn saturate_and_groebner() {
    let dir = TempDir::new().unwrap();
    let ideal = write(
        &dir,
        "ideal.json",
        &json!({"generators": [[term("1", [1,0,1,0])], [term("1", [0,1,0,1])]]}),
    );
    let o = vci(&["saturate", &ideal]);
    assert_eq!(o.status.code(), Some(0));
    let sat = stdout_json(&o);
    assert_eq!(sat["generators"].as_array().unwrap().len(), 4);
    let sat_path = write(&dir, "sat.json", &sat);
    let o = vci(&["hilbert", &sat_path, "--bidegree", "1,1"]);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "2");

    let o = vci(&["groebner", &ideal]);
    assert_eq!(o.status.code(), Some(0));
    let gb = stdout_json(&o);
    assert_eq!(gb["order"], "grevlex");
    assert_eq!(gb["reduced"], true);
    assert_eq!(gb["field"], "QQ");
}

#[test]
fn analyze_exit_codes() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "h.json", &hyperbola_points());
    let o = vci(&["analyze", &pts]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v = stdout_json(&o);
    assert_eq!(v["status"], "VCI");
    let cert_path = write(&dir, "cert.json", &v["certificate"]);
    let o = vci(&["certify", &pts, "--cert", &cert_path, "--mode", "both"]);
    assert_eq!(o.status.code(), Some(0));

    let l = write(
        &dir,
        "l.json",
        &json!({"points": [[["0","1"],["0","1"]], [["1","1"],["0","1"]], [["0","1"],["1","1"]]]}),
    );
    let o = vci(&["analyze", &l]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout_json(&o)["status"], "NOT_VCI");
}

#[test]
fn classify_cites_criterion() {
    let dir = TempDir::new().unwrap();
    let l = write(
        &dir,
        "l.json",
        &json!({"points": [[["0","1"],["0","1"]], [["1","1"],["0","1"]], [["0","1"],["1","1"]]]}),
    );
    let o = vci(&["classify", &l]);
    assert_eq!(o.status.code(), Some(1));
    let v = stdout_json(&o);
    assert_eq!(v["criterion"], "TWO_RULINGS");
    assert_eq!(v["witness"]["kind"], "cross");
}

#[test]
fn construct_outputs() {
    let dir = TempDir::new().unwrap();
    let stair = write(
        &dir,
        "s.json",
        &json!({"points": [
            [["0","1"],["0","1"]], [["1","1"],["0","1"]], [["1","1"],["1","1"]],
            [["2","1"],["0","1"]], [["2","1"],["1","1"]], [["2","1"],["2","1"]]
        ]}),
    );
    let o = vci(&["construct", &stair, "--set-theoretic"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    let total: u64 = v["multiplicities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["multiplicity"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 9);
    let o = vci(&["construct", &stair]);
    assert_eq!(o.status.code(), Some(1));

    let pts = write(&dir, "p.json", &two_points());
    let o = vci(&["construct", &pts]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["degrees"], json!([[2, 0], [1, 1]]));
}

#[test]
fn field_override() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "h.json", &hyperbola_points());
    let o = vci(&["--field", "fp:101", "analyze", &pts]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["field"], "GF(101)");
    assert_eq!(v["certificate"]["field"], "GF(101)");
}

#[test]
fn input_errors() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    let bad = bad.to_string_lossy().into_owned();
    assert_eq!(vci(&["analyze", &bad]).status.code(), Some(2));
    assert_eq!(
        vci(&["analyze", "/nonexistent/points.json"]).status.code(),
        Some(2)
    );
    let dup = write(
        &dir,
        "dup.json",
        &json!({"points": [[["1","0"],["0","1"]], [["2","0"],["0","3"]]]}),
    );
    assert_eq!(vci(&["analyze", &dup]).status.code(), Some(2));
    let pts = write(&dir, "p.json", &two_points());
    assert_eq!(
        vci(&["--field", "fp:100", "analyze", &pts]).status.code(),
        Some(2)
    );
    assert_eq!(vci(&["census", "--max-grid", "5x5"]).status.code(), Some(2));
}

#[test]
fn census_csv() {
    let o = vci(&["census", "--max-grid", "2x2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "configuration-id,row_counts,col_counts,|X|,m,n,verdict,criterion"
    );
    let rows: Vec<&str> = lines.collect();
    // one point, two in a row, two in a column, two diagonal, L, square
    assert_eq!(rows.len(), 6);
    assert!(rows
        .iter()
        .any(|r| r.starts_with("11/10,") && r.contains("NOT_VCI")));
    assert!(rows
        .iter()
        .any(|r| r.starts_with("11/11,") && r.contains(",VCI,")));
    let again = vci(&["census", "--max-grid", "2x2"]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), text);
}
