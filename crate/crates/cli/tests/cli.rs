use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equifacet")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("equifacet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn report(path: &PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_seven_and_eight() {
    let o = run(&["verify", "--k", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("max area 7.560546456 by K7-C5"));
    let out = scratch("verify8.json");
    let o = run(&["verify", "--k", "8", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("by K8-C10"));
    let r = report(&out);
    assert_eq!(r["results"]["winner"], "K8-C10");
    assert!((r["best"]["area"].as_f64().unwrap() - 8.0).abs() < 1e-9);
    assert_eq!(r["best"]["points"].as_array().unwrap().len(), 8);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "--k", "9"]).status.code(), Some(2));
    assert_eq!(run(&["optimize", "--k", "3"]).status.code(), Some(2));
    assert_eq!(run(&["prune", "--catalog", "missing.file"]).status.code(), Some(2));
    assert_eq!(run(&["prune", "--catalog", "k8.catalog", "--class", "K8-C99"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn malformed_catalog_reports_position() {
    let path = scratch("bad.catalog");
    std::fs::write(&path, "[\n  {\"class_label\": \"X\",\n   \"k\": }\n]\n").unwrap();
    let o = run(&["prune", "--catalog", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn prune_shipped_catalogs() {
    let o = run(&["prune", "--catalog", "k7.catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in text.lines().skip(1) {
        let survivors: usize = line.rsplit("survivors=").next().unwrap().parse().unwrap();
        assert_eq!(survivors > 0, line.starts_with("K7-C5"), "{line}");
    }
    let out = scratch("c14.json");
    let o = run(&["prune", "--catalog", "k8.catalog", "--class", "K8-C14", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["results"]["classes"][0]["survivor_orbits"], 3);
}

#[test]
fn optimize_k8_reaches_threshold() {
    let o = run(&["optimize", "--k", "8", "--restarts", "64", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let area: f64 = stdout(&o).split("area=").nth(1).unwrap().split_whitespace().next().unwrap().parse().unwrap();
    assert!(area >= 8.119, "{area}");
}

#[test]
fn optimize_k12_finds_icosahedron() {
    let o = run(&["optimize", "--k", "12", "--restarts", "64"]);
    assert_eq!(o.status.code(), Some(0));
    let area: f64 = stdout(&o).split("area=").nth(1).unwrap().split_whitespace().next().unwrap().parse().unwrap();
    let ico = 2.0 * 75f64.sqrt() - 2.0 * 15f64.sqrt();
    assert!((area - ico).abs() <= 2e-3, "{area}");
}

#[test]
fn reports_are_reproducible() {
    let (a, b) = (scratch("rep-a.json"), scratch("rep-b.json"));
    let csv = scratch("rep.csv");
    for out in [&a, &b] {
        let o = run(&[
            "optimize", "--k", "6", "--restarts", "4", "--iters", "300", "--seed", "11",
            "--out", out.to_str().unwrap(), "--emit-bounds-csv", csv.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let strip = |p: &PathBuf| {
        let mut v = report(p);
        v.as_object_mut().unwrap().remove("wall_time_s");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(strip(&a), strip(&b));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("K,value,lower_aK,upper_bK"));
    assert!(lines.next().unwrap().starts_with("6,"));
}

#[test]
fn table_rows() {
    let csv = scratch("table.csv");
    let o = run(&["table", "--restarts", "4", "--iters", "400", "--emit-bounds-csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    let ks: Vec<f64> = rows.iter().map(|r| r[0]).collect();
    assert_eq!(ks, [4.0, 5.0, 6.0, 7.0, 8.0, 12.0]);
    assert!((rows[2][1] - 4.0 * 3f64.sqrt()).abs() < 1e-12);
    assert!((rows[3][1] - 1.25 * (50.0 - 6.0 * 5f64.sqrt()).sqrt()).abs() < 1e-12);
    assert_eq!(rows[4][1], 8.0);
    assert!(rows.iter().all(|r| r[2] <= r[1] && r[1] <= r[3]));
}
