use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn pcd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcd")).args(args).env_remove("PCD_SEED").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = pcd(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

const MARKERS: &str = "x y\n0 0\n1 0.05\n1.25 0.8\n0.5 1.3\n-0.2 0.7\n0.3 0.3\n0.72 0.27\n0.87 0.66\n0.46 0.83\n0.13 0.58\n";

#[test]
fn asym_values() {
    let v = json(&["asym", "--stat", "mu", "--mode", "and", "--r", "2"]);
    assert_eq!(v["results"]["text"], "0.458333333333");
    assert_eq!(v["results"]["value"], 0.458333333333);
    let v = json(&["asym", "--stat", "nu", "--mode", "or", "--r", "1"]);
    assert!(v["results"]["text"].as_str().unwrap().starts_with("0.000308641975"));
    let v = json(&["asym", "--stat", "pae", "--mode", "or", "--alt", "seg", "--r", "1"]);
    assert!((v["results"]["value"].as_f64().unwrap() - 160.0 / 9.0).abs() < 1e-3);
    let v = json(&["asym", "--stat", "four-nu", "--mode", "and", "--r", "sqrt2"]);
    assert_eq!(v["config"]["r"], 2f64.sqrt());
}

#[test]
fn document_shape_and_seed_sources() {
    let v = json(&["asym", "--stat", "mu", "--mode", "or", "--r", "4/3"]);
    assert_eq!(v["tool"], "pcd");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["command"], "asym");
    assert_eq!(v["seed"], 1);
    assert_eq!(v["config"]["mode"], "or");
    let out = Command::new(env!("CARGO_BIN_EXE_pcd")).args(["gen", "--n", "3"]).env("PCD_SEED", "99").output().unwrap();
    let from_env: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(from_env["seed"], 99);
    let flag = json(&["--seed", "99", "gen", "--n", "3"]);
    assert_eq!(flag["results"], from_env["results"]);
    let other = json(&["--seed", "98", "gen", "--n", "3"]);
    assert_ne!(other["results"], from_env["results"]);
}

#[test]
fn asym_domain_errors() {
    let o = pcd(&["asym", "--stat", "mu-alt", "--mode", "and", "--r", "2", "--alt", "seg", "--eps", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("eps = 0.5"));
    let o = pcd(&["asym", "--stat", "mu", "--mode", "and", "--r", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pcd(&["asym", "--stat", "pae", "--mode", "and", "--r", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--alt"));
}

#[test]
fn density_examples() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(dir.path(), "pair.txt", "0.3 0.2\n0.6 0.3\n");
    let v = json(&["density", "--points", &pair, "--r", "inf"]);
    assert_eq!(v["results"]["densities"][0]["rho_and"], 1.0);
    assert_eq!(v["config"]["r"][0], "inf");

    let three = write(dir.path(), "three.txt", "0.05,0.02\n0.5,0.28\n0.9,0.02\n");
    let v = json(&["density", "--points", &three, "--r", "1.01", "--domination"]);
    let d = &v["results"]["densities"][0];
    assert_eq!(d["rho_and"], 0.0);
    assert_eq!(d["arcs"], 1);
    assert_eq!(d["gamma_or"], 2);
}

#[test]
fn density_on_a_mesh_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.txt", MARKERS);
    let pts = dir.path().join("x.csv").display().to_string();
    json(&["--seed", "5", "gen", "--n", "100", "--markers", &m, "--out", &pts]);
    let a = pcd(&["density", "--points", &pts, "--markers", &m, "--r", "2", "--n", "100"]);
    let b = pcd(&["density", "--points", &pts, "--markers", &m, "--r", "2", "--n", "100"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let d = &v["results"]["densities"][0];
    assert_eq!(v["config"]["geometry"]["triangles"], 13);
    assert_eq!(d["per_triangle"].as_array().unwrap().len(), 13);
    assert!((d["and"]["rho_i"].as_f64().unwrap() - d["and"]["xi"].as_f64().unwrap()).abs() < 1e-15);

    let o = pcd(&["density", "--points", &pts, "--markers", &m, "--r", "2", "--n", "99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("expected 99 points"));
}

#[test]
fn parse_errors_carry_lines() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "bad.txt", "# header comment\nx y\n0.2 0.1\n0.3 oops\n");
    let o = pcd(&["density", "--points", &p, "--r", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    assert!(e.contains("bad.txt:4:"), "{e}");
    assert!(e.contains("column 2"), "{e}");

    let out = write(dir.path(), "out.txt", "0.2 0.1\n5 5\n");
    let o = pcd(&["density", "--points", &out, "--r", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("point 1"), "{}", stderr(&o));

    let o = pcd(&["density", "--points", "/nonexistent/file", "--r", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pcd(&["density", "--points", &out, "--r", "sqrtx"]);
    assert_eq!(o.status.code(), Some(2));
    let o = pcd(&["density", "--points", &out, "--r", "2", "--triangle", "0,0;1,1;2,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn degenerate_statistics_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("x.csv").display().to_string();
    json(&["gen", "--n", "30", "--out", &p]);
    for r in ["1", "inf"] {
        let o = pcd(&["test", "--points", &p, "--r", r, "--mode", "and", "--direction", "seg"]);
        assert_eq!(o.status.code(), Some(3), "r = {r}");
        assert!(stderr(&o).contains("degenerate"));
    }
    // the Monte Carlo test is still defined
    let v = json(&["test", "--points", &p, "--r", "1", "--mode", "and", "--direction", "seg", "--critical", "mc", "--n-mc", "200"]);
    assert_eq!(v["results"]["test"]["reject"], false);
}

#[test]
fn segregated_fixture_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("seg.csv").display().to_string();
    json(&["--seed", "11", "gen", "--n", "100", "--pattern", "seg", "--eps", "sqrt3/4", "--out", &p]);
    let v = json(&["test", "--points", &p, "--r", "2", "--mode", "and", "--direction", "seg", "--critical", "mc"]);
    let t = &v["results"]["test"];
    assert_eq!(t["reject"], true);
    assert!(t["p_value"].as_f64().unwrap() < 0.01);
    assert_eq!(v["config"]["n_mc"], 1000);
}

fn reject_rate(runs: u64, gen: &[&str], test: &[&str]) -> f64 {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("x.csv").display().to_string();
    let mut rejected = 0;
    for s in 0..runs {
        // separate masters so the data and the null replicates never share a stream
        let (gs, ts) = ((1000 + s).to_string(), (500_000 + s).to_string());
        let mut g = vec!["--seed", &gs, "gen", "--out", &p];
        g.extend_from_slice(gen);
        json(&g);
        let mut t = vec!["--seed", &ts, "test", "--points", &p];
        t.extend_from_slice(test);
        rejected += json(&t)["results"]["test"]["reject"].as_bool().unwrap() as u32;
    }
    rejected as f64 / runs as f64
}

#[test]
fn null_rejection_rate_is_near_alpha() {
    let rate = reject_rate(200, &["--n", "500"], &["--r", "2", "--mode", "and", "--direction", "seg"]);
    assert!((rate - 0.05).abs() <= 0.03, "{rate}");
}

#[test]
fn association_fixture_power() {
    let rate = reject_rate(
        300,
        &["--n", "10", "--pattern", "assoc", "--eps", "5sqrt3/24"],
        &["--r", "3", "--mode", "and", "--direction", "assoc", "--critical", "mc"],
    );
    assert!((rate - 0.964).abs() <= 0.04, "{rate}");
}

fn reproduce_cell(v: &Value, mode: &str, quantity: &str, r: &str) -> (f64, f64) {
    let block = v["results"]["blocks"].as_array().unwrap().iter().find(|b| b["mode"] == mode).unwrap();
    let c = block["comparison"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["quantity"] == quantity && c["r"] == r)
        .unwrap();
    (c["estimate"].as_f64().unwrap(), c["printed"].as_f64().unwrap())
}

#[test]
fn reproduce_published_cells() {
    let v = json(&["reproduce", "--table", "T1"]);
    assert_eq!(v["config"]["n_mc"], 1000);
    let (a, _) = reproduce_cell(&v, "and", "alpha_hat", "2");
    assert!((a - 0.031).abs() <= 0.02, "{a}");

    let v = json(&["reproduce", "--table", "t2"]);
    let (b, _) = reproduce_cell(&v, "and", "beta_hat(sqrt3/4)", "6/5");
    assert!(b >= 0.999, "{b}");

    let v = json(&["reproduce", "--table", "T4"]);
    assert_eq!(v["config"]["n_mc"], 10000);
    let (b, printed) = reproduce_cell(&v, "or", "beta_hat(sqrt3/12)", "2");
    let target = 4343.0 / 10000.0;
    assert_eq!(printed, target);
    assert!((b - target).abs() <= 0.03, "{b}");

    let o = pcd(&["reproduce", "--table", "T9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn power_and_plot_data() {
    let dir = tempfile::tempdir().unwrap();
    let plots = dir.path().join("plots");
    let plots_s = plots.display().to_string();
    let v = json(&[
        "--emit-plot-data",
        &plots_s,
        "power",
        "--r",
        "3/2,2",
        "--mode",
        "or",
        "--n",
        "10",
        "--n-mc",
        "300",
        "--alt",
        "seg:sqrt3/8",
        "--alt",
        "assoc:sqrt3/12",
    ]);
    let rows = v["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["beta"][1]["direction"], "association");
    let files: Vec<String> =
        v["results"]["plot_files"].as_array().unwrap().iter().map(|f| f.as_str().unwrap().to_string()).collect();
    assert!(files.iter().any(|f| f.ends_with("_kde.tsv")));
    assert!(files.iter().any(|f| f.ends_with("_power.tsv")));
    for f in &files {
        let text = std::fs::read_to_string(plots.join(f)).unwrap();
        let mut lines = text.lines();
        lines.next();
        assert!(lines.all(|l| l.split('\t').count() == 2 && l.split('\t').all(|c| c.parse::<f64>().is_ok())), "{f}");
    }
    let again = json(&["power", "--r", "3/2,2", "--mode", "or", "--n", "10", "--n-mc", "300", "--alt", "seg:sqrt3/8", "--alt", "assoc:sqrt3/12"]);
    assert_eq!(again["results"]["rows"], v["results"]["rows"]);
}

#[test]
fn delaunay_and_pretty() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.txt", MARKERS);
    let v = json(&["delaunay", "--markers", &m]);
    assert_eq!(v["results"]["triangles"], 13);
    let w: f64 = v["results"]["weights"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).sum();
    assert!((w - 1.0).abs() < 1e-12);

    let collinear = write(dir.path(), "c.txt", "0 0\n1 1\n2 2\n");
    let o = pcd(&["delaunay", "--markers", &collinear]);
    assert_eq!(o.status.code(), Some(2));

    let o = pcd(&["--pretty", "delaunay", "--markers", &m]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("pcd "));
    assert!(text.contains("triangles: 13"));
}
