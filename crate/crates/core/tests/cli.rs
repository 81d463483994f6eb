use std::fs;
use std::process::{Command, Output};

fn fracint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn blocks(text: &str) -> Vec<Vec<&str>> {
    text.split("\n\n").map(|b| b.lines().collect()).collect()
}

#[test]
fn gamma_prints_value_or_pole() {
    let out = fracint(&["gamma", "--x", "0.5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1.77245385090552\n");
    assert_eq!(stdout(&fracint(&["gamma", "--x", "5"])), "24\n");
    let pole = fracint(&["gamma", "--x", "-2"]);
    assert_eq!(pole.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&pole.stderr).contains("pole at non-positive integer"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(fracint(&[]).status.code(), Some(2));
    assert_eq!(fracint(&["compute", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        fracint(&["compute", "--alpha", "1.5"]).status.code(),
        Some(2)
    );
    assert_eq!(fracint(&["compute", "--f", "sin"]).status.code(), Some(2));
    assert_eq!(
        fracint(&["transform", "--alpha", "0", "--t", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fracint(&["semigroup", "--alpha", "0.6", "--beta", "0.6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fracint(&["strips", "--f", "pow:-1:1"]).status.code(),
        Some(2)
    );
    assert!(fracint(&["--help"]).status.success());
}

#[test]
fn budget_exhaustion_exits_three() {
    let args = [
        "--f",
        "pow:1:0.5",
        "--alpha",
        "0.5",
        "--t",
        "2",
        "--budget",
        "64",
        "--abs-tol",
        "1e-300",
        "--rel-tol",
        "1e-300",
    ];
    let mut compute = vec!["compute", "--method", "direct"];
    compute.extend(args);
    assert_eq!(fracint(&compute).status.code(), Some(3));
    let mut compare = vec!["compare"];
    compare.extend(args);
    assert_eq!(fracint(&compare).status.code(), Some(3));
}

#[test]
fn transform_csv_blocks() {
    let out = stdout(&fracint(&[
        "transform",
        "--alpha",
        "0.5",
        "--t",
        "4",
        "--samples",
        "11",
    ]));
    let b = blocks(&out);
    assert_eq!(b.len(), 2);
    assert_eq!(b[0][0], "tau,g");
    assert_eq!(b[1][0], "x,h");
    assert_eq!(b[0].len(), 12);
    assert_eq!(b[0][11], "4.00000000000e0,2.25675833419e0");
}

#[test]
fn compute_csv_and_json() {
    let out = stdout(&fracint(&[
        "compute",
        "--alpha",
        "0.5",
        "--t",
        "4",
        "--method",
        "transformed,oracle",
    ]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "alpha,t,method,value,oracle,abs_err,rel_err,n_evals,seconds"
    );
    assert_eq!(lines.len(), 3);
    let cols: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(&cols[..3], &["0.5", "4", "transformed"]);
    // 4/(3√π)·4^(3/2)
    assert_eq!(cols[4], "6.01802222451e0");
    assert_eq!(cols[8], "0.00000000000e0");

    let json = stdout(&fracint(&[
        "compute", "--alpha", "0.2,1", "--t", "2", "--format", "json",
    ]));
    let rows: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 2);
    assert_eq!(rows[1]["method"], "transformed");
    assert!((rows[1]["value"].as_f64().unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    fs::write(&cfg, "# sums\nn = 1000\nsamples = 5\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let out = stdout(&fracint(&[
        "compute",
        "--config",
        cfg,
        "--alpha",
        "0.5",
        "--t",
        "1",
        "--method",
        "cavalieri",
    ]));
    assert!(out
        .lines()
        .nth(1)
        .unwrap()
        .ends_with(",1000,0.00000000000e0"));
    let out = stdout(&fracint(&[
        "compute",
        "--config",
        cfg,
        "--n",
        "200",
        "--alpha",
        "0.5",
        "--t",
        "1",
        "--method",
        "cavalieri",
    ]));
    assert!(out
        .lines()
        .nth(1)
        .unwrap()
        .ends_with(",200,0.00000000000e0"));
    let out = stdout(&fracint(&[
        "transform",
        "--config",
        cfg,
        "--alpha",
        "0.5",
        "--t",
        "1",
    ]));
    assert_eq!(blocks(&out)[0].len(), 6);

    let bad = dir.path().join("bad.cfg");
    fs::write(&bad, "colour = blue\n").unwrap();
    assert_eq!(fracint(&["gamma", "--x", "1"]).status.code(), Some(0));
    assert_eq!(
        fracint(&["compute", "--config", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn compare_reports_all_routes() {
    let out = stdout(&fracint(&["compare", "--alpha", "0.5", "--t", "2"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let entry = &v["alpha=0.5,t=2"];
    for key in ["direct", "stieltjes", "cavalieri", "transformed", "oracle"] {
        assert!(entry[key].is_f64(), "{key}");
    }
    assert_eq!(entry["rel_deltas"].as_object().unwrap().len(), 10);
    assert_eq!(entry["consistent"], true);
    let strict = stdout(&fracint(&[
        "compare", "--alpha", "0.5", "--t", "2", "--tol", "1e-9",
    ]));
    let v: serde_json::Value = serde_json::from_str(&strict).unwrap();
    assert_eq!(v["alpha=0.5,t=2"]["consistent"], false);
}

#[test]
fn strips_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg_path = dir.path().join("strips.svg");
    let out = fracint(&["strips", "--svg", svg_path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    let b = blocks(&text);
    assert_eq!(b[0][0], "boundary_index,y,x");
    assert_eq!(b[1][0], "strip_index,area");
    assert_eq!(b[1].len(), 6);
    let indices: std::collections::BTreeSet<&str> = b[0][1..]
        .iter()
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(indices.len(), 6);
    let last = b[0].last().unwrap();
    assert_eq!(*last, "5,1.00000000000e1,1.00000000000e1");

    let svg = fs::read_to_string(&svg_path).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(doc.root_element().attribute("viewBox"), Some("0 0 800 600"));
    let polylines: Vec<_> = doc
        .descendants()
        .filter(|n| n.has_tag_name("polyline"))
        .collect();
    assert_eq!(polylines.len(), 7);
    let dashed = polylines
        .iter()
        .filter(|n| n.attribute("stroke-dasharray").is_some())
        .count();
    assert_eq!(dashed, 6);
    assert!(doc.descendants().any(|n| n.attribute("id") == Some("axes")));
}

#[test]
fn regions_and_curves() {
    let out = stdout(&fracint(&[
        "regions",
        "--alpha",
        "0.5",
        "--t",
        "2,4",
        "--samples",
        "3",
    ]));
    let b = blocks(&out);
    assert_eq!(b[0][0], "alpha,t,y,x");
    assert_eq!(
        b[1],
        vec![
            "alpha,t,area",
            "0.5,2,2.12769216214e0",
            "0.5,4,6.01802222451e0"
        ]
    );
    let svg = stdout(&fracint(&["regions", "--format", "svg"]));
    assert!(roxmltree::Document::parse(&svg).is_ok());

    let out = stdout(&fracint(&["curves", "--alpha", "0,0.5", "--t-step", "2"]));
    let b = blocks(&out);
    assert_eq!(b[0].len(), 1 + 2 * 6);
    assert_eq!(b[0][1], "0,0.00000000000e0,0.00000000000e0");
    assert_eq!(b[0][7], "0.5,0.00000000000e0,0.00000000000e0");
    assert_eq!(b[1].len(), 1 + 5);
    assert!(b[1][1..].iter().all(|l| l.starts_with("0.5,")));
}

#[test]
fn semigroup_row() {
    let out = stdout(&fracint(&[
        "semigroup",
        "--alpha",
        "0.5",
        "--beta",
        "0.5",
        "--t",
        "2",
    ]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "alpha,beta,t,composed,direct,rel_gap");
    let cols: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(cols[4], "2.00000000000e0");
    assert!(cols[5].parse::<f64>().unwrap() <= 1e-4);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.csv");
    let out = fracint(&[
        "transform",
        "--alpha",
        "0.3",
        "--t",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert!(fs::read_to_string(&path).unwrap().starts_with("tau,g\n"));
}
