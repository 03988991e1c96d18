//! End-to-end checks of the command-line surface: document schemas, the CSV
//! contract, determinism across thread counts, and the exit-code contract.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stl"))
}

fn run_ok(args: &[&str]) -> Output {
    let out = bin().args(args).output().expect("spawn stl");
    assert!(
        out.status.success(),
        "stl {:?} failed: {}\n{}",
        args,
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("stl_cli_{tag}_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn resonance_document() {
    let out = run_ok(&["resonance"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["schema_version"], 1);
    let beta = doc["beta_star"].as_f64().unwrap();
    let sigma = doc["sigma"].as_f64().unwrap();
    let g1 = doc["gamma1"].as_f64().unwrap();
    let g2 = doc["gamma2"].as_f64().unwrap();
    assert!((beta - 2.7275211479).abs() < 1e-10);
    assert!((sigma - (-0.3894887313)).abs() < 1e-10);
    assert!((g1 + g2 - 3.0).abs() < 1e-12);
    assert!(doc["spectral_gap"].as_f64().unwrap() > 0.0);
}

#[test]
fn coeffs_document() {
    let out = run_ok(&["--k-max", "12", "--nodes", "64", "coeffs"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["schema_version"], 1);
    let c20 = doc["coefficients"]["c20"].as_f64().unwrap();
    assert!((c20 - 1.08625864892).abs() < 1e-8, "c20 = {c20}");
    assert_eq!(doc["certificate"]["verdict"], "gcd=1; b30 nonzero");
    let x = doc["ellipse"]["x_coeff"].as_f64().unwrap();
    assert!((x - 4.085).abs() < 5e-4, "x_coeff = {x}");
    let k0 = doc["kappa0"].as_f64().unwrap();
    let k1 = doc["kappa1"].as_f64().unwrap();
    assert!((k0 - (-10.3473549)).abs() < 1e-6);
    assert!((k1 - 6.4658039).abs() < 1e-6);
}

#[test]
fn isola_csv_contract() {
    let dir = tmpdir("isola");
    let conf = dir.join("run.conf");
    std::fs::write(&conf, "k_max=10\ncontour_nodes=32\ntheta_grid=21\n").unwrap();
    run_ok(&[
        "--config",
        conf.to_str().unwrap(),
        "--out",
        dir.to_str().unwrap(),
        "isola",
        "--eps",
        "0.01",
        "--svg",
    ]);
    let csv = std::fs::read_to_string(dir.join("isola_eps0.01.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "theta,delta,re_lambda_plus,im_lambda_plus,re_direct,im_direct"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 21, "row count equals theta_grid");
    let parsed: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| r.split(',').map(|t| t.parse().unwrap()).collect())
        .collect();
    // theta = 0 sits on the middle row and carries the maximal growth rate
    // (up to the higher-order asymmetry of the grid)
    assert!(parsed[10][0].abs() < 1e-12);
    let (argmax, _) = parsed
        .iter()
        .enumerate()
        .map(|(i, r)| (i, r[2]))
        .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .unwrap();
    assert!((argmax as i64 - 10).abs() <= 1, "argmax row {argmax}");
    // the SVG exists and is well-formed enough to end properly
    let svg = std::fs::read_to_string(dir.join("isola_eps0.01.svg")).unwrap();
    assert!(svg.starts_with("<svg "));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert!(svg.contains("<ellipse"));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn outputs_are_deterministic_across_thread_counts() {
    let dir1 = tmpdir("det1");
    let dir2 = tmpdir("det2");
    let run = |dir: &Path, threads: &str| {
        let out = bin()
            .env("STL_THREADS", threads)
            .args([
                "--k-max",
                "10",
                "--nodes",
                "32",
                "--out",
                dir.to_str().unwrap(),
                "isola",
                "--eps",
                "0.02",
            ])
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        out.stdout
    };
    let s1 = run(&dir1, "1");
    let s2 = run(&dir2, "4");
    let c1 = std::fs::read(dir1.join("isola_eps0.02.csv")).unwrap();
    let c2 = std::fs::read(dir2.join("isola_eps0.02.csv")).unwrap();
    assert_eq!(c1, c2, "CSV bytes differ across thread counts");
    // stdout differs only in the directory names it mentions
    assert_eq!(
        String::from_utf8_lossy(&s1).replace(dir1.to_str().unwrap(), ""),
        String::from_utf8_lossy(&s2).replace(dir2.to_str().unwrap(), "")
    );
    // JSON documents are byte-identical too
    let r1 = bin()
        .env("STL_THREADS", "1")
        .arg("resonance")
        .output()
        .unwrap();
    let r2 = bin()
        .env("STL_THREADS", "3")
        .arg("resonance")
        .output()
        .unwrap();
    assert_eq!(r1.stdout, r2.stdout);
    let args = ["--k-max", "12", "--nodes", "64", "coeffs"];
    let c1 = bin().env("STL_THREADS", "1").args(args).output().unwrap();
    let c2 = bin().env("STL_THREADS", "3").args(args).output().unwrap();
    assert_eq!(c1.stdout, c2.stdout);
    let _ = std::fs::remove_dir_all(&dir1);
    let _ = std::fs::remove_dir_all(&dir2);
}

#[test]
fn direct_discrepancy_contracts_at_fourth_order() {
    // halving eps divides the interior-window asymptotic/direct gap by ~16
    let dir = tmpdir("order");
    let conf = dir.join("run.conf");
    std::fs::write(&conf, "k_max=10\ncontour_nodes=32\ntheta_grid=21\n").unwrap();
    let gap_for = |eps: &str| -> f64 {
        run_ok(&[
            "--config",
            conf.to_str().unwrap(),
            "--out",
            dir.to_str().unwrap(),
            "isola",
            "--eps",
            eps,
        ]);
        let csv = std::fs::read_to_string(dir.join(format!("isola_eps{eps}.csv"))).unwrap();
        let mut worst = 0.0f64;
        for (i, line) in csv.lines().skip(1).enumerate() {
            if !(2..19).contains(&i) {
                continue; // stay inside ~90% of the detuning window
            }
            let f: Vec<f64> = line.split(',').map(|t| t.parse().unwrap()).collect();
            let d = ((f[2] - f[4]).powi(2) + (f[3] - f[5]).powi(2)).sqrt();
            worst = worst.max(d);
        }
        worst
    };
    let g1 = gap_for("0.01");
    let g2 = gap_for("0.005");
    let ratio = g1 / g2;
    assert!((10.0..=26.0).contains(&ratio), "halving ratio {ratio}");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn exact_profile_reports_reconstruction_check() {
    let dir = tmpdir("exact");
    let conf = dir.join("run.conf");
    std::fs::write(&conf, "k_max=12\ncontour_nodes=64\nprofile=exact\n").unwrap();
    let out = run_ok(&["--config", conf.to_str().unwrap(), "coeffs"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["reconstruction_check"], "exact");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn dn_coeffs_document_matches_closed_form() {
    let out = run_ok(&["dn-coeffs", "--beta", "2.7", "--k", "8"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["k_max"], 8);
    let tables = doc["tables"].as_array().unwrap();
    assert_eq!(tables.len(), 4);
    // order-1 table, offset +1, k = 0..: compare against the closed form
    let r1 = &tables[1];
    assert_eq!(r1["order"], 1);
    let plus = r1["offsets"]["1"].as_array().unwrap();
    for (i, v) in plus.iter().enumerate() {
        let k = i as i64 - 8;
        let want = stl_core::dn::closed_form_c(k, 2.7, 1);
        assert!((v.as_f64().unwrap() - want).abs() < 1e-10, "k = {k}");
    }
}

#[test]
fn invalid_arguments_exit_with_numeric_code() {
    // beta <= 0 is a domain error -> exit code 2
    let out = bin()
        .args(["dn-coeffs", "--beta", "-1.0", "--k", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // bad node count fails config validation -> exit code 2
    let out = bin().args(["--nodes", "48", "resonance"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // eps outside (0, 0.1]
    let out = bin().args(["isola", "--eps", "0.5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn degraded_truncation_fails_validation() {
    // a forced k_max = 8 run cannot demonstrate truncation convergence:
    // criterion 10 fails and the exit code reports a consistency violation
    let out = bin()
        .args(["--k-max", "8", "--nodes", "32", "validate"])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[FAIL] criterion 10"), "{text}");
}
