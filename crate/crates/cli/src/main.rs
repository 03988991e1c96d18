//! `stl` — command-line front end for the Stokes transverse-instability
//! toolkit: resonance constants, reduced-matrix coefficients with the
//! nonzero-b30 certificate, isola sweeps (CSV/SVG), raw multiplier tables,
//! and the full acceptance run.

mod config;
mod svg;

use anyhow::Context;
use clap::{Parser, Subcommand};
use config::{sig12, Format, Profile, RunConfig};
use num_complex::Complex64;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use stl_core::assembly::AssemblyMode;
use stl_core::dispersion::{solve_resonance, spectral_gap};
use stl_core::instability::{eigenvalues, ellipse_constants, isola_params};
use stl_core::kato::KatoEngine;
use stl_core::validation::{ValidationConfig, Validator};
use stl_core::Error as CoreError;

/// Exit-code contract: 0 ok, 2 numeric failure, 3 consistency violation,
/// 4 certificate failure.
const EXIT_NUMERIC: u8 = 2;
const EXIT_CONSISTENCY: u8 = 3;
const EXIT_CERTIFICATE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "stl",
    version,
    about = "Transverse-instability toolkit for small-amplitude deep-water Stokes waves"
)]
struct Cli {
    /// Fourier truncation (wavenumbers -K..K)
    #[arg(long, global = true)]
    k_max: Option<i64>,
    /// trapezoid nodes on the spectral contour (power of two >= 32)
    #[arg(long, global = true)]
    nodes: Option<usize>,
    /// output directory for generated files
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// output format for table-like documents
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// key=value config file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Resonance constants beta*, sigma, gamma1, gamma2 and the spectral gap
    Resonance,
    /// Reduced-matrix coefficient table, detuning window, ellipse constants,
    /// and the b30 certificate verdict
    Coeffs,
    /// Sweep the unstable eigenvalue pair across the detuning window
    Isola {
        /// Stokes-wave amplitude, in (0, 0.1]
        #[arg(long)]
        eps: Option<f64>,
        /// also render an SVG overlay of the ellipse and both point sets
        #[arg(long)]
        svg: bool,
    },
    /// Dirichlet-Neumann multiplier tables R_0..R_3 at a given beta
    DnCoeffs {
        #[arg(long)]
        beta: f64,
        /// wavenumber range -k..k
        #[arg(long, short)]
        k: i64,
    },
    /// Run every acceptance criterion and report PASS/FAIL per section
    Validate,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads();
    let cfg = match build_config(&cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_NUMERIC);
        }
    };
    match run(cli.cmd, cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_of(&e))
        }
    }
}

/// STL_THREADS caps the rayon pool; outputs are deterministic either way.
fn init_threads() {
    if let Ok(v) = std::env::var("STL_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
}

fn build_config(cli: &Cli) -> anyhow::Result<RunConfig> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(k) = cli.k_max {
        cfg.k_max = k;
    }
    if let Some(n) = cli.nodes {
        cfg.contour_nodes = n;
    }
    if let Some(dir) = &cli.out {
        cfg.output_dir = dir.clone();
    }
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn exit_code_of(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<CoreError>() {
        Some(CoreError::Certificate(_)) => EXIT_CERTIFICATE,
        Some(CoreError::Consistency(_)) => EXIT_CONSISTENCY,
        _ => EXIT_NUMERIC,
    }
}

fn run(cmd: Cmd, cfg: RunConfig) -> anyhow::Result<ExitCode> {
    match cmd {
        Cmd::Resonance => cmd_resonance(&cfg),
        Cmd::Coeffs => cmd_coeffs(&cfg),
        Cmd::Isola { eps, svg } => cmd_isola(&cfg, eps, svg),
        Cmd::DnCoeffs { beta, k } => cmd_dn_coeffs(&cfg, beta, k),
        Cmd::Validate => cmd_validate(&cfg),
    }
}

fn emit_document(cfg: &RunConfig, name: &str, doc: &Value) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(doc)?;
    println!("{text}");
    if cfg.output_dir != Path::new(".") {
        std::fs::create_dir_all(&cfg.output_dir)?;
        let path = cfg.output_dir.join(format!("{name}.json"));
        std::fs::write(&path, format!("{text}\n"))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn cmd_resonance(cfg: &RunConfig) -> anyhow::Result<ExitCode> {
    let res = solve_resonance();
    let gap = spectral_gap(&res, 50)?;
    let doc = json!({
        "schema_version": 1,
        "beta_star": sig12(res.beta_star),
        "sigma": sig12(res.sigma),
        "gamma1": sig12(res.gamma1),
        "gamma2": sig12(res.gamma2),
        "spectral_gap": sig12(gap),
    });
    emit_document(cfg, "resonance", &doc)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_coeffs(cfg: &RunConfig) -> anyhow::Result<ExitCode> {
    let engine = KatoEngine::new(cfg.k_max, cfg.contour_nodes)?;
    let table = engine.extract_coeff_table()?;
    let cert = stl_core::certificate::certify_b30()?;
    let params = isola_params(&table)?;
    let ellipse = ellipse_constants(&table)?;
    let mut coeffs = serde_json::Map::new();
    for (name, value) in table.values() {
        coeffs.insert(name.to_string(), json!(sig12(value)));
    }
    let mut doc = json!({
        "schema_version": 1,
        "coefficients": coeffs,
        "kappa0": sig12(params.kappa0),
        "kappa1": sig12(params.kappa1),
        "ellipse": {
            "x_coeff": sig12(ellipse.x_coeff),
            "y_coeff": sig12(ellipse.y_coeff),
            "center": sig12(engine.res.sigma),
            "center_drift": sig12(ellipse.center_drift),
        },
        "certificate": {
            "verdict": cert.verdict(),
            "gcd_is_one": cert.gcd_is_one,
            "b30_numeric": sig12(cert.b30_numeric),
        },
    });
    if cfg.profile == Profile::Exact {
        // exact-profile runs re-derive the surface coefficients in rational
        // arithmetic as a self-check
        let residual = stl_core::stokes::check_steady_residuals(3).max();
        doc.as_object_mut().unwrap().insert(
            "reconstruction_check".into(),
            json!(if residual == 0.0 { "exact" } else { "failed" }),
        );
        if residual != 0.0 {
            return Err(
                CoreError::Consistency("exact reconstruction residual nonzero".into()).into(),
            );
        }
    }
    emit_document(cfg, "coeffs", &doc)?;
    Ok(ExitCode::SUCCESS)
}

fn fmt12(x: f64) -> String {
    format!("{x:.12e}")
}

fn cmd_isola(cfg: &RunConfig, eps: Option<f64>, want_svg: bool) -> anyhow::Result<ExitCode> {
    let eps = eps.unwrap_or(cfg.eps_list[0]);
    if !(eps > 0.0 && eps <= 0.1) {
        anyhow::bail!("eps must lie in (0, 0.1], got {eps}");
    }
    let engine = KatoEngine::new(cfg.k_max, cfg.contour_nodes)?;
    let table = engine.extract_coeff_table()?;
    let params = isola_params(&table)?;
    let sigma = engine.res.sigma;

    let mut rows = Vec::with_capacity(cfg.theta_grid);
    let theta_max = params.kappa1 * (1.0 - 1e-9);
    for i in 0..cfg.theta_grid {
        let theta = -theta_max + 2.0 * theta_max * i as f64 / (cfg.theta_grid - 1) as f64;
        let delta = params.kappa0 * eps * eps + theta * eps.powi(3);
        let (lp, _) = eigenvalues(eps, delta, sigma, &table);
        let m = engine.reduced_matrix_sweep(eps, delta, AssemblyMode::DirectBeta)?;
        let ld = dominant_eigenvalue(&m);
        rows.push((theta, delta, lp, ld));
    }

    let mut csv = String::from("theta,delta,re_lambda_plus,im_lambda_plus,re_direct,im_direct\n");
    for (theta, delta, lp, ld) in &rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            fmt12(*theta),
            fmt12(*delta),
            fmt12(lp.re),
            fmt12(lp.im),
            fmt12(ld.re),
            fmt12(ld.im)
        ));
    }
    std::fs::create_dir_all(&cfg.output_dir)?;
    let stem = format!("isola_eps{eps}");
    let csv_path = cfg.output_dir.join(format!("{stem}.csv"));
    std::fs::write(&csv_path, &csv).with_context(|| format!("writing {}", csv_path.display()))?;
    let max_gap = rows
        .iter()
        .map(|(_, _, lp, ld)| (lp - ld).norm())
        .fold(0.0, f64::max);
    println!(
        "wrote {} ({} rows); max |asymptotic - direct| = {:.3e}",
        csv_path.display(),
        rows.len(),
        max_gap
    );

    if want_svg {
        let plot = svg::IsolaPlot {
            eps,
            center_im: sigma + params.center_drift * eps * eps,
            semi_re: params.semi_minor * eps.powi(3),
            semi_im: params.semi_major * eps.powi(3),
            asymptotic: rows.iter().map(|(_, _, lp, _)| (lp.re, lp.im)).collect(),
            direct: rows.iter().map(|(_, _, _, ld)| (ld.re, ld.im)).collect(),
        };
        let svg_path = cfg.output_dir.join(format!("{stem}.svg"));
        std::fs::write(&svg_path, svg::render(&plot))
            .with_context(|| format!("writing {}", svg_path.display()))?;
        println!("wrote {}", svg_path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn dominant_eigenvalue(m: &[[Complex64; 2]; 2]) -> Complex64 {
    let tr = m[0][0] + m[1][1];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let root = ((tr * 0.5) * (tr * 0.5) - det).sqrt();
    let (l1, l2) = (tr * 0.5 + root, tr * 0.5 - root);
    if l1.re >= l2.re {
        l1
    } else {
        l2
    }
}

fn cmd_dn_coeffs(cfg: &RunConfig, beta: f64, k: i64) -> anyhow::Result<ExitCode> {
    if beta <= 0.0 {
        return Err(CoreError::Domain(format!("beta must be positive, got {beta}")).into());
    }
    if k < 4 {
        anyhow::bail!("k must be at least 4, got {k}");
    }
    let tables = stl_core::dn::hierarchy_multipliers(Complex64::new(beta, 0.0), -k, k)?;
    match cfg.format {
        Format::Json => {
            let mut orders = Vec::new();
            for table in &tables {
                let mut offsets = serde_json::Map::new();
                for d in table.offsets() {
                    let vals: Vec<f64> = (-k..=k).map(|kk| sig12(table.get(kk, d).re)).collect();
                    offsets.insert(d.to_string(), json!(vals));
                }
                orders.push(json!({ "order": table.order, "offsets": offsets }));
            }
            let doc = json!({
                "schema_version": 1,
                "beta": sig12(beta),
                "k_min": -k,
                "k_max": k,
                "tables": orders,
            });
            emit_document(cfg, "dn_coeffs", &doc)?;
        }
        Format::Csv => {
            let mut csv = String::from("order,offset,k,value\n");
            for table in &tables {
                for d in table.offsets() {
                    for kk in -k..=k {
                        csv.push_str(&format!(
                            "{},{},{},{}\n",
                            table.order,
                            d,
                            kk,
                            fmt12(table.get(kk, d).re)
                        ));
                    }
                }
            }
            print!("{csv}");
            if cfg.output_dir != Path::new(".") {
                std::fs::create_dir_all(&cfg.output_dir)?;
                std::fs::write(cfg.output_dir.join("dn_coeffs.csv"), csv)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_validate(cfg: &RunConfig) -> anyhow::Result<ExitCode> {
    let vcfg = ValidationConfig {
        k_max: cfg.k_max,
        nodes: cfg.contour_nodes,
        ..ValidationConfig::default()
    };
    let validator = Validator::new(vcfg);
    let start = std::time::Instant::now();
    let results = validator.run_all();
    let mut first_failure: Option<u32> = None;
    for r in &results {
        println!("{}", r.line());
        if !r.passed && first_failure.is_none() {
            first_failure = Some(r.id);
        }
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        results.iter().filter(|r| r.passed).count(),
        results.len(),
        start.elapsed().as_secs_f64()
    );
    Ok(match first_failure {
        None => ExitCode::SUCCESS,
        Some(7) => ExitCode::from(EXIT_CERTIFICATE),
        Some(4) | Some(5) | Some(10) | Some(11) => ExitCode::from(EXIT_CONSISTENCY),
        Some(_) => ExitCode::from(EXIT_NUMERIC),
    })
}
