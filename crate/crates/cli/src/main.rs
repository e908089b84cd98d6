use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use harmdisk::families::{self, Params};
use harmdisk::norm::{estimate, Flavor, GridConfig, NormEstimate, Which};
use harmdisk::{coefficient_bound_check, g_coefficients};

use harmdisk_cli::io::{parse_complex, parse_param, sig12, ComplexJson};
use harmdisk_cli::verify::{run_suite, SuiteReport, SUITE_NAMES};

/// Pre-Schwarzian and Schwarzian derivatives, norms, and coefficient tables
/// for locally univalent harmonic mappings in the unit disk.
#[derive(Parser)]
#[command(name = "harmdisk", version)]
struct Cli {
    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,
    /// RNG seed for the random-point verification checks
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Largest sampled radius (default 1 - 1e-6)
    #[arg(long, global = true)]
    r_max: Option<f64>,
    /// Angular grid resolution
    #[arg(long, global = true)]
    n_theta: Option<usize>,
    /// Radial grid resolution
    #[arg(long, global = true)]
    n_radii: Option<usize>,
    /// Skip local refinement after the grid scan
    #[arg(long, global = true)]
    no_refine: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// All derivative operators of one family at one point
    Analyze {
        family: String,
        /// Family parameters as key=value
        params: Vec<String>,
        /// Evaluation point as "a+bi"
        #[arg(long, default_value = "0")]
        point: String,
    },
    /// Disk-supremum estimate of a weighted derivative functional
    Norm {
        family: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = WhichArg::Pre)]
        which: WhichArg,
        #[arg(long, value_enum, default_value_t = FlavorArg::Hm)]
        flavor: FlavorArg,
    },
    /// Norm estimates over a parameter range, as CSV
    Sweep {
        family: String,
        /// Name of the parameter to sweep
        param: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = WhichArg::Pre)]
        which: WhichArg,
        #[arg(long, value_enum, default_value_t = FlavorArg::Hm)]
        flavor: FlavorArg,
    },
    /// Taylor coefficients b_n of the co-analytic part
    Coeffs {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 50)]
        n_max: usize,
    },
    /// Run a named verification suite (all suites when omitted)
    Verify { suite: Option<String> },
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Pre,
    Schwarzian,
    Bloch,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Analytic,
    Hm,
    Cdo,
}

impl From<WhichArg> for Which {
    fn from(w: WhichArg) -> Which {
        match w {
            WhichArg::Pre => Which::Pre,
            WhichArg::Schwarzian => Which::Schwarzian,
            WhichArg::Bloch => Which::Bloch,
        }
    }
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Analytic => Flavor::Analytic,
            FlavorArg::Hm => Flavor::Hm,
            FlavorArg::Cdo => Flavor::Cdo,
        }
    }
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            // Evaluation failures carry a JSON error object and exit code 2.
            println!(
                "{}",
                serde_json::json!({ "error": msg })
            );
            std::process::ExitCode::from(2)
        }
    }
}

fn grid_config(cli: &Cli) -> GridConfig {
    let mut cfg = GridConfig::default();
    if let Some(r) = cli.r_max {
        cfg.r_max = r;
    }
    if let Some(n) = cli.n_theta {
        cfg.n_theta = n;
    }
    if let Some(n) = cli.n_radii {
        cfg.n_radii = n;
    }
    cfg.refine = !cli.no_refine;
    cfg
}

fn family_params(family: &str, args: &[String]) -> Result<Params, String> {
    let mut params = families::default_params(family).map_err(|e| e.to_string())?;
    for arg in args {
        let (k, v) = parse_param(arg)?;
        params.insert(k, v);
    }
    Ok(params)
}

#[derive(Serialize)]
struct AnalyzeOut {
    omega: ComplexJson,
    jacobian: f64,
    p_analytic: ComplexJson,
    s_analytic: ComplexJson,
    p_hm: ComplexJson,
    s_hm: ComplexJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    p_cdo: Option<ComplexJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s_cdo: Option<ComplexJson>,
    q_functional: ComplexJson,
}

#[derive(Serialize)]
struct NormOut {
    value: f64,
    argmax: ComplexJson,
    argmax_r: f64,
    argmax_theta: f64,
    boundary_limit: bool,
    evaluations: usize,
}

impl From<NormEstimate> for NormOut {
    fn from(e: NormEstimate) -> Self {
        NormOut {
            value: e.value,
            argmax: e.argmax.into(),
            argmax_r: e.argmax.norm(),
            argmax_theta: e.argmax.arg().rem_euclid(std::f64::consts::TAU),
            boundary_limit: e.boundary_limit,
            evaluations: e.evaluations,
        }
    }
}

fn fmt_c(z: Complex64) -> String {
    if z.im >= 0.0 {
        format!("{}+{}i", z.re, z.im)
    } else {
        format!("{}-{}i", z.re, -z.im)
    }
}

fn run(cli: &Cli) -> Result<std::process::ExitCode, String> {
    let ok = std::process::ExitCode::SUCCESS;
    match &cli.cmd {
        Cmd::Analyze {
            family,
            params,
            point,
        } => {
            let p = family_params(family, params)?;
            let f = families::build(family, &p).map_err(|e| e.to_string())?;
            let z = parse_complex(point)?;
            let bundle = f.derivative_bundle(z).map_err(|e| e.to_string())?;
            let qf = harmdisk::map::q_functional(f.hp(), z).map_err(|e| e.to_string())?;
            let out = AnalyzeOut {
                omega: bundle.omega_value.into(),
                jacobian: bundle.jacobian,
                p_analytic: bundle.p_analytic.into(),
                s_analytic: bundle.s_analytic.into(),
                p_hm: bundle.p_hm.into(),
                s_hm: bundle.s_hm.into(),
                p_cdo: bundle.p_cdo.map(Into::into),
                s_cdo: bundle.s_cdo.map(Into::into),
                q_functional: qf.into(),
            };
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("omega        = {}", fmt_c(bundle.omega_value));
                println!("jacobian     = {}", bundle.jacobian);
                println!("p_analytic   = {}", fmt_c(bundle.p_analytic));
                println!("s_analytic   = {}", fmt_c(bundle.s_analytic));
                println!("p_hm         = {}", fmt_c(bundle.p_hm));
                println!("s_hm         = {}", fmt_c(bundle.s_hm));
                if let Some(v) = bundle.p_cdo {
                    println!("p_cdo        = {}", fmt_c(v));
                }
                if let Some(v) = bundle.s_cdo {
                    println!("s_cdo        = {}", fmt_c(v));
                }
                println!("q_functional = {}", fmt_c(qf));
            }
            Ok(ok)
        }
        Cmd::Norm {
            family,
            params,
            which,
            flavor,
        } => {
            let p = family_params(family, params)?;
            let f = families::build(family, &p).map_err(|e| e.to_string())?;
            let cfg = grid_config(cli);
            let est = estimate(&f, (*which).into(), (*flavor).into(), &cfg)
                .map_err(|e| e.to_string())?;
            let out = NormOut::from(est);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("value          = {}", out.value);
                println!("argmax         = {}", fmt_c(est.argmax));
                println!("argmax_r       = {}", out.argmax_r);
                println!("argmax_theta   = {}", out.argmax_theta);
                println!("boundary_limit = {}", out.boundary_limit);
                println!("evaluations    = {}", out.evaluations);
            }
            Ok(ok)
        }
        Cmd::Sweep {
            family,
            param,
            from,
            to,
            steps,
            which,
            flavor,
        } => {
            if *steps == 0 {
                return Err("steps must be >= 1".into());
            }
            let cfg = grid_config(cli);
            let ref_key = families::sweep_reference_key(family, (*which).into());
            println!("param,reference_value,sampled_norm,argmax_r,argmax_theta,boundary_limit");
            for i in 0..*steps {
                let value = if *steps == 1 {
                    *from
                } else {
                    from + (to - from) * i as f64 / (*steps as f64 - 1.0)
                };
                let mut p = families::default_params(family).map_err(|e| e.to_string())?;
                p.insert(param.clone(), value);
                let f = families::build(family, &p).map_err(|e| e.to_string())?;
                let est = estimate(&f, (*which).into(), (*flavor).into(), &cfg)
                    .map_err(|e| e.to_string())?;
                let reference = ref_key
                    .and_then(|key| families::reference(family, key, &p).ok())
                    .map(sig12)
                    .unwrap_or_default();
                let out = NormOut::from(est);
                println!(
                    "{},{},{},{},{},{}",
                    sig12(value),
                    reference,
                    sig12(out.value),
                    sig12(out.argmax_r),
                    sig12(out.argmax_theta),
                    out.boundary_limit
                );
            }
            Ok(ok)
        }
        Cmd::Coeffs {
            family,
            params,
            n_max,
        } => {
            let p = family_params(family, params)?;
            let f = families::build(family, &p).map_err(|e| e.to_string())?;
            let bs = g_coefficients(&f, *n_max).map_err(|e| e.to_string())?;
            let rep = coefficient_bound_check(&f, *n_max).map_err(|e| e.to_string())?;
            if cli.json {
                #[derive(Serialize)]
                struct CoeffRow {
                    n: usize,
                    re: f64,
                    im: f64,
                }
                #[derive(Serialize)]
                struct CoeffsOut {
                    family: String,
                    n_max: usize,
                    coefficients: Vec<CoeffRow>,
                    max_modulus: f64,
                    worst_n: usize,
                    bound_ok: bool,
                }
                let out = CoeffsOut {
                    family: family.clone(),
                    n_max: *n_max,
                    coefficients: bs
                        .iter()
                        .enumerate()
                        .map(|(i, b)| CoeffRow {
                            n: i + 1,
                            re: b.re,
                            im: b.im,
                        })
                        .collect(),
                    max_modulus: rep.max_modulus,
                    worst_n: rep.worst_n,
                    bound_ok: rep.pass,
                };
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                for (i, b) in bs.iter().enumerate() {
                    println!("b_{} = {}", i + 1, fmt_c(*b));
                }
                println!(
                    "max |b_n| = {} at n = {} ({})",
                    rep.max_modulus,
                    rep.worst_n,
                    if rep.pass { "bound holds" } else { "BOUND VIOLATED" }
                );
            }
            Ok(ok)
        }
        Cmd::Verify { suite } => {
            let names: Vec<&str> = match suite {
                Some(s) => vec![s.as_str()],
                None => SUITE_NAMES.to_vec(),
            };
            let mut reports: Vec<SuiteReport> = Vec::new();
            for name in names {
                reports.push(run_suite(name, cli.seed).map_err(|e| e.to_string())?);
            }
            let all_passed = reports.iter().all(|r| r.passed);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            } else {
                for r in &reports {
                    for c in &r.checks {
                        println!(
                            "{} {:<40} {}",
                            if c.passed { "PASS" } else { "FAIL" },
                            c.name,
                            c.detail
                        );
                    }
                    println!(
                        "suite {}: {}",
                        r.suite,
                        if r.passed { "PASS" } else { "FAIL" }
                    );
                }
            }
            Ok(if all_passed {
                ok
            } else {
                std::process::ExitCode::from(1)
            })
        }
    }
}
