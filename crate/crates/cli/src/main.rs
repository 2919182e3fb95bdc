//! `etaforge`: expansions, searches, rationality certificates, verification suites and numerics.

mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use config::RunConfig;
use etaforge::kernel10::{decide_rationality, EtaExponents, ParamExponents};
use etaforge::numeric::{evaluate, NumericReport, DEFAULT_PRECISION};
use etaforge::search::{scan_a_report, search_level10, DEEP_TRUNCATION, DEFAULT_TRUNCATION};
use etaforge::verify::{run_suite, Suite, VerifyConfig};

#[derive(Parser, Debug)]
#[command(name = "etaforge", version, about = "Eta quotients that are derivatives of integer series")]
struct Cli {
    /// Line-oriented key=value file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// q-expansion of η₁^e₁ η₂^e₂ η₅^e₅ η₁₀^e₁₀.
    Expand {
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        #[arg(long)]
        terms: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Exponent vectors whose quotient is b·(q d/dq of an integer series); JSON lines.
    Search {
        #[arg(long)]
        emax: Option<i64>,
        #[arg(long)]
        b: Option<u64>,
        #[arg(long)]
        terms: Option<usize>,
        /// Use at least 2000 coefficients.
        #[arg(long)]
        deep: bool,
    },
    /// Triples (a₁,a₂,a₃) in [−R,R]³ with rational k-integrals, compared with the golden tables.
    ScanA {
        #[arg(long)]
        range: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Rationality certificate for the integrand with exponents a (three or four entries).
    IntegrateK {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Option<String>,
    },
    /// High-precision numeric checks.
    Eval {
        #[arg(long)]
        what: String,
        #[arg(long)]
        prec: Option<u32>,
    },
}

fn parse_ints(s: &str, what: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| anyhow!("{what}: {x:?} is not an integer")))
        .collect()
}

fn parse_e(s: &str) -> Result<EtaExponents> {
    let v = parse_ints(s, "--e")?;
    let arr: [i64; 4] = v.try_into().map_err(|_| anyhow!("--e expects four comma-separated integers"))?;
    Ok(EtaExponents::from(arr))
}

fn parse_a(s: &str) -> Result<ParamExponents> {
    let v = parse_ints(s, "--a")?;
    match v.as_slice() {
        [a1, a2, a3] => Ok(ParamExponents::from_triple(*a1, *a2, *a3)),
        [a0, a1, a2, a3] => Ok(ParamExponents::new(*a0, *a1, *a2, *a3)?),
        _ => bail!("--a expects (a1,a2,a3) or (a0,a1,a2,a3)"),
    }
}

fn precision(flag: Option<u32>, cfg: &RunConfig) -> Result<u32> {
    if let Some(p) = flag.or(cfg.precision) {
        return Ok(p);
    }
    match std::env::var("ETAFORGE_PREC") {
        Ok(v) => v.trim().parse().map_err(|_| anyhow!("ETAFORGE_PREC: {v:?} is not a bit count")),
        Err(_) => Ok(DEFAULT_PRECISION),
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Output text and whether every requested check passed.
fn run(cli: &Cli, cfg: &RunConfig) -> Result<(String, bool)> {
    match &cli.command {
        Command::Expand { e, terms, json: as_json } => {
            let e = parse_e(e)?;
            let n = terms.or(cfg.truncation).unwrap_or(50);
            let s = e.quotient().series(n);
            if *as_json {
                #[derive(Serialize)]
                struct Out<'a> {
                    e: EtaExponents,
                    admissible: bool,
                    series: &'a etaforge::qseries::PuiseuxSeries,
                }
                Ok((json(&Out { e, admissible: e.is_admissible(), series: &s })?, true))
            } else {
                Ok((format!("{s}\n"), true))
            }
        }
        Command::Search { emax, b, terms, deep } => {
            let e_max = emax.or(cfg.e_max).unwrap_or(8);
            let b = b.or(cfg.b_bound).unwrap_or(1);
            let mut n = terms.or(cfg.truncation).unwrap_or(DEFAULT_TRUNCATION);
            if *deep {
                n = n.max(DEEP_TRUNCATION);
            }
            if e_max <= 0 || b == 0 || n == 0 {
                bail!("--emax, --b and --terms must be positive");
            }
            let mut out = String::new();
            for hit in search_level10(e_max, b, n) {
                out.push_str(&serde_json::to_string(&hit)?);
                out.push('\n');
            }
            Ok((out, true))
        }
        Command::ScanA { range, json: as_json } => {
            let r = range.or(cfg.range).unwrap_or(10);
            if r <= 0 {
                bail!("--range must be positive");
            }
            let report = scan_a_report(r);
            if *as_json {
                return Ok((json(&report)?, report.empty_diff));
            }
            let mut out = String::new();
            for a in &report.found {
                out.push_str(&format!("{},{},{}\n", a.a1, a.a2, a.a3));
            }
            if report.empty_diff {
                out.push_str(&format!("EMPTY-DIFF range={r} found={}\n", report.found.len()));
            } else {
                out.push_str(&format!("DIFF range={r} missing={:?} extra={:?}\n", report.missing, report.extra));
            }
            Ok((out, report.empty_diff))
        }
        Command::IntegrateK { a } => {
            let a = parse_a(a)?;
            let cert = decide_rationality(&a);
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                cert: &'a etaforge::kernel10::RationalityCertificate,
                g_text: Option<String>,
            }
            let g_text = cert.g.as_ref().map(|g| g.to_string());
            Ok((json(&Out { cert: &cert, g_text })?, true))
        }
        Command::Verify { suite } => {
            let name = suite.clone().or_else(|| cfg.suite.clone()).unwrap_or_else(|| "all".to_string());
            let suite: Suite = name.parse()?;
            let report = run_suite(suite, &VerifyConfig::default());
            Ok((json(&report)?, report.pass))
        }
        Command::Eval { what, prec } => {
            let prec = precision(*prec, cfg)?;
            if prec < 16 {
                bail!("precision must be at least 16 bits");
            }
            let reports = evaluate(what, prec)?;
            let pass = !reports.is_empty() && reports.iter().all(|r| r.pass);
            #[derive(Serialize)]
            struct Out<'a> {
                what: &'a str,
                precision_bits: u32,
                pass: bool,
                reports: &'a [NumericReport],
            }
            Ok((json(&Out { what, precision_bits: prec, pass, reports: &reports })?, pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| -> Result<bool> {
        let cfg = match &cli.config {
            Some(p) => RunConfig::load(p)?,
            None => RunConfig::default(),
        };
        if let Some(j) = cli.jobs {
            if j == 0 {
                bail!("--jobs must be positive");
            }
            rayon::ThreadPoolBuilder::new().num_threads(j).build_global().context("configuring worker pool")?;
        }
        let (text, pass) = run(&cli, &cfg)?;
        match cli.output.as_ref().or(cfg.output.as_ref()) {
            Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(pass)
    })();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
