//! The `dirac-screen` command surface.

use std::process::ExitCode;
use std::sync::OnceLock;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use dirac_core::norms::KTypeWeight;
use dirac_core::qfmt;
use dirac_core::reptheory;
use dirac_core::screener::{InfChar, ScreenVerdict};
use dirac_core::weight::Frame;
use dirac_core::{Rat, E7};

use crate::formats;
use crate::output::{self, Format};
use crate::parallel;

/// Exit code for validation and argument failures.
pub const EXIT_VALIDATION: u8 = 2;
/// Exit code for inconclusive screens (cap exhausted).
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "dirac-screen",
    about = "Exact screening and verification for the E7(7) Dirac-series data",
    version
)]
pub struct Cli {
    /// Output format: json, csv, or plain.
    #[arg(long, global = true, default_value = "plain")]
    format: Format,
    /// Worker threads (also settable via DIRAC_SCREEN_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the 72 positive systems containing the compact one.
    Chambers,
    /// Norm report for one k-type.
    Norm(NormArgs),
    /// Census of u-small K-types.
    Usmall(UsmallArgs),
    /// Dirac-inequality screen for one K-type and character.
    Screen(ScreenArgs),
    /// Spin norms along a Vogan pencil.
    Pencil(PencilArgs),
    /// Enumerate candidate infinitesimal characters.
    EnumeratePhi(PhiArgs),
    /// The certificate K-types among the u-small census.
    Certs,
    /// Dirac-cohomology candidate highest weights for a character.
    DiracCandidates(CandArgs),
    /// Tensor-product decomposition of two k-types.
    Tensor(TensorArgs),
    /// Verify the bundled (or a given) dataset.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct NormArgs {
    /// Comma-separated varpi coordinates a,b,c,d,e,f,g.
    #[arg(long)]
    ktype: String,
}

#[derive(Args)]
struct UsmallArgs {
    /// Print only the census size (the default).
    #[arg(long)]
    count: bool,
    /// List every member.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct ScreenArgs {
    /// Character in zeta coordinates a,b,c,d,e,f,g.
    #[arg(long = "inf-char")]
    inf_char: String,
    /// K-type in varpi coordinates.
    #[arg(long)]
    ktype: String,
    /// Optional nu parameter in zeta coordinates.
    #[arg(long)]
    nu: Option<String>,
    /// Pencil scan cap.
    #[arg(long, default_value_t = 50)]
    cap: u32,
}

#[derive(Args)]
struct PencilArgs {
    #[arg(long = "inf-char")]
    inf_char: String,
    #[arg(long)]
    ktype: String,
    #[arg(long, default_value_t = 50)]
    cap: u32,
}

#[derive(Args)]
struct PhiArgs {
    /// Largest coordinate value.
    #[arg(long = "max-coord")]
    max_coord: i64,
    /// Optional involution list enabling the exact filter.
    #[arg(long)]
    involutions: Option<std::path::PathBuf>,
    /// Print only the count.
    #[arg(long)]
    count: bool,
}

#[derive(Args)]
struct CandArgs {
    #[arg(long = "inf-char")]
    inf_char: String,
    /// Restrict to one candidate highest weight (varpi coordinates).
    #[arg(long)]
    gamma: Option<String>,
}

#[derive(Args)]
struct TensorArgs {
    /// The iterated (small) factor, varpi coordinates.
    #[arg(long)]
    small: String,
    /// The other factor, varpi coordinates.
    #[arg(long)]
    other: String,
    /// Dimension cap for the small factor.
    #[arg(long, default_value_t = reptheory::KLIMYK_DIM_CAP)]
    cap: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Dataset file; the bundled tables are used when absent.
    #[arg(long)]
    dataset: Option<std::path::PathBuf>,
    /// Run only one pass: entry, stats, or cancellation.
    #[arg(long)]
    only: Option<String>,
}

fn ctx() -> &'static E7 {
    static CTX: OnceLock<E7> = OnceLock::new();
    CTX.get_or_init(E7::new)
}

fn parse7(s: &str) -> Result<[i64; 7]> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 7 {
        bail!("expected 7 comma-separated values, got {}", parts.len());
    }
    let mut out = [0i64; 7];
    for (i, p) in parts.iter().enumerate() {
        out[i] = p.trim().parse().with_context(|| format!("bad integer {p:?}"))?;
    }
    Ok(out)
}

fn parse7_rat(s: &str) -> Result<Vec<Rat>> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 7 {
        bail!("expected 7 comma-separated values, got {}", parts.len());
    }
    parts.iter().map(|p| qfmt::parse(p.trim()).map_err(Into::into)).collect()
}

fn parse_ktype(s: &str) -> Result<KTypeWeight> {
    let coords = parse7(s)?;
    KTypeWeight::new(coords).map_err(|e| anyhow::anyhow!("{e}"))
}

/// Run the tool; returns the process exit code.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("DIRAC_SCREEN_THREADS").ok().and_then(|v| v.parse().ok())
        })
        .unwrap_or(0);
    if threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_VALIDATION)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Chambers => chambers(cli.format),
        Command::Norm(args) => norm(cli.format, args),
        Command::Usmall(args) => usmall(cli.format, args),
        Command::Screen(args) => screen(cli.format, args),
        Command::Pencil(args) => pencil(cli.format, args),
        Command::EnumeratePhi(args) => enumerate_phi(cli.format, args),
        Command::Certs => certs(cli.format),
        Command::DiracCandidates(args) => dirac_candidates(cli.format, args),
        Command::Tensor(args) => tensor(cli.format, args),
        Command::Verify(args) => verify(cli.format, args),
    }
}

fn chambers(format: Format) -> Result<ExitCode> {
    let e7 = ctx();
    match format {
        Format::Json => {
            let rows: Vec<_> = e7
                .chambers
                .iter()
                .map(|c| {
                    json!({
                        "j": c.index,
                        "length": c.length,
                        "rho_n_varpi": output::ints_value(&c.rho_n_varpi),
                        "rho_n_ambient": output::rats_value(&c.rho_n_j()),
                    })
                })
                .collect();
            output::print_json(&serde_json::Value::Array(rows));
        }
        Format::Csv => {
            println!("j,length,rho_n_varpi,rho_n_ambient");
            for c in &e7.chambers {
                println!(
                    "{}",
                    output::csv_line(&[
                        c.index.to_string(),
                        c.length.to_string(),
                        output::bracketed(&c.rho_n_varpi),
                        output::bracketed_rats(&c.rho_n_j()),
                    ])
                );
            }
        }
        Format::Plain => {
            for c in &e7.chambers {
                println!(
                    "chamber {:2}  length {:2}  rho_n {}",
                    c.index,
                    c.length,
                    output::bracketed(&c.rho_n_varpi)
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn norm(format: Format, args: &NormArgs) -> Result<ExitCode> {
    let e7 = ctx();
    let mu = parse_ktype(&args.ktype)?;
    let report = e7.norm_report(&mu);
    let lambda_zeta = e7
        .tables
        .convert(&report.lambda_a, Frame::Zeta)
        .expect("lambda_a lies in the root span");
    match format {
        Format::Json => output::print_json(&json!({
            "ktype": output::ints_value(&mu.varpi),
            "is_k_type": report.is_k_type,
            "lambda_a_zeta": output::rats_value(&lambda_zeta.coords),
            "lambda_norm_sq": qfmt::render(&report.lambda_norm_sq),
            "spin_norm_sq": qfmt::render(&report.spin_norm_sq),
            "spin_norm": qfmt::render_sqrt(&report.spin_norm_sq),
            "achieving_chambers": report.achieving_chambers,
            "usmall": report.usmall,
        })),
        Format::Csv | Format::Plain => {
            println!("ktype {}", output::bracketed(&mu.varpi));
            println!("is_k_type {}", report.is_k_type);
            println!("lambda_a_zeta {}", output::bracketed_rats(&lambda_zeta.coords));
            println!("lambda_norm_sq {}", qfmt::render(&report.lambda_norm_sq));
            println!("spin_norm_sq {}", qfmt::render(&report.spin_norm_sq));
            println!("spin_norm {}", qfmt::render_sqrt(&report.spin_norm_sq));
            println!(
                "achieving_chambers {:?}",
                report.achieving_chambers
            );
            println!("usmall {}", report.usmall);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn usmall(format: Format, args: &UsmallArgs) -> Result<ExitCode> {
    let e7 = ctx();
    let census = parallel::usmall_census(e7);
    if args.list && !args.count {
        match format {
            Format::Json => {
                let rows: Vec<_> =
                    census.iter().map(|m| output::ints_value(&m.varpi)).collect();
                output::print_json(&json!({"count": census.len(), "ktypes": rows}));
            }
            _ => {
                for m in &census {
                    println!("{}", output::bracketed(&m.varpi));
                }
            }
        }
    } else {
        match format {
            Format::Json => output::print_json(&json!({ "count": census.len() })),
            _ => println!("{}", census.len()),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn screen(format: Format, args: &ScreenArgs) -> Result<ExitCode> {
    let e7 = ctx();
    let mu = parse_ktype(&args.ktype)?;
    let lambda = InfChar::new(parse7_rat(&args.inf_char)?);
    let nu = args.nu.as_deref().map(parse7_rat).transpose()?;
    let verdict = match e7.screen(&mu, &lambda, nu.as_deref(), args.cap) {
        Ok(v) => v,
        Err(inconclusive) => {
            eprintln!("inconclusive: {inconclusive}");
            return Ok(ExitCode::from(EXIT_INCONCLUSIVE));
        }
    };
    let (status, witness) = match &verdict {
        ScreenVerdict::PassesEquality { witness } => ("PassesEquality", Some(witness)),
        ScreenVerdict::PassesStrict => ("PassesStrict", None),
        ScreenVerdict::FailsDiracInequality { witness } => {
            ("FailsDiracInequality", Some(witness))
        }
        ScreenVerdict::FailsHJBound { nu_norm_sq } => {
            match format {
                Format::Json => output::print_json(&json!({
                    "status": "FailsHJBound",
                    "nu_norm_sq": qfmt::render(nu_norm_sq),
                })),
                _ => println!("FailsHJBound nu_norm_sq {}", qfmt::render(nu_norm_sq)),
            }
            return Ok(ExitCode::SUCCESS);
        }
    };
    match format {
        Format::Json => {
            let w = witness.map(|w| {
                json!({
                    "ktype": output::ints_value(&w.ktype.varpi),
                    "pencil_index": w.pencil_index,
                    "spin_norm_sq": qfmt::render(&w.spin_norm_sq),
                })
            });
            output::print_json(&json!({"status": status, "witness": w}));
        }
        _ => {
            println!("{status}");
            if let Some(w) = witness {
                println!(
                    "witness ktype {} at n={} spin_norm_sq {}",
                    output::bracketed(&w.ktype.varpi),
                    w.pencil_index,
                    qfmt::render(&w.spin_norm_sq)
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn pencil(format: Format, args: &PencilArgs) -> Result<ExitCode> {
    let e7 = ctx();
    let mu = parse_ktype(&args.ktype)?;
    let lambda = InfChar::new(parse7_rat(&args.inf_char)?);
    let scan = e7.pencil_min_spin(&mu, &lambda, args.cap);
    match format {
        Format::Json => {
            let profile: Vec<_> =
                scan.profile.iter().map(|s| serde_json::Value::String(qfmt::render(s))).collect();
            output::print_json(&json!({
                "profile": profile,
                "min_index": scan.min_index,
                "min_spin_norm_sq": qfmt::render(&scan.min_value),
                "conclusive": scan.conclusive,
            }));
        }
        _ => {
            for (n, s) in scan.profile.iter().enumerate() {
                println!("n={n} spin_norm_sq {}", qfmt::render(s));
            }
            println!("min at n={} value {}", scan.min_index, qfmt::render(&scan.min_value));
            println!("conclusive {}", scan.conclusive);
        }
    }
    if scan.conclusive {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_INCONCLUSIVE))
    }
}

fn enumerate_phi(format: Format, args: &PhiArgs) -> Result<ExitCode> {
    let e7 = ctx();
    if args.max_coord < 1 {
        bail!("--max-coord must be at least 1");
    }
    let involutions = match &args.involutions {
        None => None,
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            Some(formats::load_involutions(&text, e7)?)
        }
    };
    if args.count && involutions.is_none() {
        let n = e7.count_inf_chars(args.max_coord);
        match format {
            Format::Json => {
                output::print_json(&json!({"max_coord": args.max_coord, "count": n}))
            }
            _ => println!("{n}"),
        }
        return Ok(ExitCode::SUCCESS);
    }
    let list = e7.enumerate_inf_chars(args.max_coord, involutions.as_deref());
    match format {
        Format::Json => {
            if args.count {
                output::print_json(&json!({"max_coord": args.max_coord, "count": list.len()}));
            } else {
                let rows: Vec<_> = list
                    .iter()
                    .map(|c| output::ints_value(&c.as_ints().expect("integral by construction")))
                    .collect();
                output::print_json(&json!({
                    "max_coord": args.max_coord,
                    "count": list.len(),
                    "inf_chars": rows,
                }));
            }
        }
        _ => {
            if args.count {
                println!("{}", list.len());
            } else {
                for c in &list {
                    println!("{}", output::bracketed(&c.as_ints().unwrap()));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn certs(format: Format) -> Result<ExitCode> {
    let e7 = ctx();
    let census = parallel::usmall_census(e7);
    let certs = parallel::certs_census(e7, &census);
    match format {
        Format::Json => {
            let rows: Vec<_> = certs
                .iter()
                .map(|c| {
                    json!({
                        "ktype": output::ints_value(&c.ktype.varpi),
                        "spin_norm_sq": qfmt::render(&c.spin_norm_sq),
                        "lambda_norm_sq": qfmt::render(&c.lambda_norm_sq),
                    })
                })
                .collect();
            output::print_json(&json!({"count": certs.len(), "certs": rows}));
        }
        Format::Csv => {
            println!("ktype,spin_norm_sq,lambda_norm_sq");
            for c in &certs {
                println!(
                    "{}",
                    output::csv_line(&[
                        output::bracketed(&c.ktype.varpi),
                        qfmt::render(&c.spin_norm_sq),
                        qfmt::render(&c.lambda_norm_sq),
                    ])
                );
            }
        }
        Format::Plain => {
            for c in &certs {
                println!(
                    "{} spin_norm_sq {} lambda_norm_sq {}",
                    output::bracketed(&c.ktype.varpi),
                    qfmt::render(&c.spin_norm_sq),
                    qfmt::render(&c.lambda_norm_sq)
                );
            }
            println!("count {}", certs.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn dirac_candidates(format: Format, args: &CandArgs) -> Result<ExitCode> {
    let e7 = ctx();
    let lambda = parse7_rat(&args.inf_char)?;
    let gamma_filter = args.gamma.as_deref().map(parse7_rat).transpose()?;
    let cands = e7
        .dirac_candidate_ktypes(&lambda)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    let selected: Vec<_> = cands
        .into_iter()
        .filter(|c| gamma_filter.as_ref().map_or(true, |g| &c.gamma == g))
        .collect();
    match format {
        Format::Json => {
            let rows: Vec<_> = selected
                .iter()
                .map(|c| {
                    let sols: Vec<_> = c
                        .solutions
                        .iter()
                        .map(|&(j, len, parity)| json!({"j": j, "length": len, "parity": parity}))
                        .collect();
                    json!({
                        "gamma": output::rats_value(&c.gamma),
                        "min_length": c.min_length(),
                        "solutions": sols,
                    })
                })
                .collect();
            output::print_json(&json!({"count": selected.len(), "candidates": rows}));
        }
        _ => {
            for c in &selected {
                let sols: Vec<String> = c
                    .solutions
                    .iter()
                    .map(|&(j, len, p)| format!("j={j} len={len} parity={p:+}"))
                    .collect();
                println!("gamma {} {}", output::bracketed_rats(&c.gamma), sols.join("  "));
            }
            println!("count {}", selected.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn tensor(format: Format, args: &TensorArgs) -> Result<ExitCode> {
    let small = parse_ktype(&args.small)?;
    let other = parse_ktype(&args.other)?;
    let decomp = reptheory::klimyk_tensor(&small, &other, args.cap)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    match format {
        Format::Json => {
            let rows: Vec<_> = decomp
                .terms
                .iter()
                .map(|(w, m)| json!({"weight": output::ints_value(w), "mult": m.to_string()}))
                .collect();
            output::print_json(&json!({
                "terms": rows,
                "dimension": decomp.dimension().to_string(),
            }));
        }
        _ => {
            for (w, m) in &decomp.terms {
                println!("{} x{}", output::bracketed(w), m);
            }
            println!("dimension {}", decomp.dimension());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(format: Format, args: &VerifyArgs) -> Result<ExitCode> {
    let e7 = ctx();
    let text = match &args.dataset {
        None => crate::BUNDLED_DATASET.to_string(),
        Some(path) => std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?,
    };
    let ds = formats::load_dataset(&text)?;
    let mut report = dirac_core::dataset::VerifyReport::default();
    let only = args.only.as_deref();
    let mut passes: Vec<(&str, dirac_core::dataset::VerifyReport)> = Vec::new();
    if only.is_none() || only == Some("entry") {
        passes.push(("entry", parallel::verify_entries(e7, &ds.entries)));
    }
    if only.is_none() || only == Some("stats") {
        passes.push(("stats", dirac_core::dataset::verify_statistics(e7, &ds.entries, &ds.stats)));
        passes.push(("coverage", dirac_core::dataset::verify_inf_char_coverage(e7, &ds.entries)));
    }
    if only.is_none() || only == Some("cancellation") {
        passes.push(("cancellation", dirac_core::dataset::verify_cancellations(e7, &ds.entries)));
    }
    if passes.is_empty() {
        bail!("--only must be entry, stats, or cancellation");
    }
    let mut summary = Vec::new();
    for (name, r) in passes {
        summary.push((name.to_string(), r.checks, r.failures.len()));
        report.merge(r);
    }
    match format {
        Format::Json => {
            let failures: Vec<_> = report
                .failures
                .iter()
                .map(|f| {
                    json!({
                        "kgb_x": f.kgb_x,
                        "inf_char": output::ints_value(&f.inf_char),
                        "detail": f.detail,
                    })
                })
                .collect();
            let passes: Vec<_> = summary
                .iter()
                .map(|(n, c, f)| json!({"pass": n, "checks": c, "failures": f}))
                .collect();
            output::print_json(&json!({
                "paper_version": ds.paper_version,
                "entries": ds.entries.len(),
                "passes": passes,
                "failures": failures,
                "ok": report.ok(),
            }));
        }
        _ => {
            for (name, checks, failures) in &summary {
                println!("{name}: {checks} checks, {failures} failures");
            }
            for f in &report.failures {
                println!("FAIL kgb {} {:?}: {}", f.kgb_x, f.inf_char, f.detail);
            }
            println!("{}", if report.ok() { "all checks passed" } else { "FAILURES present" });
        }
    }
    if report.ok() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_VALIDATION))
    }
}
