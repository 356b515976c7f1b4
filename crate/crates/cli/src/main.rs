use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use og4_core::classify::classify_independent_with;
use og4_core::document::{census_csv, to_dot, PairDocument};
use og4_core::families::{Family, FamilySpec, Orientation, Variant};
use og4_core::group::DEFAULT_ORDER_BOUND;
use og4_core::metacirc::check_weak_metacirculant;
use og4_core::pair::check_og4;
use og4_core::quotient::{cyclic_quotient_census, CensusRow};
use og4_core::verify::{run_suite, SuiteReport, SUITES};
use og4_core::{Error, IsoOptions, OrientedPair, Perm};

#[derive(Parser)]
#[command(name = "og4kit", version, about = "Build and analyse four-valent graph–group pairs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the pair as a Graphviz file.
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Largest group order to enumerate.
    #[arg(long, global = true, value_name = "ORDER", default_value_t = DEFAULT_ORDER_BOUND)]
    bound: usize,
    /// Require isomorphisms to map the marked arcs onto the marked arcs,
    /// rather than allowing a reversal.
    #[arg(long, global = true)]
    strict_delta: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Write the pair document of a family member.
    Construct {
        /// lex-cycle, gamma, gamma-plus or double.
        family: Family,
        r: usize,
        s: Option<usize>,
        #[arg(long = "group", default_value = "G")]
        variant: Variant,
        /// Defaults to con2a for the double cover and con1 otherwise.
        #[arg(long = "orient")]
        orientation: Option<Orientation>,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check membership and report the vertex stabiliser.
    Analyze { path: PathBuf },
    /// List the cyclic normal quotients.
    Quotients {
        path: PathBuf,
        /// Also write the census as CSV.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Match the pair against the reference constructions.
    Classify { path: PathBuf },
    /// Check the weak metacirculant conditions for (ρ, λ).
    Meta {
        path: PathBuf,
        /// Generator index of ρ, or its image array with --element.
        rho: String,
        /// Generator index of λ, or its image array with --element.
        lambda: String,
        /// Read ρ and λ as comma-separated image arrays.
        #[arg(long)]
        element: bool,
    },
    /// Run verification suites by name, or all of them.
    Verify { suite: String },
    /// Write DOT and CSV renderings of a pair document.
    Export {
        path: PathBuf,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::BoundExceeded { .. } | Error::CapExceeded { .. }) => 3,
        Some(err) if err.is_theorem_violation() => 4,
        _ => 2,
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let g = cli.global;
    match cli.command {
        Command::Construct { family, r, s, variant, orientation, out } => {
            let orientation = orientation.unwrap_or(match family {
                Family::GammaDouble => Orientation::Con2a,
                _ => Orientation::Con1,
            });
            let spec = FamilySpec { family, r, s, group_variant: variant, orientation };
            if family != Family::LexCycle && s.is_none() {
                return Err(Error::BadParam(format!("{} needs both r and s", spec.family_name())).into());
            }
            let doc = PairDocument::from_family(&spec)?;
            let text = doc.to_json();
            match &out {
                Some(path) => write(path, &text)?,
                None => println!("{text}"),
            }
            write_dot(&g, &doc.to_pair()?, &spec.label(), doc.labels.as_deref())?;
            if out.is_some() && !g.json {
                println!("wrote {} ({} vertices, {} arcs)", spec.label(), doc.n, doc.arcs.len());
            }
            Ok(0)
        }
        Command::Analyze { path } => {
            let (doc, pair) = load(&path)?;
            let report = check_og4(&pair)?;
            write_dot(&g, &pair, &name_of(&path), doc.labels.as_deref())?;
            if g.json {
                println!("{}", serde_json::to_string_pretty(&json!({ "member": report.member(), "report": report }))?);
                return Ok(0);
            }
            let yn = |b: bool| if b { "yes" } else { "no" };
            println!("vertices: {}, arcs in Δ: {}", pair.graph().n(), pair.delta().len());
            println!("|G| = {}, generators: {}", report.group_order, pair.group().generators().len());
            println!("OG(4): {}; |G_x| = {}", yn(report.member()), report.stabilizer_order);
            println!(
                "connected: {}, quartic: {}, vertex-transitive: {}, edge-transitive: {}",
                yn(report.connected),
                yn(report.quartic),
                yn(report.vertex_transitive),
                yn(report.edge_transitive)
            );
            println!(
                "arc orbits: {}, Δ one orbit: {}, orientation kept: {}, arc-transitive: {}",
                report.arc_orbits,
                yn(report.delta_is_single_orbit),
                yn(report.orientation_preserved),
                yn(report.arc_transitive)
            );
            Ok(0)
        }
        Command::Quotients { path, csv } => {
            let (doc, pair) = load(&path)?;
            let rows = cyclic_quotient_census(&pair, g.bound)?;
            write_dot(&g, &pair, &name_of(&path), doc.labels.as_deref())?;
            if let Some(csv_path) = csv {
                write(&csv_path, &census_for(&doc, &rows)?)?;
            }
            if g.json {
                let list: Vec<_> = rows.iter().map(row_json).collect::<anyhow::Result<_>>()?;
                println!("{}", serde_json::to_string_pretty(&list)?);
            } else if rows.is_empty() {
                println!("no cyclic normal quotients");
            } else {
                println!("{:>6}  {:<10}  {:>7}  {:>12}  {:>8}", "cycle", "oriented", "maximal", "|kernel|", "subgroup");
                for row in &rows {
                    println!(
                        "{:>6}  {:<10}  {:>7}  {:>12}  {:>8}",
                        format!("C{}", row.length),
                        if row.oriented { "oriented" } else { "unoriented" },
                        if row.maximal { "yes" } else { "no" },
                        row.kernel.order()?,
                        row.subgroup_id
                    );
                }
            }
            Ok(0)
        }
        Command::Classify { path } => {
            let (doc, pair) = load(&path)?;
            write_dot(&g, &pair, &name_of(&path), doc.labels.as_deref())?;
            let opts = IsoOptions { strict_delta: g.strict_delta };
            let report = classify_independent_with(&pair, g.bound, opts)?;
            if g.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
                return Ok(0);
            }
            let (r, s) = report.parameters;
            println!("Table 1 line {} with (r, s) = ({r}, {s})", report.table_line);
            println!("reference: {}", report.found[0].line.description());
            for l in &report.equivalent_listings {
                println!("also listed as line {} with (r, s) = ({}, {}): {}", l.line, l.r, l.s, l.description());
            }
            println!(
                "K = Ñ ∩ M̃ has order {}; base pair has {} vertices and |G| = {}",
                report.reduction.k_order, report.reduction.base_vertices, report.reduction.base_group_order
            );
            println!("|G_x| = {}", report.stabilizer_order);
            println!("independent pairs:");
            for f in &report.found {
                let o = |b: bool| if b { "oriented" } else { "unoriented" };
                println!(
                    "  C{} ({}) with C{} ({}): line {} {}",
                    f.r,
                    o(f.n_oriented),
                    f.s,
                    o(f.m_oriented),
                    f.line.line,
                    f.line.description()
                );
            }
            Ok(0)
        }
        Command::Meta { path, rho, lambda, element } => {
            let (_, pair) = load(&path)?;
            let pick = |arg: &str, name: &str| -> anyhow::Result<Perm> {
                if element {
                    let images = arg
                        .trim_matches(|c| c == '[' || c == ']')
                        .split(',')
                        .map(|t| t.trim().parse::<u32>())
                        .collect::<Result<Vec<_>, _>>()
                        .with_context(|| format!("{name}: expected comma-separated images"))?;
                    return Ok(Perm::from_images(images)?);
                }
                let i: usize = arg.parse().with_context(|| format!("{name}: expected a generator index"))?;
                let gens = pair.group().generators();
                match gens.get(i) {
                    Some(p) => Ok(p.clone()),
                    None => Err(Error::BadParam(format!("{name}: there are only {} generators", gens.len())).into()),
                }
            };
            let (rho, lambda) = (pick(&rho, "rho")?, pick(&lambda, "lambda")?);
            let report = check_weak_metacirculant(&pair, &rho, &lambda)?;
            if g.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
                return Ok(0);
            }
            let yn = |b: bool| if b { "yes" } else { "no" };
            println!("weak metacirculant: {}", yn(report.is_weak));
            if report.is_weak {
                println!(
                    "(m, n) = ({}, {}), λ⁻¹ρλ = ρ^{}",
                    report.m,
                    report.n,
                    report.r_exp.expect("weak reports carry the exponent")
                );
            }
            println!("metacirculant: {}", yn(report.is_metacirculant));
            println!("⟨ρ, λ⟩ regular: {}", yn(report.h_regular));
            let q = &report.rho_quotient;
            match q.length {
                Some(len) => println!("ρ-quotient: {} (C{len})", q.status.as_str()),
                None => println!("ρ-quotient: {} ({} cells)", q.status.as_str(), q.cells),
            }
            for f in &report.failures {
                println!("  fails: {f}");
            }
            Ok(0)
        }
        Command::Verify { suite } => {
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut reports = Vec::new();
            for name in names {
                let report = run_suite(name)?;
                if !g.json {
                    print_suite(&report);
                }
                reports.push(report);
            }
            let ok = reports.iter().all(SuiteReport::passed);
            if g.json {
                println!("{}", serde_json::to_string_pretty(&json!({ "passed": ok, "suites": reports }))?);
            } else {
                let passed = reports.iter().filter(|r| r.passed()).count();
                println!("{passed}/{} suites passed", reports.len());
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Export { path, csv } => {
            let (doc, pair) = load(&path)?;
            if g.dot.is_none() && csv.is_none() {
                bail!(Error::BadParam("export needs --dot, --csv or both".into()));
            }
            write_dot(&g, &pair, &name_of(&path), doc.labels.as_deref())?;
            if let Some(csv_path) = csv {
                let rows = cyclic_quotient_census(&pair, g.bound)?;
                write(&csv_path, &census_for(&doc, &rows)?)?;
            }
            Ok(0)
        }
    }
}

trait FamilyName {
    fn family_name(&self) -> &'static str;
}

impl FamilyName for FamilySpec {
    fn family_name(&self) -> &'static str {
        match self.family {
            Family::LexCycle => "lex-cycle",
            Family::Gamma => "gamma",
            Family::GammaPlus => "gamma-plus",
            Family::GammaDouble => "double",
        }
    }
}

fn load(path: &Path) -> anyhow::Result<(PairDocument, OrientedPair)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc = PairDocument::parse(&text).map_err(|e| anyhow::Error::new(e).context(path.display().to_string()))?;
    let pair = doc.to_pair().map_err(|e| anyhow::Error::new(e).context(path.display().to_string()))?;
    Ok((doc, pair))
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn name_of(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "pair".into())
}

fn write_dot(g: &Global, pair: &OrientedPair, name: &str, labels: Option<&[String]>) -> anyhow::Result<()> {
    if let Some(path) = &g.dot {
        write(path, &to_dot(pair, name, labels))?;
    }
    Ok(())
}

fn census_for(doc: &PairDocument, rows: &[CensusRow]) -> anyhow::Result<String> {
    let (family, r, s) = match &doc.family {
        Some(spec) => (spec.family_name().to_string(), spec.r, spec.s),
        None => ("custom".to_string(), doc.n, None),
    };
    Ok(census_csv(&family, r, s, rows)?)
}

fn row_json(row: &CensusRow) -> anyhow::Result<serde_json::Value> {
    Ok(json!({
        "length": row.length,
        "oriented": row.oriented,
        "maximal": row.maximal,
        "subgroup_id": row.subgroup_id,
        "sources": row.sources,
        "kernel_order": row.kernel.order()?,
        "kernel_generators": row.kernel.generators().iter().map(|g| g.images().to_vec()).collect::<Vec<_>>(),
        "cells": row.partition.cells(),
    }))
}

fn print_suite(report: &SuiteReport) {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!("{status} {} ({} ms)", report.suite, report.millis);
    for c in &report.claims {
        println!("  {} {} [{} ms]", if c.passed { "ok " } else { "ERR" }, c.name, c.millis);
        println!("      {}", c.detail);
    }
}
