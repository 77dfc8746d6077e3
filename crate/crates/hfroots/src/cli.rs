//! Argument parsing and command dispatch.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hfroots_core::plumbing::{embedded_resolution, PlumbingGraph, SurgeryLattice};
use hfroots_core::root::{render_ascii, render_svg};
use hfroots_core::{AlgebraicKnot, SpincResult, SurgerySpec};
use serde::Serialize;

use crate::report::{self, ComputeReport, GraphReport, KnotReport};
use crate::verify::{verify_lens, verify_surgery, Oracle};
use crate::{graph_json, CliError};

/// Heegaard Floer homology of negative rational surgeries on algebraic knots.
///
/// `--surgery P/Q` always means the coefficient -P/Q: enter positive numbers.
#[derive(Debug, Parser)]
#[command(name = "hfroots", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of an algebraic knot.
    Knot(KnotArgs),
    /// HF+ of -S^3_{-p/q}(K) for one or all spin^c structures.
    Compute(ComputeArgs),
    /// Compare the formulas with the lattice oracles.
    Verify(VerifyArgs),
    /// Read a plumbing graph from JSON, or build the graph of a knot or surgery.
    Graph(GraphArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Args)]
pub struct KnotArgs {
    /// Newton pairs p1,q1[,p2,q2,...].
    #[arg(long)]
    pub newton: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long)]
    pub newton: String,
    /// P/Q with P, Q > 0; the surgery coefficient is -P/Q.
    #[arg(long)]
    pub surgery: String,
    /// A spin^c index in [0, P) or "all".
    #[arg(long, default_value = "all")]
    pub spinc: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Also run lattice oracles.
    #[arg(long, value_enum, default_value = "none")]
    pub oracle: Oracle,
    /// Upper bound on the Laufer walk length per spin^c structure.
    #[arg(long, default_value_t = 5_000_000)]
    pub max_steps: u64,
    /// File, or for several SVG documents a directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include wall-clock timings (makes output non-deterministic).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, required_unless_present = "lens")]
    pub newton: Option<String>,
    #[arg(long, required_unless_present = "lens")]
    pub surgery: Option<String>,
    /// Check lens space d-invariants of L(P, Q) instead.
    #[arg(long, conflicts_with_all = ["newton", "surgery"])]
    pub lens: Option<String>,
    #[arg(long, default_value = "all")]
    pub spinc: String,
    #[arg(long, value_enum, default_value = "laufer")]
    pub oracle: Oracle,
    #[arg(long, default_value_t = 5_000_000)]
    pub max_steps: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Plumbing graph JSON file ("-" for standard input).
    #[arg(long, conflicts_with = "newton")]
    pub input: Option<PathBuf>,
    /// Build the embedded resolution graph of this knot...
    #[arg(long, required_unless_present = "input")]
    pub newton: Option<String>,
    /// ...or, with a surgery, the plumbing graph of the surgered manifold.
    #[arg(long, requires = "newton")]
    pub surgery: Option<String>,
    /// `json` prints only the graph document; `text` adds its invariants.
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn parse_newton(s: &str) -> Result<Vec<(i64, i64)>, CliError> {
    let nums: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            CliError::Input(format!(
                "--newton expects comma-separated integers, got {s:?}"
            ))
        })?;
    if nums.is_empty() || !nums.len().is_multiple_of(2) {
        return Err(CliError::Input(format!(
            "--newton needs an even number of integers, got {}",
            nums.len()
        )));
    }
    Ok(nums.chunks(2).map(|c| (c[0], c[1])).collect())
}

/// `P/Q` or `P`, both positive.
pub fn parse_fraction(flag: &str, s: &str) -> Result<(i64, i64), CliError> {
    let bad = || {
        CliError::Input(format!(
            "{flag} expects P/Q with positive integers, got {s:?}"
        ))
    };
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (
            p.trim().parse().map_err(|_| bad())?,
            q.trim().parse().map_err(|_| bad())?,
        ),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    if p <= 0 || q <= 0 {
        return Err(CliError::Input(format!(
            "{flag} takes positive P/Q (the coefficient used is -P/Q), got {s:?}"
        )));
    }
    Ok((p, q))
}

fn parse_spinc(s: &str, p: i64) -> Result<Vec<i64>, CliError> {
    if s == "all" {
        return Ok((0..p).collect());
    }
    let a: i64 = s.parse().map_err(|_| {
        CliError::Input(format!("--spinc expects an integer or \"all\", got {s:?}"))
    })?;
    if !(0..p).contains(&a) {
        return Err(hfroots_core::Error::SpincOutOfRange { a, p }.into());
    }
    Ok(vec![a])
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Internal(format!("writing output: {e}")))
        }
    }
}

struct Timer(Option<BTreeMap<String, u64>>);

impl Timer {
    fn new(enabled: bool) -> Self {
        Timer(enabled.then(BTreeMap::new))
    }

    fn time<T>(&mut self, key: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if let Some(map) = &mut self.0 {
            map.insert(key.into(), start.elapsed().as_micros() as u64);
        }
        out
    }
}

fn run_knot(args: &KnotArgs) -> Result<(), CliError> {
    let knot = AlgebraicKnot::from_newton_pairs(&parse_newton(&args.newton)?)?;
    let report = KnotReport::from(&knot);
    let text = match args.format {
        Format::Text => report::knot_text(&report),
        Format::Json => to_json(&report),
        Format::Svg => return Err(CliError::Input("knot has no SVG output".into())),
    };
    emit(args.out.as_deref(), &text)
}

fn build_spec(newton: &str, surgery: &str) -> Result<SurgerySpec, CliError> {
    let pairs = parse_newton(newton)?;
    let (p, q) = parse_fraction("--surgery", surgery)?;
    Ok(SurgerySpec::from_newton_pairs(&pairs, p, q)?)
}

fn compute_results(spec: &SurgerySpec, spinc: &[i64]) -> Result<Vec<SpincResult>, CliError> {
    if spinc.len() as i64 == spec.p() {
        Ok(spec.compute_all()?)
    } else {
        Ok(spinc
            .iter()
            .map(|&a| spec.compute_spinc(a))
            .collect::<Result<_, _>>()?)
    }
}

fn write_svgs(results: &[SpincResult], out: Option<&Path>) -> Result<(), CliError> {
    let svgs: Vec<(i64, String)> = results.iter().map(|r| (r.a, render_svg(&r.root))).collect();
    match (out, svgs.len()) {
        (Some(dir), n) if n > 1 => {
            std::fs::create_dir_all(dir)
                .map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
            for (a, svg) in &svgs {
                emit(Some(&dir.join(format!("spinc_{a}.svg"))), svg)?;
            }
            Ok(())
        }
        _ => emit(out, &svgs.into_iter().map(|(_, s)| s).collect::<String>()),
    }
}

fn run_compute(args: &ComputeArgs) -> Result<bool, CliError> {
    let mut timer = Timer::new(args.timings);
    let spec = build_spec(&args.newton, &args.surgery)?;
    let spinc = parse_spinc(&args.spinc, spec.p())?;
    log::info!("computing {} spin^c structures", spinc.len());
    let results = timer.time("compute", || compute_results(&spec, &spinc))?;
    if args.format == Format::Svg {
        write_svgs(&results, args.out.as_deref())?;
        return Ok(true);
    }
    let mut report = ComputeReport::new(&spec, &results);
    if args.oracle != Oracle::None {
        let v = timer.time("verify", || {
            verify_surgery(&spec, &results, args.oracle, args.max_steps)
        })?;
        report.verification = Some(v);
    }
    report.timings_us = timer.0;
    let agree = report.verification.as_ref().is_none_or(|v| v.agree);
    let text = match args.format {
        Format::Json => to_json(&report),
        _ => {
            let roots: Vec<String> = results.iter().map(|r| render_ascii(&r.root)).collect();
            report::compute_text(&report, &roots)
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(agree)
}

fn run_verify(args: &VerifyArgs) -> Result<bool, CliError> {
    if args.format == Format::Svg {
        return Err(CliError::Input("verify has no SVG output".into()));
    }
    if let Some(lens) = &args.lens {
        let mut timer = Timer::new(args.timings);
        let (p, q) = parse_fraction("--lens", lens)?;
        let mut report = timer.time("lens", || verify_lens(p, q))?;
        report.timings_us = timer.0;
        let text = match args.format {
            Format::Json => to_json(&report),
            _ => report::lens_text(&report),
        };
        emit(args.out.as_deref(), &text)?;
        return Ok(report.agree);
    }
    if args.oracle == Oracle::None {
        return Err(CliError::Input(
            "verify needs --oracle laufer, sublevel or both".into(),
        ));
    }
    let compute = ComputeArgs {
        newton: args.newton.clone().unwrap_or_default(),
        surgery: args.surgery.clone().unwrap_or_default(),
        spinc: args.spinc.clone(),
        format: args.format,
        oracle: args.oracle,
        max_steps: args.max_steps,
        out: args.out.clone(),
        timings: args.timings,
    };
    run_compute(&compute)
}

fn run_graph(args: &GraphArgs) -> Result<(), CliError> {
    let graph: PlumbingGraph = match (&args.input, &args.newton) {
        (Some(path), _) => {
            let text = if path.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())
                    .map_err(|e| CliError::Input(e.to_string()))?
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
            };
            graph_json::from_str(&text).map_err(CliError::Input)?
        }
        (None, Some(newton)) => match &args.surgery {
            Some(surgery) => SurgeryLattice::new(&build_spec(newton, surgery)?)?
                .graph()
                .clone(),
            None => {
                embedded_resolution(&AlgebraicKnot::from_newton_pairs(&parse_newton(newton)?)?)?
            }
        },
        (None, None) => return Err(CliError::Input("give --input or --newton".into())),
    };
    let text = match args.format {
        Format::Json => {
            let mut s = graph_json::to_string(&graph);
            s.push('\n');
            s
        }
        Format::Text => report::graph_text(&GraphReport::new(&graph)),
        Format::Svg => return Err(CliError::Input("graph has no SVG output".into())),
    };
    emit(args.out.as_deref(), &text)
}

/// Runs a parsed command. `Ok(false)` means an oracle disagreed.
pub fn run(cli: &Cli) -> Result<bool, CliError> {
    match &cli.command {
        Command::Knot(a) => run_knot(a).map(|_| true),
        Command::Compute(a) => run_compute(a),
        Command::Verify(a) => run_verify(a),
        Command::Graph(a) => run_graph(a).map(|_| true),
    }
}
