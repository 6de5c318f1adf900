use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, ValueEnum};
use evohandoff_core::experiment::{compare, load_config, write_outputs, ExperimentError, OutputFormat};
use evohandoff_core::netsim::VelocityMode;
use evohandoff_core::{ExperimentConfig, PolicyKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    Fls,
    Gfls,
    Flah,
    Gflah,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

/// Run seeded handoff experiments and compare policies.
#[derive(Debug, Parser)]
#[command(name = "evohandoff", version)]
struct Args {
    /// JSON experiment config; defaults apply to absent keys.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Policy to run.
    #[arg(long, value_enum, default_value = "all")]
    policy: PolicyArg,
    /// Run a single seed instead of the configured seed list.
    #[arg(long, conflicts_with = "runs")]
    seed: Option<u64>,
    /// Number of replicate runs, seeded 1..=N.
    #[arg(long)]
    runs: Option<usize>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format for the report and event logs.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Use v = sqrt(2at) for accelerated terminals.
    #[arg(long)]
    eq2_verbatim: bool,
    /// Suppress the summary table.
    #[arg(long, short)]
    quiet: bool,
}

fn build_config(args: &Args) -> Result<ExperimentConfig, ExperimentError> {
    let mut cfg = match &args.config {
        Some(path) => load_config(path)?,
        None => ExperimentConfig::default(),
    };
    match args.policy {
        PolicyArg::All => {}
        one => {
            let kind: PolicyKind = format!("{one:?}").parse().expect("policy names agree");
            cfg.policies = vec![kind];
        }
    }
    if let Some(seed) = args.seed {
        cfg.seeds = Some(vec![seed]);
        cfg.runs = None;
    }
    if let Some(runs) = args.runs {
        cfg.seeds = None;
        cfg.runs = Some(runs);
    }
    if let Some(out) = &args.out {
        cfg.output_dir = out.clone();
    }
    if let Some(format) = args.format {
        cfg.format = match format {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        };
    }
    if args.eq2_verbatim {
        cfg.world.velocity_mode = VelocityMode::Eq2Verbatim;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn execute(cfg: &ExperimentConfig, quiet: bool) -> anyhow::Result<()> {
    let started = Instant::now();
    let cmp = compare(cfg).context("experiment failed")?;
    let written = write_outputs(&cmp, &cfg.output_dir, cfg.format)
        .with_context(|| format!("writing outputs to {}", cfg.output_dir.display()))?;
    if !quiet {
        println!(
            "{} runs per policy, {} time units, {} terminals ({:.1}s)\n",
            cfg.run_count(),
            cfg.world.total_time,
            cfg.world.mt_count,
            started.elapsed().as_secs_f64()
        );
        print!("{}", cmp.report);
        println!("\nwrote {} files under {}", written.len(), cfg.output_dir.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = match build_config(&args) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match execute(&cfg, args.quiet) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
