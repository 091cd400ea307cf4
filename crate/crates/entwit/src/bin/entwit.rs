//! Command-line driver for the witness toolkit.
//!
//! Exit codes: 0 on success, 2 on invalid configuration, 3 on numerical
//! failure (truncation tolerance unsatisfiable under the memory cap, or a
//! failed property suite).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use entwit::criteria::evaluate_general;
use entwit::error::Error;
use entwit::sweep::{
    self, CutoffPolicy, GridSpec, KerrConfig, RegionConfig, ScalingConfig,
};
use entwit::witness_config::parse_witness_config;

#[derive(Parser)]
#[command(
    name = "entwit",
    about = "Correlation-based entanglement witnesses: studies and sweeps",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug)]
enum Cutoff {
    Auto,
    Fixed(usize),
}

impl std::str::FromStr for Cutoff {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            return Ok(Cutoff::Auto);
        }
        s.parse::<usize>()
            .map(Cutoff::Fixed)
            .map_err(|_| format!("cutoff must be a nonnegative integer or 'auto', got {s}"))
    }
}

impl From<Cutoff> for CutoffPolicy {
    fn from(c: Cutoff) -> Self {
        match c {
            Cutoff::Auto => CutoffPolicy::Auto,
            Cutoff::Fixed(n) => CutoffPolicy::Fixed(n),
        }
    }
}

/// `name=start:stop:count` grid override.
#[derive(Clone, Debug)]
struct GridArg {
    name: String,
    spec: GridSpec,
}

impl std::str::FromStr for GridArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (name, rest) = s
            .split_once('=')
            .ok_or_else(|| format!("expected name=start:stop:count, got {s}"))?;
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected start:stop:count after '=', got {rest}"));
        }
        let start: f64 = parts[0].parse().map_err(|_| format!("bad start {}", parts[0]))?;
        let stop: f64 = parts[1].parse().map_err(|_| format!("bad stop {}", parts[1]))?;
        let count: usize = parts[2].parse().map_err(|_| format!("bad count {}", parts[2]))?;
        let spec = GridSpec::new(start, stop, count).map_err(|e| e.to_string())?;
        Ok(GridArg {
            name: name.to_string(),
            spec,
        })
    }
}

#[derive(Args, Clone, Debug)]
struct CommonOpts {
    /// CSV output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker threads for grid evaluation.
    #[arg(long, default_value = "auto")]
    threads: String,
}

#[derive(Subcommand)]
enum Command {
    /// Witness table for both Bell states under both ladder pairings.
    Bell {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Criteria thresholds across the Werner family.
    Werner {
        #[command(flatten)]
        common: CommonOpts,
        /// Bell family the CSV is emitted for (thresholds always cover both).
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        family: u8,
        /// Override the mixing-probability grid, e.g. p=0:1:101.
        #[arg(long)]
        grid: Vec<GridArg>,
    },
    /// Detection regions over (mixing probability, squeezing).
    Region {
        #[command(flatten)]
        common: CommonOpts,
        /// Fock cutoff per mode, or auto for the smallest adequate cutoff.
        #[arg(long, default_value = "30")]
        cutoff: Cutoff,
        #[arg(long, default_value_t = 1e-10)]
        tail_tol: f64,
        /// Grid overrides: p=start:stop:count and/or r=start:stop:count.
        #[arg(long)]
        grid: Vec<GridArg>,
    },
    /// Cross-Kerr evolution of two coherent modes over time.
    Kerr {
        #[command(flatten)]
        common: CommonOpts,
        /// Coherent amplitude of mode a (real, nonnegative).
        #[arg(long)]
        alpha: f64,
        /// Coherent amplitude of mode b (real, nonnegative).
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value = "auto")]
        cutoff: Cutoff,
        #[arg(long, default_value_t = 1e-10)]
        tail_tol: f64,
        #[arg(long, default_value_t = 64)]
        theta_points: usize,
        /// Grid override: t=start:stop:count.
        #[arg(long)]
        grid: Vec<GridArg>,
    },
    /// Scaling of characteristic detection times with the amplitude.
    Scaling {
        #[command(flatten)]
        common: CommonOpts,
        /// Comma-separated amplitudes.
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5")]
        alphas: Vec<f64>,
        #[arg(long, default_value_t = 1e-10)]
        tail_tol: f64,
        #[arg(long, default_value_t = 64)]
        theta_points: usize,
    },
    /// Evaluate one witness described by a key-value config file.
    Witness {
        /// Path to the key = value configuration.
        config: PathBuf,
    },
    /// Seeded randomized property suite.
    Selftest {
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

fn build_thread_pool(threads: &str) -> Result<(), Error> {
    if threads == "auto" {
        return Ok(());
    }
    let n: usize = threads
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("--threads must be a count or auto, got {threads}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}

fn emit(out: &Option<PathBuf>, csv: String) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, csv)
            .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn grid_for(grids: &[GridArg], name: &str) -> Result<Option<GridSpec>, Error> {
    let mut found = None;
    for g in grids {
        if g.name == name {
            found = Some(g.spec);
        } else if !["p", "r", "t", "alpha"].contains(&g.name.as_str()) {
            return Err(Error::InvalidParameter(format!(
                "unknown grid name {}",
                g.name
            )));
        }
    }
    Ok(found)
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Bell { common } => {
            build_thread_pool(&common.threads)?;
            let records = sweep::run_bell_study()?;
            emit(&common.out, sweep::render_bell_csv(&records))
        }
        Command::Werner {
            common,
            family,
            grid,
        } => {
            build_thread_pool(&common.threads)?;
            let points = grid_for(&grid, "p")?.map_or(101, |g| g.count);
            let study = sweep::run_werner_study(points)?;
            eprintln!(
                "thresholds: tw(bell1,sigma+)={:.10} tw(bell2,sigma-)={:.10} hz={:.10} ppt={:.10}",
                study.thresholds.tw_psi_plus,
                study.thresholds.tw_phi_plus,
                study.thresholds.hz_psi_plus,
                study.thresholds.ppt
            );
            let records = if family == 1 {
                &study.psi_plus
            } else {
                &study.phi_plus
            };
            emit(&common.out, sweep::render_werner_csv(records))
        }
        Command::Region {
            common,
            cutoff,
            tail_tol,
            grid,
        } => {
            build_thread_pool(&common.threads)?;
            let defaults = RegionConfig::default();
            let cfg = RegionConfig {
                p_grid: grid_for(&grid, "p")?.unwrap_or(defaults.p_grid),
                r_grid: grid_for(&grid, "r")?.unwrap_or(defaults.r_grid),
                cutoff: cutoff.into(),
                tail_tol,
            };
            let records = sweep::run_region_sweep(&cfg)?;
            emit(&common.out, sweep::render_region_csv(&records))
        }
        Command::Kerr {
            common,
            alpha,
            beta,
            cutoff,
            tail_tol,
            theta_points,
            grid,
        } => {
            build_thread_pool(&common.threads)?;
            if alpha < 0.0 || beta < 0.0 {
                return Err(Error::InvalidParameter(
                    "--alpha and --beta must be nonnegative".into(),
                ));
            }
            if theta_points == 0 {
                return Err(Error::InvalidParameter(
                    "--theta-points must be positive".into(),
                ));
            }
            let mut cfg = KerrConfig::new(alpha, beta);
            cfg.cutoff = cutoff.into();
            cfg.tail_tol = tail_tol;
            cfg.theta_points = theta_points;
            if let Some(t) = grid_for(&grid, "t")? {
                cfg.t_grid = t;
            }
            let records = sweep::run_kerr_time_sweep(&cfg)?;
            emit(&common.out, sweep::render_kerr_csv(&records))
        }
        Command::Scaling {
            common,
            alphas,
            tail_tol,
            theta_points,
        } => {
            build_thread_pool(&common.threads)?;
            let cfg = ScalingConfig {
                alphas,
                theta_points,
                tail_tol,
                ..ScalingConfig::default()
            };
            let study = sweep::run_scaling_sweep(&cfg)?;
            match study.dgcz_slope {
                Some(s) => eprintln!(
                    "log-log slopes: tw={:.4} dgcz={:.4}",
                    study.tw_slope, s
                ),
                None => eprintln!(
                    "log-log slopes: tw={:.4} dgcz=absent (no zero crossing found)",
                    study.tw_slope
                ),
            }
            emit(&common.out, sweep::render_scaling_csv(&study.records))
        }
        Command::Witness { config } => {
            let text = std::fs::read_to_string(&config).map_err(|e| {
                Error::InvalidParameter(format!("cannot read {}: {e}", config.display()))
            })?;
            let run = parse_witness_config(&text)?;
            let result = evaluate_general(&run.spec, &run.state)?;
            println!("state          = {}", run.state_name);
            println!("cutoff         = {}", run.cutoff);
            println!("s_term         = {}", sweep::fmt_sci(result.s_term));
            println!(
                "trace_term     = {} {}i",
                sweep::fmt_sci(result.trace_term.re),
                sweep::fmt_sci(result.trace_term.im)
            );
            println!("phi            = {}", sweep::fmt_sci(result.phi_used));
            println!("value          = {}", sweep::fmt_sci(result.value));
            println!("entangled      = {}", result.entangled);
            Ok(())
        }
        Command::Selftest { seed } => {
            let outcomes = entwit::selftest::run_all(seed)?;
            let mut all_passed = true;
            for o in &outcomes {
                println!("{o}");
                all_passed &= o.passed;
            }
            if !all_passed {
                return Err(Error::EigenFailure(
                    "property suite reported a failure".into(),
                ));
            }
            Ok(())
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Truncation { .. }
        | Error::MemoryCap { .. }
        | Error::EigenFailure(_)
        | Error::NormViolation { .. }
        | Error::NotHermitian { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
