//! The `qlt` command-line front end.
//!
//! Exit codes: 0 success, 1 I/O or internal audit failure, 2 configuration
//! error, 3 resource guard, 4 degenerate signal, 5 unsupported operation
//! (e.g. no closed-form transform for a tabulated signal).

mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::qlt::{
    convergence_study, gate_count_audit, run_qlt, verify_against_classical, SelectVariant,
};
use crate::QltError;

pub use config::{
    doubling_schedule, parse_schedule, ApSection, GridSection, OutputFormat, RunConfig, RunSection,
    SignalSection,
};
pub use output::{Cell, Table};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Qlt(#[from] QltError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("audit failed: {0}")]
    Audit(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Config(_) => 2,
            Self::Qlt(QltError::Domain(_) | QltError::Shape(_)) => 2,
            Self::Qlt(QltError::Resource(_)) => 3,
            Self::Qlt(QltError::Degenerate(_)) => 4,
            Self::Qlt(QltError::Unsupported(_)) => 5,
            Self::Io(_) | Self::Audit(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "qlt", version, about = "Quantum Laplace transform experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simulate the QLT circuit and emit rescaled transform values per node.
    Transform(CommonArgs),
    /// Compare circuit output with the classical double sum and closed form.
    Compare(CommonArgs),
    /// Error of the classical sum against the closed form along a doubling schedule.
    Converge {
        #[command(flatten)]
        common: CommonArgs,
        /// Doubling range of M_k = M_t, e.g. 4:256.
        #[arg(long)]
        schedule: Option<String>,
    },
    /// SELECT gate counts for d = d' = n_sys = m.
    Gatecount {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        m_max: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long)]
    pub variant: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
}

impl CommonArgs {
    /// Config file (or defaults) with command-line overrides applied.
    pub fn resolve(&self) -> Result<RunConfig, CliError> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        if let Some(out) = &self.out {
            cfg.run.out = Some(out.clone());
        }
        if let Some(format) = &self.format {
            cfg.run.format = format.parse()?;
        }
        if let Some(variant) = &self.variant {
            cfg.run.variant = variant.parse::<SelectVariant>()?;
        }
        if let Some(seed) = self.seed {
            cfg.run.seed = seed;
        }
        Ok(cfg)
    }
}

fn complex_cells(z: num_complex::Complex64) -> [Cell; 2] {
    [z.re.into(), z.im.into()]
}

pub fn cmd_transform(cfg: &RunConfig) -> Result<Table, CliError> {
    let result = run_qlt(&cfg.qlt_config()?)?;
    let mut table = Table::new(vec![
        "s_real",
        "s_imag",
        "value_real",
        "value_imag",
        "raw_real",
        "raw_imag",
        "rescale_factor",
    ]);
    for ((s, v), raw) in result.nodes.iter().zip(&result.values).zip(&result.raw_amplitudes) {
        let mut row = Vec::with_capacity(7);
        row.extend(complex_cells(*s));
        row.extend(complex_cells(*v));
        row.extend(complex_cells(*raw));
        row.push(result.rescale_factor.into());
        table.push(row);
    }
    Ok(table)
}

pub fn cmd_compare(cfg: &RunConfig) -> Result<Table, CliError> {
    let report = verify_against_classical(&cfg.qlt_config()?)?;
    let mut table = Table::new(vec![
        "s_real",
        "s_imag",
        "circuit_real",
        "circuit_imag",
        "classical_real",
        "classical_imag",
        "analytic_real",
        "analytic_imag",
        "abs_diff",
        "max_abs_diff",
    ]);
    for node in &report.nodes {
        let mut row = Vec::with_capacity(10);
        row.extend(complex_cells(node.s));
        row.extend(complex_cells(node.circuit));
        row.extend(complex_cells(node.classical));
        row.push(node.analytic.map(|z| z.re).into());
        row.push(node.analytic.map(|z| z.im).into());
        row.push(node.abs_diff.into());
        row.push(report.max_abs_diff.into());
        table.push(row);
    }
    Ok(table)
}

pub fn cmd_converge(cfg: &RunConfig) -> Result<Table, CliError> {
    let ap = cfg.ap_spec()?;
    let signal = cfg.signal(cfg.grid.m_t);
    let points = convergence_study(
        &ap,
        cfg.grid.k_max,
        cfg.grid.t_max,
        cfg.grid.beta,
        &signal,
        &cfg.run.schedule,
    )?;
    let mut table = Table::new(vec!["log2_mk", "total_abs_error"]);
    for p in points {
        table.push(vec![p.log2_mk.into(), p.total_abs_error.into()]);
    }
    Ok(table)
}

pub fn cmd_gatecount(cfg: &RunConfig) -> Result<Table, CliError> {
    let rows = gate_count_audit(cfg.run.m_max)?;
    let mut table = Table::new(vec![
        "m",
        "full_count",
        "reduced_count",
        "predicted_full",
        "ratio_full_over_m3",
    ]);
    for r in rows {
        if r.full_count != r.predicted_full {
            return Err(CliError::Audit(format!(
                "m = {}: constructed full SELECT has {} gates, formula gives {}",
                r.m, r.full_count, r.predicted_full
            )));
        }
        table.push(vec![
            r.m.into(),
            r.full_count.into(),
            r.reduced_count.into(),
            r.predicted_full.into(),
            r.ratio_full_over_m3.into(),
        ]);
    }
    Ok(table)
}

/// Run a parsed command line, returning the table that was written.
pub fn execute(cli: Cli) -> Result<Table, CliError> {
    let (cfg, table) = match cli.command {
        Command::Transform(args) => {
            let cfg = args.resolve()?;
            let t = cmd_transform(&cfg)?;
            (cfg, t)
        }
        Command::Compare(args) => {
            let cfg = args.resolve()?;
            let t = cmd_compare(&cfg)?;
            (cfg, t)
        }
        Command::Converge { common, schedule } => {
            let mut cfg = common.resolve()?;
            if let Some(s) = schedule {
                cfg.run.schedule = parse_schedule(&s)?;
            }
            let t = cmd_converge(&cfg)?;
            (cfg, t)
        }
        Command::Gatecount { common, m_max } => {
            let mut cfg = common.resolve()?;
            if let Some(m) = m_max {
                cfg.run.m_max = m;
            }
            let t = cmd_gatecount(&cfg)?;
            (cfg, t)
        }
    };
    match &cfg.run.out {
        Some(path) => {
            let file = std::fs::File::create(path)?;
            table.write(cfg.run.format, std::io::BufWriter::new(file))?;
        }
        None => table.write(cfg.run.format, std::io::stdout().lock())?,
    }
    Ok(table)
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(_) => ExitCode::SUCCESS,
        // reader went away (e.g. `| head`); nothing left to report
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qlt: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
