//! `pontrjagin`: file-based front end with deterministic JSON output.

mod assoc;
mod bundle;
mod complex;
mod io;
mod matroid;
mod pont;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pontrjagin::chern::invert_pontrjagin_series;
use serde_json::{json, Map, Value};

use io::CliError;

#[derive(Parser)]
#[command(name = "pontrjagin", version, about = "Exact combinatorial Pontrjagin cycles")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

/// Flags accepted by every subcommand.
#[derive(Args, Clone, Debug)]
pub struct Global {
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Enumeration / simplex budget for commands that enumerate.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Fail on inconsistent lifts when computing Ω (default).
    #[arg(long, global = true, conflicts_with = "diagnostic")]
    pub strict: bool,
    /// Report inconsistent lifts instead of failing.
    #[arg(long, global = true)]
    pub diagnostic: bool,
    /// Reserved: coefficients modulo a prime.
    #[arg(long = "mod-p", global = true)]
    pub mod_p: Option<u64>,
}

impl Global {
    pub fn strict(&self) -> bool {
        !self.diagnostic
    }
}

#[derive(Subcommand)]
enum Command {
    /// Oriented matroids.
    #[command(subcommand)]
    Matroid(matroid::MatroidCmd),
    /// Simplicial complexes and their homology.
    #[command(subcommand)]
    Complex(complex::ComplexCmd),
    /// Associated complexes of a triangulation.
    #[command(subcommand)]
    Assoc(assoc::AssocCmd),
    /// Simplicial circle bundles and their Chern cocycles.
    #[command(subcommand)]
    Bundle(bundle::BundleCmd),
    /// Fixing cycles and Pontrjagin cycles.
    #[command(subcommand)]
    Pont(pont::PontCmd),
    /// Formal series of Pontrjagin classes.
    #[command(subcommand)]
    Series(SeriesCmd),
}

#[derive(Subcommand)]
enum SeriesCmd {
    /// Express the dual classes p̃_k as polynomials in the p_j.
    Invert {
        #[arg(long)]
        degree: usize,
    },
}

fn series(cmd: &SeriesCmd) -> Result<Value, CliError> {
    let SeriesCmd::Invert { degree } = cmd;
    let s = invert_pontrjagin_series(*degree)?;
    let mut out = Map::new();
    for (k, c) in s.components.iter().enumerate() {
        out.insert(format!("ptilde{}", k + 1), json!(c.to_string()));
    }
    Ok(Value::Object(out))
}

fn run(cli: &Cli) -> Result<Value, CliError> {
    if cli.global.mod_p.is_some() {
        return Err(CliError::new("Unimplemented", "--mod-p is reserved and not implemented"));
    }
    let g = &cli.global;
    match &cli.command {
        Command::Matroid(c) => matroid::run(c, g),
        Command::Complex(c) => complex::run(c, g),
        Command::Assoc(c) => assoc::run(c, g),
        Command::Bundle(c) => bundle::run(c, g),
        Command::Pont(c) => pont::run(c, g),
        Command::Series(c) => series(c),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, code) = match run(&cli) {
        Ok(v) => (v, ExitCode::SUCCESS),
        Err(e) => (e.to_json(), ExitCode::from(1)),
    };
    if let Err(e) = io::emit(&value, cli.global.output.as_deref()) {
        eprintln!("{}", e.message);
        return ExitCode::from(1);
    }
    code
}
