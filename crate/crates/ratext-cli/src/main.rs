//! `ratext` command-line front end.
//!
//! Exit status: 0 on success, 1 when a certification fails, 2 on usage or
//! parameter errors.

mod commands;
mod report;

use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ratext::seedcat::{Family, RayIds, SeedType};
use ratext::Rational;

#[derive(Parser, Debug)]
#[command(name = "ratext", version, about = "Rational extensions of Pöschl–Teller and isotonic potentials")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Override the acceptance tolerance of the command.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Accept seeds outside the SUSY-valid range.
    #[arg(long, global = true)]
    pub permissive: bool,
    /// Worker threads for parameter sweeps.
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Dpt,
    Hpt,
    Isotonic,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Dpt => Family::Dpt,
            FamilyArg::Hpt => Family::Hpt,
            FamilyArg::Isotonic => Family::Isotonic,
        }
    }
}

/// Exact rational from "p/q" or an integer.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|_| format!("expected an exact rational like 5/2, got {s:?}"))
}

#[derive(Args, Debug, Clone)]
pub struct RayArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, value_parser = parse_rational)]
    pub lambda0: Rational,
    /// `mu0` of the Pöschl–Teller wells.
    #[arg(long, value_parser = parse_rational)]
    pub mu0: Option<Rational>,
}

impl RayArgs {
    pub fn ray(&self) -> Result<RayIds> {
        let family: Family = self.family.into();
        match family {
            Family::Isotonic => Ok(RayIds::isotonic(self.lambda0.clone())),
            f => {
                let mu0 = self.mu0.clone().ok_or_else(|| anyhow!("--mu0 is required for {}", f.name()))?;
                Ok(RayIds::new(f, self.lambda0.clone(), mu0))
            }
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct SeedArgs {
    #[command(flatten)]
    pub ray: RayArgs,
    /// Seed type: a, b, c, d, or ta, ta', tb, tb', tc, td, td' for the hyperbolic well.
    #[arg(long = "type")]
    pub stype: String,
    #[arg(long)]
    pub m: u32,
}

pub fn parse_type(s: &str) -> Result<SeedType> {
    SeedType::parse(s).ok_or_else(|| anyhow!("unknown seed type {s:?}"))
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate seed solutions with their admissibility.
    Seeds {
        #[command(flatten)]
        ray: RayArgs,
        #[arg(long, default_value_t = 4)]
        max_m: u32,
    },
    /// Darboux partner potential, decompositions and the B16 verdict.
    Extend {
        #[command(flatten)]
        seed: SeedArgs,
        /// Emit `n` samples of (x, V(x)) instead of the algebraic record.
        #[arg(long)]
        plot: Option<usize>,
    },
    /// Gauss-seed Heine polynomial generated from a target level.
    Xop {
        #[command(flatten)]
        seed: SeedArgs,
        /// Order of the target classical polynomial.
        #[arg(long)]
        level: u32,
        /// Target class (default: c, or tc for the hyperbolic well).
        #[arg(long)]
        target: Option<String>,
        /// Emit `n` samples of (xi, polynomial value) on the quantization interval.
        #[arg(long)]
        plot: Option<usize>,
    },
    /// The four Heun sequences for partner exponents (lambda, mu).
    Heun {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        lambda: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        mu: Rational,
        #[arg(long, default_value_t = 4)]
        max_order: u32,
    },
    /// Zero census of P_m^(lambda, mu), analytic against Sturm; `--grid` runs
    /// the half-integer grid for m <= max-m.
    Census {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        lambda: Option<Rational>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        mu: Option<Rational>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        grid: bool,
        #[arg(long, default_value_t = 6)]
        max_m: u32,
    },
    /// Numeric and exact certification reports.
    Verify {
        #[command(subcommand)]
        claim: VerifyClaim,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyClaim {
    /// Off-diagonal weighted inner products of a Heine family.
    Orthogonality {
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = 6)]
        levels: u32,
    },
    /// Finite-difference spectra of the well and its partner.
    Spectrum {
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long)]
        levels: Option<usize>,
        /// Interior points of the coarse grid.
        #[arg(long, default_value_t = 20000)]
        grid: usize,
    },
    /// Exact Heine-operator residuals of every member up to `levels`.
    Residual {
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long, default_value_t = 5)]
        levels: u32,
    },
    /// Confluent limit of the DPT energy shifts.
    Limit {
        #[arg(long, value_parser = parse_rational)]
        lambda0: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        nu0: Rational,
        #[arg(long = "type")]
        stype: String,
        #[arg(long)]
        m: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format == Format::Csv));
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
