//! Batch front door: ring construction from text specs, the five
//! computation commands, and machine-readable output.
//!
//! Exit codes: 0 success, 2 parameter error, 3 mathematical-consistency
//! failure, 4 precision/certification failure.

mod parse;
mod render;

use clap::{Parser, Subcommand, ValueEnum};
use cuspidal_core::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "cuspidal",
    about = "Exact boundary invariants of Drinfeld modular varieties: \
             partial zeta functions, cuspidal divisor matrices, \
             independence certificates, and discriminant expansions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Seed for randomized property sampling
    #[arg(long, global = true, default_value = "24036583")]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Zeta functions of a ring: Z_K, Z_A, class zetas, optional coset
    /// zeta, and special values at s = 1 - r
    Zeta {
        /// Ring spec, e.g. "poly q=2", "shifted q=2 g=T^2+T+1",
        /// "elliptic q=2 a=[0,0,1,0,0]"
        #[arg(long)]
        ring: String,
        /// Rank r >= 2 for the special values
        #[arg(long, default_value = "2")]
        r: i64,
        /// Optional ideal a for a coset zeta
        #[arg(long)]
        ideal: Option<String>,
        /// Optional coset representative x (with --ideal): Z_{x,a}
        #[arg(long)]
        coset_x: Option<String>,
    },
    /// Vanishing orders of discriminant and division forms
    Orders {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value = "2")]
        r: i64,
        /// The ideal n indexing the discriminant form
        #[arg(long)]
        ideal: String,
        /// Optional twist ideal b
        #[arg(long)]
        twist: Option<String>,
        /// Division-form mode: first coordinate u1 (an element of
        /// n^-1 a); reports ord of E_{1,u} instead
        #[arg(long)]
        u1: Option<String>,
        /// Base ideal a for division-form mode (default A)
        #[arg(long)]
        base: Option<String>,
    },
    /// The cuspidal divisor matrix with determinant and Frobenius
    /// cross-check, or the independence matrix certificate
    Matrix {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value = "2")]
        r: i64,
        /// Independence-matrix mode: check the lattice-sum matrix over
        /// the completion instead of the divisor matrix
        #[arg(long)]
        mmatrix: bool,
        /// Weight for the independence matrix (default q - 1)
        #[arg(long)]
        weight: Option<i64>,
        /// Working precision override
        #[arg(long)]
        prec: Option<i64>,
        /// Degree bound override for the defining sums
        #[arg(long)]
        level: Option<i64>,
    },
    /// Boundary expansions of the discriminant by both routes, with the
    /// comparison verdict
    Expand {
        /// Ring spec; must be a polynomial ring (rank-2 expansions)
        #[arg(long, default_value = "poly q=2")]
        ring: String,
        /// Series precision (default q^3 + 1)
        #[arg(long)]
        prec: Option<i64>,
    },
    /// Run every property suite from all modules
    Selftest {
        /// Restrict to suites whose name contains this substring
        #[arg(long)]
        only: Option<String>,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parameter(_) | Error::Division(_) => 2,
        Error::Consistency(_) => 3,
        Error::Precision(_) => 4,
    }
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Zeta {
            ring,
            r,
            ideal,
            coset_x,
        } => render::cmd_zeta(ring, *r, ideal.as_deref(), coset_x.as_deref(), cli.format),
        Command::Orders {
            ring,
            r,
            ideal,
            twist,
            u1,
            base,
        } => render::cmd_orders(
            ring,
            *r,
            ideal,
            twist.as_deref(),
            u1.as_deref(),
            base.as_deref(),
            cli.format,
        ),
        Command::Matrix {
            ring,
            r,
            mmatrix,
            weight,
            prec,
            level,
        } => render::cmd_matrix(ring, *r, *mmatrix, *weight, *prec, *level, cli.format),
        Command::Expand { ring, prec } => render::cmd_expand(ring, *prec, cli.format),
        Command::Selftest { only } => render::cmd_selftest(cli.seed, only.as_deref(), cli.format),
    };
    match result {
        Ok(output) => {
            println!("{output}");
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(exit_code(&e));
        }
    }
}
