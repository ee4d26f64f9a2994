//! `motivic`: realize motive expressions and run the verification suites.

mod commands;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "motivic",
    version,
    about = "Exact realizations of motives of moduli of bundles on curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Pretty,
}

#[derive(Args, Debug, Clone)]
pub struct CurveArgs {
    /// Genus of the curve (Poincaré realization, or as a check against --curve)
    #[arg(long)]
    pub genus: Option<u32>,
    /// TOML curve specification
    #[arg(long, value_name = "FILE")]
    pub curve: Option<PathBuf>,
    /// Field size; without --curve the curve is P¹ over F_q
    #[arg(long)]
    pub q: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Realize a motive expression
    Realize {
        expr: String,
        /// Poincaré series in z (the default)
        #[arg(long, conflicts_with = "count")]
        poincare: bool,
        /// Finite-field point count
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        curve: CurveArgs,
        /// Truncation order of Poincaré series
        #[arg(short = 'N', default_value_t = 10)]
        order: usize,
        /// Budget for the Adams depth requested by nested Sym nodes
        #[arg(long, value_name = "R")]
        depth: Option<usize>,
        /// Count as partial sums of this length with a certified error radius
        #[arg(long, value_name = "J", requires = "count")]
        truncate: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the colimit and closed-formula Poincaré series of Bun_{n,d}
    VerifyBun {
        #[arg(short = 'n', long = "rank")]
        n: u32,
        #[arg(
            short = 'd',
            long = "degree",
            default_value_t = 0,
            allow_negative_numbers = true
        )]
        d: i64,
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(short = 'N', default_value_t = 10)]
        order: usize,
        /// Corrupt the closed formula (negative control)
        #[arg(long, hide = true)]
        mutate: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the count realization of M^c(Bun_n) with the stacky point count
    VerifyCount {
        #[arg(short = 'n', long = "rank")]
        n: u32,
        #[command(flatten)]
        curve: CurveArgs,
        /// Tail tolerance of the splitting-type oracle on P¹ (e.g. 1e-9 or 1/1000)
        #[arg(long, default_value = "1e-9")]
        tail_eps: String,
        /// Corrupt one zeta factor (negative control)
        #[arg(long, hide = true)]
        mutate: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Point counts, closed-point census, Weil numerator and divisor counts of a curve
    Census {
        #[command(flatten)]
        curve: CurveArgs,
        /// Largest extension degree r to report p_r and a_r for
        #[arg(short = 'R', default_value_t = 4)]
        max_degree: u32,
        /// Largest divisor degree j
        #[arg(short = 'N', default_value_t = 4)]
        order: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Realize {
            expr,
            poincare: _,
            count,
            curve,
            order,
            depth,
            truncate,
            output,
        } => commands::realize(&expr, count, &curve, order, depth, truncate, output.format),
        Command::VerifyBun {
            n,
            d,
            curve,
            order,
            mutate,
            output,
        } => commands::verify_bun(n, d, &curve, order, mutate, output.format),
        Command::VerifyCount {
            n,
            curve,
            tail_eps,
            mutate,
            output,
        } => commands::verify_count(n, &curve, &tail_eps, mutate, output.format),
        Command::Census {
            curve,
            max_degree,
            order,
            output,
        } => commands::census(&curve, max_degree, order, output.format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
