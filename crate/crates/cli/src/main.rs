use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kmoduli_core::cqsing::SingularityError;
use kmoduli_core::quotsurf::Family;
use kmoduli_core::torusgit::{GitError, DEFAULT_MONOMIAL_BUDGET};

mod report;

#[derive(Parser, Debug)]
#[command(
    name = "kmoduli",
    version,
    about = "Local K-moduli of toric del Pezzo quotient surfaces"
)]
struct Cli {
    #[command(flatten)]
    config: ReportConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct ReportConfig {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Print only the discrepancy convention, not the log discrepancies.
    #[arg(long = "no-convention-note", action = clap::ArgAction::SetFalse, global = true)]
    pub convention_note: bool,
    /// Maximum number of exponent vectors the monomial oracle may visit.
    #[arg(long, default_value_t = DEFAULT_MONOMIAL_BUDGET, global = true)]
    pub budget: u128,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyse a cyclic quotient singularity given as 1/n(a,b).
    Sing {
        /// e.g. "1/9(1,2)"
        singularity: String,
    },
    /// Local moduli report for X_l or Y_l.
    Surface {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        l: u64,
    },
    /// Affine GIT quotient of a diagonal torus action.
    Git {
        /// Comma-separated weights; separate torus rows with ';'.
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        /// 1-based indices of the nonzero coordinates.
        #[arg(long)]
        support: Option<String>,
        /// Also count invariant monomials up to this total degree.
        #[arg(long)]
        oracle_cap: Option<u32>,
    },
    /// One row per valid l in [l-min, l-max].
    Table {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        l_min: u64,
        #[arg(long)]
        l_max: u64,
    },
    /// Smallest l whose moduli dimension reaches the target.
    Witness {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        target_dim: u64,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn run(cli: &Cli) -> anyhow::Result<String> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Sing { singularity } => report::sing(singularity, cfg),
        Command::Surface { family, l } => report::surface(*family, *l, cfg),
        Command::Git {
            weights,
            support,
            oracle_cap,
        } => report::git(weights, support.as_deref(), *oracle_cap, cfg),
        Command::Table {
            family,
            l_min,
            l_max,
        } => report::table(*family, *l_min, *l_max, cfg),
        Command::Witness { family, target_dim } => report::witness(*family, *target_dim, cfg),
    }
}

fn is_usage_error(e: &anyhow::Error) -> bool {
    matches!(
        e.downcast_ref::<SingularityError>(),
        Some(SingularityError::Parse { .. })
    ) || matches!(
        e.downcast_ref::<GitError>(),
        Some(
            GitError::Parse { .. }
                | GitError::ParseSupport { .. }
                | GitError::SupportOutOfRange { .. }
        )
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) if is_usage_error(&e) => {
            eprintln!("error: {e:#}");
            eprintln!("usage: kmoduli {} --help", subcommand_name(&cli.command));
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Sing { .. } => "sing",
        Command::Surface { .. } => "surface",
        Command::Git { .. } => "git",
        Command::Table { .. } => "table",
        Command::Witness { .. } => "witness",
    }
}
