use clap::{Args, Parser, Subcommand, ValueEnum};
use degbern_core::rational::parse_rational;
use num_rational::BigRational;

#[derive(Debug, Parser)]
#[command(
    name = "degbern",
    version,
    about = "Expand polynomials in degenerate Bernoulli bases over Q[l]"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a polynomial expression in the order-r degenerate Bernoulli basis
    Expand(ExpandArgs),
    /// Check identities from the built-in corpus
    Verify(VerifyArgs),
    /// Print a table of a special family
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

fn rational_arg(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// Polynomial in x and l, e.g. "x^2 - 1/2*x" or "B(3)*E(2)"
    #[arg(long, short = 'e')]
    pub expr: String,
    /// Order r of the basis
    #[arg(long, short = 'r', default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub order: u32,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Recompute the coefficients along every route and fail on disagreement
    #[arg(long)]
    pub crosscheck: bool,
    /// Also print the coefficients at this value of λ
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub lambda: Option<BigRational>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity ids (also accepted positionally; `all` selects every identity)
    #[arg(long = "id")]
    pub id: Vec<String>,
    #[arg(value_name = "ID")]
    pub ids: Vec<String>,
    /// Every identity (the default when no id is given)
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub n_max: Option<u32>,
    #[arg(long)]
    pub r_max: Option<u32>,
    #[arg(long)]
    pub a_max: Option<u32>,
    /// Check a single case instead of a sweep
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub a: Option<u32>,
    /// Add this constant to every right-hand side (harness self-test)
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub perturb: Option<BigRational>,
    /// List identity ids and exit
    #[arg(long)]
    pub list: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Bernoulli numbers B_n
    Bernoulli,
    /// Euler numbers E_n = E_n(0)
    Euler,
    /// Genocchi numbers G_n
    Genocchi,
    BernoulliPoly,
    EulerPoly,
    GenocchiPoly,
    /// Degenerate falling factorials (x)_{n,λ}
    DegFalling,
    /// Degenerate Bernoulli polynomials of the given order
    DegBernoulli,
    /// Stirling numbers of the second kind, one row per n
    Stirling2,
    /// Harmonic numbers, from n = 1
    Harmonic,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long = "family", value_enum, conflicts_with = "family_pos")]
    pub family: Option<Family>,
    #[arg(value_enum, value_name = "FAMILY")]
    pub family_pos: Option<Family>,
    #[arg(long = "n-max", conflicts_with = "n_max_pos")]
    pub n_max: Option<u32>,
    #[arg(value_name = "N_MAX")]
    pub n_max_pos: Option<u32>,
    /// Order for bernoulli-poly and deg-bernoulli
    #[arg(long, short = 'r', default_value_t = 1)]
    pub order: u32,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}
