//! Flag grammar: `bident verify <identity> [--n a..b] [--m a..b] [--r list]
//! [--x list] [--p list] [--trials N] [--seed S] [--mode M]
//! [--precision-bits B] [--format F] [--caps m:n]`.
//!
//! Rational literals use `p/q` syntax, lists are comma-separated, ranges are
//! inclusive `a..b`.

use std::fmt;
use std::str::FromStr;

use bident::Rat;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bident",
    version,
    about = "Machine-checks symmetric Bernoulli-polynomial identities, exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Verify one identity (or all of them) and emit one report per run
    Verify(VerifyArgs),
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Identity to verify
    #[arg(value_enum)]
    pub identity: IdentityArg,

    /// Value or inclusive range a..b for the order n
    #[arg(long)]
    pub n: Option<RangeSpec>,

    /// Value or inclusive range a..b for the factor count m
    #[arg(long)]
    pub m: Option<RangeSpec>,

    /// Weight list r_1,...,r_m (rationals p/q)
    #[arg(long, value_delimiter = ',', value_parser = parse_rat, allow_hyphen_values = true)]
    pub r: Option<Vec<Rat>>,

    /// Second bracket weight (sun-pan exact mode)
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub s: Option<Rat>,

    /// Argument list x_1,...,x_m (rationals p/q)
    #[arg(long, value_delimiter = ',', value_parser = parse_rat, allow_hyphen_values = true)]
    pub x: Option<Vec<Rat>>,

    /// Second argument (pan-sun / sun-pan exact mode)
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub y: Option<Rat>,

    /// Gamma parameters p_1,...,p_m (non-integral rationals)
    #[arg(long, value_delimiter = ',', value_parser = parse_rat, allow_hyphen_values = true)]
    pub p: Option<Vec<Rat>>,

    /// Lemma indices n_1,...,n_m
    #[arg(long = "n-list", value_delimiter = ',')]
    pub n_list: Option<Vec<u32>>,

    /// Number of random exact-numeric trials
    #[arg(long)]
    pub trials: Option<u32>,

    /// RNG seed, recorded verbatim in every randomized report
    #[arg(long, default_value_t = 0xB1DE27)]
    pub seed: u64,

    /// Evaluation mode
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,

    /// Working precision for bigfloat verifications
    #[arg(long = "precision-bits", default_value_t = 256)]
    pub precision_bits: usize,

    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,

    /// Symbolic-mode caps as m:n (instances beyond them run exact-numeric
    /// under --mode auto)
    #[arg(long, default_value = "3:6")]
    pub caps: Caps,

    /// Truncation degree for carlitz-gf
    #[arg(long)]
    pub degree: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    Miki,
    Matiyasevich,
    #[value(name = "pan-sun-3")]
    PanSun3,
    #[value(name = "pan-sun-4")]
    PanSun4,
    Woodcock,
    SunPan,
    Theorem1,
    Lemma1,
    Theorem2,
    GammaMiki,
    CarlitzGf,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Exact,
    Symbolic,
    Bigfloat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
    Tsv,
}

/// Inclusive range `a..b`, or a single value `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RangeSpec {
    pub start: u32,
    pub end: u32,
}

impl RangeSpec {
    pub fn single(v: u32) -> Self {
        Self { start: v, end: v }
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> {
        self.start..=self.end
    }
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |v: &str| {
            v.parse::<u32>()
                .map_err(|_| format!("invalid number `{v}`"))
        };
        if let Some((a, b)) = s.split_once("..") {
            let (start, end) = (parse(a)?, parse(b)?);
            if start > end {
                return Err(format!("empty range `{s}`"));
            }
            Ok(Self { start, end })
        } else {
            Ok(Self::single(parse(s)?))
        }
    }
}

impl fmt::Display for RangeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}

/// Symbolic caps `m:n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub m_max: usize,
    pub n_max: u32,
}

impl FromStr for Caps {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (m, n) = s
            .split_once(':')
            .ok_or_else(|| format!("caps must be m:n, got `{s}`"))?;
        Ok(Self {
            m_max: m.parse().map_err(|_| format!("invalid cap `{m}`"))?,
            n_max: n.parse().map_err(|_| format!("invalid cap `{n}`"))?,
        })
    }
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    Rat::from_str(s).map_err(|e| format!("invalid rational `{s}`: {e}"))
}
