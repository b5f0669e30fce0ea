use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fengrao_core::Int;

#[derive(Debug, Parser)]
#[command(
    name = "fengrao",
    version,
    about = "Divisors, Feng-Rao distances and Feng-Rao numbers of numerical semigroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Write to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,

    /// Add an elapsed_ms column to result rows.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Divisors D(x) of an element.
    Divisors {
        #[command(flatten)]
        semigroup: SemigroupArg,
        #[arg(long)]
        x: Int,
    },
    /// Feng-Rao distances at a chosen base m (default 2c-1).
    Distance {
        #[command(flatten)]
        semigroup: SemigroupArg,
        #[arg(long)]
        m: Option<Int>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Feng-Rao numbers E(S, r).
    Number {
        #[command(flatten)]
        semigroup: SemigroupArg,
        #[command(flatten)]
        run: RunArgs,
    },
    /// E(r, <a..a+b>) for every 0 < b < a, b <= bmax, a <= amax, r <= rmax.
    Grid {
        #[arg(long)]
        amax: Int,
        #[arg(long)]
        bmax: Int,
        #[arg(long)]
        rmax: Int,
    },
    /// Amenable sets, or one representative per shadow.
    Amenable {
        #[command(flatten)]
        semigroup: SemigroupArg,
        #[arg(long)]
        m: Option<Int>,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        shadows: bool,
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct SemigroupArg {
    /// Generators, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub gens: Option<Vec<Int>>,
    /// The interval semigroup <a, a+1, ..., a+b>.
    #[arg(long, value_name = "A,B")]
    pub interval: Option<IntervalArg>,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// A single r or an inclusive range lo..hi.
    #[arg(long, default_value = "1")]
    pub r: RRange,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Cap on the number of subsets the brute-force search may visit.
    #[arg(long, default_value_t = fengrao_core::DEFAULT_BRUTE_FORCE_CAP)]
    pub max_brute: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Generic,
    Interval,
    Brute,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalArg {
    pub a: Int,
    pub b: Int,
}

impl FromStr for IntervalArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once(',').ok_or("expected A,B")?;
        let a = a.trim().parse().map_err(|e| format!("bad a: {e}"))?;
        let b = b.trim().parse().map_err(|e| format!("bad b: {e}"))?;
        Ok(Self { a, b })
    }
}

/// Inclusive range of r values, at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RRange {
    pub lo: usize,
    pub hi: usize,
}

impl RRange {
    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for RRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad r '{t}': {e}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (parse(lo)?, parse(hi)?),
            None => {
                let r = parse(s)?;
                (r, r)
            }
        };
        if lo == 0 {
            return Err("r starts at 1".into());
        }
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(Self { lo, hi })
    }
}

impl fmt::Display for RRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}
