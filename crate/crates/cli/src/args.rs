use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use satgame::verify::Suite;
use satgame::{ForbiddenFamily, Player, Variant};

#[derive(Parser, Debug)]
#[command(name = "satgame", version, about = "Saturation games on graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact game values with the matching theorem bounds.
    Solve(SolveArgs),
    /// One game between two named strategies.
    Play(PlayArgs),
    /// A table of games over sizes, first movers and strategy pairs.
    Sweep(SweepArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Saturated graphs up to isomorphism, with component labels.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Jsonl,
}

/// `a..b` (inclusive) or a single value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NRange(pub RangeInclusive<usize>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad size {t:?}"));
        match s.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
                if a > b {
                    return Err(format!("empty range {s:?}"));
                }
                Ok(NRange(a..=b))
            }
            None => num(s).map(|n| NRange(n..=n)),
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct GameArgs {
    /// P4, P5, Pk:<k>, Trees:<k>, Star:<s> (forbids K_{1,s}), List:<graph6,...>;
    /// Pk, Trees and Star take their parameter from --k.
    #[arg(long)]
    pub family: String,
    /// For Pk and Trees the vertex count; for Star the maximum degree.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value = "standard")]
    pub variant: Variant,
    /// P or S; both when omitted.
    #[arg(long)]
    pub first: Option<Player>,
}

impl GameArgs {
    pub fn family(&self) -> Result<ForbiddenFamily, String> {
        let bare = |k: Option<usize>| k.ok_or_else(|| format!("family {} needs --k", self.family));
        let f = match self.family.trim() {
            "Pk" => ForbiddenFamily::path(bare(self.k)?),
            "Trees" => ForbiddenFamily::trees(bare(self.k)?),
            "Star" => ForbiddenFamily::star(bare(self.k)? + 1),
            other => other.parse(),
        };
        f.map_err(|e| e.to_string())
    }

    pub fn firsts(&self) -> Vec<Player> {
        match self.first {
            Some(p) => vec![p],
            None => vec![Player::Prolonger, Player::Shortener],
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct Caps {
    /// Stop a search after this many expanded positions.
    #[arg(long)]
    pub node_cap: Option<u64>,
    /// Stop a search after this many seconds.
    #[arg(long)]
    pub time_cap: Option<f64>,
    /// Largest n the solver accepts.
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
}

impl Caps {
    pub fn time(&self) -> Option<Duration> {
        self.time_cap.map(Duration::from_secs_f64)
    }
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub game: GameArgs,
    #[arg(long)]
    pub n: NRange,
    #[command(flatten)]
    pub caps: Caps,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct PlayArgs {
    #[command(flatten)]
    pub game: GameArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub prolonger: String,
    #[arg(long)]
    pub shortener: String,
    /// Seed for a bare `random` strategy.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the record here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(flatten)]
    pub game: GameArgs,
    #[arg(long)]
    pub n: NRange,
    /// Comma-separated strategy names.
    #[arg(long)]
    pub prolonger: String,
    #[arg(long)]
    pub shortener: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Repeatable; all suites when omitted.
    #[arg(long)]
    pub suite: Vec<Suite>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fuzzed games per claim.
    #[arg(long, default_value_t = 10_000)]
    pub games: usize,
    /// Largest n in fuzzed games.
    #[arg(long, default_value_t = 20)]
    pub fuzz_n_max: usize,
    /// Solve on one thread only.
    #[arg(long)]
    pub serial: bool,
    #[command(flatten)]
    pub caps: Caps,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: NRange,
    #[command(flatten)]
    pub output: Output,
}

impl EnumerateArgs {
    pub fn family(&self) -> Result<ForbiddenFamily, String> {
        GameArgs {
            family: self.family.clone(),
            k: self.k,
            variant: Variant::Standard,
            first: None,
        }
        .family()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("4..7".parse::<NRange>().unwrap(), NRange(4..=7));
        assert_eq!("6".parse::<NRange>().unwrap(), NRange(6..=6));
        assert!("7..4".parse::<NRange>().is_err());
        assert!("x".parse::<NRange>().is_err());
    }

    #[test]
    fn bare_families() {
        let args = |family: &str, k| GameArgs {
            family: family.into(),
            k,
            variant: Variant::Standard,
            first: None,
        };
        assert_eq!(args("Star", Some(3)).family().unwrap(), ForbiddenFamily::Star(4));
        assert_eq!(args("Pk", Some(6)).family().unwrap(), ForbiddenFamily::Path(6));
        assert_eq!(args("Trees:5", None).family().unwrap(), ForbiddenFamily::TreeFamily(5));
        assert!(args("Trees", None).family().is_err());
    }
}
