//! Thin command-line front end; all logic lives in `gccodes::cli`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gccodes::cli::{
    self, cmd_blocks, cmd_code, cmd_dna, cmd_enumerator, error_json, BlockSpec, EnumeratorMode,
    RunConfig, SubcodeVariant,
};
use gccodes::cyclotomic::BlockFilters;
use gccodes::dna::Construction;

#[derive(Parser)]
#[command(
    name = "gccodes",
    about = "Cyclic codes over GF(q^r), GC-content enumerators, DNA codebooks",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Code length (coprime to q)
    #[arg(short)]
    n: usize,
    /// Base field size (prime power)
    #[arg(short, default_value_t = 2)]
    q: u64,
    /// Extension degree
    #[arg(short, default_value_t = 2)]
    r: usize,
    /// Enumeration guard in words; env GCCODES_GUARD overrides the default
    #[arg(long)]
    guard: Option<u64>,
    /// Seed for sampled verification
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker count hint (results do not depend on it)
    #[arg(long)]
    threads: Option<usize>,
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            n: self.n,
            q: self.q,
            r: self.r,
            guard: cli::resolve_guard(self.guard),
            seed: self.seed,
            threads: self.threads,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Closed,
    Brute,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum SubcodeArg {
    Even,
    Extended,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructArg {
    Even,
    Split,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// List valid blocks with completeness/reversibility/self-duality flags
    Blocks {
        #[command(flatten)]
        common: Common,
        /// Keep only complete blocks
        #[arg(long)]
        complete: bool,
        /// Keep only reversible blocks (-B = B)
        #[arg(long)]
        reversible: bool,
        /// Keep only blocks with self-dual extended code (B = -2B)
        #[arg(long)]
        selfdual: bool,
        /// Keep only blocks of this size
        #[arg(long)]
        size: Option<usize>,
    },
    /// Construct the code of a block: generator, idempotent, distance
    Code {
        #[command(flatten)]
        common: Common,
        /// Block: comma-separated exponents or "qr"
        #[arg(short = 'B', long = "block")]
        block: String,
    },
    /// Weight distribution by closed form, brute force, or both
    Enumerator {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'B', long = "block")]
        block: String,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        /// Enumerate the even-weight subcode or the extended code instead
        #[arg(long, value_enum)]
        subcode: Option<SubcodeArg>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Build a constant GC-content codebook; write FASTA + metadata
    Dna {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'B', long = "block")]
        block: String,
        #[arg(long, value_enum, default_value = "even")]
        construct: ConstructArg,
        /// Claimed minimum distance; computed by enumeration when omitted
        #[arg(short = 'd', long)]
        distance: Option<usize>,
        /// Print the closed-form bound without any enumeration
        #[arg(long)]
        bound_only: bool,
        /// Output path prefix for <prefix>.fasta and <prefix>.json
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
}

fn run(cmd: &Cmd) -> gccodes::Result<(serde_json::Value, bool, Option<String>)> {
    match cmd {
        Cmd::Blocks {
            common,
            complete,
            reversible,
            selfdual,
            size,
        } => {
            let filters = BlockFilters {
                complete: complete.then_some(true),
                reversible: reversible.then_some(true),
                selfdual: selfdual.then_some(true),
                size: *size,
                ..Default::default()
            };
            let v = cmd_blocks(&common.config(), &filters)?;
            Ok((v, true, None))
        }
        Cmd::Code { common, block } => {
            let v = cmd_code(&common.config(), &BlockSpec::parse(block)?)?;
            Ok((v, true, None))
        }
        Cmd::Enumerator {
            common,
            block,
            mode,
            subcode,
            format,
        } => {
            let mode = match mode {
                ModeArg::Closed => EnumeratorMode::Closed,
                ModeArg::Brute => EnumeratorMode::Brute,
                ModeArg::Both => EnumeratorMode::Both,
            };
            let variant = match subcode {
                None => SubcodeVariant::Code,
                Some(SubcodeArg::Even) => SubcodeVariant::Even,
                Some(SubcodeArg::Extended) => SubcodeVariant::Extended,
            };
            let (v, pass) =
                cmd_enumerator(&common.config(), &BlockSpec::parse(block)?, mode, variant)?;
            let rendered = match format {
                FormatArg::Csv => Some(cli::enumerator_csv(&v)),
                FormatArg::Json => None,
            };
            Ok((v, pass, rendered))
        }
        Cmd::Dna {
            common,
            block,
            construct,
            distance,
            bound_only,
            out,
        } => {
            let construction = match construct {
                ConstructArg::Even => Construction::EvenSubcode,
                ConstructArg::Split => Construction::RcPairSplit,
            };
            let (v, pass) = cmd_dna(
                &common.config(),
                &BlockSpec::parse(block)?,
                construction,
                *distance,
                *bound_only,
                out.as_deref(),
            )?;
            Ok((v, pass, None))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok((value, pass, rendered)) => {
            match rendered {
                Some(text) => print!("{text}"),
                None => println!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("valid json")
                ),
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&error_json(&err)).expect("valid json")
            );
            ExitCode::from(2)
        }
    }
}
