use braidrep::cli::{run, Command, KindFilter, OutputFormat, RunConfig};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact enumeration of permutation representations of braid groups and of
/// their commutator subgroups, with subgroup censuses and embedded reference
/// tables.
#[derive(Parser)]
#[command(name = "braidrep", version, about)]
struct Args {
    #[command(subcommand)]
    command: Cmd,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Paper)]
    format: FormatArg,

    /// Cache directory (default: $BRAIDREP_CACHE_DIR, else the system temp dir).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Skip the result cache entirely.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Worker threads (0 = available parallelism).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Paper,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TypeArg {
    #[value(name = "all")]
    All,
    #[value(name = "I", alias = "i", alias = "1")]
    I,
    #[value(name = "II", alias = "ii", alias = "2")]
    Ii,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decompose the level-3 shift graph over S_r into cycles.
    Cycles {
        /// Symmetric group degree r.
        #[arg(long)]
        r: u8,
        /// Restrict the listing to one cycle type.
        #[arg(long = "type", value_enum, default_value_t = TypeArg::All)]
        kind: TypeArg,
        /// Tower level; cycles always live at level 3.
        #[arg(long, default_value_t = 3)]
        n: u32,
    },
    /// Enumerate Hom(K_n, S_r) by extending cycles up the tower.
    Extend {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u8,
    },
    /// Enumerate Hom(B_n, S_r), the braid-group representations.
    Braid {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u8,
    },
    /// Representation/transitivity/subgroup counts for one (n, r).
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u8,
    },
    /// Probe the triviality conjecture over a grid of (n, r) pairs.
    Conjecture {
        /// Largest degree to probe.
        #[arg(long)]
        r: u8,
        /// Largest tower level to probe (>= 5).
        #[arg(long = "n-max")]
        n_max: u32,
    },
    /// Recompute every embedded reference table and count, and diff.
    VerifyPaper,
    /// Emit the shift graph in dot format.
    Graph {
        #[arg(long)]
        r: u8,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match args.command {
        Cmd::Cycles { r, kind, n } => {
            if n != 3 {
                eprintln!("error: cycles live at level 3; use `extend --n {n}` for higher levels");
                return ExitCode::from(2);
            }
            let kind = match kind {
                TypeArg::All => KindFilter::All,
                TypeArg::I => KindFilter::Type1,
                TypeArg::Ii => KindFilter::Type2,
            };
            Command::Cycles { r, kind }
        }
        Cmd::Extend { n, r } => Command::Extend { n, r },
        Cmd::Braid { n, r } => Command::Braid { n, r },
        Cmd::Census { n, r } => Command::Census { n, r },
        Cmd::Conjecture { r, n_max } => Command::Conjecture { r, n_max },
        Cmd::VerifyPaper => Command::VerifyPaper,
        Cmd::Graph { r } => Command::Graph { r },
    };
    let config = RunConfig {
        command,
        format: match args.format {
            FormatArg::Paper => OutputFormat::Paper,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Dot => OutputFormat::Dot,
        },
        cache_dir: args.cache_dir,
        no_cache: args.no_cache,
        workers: args.workers,
    };
    match run(&config) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
