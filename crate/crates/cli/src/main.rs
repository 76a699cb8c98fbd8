mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use burnside::group::{GenBound, DEFAULT_ORDER_CAP};
use clap::{Args, Parser, Subcommand};

use commands::Mode;
use report::{InputError, Printer, Report};

/// Burnside rings, tables of marks, and Artin/Brauer induction certificates.
#[derive(Parser)]
#[command(name = "burnside", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArgs {
    /// Builtin group: trivial, C2, C3, C4, C6, C2xC2, S3, D4, Q8, A4, S4.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    group: Option<String>,
    /// Permutation group file: optional `name:` line, then one generator per line in cycle notation.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Refuse groups larger than this.
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    cap: usize,
}

#[derive(Args)]
struct OutputArgs {
    /// Print a JSON report.
    #[arg(long)]
    json: bool,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Subgroup classes and the table of marks.
    Marks {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Artin induction certificate.
    Artin {
        #[command(flatten)]
        group: GroupArgs,
        /// Generator bound: 0, 1, 2, ... or inf.
        #[arg(long, default_value = "1")]
        n: GenBound,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Brauer induction certificate.
    Brauer {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value = "1")]
        n: GenBound,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Restriction to the equalizer of representation rings.
    Equalizer {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value = "1")]
        n: GenBound,
        #[arg(long, value_enum, default_value = "artin")]
        mode: Mode,
        /// Directory of `.tbl` character tables used instead of the shipped ones.
        #[arg(long)]
        tables: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// |G|_n for a compact Lie group from declared abelian-class data.
    Lie {
        /// JSON class data; the shipped SO(3) data when omitted.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Take the N-fold product.
        #[arg(long, default_value_t = 1)]
        power: usize,
        #[arg(long, default_value = "1")]
        n: GenBound,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run every check on one group.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        tables: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn group(command: &'static str, g: &GroupArgs) -> Result<commands::GroupInput, InputError> {
    commands::load_group(command, g.group.as_deref(), g.file.as_deref(), g.cap)
}

fn run(command: Command) -> (OutputArgs, Result<Report, InputError>) {
    match command {
        Command::Marks { group: g, out } => (out, group("marks", &g).map(commands::marks)),
        Command::Artin { group: g, n, out } => (out, group("artin", &g).and_then(|i| commands::artin(i, n))),
        Command::Brauer { group: g, n, out } => (out, group("brauer", &g).and_then(|i| commands::brauer(i, n))),
        Command::Equalizer { group: g, n, mode, tables, out } => {
            let r = commands::library("equalizer", tables.as_ref())
                .and_then(|lib| group("equalizer", &g).and_then(|i| commands::equalizer(i, n, mode, &lib)));
            (out, r)
        }
        Command::Lie { file, power, n, out } => (out, commands::lie(file.as_deref(), power, n)),
        Command::Verify { group: g, tables, out } => {
            let r = commands::library("verify", tables.as_ref())
                .and_then(|lib| group("verify", &g).map(|i| commands::verify(i, &lib)));
            (out, r)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (out, result) = run(cli.command);
    let printer = Printer { json: out.json, timing: out.timing };
    let code = match result {
        Ok(report) => printer.report(&report, start.elapsed()),
        Err(e) => printer.input_error(&e),
    };
    ExitCode::from(code as u8)
}
