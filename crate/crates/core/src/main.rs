//! Command-line front end. Exit codes: 0 on success, 1 on validation
//! failures in the data, 2 on usage errors, 3 when a property check fails.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use neutroval::cli::{
    convert, render_table, run_check, sweep, CliError, ConvertOptions, Direction, Format, Space,
    TableKind,
};
use neutroval::{TolerancePolicy, Variant};

#[derive(Parser)]
#[command(
    name = "neutroval",
    version,
    about = "Convert truth/indeterminacy/falsity triples \
between multi-valued partition representations",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a batch of records between representation spaces.
    Convert {
        /// Target representation space.
        #[arg(long, value_enum, default_value_t = Space::Penta)]
        space: Space,
        /// Transform variant, 1 or 2.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        variant: u8,
        /// Transform direction; inverse exists only for the penta space.
        #[arg(long, value_enum, default_value_t = Direction::Forward)]
        direction: Direction,
        /// Record format for both input and output.
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Stop at the first failing row instead of continuing.
        #[arg(long)]
        fail_fast: bool,
        /// Input file; reads stdin when omitted or "-".
        input: Option<PathBuf>,
    },
    /// Print one of the five-valued truth tables.
    Tables {
        /// Which table to print.
        #[arg(value_enum)]
        which: TableKind,
    },
    /// Enumerate a cube lattice and convert every point.
    Sweep {
        /// Lattice spacing in (0, 1].
        #[arg(long)]
        step: f64,
        #[arg(long, value_enum, default_value_t = Space::Penta)]
        space: Space,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        variant: u8,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run the seeded invariant suite and print its report.
    Check {
        /// Number of seeded random samples (at least 1).
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// Seed for the deterministic sampler.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Prefix the report with the tool version.
        #[arg(long)]
        version_header: bool,
    },
}

fn variant_from_flag(flag: u8) -> Variant {
    match flag {
        1 => Variant::I,
        _ => Variant::II,
    }
}

fn open_input(path: Option<&PathBuf>) -> io::Result<Box<dyn Read>> {
    match path {
        None => Ok(Box::new(io::stdin().lock())),
        Some(p) if p.as_os_str() == "-" => Ok(Box::new(io::stdin().lock())),
        Some(p) => Ok(Box::new(File::open(p)?)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };

    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_usage() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Convert {
            space,
            variant,
            direction,
            format,
            fail_fast,
            input,
        } => {
            let opts = ConvertOptions {
                space,
                variant: variant_from_flag(variant),
                direction,
                format,
                fail_fast,
                tolerance: TolerancePolicy::default(),
            };
            let reader = open_input(input.as_ref())?;
            let stdout = io::stdout().lock();
            let summary = convert(reader, BufWriter::new(stdout), io::stderr().lock(), &opts)?;
            Ok(if summary.rows_failed > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Tables { which } => {
            print!("{}", render_table(which));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            step,
            space,
            variant,
            format,
        } => {
            let stdout = io::stdout().lock();
            sweep(
                step,
                space,
                variant_from_flag(variant),
                format,
                BufWriter::new(stdout),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            samples,
            seed,
            version_header,
        } => {
            let mut report = run_check(samples, seed);
            if version_header {
                report = report.with_version(env!("CARGO_PKG_VERSION").to_string());
            }
            let mut stdout = io::stdout().lock();
            write!(stdout, "{report}")?;
            stdout.flush()?;
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
    }
}
