use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::{CheckKind, CommandResult};

/// Build Nakano mosaics from finite lattices and check their axioms.
#[derive(Parser)]
#[command(name = "mosaic-lab", version)]
struct Cli {
    /// Print nothing; only the exit code reports the outcome.
    #[arg(long, global = true)]
    quiet: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[value(alias = "text")]
    Ascii,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a lattice and validate it (and its ortho block, if any).
    Validate(Input),
    /// Print the additive or multiplicative Nakano table.
    Table {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "multiplicative")]
        additive: bool,
        #[arg(long)]
        multiplicative: bool,
        /// Compare against a table file and list the differing cells.
        #[arg(long, value_name = "TABLE")]
        diff: Option<PathBuf>,
        /// Also write the table as JSON to this path.
        #[arg(long, value_name = "PATH")]
        golden: Option<PathBuf>,
    },
    /// Run checks and print one report per axiom.
    Check {
        #[command(flatten)]
        input: Input,
        /// Comma-separated list, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<CheckKind>,
    },
    /// List every orthocomplementation of the lattice.
    Orthocomplements(Input),
    /// Send the ortholattice to its mosaic and back.
    Roundtrip(Input),
    /// Export a named lattice or print the census of all n-element lattices.
    Catalog {
        #[arg(required_unless_present = "enumerate", conflicts_with = "enumerate")]
        name: Option<String>,
        #[arg(long, value_name = "N")]
        enumerate: Option<usize>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Input {
    /// Lattice file, or a catalog name such as `pentagon` or `boolean_3`.
    input: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate(i) => commands::validate(&i.input),
        Command::Table { input, multiplicative, diff, golden, .. } => {
            commands::table(&input.input, multiplicative, diff.as_deref(), golden.as_deref(), cli.format)
        }
        Command::Check { input, checks } => commands::check(&input.input, &checks),
        Command::Orthocomplements(i) => commands::orthocomplements(&i.input),
        Command::Roundtrip(i) => commands::roundtrip(&i.input),
        Command::Catalog { name, enumerate, out } => match enumerate {
            Some(n) => commands::census(n),
            None => commands::export(name.as_deref().unwrap_or_default(), out.as_deref()),
        },
    };
    emit(&result, cli.format, cli.quiet);
    ExitCode::from(result.exit_code)
}

fn emit(result: &CommandResult, format: Format, quiet: bool) {
    if let Some(err) = &result.error {
        eprintln!("error: {err}");
    }
    if quiet {
        return;
    }
    match (format, &result.json) {
        (Format::Json, Some(json)) => println!("{json}"),
        _ => print!("{}", result.text),
    }
}
