use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use solvhull::io::{self, Command, Format, RunOptions};

#[derive(Parser)]
#[command(name = "solvhull", version, about = "Hulls, invariant models, formality and hard Lefschetz for solvable Lie algebras over Q")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(clap::Args)]
struct Common {
    /// A TOML input file, or `@fixture[:key=v1,v2...]`.
    input: String,
    /// 2-form in the hull basis, e.g. "x1^y + x2^x3".
    #[arg(long)]
    omega: Option<String>,
    /// Largest total degree p+q+r-1 scanned for triple Massey products.
    #[arg(long)]
    massey_depth: Option<usize>,
    /// Largest finite group order accepted before giving up.
    #[arg(long)]
    finite_bound: Option<usize>,
    /// Without --omega, let `lefschetz` try random closed 2-forms (heuristic).
    #[arg(long)]
    search_omega: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check antisymmetry and the Jacobi identity.
    Validate(Common),
    /// Nilradical and derived series.
    Nilradical(Common),
    /// Splittable hull and unipotent hull.
    Hull(Common),
    /// Chevalley–Eilenberg cohomology of the algebra itself.
    Cohomology(Common),
    /// Invariant forms on the unipotent hull and their cohomology.
    Invariants(Common),
    /// Formality certificate or Massey obstruction.
    Formality(Common),
    /// Symplectic check and hard Lefschetz on the invariant model.
    Lefschetz(Common),
    /// Every stage, with the type (I) and Kähler conclusions.
    Analyze(Common),
    /// Print a built-in fixture as an input document.
    Fixture {
        /// `name[:key=v1,v2...]`; `list` prints the names.
        name: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = match cli.command {
        Cmd::Fixture { name } => return print_fixture(&name),
        Cmd::Validate(c) => (Command::Validate, c),
        Cmd::Nilradical(c) => (Command::Nilradical, c),
        Cmd::Hull(c) => (Command::Hull, c),
        Cmd::Cohomology(c) => (Command::Cohomology, c),
        Cmd::Invariants(c) => (Command::Invariants, c),
        Cmd::Formality(c) => (Command::Formality, c),
        Cmd::Lefschetz(c) => (Command::Lefschetz, c),
        Cmd::Analyze(c) => (Command::Analyze, c),
    };
    let opts = RunOptions {
        omega: common.omega,
        massey_depth: common.massey_depth,
        finite_bound: common.finite_bound,
        search_omega: common.search_omega,
        format: match common.format {
            OutputFormat::Text => Format::Text,
            OutputFormat::Structured => Format::Structured,
        },
    };
    let out = match io::load_input(&common.input) {
        Ok(doc) => io::run(command, &doc, &opts),
        Err(e) => io::parse_failure(command, &e, opts.format),
    };
    if out.exit_code == io::EXIT_OK || opts.format == Format::Structured {
        print!("{}", out.text);
    } else {
        eprint!("{}", out.text);
    }
    let _ = std::io::stdout().flush();
    ExitCode::from(out.exit_code as u8)
}

fn print_fixture(name: &str) -> ExitCode {
    if name == "list" {
        for n in io::FIXTURE_NAMES {
            println!("{n}");
        }
        return ExitCode::SUCCESS;
    }
    match io::fixture(name) {
        Ok(doc) => {
            print!("{}", io::render_document(&doc));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(io::EXIT_PARSE as u8)
        }
    }
}
