//! `lkoszul`: build layered graphs, their algebras, and check them.

mod commands;
mod input;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lkoszul::field::{Field, PrimeField, Rationals};
use lkoszul::Caps;

use commands::Report;
use input::FieldChoice;

#[derive(Parser)]
#[command(
    name = "lkoszul",
    version,
    about = "Algebras of layered graphs and their Koszulity"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Prime modulus, or `q` for exact rationals.
    #[arg(long, global = true, default_value = "32003")]
    field: String,
    /// Largest tensor component (in coordinates) any computation may build.
    #[arg(long, global = true, default_value_t = lkoszul::tensor::DEFAULT_AMBIENT_CAP)]
    ambient_cap: usize,
    /// Largest number of paths enumerated between two vertices.
    #[arg(long, global = true, default_value_t = lkoszul::graph::DEFAULT_PATH_CAP)]
    path_cap: usize,
    /// Largest subspace lattice closure.
    #[arg(long, global = true, default_value_t = lkoszul::koszul::DEFAULT_LATTICE_CAP)]
    lattice_cap: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write output to this file instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Write a built-in graph in the text format.
    Generate {
        kind: GraphKind,
        /// Size parameter for hypercube and chain.
        #[arg(long)]
        n: Option<usize>,
        /// Level sizes for complete, level 0 first, comma separated.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
    },
    /// Report structural violations of a graph.
    Validate { graph: String },
    /// Decide uniformity and name a witness when it fails.
    CheckUniform { graph: String },
    /// Print quadratic relations and compare ideal dimensions per degree.
    Relations {
        graph: String,
        #[arg(long, value_enum, default_value_t = PresentationArg::A)]
        presentation: PresentationArg,
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Graded dimensions of gr A from the basis and from linear algebra.
    Hilbert {
        graph: String,
        #[arg(long, value_enum, default_value_t = HilbertMode::Both)]
        mode: HilbertMode,
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Koszulity checks up to a bound.
    Koszul {
        graph: String,
        #[arg(long, value_enum, default_value_t = KoszulMethod::Tor)]
        method: KoszulMethod,
        /// Total degree bound for tor, top degree for euler, largest word length for lattice.
        #[arg(long, default_value_t = 5)]
        max: usize,
        #[arg(long, value_enum, default_value_t = PresentationArg::Gr)]
        presentation: PresentationArg,
    },
    /// Check one of the subspace identities.
    LemmaCheck {
        graph: String,
        #[arg(long, value_enum)]
        lemma: LemmaArg,
        /// Word length (4.2, 4.7) or largest ambient length (4.4).
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Random instances for 4.3.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum GraphKind {
    Hypercube,
    Chain,
    Complete,
    Witness,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresentationArg {
    A,
    Gr,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HilbertMode {
    Basis,
    Linalg,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum KoszulMethod {
    Tor,
    Euler,
    Lattice,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum LemmaArg {
    #[value(name = "4.2")]
    PathKernels,
    #[value(name = "4.3")]
    ImageIntersection,
    #[value(name = "4.4")]
    ShiftedPaths,
    #[value(name = "4.7")]
    PathLattice,
}

pub struct Config {
    pub caps: Caps,
    pub seed: u64,
}

fn run_with<F: Field>(field: &F, cmd: &Command, config: &Config) -> Report {
    commands::run(field, cmd, config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = Config {
        caps: Caps {
            ambient: cli.global.ambient_cap,
            paths: cli.global.path_cap,
            lattice: cli.global.lattice_cap,
        },
        seed: cli.global.seed,
    };
    let report = match input::parse_field(&cli.global.field) {
        Ok(FieldChoice::Prime(p)) => {
            if p < input::SMALL_PRIME {
                eprintln!(
                    "warning: GF({p}) may give dimensions that differ from characteristic zero"
                );
            }
            run_with(
                &PrimeField::new(p).expect("checked prime"),
                &cli.command,
                &config,
            )
        }
        Ok(FieldChoice::Rational) => run_with(&Rationals, &cli.command, &config),
        Err(e) => Report::input_error(e),
    };
    if !report.text.is_empty() {
        match &cli.global.output {
            Some(path) => {
                if let Err(e) = fs::write(path, &report.text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            None => print!("{}", report.text),
        }
    }
    if let Some(msg) = &report.error {
        eprintln!("error: {msg}");
    }
    ExitCode::from(report.code)
}
