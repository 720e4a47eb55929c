use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};

use fistab::combinatorics::{Diagram, Permutation};
use fistab::multiplicity::{
    dimension_polynomial_from, eventual_multiplicities_with_threads, onset_bound,
};
use fistab::oracle::{self, DegreeModule};
use fistab::presentation::PresentationMatrix;
use fistab_cli::{parse_presentation, render};

/// Eventual multiplicities of symmetric group irreducibles in finitely
/// presented FI-modules.
#[derive(Parser)]
#[command(name = "fistab", version)]
struct Cli {
    /// Worker threads for per-shape computations; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eventual multiplicity of every λ⁺ with |λ| ≤ x_max.
    Multiplicities {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Eventual dimension polynomial and the degree from which it holds.
    Dimension { file: PathBuf },
    /// Dimension of the module in degree N, by direct computation.
    Evaluate {
        file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Decomposition of the degree-N piece into irreducibles.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Compare eventual multiplicities with a direct computation in degree N
    /// (default: the onset bound).
    Verify {
        file: PathBuf,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Matrix of a permutation on the Specht module of a shape.
    Specht {
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        #[arg(long)]
        perm: String,
    },
    /// The matrix whose corank is the multiplicity of λ⁺.
    Amatrix {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
    },
}

/// Failures split by exit code.
enum Failure {
    /// Bad input: unreadable file, parse error, malformed shape.
    Input(anyhow::Error),
    /// The computation could not be carried out.
    Compute(anyhow::Error),
    /// `verify` ran and found a disagreement at or past the onset.
    Verification,
}

impl From<fistab::Error> for Failure {
    fn from(e: fistab::Error) -> Self {
        Failure::Compute(e.into())
    }
}

fn load(path: &PathBuf) -> Result<PresentationMatrix, Failure> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::Input)?;
    parse_presentation(&text).map_err(|e| Failure::Input(anyhow!("{}: {e}", path.display())))
}

fn shape(text: &str) -> Result<Diagram, Failure> {
    Diagram::parse(text).map_err(|e| Failure::Input(anyhow!("invalid shape {text:?}: {e}")))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let threads = cli.threads.max(1);
    match cli.command {
        Command::Multiplicities { file, json } => {
            let z = load(&file)?;
            let table = eventual_multiplicities_with_threads(&z, threads);
            Ok(if json {
                render::multiplicities_json(&table, onset_bound(&z))
            } else {
                render::multiplicities_text(&table)
            })
        }
        Command::Dimension { file } => {
            let z = load(&file)?;
            let table = eventual_multiplicities_with_threads(&z, threads);
            Ok(render::dimension_text(&dimension_polynomial_from(
                &table,
                onset_bound(&z),
            )))
        }
        Command::Evaluate { file, n } => {
            let z = load(&file)?;
            Ok(format!("{}\n", oracle::dimension_at(&z, n)?))
        }
        Command::Decompose { file, n } => {
            let z = load(&file)?;
            let module = DegreeModule::new(&z, n)?;
            let entries = module.decompose()?;
            Ok(render::decomposition_text(n, module.dimension(), &entries))
        }
        Command::Verify { file, n } => {
            let z = load(&file)?;
            let n = n.unwrap_or_else(|| onset_bound(&z));
            let report = oracle::verify(&z, n)?;
            let text = render::verify_text(&report);
            if report.failed() {
                print!("{text}");
                return Err(Failure::Verification);
            }
            Ok(text)
        }
        Command::Specht { shape: s, perm } => {
            let lambda = shape(&s)?;
            let sigma: Permutation = render::parse_permutation(&perm)
                .map_err(|e| Failure::Input(anyhow!("invalid permutation {perm:?}: {e}")))?;
            if sigma.degree() != lambda.size() {
                return Err(Failure::Input(anyhow!(
                    "permutation of {} letters for a shape of size {}",
                    sigma.degree(),
                    lambda.size()
                )));
            }
            Ok(render::specht_text(&lambda, &sigma)?)
        }
        Command::Amatrix { file, shape: s } => {
            let z = load(&file)?;
            Ok(render::amatrix_text(&shape(&s)?, &z)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
