use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tautring::catalog::{case_by_label, enumerate_cases, gonality4_dimension, render_picture, trigonal_dimension};
use tautring::cycle::CycleJson;
use tautring::json::{product_table, to_canonical, Product};
use tautring::model::{Model, ModelJson};
use tautring::oracle::{pair_table, triple_table};
use tautring::solver::{solve, SolverReport};
use tautring::verify::{verify, Scope};
use tautring::{Cycle, Error};

#[derive(Parser)]
#[command(name = "tautring", version, about = "Exact tautological-ring models of Jacobians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Resolve one listed case and print its model.
    Build {
        #[arg(long)]
        genus: u32,
        #[arg(long = "case")]
        label: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the solver report for one listed case.
    Solve {
        #[arg(long)]
        genus: u32,
        #[arg(long = "case")]
        label: String,
    },
    /// Print the nonzero products between basis elements.
    Products {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        product: Product,
        #[arg(long)]
        basis_only: bool,
    },
    /// Apply the Fourier transform to a cycle.
    Fourier {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        cycle: PathBuf,
    },
    /// List the cases of one genus with their dimensions.
    Enumerate {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        json: bool,
    },
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        scope: Scope,
    },
    /// Draw the column picture of a model.
    Picture {
        #[arg(long)]
        model: PathBuf,
    },
    #[command(subcommand)]
    Family(FamilyCommand),
}

#[derive(Subcommand)]
enum OracleCommand {
    XiPair {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
    },
    XiTriple {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        h: u32,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    Trigonal {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        k: u32,
    },
    G14 {
        #[arg(long)]
        genus: u32,
        #[arg(long, value_delimiter = ',')]
        klist: Vec<u32>,
    },
}

enum Failure {
    Verification(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn read_model(path: &Path) -> Result<Model, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    let json: ModelJson = serde_json::from_str(&text)?;
    Model::from_json(&json)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build { genus, label, out } => {
            let r = case_by_label(genus, &label)?.resolve()?;
            let text = to_canonical(&r.model.to_json())?;
            match out {
                Some(p) => fs::write(&p, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display())))?,
                None => print!("{text}"),
            }
        }
        Command::Solve { genus, label } => {
            let r = case_by_label(genus, &label)?.resolve()?;
            print!("{}", to_canonical(&SolverReport::new(&r.system, &solve(&r.system)))?);
        }
        Command::Products { model, product, basis_only } => {
            let m = read_model(&model)?;
            print!("{}", to_canonical(&product_table(&m, product, basis_only))?);
        }
        Command::Fourier { model, cycle } => {
            let m = read_model(&model)?;
            let text = fs::read_to_string(&cycle).map_err(|e| Error::InvalidInput(format!("{}: {e}", cycle.display())))?;
            let c = Cycle::from_json(&serde_json::from_str::<CycleJson>(&text).map_err(Error::from)?)?;
            if c.genus() != m.genus() {
                return Err(Error::GenusMismatch(c.genus(), m.genus()).into());
            }
            if let Some(k) = c.keys().find(|k| !m.is_basis_column(&k.index)) {
                return Err(Error::InvalidInput(format!("{k} is not a basis element of the model")).into());
            }
            print!("{}", to_canonical(&c.fourier().to_json())?);
        }
        Command::Enumerate { genus, json } => {
            let cases = enumerate_cases(genus)?;
            if json {
                let v: Vec<_> = cases.iter().map(|c| c.to_json()).collect();
                print!("{}", to_canonical(&v)?);
            } else {
                for c in &cases {
                    let forced: Vec<String> = c.resolution.forced.iter().map(ToString::to_string).collect();
                    let note = if forced.is_empty() { String::new() } else { format!("  [{}]", forced.join(", ")) };
                    println!("({})  dim {}{note}", c.descriptor.label, c.dimension());
                }
            }
        }
        Command::Oracle(OracleCommand::XiPair { genus, i, j }) => {
            print!("{}", to_canonical(&pair_table(genus, i, j))?);
        }
        Command::Oracle(OracleCommand::XiTriple { genus, h, i, j }) => {
            if h == 0 || i == 0 || j == 0 {
                return Err(Error::InvalidInput("h, i, j must be at least 1".into()).into());
            }
            print!("{}", to_canonical(&triple_table(genus, h, i, j))?);
        }
        Command::Verify { scope } => {
            let results = verify(scope);
            let mut failed = 0;
            for r in &results {
                println!("{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail);
                failed += usize::from(!r.passed);
            }
            if failed > 0 {
                return Err(Failure::Verification(format!("{failed} check(s) failed")));
            }
        }
        Command::Picture { model } => {
            print!("{}", render_picture(&read_model(&model)?));
        }
        Command::Family(FamilyCommand::Trigonal { genus, k }) => {
            println!("{}", trigonal_dimension(genus, k)?);
        }
        Command::Family(FamilyCommand::G14 { genus, klist }) => {
            let v = gonality4_dimension(genus, &klist)?;
            print!("{}", to_canonical(&v)?);
            if !v.agrees() {
                eprintln!("note: printed formula gives {}, column count gives {}", v.formula_value, v.column_count);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::DimensionMismatch { .. } => 1,
                Error::Inconsistent(_) | Error::Underdetermined(_) => 3,
                _ => 2,
            })
        }
    }
}
