//! `plausible`: command-line access to the prover, the proof checker and the
//! finite-model tools.
//!
//! Exit codes: 0 proved / valid / accepted / true, 1 open / countermodel /
//! rejected / false, 2 parse or input error, 3 node budget exhausted.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use plausible_core::algebra::{self, Countermodel};
use plausible_core::folp::{self, Assignment, PlausibleStructure};
use plausible_core::hilbert::{check_proof, parse_proof};
use plausible_core::pseudotopology;
use plausible_core::tableau::{Prover, TableauError, DEFAULT_NODE_BUDGET};
use plausible_core::{parse, Formula};
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "plausible", version, about = "Reasoning tools for the logic of the plausible")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canonical rendering of a formula.
    Parse {
        formula: String,
        /// Read a first-order formula instead.
        #[arg(long)]
        fo: bool,
    },
    /// Run the tableau prover.
    Prove {
        formula: String,
        #[arg(long = "premise", value_name = "FORMULA")]
        premises: Vec<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: usize,
    },
    /// Search finite plausible algebras for a falsifying valuation.
    Countermodel {
        formula: String,
        #[arg(long, default_value_t = algebra::MAX_ATOMS)]
        max_atoms: u32,
        #[arg(long)]
        json: bool,
    },
    /// Check a Hilbert-style proof file.
    CheckProof {
        file: PathBuf,
        #[arg(long = "premise", value_name = "FORMULA")]
        premises: Vec<String>,
    },
    /// Print every pseudo-topology on `size` points, one JSON object per line.
    EnumSpaces {
        #[arg(long)]
        size: u32,
    },
    /// Print every plausible algebra with `atoms` atoms, one JSON object per line.
    EnumAlgebras {
        #[arg(long)]
        atoms: u32,
    },
    /// Evaluate a first-order formula in a structure file.
    FolEval {
        #[arg(long, value_name = "FILE")]
        model: PathBuf,
        formula: String,
        /// Value for a free variable, as `x=2`.
        #[arg(long = "assign", value_name = "VAR=VALUE")]
        assignments: Vec<String>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Parse(#[from] plausible_core::ParseError),
    #[error("{}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(#[from] TableauError),
    #[error(transparent)]
    Output(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Budget(_) => 3,
            _ => 2,
        }
    }
}

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn formulas(texts: &[String]) -> Result<Vec<Formula>, CliError> {
    texts.iter().map(|t| Ok(parse(t)?)).collect()
}

/// Exit code for a yes/no answer.
fn verdict(yes: bool) -> u8 {
    if yes {
        0
    } else {
        1
    }
}

fn run(command: Command, out: &mut dyn Write) -> Result<u8, CliError> {
    match command {
        Command::Parse { formula, fo } => {
            if fo {
                writeln!(out, "{}", folp::parse_fo(&formula)?)?;
            } else {
                writeln!(out, "{}", parse(&formula)?)?;
            }
            Ok(0)
        }
        Command::Prove {
            formula,
            premises,
            json,
            budget,
        } => {
            let goal = parse(&formula)?;
            let premises = formulas(&premises)?;
            match Prover::new(budget).prove(&premises, &goal) {
                Ok(result) => {
                    if json {
                        writeln!(out, "{}", serde_json::to_string_pretty(&result.to_json()).expect("json"))?;
                    } else {
                        write!(out, "{}", result.render_text())?;
                    }
                    Ok(verdict(result.is_closed()))
                }
                Err(e) if json => {
                    let TableauError::ResourceLimit { budget } = e;
                    let report = json!({"verdict": "resource_limit", "budget": budget});
                    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?;
                    Ok(CliError::from(e).exit_code())
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Countermodel {
            formula,
            max_atoms,
            json,
        } => {
            let f = parse(&formula)?;
            let found = algebra::find_countermodel(&f, max_atoms).map_err(input)?;
            let found = found.map(|(algebra, valuation)| Countermodel { algebra, valuation });
            if json {
                let report = json!({"max_atoms": max_atoms, "countermodel": found});
                writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?;
            } else if let Some(cm) = &found {
                writeln!(out, "countermodel found")?;
                writeln!(out, "algebra: {}", serde_json::to_string(&cm.algebra).expect("json"))?;
                let valuation: Vec<String> =
                    cm.valuation.iter().map(|(a, v)| format!("{a}={v}")).collect();
                writeln!(out, "valuation: {}", valuation.join(" "))?;
                let value = cm.algebra.eval(&f, &cm.valuation).map_err(input)?;
                writeln!(out, "value: {value} (top is {})", cm.algebra.top())?;
            } else {
                writeln!(out, "valid up to bound: no countermodel with at most {max_atoms} atoms")?;
            }
            Ok(verdict(found.is_none()))
        }
        Command::CheckProof { file, premises } => {
            let lines = parse_proof(&read(&file)?).map_err(input)?;
            let premises = formulas(&premises)?;
            match check_proof(&lines, &premises) {
                Ok(accepted) => {
                    let kind = if accepted.theorem { "theorem" } else { "from premises" };
                    writeln!(out, "accepted ({kind}): {}", accepted.formula)?;
                    Ok(0)
                }
                Err(rejection) => {
                    writeln!(out, "rejected: {rejection}")?;
                    Ok(1)
                }
            }
        }
        Command::EnumSpaces { size } => {
            let spaces = pseudotopology::enumerate_spaces(size).map_err(input)?;
            for s in &spaces {
                writeln!(out, "{}", serde_json::to_string(s).expect("json"))?;
            }
            writeln!(out, "count: {}", spaces.len())?;
            Ok(0)
        }
        Command::EnumAlgebras { atoms } => {
            let algebras = algebra::enumerate_algebras(atoms).map_err(input)?;
            for a in &algebras {
                writeln!(out, "{}", serde_json::to_string(a).expect("json"))?;
            }
            writeln!(out, "count: {}", algebras.len())?;
            Ok(0)
        }
        Command::FolEval {
            model,
            formula,
            assignments,
        } => {
            let text = read(&model)?;
            let m: PlausibleStructure = serde_json::from_str(&text)
                .map_err(|e| input(format!("{}: {e}", model.display())))?;
            let phi = folp::parse_fo(&formula)?;
            let mut assignment = Assignment::new();
            for a in &assignments {
                let (var, value) = a
                    .split_once('=')
                    .and_then(|(v, x)| Some((v.trim(), x.trim().parse::<u32>().ok()?)))
                    .ok_or_else(|| input(format!("bad assignment `{a}`, expected VAR=VALUE")))?;
                assignment.insert(var.to_string(), value);
            }
            let holds = folp::satisfies(&m, &phi, &assignment).map_err(input)?;
            writeln!(out, "{holds}")?;
            Ok(verdict(holds))
        }
    }
}

// Formulas are trees and the parser is recursive, so work runs on a thread
// with room for deep nesting.
const STACK_BYTES: usize = 256 << 20;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let worker = std::thread::Builder::new()
        .stack_size(STACK_BYTES)
        .spawn(move || {
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            let code = match run(cli.command, &mut out) {
                Ok(code) => code,
                Err(e) => {
                    let _ = out.flush();
                    eprintln!("error: {e}");
                    e.exit_code()
                }
            };
            let _ = out.flush();
            code
        })
        .expect("spawn worker thread");
    ExitCode::from(worker.join().unwrap_or(101))
}

