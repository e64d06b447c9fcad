//! Command-line front end for `hsfree-core`: file formats, reports and
//! the `hsfree` subcommands.

pub mod format;
pub mod report;

mod commands;
mod verify;

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::mpsc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use hsfree_core::oracles::{OracleBudget, Problem};
use hsfree_core::width::WidthBudget;

pub use report::Report;

#[derive(Parser, Debug)]
#[command(name = "hsfree", version, about = "Forbidden-subgraph dichotomy toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Give up with exit code 3 after this many seconds.
    #[arg(long, global = true, value_name = "SECS")]
    pub timeout_secs: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArgs {
    /// Largest width searched on graphs too big for an unbounded search.
    #[arg(long, default_value_t = WidthBudget::default().max_width)]
    pub max_width: i32,
    /// Search nodes allowed to the exact solvers.
    #[arg(long, default_value_t = OracleBudget::default().max_nodes)]
    pub max_nodes: u64,
}

impl BudgetArgs {
    pub fn oracle(&self) -> OracleBudget {
        OracleBudget {
            max_nodes: self.max_nodes,
            ..OracleBudget::default()
        }
    }

    pub fn width(&self) -> WidthBudget {
        WidthBudget {
            max_width: self.max_width,
            ..WidthBudget::default()
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide the dichotomy for a family of forbidden subgraphs.
    Classify {
        family: PathBuf,
        /// Largest cyclic pattern component accepted.
        #[arg(long)]
        size_cap: Option<usize>,
    },
    /// Test whether a graph contains none of the family members as a subgraph.
    Sfree {
        graph: PathBuf,
        #[arg(long)]
        family: PathBuf,
    },
    /// Replace every edge by a path with k new internal vertices.
    Subdivide {
        graph: PathBuf,
        #[arg(short, long)]
        k: usize,
    },
    /// Exact pathwidth and/or treewidth with certificates.
    Width {
        graph: PathBuf,
        #[arg(long)]
        pathwidth: bool,
        #[arg(long)]
        treewidth: bool,
        /// Largest graph accepted.
        #[arg(long, default_value_t = WidthBudget::default().max_n)]
        max_n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Solve one problem exactly, or check a previous solve report.
    Solve {
        #[arg(long)]
        problem: Problem,
        /// Graph file, or a DIMACS CNF file for nae-3sat.
        instance: PathBuf,
        /// Terminal file (`t` lines, or `pair` lines for disjoint paths).
        #[arg(long)]
        terminals: Option<PathBuf>,
        /// List file for the colouring problems.
        #[arg(long)]
        lists: Option<PathBuf>,
        /// Validate the certificate in this solve report instead of solving.
        #[arg(long, value_name = "REPORT")]
        check: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Build a reduction gadget or witness graph.
    Gadget {
        #[command(subcommand)]
        kind: GadgetKind,
    },
    /// Check a subdivision claim on seeded random instances or one instance.
    Verify(verify::VerifyArgs),
    /// Generate a seeded random instance.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum GadgetKind {
    /// Odd cycle transversal gadget of a NAE-3SAT formula.
    Nae { cnf: PathBuf },
    /// Subcubic Steiner tree expansion of (G, T, k).
    Steiner {
        graph: PathBuf,
        #[arg(long)]
        terminals: PathBuf,
        #[arg(short, long, allow_negative_numbers = true)]
        k: i64,
    },
    /// The k*ell-subdivision of a subcubic base, for a hard family.
    Witness {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        base: PathBuf,
        #[arg(short, long, default_value_t = 1)]
        k: usize,
    },
    /// A cycle-plus-pendant graph avoiding a hard family.
    BWitness {
        #[arg(long)]
        family: PathBuf,
    },
    /// Two 3-vertex paths whose centres are joined by a path of ell edges.
    HEll { ell: usize },
}

#[derive(Subcommand, Debug)]
pub enum GenerateKind {
    /// G(n, p).
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
    },
    /// Random spanning tree plus G(n, p) edges, at most max(max-m, n-1) edges.
    Connected {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = usize::MAX)]
        max_m: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Random graph of maximum degree 3.
    Subcubic {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = usize::MAX)]
        max_m: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Random 3-CNF in which every literal occurs at most twice.
    Cnf {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        clauses: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<hsfree_core::Error> for CliError {
    fn from(e: hsfree_core::Error) -> Self {
        if e.is_budget() {
            CliError::Budget(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

/// A finished command: its report and exit code (1 when a checked
/// property failed).
pub struct Finished {
    pub report: Report,
    pub code: i32,
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let json = cli.json;
    let out = cli.out.clone();
    let result = match cli.timeout_secs {
        None => commands::dispatch(cli.command),
        Some(secs) => {
            let (tx, rx) = mpsc::channel();
            let command = cli.command;
            std::thread::spawn(move || {
                let _ = tx.send(commands::dispatch(command));
            });
            rx.recv_timeout(Duration::from_secs(secs))
                .unwrap_or_else(|_| Err(CliError::Budget(format!("timed out after {secs}s"))))
        }
    };
    match result {
        Ok(Finished { report, code }) => {
            let text = if json { report.to_json() } else { report.to_text() };
            match out {
                None => Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                },
                Some(path) => match std::fs::write(&path, text) {
                    Ok(()) => Output {
                        code,
                        stdout: String::new(),
                        stderr: String::new(),
                    },
                    Err(e) => Output {
                        code: 2,
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                    },
                },
            }
        }
        Err(e) => Output {
            code: e.code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
