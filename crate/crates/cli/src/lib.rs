//! Command-line front end: argument parsing, input loading and dispatch.

mod commands;
pub mod report;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use sha2::{Digest, Sha256};

pub use report::{Check, Report, Status};

/// Exit code for a successful run.
pub const EXIT_OK: u8 = 0;
/// Exit code when an asserted bound or consistency check fails.
pub const EXIT_FAILURE: u8 = 1;
/// Exit code for malformed input or invalid arguments.
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "cubeideal", version, about = "Cube-ideal set-systems, ideal clutters and their graph applications")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Input file, or `-` for standard input.
    #[arg(short, long, global = true)]
    pub input: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Connectivity parameter λ.
    #[arg(long, global = true)]
    pub lambda: Option<f64>,
    /// Face-dimension ratio β.
    #[arg(long, global = true)]
    pub beta: Option<f64>,
    /// Seed for randomized trials.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of randomized trials.
    #[arg(long, global = true, default_value_t = 100)]
    pub trials: usize,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Dimension cap for set-system input.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Set-system invariants.
    #[command(subcommand)]
    Setsys(SetsysCmd),
    /// Polyhedral checks on cube-ideal set-systems.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Clutter constructions and idealness.
    #[command(subcommand)]
    Clutter(ClutterCmd),
    /// Graph applications.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Analytic bounds and theorem verification.
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// Writes a built-in fixture.
    Gen(GenArgs),
}

#[derive(Debug, Subcommand)]
pub enum SetsysCmd {
    /// VC dimension with the Sauer–Shelah check.
    Vcdim,
    /// Connectivity and a minimal list of valid GSC inequalities.
    Connectivity,
    /// Points tight for every valid 2-GSC inequality.
    Core,
    /// The 2-cover graph and its components.
    CoverGraph,
    /// XORs every point with a fixed vector.
    Twist {
        /// Bitstring to XOR into every point.
        #[arg(long)]
        point: String,
    },
    /// Restriction to a set of coordinates.
    Project {
        /// Comma-separated 1-based coordinates.
        #[arg(long, value_delimiter = ',', required = true)]
        indices: Vec<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum PolyCmd {
    /// Decides cube-idealness from the vertices of the GSC description.
    Check,
    /// Minimal face of the hull containing a point.
    Face {
        /// Comma-separated rationals such as `1/2,1/2,1/2`.
        #[arg(long)]
        point: String,
    },
    /// Containment of the `[1/λ, 1 − 1/λ]` subcube in the hull.
    Subcube,
}

#[derive(Debug, Subcommand)]
pub enum ClutterCmd {
    /// Clutter of minimal covers.
    Blocker,
    /// Covering number and τ-cover-minimality.
    Tau,
    /// Idealness with a fractional vertex as witness.
    Ideal,
    /// Reads a set-system and writes its cuboid.
    Cuboid,
    /// Members meeting every minimum cover once.
    Core,
    /// Deletion and contraction minor.
    Minor {
        /// Comma-separated 1-based elements to delete.
        #[arg(long, value_delimiter = ',')]
        delete: Vec<usize>,
        /// Comma-separated 1-based elements to contract.
        #[arg(long, value_delimiter = ',')]
        contract: Vec<usize>,
    },
    /// Seeded width-length trials.
    Widthlength,
    /// Rainbow covering number.
    Mu,
}

#[derive(Debug, Subcommand)]
pub enum GraphCmd {
    /// Strongly connected reorientations as a set-system.
    Scr {
        /// Bitstring over the edges; bit `e` set orients edge `e` second to first.
        #[arg(long)]
        reference: Option<String>,
    },
    /// Counts strong orientations against the ear and rainbow bounds.
    OrientCount,
    /// Graph of pairs of edges sharing a 2-pseudo-dicut.
    Pdg,
    /// Tight dijoins of a bipartite source-sink digraph.
    Dijoins,
    /// Perfect matchings, minimum odd cuts and their rank.
    Rgraph {
        /// Regularity; defaults to the degree of the first vertex.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Builds the staircase 3-graph on `k` vertices.
    Staircase {
        #[arg(long)]
        k: usize,
    },
    /// Cycle space as a set-system.
    Cyclespace,
    /// Ear decomposition length.
    Ears,
}

#[derive(Debug, Subcommand)]
pub enum BoundsCmd {
    /// The rate functions f, g and h.
    Rates {
        /// Range `a..b` of λ values written as a whitespace-separated table.
        #[arg(long)]
        sweep: Option<String>,
    },
    /// Explicit Barvinok constant and γ̂ at fixed or published parameters.
    Gamma {
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long)]
        rho: Option<f64>,
    },
    /// Maximizes γ over ε and ρ.
    Optimize {
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Face-bound constant θ.
    Theta,
    /// Binary entropy.
    Entropy {
        value: f64,
        /// Evaluates the inverse on `[0, 1]` instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Evaluates every applicable bound on a cube-ideal set-system.
    Verify {
        /// Skips vertex enumeration for systems cube-ideal by construction.
        #[arg(long)]
        assume_cube_ideal: bool,
    },
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// One of example-5.1 (alias chain), cycle-space-K4, cycle-space-C3,
    /// cycle-space-Petersen, staircase, K22-dijoin.
    pub fixture: String,
    /// Dimension for example-5.1.
    #[arg(long)]
    pub n: Option<usize>,
    /// Vertex count for staircase.
    #[arg(long)]
    pub k: Option<usize>,
}

/// A command failure, split by exit code.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Failure(String),
}

impl From<cubeideal::Error> for CliError {
    fn from(e: cubeideal::Error) -> Self {
        match e {
            cubeideal::Error::Internal(_) => CliError::Failure(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn input_error(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

/// Result of a command: a JSON report or a plain-text artifact.
#[derive(Debug)]
pub enum Output {
    Report(Report),
    Text(String),
}

/// The raw input and its SHA-256 digest.
pub struct Input {
    pub text: String,
    pub digest: String,
}

impl Common {
    pub fn read_input(&self) -> CliResult<Input> {
        let path = self.input.as_ref().ok_or_else(|| input_error("this command needs --input"))?;
        let mut bytes = Vec::new();
        if path.as_os_str() == "-" {
            std::io::stdin()
                .read_to_end(&mut bytes)
                .map_err(|e| input_error(format!("reading standard input: {e}")))?;
        } else {
            bytes = std::fs::read(path).map_err(|e| input_error(format!("reading {}: {e}", path.display())))?;
        }
        let digest = hex::encode(Sha256::digest(&bytes));
        let text = String::from_utf8(bytes).map_err(|_| input_error("input is not UTF-8"))?;
        Ok(Input { text, digest })
    }

    /// `--lambda` as an integer at least `min`.
    pub fn lambda_int(&self, min: u64) -> CliResult<Option<u64>> {
        match self.lambda {
            None => Ok(None),
            Some(l) if l.fract() == 0.0 && l >= min as f64 && l <= u64::MAX as f64 => Ok(Some(l as u64)),
            Some(l) => Err(input_error(format!("--lambda must be an integer ≥ {min}, got {l}"))),
        }
    }
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> CliResult<Output> {
    if let Some(t) = cli.common.threads {
        // A pool built earlier in the process keeps its size.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    if let Some(n) = cli.common.max_n {
        std::env::set_var("CUBEIDEAL_MAX_N", n.to_string());
    }
    let c = &cli.common;
    match &cli.command {
        Command::Setsys(cmd) => commands::setsys::run(c, cmd),
        Command::Poly(cmd) => commands::poly::run(c, cmd),
        Command::Clutter(cmd) => commands::clutter::run(c, cmd),
        Command::Graph(cmd) => commands::graph::run(c, cmd),
        Command::Bounds(cmd) => commands::bounds::run(c, cmd),
        Command::Gen(args) => commands::gen::run(args),
    }
}

fn emit(common: &Common, output: &Output) -> std::io::Result<()> {
    let text = match output {
        Output::Report(r) => {
            let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
            s.push('\n');
            s
        }
        Output::Text(t) => t.clone(),
    };
    match &common.output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

/// Parses arguments, runs the command and returns the exit code.
pub fn main_with<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(output) => {
            if let Err(e) = emit(&cli.common, &output) {
                eprintln!("error: writing output: {e}");
                return EXIT_INPUT;
            }
            match output {
                Output::Report(r) if r.failed() => EXIT_FAILURE,
                _ => EXIT_OK,
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            EXIT_FAILURE
        }
    }
}
