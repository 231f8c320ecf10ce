//! `facevec` — exact face-vector computations for cyclic and ordinary
//! polytopes, triangle renderings, verification sweeps and a brute-force
//! oracle.
//!
//! Exit codes: 0 = success, 1 = a mathematical check failed (witness
//! printed), 2 = usage or parameter error. The two failure kinds are never
//! conflated.

mod report;
mod selftest;
mod sweep;
mod triangle;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use facevec::{gale_face_census, gale_facets, cyclic_f};

/// Outcome of a subcommand, mapped onto the exit-code contract.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or invalid parameters (exit 2).
    Usage(String),
    /// A mathematical check failed (exit 1); details were already printed.
    Check(String),
}

impl From<facevec::Error> for Failure {
    fn from(e: facevec::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("io error: {e}"))
    }
}

pub type CliResult = Result<(), Failure>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "facevec",
    version,
    about = "Exact f- and h-vectors of cyclic and ordinary polytopes, with log-concavity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FormatArg {
    /// Output format (env FACEVEC_FORMAT overrides the default)
    #[arg(long, value_enum, env = "FACEVEC_FORMAT", default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// h-vector, f-vector and log-concavity of the cyclic polytope
    Cyclic {
        /// Dimension
        #[arg(long)]
        d: u32,
        /// Number of vertices (must exceed the dimension)
        #[arg(long)]
        vertices: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// f-vector of the ordinary polytope P(d, k, n), both routes checked
    Ordinary {
        /// Dimension (>= 5)
        #[arg(long)]
        d: u32,
        /// Characteristic (d <= k <= n)
        #[arg(long)]
        k: u32,
        /// Vertex parameter: the polytope has n + 1 vertices
        #[arg(long)]
        n: u32,
        /// Reject d = 5 for the odd-dimension closed form
        #[arg(long)]
        strict: bool,
        /// Also print the u, v, c border vectors and the cyclic h-vector
        #[arg(long)]
        verbose: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Render a bordered Pascal triangle row by row
    Triangle {
        /// f-triangle of an ordinary polytope: d,k,n
        #[arg(long, value_name = "D,K,N", group = "spec", required = true)]
        ordinary: Option<String>,
        /// Correction triangle of (d, k): the run of u against zero borders
        #[arg(long, value_name = "D,K", group = "spec")]
        c: Option<String>,
        /// Run a border vector from scratch: comma-separated entries
        #[arg(long, value_name = "B0,B1,...", group = "spec")]
        f: Option<String>,
        /// Extend a row by borders: "a0,a1,...:b0,b1,..."
        #[arg(long, value_name = "ROW:BORDERS", group = "spec")]
        t: Option<String>,
    },
    /// Evaluate a (d, k, n) grid and verify the selected checks
    Sweep {
        /// Dimensions to sweep, comma separated (each >= 5)
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u32>,
        /// Largest characteristic k
        #[arg(long)]
        kmax: u32,
        /// Largest vertex parameter n (>= kmax)
        #[arg(long)]
        nmax: u32,
        /// Checks to run: all, log-concave, unimodal, route, border
        #[arg(long, value_delimiter = ',', default_value = "all")]
        check: Vec<sweep::CheckKind>,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
        /// Write results here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Result format: csv (long form) or json
        #[arg(long, value_enum, env = "FACEVEC_FORMAT", default_value = "csv")]
        format: Format,
        /// Emit newline-delimited JSON, one document per grid point
        #[arg(long)]
        stream: bool,
    },
    /// Brute-force face census via the evenness condition, checked against
    /// the closed-form f-vector
    Oracle {
        /// Number of vertices (capped at 16)
        #[arg(long)]
        vertices: u32,
        /// Dimension (2 <= d < vertices)
        #[arg(long)]
        d: u32,
        /// Also print the facet list, one sorted tuple per line
        #[arg(long)]
        facets: bool,
        /// Regenerate the frozen facet files for the tested grid into DIR
        #[arg(long, value_name = "DIR")]
        golden: Option<PathBuf>,
    },
    /// Golden pipeline plus reduced property suites; exit 0 on success
    Selftest {
        /// Seed for the random generators
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Cyclic { d, vertices, format } => report::cmd_cyclic(d, vertices, format.format),
        Command::Ordinary {
            d,
            k,
            n,
            strict,
            verbose,
            format,
        } => report::cmd_ordinary(d, k, n, strict, verbose, format.format),
        Command::Triangle { ordinary, c, f, t } => triangle::cmd_triangle(ordinary, c, f, t),
        Command::Sweep {
            d,
            kmax,
            nmax,
            check,
            jobs,
            output,
            format,
            stream,
        } => sweep::cmd_sweep(sweep::SweepArgs {
            d_set: d,
            k_max: kmax,
            n_max: nmax,
            checks: check,
            jobs,
            output,
            format,
            stream,
        }),
        Command::Oracle {
            vertices,
            d,
            facets,
            golden,
        } => cmd_oracle(vertices, d, facets, golden),
        Command::Selftest { seed } => selftest::cmd_selftest(seed),
    }
}

fn cmd_oracle(vertices: u32, d: u32, facets: bool, golden: Option<PathBuf>) -> CliResult {
    if let Some(dir) = golden {
        return regenerate_golden(&dir);
    }
    let facet_set = gale_facets(vertices, d)?;
    let census = gale_face_census(vertices, d)?;
    let formula = cyclic_f(d, vertices)?;
    if facets {
        print!("{}", facet_set.to_lines());
    }
    println!("census   = {}", census.counts());
    println!("cyclic_f = {formula}");
    if census.counts() == &formula {
        println!("MATCH");
        Ok(())
    } else {
        println!("MISMATCH");
        Err(Failure::Check(format!(
            "census disagrees with formula at V={vertices} d={d}"
        )))
    }
}

/// Rewrite the golden facet files for the whole tested range. Output is
/// deterministic: lexicographic facets, newline-delimited sorted tuples.
fn regenerate_golden(dir: &std::path::Path) -> CliResult {
    std::fs::create_dir_all(dir)?;
    let mut written = 0;
    for d in 3..=9u32 {
        for vertices in d + 1..=13 {
            let facet_set = gale_facets(vertices, d)?;
            let path = dir.join(format!("facets_v{vertices}_d{d}.txt"));
            std::fs::write(&path, facet_set.to_lines())?;
            written += 1;
        }
    }
    println!("wrote {written} facet files to {}", dir.display());
    Ok(())
}
