//! The `vca` command-line interface.
//!
//! Five subcommands over instance files: `order` evaluates one cover order,
//! `covers` lists the minimal covers of an order, `generators` tabulates
//! and classifies minimal covers up to a horizon, `decompose` prints the
//! single-facet structure, and `verify` runs the internal consistency
//! suites. Every subcommand accepts `--json`.
//!
//! Exit codes: `0` success, `1` verification failure (`verify` with a
//! failing suite), `2` usage errors — bad flags, unreadable files, parse
//! errors, or an operation applied to an instance it does not support.
//!
//! The entry points are [`run`] (testable: explicit arguments and output
//! streams) and [`run_main`] (process arguments and standard streams).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::algebra::SplitRule;
use crate::complex::{CoverVector, WeightedMulticomplex};
use crate::instance::parse_instance;
use crate::report;
use crate::structure::decompose_single_facet;
use crate::verify::run_verification;

const VERIFICATION_FAILURE: i32 = 1;
const USAGE_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "vca",
    version,
    about = "Vertex cover algebras of weighted simplicial multicomplexes",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the cover order of a vector (a number, or `inf`)
    Order {
        /// Instance file
        file: PathBuf,
        /// Entries of the vector, comma-separated, e.g. `1,0,2`
        #[arg(long, value_delimiter = ',', value_name = "ENTRIES", required = true)]
        vector: Vec<u64>,
        /// Emit JSON
        #[arg(long)]
        json: bool,
    },
    /// List the minimal covers of order k, descending lexicographically
    Covers {
        /// Instance file
        file: PathBuf,
        /// The order k
        #[arg(short = 'k', long = "degree", value_name = "K")]
        degree: u64,
        /// Emit JSON
        #[arg(long)]
        json: bool,
    },
    /// Tabulate minimal covers up to a horizon; mark each as a new
    /// generator or a product of lower degrees, with certificates
    Generators {
        /// Instance file
        file: PathBuf,
        /// Largest degree to tabulate
        #[arg(long, value_name = "K")]
        horizon: u64,
        /// Assign split degrees by support cardinality instead of weighted
        /// support (reported attempts may be invalid, and say so)
        #[arg(long = "strict-paper-split")]
        strict_paper_split: bool,
        /// Emit JSON
        #[arg(long)]
        json: bool,
    },
    /// Classify the coordinates of a single-facet instance and print the
    /// structural form of its algebra
    Decompose {
        /// Instance file
        file: PathBuf,
        /// Emit JSON
        #[arg(long)]
        json: bool,
    },
    /// Run the internal consistency suites and report per-suite results
    Verify {
        /// Instance file
        file: PathBuf,
        /// Largest order k for the cover suites
        #[arg(long, value_name = "K")]
        horizon: u64,
        /// Largest total degree |b| for the pointwise suites
        #[arg(long, value_name = "D")]
        max_degree: u64,
        /// Emit JSON
        #[arg(long)]
        json: bool,
    },
}

fn load(file: &Path) -> Result<WeightedMulticomplex, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    parse_instance(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Order { file, vector, json } => {
            let w = load(&file)?;
            let b = CoverVector::new(vector);
            let order = w.cover_order(&b).map_err(|e| e.to_string())?;
            let _ = write!(out, "{}", report::render_order(&b, order, json));
            Ok(0)
        }
        Command::Covers { file, degree, json } => {
            let w = load(&file)?;
            let set = w.minimal_covers(degree);
            let _ = write!(out, "{}", report::render_covers(&set, json));
            Ok(0)
        }
        Command::Generators {
            file,
            horizon,
            strict_paper_split,
            json,
        } => {
            let w = load(&file)?;
            let rule = if strict_paper_split {
                SplitRule::SupportCardinality
            } else {
                SplitRule::WeightedSupport
            };
            let rendered = report::render_generators(&w.algebra_generators(horizon), rule, json)
                .map_err(|e| e.to_string())?;
            let _ = write!(out, "{rendered}");
            Ok(0)
        }
        Command::Decompose { file, json } => {
            let w = load(&file)?;
            let Some((facet, weight)) = w.single_facet() else {
                return Err(crate::error::Error::SingleFacetRequired.to_string());
            };
            let decomposition = decompose_single_facet(facet, weight).map_err(|e| e.to_string())?;
            let _ = write!(
                out,
                "{}",
                report::render_decomposition(&decomposition, json)
            );
            Ok(0)
        }
        Command::Verify {
            file,
            horizon,
            max_degree,
            json,
        } => {
            let w = load(&file)?;
            let result = run_verification(&w, horizon, max_degree).map_err(|e| e.to_string())?;
            let _ = write!(out, "{}", report::render_verification(&result, json));
            Ok(if result.all_passed() {
                0
            } else {
                VERIFICATION_FAILURE
            })
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are rendered by clap as "errors" with a
            // zero exit code; real usage errors exit with 2.
            let rendered = e.render();
            if e.exit_code() == 0 {
                let _ = write!(out, "{rendered}");
                return 0;
            }
            let _ = write!(err, "{rendered}");
            return USAGE_ERROR;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            USAGE_ERROR
        }
    }
}

/// [`run`] on the process arguments and standard streams.
pub fn run_main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
