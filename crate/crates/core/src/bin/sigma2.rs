use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use sigma2_k0::cohomology::line_bundle_cohomology;
use sigma2_k0::json::{parse_collection, parse_kclass, parse_twist_word, to_json};
use sigma2_k0::lattice::{euler_pairing, PicClass, Surface};
use sigma2_k0::mutation::{apply_group_word, GroupWord};
use sigma2_k0::search::{reduce_with, SearchConfig};
use sigma2_k0::twist::{normalize, twist_on_class, Sign};
use sigma2_k0::verify::{run_verify, Suite, VerifyBounds};
use sigma2_k0::{Error, Result};

/// Exact K0 calculator for Sigma2 and P1 x P1.
///
/// Values are read and written as JSON. Exit status is 0 iff nothing failed.
#[derive(Parser)]
#[command(version)]
struct Cli {
    /// Machine-readable output for reports and errors.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Euler pairing chi(v, w) of two KClass values.
    Pair { v: String, w: String },
    /// Line bundle cohomology dimensions.
    Coh {
        #[arg(long, default_value = "sigma2")]
        surface: Surface,
        /// Coefficients `a,b` of the divisor.
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
    },
    /// Spherical twist T_a (or T'_a with --inverse) on a class.
    Twist {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        class: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Applies a group word such as "s1,-s2,f3" to a collection.
    Mutate {
        #[arg(long)]
        collection: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Normal form of a twist word.
    NormalizeWord {
        #[arg(long)]
        word: String,
    },
    /// Searches for a word taking a full collection to the standard one.
    Reduce {
        #[arg(long)]
        collection: String,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        #[arg(long, default_value_t = 200_000)]
        max_expansions: usize,
    },
    /// Runs the relation and property suites.
    Verify {
        /// Comma-separated suite names; all suites when omitted.
        #[arg(long, value_delimiter = ',')]
        suites: Option<Vec<String>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include wall times in the report.
        #[arg(long)]
        timings: bool,
    },
}

fn parse_divisor(s: &str, surface: Surface) -> Result<PicClass> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Error::Json(format!("divisor must be `a,b`, got {s:?}"));
    let [a, b] = parts[..] else { return Err(bad()) };
    Ok(PicClass::new(surface, a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.cmd {
        Cmd::Pair { v, w } => {
            let chi = euler_pairing(&parse_kclass(v)?, &parse_kclass(w)?)?;
            println!("{}", json!({ "chi": chi }));
        }
        Cmd::Coh { surface, divisor } => {
            let h = line_bundle_cohomology(&parse_divisor(divisor, *surface)?);
            println!("{}", to_json(&h));
        }
        Cmd::Twist { a, class, inverse } => {
            let sign = if *inverse { Sign::Minus } else { Sign::Plus };
            println!("{}", to_json(&twist_on_class(*a, sign, &parse_kclass(class)?)?));
        }
        Cmd::Mutate { collection, word } => {
            let g: GroupWord = word.parse()?;
            println!("{}", to_json(&apply_group_word(&parse_collection(collection)?, &g)?));
        }
        Cmd::NormalizeWord { word } => {
            println!("{}", to_json(&normalize(&parse_twist_word(word)?)?));
        }
        Cmd::Reduce { collection, depth, max_expansions } => {
            let col = parse_collection(collection)?;
            let config = SearchConfig { depth: *depth, max_expansions: *max_expansions };
            match reduce_with(&col, config) {
                Ok(r) => println!("{}", json!({ "word": r.word, "expanded": r.expanded })),
                Err(Error::NotFound { depth, expanded }) => {
                    println!("{}", json!({ "not_found": { "depth": depth, "expanded": expanded } }));
                    return Ok(false);
                }
                Err(e) => return Err(e),
            }
        }
        Cmd::Verify { suites, seed, timings } => {
            let suites: Vec<Suite> = match suites {
                Some(names) => names.iter().map(|s| s.parse()).collect::<Result<_>>()?,
                None => Suite::ALL.to_vec(),
            };
            let report = run_verify(&suites, *seed, &VerifyBounds::default())?;
            if cli.json {
                println!("{}", report.to_json(*timings));
            } else if *timings {
                println!("{report}");
            } else {
                println!("{}", report.without_timings());
            }
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::FAILURE
        }
    }
}
