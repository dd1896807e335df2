//! Command-line front end.
//!
//! Exit codes: 0 success / property holds, 1 property fails (or S2 refuted),
//! 2 invalid input, 3 internal invariant violation (`analyze`) or an
//! inconclusive S2 verdict (`check`), 4 differential discrepancy (`fuzz`).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use toric::differential::{run_fuzz, RandomSpec};
use toric::io::{monoid_from_file, parse_monoid_file, MonoidFile};
use toric::monoid::AffineMonoid;
use toric::normalization::is_normal;
use toric::serre::{analyze, check_r1, s2_probe, AnalysisOptions};
use toric::ToricError;

#[derive(Parser)]
#[command(
    name = "toric",
    version,
    about = "Exact normality / Serre R1 analysis of affine monoid algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Property {
    R1,
    Normal,
    S2,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a monoid description file and print the full report.
    Analyze {
        path: PathBuf,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Override the S2 probe bound.
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Check one property; the exit code encodes the verdict.
    Check {
        path: PathBuf,
        #[arg(long, value_enum)]
        property: Property,
        /// Override the S2 probe bound.
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Differential testing over seeded random monoids.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        #[arg(long, default_value_t = 6)]
        max_gens: usize,
        #[arg(long, default_value_t = 6)]
        max_coord: i64,
        /// Allow negative coordinates (monoids with units).
        #[arg(long)]
        allow_units: bool,
        /// Directory for reproducer files of failing cases.
        #[arg(long, default_value = ".")]
        dump_dir: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze {
            path,
            format,
            bound,
        } => cmd_analyze(&path, format, bound),
        Command::Check {
            path,
            property,
            bound,
        } => cmd_check(&path, property, bound),
        Command::Fuzz {
            seed,
            count,
            max_rank,
            max_gens,
            max_coord,
            allow_units,
            dump_dir,
        } => cmd_fuzz(seed, count, max_rank, max_gens, max_coord, allow_units, &dump_dir),
    };
    ExitCode::from(code)
}

fn input_error(err: &dyn std::fmt::Display) -> u8 {
    eprintln!("error: {err}");
    2
}

fn load_monoid(path: &Path) -> Result<(MonoidFile, AffineMonoid), u8> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(&e))?;
    let file = parse_monoid_file(&text).map_err(|e| input_error(&e))?;
    let monoid = monoid_from_file(&file).map_err(|e| input_error(&e))?;
    Ok((file, monoid))
}

fn cmd_analyze(path: &Path, format: Format, bound: Option<i64>) -> u8 {
    let (file, monoid) = match load_monoid(path) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let opts = AnalysisOptions {
        name: file.name.clone(),
        s2_bound: bound,
    };
    match analyze(&monoid, &opts) {
        Ok(report) => {
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                ),
            }
            0
        }
        Err(ToricError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            3
        }
        Err(e) => input_error(&e),
    }
}

fn fmt_witness<T: std::fmt::Display>(w: &Option<Vec<T>>) -> String {
    match w {
        Some(v) => {
            let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!(" (witness ({}))", inner.join(","))
        }
        None => String::new(),
    }
}

fn cmd_check(path: &Path, property: Property, bound: Option<i64>) -> u8 {
    let (_, monoid) = match load_monoid(path) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let internal = |msg: String| {
        eprintln!("internal error: {msg}");
        4
    };
    match property {
        Property::R1 => match check_r1(&monoid) {
            Ok(r1) => {
                println!("r1: {}", r1.value);
                u8::from(!r1.value)
            }
            Err(ToricError::Internal(msg)) => internal(msg),
            Err(e) => input_error(&e),
        },
        Property::Normal => match is_normal(&monoid) {
            Ok(v) => {
                println!("normal: {}{}", v.normal, fmt_witness(&v.witness));
                u8::from(!v.normal)
            }
            Err(ToricError::Internal(msg)) => internal(msg),
            Err(e) => input_error(&e),
        },
        Property::S2 => {
            if let Some(b) = bound {
                if b < 1 {
                    return input_error(&"s2 bound must be at least 1");
                }
            }
            match s2_probe(&monoid, bound.map(num_bigint::BigInt::from).as_ref()) {
                Ok(s2) if s2.refuted => {
                    println!("s2: refuted{} [bound {}]", fmt_witness(&s2.witness), s2.bound);
                    1
                }
                Ok(s2) => {
                    println!("s2: plausible [bound {}]", s2.bound);
                    3
                }
                Err(ToricError::Internal(msg)) => internal(msg),
                Err(e) => input_error(&e),
            }
        }
    }
}

fn cmd_fuzz(
    seed: u64,
    count: usize,
    max_rank: usize,
    max_gens: usize,
    max_coord: i64,
    allow_units: bool,
    dump_dir: &Path,
) -> u8 {
    let spec = RandomSpec {
        seed,
        min_rank: 1,
        max_rank,
        min_gens: 1,
        max_gens,
        max_coord,
        allow_units,
    };
    let summary = run_fuzz(&spec, count);
    for case in &summary.cases {
        if case.pass() {
            continue;
        }
        for f in case.failures() {
            eprintln!(
                "case {} FAIL {}: {} (generators {:?})",
                case.index, f.name, f.detail, case.generators
            );
        }
        let reproducer = serde_json::json!({
            "schema_version": 1,
            "name": format!("fuzz-{seed}-{}", case.index),
            "ambient_rank": case.generators.first().map_or(0, |g| g.len()),
            "generators": case.generators,
            "provenance": format!("fuzz reproducer, seed {seed}, case {}", case.index),
        });
        let file = dump_dir.join(format!("fuzz-fail-{seed}-{}.json", case.index));
        match std::fs::write(&file, serde_json::to_string_pretty(&reproducer).unwrap()) {
            Ok(()) => eprintln!("case {}: reproducer written to {}", case.index, file.display()),
            Err(e) => eprintln!("case {}: could not write reproducer: {e}", case.index),
        }
    }
    println!(
        "fuzz: {} case(s), {} passed, {} failed (seed {seed})",
        summary.cases.len(),
        summary.passed(),
        summary.failed()
    );
    if summary.failed() > 0 {
        4
    } else {
        0
    }
}
