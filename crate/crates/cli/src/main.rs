//! `metric-lie`: build, analyze, classify and reduce metric Lie algebras,
//! and run the verification suites.
//!
//! Exit codes: 0 success, 2 usage or input error, 3 violated internal
//! invariant (a structural claim failed on concrete data).

mod document;
mod names;
mod report;
mod verify;

use clap::{Parser, Subcommand};
use document::AlgebraDocument;
use metric_lie::error::LieError;
use metric_lie::fitting::DEFAULT_FITTING_SEED;
use metric_lie::forms::{form_signature, index_and_relative_index, MetricLieAlgebra};
use metric_lie::reduction::complete_reduction;
use names::BuildParams;
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "metric-lie",
    version,
    about = "Exact computations with metric Lie algebras over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog family and print its JSON document.
    Build {
        /// Family name (abelian, heisenberg, osc, osc-nilpotent, osc-alpha,
        /// cotangent, sl2, so3, so3-pair, graph-radical, graph-radical-torus,
        /// euclidean).
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        /// Number of negative signs in the Hermitian signature (heisenberg).
        #[arg(long)]
        neg: Option<usize>,
        /// Nilpotency steps for osc-nilpotent (2 or 3).
        #[arg(long)]
        steps: Option<usize>,
        /// Comma-separated rational tuple (osc-alpha).
        #[arg(long)]
        alpha1: Option<String>,
        #[arg(long)]
        alpha2: Option<String>,
        /// Use the extended osc-alpha variant with the extra W direction.
        #[arg(long)]
        one: bool,
        /// Base algebra for cotangent (sl2, so3, line).
        #[arg(long)]
        base: Option<String>,
        /// Form choice for so3 (neg-killing, killing, split).
        #[arg(long)]
        form: Option<String>,
        /// Gram choice for euclidean (zero, identity).
        #[arg(long)]
        gram: Option<String>,
        /// Extra factors as name:key=value:... specs; the result is the
        /// orthogonal direct product.
        #[arg(long = "with")]
        with: Vec<String>,
    },
    /// Analyze a document (file path or stdin) and print the report.
    Analyze {
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Classify a document by relative index.
    Classify {
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run the complete isotropic reduction of a solvable document.
    Reduce {
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite (thmA, thmB, thmC, thmD, prop42, appendixA,
    /// euclid, or all).
    Verify { suite: String },
}

enum Failure {
    Usage(String),
    Breach(String),
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Failure {
        match e {
            LieError::InvariantViolation(msg) => Failure::Breach(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome = std::panic::catch_unwind(|| run(cli));
    let code = match outcome {
        Ok(Ok(())) => 0,
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            2
        }
        Ok(Err(Failure::Breach(msg))) => {
            eprintln!("invariant violation: {msg}");
            3
        }
        Err(_) => {
            eprintln!("invariant violation: internal consistency check panicked");
            3
        }
    };
    std::process::exit(code);
}

fn seed_from_env() -> u64 {
    std::env::var("METRIC_LIE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_FITTING_SEED)
}

fn read_input(input: &Option<PathBuf>) -> Result<MetricLieAlgebra, Failure> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let doc = AlgebraDocument::parse(&text).map_err(Failure::Usage)?;
    doc.to_metric().map_err(Failure::Usage)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Command::Build {
            name,
            n,
            s,
            neg,
            steps,
            alpha1,
            alpha2,
            one,
            base,
            form,
            gram,
            with,
        } => {
            let params = BuildParams {
                n,
                s,
                neg,
                steps,
                alpha1,
                alpha2,
                one,
                base,
                form,
                gram,
            };
            let (m, meta) =
                names::build_with_factors(&name, &params, &with).map_err(Failure::Usage)?;
            let doc = AlgebraDocument::from_metric(&m, meta);
            println!("{}", doc.render());
            Ok(())
        }
        Command::Analyze { input, json } => {
            let m = read_input(&input)?;
            let rep = report::analyze(&m);
            if json {
                println!("{}", serde_json::to_string_pretty(&rep.to_json()).unwrap());
            } else {
                print!("{}", rep.to_text());
            }
            Ok(())
        }
        Command::Classify { input, json } => {
            let m = read_input(&input)?;
            let rep = metric_lie::classify::classify_low_index(&m)?;
            if json {
                let out = json!({
                    "relative_index": rep.ell,
                    "case": rep.case_label.to_string(),
                    "compact_dim": rep.witnesses.compact.dim(),
                    "noncompact_dim": rep.witnesses.noncompact.dim(),
                    "radical_dim": rep.witnesses.radical.dim(),
                    "metric_radical_dim": rep.witnesses.metric_radical.dim(),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("{}", rep.case_label);
            }
            Ok(())
        }
        Command::Reduce { input, json } => {
            let m = read_input(&input)?;
            let trace = complete_reduction(&m)?;
            if json {
                let steps: Vec<_> = trace
                    .steps
                    .iter()
                    .map(|s| {
                        json!({
                            "ideal_dim": s.isotropic_ideal.dim(),
                            "quotient_dim": s.quotient.dim(),
                            "quotient_index": index_and_relative_index(&s.quotient).0,
                        })
                    })
                    .collect();
                let last = trace.steps.last().map(|s| &s.quotient).unwrap_or(&m);
                let out = json!({
                    "steps": steps,
                    "final_dim": last.dim(),
                    "final_abelian": last.algebra.derived_subalgebra().is_zero(),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                if trace.steps.is_empty() {
                    println!("already abelian; nothing to reduce");
                }
                for (i, s) in trace.steps.iter().enumerate() {
                    let (mu, _) = index_and_relative_index(&s.quotient);
                    println!(
                        "step {}: reduced by a {}-dimensional totally isotropic ideal -> dim {}, index {}",
                        i + 1,
                        s.isotropic_ideal.dim(),
                        s.quotient.dim(),
                        mu
                    );
                }
                if let Some(s) = trace.steps.last() {
                    let sig = form_signature(&s.quotient);
                    println!(
                        "final: abelian of dim {}, signature ({}, {}, {})",
                        s.quotient.dim(),
                        sig.positives,
                        sig.negatives,
                        sig.zeros
                    );
                }
            }
            Ok(())
        }
        Command::Verify { suite } => {
            let seed = seed_from_env();
            let names: Vec<&str> = if suite == "all" {
                verify::SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            for n in &names {
                if !verify::SUITES.contains(n) {
                    let msg = verify::run_suite(n, seed)
                        .err()
                        .unwrap_or_else(|| format!("unknown suite {n:?}"));
                    return Err(Failure::Usage(msg));
                }
            }
            let mut failures = 0usize;
            let results: Vec<(String, verify::SuiteResult)> = if names.len() == 1 {
                vec![(
                    names[0].to_string(),
                    verify::run_suite(names[0], seed).map_err(Failure::Usage)?,
                )]
            } else {
                // independent suites over immutable catalog data; fan out
                std::thread::scope(|scope| {
                    let handles: Vec<_> = names
                        .iter()
                        .map(|n| {
                            let n = n.to_string();
                            scope.spawn(move || {
                                let r = verify::run_suite(&n, seed).expect("validated name");
                                (n, r)
                            })
                        })
                        .collect();
                    handles.into_iter().map(|h| h.join().unwrap()).collect()
                })
            };
            for (name, result) in results {
                println!("== suite {name}");
                for line in &result.lines {
                    println!("{line}");
                }
                if result.failures > 0 {
                    if let Some(first) = result.lines.iter().find(|l| l.starts_with("FAIL")) {
                        eprintln!("suite {name}: {first}");
                    }
                }
                failures += result.failures;
            }
            if failures > 0 {
                Err(Failure::Breach(format!("{failures} assertion(s) failed")))
            } else {
                Ok(())
            }
        }
    }
}
