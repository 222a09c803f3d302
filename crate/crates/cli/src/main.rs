//! Command-line verifier: analyze one instance, run a suite file, or print a
//! reduced Gröbner basis.
//!
//! Exit codes: 0 all claims verified, 2 at least one claim failed,
//! 3 validation error, 4 a resource cap prevented a required check.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use rees_aci::caps::Caps;
use rees_aci::groebner::defining_ideal_oracle;
use rees_aci::instance::Instance;
use rees_aci::report::{analyze, AnalysisReport, Checks};
use rees_aci::suite::{
    run_suite, SuiteSpec, EXIT_CAPPED, EXIT_CLAIM_FAILED, EXIT_OK, EXIT_VALIDATION,
};

#[derive(Parser)]
#[command(name = "rees-aci", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArgs {
    /// Pure-power exponents a_1,...,a_m (comma separated)
    #[arg(long, value_delimiter = ',', required = true)]
    a: Vec<u64>,
    /// Mixed-generator exponents b_1,...,b_m (comma separated)
    #[arg(long, value_delimiter = ',', required = true)]
    b: Vec<u64>,
    /// Admit exploratory m = 2 instances (structural claims stay m >= 3)
    #[arg(long)]
    permissive: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification pipeline on one instance
    Analyze {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Override the S-pair budget
        #[arg(long)]
        max_spairs: Option<usize>,
        /// Skip a section: oracle, minimality, filtration, filtration-depths,
        /// homology, saturation, numbers
        #[arg(long)]
        skip: Vec<String>,
        /// Write the report (as {"report": ...}) to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock timings in the output envelope
        #[arg(long)]
        timings: bool,
    },
    /// Analyze every instance in a JSON suite file
    Suite {
        /// Suite file: an array of {"a": [...], "b": [...]} objects, or an
        /// object with "instances" plus optional "caps"/"checks" overrides
        #[arg(long, conflicts_with = "default_suite")]
        file: Option<PathBuf>,
        /// Run the built-in desk-scale suite (all valid m = 3, a_i <= 5)
        #[arg(long = "default", conflicts_with = "file")]
        default_suite: bool,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the outcome JSON to a file (stdout shows the summary)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the reduced Gröbner basis of the defining ideal
    Gb {
        #[command(flatten)]
        instance: InstanceArgs,
    },
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ReportEnvelope<'a> {
    report: &'a AnalysisReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings: Option<Timings>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Timings {
    analyze_ms: f64,
}

fn caps_from_env() -> Result<Caps, String> {
    Caps::from_env().map_err(|e| format!("{}: {e}", rees_aci::caps::CAPS_ENV_VAR))
}

fn report_exit(report: &AnalysisReport) -> i32 {
    if !report.failed_claims().is_empty() {
        EXIT_CLAIM_FAILED
    } else if report.caps_were_hit() {
        EXIT_CAPPED
    } else {
        EXIT_OK
    }
}

fn run() -> Result<i32, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { instance, max_spairs, skip, out, timings } => {
            let mut caps = caps_from_env()?;
            if let Some(n) = max_spairs {
                caps.max_spairs = n;
            }
            let mut checks = Checks::default();
            for section in &skip {
                checks.skip(section)?;
            }
            let inst = match Instance::new(instance.a, instance.b, instance.permissive) {
                Ok(inst) => inst,
                Err(err) => {
                    eprintln!("invalid instance: {err}");
                    return Ok(EXIT_VALIDATION);
                }
            };
            let started = Instant::now();
            let report = match analyze(&inst, &checks, &caps) {
                Ok(report) => report,
                Err(err) => {
                    eprintln!("computation stopped by a resource cap: {err}");
                    return Ok(EXIT_CAPPED);
                }
            };
            let elapsed = started.elapsed();
            let envelope = ReportEnvelope {
                report: &report,
                timings: timings.then_some(Timings { analyze_ms: elapsed.as_secs_f64() * 1e3 }),
            };
            let json = serde_json::to_string_pretty(&envelope).expect("serialize");
            match out {
                Some(path) => {
                    std::fs::write(&path, json + "\n").map_err(|e| e.to_string())?;
                    println!("report written to {}", path.display());
                }
                None => println!("{json}"),
            }
            for claim in report.failed_claims() {
                eprintln!(
                    "claim failed: {} — {}",
                    claim.name,
                    claim.detail.as_deref().unwrap_or("")
                );
            }
            Ok(report_exit(&report))
        }
        Command::Suite { file, default_suite, jobs, out } => {
            let caps = caps_from_env()?;
            let spec = match (file, default_suite) {
                (Some(path), _) => SuiteSpec::load(&path).map_err(|e| e.to_string())?,
                (None, true) => SuiteSpec {
                    instances: rees_aci::suite::default_desk_suite(),
                    ..Default::default()
                },
                (None, false) => return Err("pass --file PATH or --default".into()),
            };
            let outcome = run_suite(&spec, jobs.max(1), &Checks::default(), &caps);
            let json = serde_json::to_string_pretty(&outcome).expect("serialize");
            let summary = &outcome.summary;
            let human = format!(
                "instances: {}\npassed: {}\nclaim failures: {}\nvalidation errors: {}\ncapped: {}\nflagged: {}",
                summary.instances,
                summary.passed,
                summary.claim_failures,
                summary.validation_errors,
                summary.capped,
                summary.flagged,
            );
            match out {
                Some(path) => {
                    std::fs::write(&path, json + "\n").map_err(|e| e.to_string())?;
                    println!("{human}");
                    println!("outcome written to {}", path.display());
                }
                None => {
                    println!("{json}");
                    eprintln!("{human}");
                }
            }
            for failure in summary.failures.iter().take(20) {
                eprintln!("failure: {failure}");
            }
            Ok(outcome.exit_code())
        }
        Command::Gb { instance } => {
            let caps = caps_from_env()?;
            let inst = match Instance::new(instance.a, instance.b, instance.permissive) {
                Ok(inst) => inst,
                Err(err) => {
                    eprintln!("invalid instance: {err}");
                    return Ok(EXIT_VALIDATION);
                }
            };
            let basis = defining_ideal_oracle(&inst, &caps).map_err(|e| e.to_string())?;
            println!("reduced Groebner basis ({} members):", basis.len());
            for member in basis.members() {
                println!("  {member}");
            }
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct MachineMember {
                display: String,
                lead: Vec<u64>,
                trail: Option<Vec<u64>>,
            }
            let machine: Vec<MachineMember> = basis
                .members()
                .iter()
                .map(|g| MachineMember {
                    display: g.to_string(),
                    lead: g.lead().exps().to_vec(),
                    trail: g.trail().map(|t| t.exps().to_vec()),
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&machine).expect("serialize"));
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_VALIDATION as u8)
        }
    }
}
