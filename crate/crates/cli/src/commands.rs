//! Argument definitions and subcommand drivers.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ksub_core::generate::{generate, Family, GeneratorConfig};
use ksub_core::trials::{eq2_trials, lemma1_trials, lemma1_trials_on, wolsey_trials};
use ksub_core::{
    exact_bruteforce, exact_unconstrained, knapsack_greedy, unconstrained_greedy, validate_lattice_ksubmodular,
    validate_monotone, validate_orthant_submodular, EvalCounter, OracleSpec, Report, Verdict,
};
use serde::Serialize;

use crate::bench::{self, BenchConfig, BenchFamily, BenchSummary};
use crate::error::{exit, CliError, Result};
use crate::io::{emit, instance_json, read_instance, Problem};
use crate::report::{csv_string, is_csv_path, ReportRow};

const AFTER_HELP: &str = "Exhaustive operations refuse spaces with more than (k+1)^n = 1000000 assignments. \
Setting KSUB_EVAL_CAP raises that cap at your own risk.\n\
Exit codes: 0 success, 1 check or validation failure, 2 input error, 3 enumeration cap exceeded.";

#[derive(Debug, Parser)]
#[command(name = "ksub", version, about = "Monotone k-submodular maximization under a knapsack constraint")]
#[command(after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one algorithm on an instance file.
    Solve(SolveArgs),
    /// Write a seeded random instance.
    Generate(GenerateArgs),
    /// Exhaustively check monotonicity or k-submodularity of an instance's oracle.
    Validate(ValidateArgs),
    /// Run a randomized inequality checker.
    Check(CheckArgs),
    /// Solve a seeded batch with the knapsack greedy and exhaustive search.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    UnconstrainedGreedy,
    KnapsackGreedy,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Orthant,
    Monotone,
    Lattice,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Checker {
    Lemma1,
    Wolsey,
    Eq2,
}

#[derive(Debug, clap::Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[arg(long, value_enum)]
    pub algorithm: AlgorithmArg,
    /// Also compute the optimum by exhaustive search and report the ratio.
    #[arg(long)]
    pub with_opt: bool,
    /// Report file; `.csv` writes one CSV row, anything else JSON.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// coverage, separable_sum or tabular.
    #[arg(long, default_value = "coverage", value_parser = parse_family)]
    pub family: Family,
    #[arg(long, default_value_t = 10)]
    pub cost_max: u64,
    #[arg(long, default_value_t = 0.5)]
    pub budget_fraction: f64,
    /// Defaults to stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct ValidateArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[arg(long, value_enum)]
    pub mode: Mode,
}

#[derive(Debug, clap::Args)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub checker: Checker,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    /// For lemma1: draw the pairs over this instance's oracle instead of fresh random oracles.
    #[arg(long)]
    pub instance: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, default_value_t = 4)]
    pub n_min: usize,
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    #[arg(long, default_value_t = 2)]
    pub k_min: usize,
    #[arg(long, default_value_t = 3)]
    pub k_max: usize,
    /// coverage, separable_sum, tabular, or mixed (alternating coverage and separable_sum).
    #[arg(long, default_value = "mixed", value_parser = parse_bench_family)]
    pub family: BenchFamily,
    #[arg(long, default_value_t = 10)]
    pub cost_max: u64,
    /// Cycled through by instance index.
    #[arg(long, value_delimiter = ',', default_value = "0.3,0.5,0.8")]
    pub budget_fractions: Vec<f64>,
    /// Fill the millis column. Timed output is not reproducible.
    #[arg(long)]
    pub timing: bool,
    /// CSV destination; defaults to stdout, with the summary on stderr.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: ksub_core::Error| e.to_string())
}

fn parse_bench_family(s: &str) -> Result<BenchFamily, String> {
    s.parse().map_err(|e: CliError| e.to_string())
}

/// Parses `args` (including the program name), runs the command, and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::INPUT } else { exit::OK };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Solve(a) => solve(&a),
        Command::Generate(a) => generate_cmd(&a),
        Command::Validate(a) => validate(&a),
        Command::Check(a) => check(&a),
        Command::Bench(a) => bench_cmd(&a),
    }
}

fn json_line<S: Serialize>(value: &S) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn load(path: &Path) -> Result<Problem> {
    let p = read_instance(path)?;
    if let OracleSpec::Tabular(t) = &p.oracle {
        if *t.offset() != 0.0 {
            eprintln!("note: table normalized by subtracting f(empty) = {}", t.offset());
        }
    }
    Ok(p)
}

pub fn solve_problem(p: &Problem, algorithm: AlgorithmArg, with_opt: bool) -> Result<Report> {
    let mut counter = EvalCounter::new();
    let report = match algorithm {
        AlgorithmArg::UnconstrainedGreedy => unconstrained_greedy(&p.oracle, &mut counter)?,
        AlgorithmArg::KnapsackGreedy => knapsack_greedy(&p.oracle, &p.instance, &mut counter)?,
        AlgorithmArg::Exact => exact_bruteforce(&p.oracle, &p.instance, &mut counter)?,
    };
    if !with_opt {
        return Ok(report);
    }
    let opt = match algorithm {
        AlgorithmArg::UnconstrainedGreedy => exact_unconstrained(&p.oracle, &mut EvalCounter::new())?,
        _ => exact_bruteforce(&p.oracle, &p.instance, &mut EvalCounter::new())?,
    };
    Ok(report.with_optimum(opt.value))
}

fn solve(a: &SolveArgs) -> Result<i32> {
    let p = load(&a.instance)?;
    let report = solve_problem(&p, a.algorithm, a.with_opt)?;
    let json = json_line(&report);
    emit(None, &json)?;
    if let Some(out) = &a.output {
        if is_csv_path(out) {
            let name = a.instance.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
            let row = ReportRow::new(name, p.instance.n(), p.instance.k(), p.instance.budget(), &report);
            emit(Some(out), &csv_string(&[row])?)?;
        } else {
            emit(Some(out), &json)?;
        }
    }
    Ok(exit::OK)
}

fn generate_cmd(a: &GenerateArgs) -> Result<i32> {
    let cfg = GeneratorConfig {
        n: a.n,
        k: a.k,
        family: a.family,
        cost_max: a.cost_max,
        budget_fraction: a.budget_fraction,
    };
    let p: Problem = generate(a.seed, &cfg)?.into();
    emit(a.output.as_deref(), &instance_json(&p))?;
    Ok(exit::OK)
}

#[derive(Serialize)]
struct ValidateOutput {
    mode: Mode,
    #[serde(flatten)]
    verdict: Verdict,
}

fn validate(a: &ValidateArgs) -> Result<i32> {
    let p = load(&a.instance)?;
    let verdict = match a.mode {
        Mode::Monotone => validate_monotone(&p.oracle)?,
        Mode::Orthant => validate_orthant_submodular(&p.oracle)?,
        Mode::Lattice => validate_lattice_ksubmodular(&p.oracle)?,
    };
    let passed = verdict.passed;
    emit(None, &json_line(&ValidateOutput { mode: a.mode, verdict }))?;
    Ok(if passed { exit::OK } else { exit::FAILED })
}

fn check(a: &CheckArgs) -> Result<i32> {
    if a.trials == 0 {
        return Err(CliError::Input("--trials must be at least 1".into()));
    }
    if a.instance.is_some() && a.checker != Checker::Lemma1 {
        return Err(CliError::Input("--instance is only supported by the lemma1 checker".into()));
    }
    let (passed, json) = match a.checker {
        Checker::Lemma1 => {
            let summary = match &a.instance {
                Some(path) => lemma1_trials_on(&load(path)?.oracle, a.seed, a.trials)?,
                None => lemma1_trials(a.seed, a.trials)?,
            };
            (summary.all_passed(), json_line(&summary))
        }
        Checker::Wolsey => {
            let summary = wolsey_trials(a.seed, a.trials)?;
            (summary.all_passed(), json_line(&summary))
        }
        Checker::Eq2 => {
            let summary = eq2_trials(a.seed, a.trials)?;
            (summary.all_passed(), json_line(&summary))
        }
    };
    emit(None, &json)?;
    Ok(if passed { exit::OK } else { exit::FAILED })
}

fn bench_cmd(a: &BenchArgs) -> Result<i32> {
    let cfg = BenchConfig {
        seed: a.seed,
        count: a.count,
        n_range: (a.n_min, a.n_max),
        k_range: (a.k_min, a.k_max),
        family: a.family,
        cost_max: a.cost_max,
        budget_fractions: a.budget_fractions.clone(),
    };
    let results = bench::run(&cfg)?;
    let csv = csv_string(&bench::rows(&results, a.timing))?;
    let summary = BenchSummary::of(&results);
    match &a.output {
        Some(path) => {
            emit(Some(path), &csv)?;
            println!("{}", summary.line());
        }
        None => {
            emit(None, &csv)?;
            eprintln!("{}", summary.line());
        }
    }
    Ok(if summary.passed() { exit::OK } else { exit::FAILED })
}
