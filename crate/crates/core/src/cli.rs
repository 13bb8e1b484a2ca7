//! Command-line front end: `fit`, `simulate` and `generate`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::diagnostics::{outlier_scores_with, OutlierRule, OutlierScore, Parameter, SummaryStats};
use crate::distribution::{Dataset, LomaxParams};
use crate::error::{LomaxError, Result};
use crate::priors::PriorKind;
use crate::random::rng_from_seed;
use crate::sampler::{run_chains, ChainSet, McmcConfig};
use crate::simulation::{run_study, SimReport, StudyConfig};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "LOMAX_OUT_DIR";

pub const SUMMARY_FILE: &str = "summary.json";
pub const TRACE_FILE: &str = "trace.csv";
pub const OUTLIER_FILE: &str = "outliers.csv";
pub const SIMULATION_FILE: &str = "simulation.csv";

#[derive(Debug, Parser)]
#[command(name = "lomax", version, about = "Objective-Bayesian inference for the Lomax distribution")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit a dataset (one nonnegative value per line) and write summary,
    /// trace and outlier files.
    Fit(FitArgs),
    /// Run a Monte Carlo study of bias and rmse.
    Simulate(SimulateArgs),
    /// Write a synthetic Lomax sample, one value per line.
    Generate(GenerateArgs),
}

#[derive(Debug, Args)]
pub struct McmcArgs {
    /// Total iterations per chain.
    #[arg(long)]
    pub iters: Option<usize>,
    /// Iterations discarded at the start of each chain.
    #[arg(long)]
    pub burnin: Option<usize>,
    /// Keep every k-th iteration after burn-in.
    #[arg(long)]
    pub thin: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub chains: usize,
    /// Standard deviation of the random-walk proposal for alpha.
    #[arg(long, default_value_t = 1.0)]
    pub tuning: f64,
    #[arg(long, default_value_t = 2014)]
    pub seed: u64,
    /// Output directory.
    #[arg(long, env = OUT_DIR_ENV, default_value = "lomax-out")]
    pub out: PathBuf,
}

impl McmcArgs {
    fn resolve(&self, defaults: McmcConfig) -> McmcConfig {
        McmcConfig {
            iterations: self.iters.unwrap_or(defaults.iterations),
            burn_in: self.burnin.unwrap_or(defaults.burn_in),
            thin: self.thin.unwrap_or(defaults.thin),
            chains: self.chains,
            tuning: self.tuning,
            seed: self.seed,
            ..defaults
        }
    }
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Data file.
    pub data: PathBuf,
    /// jeffreys, jeffreys-indep or reference.
    #[arg(long, default_value = "jeffreys")]
    pub prior: String,
    #[command(flatten)]
    pub mcmc: McmcArgs,
    #[arg(long)]
    pub init_alpha: Option<f64>,
    #[arg(long)]
    pub init_beta: Option<f64>,
    /// Flag observations whose λ score is below this quantile of all scores...
    #[arg(long, default_value_t = 0.05)]
    pub outlier_score_quantile: f64,
    /// ...and whose value is above this quantile of the data.
    #[arg(long, default_value_t = 0.95)]
    pub outlier_data_quantile: f64,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, default_value_t = 500)]
    pub replications: usize,
    #[arg(long, value_delimiter = ',', default_value = "50,100,150,200,300,500")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 2.0)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.5)]
    pub alpha: f64,
    /// Comma-separated priors.
    #[arg(long, value_delimiter = ',', default_value = "jeffreys,reference")]
    pub prior: Vec<String>,
    #[command(flatten)]
    pub mcmc: McmcArgs,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, default_value_t = 269)]
    pub n: usize,
    #[arg(long, default_value_t = 2.0)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.5)]
    pub alpha: f64,
    #[arg(long, default_value_t = 2014)]
    pub seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// A fully validated command, ready to run.
#[derive(Debug, Clone, PartialEq)]
pub enum RunConfig {
    Fit(FitConfig),
    Simulate { study: StudyConfig, out_dir: PathBuf },
    Generate { truth: LomaxParams, n: usize, seed: u64, output: Option<PathBuf> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitConfig {
    pub data: PathBuf,
    pub prior: PriorKind,
    pub mcmc: McmcConfig,
    pub out_dir: PathBuf,
    pub outliers: OutlierRule,
}

fn check_quantile(name: &str, q: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&q) {
        Ok(q)
    } else {
        Err(LomaxError::Config(format!("{name} must lie in [0, 1], got {q}")))
    }
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<RunConfig> {
        match &cli.command {
            Command::Fit(a) => {
                let mcmc = McmcConfig {
                    init_alpha: a.init_alpha,
                    init_beta: a.init_beta,
                    ..a.mcmc.resolve(McmcConfig::application())
                };
                mcmc.validate()?;
                Ok(RunConfig::Fit(FitConfig {
                    data: a.data.clone(),
                    prior: a.prior.parse()?,
                    mcmc,
                    out_dir: a.mcmc.out.clone(),
                    outliers: OutlierRule {
                        score_quantile: check_quantile("outlier-score-quantile", a.outlier_score_quantile)?,
                        data_quantile: check_quantile("outlier-data-quantile", a.outlier_data_quantile)?,
                    },
                }))
            }
            Command::Simulate(a) => {
                let study = StudyConfig {
                    truth: LomaxParams::new(a.beta, a.alpha)?,
                    sample_sizes: a.sizes.clone(),
                    replications: a.replications,
                    priors: a.prior.iter().map(|p| p.parse()).collect::<Result<_>>()?,
                    mcmc: a.mcmc.resolve(McmcConfig::simulation()),
                    seed: a.mcmc.seed,
                };
                study.validate()?;
                Ok(RunConfig::Simulate { study, out_dir: a.mcmc.out.clone() })
            }
            Command::Generate(a) => {
                if a.n == 0 {
                    return Err(LomaxError::Config("n must be at least 1".into()));
                }
                Ok(RunConfig::Generate {
                    truth: LomaxParams::new(a.beta, a.alpha)?,
                    n: a.n,
                    seed: a.seed,
                    output: a.output.clone(),
                })
            }
        }
    }
}

/// Parses one nonnegative number per line. Blank lines and lines starting
/// with `#` are skipped; a single non-numeric first line is taken as a CSV
/// header.
pub fn parse_dataset_str(text: &str) -> Result<Dataset> {
    let mut values = Vec::new();
    let mut header_seen = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split(',');
        let field = fields.next().unwrap_or("").trim().trim_matches('"');
        if fields.any(|f| !f.trim().is_empty()) {
            return Err(LomaxError::Parse {
                line: line_no,
                msg: format!("expected a single column, got '{line}'"),
            });
        }
        match field.parse::<f64>() {
            Ok(v) if v.is_finite() && v >= 0.0 => values.push(v),
            Ok(v) => {
                return Err(LomaxError::Parse {
                    line: line_no,
                    msg: format!("value {v} is not a nonnegative finite number"),
                })
            }
            Err(_) if values.is_empty() && !header_seen => header_seen = true,
            Err(_) => {
                return Err(LomaxError::Parse {
                    line: line_no,
                    msg: format!("cannot parse '{field}' as a number"),
                })
            }
        }
    }
    if values.is_empty() {
        return Err(LomaxError::Parse { line: 0, msg: "dataset contains no observations".into() });
    }
    Dataset::new(values)
}

pub fn parse_dataset(path: &Path) -> Result<Dataset> {
    let text = fs::read_to_string(path)
        .map_err(|e| LomaxError::Io(format!("{}: {e}", path.display())))?;
    parse_dataset_str(&text)
}

/// `x` rounded to six significant digits.
pub fn round_sig6(x: f64) -> f64 {
    if x.is_finite() && x != 0.0 {
        format!("{x:.5e}").parse().unwrap_or(x)
    } else {
        x
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamSummary {
    pub mean: f64,
    pub sd: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl From<SummaryStats> for ParamSummary {
    fn from(s: SummaryStats) -> Self {
        ParamSummary {
            mean: round_sig6(s.mean),
            sd: round_sig6(s.sd),
            ci_low: round_sig6(s.ci_low),
            ci_high: round_sig6(s.ci_high),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerParameter<T> {
    pub beta: T,
    pub alpha: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSettings {
    pub iterations: usize,
    pub burn_in: usize,
    pub thin: usize,
    pub chains: usize,
    pub tuning: f64,
}

/// Contents of `summary.json`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitSummary {
    pub prior: PriorKind,
    pub n: usize,
    pub parameters: PerParameter<ParamSummary>,
    /// `null` for a single chain.
    pub psrf: PerParameter<Option<f64>>,
    pub acceptance_rate: f64,
    pub seed: u64,
    pub mcmc: RunSettings,
}

impl FitSummary {
    pub fn from_chains(set: &ChainSet, n: usize) -> Result<Self> {
        let psrf = |p| -> Result<Option<f64>> {
            if set.chains.len() < 2 {
                Ok(None)
            } else {
                Ok(Some(round_sig6(set.psrf(p)?)))
            }
        };
        let c = &set.config;
        Ok(FitSummary {
            prior: set.kind,
            n,
            parameters: PerParameter {
                beta: set.summary(Parameter::Beta)?.into(),
                alpha: set.summary(Parameter::Alpha)?.into(),
            },
            psrf: PerParameter { beta: psrf(Parameter::Beta)?, alpha: psrf(Parameter::Alpha)? },
            acceptance_rate: round_sig6(set.acceptance_rate()?),
            seed: c.seed,
            mcmc: RunSettings {
                iterations: c.iterations,
                burn_in: c.burn_in,
                thin: c.thin,
                chains: c.chains,
                tuning: c.tuning,
            },
        })
    }
}

pub fn trace_csv(set: &ChainSet) -> String {
    let mut out = String::from("chain,draw_index,alpha,beta\n");
    for c in &set.chains {
        for (i, d) in c.draws.iter().enumerate() {
            let _ = writeln!(out, "{},{},{},{}", c.chain_index, i, d.alpha, d.beta);
        }
    }
    out
}

pub fn outlier_csv(scores: &[OutlierScore]) -> String {
    let mut out = String::from("index,x,lambda_mean,flagged\n");
    for s in scores {
        let _ = writeln!(out, "{},{},{},{}", s.index, s.x, s.lambda_mean, s.flagged);
    }
    out
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| LomaxError::Io(format!("{}: {e}", path.display())))
}

fn create_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| LomaxError::Io(format!("{}: {e}", dir.display())))
}

#[derive(Debug, Clone)]
pub struct FitOutcome {
    pub summary: FitSummary,
    pub chains: ChainSet,
    pub outliers: Vec<OutlierScore>,
}

/// Fits the configured dataset and writes `summary.json`, `trace.csv` and
/// `outliers.csv` into the output directory.
pub fn cmd_fit(cfg: &FitConfig) -> Result<FitOutcome> {
    let data = parse_dataset(&cfg.data)?;
    let chains = run_chains(&data, cfg.prior, &cfg.mcmc)?;
    let summary = FitSummary::from_chains(&chains, data.len())?;
    let outliers = outlier_scores_with(&chains, &data, cfg.outliers)?;

    create_dir(&cfg.out_dir)?;
    let json = serde_json::to_string_pretty(&summary).expect("summary serializes");
    write_file(&cfg.out_dir.join(SUMMARY_FILE), &(json + "\n"))?;
    write_file(&cfg.out_dir.join(TRACE_FILE), &trace_csv(&chains))?;
    write_file(&cfg.out_dir.join(OUTLIER_FILE), &outlier_csv(&outliers))?;
    Ok(FitOutcome { summary, chains, outliers })
}

/// Runs the study and writes `simulation.csv` into `out_dir`.
pub fn cmd_simulate(study: &StudyConfig, out_dir: &Path) -> Result<SimReport> {
    let report = run_study(study)?;
    create_dir(out_dir)?;
    write_file(&out_dir.join(SIMULATION_FILE), &report.to_csv())?;
    Ok(report)
}

pub fn cmd_generate(truth: &LomaxParams, n: usize, seed: u64) -> Result<String> {
    let d = truth.sample(&mut rng_from_seed(seed), n)?;
    let mut out = format!("# Lomax(beta={}, alpha={}) sample, n={n}, seed={seed}\n", truth.beta(), truth.alpha());
    for v in d.values() {
        let _ = writeln!(out, "{v}");
    }
    Ok(out)
}

fn print_fit(o: &FitOutcome, out_dir: &Path) {
    let s = &o.summary;
    println!("prior: {}  n: {}  seed: {}", s.prior, s.n, s.seed);
    println!("{:<6} {:>12} {:>12} {:>27}", "param", "mean", "SD", "95% CI");
    for (name, p) in [("beta", &s.parameters.beta), ("alpha", &s.parameters.alpha)] {
        let ci = format!("[{} ; {}]", p.ci_low, p.ci_high);
        println!("{:<6} {:>12} {:>12} {:>27}", name, p.mean, p.sd, ci);
    }
    let fmt = |v: Option<f64>| v.map_or("n/a".to_string(), |v| v.to_string());
    println!(
        "acceptance rate: {}  PSRF beta: {}  PSRF alpha: {}",
        s.acceptance_rate,
        fmt(s.psrf.beta),
        fmt(s.psrf.alpha)
    );
    let flagged = o.outliers.iter().filter(|s| s.flagged).count();
    println!("flagged observations: {flagged}");
    println!("artifacts written to {}", out_dir.display());
}

/// Executes a validated command, printing human-readable output.
pub fn execute(cfg: &RunConfig) -> Result<()> {
    match cfg {
        RunConfig::Fit(f) => {
            let outcome = cmd_fit(f)?;
            print_fit(&outcome, &f.out_dir);
        }
        RunConfig::Simulate { study, out_dir } => {
            let report = cmd_simulate(study, out_dir)?;
            print!("{}", report.to_table());
            println!("csv written to {}", out_dir.join(SIMULATION_FILE).display());
        }
        RunConfig::Generate { truth, n, seed, output } => {
            let text = cmd_generate(truth, *n, *seed)?;
            match output {
                Some(path) => write_file(path, &text)?,
                None => print!("{text}"),
            }
        }
    }
    Ok(())
}
