//! Monte Carlo study harness: simulate replicate datasets from known
//! parameters, fit each one, and aggregate bias and rmse of the posterior
//! mean estimates.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::diagnostics::{Parameter, SummaryStats};
use crate::distribution::{Dataset, LomaxParams};
use crate::error::{LomaxError, Result};
use crate::priors::PriorKind;
use crate::random::{derive_seed, rng_from_seed};
use crate::sampler::{run_chains, McmcConfig};

#[derive(Debug, Clone, PartialEq)]
pub struct StudyConfig {
    pub truth: LomaxParams,
    pub sample_sizes: Vec<usize>,
    pub replications: usize,
    pub priors: Vec<PriorKind>,
    pub mcmc: McmcConfig,
    pub seed: u64,
}

impl StudyConfig {
    /// β = 2, α = 1.5, n ∈ {50, 100, 150, 200, 300, 500}, 500 replicates,
    /// dependent Jeffreys and reference priors.
    pub fn standard() -> Self {
        StudyConfig {
            truth: LomaxParams::new(2.0, 1.5).expect("valid"),
            sample_sizes: vec![50, 100, 150, 200, 300, 500],
            replications: 500,
            priors: vec![PriorKind::JeffreysDependent, PriorKind::Reference],
            mcmc: McmcConfig::simulation(),
            seed: 2014,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.replications == 0 {
            return Err(LomaxError::Config("replications must be at least 1".into()));
        }
        if self.sample_sizes.is_empty() || self.priors.is_empty() {
            return Err(LomaxError::Config("need at least one sample size and one prior".into()));
        }
        if let Some(n) = self.sample_sizes.iter().find(|&&n| n < 2) {
            return Err(LomaxError::Config(format!("sample sizes must be at least 2, got {n}")));
        }
        self.mcmc.validate()
    }
}

/// What one replicate contributes to the report.
#[derive(Debug, Clone, PartialEq)]
pub struct ReplicateFit {
    pub beta: SummaryStats,
    pub alpha: SummaryStats,
    pub acceptance_rate: f64,
    pub psrf_beta: f64,
    pub psrf_alpha: f64,
}

impl ReplicateFit {
    fn summary(&self, p: Parameter) -> &SummaryStats {
        match p {
            Parameter::Beta => &self.beta,
            Parameter::Alpha => &self.alpha,
        }
    }

    fn psrf(&self, p: Parameter) -> f64 {
        match p {
            Parameter::Beta => self.psrf_beta,
            Parameter::Alpha => self.psrf_alpha,
        }
    }
}

/// Fits one replicate dataset. `seed` is unique to the (prior, n, replicate)
/// cell.
pub trait ReplicateFitter: Sync {
    fn fit(&self, data: &Dataset, kind: PriorKind, seed: u64, replicate: usize) -> Result<ReplicateFit>;
}

/// The production fitter: multiple chains, pooled posterior means.
#[derive(Debug, Clone)]
pub struct McmcFitter {
    pub config: McmcConfig,
}

impl ReplicateFitter for McmcFitter {
    fn fit(&self, data: &Dataset, kind: PriorKind, seed: u64, _replicate: usize) -> Result<ReplicateFit> {
        let cfg = McmcConfig { seed, ..self.config.clone() };
        let set = run_chains(data, kind, &cfg)?;
        let single = cfg.chains < 2;
        let psrf = |p| if single { Ok(f64::NAN) } else { set.psrf(p) };
        Ok(ReplicateFit {
            beta: set.summary(Parameter::Beta)?,
            alpha: set.summary(Parameter::Alpha)?,
            acceptance_rate: set.acceptance_rate()?,
            psrf_beta: psrf(Parameter::Beta)?,
            psrf_alpha: psrf(Parameter::Alpha)?,
        })
    }
}

/// `mean(estimates) − truth`.
pub fn bias(estimates: &[f64], truth: f64) -> Result<f64> {
    if estimates.is_empty() {
        return Err(LomaxError::InsufficientDraws { needed: 1, got: 0 });
    }
    Ok(estimates.iter().sum::<f64>() / estimates.len() as f64 - truth)
}

/// `√(mean((estimate − truth)²))`.
pub fn rmse(estimates: &[f64], truth: f64) -> Result<f64> {
    if estimates.is_empty() {
        return Err(LomaxError::InsufficientDraws { needed: 1, got: 0 });
    }
    let mse = estimates.iter().map(|e| (e - truth) * (e - truth)).sum::<f64>() / estimates.len() as f64;
    Ok(mse.sqrt())
}

/// One row of the report: a (prior, n, parameter) cell aggregated over
/// replicates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellReport {
    pub prior: PriorKind,
    pub n: usize,
    pub parameter: Parameter,
    pub truth: f64,
    /// Average of the replicate posterior means.
    pub mean: f64,
    /// Average of the replicate posterior standard deviations.
    pub sd: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub bias: f64,
    pub rmse: f64,
    pub accept_rate: f64,
    pub psrf: f64,
    /// Posterior mean of every replicate, in replicate order.
    #[serde(skip)]
    pub estimates: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimReport {
    pub truth: LomaxParams,
    pub replications: usize,
    pub cells: Vec<CellReport>,
}

pub const CSV_HEADER: &str = "prior,n,parameter,mean,sd,ci_low,ci_high,bias,rmse,accept_rate,psrf";

impl SimReport {
    pub fn cell(&self, prior: PriorKind, n: usize, p: Parameter) -> Option<&CellReport> {
        self.cells
            .iter()
            .find(|c| c.prior == prior && c.n == n && c.parameter == p)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for c in &self.cells {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{}",
                c.prior,
                c.n,
                c.parameter.label(),
                c.mean,
                c.sd,
                c.ci_low,
                c.ci_high,
                c.bias,
                c.rmse,
                c.accept_rate,
                c.psrf
            );
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "truth: beta = {}, alpha = {}; {} replicates per cell",
            self.truth.beta(),
            self.truth.alpha(),
            self.replications
        );
        let _ = writeln!(
            out,
            "{:<15} {:>5} {:>6} {:>9} {:>9} {:>21} {:>9} {:>9} {:>8} {:>7}",
            "prior", "n", "param", "mean", "SD", "95% CI", "bias", "rmse", "accept", "PSRF"
        );
        for c in &self.cells {
            let ci = format!("[{:.4} ; {:.4}]", c.ci_low, c.ci_high);
            let _ = writeln!(
                out,
                "{:<15} {:>5} {:>6} {:>9.4} {:>9.4} {:>21} {:>9.4} {:>9.4} {:>8.4} {:>7.4}",
                c.prior.label(),
                c.n,
                c.parameter.label(),
                c.mean,
                c.sd,
                ci,
                c.bias,
                c.rmse,
                c.accept_rate,
                c.psrf
            );
        }
        out
    }
}

/// Seed of the dataset for replicate `j` at size `n`. Shared by every prior,
/// so priors are compared on the same datasets.
pub fn data_seed(master: u64, n: usize, j: usize) -> u64 {
    derive_seed(master, &[0, n as u64, j as u64])
}

pub fn fit_seed(master: u64, kind: PriorKind, n: usize, j: usize) -> u64 {
    let k = PriorKind::ALL.iter().position(|&p| p == kind).unwrap_or(0) as u64;
    derive_seed(master, &[1 + k, n as u64, j as u64])
}

pub fn run_study(cfg: &StudyConfig) -> Result<SimReport> {
    run_study_with(cfg, &McmcFitter { config: cfg.mcmc.clone() })
}

/// Runs every (prior, n, replicate) fit in parallel and aggregates in a fixed
/// order, so the report depends only on the configuration.
pub fn run_study_with<F: ReplicateFitter>(cfg: &StudyConfig, fitter: &F) -> Result<SimReport> {
    cfg.validate()?;
    let jobs: Vec<(PriorKind, usize, usize)> = cfg
        .priors
        .iter()
        .flat_map(|&k| {
            cfg.sample_sizes
                .iter()
                .flat_map(move |&n| (0..cfg.replications).map(move |j| (k, n, j)))
        })
        .collect();

    let fits = jobs
        .par_iter()
        .map(|&(kind, n, j)| {
            let wrap = |e: LomaxError| LomaxError::Replicate {
                prior: kind,
                n,
                replicate: j,
                source: Box::new(e),
            };
            let data = cfg
                .truth
                .sample(&mut rng_from_seed(data_seed(cfg.seed, n, j)), n)
                .map_err(wrap)?;
            fitter.fit(&data, kind, fit_seed(cfg.seed, kind, n, j), j).map_err(wrap)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut cells = Vec::new();
    for (cell_fits, &(kind, n, _)) in fits.chunks(cfg.replications).zip(jobs.iter().step_by(cfg.replications)) {
        for p in Parameter::ALL {
            let truth = match p {
                Parameter::Beta => cfg.truth.beta(),
                Parameter::Alpha => cfg.truth.alpha(),
            };
            cells.push(aggregate(kind, n, p, truth, cell_fits)?);
        }
    }
    Ok(SimReport { truth: cfg.truth, replications: cfg.replications, cells })
}

fn aggregate(kind: PriorKind, n: usize, p: Parameter, truth: f64, fits: &[ReplicateFit]) -> Result<CellReport> {
    let m = fits.len() as f64;
    let avg = |f: &dyn Fn(&ReplicateFit) -> f64| fits.iter().map(f).sum::<f64>() / m;
    let estimates: Vec<f64> = fits.iter().map(|f| f.summary(p).mean).collect();
    Ok(CellReport {
        prior: kind,
        n,
        parameter: p,
        truth,
        mean: avg(&|f| f.summary(p).mean),
        sd: avg(&|f| f.summary(p).sd),
        ci_low: avg(&|f| f.summary(p).ci_low),
        ci_high: avg(&|f| f.summary(p).ci_high),
        bias: bias(&estimates, truth)?,
        rmse: rmse(&estimates, truth)?,
        accept_rate: avg(&|f| f.acceptance_rate),
        psrf: avg(&|f| f.psrf(p)),
        estimates,
    })
}
