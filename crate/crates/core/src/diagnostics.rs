//! Posterior summaries, the Gelman-Rubin PSRF, acceptance rates and
//! λ-based outlier scores.

use serde::Serialize;

use crate::distribution::Dataset;
use crate::error::{LomaxError, Result};
use crate::sampler::{Chain, ChainSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    Beta,
    Alpha,
}

impl Parameter {
    pub const ALL: [Parameter; 2] = [Parameter::Beta, Parameter::Alpha];

    pub fn label(self) -> &'static str {
        match self {
            Parameter::Beta => "beta",
            Parameter::Alpha => "alpha",
        }
    }
}

/// Mean, standard deviation and equal-tailed 95% credible interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SummaryStats {
    pub mean: f64,
    pub sd: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

/// Quantile of already sorted data, linear interpolation between order
/// statistics (`h = (n − 1) p`).
pub fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    assert!(n > 0, "quantile of empty data");
    let h = (n - 1) as f64 * p.clamp(0.0, 1.0);
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(n - 1);
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

pub fn quantile(values: &[f64], p: f64) -> f64 {
    let mut s = values.to_vec();
    s.sort_by(f64::total_cmp);
    quantile_sorted(&s, p)
}

fn mean_var(v: &[f64]) -> (f64, f64) {
    let n = v.len() as f64;
    let m = v.iter().sum::<f64>() / n;
    let ss = v.iter().map(|x| (x - m) * (x - m)).sum::<f64>();
    (m, ss / (n - 1.0))
}

pub fn summarize(draws: &[f64]) -> Result<SummaryStats> {
    if draws.len() < 2 {
        return Err(LomaxError::InsufficientDraws { needed: 2, got: draws.len() });
    }
    let (mean, var) = mean_var(draws);
    let mut sorted = draws.to_vec();
    sorted.sort_by(f64::total_cmp);
    Ok(SummaryStats {
        mean,
        sd: var.max(0.0).sqrt(),
        ci_low: quantile_sorted(&sorted, 0.025),
        ci_high: quantile_sorted(&sorted, 0.975),
    })
}

/// Potential scale reduction factor of equal-length chains:
/// `√(((L−1)/L · W + B/L) / W)` with `W` the mean within-chain variance and
/// `B` the between-chain variance of the means times `L`.
pub fn psrf(chains: &[Vec<f64>]) -> Result<f64> {
    if chains.len() < 2 {
        return Err(LomaxError::InsufficientDraws { needed: 2, got: chains.len() });
    }
    let len = chains[0].len();
    if let Some(c) = chains.iter().find(|c| c.len() != len) {
        return Err(LomaxError::UnequalChains(len, c.len()));
    }
    if len < 2 {
        return Err(LomaxError::InsufficientDraws { needed: 2, got: len });
    }
    let l = len as f64;
    let stats: Vec<(f64, f64)> = chains.iter().map(|c| mean_var(c)).collect();
    let means: Vec<f64> = stats.iter().map(|s| s.0).collect();
    let w = stats.iter().map(|s| s.1).sum::<f64>() / chains.len() as f64;
    let b = l * mean_var(&means).1;
    let pooled = (l - 1.0) / l * w + b / l;
    Ok((pooled / w).sqrt())
}

pub fn gelman_rubin(chains: &ChainSet, p: Parameter) -> Result<f64> {
    let traces: Vec<Vec<f64>> = chains.chains.iter().map(|c| c.values(p)).collect();
    psrf(&traces)
}

pub(crate) fn rate(accepted: u64, proposed: u64) -> Result<f64> {
    if proposed == 0 {
        Err(LomaxError::InsufficientDraws { needed: 1, got: 0 })
    } else {
        Ok(accepted as f64 / proposed as f64)
    }
}

/// Fraction of accepted α proposals over all iterations, burn-in included.
pub fn acceptance_rate(chain: &Chain) -> Result<f64> {
    rate(chain.accepted, chain.proposed)
}

/// Thresholds of the outlier rule: flag observation `i` when its score is
/// below the `score_quantile` of all scores and `xᵢ` is above the
/// `data_quantile` of the data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutlierRule {
    pub score_quantile: f64,
    pub data_quantile: f64,
}

impl Default for OutlierRule {
    fn default() -> Self {
        OutlierRule { score_quantile: 0.05, data_quantile: 0.95 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OutlierScore {
    pub index: usize,
    pub x: f64,
    pub lambda_mean: f64,
    pub flagged: bool,
}

pub fn outlier_scores(chains: &ChainSet, d: &Dataset) -> Result<Vec<OutlierScore>> {
    outlier_scores_with(chains, d, OutlierRule::default())
}

/// Scores each observation by the pooled posterior mean of its λᵢ. A large
/// `xᵢ` pulls `λᵢ` towards zero, so small scores mark candidate outliers.
pub fn outlier_scores_with(chains: &ChainSet, d: &Dataset, rule: OutlierRule) -> Result<Vec<OutlierScore>> {
    let scores = chains.lambda_means();
    if scores.len() != d.len() {
        return Err(LomaxError::Domain(format!(
            "chains carry {} λ means for {} observations",
            scores.len(),
            d.len()
        )));
    }
    let score_cut = quantile(&scores, rule.score_quantile);
    let data_cut = quantile(d.values(), rule.data_quantile);
    Ok(scores
        .iter()
        .zip(d.values())
        .enumerate()
        .map(|(index, (&s, &x))| OutlierScore {
            index,
            x,
            lambda_mean: s,
            flagged: s < score_cut && x > data_cut,
        })
        .collect())
}
