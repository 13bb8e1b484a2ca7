//! Closed-form Lomax(β, α) functions and the two samplers.
//!
//! Density `f(x) = (α/β)(1 + x/β)^{-(α+1)}` on `x ≥ 0`, with scale `β` and
//! shape `α`. Everything is evaluated in log space through `ln_1p(x/β)`.

use rand::Rng;
use rand_distr::{Exp1, OpenClosed01};

use crate::error::{LomaxError, Result};
use crate::random;

/// Scale `beta` and shape `alpha` of a Lomax distribution.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct LomaxParams {
    beta: f64,
    alpha: f64,
}

impl LomaxParams {
    pub fn new(beta: f64, alpha: f64) -> Result<Self> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if ok(beta) && ok(alpha) {
            Ok(LomaxParams { beta, alpha })
        } else {
            Err(LomaxError::InvalidParams { beta, alpha })
        }
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    fn check_support(x: f64) -> Result<()> {
        if x >= 0.0 && x.is_finite() {
            Ok(())
        } else {
            Err(LomaxError::Domain(format!(
                "observation {x} is outside the support [0, inf)"
            )))
        }
    }

    pub fn log_pdf(&self, x: f64) -> Result<f64> {
        Self::check_support(x)?;
        Ok(self.log_pdf_unchecked(x))
    }

    pub(crate) fn log_pdf_unchecked(&self, x: f64) -> f64 {
        (self.alpha / self.beta).ln() - (self.alpha + 1.0) * (x / self.beta).ln_1p()
    }

    /// `S(x) = (1 + x/β)^{-α}`.
    pub fn survival(&self, x: f64) -> Result<f64> {
        Self::check_support(x)?;
        Ok((-self.alpha * (x / self.beta).ln_1p()).exp())
    }

    /// `h(x) = (α/β) / (1 + x/β)`, strictly decreasing.
    pub fn hazard(&self, x: f64) -> Result<f64> {
        Self::check_support(x)?;
        Ok(self.alpha / (self.beta + x))
    }

    pub fn median(&self) -> f64 {
        self.beta * (std::f64::consts::LN_2 / self.alpha).exp_m1()
    }

    pub fn mean(&self) -> Result<f64> {
        if self.alpha > 1.0 {
            Ok(self.beta / (self.alpha - 1.0))
        } else {
            Err(LomaxError::MeanUndefined(self.alpha))
        }
    }

    pub fn variance(&self) -> Result<f64> {
        if self.alpha > 2.0 {
            let a = self.alpha;
            Ok(a * self.beta * self.beta / ((a - 1.0) * (a - 1.0) * (a - 2.0)))
        } else {
            Err(LomaxError::VarianceUndefined(self.alpha))
        }
    }

    /// Inverts the survival function: returns `x` with `S(x) = u`, i.e.
    /// `β(u^{-1/α} - 1)`. `u` must lie in `(0, 1]`.
    pub fn inverse_survival(&self, u: f64) -> f64 {
        self.beta * (-u.ln() / self.alpha).exp_m1()
    }

    /// `n` i.i.d. draws by inversion, with `U` uniform on `(0, 1]`.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Result<Dataset> {
        check_count(n)?;
        let x = (0..n)
            .map(|_| self.inverse_survival(rng.sample(OpenClosed01)))
            .collect();
        Dataset::new(x)
    }

    /// Draw of `X | λ ~ Exponential(rate λ/β)`.
    pub fn sample_given_mixing<R: Rng + ?Sized>(&self, rng: &mut R, lambda: f64) -> f64 {
        let e: f64 = rng.sample(Exp1);
        e * self.beta / lambda
    }

    /// `n` i.i.d. draws through the gamma-exponential mixture:
    /// `λ ~ Gamma(α, 1)`, then `X | λ ~ Exponential(rate λ/β)`.
    pub fn sample_hierarchical<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Result<Dataset> {
        check_count(n)?;
        let x = (0..n)
            .map(|_| {
                let lambda = random::gamma(rng, self.alpha, 1.0);
                self.sample_given_mixing(rng, lambda)
            })
            .collect();
        Dataset::new(x)
    }
}

fn check_count(n: usize) -> Result<()> {
    if n == 0 {
        Err(LomaxError::Domain("sample size must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// A non-empty sample of nonnegative finite observations.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    x: Vec<f64>,
}

impl Dataset {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if x.is_empty() {
            return Err(LomaxError::Domain("dataset is empty".into()));
        }
        if let Some((i, v)) = x.iter().enumerate().find(|(_, v)| !(v.is_finite() && **v >= 0.0)) {
            return Err(LomaxError::Domain(format!(
                "observation {i} = {v} is not a nonnegative finite number"
            )));
        }
        Ok(Dataset { x })
    }

    pub fn values(&self) -> &[f64] {
        &self.x
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Returns a copy with every observation multiplied by `c > 0`.
    pub fn rescaled(&self, c: f64) -> Result<Dataset> {
        Dataset::new(self.x.iter().map(|v| v * c).collect())
    }
}
