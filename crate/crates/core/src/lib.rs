//! Objective-Bayesian inference for the two-parameter Lomax (Pareto type II)
//! distribution.
//!
//! The model is fitted with a data-augmented Metropolis-Hastings-within-Gibbs
//! sampler. Each observation `xᵢ` carries a latent mixing variable `λᵢ` so that
//!
//! ```text
//! X | β, λ ~ Exponential(rate λ/β)
//! λ | α    ~ Gamma(α, 1)
//! ```
//!
//! which marginalises to `Lomax(β, α)`. Under the Jeffreys and reference priors
//! the λ and β complete conditionals are standard (Gamma and Inverse-Gamma);
//! α is updated with a truncated random-walk Metropolis step.
//!
//! ```
//! use lomax::{Dataset, LomaxParams, McmcConfig, PriorKind, sampler};
//! use lomax::random::rng_from_seed;
//!
//! let truth = LomaxParams::new(2.0, 1.5).unwrap();
//! let data = truth.sample(&mut rng_from_seed(7), 200).unwrap();
//! let cfg = McmcConfig { iterations: 2_000, burn_in: 500, ..McmcConfig::simulation() };
//! let fit = sampler::run_chains(&data, PriorKind::Reference, &cfg).unwrap();
//! assert_eq!(fit.pooled(lomax::Parameter::Alpha).len(), 2 * 150);
//! ```

pub mod cli;
pub mod diagnostics;
pub mod distribution;
pub mod error;
pub mod priors;
pub mod quadrature;
pub mod random;
pub mod sampler;
pub mod simulation;

pub use diagnostics::{Parameter, SummaryStats};
pub use distribution::{Dataset, LomaxParams};
pub use error::{LomaxError, Result};
pub use priors::{FisherMatrix, PriorKind};
pub use sampler::{AugmentedState, Chain, ChainSet, Draw, McmcConfig};
pub use simulation::{SimReport, StudyConfig};
