//! C ABI over the `lomax` crate.
//!
//! Conventions:
//!
//! * every function returns a [`LomaxStatus`]; results go through out-pointers;
//! * datasets and fits are opaque handles created by `*_new` / [`lomax_fit`]
//!   and released with the matching `*_free`;
//! * after a non-OK status, [`lomax_last_error_message`] describes the failure
//!   on the calling thread.
//!
//! The header `include/lomax.h` is generated by cbindgen at build time.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use lomax::distribution::{Dataset, LomaxParams};
use lomax::priors::{self, PriorKind};
use lomax::sampler::{self, ChainSet, McmcConfig};
use lomax::{LomaxError, Parameter};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LomaxStatus {
    Ok = 0,
    NullPointer = 1,
    /// Bad parameter values or MCMC settings.
    InvalidArgument = 2,
    /// Observations outside the support, empty data, index out of range.
    DataError = 3,
    /// Too few observations for a proper posterior under the chosen prior.
    ImproperPosterior = 4,
    /// Every observation is zero.
    DegenerateData = 5,
    /// Undefined moment or insufficient draws for a statistic.
    Numerical = 6,
    /// A Rust panic was caught at the boundary.
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LomaxPrior {
    JeffreysDependent = 0,
    JeffreysIndependent = 1,
    Reference = 2,
}

impl From<LomaxPrior> for PriorKind {
    fn from(p: LomaxPrior) -> Self {
        match p {
            LomaxPrior::JeffreysDependent => PriorKind::JeffreysDependent,
            LomaxPrior::JeffreysIndependent => PriorKind::JeffreysIndependent,
            LomaxPrior::Reference => PriorKind::Reference,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LomaxParameter {
    Beta = 0,
    Alpha = 1,
}

impl From<LomaxParameter> for Parameter {
    fn from(p: LomaxParameter) -> Self {
        match p {
            LomaxParameter::Beta => Parameter::Beta,
            LomaxParameter::Alpha => Parameter::Alpha,
        }
    }
}

/// Sampler settings. `init_alpha` / `init_beta` are used when positive;
/// otherwise the chain starts from Gamma(1, 1) draws.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LomaxMcmcConfig {
    pub iterations: u64,
    pub burn_in: u64,
    pub thin: u64,
    pub chains: u64,
    pub tuning: f64,
    pub seed: u64,
    pub init_alpha: f64,
    pub init_beta: f64,
}

impl From<&McmcConfig> for LomaxMcmcConfig {
    fn from(c: &McmcConfig) -> Self {
        LomaxMcmcConfig {
            iterations: c.iterations as u64,
            burn_in: c.burn_in as u64,
            thin: c.thin as u64,
            chains: c.chains as u64,
            tuning: c.tuning,
            seed: c.seed,
            init_alpha: c.init_alpha.unwrap_or(0.0),
            init_beta: c.init_beta.unwrap_or(0.0),
        }
    }
}

impl LomaxMcmcConfig {
    fn to_config(self) -> Result<McmcConfig, LomaxError> {
        let count = |v: u64, name: &str| {
            usize::try_from(v).map_err(|_| LomaxError::Config(format!("{name} too large")))
        };
        let opt = |v: f64| (v > 0.0).then_some(v);
        Ok(McmcConfig {
            iterations: count(self.iterations, "iterations")?,
            burn_in: count(self.burn_in, "burn_in")?,
            thin: count(self.thin, "thin")?,
            chains: count(self.chains, "chains")?,
            tuning: self.tuning,
            seed: self.seed,
            init_alpha: opt(self.init_alpha),
            init_beta: opt(self.init_beta),
            store_lambda_traces: false,
        })
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LomaxSummary {
    pub mean: f64,
    pub sd: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

/// Opaque dataset handle.
pub struct LomaxDataset {
    inner: Dataset,
}

/// Opaque handle to a completed multi-chain fit.
pub struct LomaxFit {
    chains: ChainSet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &LomaxError) -> LomaxStatus {
    match e {
        LomaxError::InvalidParams { .. } | LomaxError::Config(_) => LomaxStatus::InvalidArgument,
        LomaxError::Domain(_) | LomaxError::Parse { .. } | LomaxError::Io(_) => LomaxStatus::DataError,
        LomaxError::ImproperPosterior { .. } => LomaxStatus::ImproperPosterior,
        LomaxError::DegenerateData => LomaxStatus::DegenerateData,
        LomaxError::MeanUndefined(_)
        | LomaxError::VarianceUndefined(_)
        | LomaxError::InsufficientDraws { .. }
        | LomaxError::UnequalChains(..) => LomaxStatus::Numerical,
        LomaxError::Replicate { source, .. } => status_of(source),
    }
}

fn fail(e: LomaxError) -> LomaxStatus {
    let s = status_of(&e);
    set_last_error(e.to_string());
    s
}

fn null_pointer(name: &str) -> LomaxStatus {
    set_last_error(format!("{name} is NULL"));
    LomaxStatus::NullPointer
}

/// Runs `f`, turning errors and panics into status codes.
fn guard<F>(f: F) -> LomaxStatus
where
    F: FnOnce() -> Result<(), LomaxStatus> + UnwindSafe,
{
    match catch_unwind(f) {
        Ok(Ok(())) => LomaxStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_last_error("internal panic".into());
            LomaxStatus::Panic
        }
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), LomaxStatus> {
    if out.is_null() {
        return Err(null_pointer("out"));
    }
    // SAFETY: caller guarantees `out` is valid for writes when non-null.
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn deref<'a, T>(p: *const T, name: &str) -> Result<&'a T, LomaxStatus> {
    // SAFETY: caller guarantees `p` came from this library and is live.
    unsafe { p.as_ref() }.ok_or_else(|| null_pointer(name))
}

fn params(beta: f64, alpha: f64) -> Result<LomaxParams, LomaxStatus> {
    LomaxParams::new(beta, alpha).map_err(fail)
}

/// Message describing the last failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lomax_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Fills `out` with the defaults for simulation studies
/// (11,000 iterations, 1,000 burn-in, thinning 10, two chains).
///
/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_mcmc_config_simulation(out: *mut LomaxMcmcConfig) -> LomaxStatus {
    guard(|| unsafe { write_out(out, (&McmcConfig::simulation()).into()) })
}

/// Fills `out` with the defaults for fitting a real dataset
/// (80,000 iterations, 20,000 burn-in, thinning 20, two chains).
///
/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_mcmc_config_application(out: *mut LomaxMcmcConfig) -> LomaxStatus {
    guard(|| unsafe { write_out(out, (&McmcConfig::application()).into()) })
}

/// Copies `len` observations into a new dataset handle.
///
/// # Safety
/// `values` must point to `len` readable doubles; `out` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_dataset_new(
    values: *const f64,
    len: usize,
    out: *mut *mut LomaxDataset,
) -> LomaxStatus {
    guard(|| {
        if values.is_null() {
            return Err(null_pointer("values"));
        }
        // SAFETY: caller guarantees `len` readable doubles.
        let x = unsafe { std::slice::from_raw_parts(values, len) }.to_vec();
        let inner = Dataset::new(x).map_err(fail)?;
        let handle = Box::into_raw(Box::new(LomaxDataset { inner }));
        unsafe { write_out(out, handle) }.inspect_err(|_| {
            // SAFETY: `handle` was just created and never shared.
            drop(unsafe { Box::from_raw(handle) });
        })
    })
}

/// # Safety
/// `dataset` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_dataset_len(dataset: *const LomaxDataset, out: *mut usize) -> LomaxStatus {
    guard(|| unsafe {
        let d = deref(dataset, "dataset")?;
        write_out(out, d.inner.len())
    })
}

/// # Safety
/// `dataset` must be NULL or a handle from [`lomax_dataset_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lomax_dataset_free(dataset: *mut LomaxDataset) {
    if !dataset.is_null() {
        // SAFETY: ownership returns to Rust exactly once.
        drop(unsafe { Box::from_raw(dataset) });
    }
}

fn scalar(beta: f64, alpha: f64, out: *mut f64, f: impl FnOnce(LomaxParams) -> lomax::Result<f64>) -> LomaxStatus {
    guard(std::panic::AssertUnwindSafe(|| {
        let v = f(params(beta, alpha)?).map_err(fail)?;
        unsafe { write_out(out, v) }
    }))
}

/// Log density at `x >= 0`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_log_pdf(beta: f64, alpha: f64, x: f64, out: *mut f64) -> LomaxStatus {
    scalar(beta, alpha, out, |p| p.log_pdf(x))
}

/// Survival function `(1 + x/beta)^(-alpha)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_survival(beta: f64, alpha: f64, x: f64, out: *mut f64) -> LomaxStatus {
    scalar(beta, alpha, out, |p| p.survival(x))
}

/// Hazard `alpha / (beta + x)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_hazard(beta: f64, alpha: f64, x: f64, out: *mut f64) -> LomaxStatus {
    scalar(beta, alpha, out, |p| p.hazard(x))
}

/// Median, mean (`α > 1`) and variance (`α > 2`) of Lomax(β, α).
///
/// # Safety
/// Each out-pointer must be NULL or valid for writes. Undefined moments are
/// written as NaN.
#[no_mangle]
pub unsafe extern "C" fn lomax_moments(
    beta: f64,
    alpha: f64,
    median: *mut f64,
    mean: *mut f64,
    variance: *mut f64,
) -> LomaxStatus {
    guard(|| {
        let p = params(beta, alpha)?;
        for (ptr, v) in [
            (median, p.median()),
            (mean, p.mean().unwrap_or(f64::NAN)),
            (variance, p.variance().unwrap_or(f64::NAN)),
        ] {
            if !ptr.is_null() {
                unsafe { write_out(ptr, v)? };
            }
        }
        Ok(())
    })
}

/// Unnormalised joint log posterior of `(β, α)` given the dataset.
///
/// # Safety
/// `dataset` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_log_posterior(
    prior: LomaxPrior,
    beta: f64,
    alpha: f64,
    dataset: *const LomaxDataset,
    out: *mut f64,
) -> LomaxStatus {
    guard(|| unsafe {
        let d = deref(dataset, "dataset")?;
        let p = params(beta, alpha)?;
        let v = priors::log_posterior(prior.into(), &p, &d.inner).map_err(fail)?;
        write_out(out, v)
    })
}

/// Runs the sampler and returns a fit handle through `out`.
///
/// # Safety
/// `dataset` and `config` must be valid; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_fit(
    dataset: *const LomaxDataset,
    prior: LomaxPrior,
    config: *const LomaxMcmcConfig,
    out: *mut *mut LomaxFit,
) -> LomaxStatus {
    guard(|| unsafe {
        let d = deref(dataset, "dataset")?;
        let cfg = deref(config, "config")?.to_config().map_err(fail)?;
        if out.is_null() {
            return Err(null_pointer("out"));
        }
        let chains = sampler::run_chains(&d.inner, prior.into(), &cfg).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(LomaxFit { chains })))
    })
}

/// # Safety
/// `fit` must be NULL or a handle from [`lomax_fit`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lomax_fit_free(fit: *mut LomaxFit) {
    if !fit.is_null() {
        // SAFETY: ownership returns to Rust exactly once.
        drop(unsafe { Box::from_raw(fit) });
    }
}

/// Posterior summary of one parameter, pooled over chains.
///
/// # Safety
/// `fit` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_fit_summary(
    fit: *const LomaxFit,
    parameter: LomaxParameter,
    out: *mut LomaxSummary,
) -> LomaxStatus {
    guard(|| unsafe {
        let f = deref(fit, "fit")?;
        let s = f.chains.summary(parameter.into()).map_err(fail)?;
        write_out(out, LomaxSummary { mean: s.mean, sd: s.sd, ci_low: s.ci_low, ci_high: s.ci_high })
    })
}

/// Gelman-Rubin PSRF of one parameter; needs at least two chains.
///
/// # Safety
/// `fit` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_fit_psrf(
    fit: *const LomaxFit,
    parameter: LomaxParameter,
    out: *mut f64,
) -> LomaxStatus {
    guard(|| unsafe {
        let f = deref(fit, "fit")?;
        let v = f.chains.psrf(parameter.into()).map_err(fail)?;
        write_out(out, v)
    })
}

/// Accepted over proposed α moves across all chains and iterations.
///
/// # Safety
/// `fit` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_fit_acceptance_rate(fit: *const LomaxFit, out: *mut f64) -> LomaxStatus {
    guard(|| unsafe {
        let f = deref(fit, "fit")?;
        let v = f.chains.acceptance_rate().map_err(fail)?;
        write_out(out, v)
    })
}

/// Number of chains and retained draws per chain.
///
/// # Safety
/// `fit` must be a live handle; out-pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_fit_shape(
    fit: *const LomaxFit,
    chains: *mut usize,
    draws_per_chain: *mut usize,
) -> LomaxStatus {
    guard(|| unsafe {
        let f = deref(fit, "fit")?;
        write_out(chains, f.chains.chains.len())?;
        write_out(draws_per_chain, f.chains.config.retained_per_chain())
    })
}

/// Copies the retained draws of `parameter` from chain `chain` into `buf`,
/// which must hold at least `draws_per_chain` values.
///
/// # Safety
/// `fit` must be a live handle; `buf` must be valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_fit_copy_draws(
    fit: *const LomaxFit,
    chain: usize,
    parameter: LomaxParameter,
    buf: *mut f64,
    len: usize,
) -> LomaxStatus {
    guard(|| unsafe {
        let f = deref(fit, "fit")?;
        let c = f.chains.chains.get(chain).ok_or_else(|| {
            fail(LomaxError::Domain(format!("chain {chain} out of range")))
        })?;
        copy_into(&c.values(parameter.into()), buf, len)
    })
}

/// Copies the pooled posterior means of λᵢ (one per observation) into `buf`.
///
/// # Safety
/// `fit` must be a live handle; `buf` must be valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn lomax_fit_copy_lambda_means(
    fit: *const LomaxFit,
    buf: *mut f64,
    len: usize,
) -> LomaxStatus {
    guard(|| unsafe {
        let f = deref(fit, "fit")?;
        copy_into(&f.chains.lambda_means(), buf, len)
    })
}

unsafe fn copy_into(src: &[f64], buf: *mut f64, len: usize) -> Result<(), LomaxStatus> {
    if buf.is_null() {
        return Err(null_pointer("buf"));
    }
    if len < src.len() {
        return Err(fail(LomaxError::Domain(format!(
            "buffer holds {len} values, {} needed",
            src.len()
        ))));
    }
    // SAFETY: caller guarantees `len >= src.len()` writable doubles.
    unsafe { ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len()) };
    Ok(())
}
