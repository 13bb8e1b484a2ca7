//! Fisher information of the Lomax model, the objective priors built from it,
//! and the joint log-posterior.

use std::fmt;
use std::str::FromStr;

use crate::distribution::{Dataset, LomaxParams};
use crate::error::{LomaxError, Result};

/// Which objective prior is placed on `(β, α)`.
///
/// `JeffreysIndependent` and `Reference` have the same density `1/(αβ)`; they
/// are kept apart so reports carry the label the user asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PriorKind {
    /// `√det I(β, α) ∝ 1 / (β (α+1) √α √(α+2))`.
    JeffreysDependent,
    /// Product of the marginal Jeffreys priors, `1/(αβ)`.
    JeffreysIndependent,
    /// Reference prior for the ordering (β of interest, α nuisance), `1/(αβ)`.
    Reference,
}

impl PriorKind {
    pub const ALL: [PriorKind; 3] = [
        PriorKind::JeffreysDependent,
        PriorKind::JeffreysIndependent,
        PriorKind::Reference,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PriorKind::JeffreysDependent => "jeffreys",
            PriorKind::JeffreysIndependent => "jeffreys-indep",
            PriorKind::Reference => "reference",
        }
    }

    /// Smallest sample size for which the posterior is proper.
    pub fn min_sample_size(self) -> usize {
        match self {
            PriorKind::JeffreysDependent => 1,
            PriorKind::JeffreysIndependent | PriorKind::Reference => 2,
        }
    }

    /// The α-only part of the log prior; the β part is `-log β` for every kind.
    pub fn log_alpha_factor(self, alpha: f64) -> f64 {
        match self {
            PriorKind::JeffreysDependent => {
                -(alpha + 1.0).ln() - 0.5 * alpha.ln() - 0.5 * (alpha + 2.0).ln()
            }
            PriorKind::JeffreysIndependent | PriorKind::Reference => -alpha.ln(),
        }
    }
}

impl fmt::Display for PriorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PriorKind {
    type Err = LomaxError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "jeffreys" | "jeffreys-dependent" => Ok(PriorKind::JeffreysDependent),
            "jeffreys-indep" | "jeffreys-independent" => Ok(PriorKind::JeffreysIndependent),
            "reference" => Ok(PriorKind::Reference),
            other => Err(LomaxError::Config(format!(
                "unknown prior '{other}' (expected jeffreys, jeffreys-indep or reference)"
            ))),
        }
    }
}

/// Symmetric 2×2 matrix indexed by `(β, α)`, for a sample of size `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FisherMatrix {
    pub i11: f64,
    pub i12: f64,
    pub i22: f64,
    pub n: usize,
}

impl FisherMatrix {
    pub fn det(&self) -> f64 {
        self.i11 * self.i22 - self.i12 * self.i12
    }

    pub fn to_array(&self) -> [[f64; 2]; 2] {
        [[self.i11, self.i12], [self.i12, self.i22]]
    }

    /// Plain matrix product `self · other`.
    pub fn matmul(&self, other: &FisherMatrix) -> [[f64; 2]; 2] {
        let a = self.to_array();
        let b = other.to_array();
        let mut out = [[0.0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        out
    }
}

pub fn fisher_information(p: &LomaxParams, n: usize) -> FisherMatrix {
    let (b, a) = (p.beta(), p.alpha());
    let m = n as f64;
    FisherMatrix {
        i11: m * a / (b * b * (a + 2.0)),
        i12: -m / (b * (a + 1.0)),
        i22: m / (a * a),
        n,
    }
}

/// Closed-form inverse of [`fisher_information`].
pub fn fisher_inverse(p: &LomaxParams, n: usize) -> FisherMatrix {
    let (b, a) = (p.beta(), p.alpha());
    let m = n as f64;
    let a1 = a + 1.0;
    FisherMatrix {
        i11: b * b * (a + 2.0) * a1 * a1 / a / m,
        i12: b * a * (a + 2.0) * a1 / m,
        i22: a * a * a1 * a1 / m,
        n,
    }
}

/// Unnormalised log prior density; the additive constant is zero.
pub fn log_prior(kind: PriorKind, p: &LomaxParams) -> f64 {
    -p.beta().ln() + kind.log_alpha_factor(p.alpha())
}

/// Fails with [`LomaxError::ImproperPosterior`] when `n` observations do not
/// yield a proper posterior under `kind`.
pub fn check_propriety(kind: PriorKind, n: usize) -> Result<()> {
    let min_n = kind.min_sample_size();
    if n < min_n {
        Err(LomaxError::ImproperPosterior { prior: kind, n, min_n })
    } else {
        Ok(())
    }
}

/// Unnormalised joint log posterior of `(β, α)`: log likelihood plus
/// [`log_prior`].
pub fn log_posterior(kind: PriorKind, p: &LomaxParams, d: &Dataset) -> Result<f64> {
    check_propriety(kind, d.len())?;
    let n = d.len() as f64;
    let (b, a) = (p.beta(), p.alpha());
    let sum_log1p: f64 = d.values().iter().map(|x| (x / b).ln_1p()).sum();
    Ok(n * (a.ln() - b.ln()) - (a + 1.0) * sum_log1p + log_prior(kind, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate;
    use approx::assert_abs_diff_eq;

    fn p(beta: f64, alpha: f64) -> LomaxParams {
        LomaxParams::new(beta, alpha).unwrap()
    }

    fn grid() -> impl Iterator<Item = LomaxParams> {
        [0.2, 1.0, 5.0]
            .into_iter()
            .flat_map(|b| [0.2, 1.0, 5.0].into_iter().map(move |a| p(b, a)))
    }

    fn assert_matrix(m: &FisherMatrix, expected: [[f64; 2]; 2], tol: f64) {
        let got = m.to_array();
        for i in 0..2 {
            for j in 0..2 {
                assert_abs_diff_eq!(got[i][j], expected[i][j], epsilon = tol);
            }
        }
    }

    #[test]
    fn fisher_information_values() {
        assert_matrix(&fisher_information(&p(1.0, 1.0), 1), [[1.0 / 3.0, -0.5], [-0.5, 1.0]], 1e-15);
        assert_matrix(
            &fisher_information(&p(2.0, 2.0), 1),
            [[1.0 / 8.0, -1.0 / 6.0], [-1.0 / 6.0, 0.25]],
            1e-15,
        );
        let q = p(1.7, 0.4);
        let one = fisher_information(&q, 1);
        let ten = fisher_information(&q, 10);
        assert_abs_diff_eq!(ten.i11, 10.0 * one.i11, epsilon = 1e-12);
        assert_abs_diff_eq!(ten.i12, 10.0 * one.i12, epsilon = 1e-12);
        assert_abs_diff_eq!(ten.i22, 10.0 * one.i22, epsilon = 1e-12);
    }

    #[test]
    fn fisher_inverse_values() {
        assert_eq!(fisher_inverse(&p(1.0, 1.0), 1).to_array(), [[12.0, 6.0], [6.0, 4.0]]);
        // det I = 1/288 at (β=2, α=2), so I⁻¹ = 288·[[1/4, 1/6], [1/6, 1/8]]
        assert_matrix(&fisher_inverse(&p(2.0, 2.0), 1), [[72.0, 48.0], [48.0, 36.0]], 1e-12);
        let q = p(5.0, 0.7);
        let prod = fisher_information(&q, 3).matmul(&fisher_inverse(&q, 3));
        assert_abs_diff_eq!(prod[0][0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(prod[0][1], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(prod[1][0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(prod[1][1], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn fisher_is_positive_definite_and_inverts_on_grid() {
        for q in grid() {
            let m = fisher_information(&q, 1);
            assert!(m.i11 > 0.0 && m.det() > 0.0);
            let (b, a) = (q.beta(), q.alpha());
            let det = a / (b * b * (a + 2.0)) / (a * a) - (1.0 / (b * (a + 1.0))).powi(2);
            assert!((m.det() - det).abs() <= 1e-12 * det.abs());
            let prod = m.matmul(&fisher_inverse(&q, 1));
            for (i, row) in prod.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    let id = if i == j { 1.0 } else { 0.0 };
                    assert_abs_diff_eq!(*v, id, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn jeffreys_prior_is_root_determinant() {
        let offsets: Vec<f64> = grid()
            .map(|q| {
                0.5 * fisher_information(&q, 1).det().ln()
                    - log_prior(PriorKind::JeffreysDependent, &q)
            })
            .collect();
        for o in &offsets {
            assert_abs_diff_eq!(*o, offsets[0], epsilon = 1e-10);
        }
    }

    #[test]
    fn log_prior_values() {
        assert_eq!(log_prior(PriorKind::Reference, &p(1.0, 1.0)), 0.0);
        assert_abs_diff_eq!(
            log_prior(PriorKind::JeffreysDependent, &p(1.0, 1.0)),
            -(2f64.ln()) - 0.5 * 3f64.ln(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            log_prior(PriorKind::JeffreysDependent, &p(1.0, 1.0)),
            -1.242_453_3,
            epsilon = 1e-7
        );
        assert_abs_diff_eq!(log_prior(PriorKind::Reference, &p(2.0, 4.0)), -(8.0f64).ln(), epsilon = 1e-12);
        let q = p(3.1, 0.6);
        assert_eq!(
            log_prior(PriorKind::Reference, &q),
            log_prior(PriorKind::JeffreysIndependent, &q)
        );
    }

    #[test]
    fn log_posterior_reference_value() {
        let d = Dataset::new(vec![1.0, 1.0]).unwrap();
        let lp = log_posterior(PriorKind::Reference, &p(1.0, 1.0), &d).unwrap();
        assert_abs_diff_eq!(lp, -4.0 * 2f64.ln(), epsilon = 1e-12);
        assert_abs_diff_eq!(lp, -2.772_588_7, epsilon = 1e-7);
    }

    #[test]
    fn propriety_guard() {
        let d = Dataset::new(vec![3.0]).unwrap();
        for kind in [PriorKind::Reference, PriorKind::JeffreysIndependent] {
            assert_eq!(
                log_posterior(kind, &p(1.0, 1.0), &d),
                Err(LomaxError::ImproperPosterior { prior: kind, n: 1, min_n: 2 })
            );
        }
        assert!(log_posterior(PriorKind::JeffreysDependent, &p(1.0, 1.0), &d).is_ok());
    }

    /// β-marginal of the unnormalised posterior at fixed α, integrated on a
    /// log-β grid.
    fn beta_marginal(kind: PriorKind, xs: &[f64], alpha: f64) -> f64 {
        let log_at = |b: f64| {
            let q = p(b, alpha);
            let loglik: f64 = xs.iter().map(|&x| q.log_pdf(x).unwrap()).sum();
            loglik + log_prior(kind, &q)
        };
        // near β = 0 the integrand behaves like β^α, so small α needs a long left tail
        let lo = -40.0 / alpha.min(1.0);
        integrate(|t: f64| (log_at(t.exp()) + t).exp(), lo, 40.0, 1e-16, 1e-10)
    }

    fn alpha_mass(kind: PriorKind, xs: &[f64], lo: f64, hi: f64) -> f64 {
        integrate(
            |u: f64| beta_marginal(kind, xs, u.exp()) * u.exp(),
            lo.ln(),
            hi.ln(),
            1e-14,
            1e-8,
        )
    }

    // One observation under 1/(αβ): the β integral is 1/(xα), so the α mass
    // over [a, b] is ln(b/a)/x and grows without bound.
    #[test]
    fn single_observation_reference_mass_diverges() {
        let x = 2.0;
        for kind in [PriorKind::Reference, PriorKind::JeffreysIndependent] {
            let m = alpha_mass(kind, &[x], 1e2, 1e4);
            assert!((m - 100f64.ln() / x).abs() < 1e-5, "{m}");
            assert_abs_diff_eq!(beta_marginal(kind, &[x], 0.7), 1.0 / (x * 0.7), epsilon = 1e-8);
        }
    }

    // Under the dependent Jeffreys prior a single observation already gives a
    // finite total mass, π/(2x): the β integral is α^{1/2}/((α+1)(α+2)^{1/2})
    // times 1/(xα), which is checked numerically before integrating over α.
    #[test]
    fn single_observation_jeffreys_mass_is_finite() {
        let x = 2.0;
        let kind = PriorKind::JeffreysDependent;
        let alpha_part = |a: f64| (a.sqrt() / ((a + 1.0) * (a + 2.0).sqrt())).ln();
        for a in [0.3, 1.0, 4.0] {
            let closed = (alpha_part(a) - (x * a).ln()).exp();
            let numeric = beta_marginal(kind, &[x], a);
            assert!((numeric / closed - 1.0).abs() < 1e-7, "alpha={a}");
        }
        // α = s², so the α^{-1/2} singularity at zero disappears
        let total = 2.0
            * integrate(
                |s: f64| if s <= 0.0 { 0.0 } else { (alpha_part(s * s) - x.ln()).exp() / s },
                0.0,
                1e6,
                1e-14,
                1e-10,
            );
        let tail = 1.0 / (x * 1e12); // 2∫ 1/(x s³) beyond s = 1e6
        assert!((total + tail - std::f64::consts::PI / (2.0 * x)).abs() < 1e-8, "{total}");
    }

    // For n ≥ 2 the reference α-marginal still decays only like 1/(α S²),
    // S = Σxᵢ: along β = αθ the likelihood tends to an exponential likelihood
    // in θ. The mass beyond the bulk is therefore logarithmic in the cutoff.
    #[test]
    fn reference_alpha_marginal_tail_is_inverse_alpha() {
        let xs = [2.0, 5.0];
        let s: f64 = xs.iter().sum();
        for a in [1e3, 1e4] {
            let tail = beta_marginal(PriorKind::Reference, &xs, a) * a * s * s;
            assert!((tail - 1.0).abs() < 0.02, "alpha={a}: {tail}");
        }
        let jeff = beta_marginal(PriorKind::JeffreysDependent, &xs, 1e4) * 1e4 * s * s;
        assert!(jeff < 1e-3, "{jeff}");
    }

    #[test]
    fn log_posterior_is_likelihood_plus_prior() {
        let d = Dataset::new(vec![0.3, 1.2, 4.0, 0.0, 9.5]).unwrap();
        for kind in PriorKind::ALL {
            let mut offsets = Vec::new();
            for b in [0.3, 0.8, 1.5, 3.0, 10.0] {
                for a in [0.25, 0.6, 1.0, 2.0, 6.0] {
                    let q = p(b, a);
                    let loglik: f64 = d.values().iter().map(|&x| q.log_pdf(x).unwrap()).sum();
                    offsets.push(log_posterior(kind, &q, &d).unwrap() - loglik - log_prior(kind, &q));
                }
            }
            for o in &offsets {
                assert_abs_diff_eq!(*o, offsets[0], epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn reference_posterior_argmax_is_scale_equivariant() {
        let d = Dataset::new(vec![0.4, 1.1, 2.5, 0.2, 7.3, 0.9, 3.3, 0.05]).unwrap();
        let c = 3.0;
        let scaled = d.rescaled(c).unwrap();
        let betas: Vec<f64> = (1..=60).map(|i| 0.1 * i as f64).collect();
        let alphas: Vec<f64> = (1..=60).map(|i| 0.05 * i as f64).collect();
        let argmax = |data: &Dataset, scale: f64| {
            let mut best = (f64::NEG_INFINITY, 0, 0);
            for (i, &b) in betas.iter().enumerate() {
                for (j, &a) in alphas.iter().enumerate() {
                    let v = log_posterior(PriorKind::Reference, &p(b * scale, a), data).unwrap();
                    if v > best.0 {
                        best = (v, i, j);
                    }
                }
            }
            (best.1, best.2)
        };
        assert_eq!(argmax(&d, 1.0), argmax(&scaled, c));
    }

    #[test]
    fn parse_labels() {
        for kind in PriorKind::ALL {
            assert_eq!(kind.label().parse::<PriorKind>().unwrap(), kind);
        }
        assert!("flat".parse::<PriorKind>().is_err());
    }
}
