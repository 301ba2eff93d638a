//! Closed-form evaluation of the convergence bounds, plateau radii, and
//! default stepsizes, so every run can be checked against the rate it is
//! supposed to obey.
//!
//! Plain compressed iteration over `n` nodes contracts like
//! `(1 - rho + 2 omega c^2 / n)^k` down to a ball of squared radius
//! `(B + 2 omega sigma^2 / n) / (rho - 2 omega c^2 / n)`, provided
//! `rho > 2 omega c^2 / n`. The variance-reduced iteration contracts the
//! Lyapunov value like `(1 - min(alpha, eta rho) / 2)^k` down to
//! `2 eta B / min(alpha, eta rho)` for any `omega`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::ContractionCertificate;

/// Stepsizes of the variance-reduced iteration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VrParams {
    pub alpha: f64,
    pub eta: f64,
}

impl VrParams {
    pub fn validate(&self) -> Result<()> {
        let ok = |v: f64| v.is_finite() && v > 0.0 && v <= 1.0;
        if ok(self.alpha) && ok(self.eta) {
            Ok(())
        } else {
            Err(Error::invalid_config(format!(
                "stepsizes must lie in (0, 1]: alpha = {}, eta = {}",
                self.alpha, self.eta
            )))
        }
    }
}

/// One theorem's conclusion for a concrete configuration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    /// Per-iteration contraction factor of the bound.
    pub rate_factor: f64,
    /// Squared radius of the limiting ball; `None` means unbounded
    /// (hypothesis violated).
    pub plateau_radius_sq: Option<f64>,
    /// Whether the theorem's hypothesis holds for this configuration.
    pub valid: bool,
    pub hypothesis_note: String,
}

/// Rate and plateau of the plain (non variance-reduced) compressed iteration.
/// An invalid hypothesis is reported as data, not an error: the frontier is
/// something experiments deliberately cross.
pub fn plain_bound(cert: &ContractionCertificate, omega: f64, n: usize) -> BoundReport {
    let n = n as f64;
    let drift = 2.0 * omega * cert.c_sq / n;
    let rate_factor = 1.0 - cert.rho + drift;
    let margin = cert.rho - drift;
    if margin > 0.0 {
        BoundReport {
            rate_factor,
            plateau_radius_sq: Some((cert.b + 2.0 * omega * cert.sigma_sq / n) / margin),
            valid: true,
            hypothesis_note: format!(
                "rho = {} > 2*omega*c^2/n = {drift}; frontier is omega < {}",
                cert.rho,
                cert.rho / (2.0 * cert.c_sq) * n
            ),
        }
    } else {
        BoundReport {
            rate_factor,
            plateau_radius_sq: None,
            valid: false,
            hypothesis_note: format!(
                "hypothesis rho > 2*omega*c^2/n fails ({} <= {drift}); \
                 no contraction is guaranteed",
                cert.rho
            ),
        }
    }
}

/// Default stepsizes of the variance-reduced iteration:
/// `alpha = 1/(1 + omega)` and `eta = min(1, rho n / (12 omega c^2))`,
/// with `eta = 1` at `omega = 0` (the formula's limit direction).
pub fn vr_stepsizes(cert: &ContractionCertificate, omega: f64, n: usize) -> VrParams {
    let alpha = 1.0 / (1.0 + omega);
    let eta = if omega == 0.0 {
        1.0
    } else {
        (cert.rho * n as f64 / (12.0 * omega * cert.c_sq)).min(1.0)
    };
    VrParams { alpha, eta }
}

/// Rate and plateau of the variance-reduced iteration's Lyapunov value.
pub fn vr_bound(
    cert: &ContractionCertificate,
    params: VrParams,
    omega: f64,
    n: usize,
) -> BoundReport {
    let eta_cap = if omega == 0.0 {
        1.0
    } else {
        (cert.rho * n as f64 / (12.0 * omega * cert.c_sq)).min(1.0)
    };
    let alpha_cap = 1.0 / (1.0 + omega);
    let slack = 1.0 + 1e-12;
    if params.validate().is_err()
        || params.alpha > alpha_cap * slack
        || params.eta > eta_cap * slack
    {
        return BoundReport {
            rate_factor: 1.0,
            plateau_radius_sq: None,
            valid: false,
            hypothesis_note: format!(
                "stepsizes outside the admissible range: need alpha <= {alpha_cap} \
                 and eta <= {eta_cap}"
            ),
        };
    }
    let min_step = params.alpha.min(params.eta * cert.rho);
    let rate_factor = 1.0 - min_step / 2.0;
    let note = if params.alpha < params.eta * cert.rho {
        format!(
            "rate is alpha-limited (alpha = {} < eta*rho = {}); a larger alpha \
             up to {alpha_cap} would converge faster",
            params.alpha,
            params.eta * cert.rho
        )
    } else {
        format!("rate limited by eta*rho = {}", params.eta * cert.rho)
    };
    BoundReport {
        rate_factor,
        plateau_radius_sq: Some(2.0 * params.eta * cert.b / min_step),
        valid: true,
        hypothesis_note: note,
    }
}

/// `A^k r0 + B0 / (1 - A)`: the closed form dominating any sequence with
/// `r_{k+1} <= A r_k + B0`.
pub fn geometric_bound(a: f64, b0: f64, r0: f64, k: u64) -> Result<f64> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::invalid_config(format!(
            "geometric factor must lie in (0, 1), got {a}"
        )));
    }
    Ok(a.powi(k as i32) * r0 + b0 / (1.0 - a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::Provenance;

    fn cert(rho: f64, b: f64, c_sq: f64, sigma_sq: f64) -> ContractionCertificate {
        ContractionCertificate {
            rho,
            b,
            c_sq,
            sigma_sq,
            b_provenance: Provenance::Exact,
            sigma_sq_provenance: Provenance::Exact,
        }
    }

    #[test]
    fn plain_bound_formula() {
        let report = plain_bound(&cert(0.5, 0.0, 1.0, 1.0), 0.125, 1);
        assert_eq!(report.rate_factor, 0.75);
        assert!(report.valid);
    }

    #[test]
    fn plain_bound_no_compression_limit() {
        let report = plain_bound(&cert(0.3, 0.7, 1.0, 1.0), 0.0, 1);
        assert_eq!(report.rate_factor, 1.0 - 0.3);
        assert!((report.plateau_radius_sq.unwrap() - 0.7 / 0.3).abs() < 1e-15);
    }

    #[test]
    fn plain_bound_worked_plateau() {
        // sigma^2 = ||x*||^2 = 2, rho = 0.5, omega = 1/8, B = 0, n = 1:
        // plateau = 2 * 0.125 * 2 / 0.25 = 2.
        let report = plain_bound(&cert(0.5, 0.0, 1.0, 2.0), 0.125, 1);
        assert_eq!(report.plateau_radius_sq, Some(2.0));
    }

    #[test]
    fn plain_bound_invalid_hypothesis_is_data() {
        let report = plain_bound(&cert(0.1, 0.0, 1.0, 1.0), 1.0, 1);
        assert!(!report.valid);
        assert!(report.plateau_radius_sq.is_none());
        assert!(report.rate_factor >= 1.0);
    }

    #[test]
    fn vr_stepsize_formula() {
        let p = vr_stepsizes(&cert(0.5, 0.0, 1.0, 0.0), 0.125, 1);
        assert!((p.alpha - 8.0 / 9.0).abs() < 1e-15);
        assert!((p.eta - 1.0 / 3.0).abs() < 1e-15);

        let lossless = vr_stepsizes(&cert(0.5, 0.0, 1.0, 0.0), 0.0, 1);
        assert_eq!(lossless.alpha, 1.0);
        assert_eq!(lossless.eta, 1.0);
    }

    #[test]
    fn vr_bound_formula() {
        let c = cert(0.5, 0.0, 1.0, 0.0);
        let report = vr_bound(
            &c,
            VrParams {
                alpha: 8.0 / 9.0,
                eta: 1.0 / 3.0,
            },
            0.125,
            1,
        );
        assert!((report.rate_factor - 11.0 / 12.0).abs() < 1e-15);
        assert_eq!(report.plateau_radius_sq, Some(0.0));
        assert!(report.valid);
    }

    #[test]
    fn vr_bound_tie_case() {
        // alpha = eta * rho: both branches of the min agree.
        let c = cert(0.5, 1.0, 1.0, 0.0);
        let p = VrParams {
            alpha: 0.3,
            eta: 0.6,
        };
        let report = vr_bound(&c, p, 0.05, 1);
        assert!(report.valid, "{}", report.hypothesis_note);
        assert_eq!(report.rate_factor, 1.0 - 0.15);
        assert_eq!(report.plateau_radius_sq, Some(2.0 * 0.6 * 1.0 / 0.3));
    }

    #[test]
    fn vr_bound_rejects_out_of_range_params() {
        let c = cert(0.5, 0.0, 1.0, 0.0);
        let report = vr_bound(
            &c,
            VrParams {
                alpha: 0.99,
                eta: 1.0,
            },
            0.125,
            1,
        );
        assert!(!report.valid);
    }

    #[test]
    fn geometric_bound_examples() {
        assert_eq!(geometric_bound(0.75, 0.5, 4.0, 2).unwrap(), 0.5625 * 4.0 + 2.0);
        assert_eq!(geometric_bound(0.5, 0.25, 3.0, 0).unwrap(), 3.0 + 0.5);
        let tail = geometric_bound(0.5, 0.0, 1.0, 200).unwrap();
        assert!(tail < 1e-30);
        assert!(geometric_bound(1.0, 0.0, 1.0, 1).is_err());
        assert!(geometric_bound(0.0, 0.0, 1.0, 1).is_err());
    }

    #[test]
    fn lossless_limits_agree() {
        // At omega = 0: plain rate is 1 - rho; vr rate with alpha = eta = 1
        // is 1 - min(1, rho)/2.
        let c = cert(0.4, 0.0, 1.0, 0.0);
        let plain = plain_bound(&c, 0.0, 1);
        assert_eq!(plain.rate_factor, 1.0 - 0.4);
        let vr = vr_bound(
            &c,
            VrParams {
                alpha: 1.0,
                eta: 1.0,
            },
            0.0,
            1,
        );
        assert_eq!(vr.rate_factor, 1.0 - 0.4f64.min(1.0) / 2.0);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // geometric_bound dominates the exact recursion r' = A r + B.
            #[test]
            fn recursion_dominance(
                a in 0.01f64..0.99,
                b0 in 0.0f64..10.0,
                r0 in 0.0f64..10.0,
            ) {
                let mut r = r0;
                for k in 0..200u64 {
                    let bound = geometric_bound(a, b0, r0, k).unwrap();
                    prop_assert!(r <= bound * (1.0 + 1e-12) + 1e-12, "k={k}: {r} > {bound}");
                    r = a * r + b0;
                }
            }

            // Plain rate is nondecreasing in omega and nonincreasing in n.
            #[test]
            fn plain_rate_monotonicity(
                rho in 0.01f64..1.0,
                c_sq in 0.1f64..4.0,
                omega in 0.0f64..2.0,
                extra in 0.0f64..2.0,
                n in 1usize..20,
            ) {
                let c = cert(rho, 0.0, c_sq, 1.0);
                let r1 = plain_bound(&c, omega, n).rate_factor;
                let r2 = plain_bound(&c, omega + extra, n).rate_factor;
                prop_assert!(r2 >= r1);
                let r3 = plain_bound(&c, omega, n + 1).rate_factor;
                prop_assert!(r3 <= r1);
            }

            // VR rate depends only on (alpha, eta, rho) once params are fixed.
            #[test]
            fn vr_rate_ignores_omega(
                rho in 0.01f64..1.0,
                omega in 0.0f64..0.5,
            ) {
                let c = cert(rho, 0.0, 1.0, 1.0);
                let params = vr_stepsizes(&c, 0.5, 1);
                let a = vr_bound(&c, params, 0.5, 1).rate_factor;
                // Same params remain admissible for smaller omega.
                let b = vr_bound(&c, params, 0.5 * omega, 1).rate_factor;
                prop_assert_eq!(a, b);
            }
        }
    }
}
