//! Closed-form stability thresholds β ≤ β_max(α, κ).
//!
//! | condition | full QGD, or QHD with κ = α_s ≥ 1 | QHD with 0 ≤ α_s ≤ 1 |
//! |-----------|-----------------------------------|----------------------|
//! | spectral radius ≤ 1 | min{(κ+1)α, 1/(2κα)} | min{(α_s+1)α, 1/(2α)} |
//! | λ_max(G*G) ≤ 1 | min{2α, 1/(2κα)} | min{2α_sα, 1/(2α)} |
//!
//! All comparisons are non-strict.

use crate::config::Regularization;
use crate::error::{positive, Result};

use super::linearized::{check_kappa, LinearizedParams};

fn small_qhd(kappa: f64, variant: Regularization) -> bool {
    variant == Regularization::SimplifiedQhd && kappa <= 1.0
}

/// Largest β satisfying the von Neumann (spectral radius) condition.
pub fn necessary_threshold(alpha: f64, kappa: f64, variant: Regularization) -> Result<f64> {
    positive("alpha", alpha)?;
    check_kappa(kappa, variant)?;
    Ok(if small_qhd(kappa, variant) {
        ((kappa + 1.0) * alpha).min(1.0 / (2.0 * alpha))
    } else {
        ((kappa + 1.0) * alpha).min(1.0 / (2.0 * kappa * alpha))
    })
}

/// Largest β satisfying λ_max(G*G) ≤ 1, i.e. weak conservativeness.
pub fn criterion_threshold(alpha: f64, kappa: f64, variant: Regularization) -> Result<f64> {
    positive("alpha", alpha)?;
    check_kappa(kappa, variant)?;
    Ok(if small_qhd(kappa, variant) {
        (2.0 * kappa * alpha).min(1.0 / (2.0 * alpha))
    } else {
        (2.0 * alpha).min(1.0 / (2.0 * kappa * alpha))
    })
}

pub fn necessary_condition(params: &LinearizedParams) -> Result<bool> {
    Ok(params.beta <= necessary_threshold(params.alpha, params.kappa, params.variant)?)
}

pub fn weak_conservativeness_criterion(params: &LinearizedParams) -> Result<bool> {
    Ok(params.beta <= criterion_threshold(params.alpha, params.kappa, params.variant)?)
}

/// Energy-method sufficient bound, known only for p(ρ) = ρ² and κ = 7/3:
/// min{2α/(1 + 6α + 4α²), 4α/(1 + 6α + 16α²)}.
pub fn sufficient_threshold(alpha: f64) -> f64 {
    let first = 2.0 * alpha / (1.0 + 6.0 * alpha + 4.0 * alpha * alpha);
    let second = 4.0 * alpha / (1.0 + 6.0 * alpha + 16.0 * alpha * alpha);
    first.min(second)
}

pub fn sufficient_condition_sw(alpha: f64, beta: f64) -> bool {
    beta <= sufficient_threshold(alpha)
}

/// κ for which [`sufficient_threshold`] was derived.
pub const SUFFICIENT_KAPPA: f64 = 7.0 / 3.0;

/// Right-hand side of the applicable criterion.
pub fn max_stable_beta(alpha: f64, kappa: f64, variant: Regularization) -> Result<f64> {
    criterion_threshold(alpha, kappa, variant)
}

/// `(α*, β_max(α*))` maximizing the criterion over α, or `None` when no β > 0
/// is ever stable (QHD with α_s = 0).
pub fn optimal_alpha(kappa: f64, variant: Regularization) -> Result<Option<(f64, f64)>> {
    check_kappa(kappa, variant)?;
    if kappa == 0.0 {
        return Ok(None);
    }
    let root = libm::sqrt(kappa);
    let alpha = 1.0 / (2.0 * root);
    let beta = if small_qhd(kappa, variant) {
        root
    } else {
        1.0 / root
    };
    Ok(Some((alpha, beta)))
}
