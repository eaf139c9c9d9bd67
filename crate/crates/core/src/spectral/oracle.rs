//! Brute-force maxima of |λ(G)| and λ_max(G*G) over a uniform ξ-grid.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::conditions::{criterion_threshold, necessary_threshold, sufficient_threshold};
use super::linearized::LinearizedParams;
use super::matrix::AmplificationMatrix;

pub const DEFAULT_SAMPLES: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleScan {
    /// max over the grid of the spectral radius of G(ξ).
    pub max_radius: f64,
    /// max over the grid of λ_max(G*G)(ξ).
    pub max_gram: f64,
}

/// Scans ξ_j = 2πj/n. Both quantities are even about ξ = π (θ is, and only
/// ω₂² enters the spectra), so only j ≤ n/2 is evaluated.
pub fn spectral_radius_scan(params: &LinearizedParams, n_samples: usize) -> Result<OracleScan> {
    if n_samples < 64 {
        return Err(Error::InvalidParameter {
            name: "n_samples",
            value: n_samples as f64,
        });
    }
    let mut scan = OracleScan {
        max_radius: 0.0,
        max_gram: 0.0,
    };
    for j in 0..=n_samples / 2 {
        let g = AmplificationMatrix::new(2.0 * PI * j as f64 / n_samples as f64, params);
        scan.max_radius = scan.max_radius.max(g.spectral_radius());
        scan.max_gram = scan.max_gram.max(g.gram().max_eigenvalue());
    }
    Ok(scan)
}

/// Fourier mode `n` of an `n_nodes`-periodic mesh maximizing λ_max(G*G),
/// with the top eigenvector of G*G there.
pub fn worst_mode(params: &LinearizedParams, n_nodes: usize) -> (usize, f64, [Complex64; 2]) {
    let mut best = (
        0,
        f64::NEG_INFINITY,
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
    );
    for mode in 0..n_nodes {
        let gram = AmplificationMatrix::new(2.0 * PI * mode as f64 / n_nodes as f64, params).gram();
        let lambda = gram.max_eigenvalue();
        if lambda > best.1 {
            best = (mode, lambda, gram.top_eigenvector());
        }
    }
    best
}

/// Closed-form verdicts next to the oracle values.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StabilityVerdict {
    pub necessary_ok: bool,
    pub criterion_ok: bool,
    /// Only meaningful for p(ρ) = ρ² and κ = 7/3.
    pub sufficient_ok: Option<bool>,
    pub necessary_threshold: f64,
    pub criterion_threshold: f64,
    pub sufficient_threshold: Option<f64>,
    pub oracle_spectral_radius: f64,
    pub oracle_gram_max: f64,
}

pub fn assess(
    params: &LinearizedParams,
    n_samples: usize,
    sufficient_applies: bool,
) -> Result<StabilityVerdict> {
    let nec = necessary_threshold(params.alpha, params.kappa, params.variant)?;
    let crit = criterion_threshold(params.alpha, params.kappa, params.variant)?;
    let suff = sufficient_applies.then(|| sufficient_threshold(params.alpha));
    let scan = spectral_radius_scan(params, n_samples)?;
    Ok(StabilityVerdict {
        necessary_ok: params.beta <= nec,
        criterion_ok: params.beta <= crit,
        sufficient_ok: suff.map(|s| params.beta <= s),
        necessary_threshold: nec,
        criterion_threshold: crit,
        sufficient_threshold: suff,
        oracle_spectral_radius: scan.max_radius,
        oracle_gram_max: scan.max_gram,
    })
}
