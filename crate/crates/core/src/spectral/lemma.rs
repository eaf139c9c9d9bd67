//! Direct check of weak conservativeness: run the linearized scheme and
//! watch the discrete L² norm.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::conditions::criterion_threshold;
use super::linearized::{linearized_step, LinearizedParams};
use super::oracle::worst_mode;

/// Per-step relative slack allowed for rounding when the criterion holds.
pub const STEP_TOLERANCE: f64 = 1e-12;
/// Growth that counts as detected instability.
pub const GROWTH_TOLERANCE: f64 = 1e-6;
/// Relative excess of β over the threshold beyond which growth must show.
pub const DETECTION_MARGIN: f64 = 0.05;

/// `(Σ_k |ρ_k|² + |u_k|²)^{1/2}` for the initial data and after each step.
pub fn norm_history(
    rho: &[Complex64],
    u: &[Complex64],
    params: &LinearizedParams,
    steps: usize,
) -> Result<Vec<f64>> {
    let norm = |r: &[Complex64], v: &[Complex64]| {
        libm::sqrt(r.iter().chain(v).map(|z| z.norm_sqr()).sum::<f64>())
    };
    let mut history = Vec::with_capacity(steps + 1);
    let (mut r, mut v) = (rho.to_vec(), u.to_vec());
    history.push(norm(&r, &v));
    for _ in 0..steps {
        (r, v) = linearized_step(&r, &v, params)?;
        history.push(norm(&r, &v));
    }
    Ok(history)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Lemma1Report {
    pub criterion_holds: bool,
    /// β / β_criterion − 1 (infinite when no β > 0 is admitted).
    pub margin: f64,
    /// Largest ‖y^{m+1}‖ / ‖y^m‖ seen.
    pub max_step_ratio: f64,
    /// Largest max_m ‖y^m‖ / ‖y^0‖ over trials.
    pub max_growth: f64,
    /// Fourier mode used for the deterministic trial when the criterion fails.
    pub worst_mode: Option<usize>,
    pub trials: usize,
}

/// Runs `trials` initial data sets for `steps` steps on an `n`-periodic mesh.
///
/// Inside the criterion every step must be non-increasing up to
/// [`STEP_TOLERANCE`]. Outside by at least [`DETECTION_MARGIN`], trial 0 is the
/// worst discrete Fourier mode (top eigenvector of G*G) and some trial must
/// grow by more than [`GROWTH_TOLERANCE`]. Remaining trials are random complex
/// data drawn from `seed`.
pub fn verify_lemma1(
    params: &LinearizedParams,
    n: usize,
    steps: usize,
    trials: usize,
    seed: u64,
) -> Result<Lemma1Report> {
    let threshold = criterion_threshold(params.alpha, params.kappa, params.variant)?;
    let criterion_holds = params.beta <= threshold;
    let margin = if threshold > 0.0 {
        params.beta / threshold - 1.0
    } else {
        f64::INFINITY
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Lemma1Report {
        criterion_holds,
        margin,
        max_step_ratio: 0.0,
        max_growth: 0.0,
        worst_mode: None,
        trials,
    };
    let mut violations = Vec::new();

    for trial in 0..trials {
        let (rho, u) = if trial == 0 && !criterion_holds {
            let (mode, _, v) = worst_mode(params, n);
            report.worst_mode = Some(mode);
            let xi = 2.0 * PI * mode as f64 / n as f64;
            (0..n)
                .map(|k| {
                    let phase = Complex64::from_polar(1.0, xi * k as f64);
                    (phase * v[0], phase * v[1])
                })
                .unzip()
        } else {
            let mut sample = || {
                Complex64::new(
                    rng.random::<f64>() * 2.0 - 1.0,
                    rng.random::<f64>() * 2.0 - 1.0,
                )
            };
            let rho: Vec<Complex64> = (0..n).map(|_| sample()).collect();
            let u: Vec<Complex64> = (0..n).map(|_| sample()).collect();
            (rho, u)
        };
        let history = norm_history(&rho, &u, params, steps)?;
        let initial = history[0];
        for (step, pair) in history.windows(2).enumerate() {
            if pair[0] > 0.0 {
                report.max_step_ratio = report.max_step_ratio.max(pair[1] / pair[0]);
            }
            if criterion_holds && pair[1] > pair[0] * (1.0 + STEP_TOLERANCE) {
                violations.push((trial, step));
            }
        }
        if initial > 0.0 {
            let peak = history.iter().copied().fold(0.0, f64::max);
            report.max_growth = report.max_growth.max(peak / initial);
        }
    }

    if !violations.is_empty() {
        return Err(Error::ReportFailure { violations });
    }
    if !criterion_holds && margin >= DETECTION_MARGIN && report.max_growth <= 1.0 + GROWTH_TOLERANCE
    {
        return Err(Error::ReportFailure {
            violations: (0..trials).map(|t| (t, steps)).collect(),
        });
    }
    Ok(report)
}
