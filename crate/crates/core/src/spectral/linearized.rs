use alloc::vec::Vec;

use num_complex::Complex64;

use crate::config::Regularization;
use crate::error::{positive, Error, Result};

/// Parameters of the linearized scheme.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearizedParams {
    pub alpha: f64,
    pub beta: f64,
    /// Effective viscosity: α_s + 1 under full QGD, α_s under QHD.
    pub kappa: f64,
    pub variant: Regularization,
}

impl LinearizedParams {
    pub fn new(alpha: f64, beta: f64, kappa: f64, variant: Regularization) -> Result<Self> {
        positive("alpha", alpha)?;
        positive("beta", beta)?;
        check_kappa(kappa, variant)?;
        Ok(Self {
            alpha,
            beta,
            kappa,
            variant,
        })
    }

    /// Full QGD with κ = α_s + 1.
    pub fn full_qgd(alpha: f64, beta: f64, alpha_s: f64) -> Result<Self> {
        Self::new(alpha, beta, alpha_s + 1.0, Regularization::FullQgd)
    }

    /// QHD with κ = α_s.
    pub fn simplified_qhd(alpha: f64, beta: f64, alpha_s: f64) -> Result<Self> {
        Self::new(alpha, beta, alpha_s, Regularization::SimplifiedQhd)
    }

    pub fn with_beta(self, beta: f64) -> Self {
        Self { beta, ..self }
    }
}

pub(crate) fn check_kappa(kappa: f64, variant: Regularization) -> Result<()> {
    let ok = kappa.is_finite()
        && match variant {
            Regularization::FullQgd => kappa >= 1.0,
            Regularization::SimplifiedQhd => kappa >= 0.0,
        };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidKappa { kappa })
    }
}

/// One step of the linearized scheme on a periodic mesh.
pub fn linearized_step(
    rho: &[Complex64],
    u: &[Complex64],
    params: &LinearizedParams,
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    let n = rho.len();
    if u.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: u.len(),
        });
    }
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let LinearizedParams {
        alpha, beta, kappa, ..
    } = *params;
    let half_beta = 0.5 * beta;
    let diffusion_rho = alpha * beta;
    let diffusion_u = kappa * alpha * beta;
    let mut rho_next = Vec::with_capacity(n);
    let mut u_next = Vec::with_capacity(n);
    for k in 0..n {
        let (km, kp) = ((k + n - 1) % n, (k + 1) % n);
        rho_next.push(
            rho[k] - (u[kp] - u[km]) * half_beta
                + (rho[kp] - rho[k] * 2.0 + rho[km]) * diffusion_rho,
        );
        u_next.push(
            u[k] - (rho[kp] - rho[km]) * half_beta + (u[kp] - u[k] * 2.0 + u[km]) * diffusion_u,
        );
    }
    Ok((rho_next, u_next))
}
