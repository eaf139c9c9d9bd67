use crate::error::{non_negative, positive, Result};
use crate::gas::GasModel;

/// Which regularizing terms are kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regularization {
    /// All QGD terms; effective viscosity κ = α_s + 1.
    FullQgd,
    /// QHD: terms built from ∂ₓ(ρu) are dropped and w = ŵ; κ = α_s.
    SimplifiedQhd,
}

impl Regularization {
    pub fn kappa(self, alpha_s: f64) -> f64 {
        match self {
            Regularization::FullQgd => alpha_s + 1.0,
            Regularization::SimplifiedQhd => alpha_s,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Regularization::FullQgd => "full_qgd",
            Regularization::SimplifiedQhd => "simplified_qhd",
        }
    }
}

/// Spatial discretization of the pressure terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchemeKind {
    /// Pressure differences δp(ρ) in divergence form.
    Standard,
    /// Enthalpy differences δh(ρ), weakly conservative in energy.
    Enthalpy,
}

impl SchemeKind {
    pub fn name(self) -> &'static str {
        match self {
            SchemeKind::Standard => "standard",
            SchemeKind::Enthalpy => "enthalpy",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchemeConfig {
    /// Regularization strength in τ = αh/√p′(ρ).
    pub alpha: f64,
    /// Viscosity factor in μ = α_s τ ρ p′(ρ).
    pub alpha_s: f64,
    pub regularization: Regularization,
    pub scheme: SchemeKind,
    /// Courant number β = c_ref Δt / h.
    pub beta: f64,
    /// Sound speed converting β into a time step.
    pub c_ref: f64,
}

impl SchemeConfig {
    pub fn new(
        alpha: f64,
        alpha_s: f64,
        regularization: Regularization,
        scheme: SchemeKind,
        beta: f64,
        c_ref: f64,
    ) -> Result<Self> {
        positive("alpha", alpha)?;
        non_negative("alpha_s", alpha_s)?;
        positive("beta", beta)?;
        positive("c_ref", c_ref)?;
        Ok(Self {
            alpha,
            alpha_s,
            regularization,
            scheme,
            beta,
            c_ref,
        })
    }

    pub fn kappa(&self) -> f64 {
        self.regularization.kappa(self.alpha_s)
    }

    /// Δt = β h / c_ref.
    pub fn time_step(&self, h: f64) -> f64 {
        self.beta * h / self.c_ref
    }
}

/// Regularization coefficients at one density value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Regularizers {
    pub tau: f64,
    pub mu: f64,
}

/// τ(ρ) = αh/√p′(ρ) and μ(ρ) = α_s τ(ρ) ρ p′(ρ).
pub fn regularization_params(
    model: &GasModel,
    cfg: &SchemeConfig,
    h: f64,
    rho: f64,
) -> Result<Regularizers> {
    let (_, dp) = model.pressure(rho)?;
    Ok(regularizers_from(cfg.alpha, cfg.alpha_s, h, rho, dp))
}

#[inline]
pub(crate) fn regularizers_from(
    alpha: f64,
    alpha_s: f64,
    h: f64,
    rho: f64,
    dp: f64,
) -> Regularizers {
    let tau = alpha * h / libm::sqrt(dp);
    Regularizers {
        tau,
        mu: alpha_s * tau * rho * dp,
    }
}
