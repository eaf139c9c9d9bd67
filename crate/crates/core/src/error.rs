use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("non-positive density {rho} at node {node:?}")]
    NonPositiveDensity { rho: f64, node: Option<usize> },
    #[error("pressure law is not increasing at rho = {rho}: p'(rho) = {derivative}")]
    NonMonotonePressure { rho: f64, derivative: f64 },
    #[error("non-finite value at node {node}")]
    NonFinite { node: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("invalid kappa {kappa}: the full QGD regularization requires kappa >= 1")]
    InvalidKappa { kappa: f64 },
    #[error("invalid parameter {name} = {value}")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error("mesh does not span the Riemann domain")]
    DomainMismatch,
    #[error("trajectory has no snapshots")]
    EmptyTrajectory,
    #[error("norm check failed for {} (trial, step) pairs", violations.len())]
    ReportFailure { violations: Vec<(usize, usize)> },
}

pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidParameter { name, value })
    }
}

pub(crate) fn non_negative(name: &'static str, value: f64) -> Result<f64> {
    if value >= 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidParameter { name, value })
    }
}
