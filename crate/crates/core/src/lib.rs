//! Explicit two-level, three-point finite-difference schemes for the 1D
//! barotropic gas dynamics equations with quasi-gasdynamic (QGD) and
//! quasi-hydrodynamic (QHD) regularizations, together with the L² stability
//! theory of their linearization.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs; IO, configuration files, plotting and the thread
//! pool used for parameter sweeps live in the `qgd` companion crate.
//!
//! Layout:
//! - [`gas`]: pressure law p(ρ) and enthalpy h(ρ).
//! - [`mesh`] and [`ops`]: uniform mesh, node state and the averaging and
//!   difference operators between the main mesh and the half-mesh.
//! - [`config`]: regularization parameters α, α_s, Courant number β.
//! - [`schemes`]: the standard and the "enthalpy" time steppers.
//! - [`spectral`]: linearized scheme, amplification matrix, closed-form
//!   stability thresholds and the brute-force spectral oracle.
//! - [`experiments`]: Riemann problem runs, classification and (α, β) sweeps.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod config;
pub mod error;
pub mod experiments;
pub mod gas;
pub mod mesh;
pub mod ops;
pub mod schemes;
pub mod spectral;

pub use config::{regularization_params, Regularization, Regularizers, SchemeConfig, SchemeKind};
pub use error::{Error, Result};
pub use gas::{GasModel, PressureLaw};
pub use mesh::{Boundary, Mesh, MeshState};
pub use num_complex::Complex64;
