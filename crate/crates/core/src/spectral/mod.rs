//! Stability of the linearized schemes in the discrete L² norm.
//!
//! Linearized on a constant state (ρ*, u* = 0) and scaled by ρ* and the
//! background sound speed c*, both nonlinear schemes become
//!
//! ```text
//! ρ⁺ = ρ − β/2 (u₊ − u₋) + αβ (ρ₊ − 2ρ + ρ₋)
//! u⁺ = u − β/2 (ρ₊ − ρ₋) + καβ (u₊ − 2u + u₋)
//! ```
//!
//! with β = c*Δt/h. A Fourier mode e^{ikξ} is multiplied by the 2×2 matrix
//! G(ξ) each step. The spectral radius bound on G is necessary for stability;
//! the bound λ_max(G*G) ≤ 1 is necessary and sufficient for the norm never to
//! exceed its initial value (and then it is non-increasing). Both have closed
//! forms in (α, β, κ), implemented in [`conditions`] and checked against the
//! sampled maxima of [`oracle`].

pub mod conditions;
pub mod lemma;
pub mod linearized;
pub mod matrix;
pub mod oracle;

pub use conditions::{
    criterion_threshold, max_stable_beta, necessary_condition, necessary_threshold, optimal_alpha,
    sufficient_condition_sw, sufficient_threshold, weak_conservativeness_criterion,
};
pub use lemma::{norm_history, verify_lemma1, Lemma1Report};
pub use linearized::{linearized_step, LinearizedParams};
pub use matrix::{gram_max_eigen, AmplificationMatrix, GramMatrix};
pub use oracle::{
    assess, spectral_radius_scan, worst_mode, OracleScan, StabilityVerdict, DEFAULT_SAMPLES,
};
