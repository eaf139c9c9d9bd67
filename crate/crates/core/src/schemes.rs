//! Nonlinear explicit time steppers.
//!
//! Both schemes are two-level in time and three-point in space. Fluxes are
//! evaluated on the half-mesh from time level m values only, then the mass
//! update is applied, then the momentum update, and `u⁺ = (ρu)⁺ / ρ⁺`.
//!
//! Standard scheme:
//!
//! ```text
//! δ_t ρ + δ* j = 0,   δ_t(ρu) + δ*(j su + p(sρ) − Π) = 0
//! j = (sρ)su − (sρ)w,  (sρ)w = (sτ)[δ(ρu)]su + (sρ)ŵ
//! (sρ)ŵ = (sτ)[(sρ)(su)δu + δp(ρ)]
//! Π = μδu + (su)(sρ)ŵ + (sτ)p′(sρ)δ(ρu)
//! ```
//!
//! Enthalpy scheme:
//!
//! ```text
//! δ_t ρ + δ* j = 0,   δ_t(ρu) + δ*(j su − Π) + s*[(sρ)δh(ρ)] = 0
//! j = sρ·su − sρ·w,   sρ·w = [(τ∂ₓ)_h(ρu)]su + (sρ)ŵ
//! ŵ = (sτ)[(su)δu + δh(ρ)],  Π = μδu + (su)(sρ)ŵ + p′(sρ)(τ∂ₓ)_h(ρu)
//! (τ∂ₓ)_h(ρu) = s(τ/h′(ρ)) {[δh(ρ)]su + p′(sρ)δu}
//! ```
//!
//! The QHD simplification drops the `δ(ρu)` and `(τ∂ₓ)_h(ρu)` terms.
//! μ on the half-mesh is μ(sρ) = α_s τ(sρ) sρ p′(sρ).

use alloc::vec::Vec;

use crate::config::{regularizers_from, Regularization, SchemeConfig, SchemeKind};
use crate::error::{Error, Result};
use crate::gas::GasModel;
use crate::mesh::{Mesh, MeshState};

/// Regularized fluxes on the half-mesh (length `n + 1`, see [`Mesh`]).
#[derive(Clone, Debug, PartialEq)]
pub struct HalfMeshFluxes {
    /// Regularized mass flux.
    pub j: Vec<f64>,
    pub w: Vec<f64>,
    pub w_hat: Vec<f64>,
    /// Regularized stress.
    pub pi: Vec<f64>,
    /// Navier–Stokes part μδu of `pi`.
    pub pi_ns: Vec<f64>,
}

impl HalfMeshFluxes {
    fn with_capacity(len: usize) -> Self {
        Self {
            j: Vec::with_capacity(len),
            w: Vec::with_capacity(len),
            w_hat: Vec::with_capacity(len),
            pi: Vec::with_capacity(len),
            pi_ns: Vec::with_capacity(len),
        }
    }
}

struct HalfMesh {
    fluxes: HalfMeshFluxes,
    /// Argument of δ* in the momentum equation.
    momentum_flux: Vec<f64>,
    /// (sρ)δh(ρ), averaged by s* in the enthalpy momentum equation.
    enthalpy_source: Option<Vec<f64>>,
}

struct Nodal {
    rho: Vec<f64>,
    u: Vec<f64>,
    m: Vec<f64>,
    tau: Vec<f64>,
    p: Vec<f64>,
    /// h(ρ) and τ/h′(ρ), enthalpy scheme only.
    enthalpy: Vec<f64>,
    tau_over_dh: Vec<f64>,
}

fn at_node(err: Error, padded: usize, n: usize) -> Error {
    match err {
        Error::NonPositiveDensity { rho, .. } => Error::NonPositiveDensity {
            rho,
            node: Some(padded.saturating_sub(1).min(n - 1)),
        },
        other => other,
    }
}

fn nodal(
    state: &MeshState,
    mesh: &Mesh,
    model: &GasModel,
    cfg: &SchemeConfig,
    kind: SchemeKind,
) -> Result<Nodal> {
    mesh.check_nodes(state.u.len())?;
    let rho = mesh.pad(&state.rho)?;
    let u = mesh.pad(&state.u)?;
    let len = rho.len();
    let mut out = Nodal {
        m: Vec::with_capacity(len),
        tau: Vec::with_capacity(len),
        p: Vec::with_capacity(len),
        enthalpy: Vec::new(),
        tau_over_dh: Vec::new(),
        rho,
        u,
    };
    for k in 0..len {
        let r = out.rho[k];
        let (p, dp) = model.pressure(r).map_err(|e| at_node(e, k, mesh.n))?;
        let tau = regularizers_from(cfg.alpha, cfg.alpha_s, mesh.h, r, dp).tau;
        out.m.push(r * out.u[k]);
        out.tau.push(tau);
        out.p.push(p);
        if kind == SchemeKind::Enthalpy {
            let (h, dh) = model.enthalpy(r).map_err(|e| at_node(e, k, mesh.n))?;
            out.enthalpy.push(h);
            out.tau_over_dh.push(tau / dh);
        }
    }
    Ok(out)
}

fn half_mesh(
    state: &MeshState,
    mesh: &Mesh,
    model: &GasModel,
    cfg: &SchemeConfig,
    kind: SchemeKind,
) -> Result<HalfMesh> {
    let nd = nodal(state, mesh, model, cfg, kind)?;
    let h = mesh.h;
    let full = cfg.regularization == Regularization::FullQgd;
    let len = mesh.n + 1;
    let mut fluxes = HalfMeshFluxes::with_capacity(len);
    let mut momentum_flux = Vec::with_capacity(len);
    let mut source = Vec::with_capacity(if kind == SchemeKind::Enthalpy { len } else { 0 });

    for i in 0..len {
        let (l, r) = (i, i + 1);
        let s_rho = 0.5 * (nd.rho[l] + nd.rho[r]);
        let s_u = 0.5 * (nd.u[l] + nd.u[r]);
        let s_tau = 0.5 * (nd.tau[l] + nd.tau[r]);
        let d_u = (nd.u[r] - nd.u[l]) / h;
        let d_m = (nd.m[r] - nd.m[l]) / h;
        let (p_s, dp_s) = model.pressure(s_rho)?;
        let mu = regularizers_from(cfg.alpha, cfg.alpha_s, h, s_rho, dp_s).mu;
        let pi_ns = mu * d_u;

        let (w_hat, w, pi) = match kind {
            SchemeKind::Standard => {
                let d_p = (nd.p[r] - nd.p[l]) / h;
                let w_hat = s_tau * (s_rho * s_u * d_u + d_p) / s_rho;
                let mut w = w_hat;
                let mut pi = pi_ns + s_u * s_rho * w_hat;
                if full {
                    w += s_tau * d_m * s_u / s_rho;
                    pi += s_tau * dp_s * d_m;
                }
                (w_hat, w, pi)
            }
            SchemeKind::Enthalpy => {
                let d_h = (nd.enthalpy[r] - nd.enthalpy[l]) / h;
                let w_hat = s_tau * (s_u * d_u + d_h);
                let mut w = w_hat;
                let mut pi = pi_ns + s_u * s_rho * w_hat;
                if full {
                    let s_tau_over_dh = 0.5 * (nd.tau_over_dh[l] + nd.tau_over_dh[r]);
                    let tau_dx_m = s_tau_over_dh * (d_h * s_u + dp_s * d_u);
                    w += tau_dx_m * s_u / s_rho;
                    pi += dp_s * tau_dx_m;
                }
                source.push(s_rho * d_h);
                (w_hat, w, pi)
            }
        };
        let j = s_rho * s_u - s_rho * w;
        momentum_flux.push(match kind {
            SchemeKind::Standard => j * s_u + p_s - pi,
            SchemeKind::Enthalpy => j * s_u - pi,
        });
        fluxes.j.push(j);
        fluxes.w.push(w);
        fluxes.w_hat.push(w_hat);
        fluxes.pi.push(pi);
        fluxes.pi_ns.push(pi_ns);
    }
    Ok(HalfMesh {
        fluxes,
        momentum_flux,
        enthalpy_source: (kind == SchemeKind::Enthalpy).then_some(source),
    })
}

/// Half-mesh fluxes of the standard scheme.
pub fn fluxes_standard(
    state: &MeshState,
    mesh: &Mesh,
    model: &GasModel,
    cfg: &SchemeConfig,
) -> Result<HalfMeshFluxes> {
    Ok(half_mesh(state, mesh, model, cfg, SchemeKind::Standard)?.fluxes)
}

/// Half-mesh fluxes of the enthalpy scheme.
pub fn fluxes_enthalpy(
    state: &MeshState,
    mesh: &Mesh,
    model: &GasModel,
    cfg: &SchemeConfig,
) -> Result<HalfMeshFluxes> {
    Ok(half_mesh(state, mesh, model, cfg, SchemeKind::Enthalpy)?.fluxes)
}

/// One step of the standard scheme with Δt = β h / c_ref.
pub fn step_standard(
    state: &MeshState,
    mesh: &Mesh,
    model: &GasModel,
    cfg: &SchemeConfig,
) -> Result<MeshState> {
    advance(
        state,
        mesh,
        model,
        cfg,
        SchemeKind::Standard,
        cfg.time_step(mesh.h),
    )
}

/// One step of the enthalpy scheme with Δt = β h / c_ref.
pub fn step_enthalpy(
    state: &MeshState,
    mesh: &Mesh,
    model: &GasModel,
    cfg: &SchemeConfig,
) -> Result<MeshState> {
    advance(
        state,
        mesh,
        model,
        cfg,
        SchemeKind::Enthalpy,
        cfg.time_step(mesh.h),
    )
}

/// One step of the scheme selected by `cfg.scheme`.
pub fn step(
    state: &MeshState,
    mesh: &Mesh,
    model: &GasModel,
    cfg: &SchemeConfig,
) -> Result<MeshState> {
    advance(state, mesh, model, cfg, cfg.scheme, cfg.time_step(mesh.h))
}

/// One step of size `dt` of the given scheme.
pub fn advance(
    state: &MeshState,
    mesh: &Mesh,
    model: &GasModel,
    cfg: &SchemeConfig,
    kind: SchemeKind,
    dt: f64,
) -> Result<MeshState> {
    let hm = half_mesh(state, mesh, model, cfg, kind)?;
    let h = mesh.h;
    let j = &hm.fluxes.j;
    let f = &hm.momentum_flux;
    let mut rho = Vec::with_capacity(mesh.n);
    let mut u = Vec::with_capacity(mesh.n);
    for k in 0..mesh.n {
        let rho_new = state.rho[k] - dt * (j[k + 1] - j[k]) / h;
        let mut div = (f[k + 1] - f[k]) / h;
        if let Some(g) = &hm.enthalpy_source {
            div += 0.5 * (g[k] + g[k + 1]);
        }
        let m_new = state.rho[k] * state.u[k] - dt * div;
        if !rho_new.is_finite() || !m_new.is_finite() {
            return Err(Error::NonFinite { node: k });
        }
        if rho_new <= 0.0 {
            return Err(Error::NonPositiveDensity {
                rho: rho_new,
                node: Some(k),
            });
        }
        rho.push(rho_new);
        u.push(m_new / rho_new);
    }
    Ok(MeshState {
        rho,
        u,
        t: state.t + dt,
    })
}

/// Conservation and boundedness diagnostics of one time level.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Diagnostics {
    pub t: f64,
    pub mass: f64,
    pub momentum: f64,
    pub min_rho: f64,
    pub max_abs_u: f64,
}

impl Diagnostics {
    pub fn of(state: &MeshState, h: f64) -> Self {
        Self {
            t: state.t,
            mass: state.total_mass(h),
            momentum: state.total_momentum(h),
            min_rho: state.min_rho(),
            max_abs_u: state.max_abs_u(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum RunStatus {
    Completed,
    /// A step produced a non-finite value or ρ ≤ 0; the run stopped there.
    Overflow {
        step: usize,
        t: f64,
        cause: Error,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    /// Time-ordered states: the initial one, every `record_every` steps, and
    /// the last accepted one.
    pub snapshots: Vec<MeshState>,
    /// One record per accepted time level, initial level included.
    pub diagnostics: Vec<Diagnostics>,
    pub steps: usize,
    pub status: RunStatus,
}

impl Trajectory {
    pub fn overflowed(&self) -> bool {
        matches!(self.status, RunStatus::Overflow { .. })
    }

    pub fn final_state(&self) -> Option<&MeshState> {
        self.snapshots.last()
    }
}

/// Advances `initial` to `t_end` with the configured scheme. The last step is
/// shortened to land on `t_end`. Step failures end the run with
/// [`RunStatus::Overflow`] instead of an error.
pub fn run_simulation(
    initial: &MeshState,
    mesh: &Mesh,
    model: &GasModel,
    cfg: &SchemeConfig,
    t_end: f64,
    record_every: usize,
) -> Result<Trajectory> {
    if !t_end.is_finite() || t_end <= initial.t {
        return Err(Error::InvalidParameter {
            name: "t_end",
            value: t_end,
        });
    }
    if record_every == 0 {
        return Err(Error::InvalidParameter {
            name: "record_every",
            value: 0.0,
        });
    }
    mesh.check_nodes(initial.rho.len())?;
    mesh.check_nodes(initial.u.len())?;

    let dt = cfg.time_step(mesh.h);
    let eps = 1e-12 * t_end;
    let mut state = initial.clone();
    let mut snapshots = alloc::vec![state.clone()];
    let mut diagnostics = alloc::vec![Diagnostics::of(&state, mesh.h)];
    let mut steps = 0;
    let mut status = RunStatus::Completed;

    while state.t < t_end - eps {
        let dt_step = dt.min(t_end - state.t);
        match advance(&state, mesh, model, cfg, cfg.scheme, dt_step) {
            Ok(mut next) => {
                if t_end - next.t <= eps {
                    next.t = t_end;
                }
                state = next;
                steps += 1;
                diagnostics.push(Diagnostics::of(&state, mesh.h));
                if steps % record_every == 0 {
                    snapshots.push(state.clone());
                }
            }
            Err(cause) => {
                status = RunStatus::Overflow {
                    step: steps + 1,
                    t: state.t,
                    cause,
                };
                break;
            }
        }
    }
    if snapshots.last().map(|s| s.t) != Some(state.t) {
        snapshots.push(state);
    }
    Ok(Trajectory {
        snapshots,
        diagnostics,
        steps,
        status,
    })
}
