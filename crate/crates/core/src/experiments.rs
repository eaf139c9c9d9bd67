//! Riemann problem runs and the (α, β) stability-region sweep.
//!
//! A run is classified by the growth of the discrete total variation of ρ
//! and by a density corridor around the initial states; a run that produces
//! ρ ≤ 0 or a non-finite value is an overflow. Sweeping (α, β) and comparing
//! the first unstable β per column with the closed-form thresholds measures
//! how well the linear theory predicts the nonlinear behaviour.
//!
//! This module is sequential. The companion crate runs the same cells on a
//! worker pool through [`SweepPlan`] and [`evaluate_cell`].

use alloc::vec::Vec;

use crate::config::{Regularization, SchemeConfig, SchemeKind};
use crate::error::{positive, Error, Result};
use crate::gas::GasModel;
use crate::mesh::{Boundary, Mesh, MeshState};
use crate::schemes::{run_simulation, Trajectory};
use crate::spectral::conditions::{
    criterion_threshold, necessary_threshold, sufficient_threshold, SUFFICIENT_KAPPA,
};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Primitive {
    pub rho: f64,
    pub u: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RiemannSetup {
    pub left: Primitive,
    pub right: Primitive,
    /// Jump location.
    pub x0: f64,
    pub x_min: f64,
    pub x_max: f64,
    pub h: f64,
    pub t_end: f64,
}

impl RiemannSetup {
    pub fn new(
        left: Primitive,
        right: Primitive,
        x0: f64,
        x_min: f64,
        x_max: f64,
        h: f64,
        t_end: f64,
    ) -> Result<Self> {
        positive("rho_left", left.rho)?;
        positive("rho_right", right.rho)?;
        positive("h", h)?;
        positive("t_end", t_end)?;
        if !(x_min < x0 && x0 < x_max) {
            return Err(Error::DomainMismatch);
        }
        Ok(Self {
            left,
            right,
            x0,
            x_min,
            x_max,
            h,
            t_end,
        })
    }

    /// ρ: 1 | 0.1, u: 0.1 | 0 at x₀ = 0 on [−1, 1], h = 1/125, t_end = 0.5.
    pub fn paper() -> Self {
        Self {
            left: Primitive { rho: 1.0, u: 0.1 },
            right: Primitive { rho: 0.1, u: 0.0 },
            x0: 0.0,
            x_min: -1.0,
            x_max: 1.0,
            h: 1.0 / 125.0,
            t_end: 0.5,
        }
    }

    /// Cell-centred mesh: `n = (x_max − x_min)/h` nodes at `x_min + (k + ½)h`,
    /// with outflow boundaries. Symmetric about the domain centre, so a jump
    /// at the centre falls between two nodes.
    pub fn mesh(&self) -> Result<Mesh> {
        let cells = libm::round((self.x_max - self.x_min) / self.h);
        Mesh::new(
            cells as usize,
            self.h,
            self.x_min + 0.5 * self.h,
            Boundary::CopyOutflow,
        )
    }

    /// Same problem seen in a mirror about the domain centre: states swapped,
    /// velocities negated.
    pub fn mirrored(&self) -> Self {
        let flip = |s: Primitive| Primitive {
            rho: s.rho,
            u: -s.u,
        };
        Self {
            left: flip(self.right),
            right: flip(self.left),
            x0: self.x_min + self.x_max - self.x0,
            ..*self
        }
    }

    /// √p′ at the larger initial density.
    pub fn default_c_ref(&self, model: &GasModel) -> Result<f64> {
        model.sound_speed(self.left.rho.max(self.right.rho))
    }

    pub fn thresholds(&self, rule: &OscillationRule) -> ClassifyThresholds {
        ClassifyThresholds {
            tv_ratio: rule.tv_ratio,
            rho_floor: rule.floor_factor * self.left.rho.min(self.right.rho),
            rho_ceil: rule.ceil_factor * self.left.rho.max(self.right.rho),
        }
    }
}

/// Step-function initial data; a node exactly at x₀ takes the left state.
pub fn riemann_initial(setup: &RiemannSetup, mesh: &Mesh) -> Result<MeshState> {
    let slack = 1e-9 * mesh.h;
    let (first, last) = (mesh.node(0), mesh.x_max());
    let inside = first >= setup.x_min - slack && last <= setup.x_max + slack;
    let covers = first <= setup.x_min + mesh.h + slack && last >= setup.x_max - mesh.h - slack;
    if !(inside && covers && first < setup.x0 && setup.x0 < last) {
        return Err(Error::DomainMismatch);
    }
    let (rho, u) = mesh
        .nodes()
        .into_iter()
        .map(|x| {
            let s = if x <= setup.x0 {
                setup.left
            } else {
                setup.right
            };
            (s.rho, s.u)
        })
        .unzip();
    MeshState::new(rho, u, 0.0)
}

/// Operational definition of a "noticeably oscillating" run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OscillationRule {
    /// Allowed TV(ρ)/TV₀(ρ).
    pub tv_ratio: f64,
    /// Corridor is [floor_factor·min(ρ_L, ρ_R), ceil_factor·max(ρ_L, ρ_R)].
    pub floor_factor: f64,
    pub ceil_factor: f64,
}

impl Default for OscillationRule {
    fn default() -> Self {
        Self {
            tv_ratio: 1.5,
            floor_factor: 0.5,
            ceil_factor: 2.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassifyThresholds {
    pub tv_ratio: f64,
    pub rho_floor: f64,
    pub rho_ceil: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Conservative,
    NonConservative,
    Overflow,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::Conservative => "conservative",
            Classification::NonConservative => "non_conservative",
            Classification::Overflow => "overflow",
        }
    }

    pub fn is_stable(self) -> bool {
        self == Classification::Conservative
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RunVerdict {
    pub classification: Classification,
    /// max over snapshots of TV(ρ)/TV₀(ρ).
    pub oscillation_score: f64,
    pub completed: bool,
}

impl RunVerdict {
    pub fn overflow() -> Self {
        Self {
            classification: Classification::Overflow,
            oscillation_score: f64::INFINITY,
            completed: false,
        }
    }
}

/// Σ |v_{k+1} − v_k|
pub fn total_variation(v: &[f64]) -> f64 {
    v.windows(2).map(|w| libm::fabs(w[1] - w[0])).sum()
}

pub fn classify_run(traj: &Trajectory, thresholds: &ClassifyThresholds) -> Result<RunVerdict> {
    let first = traj.snapshots.first().ok_or(Error::EmptyTrajectory)?;
    let tv0 = total_variation(&first.rho);
    let mut score: f64 = 0.0;
    let mut in_corridor = true;
    for snap in &traj.snapshots {
        let tv = total_variation(&snap.rho);
        let ratio = if tv0 > 0.0 {
            tv / tv0
        } else if tv <= 1e-12 * first.rho[0] {
            0.0
        } else {
            f64::INFINITY
        };
        score = score.max(ratio);
        in_corridor &= snap
            .rho
            .iter()
            .all(|&r| r >= thresholds.rho_floor && r <= thresholds.rho_ceil);
    }
    in_corridor &= traj
        .diagnostics
        .iter()
        .all(|d| d.min_rho >= thresholds.rho_floor);

    let classification = if traj.overflowed() {
        Classification::Overflow
    } else if score > thresholds.tv_ratio || !in_corridor {
        Classification::NonConservative
    } else {
        Classification::Conservative
    };
    Ok(RunVerdict {
        classification,
        oscillation_score: score,
        completed: !traj.overflowed(),
    })
}

/// Everything about a sweep cell except (α, β).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepSettings {
    pub scheme: SchemeKind,
    pub regularization: Regularization,
    pub alpha_s: f64,
    /// `None` selects [`RiemannSetup::default_c_ref`].
    pub c_ref: Option<f64>,
    pub record_every: usize,
    pub rule: OscillationRule,
}

impl SweepSettings {
    /// Enthalpy scheme, full QGD with α_s = 4/3 (κ = 7/3).
    pub fn paper_enthalpy() -> Self {
        Self {
            scheme: SchemeKind::Enthalpy,
            regularization: Regularization::FullQgd,
            alpha_s: 4.0 / 3.0,
            c_ref: None,
            record_every: 10,
            rule: OscillationRule::default(),
        }
    }

    pub fn kappa(&self) -> f64 {
        self.regularization.kappa(self.alpha_s)
    }

    pub fn scheme_config(
        &self,
        setup: &RiemannSetup,
        model: &GasModel,
        alpha: f64,
        beta: f64,
    ) -> Result<SchemeConfig> {
        let c_ref = match self.c_ref {
            Some(c) => c,
            None => setup.default_c_ref(model)?,
        };
        SchemeConfig::new(
            alpha,
            self.alpha_s,
            self.regularization,
            self.scheme,
            beta,
            c_ref,
        )
    }
}

/// Runs one Riemann problem to `setup.t_end`.
pub fn run_riemann(
    setup: &RiemannSetup,
    model: &GasModel,
    cfg: &SchemeConfig,
    record_every: usize,
) -> Result<Trajectory> {
    let mesh = setup.mesh()?;
    let initial = riemann_initial(setup, &mesh)?;
    run_simulation(&initial, &mesh, model, cfg, setup.t_end, record_every)
}

/// Runs and classifies one (α, β) cell. Any failure of the run itself is an
/// overflow verdict.
pub fn evaluate_cell(
    setup: &RiemannSetup,
    model: &GasModel,
    settings: &SweepSettings,
    alpha: f64,
    beta: f64,
) -> RunVerdict {
    let verdict = settings
        .scheme_config(setup, model, alpha, beta)
        .and_then(|cfg| run_riemann(setup, model, &cfg, settings.record_every))
        .and_then(|traj| classify_run(&traj, &setup.thresholds(&settings.rule)));
    verdict.unwrap_or_else(|_| RunVerdict::overflow())
}

#[derive(Clone, Debug, PartialEq)]
pub enum BetaGrid {
    /// The same β values in every column.
    Absolute(Vec<f64>),
    /// β = factor × β_criterion(α), per column.
    RelativeToCriterion(Vec<f64>),
}

/// The cells of a sweep, column by column.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepPlan {
    pub columns: Vec<(f64, Vec<f64>)>,
    pub kappa: f64,
    pub variant: Regularization,
}

impl SweepPlan {
    pub fn new(alphas: &[f64], grid: &BetaGrid, settings: &SweepSettings) -> Result<Self> {
        let kappa = settings.kappa();
        let variant = settings.regularization;
        let values = match grid {
            BetaGrid::Absolute(v) | BetaGrid::RelativeToCriterion(v) => v,
        };
        if alphas.is_empty() || values.is_empty() {
            return Err(Error::InvalidParameter {
                name: "grid size",
                value: 0.0,
            });
        }
        let mut columns = Vec::with_capacity(alphas.len());
        for &alpha in alphas {
            positive("alpha", alpha)?;
            let betas: Vec<f64> = match grid {
                BetaGrid::Absolute(b) => b.clone(),
                BetaGrid::RelativeToCriterion(f) => {
                    let crit = criterion_threshold(alpha, kappa, variant)?;
                    f.iter().map(|x| x * crit).collect()
                }
            };
            for &b in &betas {
                positive("beta", b)?;
            }
            columns.push((alpha, betas));
        }
        Ok(Self {
            columns,
            kappa,
            variant,
        })
    }

    /// `(column, row, α, β)` in column-major order.
    pub fn cells(&self) -> Vec<(usize, usize, f64, f64)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, (alpha, betas))| {
                betas
                    .iter()
                    .enumerate()
                    .map(move |(r, &b)| (c, r, *alpha, b))
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.columns.iter().map(|(_, b)| b.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegionColumn {
    pub alpha: f64,
    /// Ascending.
    pub betas: Vec<f64>,
    pub verdicts: Vec<RunVerdict>,
    pub necessary: f64,
    pub criterion: f64,
    pub sufficient: Option<f64>,
}

impl RegionColumn {
    /// First row after which three consecutive unstable cells are followed by
    /// a conservative one, if any.
    pub fn monotonicity_violation(&self) -> Option<usize> {
        let mut run = 0;
        for (i, v) in self.verdicts.iter().enumerate() {
            if v.classification.is_stable() {
                if run >= 3 {
                    return Some(i);
                }
                run = 0;
            } else {
                run += 1;
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegionMap {
    pub columns: Vec<RegionColumn>,
    pub kappa: f64,
    pub variant: Regularization,
    pub scheme: SchemeKind,
}

impl RegionMap {
    /// Builds the map from verdicts listed in [`SweepPlan::cells`] order.
    pub fn assemble(
        plan: &SweepPlan,
        verdicts: &[RunVerdict],
        model: &GasModel,
        scheme: SchemeKind,
    ) -> Result<Self> {
        if verdicts.len() != plan.len() {
            return Err(Error::LengthMismatch {
                expected: plan.len(),
                found: verdicts.len(),
            });
        }
        let sufficient_applies = sufficient_applies(model, plan.kappa);
        let mut offset = 0;
        let mut columns = Vec::with_capacity(plan.columns.len());
        for (alpha, betas) in &plan.columns {
            let mut rows: Vec<(f64, RunVerdict)> = betas
                .iter()
                .copied()
                .zip(verdicts[offset..offset + betas.len()].iter().copied())
                .collect();
            offset += betas.len();
            rows.sort_by(|a, b| a.0.total_cmp(&b.0));
            let (betas, verdicts) = rows.into_iter().unzip();
            columns.push(RegionColumn {
                alpha: *alpha,
                betas,
                verdicts,
                necessary: necessary_threshold(*alpha, plan.kappa, plan.variant)?,
                criterion: criterion_threshold(*alpha, plan.kappa, plan.variant)?,
                sufficient: sufficient_applies.then(|| sufficient_threshold(*alpha)),
            });
        }
        Ok(Self {
            columns,
            kappa: plan.kappa,
            variant: plan.variant,
            scheme,
        })
    }
}

/// The energy-method sufficient bound is only known for p(ρ) = ρ², κ = 7/3.
pub fn sufficient_applies(model: &GasModel, kappa: f64) -> bool {
    model.is_shallow_water() && libm::fabs(kappa - SUFFICIENT_KAPPA) < 1e-12
}

/// Sequential sweep over every (α, β) cell.
pub fn sweep_region(
    setup: &RiemannSetup,
    model: &GasModel,
    settings: &SweepSettings,
    alphas: &[f64],
    grid: &BetaGrid,
) -> Result<RegionMap> {
    let plan = SweepPlan::new(alphas, grid, settings)?;
    let verdicts: Vec<RunVerdict> = plan
        .cells()
        .into_iter()
        .map(|(_, _, a, b)| evaluate_cell(setup, model, settings, a, b))
        .collect();
    RegionMap::assemble(&plan, &verdicts, model, settings.scheme)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Transition {
    /// Even the smallest sampled β is unstable.
    BelowGrid(f64),
    /// Last stable β before the first unstable one, and that unstable β.
    Between(f64, f64),
    /// Every sampled β is stable.
    AboveGrid(f64),
}

impl Transition {
    /// Midpoint of the bracket, when there is one.
    pub fn estimate(&self) -> Option<f64> {
        match *self {
            Transition::Between(lo, hi) => Some(0.5 * (lo + hi)),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransitionRow {
    pub alpha: f64,
    pub largest_conservative: Option<f64>,
    pub smallest_nonconservative: Option<f64>,
    pub transition: Transition,
    /// False when a stable β lies above an unstable one.
    pub monotone: bool,
    pub necessary: f64,
    pub criterion: f64,
    pub sufficient: Option<f64>,
    /// estimate − curve, when the transition is bracketed.
    pub gap_criterion: Option<f64>,
    pub gap_necessary: Option<f64>,
    pub gap_sufficient: Option<f64>,
    /// necessary − criterion.
    pub criterion_vs_necessary: f64,
}

pub fn compare_transition(map: &RegionMap) -> Vec<TransitionRow> {
    map.columns
        .iter()
        .map(|col| {
            let stable = |i: &usize| col.verdicts[*i].classification.is_stable();
            let idx: Vec<usize> = (0..col.betas.len()).collect();
            let largest_conservative = idx.iter().rev().find(|i| stable(i)).map(|&i| col.betas[i]);
            let smallest_nonconservative = idx.iter().find(|i| !stable(i)).map(|&i| col.betas[i]);
            let transition = match idx.iter().position(|i| !stable(i)) {
                None => Transition::AboveGrid(*col.betas.last().unwrap_or(&0.0)),
                Some(0) => Transition::BelowGrid(col.betas[0]),
                Some(f) => Transition::Between(col.betas[f - 1], col.betas[f]),
            };
            let monotone = match (largest_conservative, smallest_nonconservative) {
                (Some(lo), Some(hi)) => lo < hi,
                _ => true,
            };
            let est = transition.estimate();
            TransitionRow {
                alpha: col.alpha,
                largest_conservative,
                smallest_nonconservative,
                transition,
                monotone,
                necessary: col.necessary,
                criterion: col.criterion,
                sufficient: col.sufficient,
                gap_criterion: est.map(|e| e - col.criterion),
                gap_necessary: est.map(|e| e - col.necessary),
                gap_sufficient: est.zip(col.sufficient).map(|(e, s)| e - s),
                criterion_vs_necessary: col.necessary - col.criterion,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemes::{Diagnostics, RunStatus};
    use alloc::vec;

    fn verdict(c: Classification) -> RunVerdict {
        RunVerdict {
            classification: c,
            oscillation_score: 1.0,
            completed: c != Classification::Overflow,
        }
    }

    #[test]
    fn paper_initial_data() {
        let setup = RiemannSetup::paper();
        let mesh = setup.mesh().unwrap();
        assert_eq!(mesh.n, 250);
        let s = riemann_initial(&setup, &mesh).unwrap();
        assert_eq!(&s.rho[..125], &[1.0; 125][..]);
        assert_eq!(&s.rho[125..], &[0.1; 125][..]);
        assert_eq!(&s.u[..125], &[0.1; 125][..]);
        assert_eq!(&s.u[125..], &[0.0; 125][..]);
    }

    #[test]
    fn node_at_jump_takes_left_state() {
        let setup = RiemannSetup::paper();
        let mesh = Mesh::new(250, setup.h, -1.0, Boundary::CopyOutflow).unwrap();
        let s = riemann_initial(&setup, &mesh).unwrap();
        assert_eq!(mesh.node(125), 0.0);
        assert_eq!(s.rho[125], 1.0);
        assert_eq!(s.rho[126], 0.1);
    }

    #[test]
    fn domain_mismatch() {
        let setup = RiemannSetup::paper();
        let shifted = Mesh::new(250, setup.h, 0.5, Boundary::CopyOutflow).unwrap();
        assert_eq!(
            riemann_initial(&setup, &shifted),
            Err(Error::DomainMismatch)
        );
        let short = Mesh::new(100, setup.h, -0.4, Boundary::CopyOutflow).unwrap();
        assert_eq!(riemann_initial(&setup, &short), Err(Error::DomainMismatch));
        let p = Primitive { rho: 1.0, u: 0.0 };
        assert!(RiemannSetup::new(p, p, 2.0, -1.0, 1.0, 0.01, 0.5).is_err());
    }

    #[test]
    fn mirrored_setup() {
        let m = RiemannSetup::paper().mirrored();
        assert_eq!(m.left, Primitive { rho: 0.1, u: -0.0 });
        assert_eq!(m.right, Primitive { rho: 1.0, u: -0.1 });
        assert_eq!(m.x0, 0.0);
    }

    #[test]
    fn constant_trajectory_is_conservative() {
        let state = MeshState::constant(10, 1.0, 0.2).unwrap();
        let traj = Trajectory {
            snapshots: vec![state.clone(), state.clone()],
            diagnostics: vec![Diagnostics::of(&state, 0.1)],
            steps: 1,
            status: RunStatus::Completed,
        };
        let thr = ClassifyThresholds {
            tv_ratio: 1.5,
            rho_floor: 0.5,
            rho_ceil: 2.0,
        };
        let v = classify_run(&traj, &thr).unwrap();
        assert_eq!(v.classification, Classification::Conservative);
        assert_eq!(v.oscillation_score, 0.0);
        assert!(v.completed);

        let empty = Trajectory {
            snapshots: vec![],
            ..traj
        };
        assert_eq!(classify_run(&empty, &thr), Err(Error::EmptyTrajectory));
    }

    #[test]
    fn score_and_corridor() {
        let a = MeshState::new(vec![1.0, 1.0, 0.1, 0.1], vec![0.0; 4], 0.0).unwrap();
        let wiggly = MeshState::new(vec![1.0, 0.4, 1.0, 0.1], vec![0.0; 4], 1.0).unwrap();
        let traj = Trajectory {
            snapshots: vec![a.clone(), wiggly],
            diagnostics: vec![Diagnostics::of(&a, 1.0)],
            steps: 1,
            status: RunStatus::Completed,
        };
        let thr = RiemannSetup::paper().thresholds(&OscillationRule::default());
        assert_eq!(thr.rho_floor, 0.05);
        assert_eq!(thr.rho_ceil, 2.0);
        let v = classify_run(&traj, &thr).unwrap();
        // TV: 0.9 → 0.6 + 0.6 + 0.9 = 2.1
        assert!((v.oscillation_score - 2.1 / 0.9).abs() < 1e-14);
        assert_eq!(v.classification, Classification::NonConservative);

        let overflow = Trajectory {
            status: RunStatus::Overflow {
                step: 2,
                t: 1.0,
                cause: Error::NonFinite { node: 0 },
            },
            ..traj
        };
        let v = classify_run(&overflow, &thr).unwrap();
        assert_eq!(v.classification, Classification::Overflow);
        assert!(!v.completed);
    }

    fn map_of(columns: Vec<(f64, Vec<f64>, Vec<Classification>)>) -> RegionMap {
        RegionMap {
            columns: columns
                .into_iter()
                .map(|(alpha, betas, cls)| RegionColumn {
                    alpha,
                    betas,
                    verdicts: cls.into_iter().map(verdict).collect(),
                    necessary: criterion_threshold(alpha, 7.0 / 3.0, Regularization::FullQgd)
                        .unwrap(),
                    criterion: criterion_threshold(alpha, 7.0 / 3.0, Regularization::FullQgd)
                        .unwrap(),
                    sufficient: Some(sufficient_threshold(alpha)),
                })
                .collect(),
            kappa: 7.0 / 3.0,
            variant: Regularization::FullQgd,
            scheme: SchemeKind::Enthalpy,
        }
    }

    #[test]
    fn transition_report() {
        use Classification::*;
        let map = map_of(vec![
            (
                0.4,
                vec![0.1, 0.2, 0.3],
                vec![Conservative, Conservative, Conservative],
            ),
            (
                0.5,
                vec![0.1, 0.2, 0.3, 0.4],
                vec![Conservative, Conservative, NonConservative, Overflow],
            ),
            (
                0.6,
                vec![0.1, 0.2, 0.3],
                vec![Overflow, Conservative, NonConservative],
            ),
        ]);
        let rows = compare_transition(&map);
        assert_eq!(rows[0].transition, Transition::AboveGrid(0.3));
        assert_eq!(rows[0].gap_criterion, None);
        assert_eq!(rows[1].transition, Transition::Between(0.2, 0.3));
        assert_eq!(rows[1].largest_conservative, Some(0.2));
        assert_eq!(rows[1].smallest_nonconservative, Some(0.3));
        assert!((rows[1].gap_criterion.unwrap() - (0.25 - rows[1].criterion)).abs() < 1e-15);
        assert!(rows[1].monotone);
        assert_eq!(rows[2].transition, Transition::BelowGrid(0.1));
        assert!(!rows[2].monotone);
    }

    #[test]
    fn monotonicity_violation() {
        use Classification::*;
        let map = map_of(vec![(
            0.4,
            vec![0.1, 0.2, 0.3, 0.4, 0.5],
            vec![
                Conservative,
                NonConservative,
                Overflow,
                NonConservative,
                Conservative,
            ],
        )]);
        assert_eq!(map.columns[0].monotonicity_violation(), Some(4));
        let map = map_of(vec![(
            0.4,
            vec![0.1, 0.2, 0.3],
            vec![Conservative, NonConservative, Conservative],
        )]);
        assert_eq!(map.columns[0].monotonicity_violation(), None);
    }

    #[test]
    fn plan_layout() {
        let settings = SweepSettings::paper_enthalpy();
        let plan = SweepPlan::new(
            &[0.2, 0.4],
            &BetaGrid::RelativeToCriterion(vec![0.5, 1.0]),
            &settings,
        )
        .unwrap();
        assert_eq!(plan.len(), 4);
        let cells = plan.cells();
        assert_eq!((cells[1].0, cells[1].1), (0, 1));
        assert!((cells[1].3 - 0.4).abs() < 1e-15);
        assert!(SweepPlan::new(&[], &BetaGrid::Absolute(vec![0.1]), &settings).is_err());
        assert!(SweepPlan::new(&[0.1], &BetaGrid::Absolute(vec![-0.1]), &settings).is_err());
    }
}
