//! Self-check suites run by `qgd verify`.

use qgd_core::schemes::step;
use qgd_core::spectral::{
    criterion_threshold, necessary_threshold, spectral_radius_scan, verify_lemma1, LinearizedParams,
};
use qgd_core::{GasModel, Mesh, MeshState, Regularization, SchemeConfig, SchemeKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Oracle tolerance on λ ≤ 1.
pub const ORACLE_TOL: f64 = 1e-10;
/// Points this close to a threshold are not compared.
pub const THRESHOLD_BAND: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// `(κ, variant)` pairs of the equivalence grid: κ ∈ {1, 7/3, 4} under full
/// QGD, α_s ∈ {0, ½, 1, 2} under QHD.
pub fn equivalence_variants() -> Vec<(f64, Regularization)> {
    let mut v: Vec<_> = [1.0, 7.0 / 3.0, 4.0]
        .map(|k| (k, Regularization::FullQgd))
        .to_vec();
    v.extend([0.0, 0.5, 1.0, 2.0].map(|a| (a, Regularization::SimplifiedQhd)));
    v
}

/// α ∈ {0.05, …, 1.5}, β ∈ {0.05, …, 1.6}.
pub fn equivalence_grid() -> (Vec<f64>, Vec<f64>) {
    (
        (1..=30).map(|i| 0.05 * i as f64).collect(),
        (1..=32).map(|i| 0.05 * i as f64).collect(),
    )
}

pub fn oracle_equivalence(samples: usize) -> SuiteReport {
    let mut r = SuiteReport::new("oracle equivalence");
    let (alphas, betas) = equivalence_grid();
    for (kappa, variant) in equivalence_variants() {
        for &alpha in &alphas {
            let (Ok(nec), Ok(crit)) = (
                necessary_threshold(alpha, kappa, variant),
                criterion_threshold(alpha, kappa, variant),
            ) else {
                r.check(false, || {
                    format!("thresholds undefined at α={alpha} κ={kappa}")
                });
                continue;
            };
            for &beta in &betas {
                let p = match LinearizedParams::new(alpha, beta, kappa, variant) {
                    Ok(p) => p,
                    Err(e) => {
                        r.check(false, || e.to_string());
                        continue;
                    }
                };
                let scan = match spectral_radius_scan(&p, samples) {
                    Ok(s) => s,
                    Err(e) => {
                        r.check(false, || e.to_string());
                        continue;
                    }
                };
                let tag = || format!("α={alpha} β={beta} κ={kappa} {}", variant.name());
                if (beta - crit).abs() > THRESHOLD_BAND {
                    r.check(
                        (beta <= crit) == (scan.max_gram <= 1.0 + ORACLE_TOL),
                        || {
                            format!(
                                "criterion {}: closed {crit}, oracle λ_max {}",
                                tag(),
                                scan.max_gram
                            )
                        },
                    );
                }
                if (beta - nec).abs() > THRESHOLD_BAND {
                    r.check(
                        (beta <= nec) == (scan.max_radius <= 1.0 + ORACLE_TOL),
                        || {
                            format!(
                                "necessary {}: closed {nec}, oracle ρ {}",
                                tag(),
                                scan.max_radius
                            )
                        },
                    );
                }
            }
        }
    }
    r
}

/// A random linearized scheme with β at `factor` × the criterion threshold.
pub fn random_params(rng: &mut impl Rng, factor: f64) -> LinearizedParams {
    loop {
        let alpha = rng.random_range(0.05..1.5);
        let (kappa, variant) = if rng.random_bool(0.5) {
            (1.0 + rng.random_range(0.0..3.0), Regularization::FullQgd)
        } else {
            (rng.random_range(0.1..3.0), Regularization::SimplifiedQhd)
        };
        let crit = criterion_threshold(alpha, kappa, variant).expect("valid sample");
        if crit > 0.0 {
            return LinearizedParams::new(alpha, factor * crit, kappa, variant)
                .expect("valid sample");
        }
    }
}

/// 20 points inside the criterion must never increase the norm; 20 points at
/// least 5 % outside must show growth from the worst Fourier mode.
pub fn lemma1(seed: u64, n: usize, steps: usize) -> SuiteReport {
    let mut r = SuiteReport::new("lemma 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..40 {
        let inside = i < 20;
        let factor = if inside {
            rng.random_range(0.05..1.0)
        } else {
            rng.random_range(1.05..2.0)
        };
        let p = random_params(&mut rng, factor);
        let trials = if inside { 2 } else { 1 };
        let outcome = verify_lemma1(&p, n, steps, trials, seed.wrapping_add(i));
        r.check(
            matches!(&outcome, Ok(rep) if rep.criterion_holds == inside),
            || {
                format!(
                    "α={} β={} κ={} {}: {outcome:?}",
                    p.alpha,
                    p.beta,
                    p.kappa,
                    p.variant.name()
                )
            },
        );
    }
    r
}

fn periodic_bump(mesh: &Mesh) -> MeshState {
    let x = mesh.nodes();
    let len = mesh.x_max() - mesh.node(0) + mesh.h;
    let centre = mesh.node(0) + 0.5 * len;
    let rho = x
        .iter()
        .map(|&x| 1.0 + 0.2 * (-((x - centre) / (0.1 * len)).powi(2)).exp())
        .collect();
    let u = x
        .iter()
        .map(|&x| 0.1 * (2.0 * std::f64::consts::PI * x / len).sin())
        .collect();
    MeshState::new(rho, u, 0.0).expect("positive density")
}

/// Fixed points, periodic mass conservation (both schemes) and momentum
/// conservation (standard scheme only).
pub fn conservation(gas: &GasModel) -> SuiteReport {
    let mut r = SuiteReport::new("conservation");
    let mesh = Mesh::periodic(100, 0.01).expect("valid mesh");
    let outflow = Mesh::new(100, 0.01, 0.0, qgd_core::Boundary::CopyOutflow).expect("valid mesh");
    let c = gas.sound_speed(1.0).expect("ρ = 1 is admissible");
    for kind in [SchemeKind::Standard, SchemeKind::Enthalpy] {
        for variant in [Regularization::FullQgd, Regularization::SimplifiedQhd] {
            let cfg = SchemeConfig::new(0.4, 1.0, variant, kind, 0.4, c).expect("valid scheme");
            let tag = format!("{} {}", kind.name(), variant.name());

            for m in [&mesh, &outflow] {
                let mut s = MeshState::constant(m.n, 0.7, -0.3).expect("valid state");
                let mut ok = true;
                for _ in 0..1000 {
                    match step(&s, m, gas, &cfg) {
                        Ok(next) => s = next,
                        Err(_) => {
                            ok = false;
                            break;
                        }
                    }
                }
                let drift = s
                    .rho
                    .iter()
                    .map(|x| (x - 0.7).abs())
                    .chain(s.u.iter().map(|x| (x + 0.3).abs()))
                    .fold(0.0, f64::max);
                r.check(ok && drift < 1e-12, || {
                    format!("{tag}: constant state drifted by {drift}")
                });
            }

            let s0 = periodic_bump(&mesh);
            let mut s = s0.clone();
            let mut ok = true;
            for _ in 0..500 {
                match step(&s, &mesh, gas, &cfg) {
                    Ok(next) => s = next,
                    Err(_) => {
                        ok = false;
                        break;
                    }
                }
            }
            let (m0, m1) = (s0.total_mass(mesh.h), s.total_mass(mesh.h));
            r.check(ok && (m1 - m0).abs() <= 1e-12 * m0, || {
                format!("{tag}: mass {m0} -> {m1}")
            });
            if kind == SchemeKind::Standard {
                let (p0, p1) = (s0.total_momentum(mesh.h), s.total_momentum(mesh.h));
                r.check(ok && (p1 - p0).abs() <= 1e-12, || {
                    format!("{tag}: momentum {p0} -> {p1}")
                });
            }
        }
    }
    r
}
