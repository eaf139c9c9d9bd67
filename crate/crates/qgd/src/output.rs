//! CSV tables and atomic file writes.

use std::io::{self, Write};
use std::path::Path;

use qgd_core::experiments::{compare_transition, RegionMap, Transition};
use qgd_core::schemes::{Diagnostics, Trajectory};
use qgd_core::spectral::StabilityVerdict;
use qgd_core::{Mesh, MeshState, Regularization};
use serde::Serialize;

/// Writes through a temporary file in the target directory and renames it
/// into place, so readers never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn to_csv<R: Serialize>(rows: impl IntoIterator<Item = R>) -> io::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(io::Error::other)?;
    }
    w.into_inner().map_err(|e| io::Error::other(e.to_string()))
}

#[derive(Serialize)]
struct ProfileRow {
    x: f64,
    rho: f64,
    u: f64,
}

pub fn snapshot_csv(mesh: &Mesh, state: &MeshState) -> io::Result<Vec<u8>> {
    to_csv(
        mesh.nodes()
            .into_iter()
            .zip(state.rho.iter().zip(&state.u))
            .map(|(x, (&rho, &u))| ProfileRow { x, rho, u }),
    )
}

#[derive(Serialize)]
struct DiagnosticsRow {
    t: f64,
    mass: f64,
    momentum: f64,
    min_rho: f64,
    max_abs_u: f64,
}

pub fn diagnostics_csv(traj: &Trajectory) -> io::Result<Vec<u8>> {
    to_csv(
        traj.diagnostics
            .iter()
            .map(|d: &Diagnostics| DiagnosticsRow {
                t: d.t,
                mass: d.mass,
                momentum: d.momentum,
                min_rho: d.min_rho,
                max_abs_u: d.max_abs_u,
            }),
    )
}

#[derive(Serialize)]
struct VerdictRow {
    alpha: f64,
    beta: f64,
    kappa: f64,
    variant: &'static str,
    necessary: bool,
    criterion: bool,
    sufficient: Option<bool>,
    oracle_rho: f64,
    oracle_gram: f64,
}

/// One row per `(α, β, κ, variant, verdict)`.
pub fn verdict_csv(
    rows: &[(f64, f64, f64, Regularization, StabilityVerdict)],
) -> io::Result<Vec<u8>> {
    to_csv(
        rows.iter()
            .map(|&(alpha, beta, kappa, variant, v)| VerdictRow {
                alpha,
                beta,
                kappa,
                variant: variant.name(),
                necessary: v.necessary_ok,
                criterion: v.criterion_ok,
                sufficient: v.sufficient_ok,
                oracle_rho: v.oracle_spectral_radius,
                oracle_gram: v.oracle_gram_max,
            }),
    )
}

#[derive(Serialize)]
struct CellRow {
    alpha: f64,
    beta: f64,
    verdict: &'static str,
    oscillation_score: f64,
}

pub fn region_csv(map: &RegionMap) -> io::Result<Vec<u8>> {
    to_csv(map.columns.iter().flat_map(|c| {
        c.betas.iter().zip(&c.verdicts).map(|(&beta, v)| CellRow {
            alpha: c.alpha,
            beta,
            verdict: v.classification.name(),
            oscillation_score: v.oscillation_score,
        })
    }))
}

#[derive(Serialize)]
struct CurveRow {
    alpha: f64,
    necessary: f64,
    criterion: f64,
    sufficient: Option<f64>,
    largest_conservative: Option<f64>,
    smallest_nonconservative: Option<f64>,
    transition: Option<f64>,
}

/// Overlay curves sampled on the α-grid with the empirical transition.
pub fn curves_csv(map: &RegionMap) -> io::Result<Vec<u8>> {
    to_csv(compare_transition(map).into_iter().map(|r| CurveRow {
        alpha: r.alpha,
        necessary: r.necessary,
        criterion: r.criterion,
        sufficient: r.sufficient,
        largest_conservative: r.largest_conservative,
        smallest_nonconservative: r.smallest_nonconservative,
        transition: r.transition.estimate(),
    }))
}

/// Plain-text transition report, one line per column.
pub fn transition_report(map: &RegionMap) -> String {
    let mut out = String::from("alpha  transition        criterion  necessary  sufficient\n");
    for r in compare_transition(map) {
        let t = match r.transition {
            Transition::Between(lo, hi) => format!("({lo:.4}, {hi:.4}]"),
            Transition::BelowGrid(b) => format!("< {b:.4}"),
            Transition::AboveGrid(b) => format!("> {b:.4}"),
        };
        let s = r.sufficient.map_or("-".to_string(), |s| format!("{s:.4}"));
        out.push_str(&format!(
            "{:<6} {:<17} {:<10.4} {:<10.4} {}{}\n",
            r.alpha,
            t,
            r.criterion,
            r.necessary,
            s,
            if r.monotone { "" } else { "  (non-monotone)" }
        ));
    }
    out
}
