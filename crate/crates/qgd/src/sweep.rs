//! Parallel (α, β) sweep over scoped threads.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;
use std::thread;

use qgd_core::experiments::{
    evaluate_cell, RegionMap, RiemannSetup, RunVerdict, SweepPlan, SweepSettings,
};
use qgd_core::GasModel;

/// Environment variable overriding the configured worker count.
pub const WORKERS_ENV: &str = "QGD_WORKERS";

/// `QGD_WORKERS` if set and positive, else `configured`, with 0 meaning all
/// available cores.
pub fn resolve_workers(configured: usize) -> usize {
    let from_env = std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok());
    match from_env.filter(|&n| n > 0).unwrap_or(configured) {
        0 => thread::available_parallelism().map_or(1, |n| n.get()),
        n => n,
    }
}

/// Evaluates every cell of `plan` on `workers` threads. Each result lands in
/// its own slot, so the output does not depend on scheduling.
pub fn run_plan(
    plan: &SweepPlan,
    setup: &RiemannSetup,
    model: &GasModel,
    settings: &SweepSettings,
    workers: usize,
) -> Vec<RunVerdict> {
    let cells = plan.cells();
    let slots: Vec<OnceLock<RunVerdict>> = (0..cells.len()).map(|_| OnceLock::new()).collect();
    let next = AtomicUsize::new(0);
    thread::scope(|s| {
        for _ in 0..workers.clamp(1, cells.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(_, _, alpha, beta)) = cells.get(i) else {
                    break;
                };
                let _ = slots[i].set(evaluate_cell(setup, model, settings, alpha, beta));
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.into_inner().expect("every cell evaluated"))
        .collect()
}

pub fn sweep_parallel(
    plan: &SweepPlan,
    setup: &RiemannSetup,
    model: &GasModel,
    settings: &SweepSettings,
    workers: usize,
) -> qgd_core::Result<RegionMap> {
    let verdicts = run_plan(plan, setup, model, settings, workers);
    RegionMap::assemble(plan, &verdicts, model, settings.scheme)
}
