//! Precomputed correction table for near-boundary targets.
//!
//! For a fixed grid, boundary, and alpha, every (target, panel) pair that is
//! not accurate under direct 16-point Gauss-Legendre gets a stored weight
//! delta (corrected minus direct). Evaluation then runs a global direct sum
//! (honoring the skip list) and adds the sparse corrections.

use super::{near_corrected, select_scheme, QuadratureError, SchemeChoice, N_OUTPUTS};
use crate::geometry::{bernstein_radius, nearest_panels, preimage, PanelizedBoundary, SpatialBins};
use crate::quadrature::weights::direct_block;
use crate::quadrature::workpanel::WorkPanel;
use num_complex::Complex64;
use rayon::prelude::*;

/// Correction weights for one (target, panel-or-merged-pair) interaction.
#[derive(Debug, Clone)]
pub struct CorrectionEntry {
    pub target: u32,
    /// One or two source panels (merged pairs store both, in curve order).
    pub panels: Vec<u32>,
    /// Delta weights, layout [6][2][16 * panels.len()].
    pub w: Vec<f64>,
}

#[derive(Debug, Default)]
pub struct CorrectionTable {
    pub entries: Vec<CorrectionEntry>,
    /// (target, global node) pairs whose direct interaction must be skipped.
    pub skips: Vec<(u32, u32)>,
    /// Whether gradient rows are populated.
    pub with_gradient: bool,
    pub alpha: f64,
}

impl CorrectionTable {
    /// Per-target skip masks as a sorted lookup.
    pub fn skip_set(&self) -> std::collections::HashSet<(u32, u32)> {
        self.skips.iter().copied().collect()
    }
}

struct PanelInfo {
    panel: usize,
    rho: f64,
}

fn corrections_for_target(
    b: &PanelizedBoundary,
    bins: &SpatialBins,
    t_idx: u32,
    x: [f64; 2],
    alpha: f64,
    grad: bool,
) -> Result<(Vec<CorrectionEntry>, Vec<(u32, u32)>), QuadratureError> {
    let cand = nearest_panels(b, bins, x, 1.2);
    if cand.is_empty() {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut infos = Vec::new();
    for pid in cand {
        let s = preimage(b, pid, x)?;
        let rho = bernstein_radius(s);
        infos.push(PanelInfo { panel: pid, rho });
    }
    // Merge detection: adjacent candidate pairs with the target very close
    // to their shared edge.
    let mut merged_pair: Option<(usize, usize)> = None;
    let mut best_edge = f64::INFINITY;
    for info in &infos {
        let next = b.neighbors(info.panel)[1];
        if infos.iter().any(|o| o.panel == next) {
            let edge = b.panels[info.panel].z_end;
            let r = (Complex64::new(x[0], x[1]) - edge).norm();
            let min_h = b.panels[info.panel].h.min(b.panels[next].h);
            if r < 0.05 * min_h && r < best_edge {
                best_edge = r;
                merged_pair = Some((info.panel, next));
            }
        }
    }

    let mut entries = Vec::new();
    let mut skips = Vec::new();
    let skip_nodes_of = |pid: usize, skips: &mut Vec<(u32, u32)>| -> Vec<usize> {
        let h = b.panels[pid].h;
        let mut local = Vec::new();
        for m in b.panels[pid].nodes() {
            let d = ((x[0] - b.positions[m][0]).powi(2) + (x[1] - b.positions[m][1]).powi(2))
                .sqrt();
            if d < 0.05 * h {
                skips.push((t_idx, m as u32));
                local.push(m - b.panels[pid].first_node);
            }
        }
        local
    };

    let mut handled = Vec::new();
    if let Some((pa, pb)) = merged_pair {
        handled.push(pa);
        handled.push(pb);
        let corrected = near_corrected(b, &[pa, pb], x, alpha, grad)?;
        let mut w = corrected.w;
        for (slot, &pid) in [pa, pb].iter().enumerate() {
            let skipped = skip_nodes_of(pid, &mut skips);
            let work = WorkPanel::base16(b, pid);
            let direct = direct_block(&work, Complex64::new(x[0], x[1]), alpha, grad);
            let cols = 32;
            for a in 0..N_OUTPUTS {
                for c in 0..2 {
                    for m in 0..16 {
                        if !skipped.contains(&m) {
                            w[(a * 2 + c) * cols + slot * 16 + m] -= direct.w[(a * 2 + c) * 16 + m];
                        }
                    }
                }
            }
        }
        entries.push(CorrectionEntry {
            target: t_idx,
            panels: vec![pa as u32, pb as u32],
            w,
        });
    }
    for info in &infos {
        if handled.contains(&info.panel) {
            continue;
        }
        let flags = select_scheme(info.rho, f64::INFINITY, 1.0, f64::INFINITY, 1.0);
        if flags.choice == SchemeChoice::Direct16 {
            continue;
        }
        let corrected = near_corrected(b, &[info.panel], x, alpha, grad)?;
        let skipped = skip_nodes_of(info.panel, &mut skips);
        let work = WorkPanel::base16(b, info.panel);
        let direct = direct_block(&work, Complex64::new(x[0], x[1]), alpha, grad);
        let mut w = corrected.w;
        for a in 0..N_OUTPUTS {
            for c in 0..2 {
                for m in 0..16 {
                    if !skipped.contains(&m) {
                        w[(a * 2 + c) * 16 + m] -= direct.w[(a * 2 + c) * 16 + m];
                    }
                }
            }
        }
        entries.push(CorrectionEntry { target: t_idx, panels: vec![info.panel as u32], w });
    }
    Ok((entries, skips))
}

/// Build the correction table for a set of evaluation targets.
pub fn build_correction_table(
    b: &PanelizedBoundary,
    bins: &SpatialBins,
    targets: &[[f64; 2]],
    alpha: f64,
    grad: bool,
) -> Result<CorrectionTable, QuadratureError> {
    let per_target: Result<Vec<_>, QuadratureError> = targets
        .par_iter()
        .enumerate()
        .map(|(i, &x)| corrections_for_target(b, bins, i as u32, x, alpha, grad))
        .collect();
    let mut table = CorrectionTable {
        entries: Vec::new(),
        skips: Vec::new(),
        with_gradient: grad,
        alpha,
    };
    for (entries, skips) in per_target? {
        table.entries.extend(entries);
        table.skips.extend(skips);
    }
    Ok(table)
}
