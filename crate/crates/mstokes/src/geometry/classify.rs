//! Interior classification of the embedded uniform grid.
//!
//! Three passes: (1) the Laplace double layer identity evaluated with the
//! underlying Gauss-Legendre quadrature, threshold 1/2; (2) points too close
//! to the boundary for that quadrature re-decided by the sign of
//! (x - x_c) . n(x_c) with x_c the nearest boundary node; (3) points closer
//! to x_c than its neighboring nodes decided by the sign of Im[preimage].

use super::{nearest_panels, preimage, PanelizedBoundary, SpatialBins};
use crate::grid::{InteriorMask, UniformGrid};
use rayon::prelude::*;

/// Laplace double layer identity at x: ~1 inside, ~0 outside
/// (n points into the fluid domain).
fn laplace_identity(b: &PanelizedBoundary, x: [f64; 2]) -> f64 {
    let mut phi = 0.0;
    for m in 0..b.n_nodes() {
        let d = [x[0] - b.positions[m][0], x[1] - b.positions[m][1]];
        let r2 = d[0] * d[0] + d[1] * d[1];
        phi += (d[0] * b.normals[m][0] + d[1] * b.normals[m][1]) / r2 * b.weights[m];
    }
    phi / (2.0 * std::f64::consts::PI)
}

fn classify_point(b: &PanelizedBoundary, bins: &SpatialBins, node_gap: &[f64], x: [f64; 2]) -> bool {
    let near = nearest_panels(b, bins, x, 1.2);
    if near.is_empty() {
        return laplace_identity(b, x) > 0.5;
    }
    // Nearest boundary node among the nearby bins.
    let mut best = (f64::INFINITY, usize::MAX);
    for m in bins.nearby_nodes(x) {
        let m = m as usize;
        let d = [x[0] - b.positions[m][0], x[1] - b.positions[m][1]];
        let d2 = d[0] * d[0] + d[1] * d[1];
        if d2 < best.0 {
            best = (d2, m);
        }
    }
    let (d2, mc) = best;
    if d2.sqrt() >= node_gap[mc] {
        let d = [x[0] - b.positions[mc][0], x[1] - b.positions[mc][1]];
        return d[0] * b.normals[mc][0] + d[1] * b.normals[mc][1] >= 0.0;
    }
    // Too close to x_c: decide from the panel preimage.
    match preimage(b, b.node_panel[mc], x) {
        Ok(s) => s.im >= 0.0,
        // Geometrically impossible for resolved boundaries; fall back to the
        // normal test rather than poisoning the mask.
        Err(_) => {
            let d = [x[0] - b.positions[mc][0], x[1] - b.positions[mc][1]];
            d[0] * b.normals[mc][0] + d[1] * b.normals[mc][1] >= 0.0
        }
    }
}

/// Distance from each node to its nearest neighbor node within the loop.
fn node_gaps(b: &PanelizedBoundary) -> Vec<f64> {
    let mut gaps = vec![f64::INFINITY; b.n_nodes()];
    for lp in &b.loops {
        let first = b.panels[lp.first_panel].first_node;
        let count = lp.n_panels * super::NODES_PER_PANEL;
        for k in 0..count {
            let m = first + k;
            let mn = first + (k + 1) % count;
            let d = [
                b.positions[m][0] - b.positions[mn][0],
                b.positions[m][1] - b.positions[mn][1],
            ];
            let dist = (d[0] * d[0] + d[1] * d[1]).sqrt();
            gaps[m] = gaps[m].min(dist);
            gaps[mn] = gaps[mn].min(dist);
        }
    }
    gaps
}

/// Classify every node of `grid` as interior or exterior to the fluid domain.
pub fn classify_interior(
    grid: &UniformGrid,
    b: &PanelizedBoundary,
    bins: &SpatialBins,
) -> InteriorMask {
    let gaps = node_gaps(b);
    let inside: Vec<bool> = (0..grid.len())
        .into_par_iter()
        .map(|idx| classify_point(b, bins, &gaps, grid.point_of(idx)))
        .collect();
    InteriorMask::new(grid.n, grid.n, inside)
}

/// Classification of arbitrary points (same algorithm as the grid version).
pub fn classify_points(b: &PanelizedBoundary, bins: &SpatialBins, pts: &[[f64; 2]]) -> Vec<bool> {
    let gaps = node_gaps(b);
    pts.par_iter().map(|&x| classify_point(b, bins, &gaps, x)).collect()
}
