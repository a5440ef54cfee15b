//! Boundary geometry: composite Gauss-Legendre panelization of closed
//! curves, panel preimages and Bernstein radii, spatial search bins, and
//! interior classification of embedded grids.

mod classify;
mod curve;

pub use classify::{classify_interior, classify_points};
pub use curve::Curve;

use crate::numutil;
use num_complex::Complex64;
use thiserror::Error;

pub const NODES_PER_PANEL: usize = 16;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("curve is not regular: |g'(t)| vanishes near t = {0}")]
    DegenerateCurve(f64),
    #[error("need at least 4 panels per curve, got {0}")]
    TooFewPanels(usize),
    #[error("preimage Newton iteration failed to converge")]
    PreimageDiverged,
}

/// One 16-node panel of a panelized loop.
#[derive(Debug, Clone)]
pub struct Panel {
    pub loop_id: usize,
    /// Global parameter interval [t0, t1] on the owning curve (t1 > t0;
    /// the last panel of a loop extends past 2*pi).
    pub t0: f64,
    pub t1: f64,
    /// Global node index of this panel's first node.
    pub first_node: usize,
    /// Complex endpoint positions.
    pub z_start: Complex64,
    pub z_end: Complex64,
    /// Panel arclength.
    pub h: f64,
}

impl Panel {
    #[inline]
    pub fn nodes(&self) -> std::ops::Range<usize> {
        self.first_node..self.first_node + NODES_PER_PANEL
    }

    /// Map from the standard interval [-1,1] to the global parameter.
    #[inline]
    pub fn param_of(&self, s: f64) -> f64 {
        0.5 * (self.t0 + self.t1) + 0.5 * (self.t1 - self.t0) * s
    }
}

/// One closed loop of the boundary.
#[derive(Debug, Clone)]
pub struct Loop {
    pub curve: Curve,
    pub first_panel: usize,
    pub n_panels: usize,
    pub arclength: f64,
}

/// Composite Gauss-Legendre discretization of a collection of closed curves.
///
/// Node data is stored in flat arrays indexed by global node id; panels hold
/// ranges into them. Normals point into the fluid domain for counterclockwise
/// outer curves and `Curve::Reversed` obstacle curves.
#[derive(Debug, Clone)]
pub struct PanelizedBoundary {
    pub loops: Vec<Loop>,
    pub panels: Vec<Panel>,
    pub positions: Vec<[f64; 2]>,
    pub normals: Vec<[f64; 2]>,
    pub tangents: Vec<[f64; 2]>,
    pub weights: Vec<f64>,
    pub speeds: Vec<f64>,
    pub curvatures: Vec<f64>,
    /// Global curve parameter of each node.
    pub params: Vec<f64>,
    /// Owning panel of each node.
    pub node_panel: Vec<usize>,
    pub total_arclength: f64,
    pub h_max: f64,
}

impl PanelizedBoundary {
    pub fn n_nodes(&self) -> usize {
        self.positions.len()
    }

    #[inline]
    pub fn node_z(&self, m: usize) -> Complex64 {
        Complex64::new(self.positions[m][0], self.positions[m][1])
    }

    #[inline]
    pub fn normal_c(&self, m: usize) -> Complex64 {
        Complex64::new(self.normals[m][0], self.normals[m][1])
    }

    pub fn curve_of(&self, panel_id: usize) -> &Curve {
        &self.loops[self.panels[panel_id].loop_id].curve
    }

    /// Panel ids adjacent to `panel_id` within its loop (wrapping).
    pub fn neighbors(&self, panel_id: usize) -> [usize; 2] {
        let lp = &self.loops[self.panels[panel_id].loop_id];
        let local = panel_id - lp.first_panel;
        let prev = (local + lp.n_panels - 1) % lp.n_panels;
        let next = (local + 1) % lp.n_panels;
        [lp.first_panel + prev, lp.first_panel + next]
    }

    /// Squared distance from `x` to the nearest node of `panel_id`.
    pub fn panel_node_dist2(&self, panel_id: usize, x: [f64; 2]) -> f64 {
        self.panels[panel_id]
            .nodes()
            .map(|m| {
                let d = [x[0] - self.positions[m][0], x[1] - self.positions[m][1]];
                d[0] * d[0] + d[1] * d[1]
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// Build equal-arclength composite Gauss-Legendre panels over the curves.
pub fn build_panels(curves: &[Curve], panels_per_curve: &[usize]) -> Result<PanelizedBoundary, GeometryError> {
    assert_eq!(curves.len(), panels_per_curve.len());
    let (gl_x, gl_w) = numutil::gl16().clone();
    let two_pi = 2.0 * std::f64::consts::PI;

    let mut b = PanelizedBoundary {
        loops: Vec::new(),
        panels: Vec::new(),
        positions: Vec::new(),
        normals: Vec::new(),
        tangents: Vec::new(),
        weights: Vec::new(),
        speeds: Vec::new(),
        curvatures: Vec::new(),
        params: Vec::new(),
        node_panel: Vec::new(),
        total_arclength: 0.0,
        h_max: 0.0,
    };

    for (loop_id, (curve, &n_panels)) in curves.iter().zip(panels_per_curve).enumerate() {
        if n_panels < 4 {
            return Err(GeometryError::TooFewPanels(n_panels));
        }
        // Regularity scan.
        for i in 0..256 {
            let t = two_pi * i as f64 / 256.0;
            if curve.speed(t) < 1e-12 {
                return Err(GeometryError::DegenerateCurve(t));
            }
        }
        let arclen = |a: f64, c: f64| numutil::adaptive_simpson(&|t| curve.speed(t), a, c, 1e-14);
        let total = arclen(0.0, two_pi);
        let target = total / n_panels as f64;

        // Equal-arclength breakpoints: advance by Newton with bisection safeguard.
        let mut breaks = Vec::with_capacity(n_panels + 1);
        breaks.push(0.0);
        let mut t_prev = 0.0;
        for i in 1..n_panels {
            let mut lo = t_prev;
            let mut hi = two_pi;
            let mut t = t_prev + (two_pi - t_prev) / (n_panels - i + 1) as f64;
            for _ in 0..100 {
                let f = arclen(t_prev, t) - target;
                if f > 0.0 {
                    hi = t;
                } else {
                    lo = t;
                }
                let dt = f / curve.speed(t);
                let mut t_new = t - dt;
                if !(t_new > lo && t_new < hi) {
                    t_new = 0.5 * (lo + hi);
                }
                if (t_new - t).abs() < 1e-14 {
                    t = t_new;
                    break;
                }
                t = t_new;
            }
            breaks.push(t);
            t_prev = t;
        }
        breaks.push(two_pi);

        let first_panel = b.panels.len();
        for p in 0..n_panels {
            let (t0, t1) = (breaks[p], breaks[p + 1]);
            let first_node = b.positions.len();
            let half = 0.5 * (t1 - t0);
            let mid = 0.5 * (t0 + t1);
            let mut h_arc = 0.0;
            for j in 0..NODES_PER_PANEL {
                let t = mid + half * gl_x[j];
                let g = curve.position(t);
                let d = curve.derivative_c(Complex64::new(t, 0.0));
                let dd = curve.second_derivative(t);
                let speed = d.norm();
                let nu = Complex64::i() * d / speed;
                let kappa = (d.re * dd[1] - d.im * dd[0]) / (speed * speed * speed);
                b.positions.push(g);
                b.normals.push([nu.re, nu.im]);
                b.tangents.push([nu.im, -nu.re]);
                b.speeds.push(speed);
                b.weights.push(gl_w[j] * half * speed);
                b.curvatures.push(kappa);
                b.params.push(t);
                b.node_panel.push(first_panel + p);
                h_arc += gl_w[j] * half * speed;
            }
            b.panels.push(Panel {
                loop_id,
                t0,
                t1,
                first_node,
                z_start: curve.position_c(Complex64::new(t0, 0.0)),
                z_end: curve.position_c(Complex64::new(t1, 0.0)),
                h: h_arc,
            });
            b.h_max = b.h_max.max(h_arc);
        }
        b.loops.push(Loop { curve: curve.clone(), first_panel, n_panels, arclength: total });
        b.total_arclength += total;
    }
    Ok(b)
}

/// Bernstein radius of a point in the complexified standard interval:
/// rho(t) = |t +/- sqrt(t^2 - 1)|, with the sign chosen so rho >= 1.
pub fn bernstein_radius(t: Complex64) -> f64 {
    let s = (t * t - 1.0).sqrt();
    (t + s).norm().max((t - s).norm())
}

/// An analytic map from the (complexified) standard interval [-1, 1],
/// e.g. a panel's restriction of the curve parametrization.
pub trait AnalyticMap {
    fn eval(&self, s: Complex64) -> Complex64;
    fn deriv(&self, s: Complex64) -> Complex64;
}

/// A panel viewed as an analytic map from the standard interval [-1, 1].
#[derive(Clone, Copy)]
pub struct PanelMap<'a> {
    pub curve: &'a Curve,
    pub t0: f64,
    pub t1: f64,
}

impl<'a> PanelMap<'a> {
    pub fn from_panel(b: &'a PanelizedBoundary, panel_id: usize) -> Self {
        let p = &b.panels[panel_id];
        PanelMap { curve: b.curve_of(panel_id), t0: p.t0, t1: p.t1 }
    }

    pub fn preimage(&self, z: Complex64, start: f64) -> Result<Complex64, GeometryError> {
        preimage_on(self, z, start)
    }
}

impl AnalyticMap for PanelMap<'_> {
    #[inline]
    fn eval(&self, s: Complex64) -> Complex64 {
        let t = 0.5 * (self.t0 + self.t1) + 0.5 * (self.t1 - self.t0) * s;
        self.curve.position_c(t)
    }

    #[inline]
    fn deriv(&self, s: Complex64) -> Complex64 {
        let t = 0.5 * (self.t0 + self.t1) + 0.5 * (self.t1 - self.t0) * s;
        self.curve.derivative_c(t) * (0.5 * (self.t1 - self.t0))
    }
}

/// Preimage s* in the complexified standard interval with map(s*) = z.
///
/// Newton from the given start; on failure, retried from a spread of starting
/// points, then from the roots of the degree-15 interpolating polynomial of
/// the map (root selection in place of Newton when the iteration stalls).
pub fn preimage_on<M: AnalyticMap + ?Sized>(
    map: &M,
    z: Complex64,
    start: f64,
) -> Result<Complex64, GeometryError> {
    let newton = |s0: Complex64| -> Option<Complex64> {
        let mut s = s0;
        for _ in 0..20 {
            let f = map.eval(s) - z;
            let d = map.deriv(s);
            if d.norm() < 1e-300 {
                return None;
            }
            let step = f / d;
            s -= step;
            if step.norm() < 1e-13 {
                return Some(s);
            }
        }
        None
    };
    if let Some(s) = newton(Complex64::new(start, 0.0)) {
        return Ok(s);
    }
    for k in 0..8 {
        let s0 = Complex64::new(-0.9 + 0.26 * k as f64, 0.0);
        if let Some(s) = newton(s0) {
            return Ok(s);
        }
    }
    // Polynomial fallback: roots of the interpolant of map(s) - z.
    let (gl_x, _) = numutil::gl16();
    let xs: Vec<Complex64> = gl_x.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let fs: Vec<Complex64> = xs.iter().map(|&s| map.eval(s) - z).collect();
    let coeffs = numutil::vandermonde_primal_coeffs(&xs, &fs);
    let mut best: Option<Complex64> = None;
    for root in numutil::polynomial_roots(&coeffs) {
        if (map.eval(root) - z).norm() < 1e-10 {
            match best {
                Some(b)
                    if (root - Complex64::new(start, 0.0)).norm()
                        >= (b - Complex64::new(start, 0.0)).norm() => {}
                _ => best = Some(root),
            }
        }
    }
    if let Some(root) = best {
        if let Some(s) = newton(root) {
            return Ok(s);
        }
    }
    Err(GeometryError::PreimageDiverged)
}

/// Preimage of `target` under the parametrization of `panel_id`, expressed
/// on the standard interval, starting Newton from the nearest node.
pub fn preimage(
    b: &PanelizedBoundary,
    panel_id: usize,
    target: [f64; 2],
) -> Result<Complex64, GeometryError> {
    let z = Complex64::new(target[0], target[1]);
    let panel = &b.panels[panel_id];
    let (gl_x, _) = numutil::gl16();
    let mut best = (f64::INFINITY, 0.0);
    for (j, m) in panel.nodes().enumerate() {
        let d2 = (b.node_z(m) - z).norm_sqr();
        if d2 < best.0 {
            best = (d2, gl_x[j]);
        }
    }
    PanelMap::from_panel(b, panel_id).preimage(z, best.1)
}

/// Uniform spatial bins over the boundary nodes, used to find candidate
/// panels near a target point without scanning the whole boundary.
pub struct SpatialBins {
    cell: f64,
    origin: [f64; 2],
    nx: usize,
    ny: usize,
    // node ids per cell
    cells: Vec<Vec<u32>>,
}

impl SpatialBins {
    pub fn build(b: &PanelizedBoundary) -> Self {
        let cell = b.h_max;
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in &b.positions {
            for d in 0..2 {
                lo[d] = lo[d].min(p[d]);
                hi[d] = hi[d].max(p[d]);
            }
        }
        let nx = (((hi[0] - lo[0]) / cell).ceil() as usize + 1).max(1);
        let ny = (((hi[1] - lo[1]) / cell).ceil() as usize + 1).max(1);
        let mut cells = vec![Vec::new(); nx * ny];
        for (m, p) in b.positions.iter().enumerate() {
            let ix = ((p[0] - lo[0]) / cell).floor() as usize;
            let iy = ((p[1] - lo[1]) / cell).floor() as usize;
            cells[iy.min(ny - 1) * nx + ix.min(nx - 1)].push(m as u32);
        }
        SpatialBins { cell, origin: lo, nx, ny, cells }
    }

    /// Node ids within the 5x5 cell neighborhood of `x`.
    pub fn nearby_nodes(&self, x: [f64; 2]) -> Vec<u32> {
        let fx = (x[0] - self.origin[0]) / self.cell;
        let fy = (x[1] - self.origin[1]) / self.cell;
        let ix = fx.floor() as i64;
        let iy = fy.floor() as i64;
        let mut out = Vec::new();
        for dy in -2..=2_i64 {
            for dx in -2..=2_i64 {
                let cx = ix + dx;
                let cy = iy + dy;
                if cx >= 0 && cy >= 0 && (cx as usize) < self.nx && (cy as usize) < self.ny {
                    out.extend_from_slice(&self.cells[cy as usize * self.nx + cx as usize]);
                }
            }
        }
        out
    }
}

/// Panels with any point plausibly within `cutoff * h_panel` of `target`.
/// Bin-based superset: no false negatives for cutoffs <= 2.
pub fn nearest_panels(
    b: &PanelizedBoundary,
    bins: &SpatialBins,
    target: [f64; 2],
    cutoff: f64,
) -> Vec<usize> {
    let mut found: Vec<usize> = Vec::new();
    for m in bins.nearby_nodes(target) {
        let p = b.positions[m as usize];
        let d2 = (p[0] - target[0]).powi(2) + (p[1] - target[1]).powi(2);
        let pid = b.node_panel[m as usize];
        // Node spacing on a 16-point panel is at most ~0.21 h, so a point of
        // the panel within cutoff*h implies a node within (cutoff + 0.25) h.
        let reach = (cutoff + 0.25) * b.panels[pid].h;
        if d2 <= reach * reach && !found.contains(&pid) {
            found.push(pid);
        }
    }
    found.sort_unstable();
    found
}
