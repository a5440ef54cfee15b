//! Working panels for weight construction: the base 16-point panel, its
//! 32-point upsampled version, merged neighbor pairs, and subdivision
//! subpanels. Every work panel carries an interpolation matrix mapping
//! density values at the ORIGINAL parent nodes to its own nodes, so that
//! quadrature weights built on a work panel compose back onto the parents.

use crate::geometry::{AnalyticMap, Curve, PanelizedBoundary};
use crate::numutil;
use nalgebra::DMatrix;
use num_complex::Complex64;

#[derive(Debug, Clone)]
pub struct WNode {
    /// Node parameter in this panel's own standard interval [-1, 1].
    pub s: f64,
    /// Gauss-Legendre weight on [-1, 1].
    pub lam: f64,
    /// Position as a complex number.
    pub z: Complex64,
    /// dz/ds with respect to this panel's standard parameter.
    pub dz: Complex64,
}

impl WNode {
    /// Complex unit normal (into the fluid).
    #[inline]
    pub fn nu(&self) -> Complex64 {
        Complex64::i() * self.dz / self.dz.norm()
    }

    /// Arclength quadrature weight.
    #[inline]
    pub fn w_ds(&self) -> f64 {
        self.lam * self.dz.norm()
    }

    /// Contour quadrature weight (for integrals in d tau).
    #[inline]
    pub fn w_dtau(&self) -> Complex64 {
        self.lam * self.dz
    }
}

#[derive(Clone)]
pub struct WorkPanel {
    pub curve: Curve,
    /// Global parameter interval of this panel's standard interval.
    pub t0: f64,
    pub t1: f64,
    pub nodes: Vec<WNode>,
    pub z_start: Complex64,
    pub z_end: Complex64,
    /// Arclength of the panel.
    pub h: f64,
    /// Maps parent node values (columns) to values at this panel's nodes.
    pub interp: DMatrix<f64>,
    /// Parent panel ids (1 for plain panels, 2 for merged ones).
    pub parents: Vec<usize>,
}

impl AnalyticMap for WorkPanel {
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

impl WorkPanel {
    fn fill_nodes(curve: &Curve, t0: f64, t1: f64, gl: &(Vec<f64>, Vec<f64>)) -> (Vec<WNode>, f64) {
        let half = 0.5 * (t1 - t0);
        let mid = 0.5 * (t0 + t1);
        let mut nodes = Vec::with_capacity(gl.0.len());
        let mut h = 0.0;
        for (&s, &lam) in gl.0.iter().zip(&gl.1) {
            let t = mid + half * s;
            let z = curve.position_c(Complex64::new(t, 0.0));
            let dz = curve.derivative_c(Complex64::new(t, 0.0)) * half;
            h += lam * dz.norm();
            nodes.push(WNode { s, lam, z, dz });
        }
        (nodes, h)
    }

    /// The panel itself, 16 nodes, identity interpolation.
    pub fn base16(b: &PanelizedBoundary, panel_id: usize) -> Self {
        let p = &b.panels[panel_id];
        let curve = b.curve_of(panel_id).clone();
        let (nodes, h) = Self::fill_nodes(&curve, p.t0, p.t1, numutil::gl16());
        WorkPanel {
            curve,
            t0: p.t0,
            t1: p.t1,
            nodes,
            z_start: p.z_start,
            z_end: p.z_end,
            h,
            interp: DMatrix::identity(16, 16),
            parents: vec![panel_id],
        }
    }

    /// The panel upsampled to 32 nodes (geometry exact, data interpolated).
    pub fn upsampled32(b: &PanelizedBoundary, panel_id: usize) -> Self {
        let p = &b.panels[panel_id];
        let curve = b.curve_of(panel_id).clone();
        let (nodes, h) = Self::fill_nodes(&curve, p.t0, p.t1, numutil::gl32());
        let interp = numutil::interp_matrix(&numutil::gl16().0, &numutil::gl32().0);
        WorkPanel {
            curve,
            t0: p.t0,
            t1: p.t1,
            nodes,
            z_start: p.z_start,
            z_end: p.z_end,
            h,
            interp,
            parents: vec![panel_id],
        }
    }

    /// Two adjacent panels merged into a temporary 32-node panel spanning
    /// the union of their parameter intervals. `first` must precede `second`
    /// in curve orientation (they share the edge first.t1 == second.t0,
    /// possibly across the parameter wrap).
    pub fn merged32(b: &PanelizedBoundary, first: usize, second: usize) -> Self {
        let pa = &b.panels[first];
        let pb = &b.panels[second];
        let curve = b.curve_of(first).clone();
        let two_pi = 2.0 * std::f64::consts::PI;
        let (b0, b1) = if pb.t0 + 1e-12 < pa.t1 {
            (pb.t0 + two_pi, pb.t1 + two_pi)
        } else {
            (pb.t0, pb.t1)
        };
        let t0 = pa.t0;
        let t1 = b1;
        let (nodes, h) = Self::fill_nodes(&curve, t0, t1, numutil::gl32());
        // Interpolation: columns 0..16 from the first parent, 16..32 second.
        let gl16 = &numutil::gl16().0;
        let bary = numutil::barycentric_weights(gl16);
        let mut interp = DMatrix::zeros(32, 32);
        for (q, node) in nodes.iter().enumerate() {
            let t = 0.5 * (t0 + t1) + 0.5 * (t1 - t0) * node.s;
            if t <= pa.t1 {
                let sa = (2.0 * t - pa.t0 - pa.t1) / (pa.t1 - pa.t0);
                let row = numutil::interp_row(gl16, &bary, sa);
                for j in 0..16 {
                    interp[(q, j)] = row[j];
                }
            } else {
                let sb = (2.0 * t - b0 - b1) / (b1 - b0);
                let row = numutil::interp_row(gl16, &bary, sb);
                for j in 0..16 {
                    interp[(q, 16 + j)] = row[j];
                }
            }
        }
        WorkPanel {
            curve,
            t0,
            t1,
            nodes,
            z_start: pa.z_start,
            z_end: pb.z_end,
            h,
            interp,
            parents: vec![first, second],
        }
    }

    /// Subpanel over [lo, hi] of this panel's standard interval, with 32
    /// nodes; data interpolated from this panel's nodes and composed onto
    /// the original parents.
    pub fn subpanel(&self, lo: f64, hi: f64) -> Self {
        let t_lo = 0.5 * (self.t0 + self.t1) + 0.5 * (self.t1 - self.t0) * lo;
        let t_hi = 0.5 * (self.t0 + self.t1) + 0.5 * (self.t1 - self.t0) * hi;
        let (nodes, h) = Self::fill_nodes(&self.curve, t_lo, t_hi, numutil::gl32());
        let own_s: Vec<f64> = self.nodes.iter().map(|n| n.s).collect();
        let bary = numutil::barycentric_weights(&own_s);
        let mut rows = DMatrix::zeros(nodes.len(), self.nodes.len());
        for (q, node) in nodes.iter().enumerate() {
            let sp = 0.5 * (lo + hi) + 0.5 * (hi - lo) * node.s;
            let row = numutil::interp_row(&own_s, &bary, sp);
            for j in 0..self.nodes.len() {
                rows[(q, j)] = row[j];
            }
        }
        let interp = &rows * &self.interp;
        WorkPanel {
            curve: self.curve.clone(),
            t0: t_lo,
            t1: t_hi,
            nodes,
            z_start: self.eval(Complex64::new(lo, 0.0)),
            z_end: self.eval(Complex64::new(hi, 0.0)),
            h,
            interp,
            parents: self.parents.clone(),
        }
    }

    /// Does this panel's parameter interval contain the global parameter t?
    #[inline]
    pub fn contains_param(&self, t: f64) -> bool {
        t >= self.t0 - 1e-14 && t <= self.t1 + 1e-14
    }

    /// Own standard coordinate of a global parameter.
    #[inline]
    pub fn local_of(&self, t: f64) -> f64 {
        (2.0 * t - self.t0 - self.t1) / (self.t1 - self.t0)
    }

    /// Signed curvature at own standard parameter s.
    pub fn curvature_at(&self, s: f64) -> f64 {
        let t = 0.5 * (self.t0 + self.t1) + 0.5 * (self.t1 - self.t0) * s;
        let d = self.curve.derivative(t);
        let dd = self.curve.second_derivative(t);
        let sp = (d[0] * d[0] + d[1] * d[1]).sqrt();
        (d[0] * dd[1] - d[1] * dd[0]) / (sp * sp * sp)
    }

    /// Branch-tracked argument variation of (tau - z) along the panel, with
    /// adaptive curve-exact refinement. A chord between two samples only
    /// resolves the winding if the target is farther from it than the chord
    /// sagitta, so segments are bisected (evaluating the exact curve) until
    /// the segment length is small against the distance to the target.
    ///
    /// For a target ON the path at standard parameter `s_t`, the variation
    /// is accumulated along both legs up to the singular point, excluding
    /// the jump across it (principal-value convention).
    pub fn branch_darg(&self, z: Complex64, s_t: Option<f64>) -> f64 {
        match s_t {
            None => {
                let mut acc = 0.0;
                let mut prev_s = -1.0;
                let mut prev_w = self.eval(Complex64::new(-1.0, 0.0));
                let mut steps: Vec<f64> = self.nodes.iter().map(|n| n.s).collect();
                steps.push(1.0);
                for s in steps {
                    let w = self.eval(Complex64::new(s, 0.0));
                    acc += self.darg_segment(prev_s, s, prev_w, w, z, 0);
                    prev_s = s;
                    prev_w = w;
                }
                acc
            }
            Some(st) => {
                let tangent = self.deriv(Complex64::new(st, 0.0));
                // theta(z-) - theta(start), minus (theta(z+) - theta(end))
                self.darg_leg(-1.0, st, z, -tangent) - self.darg_leg(1.0, st, z, tangent)
            }
        }
    }

    fn darg_segment(
        &self,
        s0: f64,
        s1: f64,
        w0: Complex64,
        w1: Complex64,
        z: Complex64,
        depth: u32,
    ) -> f64 {
        let inc = ((w1 - z) / (w0 - z)).arg();
        let seglen = (w1 - w0).norm();
        let dist = (w0 - z).norm().min((w1 - z).norm());
        if depth >= 52 || (inc.abs() < 2.0 && seglen < 0.5 * dist) {
            return inc;
        }
        let sm = 0.5 * (s0 + s1);
        let wm = self.eval(Complex64::new(sm, 0.0));
        self.darg_segment(s0, sm, w0, wm, z, depth + 1)
            + self.darg_segment(sm, s1, wm, w1, z, depth + 1)
    }

    /// Argument variation from parameter `s_from` to the on-path singular
    /// point at `s_t`, approaching along the path; `dir` is the limiting
    /// direction of (tau - z) at the singular point for this leg.
    fn darg_leg(&self, s_from: f64, s_t: f64, z: Complex64, dir: Complex64) -> f64 {
        let mut acc = 0.0;
        let mut prev = self.eval(Complex64::new(s_from, 0.0));
        let mut gap = s_from - s_t;
        for _ in 0..52 {
            gap *= 0.5;
            let w = self.eval(Complex64::new(s_t + gap, 0.0));
            if (w - z).norm() < 1e-250 {
                break;
            }
            acc += ((w - z) / (prev - z)).arg();
            prev = w;
        }
        acc + (dir / (prev - z)).arg()
    }
}

