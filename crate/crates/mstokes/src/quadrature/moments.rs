//! Exact moments of the singular kernels against monomials on a panel:
//!
//!   p_k = int tau^(k-1)/(tau - z) dtau,      q_k = int tau^(k-1) log(tau - z) dtau,
//!   r_k = int tau^(k-1)/(tau - z)^2 dtau,    s_k = int tau^(k-1)/(tau - z)^3 dtau,
//!
//! evaluated by upward recursion with a branch of log(tau - z) kept
//! continuous along the (curved) panel path. Targets exactly on the path are
//! supported for p and q in the principal-value/limit sense needed by the
//! on-boundary log quadrature.
//!
//! All quantities are computed in coordinates scaled so that the panel
//! endpoints sit at -1 and +1. The branch information (the continuous
//! argument variation of tau - z along the path) is supplied by the caller,
//! who owns the exact curve parametrization; see `WorkPanel::branch_darg`.

use num_complex::Complex64;

#[derive(Debug, Clone)]
pub struct MomentSet {
    /// p_1..p_(n+1)
    pub p: Vec<Complex64>,
    /// q_1..q_n
    pub q: Vec<Complex64>,
    /// r_1..r_n (absent for on-path targets)
    pub r: Vec<Complex64>,
    /// s_1..s_n (absent for on-path targets)
    pub s: Vec<Complex64>,
}

/// Branch-tracking data for the moments.
#[derive(Debug, Clone, Copy)]
pub struct BranchInfo {
    /// Continuous argument variation of (tau - z) from the start to the end
    /// of the path. For on-path targets this excludes the jump at the
    /// singular point (principal-value convention).
    pub darg: f64,
    /// Target lies on the integration path.
    pub on_path: bool,
}

/// Compute the moment set for a panel with (unscaled) endpoints za, zb and
/// target z, given the branch info. The argument variation is invariant
/// under the affine scaling, so it can be measured on the physical panel.
pub fn complex_moments(
    za: Complex64,
    zb: Complex64,
    z: Complex64,
    n: usize,
    branch: BranchInfo,
) -> MomentSet {
    let delta = zb - za;
    let zs = (2.0 * z - za - zb) / delta;
    let a = Complex64::new(-1.0, 0.0);
    let b = Complex64::new(1.0, 0.0);

    let lc_a = (a - zs).ln(); // principal
    let p1 = Complex64::new((b - zs).norm().ln() - (a - zs).norm().ln(), branch.darg);
    // Continuous branch at the end of the path: for on-path targets the
    // forward crossing drops the argument by pi.
    let jump = if branch.on_path { -std::f64::consts::PI } else { 0.0 };
    let lc_b = Complex64::new((b - zs).norm().ln(), lc_a.im + branch.darg + jump);

    // Upward recursions. p has n+1 entries.
    let mut p = Vec::with_capacity(n + 1);
    p.push(p1);
    for k in 1..=n {
        let extra = if k % 2 == 1 { 2.0 / k as f64 } else { 0.0 };
        let prev = p[k - 1];
        p.push(zs * prev + extra);
    }

    // q_k = ( lc_b - (-1)^k lc_a + zs^k * i*(theta_in - theta_out) )/k - p_{k+1}/k
    let jump_term = if branch.on_path {
        Complex64::new(0.0, std::f64::consts::PI)
    } else {
        Complex64::new(0.0, 0.0)
    };
    let mut q = Vec::with_capacity(n);
    let mut zs_pow = zs;
    for k in 1..=n {
        let ak = if k % 2 == 0 { 1.0 } else { -1.0 };
        let val = (lc_b - ak * lc_a + zs_pow * jump_term - p[k]) / k as f64;
        q.push(val);
        zs_pow *= zs;
    }

    let (r, s) = if branch.on_path {
        (Vec::new(), Vec::new())
    } else {
        let mut r = Vec::with_capacity(n);
        r.push(1.0 / (a - zs) - 1.0 / (b - zs));
        for k in 1..n {
            let prev = r[k - 1];
            r.push(zs * prev + p[k - 1]);
        }
        let mut s = Vec::with_capacity(n);
        s.push(0.5 * (1.0 / ((a - zs) * (a - zs)) - 1.0 / ((b - zs) * (b - zs))));
        for k in 1..n {
            let prev = s[k - 1];
            s.push(zs * prev + r[k - 1]);
        }
        (r, s)
    };

    MomentSet { p, q, r, s }
}

/// Branch-tracked argument variation along a sampled path (adaptive variant
/// lives on `WorkPanel`, which owns the exact curve). Used by tests on
/// synthetic paths that are themselves exact.
pub fn polyline_darg(path: &[Complex64], z: Complex64) -> f64 {
    let mut acc = 0.0;
    for w in path.windows(2) {
        acc += ((w[1] - z) / (w[0] - z)).arg();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn straight_path(n: usize) -> Vec<Complex64> {
        (0..=n).map(|i| Complex64::new(-1.0 + 2.0 * i as f64 / n as f64, 0.0)).collect()
    }

    fn moments_off(path: &[Complex64], z: Complex64, n: usize) -> MomentSet {
        let branch = BranchInfo { darg: polyline_darg(path, z), on_path: false };
        complex_moments(path[0], path[path.len() - 1], z, n, branch)
    }

    #[test]
    fn p1_straight_panel_real_target() {
        // z = 2 beyond the right end: p1 = -log 3, purely real.
        let m = moments_off(&straight_path(32), Complex64::new(2.0, 0.0), 8);
        assert!((m.p[0] - Complex64::new(-(3.0_f64.ln()), 0.0)).norm() < 1e-13);
    }

    #[test]
    fn p2_polynomial_division_identity() {
        // z = 2i: p2 = 2 + 2i p1.
        let z = Complex64::new(0.0, 2.0);
        let m = moments_off(&straight_path(32), z, 8);
        assert!((m.p[1] - (2.0 + z * m.p[0])).norm() < 1e-13);
    }

    #[test]
    fn q1_on_path_matches_closed_form() {
        // int_{-1}^{1} log(t - x) dt with arg = pi to the left of x:
        // (1-x)log(1-x) + (1+x)log(1+x) - 2 + i pi (1+x)
        let x = 0.3;
        // darg excluding the jump is zero on a straight panel
        let m = complex_moments(
            Complex64::new(-1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(x, 0.0),
            4,
            BranchInfo { darg: 0.0, on_path: true },
        );
        let expect = Complex64::new(
            (1.0 - x) * (1.0 - x).ln() + (1.0 + x) * (1.0 + x).ln() - 2.0,
            std::f64::consts::PI * (1.0 + x),
        );
        assert!((m.q[0] - expect).norm() < 1e-12, "{} vs {}", m.q[0], expect);
    }

    #[test]
    fn moments_match_adaptive_contour_integration() {
        // Curved path: a parabolic arc, moments vs adaptive contour
        // integration in scaled coordinates.
        let gamma = |t: f64| Complex64::new(t, 0.25 * (1.0 - t * t));
        let dgamma = |t: f64| Complex64::new(1.0, -0.5 * t);
        let n_samp = 256;
        let path: Vec<Complex64> =
            (0..=n_samp).map(|i| gamma(-1.0 + 2.0 * i as f64 / n_samp as f64)).collect();
        for &z in &[
            Complex64::new(0.2, 0.35),
            Complex64::new(-0.4, 0.1),
            Complex64::new(0.9, 0.21),
            Complex64::new(0.0, -0.05),
        ] {
            let n = 8;
            let m = moments_off(&path, z, n);
            let za = path[0];
            let zb = path[n_samp];
            let delta = zb - za;
            let scale = |w: Complex64| (2.0 * w - za - zb) / delta;
            let zs = scale(z);
            for k in 0..n {
                let pk = refnum::integrate_contour(
                    |tau| tau.powu(k as u32) / (tau - zs),
                    |t| scale(gamma(t)),
                    |t| dgamma(t) * 2.0 / delta,
                    -1.0,
                    1.0,
                    1e-13,
                );
                assert!((m.p[k] - pk).norm() < 1e-12, "p[{k}] at z={z}: {} vs {pk}", m.p[k]);
                let rk = refnum::integrate_contour(
                    |tau| tau.powu(k as u32) / ((tau - zs) * (tau - zs)),
                    |t| scale(gamma(t)),
                    |t| dgamma(t) * 2.0 / delta,
                    -1.0,
                    1.0,
                    1e-13,
                );
                assert!((m.r[k] - rk).norm() < 1e-11, "r[{k}] at z={z}");
                let sk = refnum::integrate_contour(
                    |tau| tau.powu(k as u32) / ((tau - zs) * (tau - zs) * (tau - zs)),
                    |t| scale(gamma(t)),
                    |t| dgamma(t) * 2.0 / delta,
                    -1.0,
                    1.0,
                    1e-13,
                );
                assert!((m.s[k] - sk).norm() < 1e-10, "s[{k}] at z={z}");
                // log moments: directly comparable for targets above the arc,
                // where the principal branch is continuous along the path.
                if z.im > 0.3 {
                    let qk = refnum::integrate_contour(
                        |tau| tau.powu(k as u32) * (tau - zs).ln(),
                        |t| scale(gamma(t)),
                        |t| dgamma(t) * 2.0 / delta,
                        -1.0,
                        1.0,
                        1e-13,
                    );
                    assert!((m.q[k] - qk).norm() < 1e-11, "q[{k}] at z={z}: {} vs {qk}", m.q[k]);
                }
            }
        }
    }
}
