//! Shared low-level numerics: Gauss-Legendre rules, barycentric Lagrange
//! interpolation and differentiation, Bjorck-Pereyra Vandermonde solvers,
//! polynomial roots, and a small adaptive integrator.

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::sync::OnceLock;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Chebyshev-like initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

pub fn gl16() -> &'static (Vec<f64>, Vec<f64>) {
    static GL: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    GL.get_or_init(|| gauss_legendre(16))
}

pub fn gl32() -> &'static (Vec<f64>, Vec<f64>) {
    static GL: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    GL.get_or_init(|| gauss_legendre(32))
}

/// Barycentric weights for the node set `x` (normalized to unit max).
pub fn barycentric_weights(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut w = vec![1.0; n];
    for j in 0..n {
        for k in 0..n {
            if k != j {
                w[j] /= x[j] - x[k];
            }
        }
    }
    let m = w.iter().map(|v| v.abs()).fold(0.0, f64::max);
    w.iter_mut().for_each(|v| *v /= m);
    w
}

/// Row of the barycentric interpolation operator: values `r` such that
/// p(t) = sum_j r_j f(x_j) for the interpolant through (x_j, f_j).
pub fn interp_row(x: &[f64], w: &[f64], t: f64) -> Vec<f64> {
    let n = x.len();
    let mut row = vec![0.0; n];
    for j in 0..n {
        if (t - x[j]).abs() < 1e-300 {
            row[j] = 1.0;
            return row;
        }
    }
    let mut denom = 0.0;
    for j in 0..n {
        let c = w[j] / (t - x[j]);
        row[j] = c;
        denom += c;
    }
    row.iter_mut().for_each(|v| *v /= denom);
    row
}

/// Interpolation matrix from nodes `x` to points `t` (len(t) x len(x)).
pub fn interp_matrix(x: &[f64], t: &[f64]) -> DMatrix<f64> {
    let w = barycentric_weights(x);
    let mut m = DMatrix::zeros(t.len(), x.len());
    for (i, &ti) in t.iter().enumerate() {
        let row = interp_row(x, &w, ti);
        for j in 0..x.len() {
            m[(i, j)] = row[j];
        }
    }
    m
}

/// Spectral differentiation matrix on the nodes `x` (derivative of the
/// polynomial interpolant, evaluated at the nodes).
pub fn diff_matrix(x: &[f64]) -> DMatrix<f64> {
    let n = x.len();
    let w = barycentric_weights(x);
    let mut d = DMatrix::zeros(n, n);
    for i in 0..n {
        let mut diag = 0.0;
        for j in 0..n {
            if i != j {
                let v = (w[j] / w[i]) / (x[i] - x[j]);
                d[(i, j)] = v;
                diag -= v;
            }
        }
        d[(i, i)] = diag;
    }
    d
}

/// Solve the dual (transposed) Vandermonde system
///   sum_j x_j^k w_j = b_k,  k = 0..n-1
/// by the Bjorck-Pereyra recurrences, O(n^2).
pub fn vandermonde_dual_solve(x: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    let mut w: Vec<Complex64> = b.to_vec();
    for k in 0..n - 1 {
        for i in (k + 1..n).rev() {
            let prev = w[i - 1];
            w[i] -= x[k] * prev;
        }
    }
    for k in (0..n - 1).rev() {
        for i in k + 1..n {
            w[i] /= x[i] - x[i - k - 1];
        }
        for i in k..n - 1 {
            let next = w[i + 1];
            w[i] -= next;
        }
    }
    w
}

/// Dual Vandermonde solve with one or two steps of iterative refinement,
/// which recovers most of the accuracy lost to conditioning at n = 32.
pub fn vandermonde_dual_solve_refined(x: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    let mut w = vandermonde_dual_solve(x, b);
    let scale = b.iter().map(|v| v.norm()).fold(1e-300, f64::max);
    for _ in 0..3 {
        // residual r_k = b_k - sum_j x_j^k w_j
        let mut r = b.to_vec();
        let mut pow: Vec<Complex64> = vec![Complex64::new(1.0, 0.0); n];
        for rk in r.iter_mut() {
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                s += pow[j] * w[j];
            }
            *rk -= s;
            for (p, xj) in pow.iter_mut().zip(x) {
                *p *= xj;
            }
        }
        let worst = r.iter().map(|v| v.norm()).fold(0.0, f64::max);
        if worst < 1e-15 * scale {
            break;
        }
        let dw = vandermonde_dual_solve(x, &r);
        for (wj, d) in w.iter_mut().zip(&dw) {
            *wj += d;
        }
    }
    w
}

/// Monomial coefficients of the interpolating polynomial through
/// (x_j, f_j): solves the primal Vandermonde system.
pub fn vandermonde_primal_coeffs(x: &[Complex64], f: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    let mut c: Vec<Complex64> = f.to_vec();
    for k in 0..n - 1 {
        for i in (k + 1..n).rev() {
            let prev = c[i - 1];
            c[i] = (c[i] - prev) / (x[i] - x[i - k - 1]);
        }
    }
    for k in (0..n - 1).rev() {
        for i in k..n - 1 {
            let next = c[i + 1];
            c[i] -= x[k] * next;
        }
    }
    c
}

/// All roots of the polynomial sum_k c_k z^k by Durand-Kerner iteration.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return vec![];
    }
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        for &c in monic.iter().rev() {
            p = p * z + c;
        }
        p
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..300 {
        let mut max_step = 0.0_f64;
        for j in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for k in 0..deg {
                if k != j {
                    denom *= roots[j] - roots[k];
                }
            }
            let step = eval(roots[j]) / denom;
            roots[j] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 {
            break;
        }
    }
    roots
}

/// Adaptive Simpson integration of a smooth scalar function.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(a, m, fa, flm, fm);
        let right = simpson(m, b, fm, frm, fb);
        if depth > 48 || (left + right - whole).abs() <= 15.0 * tol {
            return left + right + (left + right - whole) / 15.0;
        }
        rec(f, a, m, fa, flm, fm, left, tol * 0.5, depth + 1)
            + rec(f, m, b, fm, frm, fb, right, tol * 0.5, depth + 1)
    }
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = simpson(a, b, fa, fm, fb);
    rec(f, a, b, fa, fm, fb, whole, tol, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    #[test]
    fn gl_rules_integrate_polynomials() {
        for &n in &[4, 16, 32] {
            let (x, w) = gauss_legendre(n);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
            // exact through degree 2n-1
            let p = 2 * n - 1;
            let num: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(p as i32 - 1)).sum();
            let exact = 2.0 / p as f64; // int x^(p-1), p-1 even
            assert!((num - exact).abs() < 1e-13, "n={n}");
        }
    }

    #[test]
    fn interp_exact_for_polynomials() {
        let (x, _) = gauss_legendre(16);
        let t: Vec<f64> = (0..7).map(|i| -0.95 + 0.3 * i as f64).collect();
        let m = interp_matrix(&x, &t);
        let f: Vec<f64> = x.iter().map(|&v| v.powi(15) - 3.0 * v.powi(4) + 0.5).collect();
        for (i, &ti) in t.iter().enumerate() {
            let got: f64 = (0..16).map(|j| m[(i, j)] * f[j]).sum();
            let want = ti.powi(15) - 3.0 * ti.powi(4) + 0.5;
            assert!((got - want).abs() < 1e-13);
        }
    }

    #[test]
    fn diff_matrix_differentiates() {
        let (x, _) = gauss_legendre(16);
        let d = diff_matrix(&x);
        let f: Vec<f64> = x.iter().map(|&v| (2.0 * v).sin()).collect();
        for i in 0..16 {
            let got: f64 = (0..16).map(|j| d[(i, j)] * f[j]).sum();
            let want = 2.0 * (2.0 * x[i]).cos();
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn vandermonde_dual_matches_dense_solve() {
        let x: Vec<C> = (0..8)
            .map(|i| C::new(-0.9 + 0.26 * i as f64, 0.1 * ((i * 7 % 5) as f64 - 2.0)))
            .collect();
        let b: Vec<C> = (0..8).map(|i| C::new(1.0 / (i as f64 + 1.0), 0.3 * i as f64)).collect();
        let w = vandermonde_dual_solve(&x, &b);
        // residual: sum_j x_j^k w_j = b_k
        for k in 0..8 {
            let mut s = C::new(0.0, 0.0);
            for j in 0..8 {
                s += x[j].powu(k as u32) * w[j];
            }
            assert!((s - b[k]).norm() < 1e-10, "k={k}: {s} vs {}", b[k]);
        }
    }

    #[test]
    fn vandermonde_primal_interpolates() {
        let x: Vec<C> = (0..6).map(|i| C::new(-1.0 + 0.4 * i as f64, 0.05 * i as f64)).collect();
        let f: Vec<C> = x.iter().map(|z| z * z * z - C::new(0.0, 2.0) * z + 1.0).collect();
        let c = vandermonde_primal_coeffs(&x, &f);
        for (z, fv) in x.iter().zip(&f) {
            let mut p = C::new(0.0, 0.0);
            for ck in c.iter().rev() {
                p = p * z + ck;
            }
            assert!((p - fv).norm() < 1e-12);
        }
        assert!((c[3] - C::new(1.0, 0.0)).norm() < 1e-12);
        assert!((c[1] - C::new(0.0, -2.0)).norm() < 1e-12);
    }

    #[test]
    fn polynomial_roots_simple() {
        // (z-1)(z-2i)(z+3) = 0
        let r1 = C::new(1.0, 0.0);
        let r2 = C::new(0.0, 2.0);
        let r3 = C::new(-3.0, 0.0);
        // expand
        let c0 = -r1 * r2 * r3;
        let c1 = r1 * r2 + r1 * r3 + r2 * r3;
        let c2 = -(r1 + r2 + r3);
        let roots = polynomial_roots(&[c0, c1, c2, C::new(1.0, 0.0)]);
        for want in [r1, r2, r3] {
            assert!(roots.iter().any(|r| (r - want).norm() < 1e-10));
        }
    }

    #[test]
    fn simpson_integrates() {
        let v = adaptive_simpson(&|x: f64| x.exp(), 0.0, 1.0, 1e-14);
        assert!((v - (1.0_f64.exp() - 1.0)).abs() < 1e-12);
    }
}
