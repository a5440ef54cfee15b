//! Independent reference numerics for tests.
//!
//! Nothing in this crate is used by production code. It exists so that test
//! oracles (adaptive quadrature, winding numbers, finite differences) do not
//! share an implementation path with the code they are checking.

use num_complex::Complex64;

/// Gauss 7 / Kronrod 15 nodes on [-1, 1], positive half (QUADPACK values).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_2,
    0.949_107_912_342_758_524_5,
    0.864_864_423_359_769_072_8,
    0.741_531_185_599_394_439_9,
    0.586_087_235_467_691_130_3,
    0.405_845_151_377_397_166_9,
    0.207_784_955_007_898_467_6,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_96,
    0.063_092_092_629_978_553_29,
    0.104_790_010_322_250_183_84,
    0.140_653_259_715_525_918_75,
    0.169_004_726_639_267_902_83,
    0.190_350_578_064_785_409_91,
    0.204_432_940_075_298_892_41,
    0.209_482_141_084_727_828_01,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_27,
    0.279_705_391_489_276_667_90,
    0.381_830_050_505_118_944_95,
    0.417_959_183_673_469_387_76,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut kron = WGK[7] * f(c);
    let mut gauss = WG[3] * f(c);
    for i in 0..7 {
        let x = h * XGK[i];
        let fv = f(c - x) + f(c + x);
        kron += WGK[i] * fv;
        if i % 2 == 1 {
            gauss += WG[i / 2] * fv;
        }
    }
    kron *= h;
    gauss *= h;
    (kron, (kron - gauss).abs())
}

#[derive(PartialEq)]
struct Segment {
    err: f64,
    val: f64,
    a: f64,
    b: f64,
    depth: u32,
}

impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.partial_cmp(&other.err).unwrap_or(std::cmp::Ordering::Equal)
    }
}

/// Globally adaptive Gauss-Kronrod integration over the segments given by
/// consecutive entries of `pts`, refining the worst segment first until the
/// accumulated error estimate drops below `tol` (absolute).
pub fn integrate_split<F: Fn(f64) -> f64>(f: F, pts: &[f64], tol: f64) -> f64 {
    use std::collections::BinaryHeap;
    let mut heap = BinaryHeap::new();
    let mut err_sum = 0.0;
    let mut abs_sum = 0.0;
    for w in pts.windows(2) {
        if w[1] > w[0] {
            let (val, err) = gk15(&f, w[0], w[1]);
            err_sum += err;
            abs_sum += val.abs();
            heap.push(Segment { err, val, a: w[0], b: w[1], depth: 0 });
        }
    }
    for _ in 0..200_000 {
        if err_sum <= tol {
            break;
        }
        let Some(worst) = heap.pop() else { break };
        // A segment whose error estimate sits at the rounding floor of the
        // accumulated magnitudes cannot be improved by further splitting;
        // neither can one so narrow that quadrature nodes would round onto
        // its endpoints (which may be singular points of the integrand).
        let width_floor = 100.0 * f64::EPSILON * worst.a.abs().max(worst.b.abs()).max(1e-3);
        let unsplittable = worst.depth >= 60
            || (worst.b - worst.a) < width_floor
            || worst.err <= 1e-16 * abs_sum;
        if unsplittable {
            err_sum -= worst.err;
            heap.push(Segment { err: 0.0, ..worst });
            continue;
        }
        let c = 0.5 * (worst.a + worst.b);
        let (lv, le) = gk15(&f, worst.a, c);
        let (rv, re) = gk15(&f, c, worst.b);
        err_sum += le + re - worst.err;
        abs_sum += lv.abs() + rv.abs() - worst.val.abs();
        heap.push(Segment { err: le, val: lv, a: worst.a, b: c, depth: worst.depth + 1 });
        heap.push(Segment { err: re, val: rv, a: c, b: worst.b, depth: worst.depth + 1 });
    }
    // compensated sum of contributions
    let mut sum = 0.0;
    let mut comp = 0.0;
    for seg in heap.into_sorted_vec() {
        let y = seg.val - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Adaptive Gauss-Kronrod integration of `f` over [a, b].
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    integrate_split(f, &[a, b], tol)
}

/// Complex contour integral along a parametrized path `gamma(t)`, t in [a, b],
/// of `f(gamma(t)) * gamma'(t)`. Both real and imaginary parts are integrated
/// adaptively and independently.
pub fn integrate_contour<F, G, DG>(f: F, gamma: G, dgamma: DG, a: f64, b: f64, tol: f64) -> Complex64
where
    F: Fn(Complex64) -> Complex64,
    G: Fn(f64) -> Complex64,
    DG: Fn(f64) -> Complex64,
{
    let re = integrate(|t| (f(gamma(t)) * dgamma(t)).re, a, b, tol);
    let im = integrate(|t| (f(gamma(t)) * dgamma(t)).im, a, b, tol);
    Complex64::new(re, im)
}

fn winding_rec<G: Fn(f64) -> [f64; 2]>(g: &G, p: [f64; 2], t0: f64, t1: f64, depth: u32) -> f64 {
    let v0 = [g(t0)[0] - p[0], g(t0)[1] - p[1]];
    let v1 = [g(t1)[0] - p[0], g(t1)[1] - p[1]];
    let cross = v0[0] * v1[1] - v0[1] * v1[0];
    let dot = v0[0] * v1[0] + v0[1] * v1[1];
    let dtheta = cross.atan2(dot);
    if depth >= 64 {
        return dtheta;
    }
    // Split until each segment subtends a small angle as seen from p, so the
    // principal-value angle increment is unambiguous.
    if dtheta.abs() > 0.5 {
        let tm = 0.5 * (t0 + t1);
        return winding_rec(g, p, t0, tm, depth + 1) + winding_rec(g, p, tm, t1, depth + 1);
    }
    dtheta
}

/// Winding number of the closed curve `g` (parametrized on [0, 2*pi)) around `p`.
pub fn winding_number<G: Fn(f64) -> [f64; 2]>(g: G, p: [f64; 2]) -> i32 {
    let mut total = 0.0;
    let n = 64;
    for i in 0..n {
        let t0 = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
        let t1 = 2.0 * std::f64::consts::PI * (i + 1) as f64 / n as f64;
        total += winding_rec(&g, p, t0, t1, 0);
    }
    (total / (2.0 * std::f64::consts::PI)).round() as i32
}

/// Central finite difference of `f` at `x` with step `h`.
pub fn central_diff<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_smooth() {
        let v = integrate(|x| x.sin(), 0.0, std::f64::consts::PI, 1e-14);
        assert!((v - 2.0).abs() < 1e-13);
    }

    #[test]
    fn integrates_log_endpoint() {
        // int_0^1 ln(x) dx = -1
        let v = integrate(|x| x.ln(), 0.0, 1.0, 1e-13);
        assert!((v + 1.0).abs() < 1e-11);
    }

    #[test]
    fn winding_circle() {
        let g = |t: f64| [t.cos(), t.sin()];
        assert_eq!(winding_number(g, [0.0, 0.0]), 1);
        assert_eq!(winding_number(g, [2.0, 0.0]), 0);
        // Point very close to the curve from inside and outside.
        assert_eq!(winding_number(g, [1.0 - 1e-10, 0.0]), 1);
        assert_eq!(winding_number(g, [1.0 + 1e-10, 0.0]), 0);
    }
}
