use mstokes::geometry::{build_panels, Curve};
use mstokes::kernels;
use std::f64::consts::PI;

fn density(t: f64) -> [f64; 2] {
    [(2.0 * t).cos() + 0.3, (3.0 * t).sin() - 0.2]
}

fn accurate_diff(curve: &Curve, base: f64, t: f64) -> [f64; 2] {
    // 8-pt composite GL of the derivative
    let gx = [-0.9602898564975363, -0.7966664774136267, -0.525532409916329, -0.1834346424956498,
              0.1834346424956498, 0.525532409916329, 0.7966664774136267, 0.9602898564975363];
    let gw = [0.10122853629037626, 0.22238103445337448, 0.31370664587788727, 0.362683783378362,
              0.362683783378362, 0.31370664587788727, 0.22238103445337448, 0.10122853629037626];
    let n_chunks = ((t - base).abs() / 0.02).ceil().max(1.0) as usize;
    let mut out = [0.0; 2];
    let step = (t - base) / n_chunks as f64;
    for c in 0..n_chunks {
        let a = base + step * c as f64;
        let m = a + 0.5 * step;
        for (xj, wj) in gx.iter().zip(&gw) {
            let d = curve.derivative(m + 0.5 * step * xj);
            out[0] += 0.5 * step * wj * d[0];
            out[1] += 0.5 * step * wj * d[1];
        }
    }
    out
}

fn main() {
    let b = build_panels(&[Curve::starfish(1.0, 0.3, 0.0, [PI, PI])], &[40]).unwrap();
    let alpha = 10.0;
    let (pid, node_off) = (33usize, 7usize);
    let p = &b.panels[pid];
    let m = p.first_node + node_off;
    let t_m = b.params[m];
    let nu = b.normals[m];
    let curve = b.curve_of(pid);
    let d = 1e-6 * p.h;
    let base_off = [d * nu[0], d * nu[1]];
    let u_oracle = |off: [f64; 2], j: usize| -> f64 {
        refnum::integrate_split(
            |t| {
                let dg = curve.derivative(t);
                let sp = (dg[0] * dg[0] + dg[1] * dg[1]).sqrt();
                let nv = [-dg[1] / sp, dg[0] / sp];
                let dy = accurate_diff(curve, t_m, t);
                let rv = [dy[0] - off[0], dy[1] - off[1]];
                let mu = density(t);
                let k = kernels::dlp_kernel(rv, nv, alpha);
                (mu[0] * k[0][j] + mu[1] * k[1][j]) * sp
            },
            &[p.t0, t_m, p.t1],
            1e-14,
        )
    };
    // d/dx1 u1 by one-sided interior steps along x1... actually center along
    // each axis but keep min distance: use central with h small vs d? h=1e-9
    // risks cancellation; instead do central difference with h = 3e-8 along
    // both axes from a point at distance 1e-6 h: stencil distance varies but
    // stays interior (d_phys = 1.9e-7 > h).
    let h = 1.0e-5;
    for (lbl, l, j) in [("g11", 0usize, 0usize), ("g21", 0, 1), ("g12", 1, 0), ("g22", 1, 1)] {
        // one-sided second-order step into the domain
        let sgn = if nu[l] >= 0.0 { 1.0 } else { -1.0 };
        let mut o1 = base_off;
        let mut o2 = base_off;
        o1[l] += sgn * h;
        o2[l] += 2.0 * sgn * h;
        let f0 = u_oracle(base_off, j);
        let f1 = u_oracle(o1, j);
        let f2 = u_oracle(o2, j);
        let fd = sgn * (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
        println!("{lbl}: one-sided fd = {fd:.9}");
    }
}
