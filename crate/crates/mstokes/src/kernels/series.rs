//! Small-argument power series for the stresslet functions and their
//! log-split components.
//!
//! The expansions combine the series of I0, I1, K0, K1 with the log factor
//! broken out of the K-coefficients: k_i(z, n) = k_i^S(n) + k_i^L(n) log z.
//! Values use 11 terms for z <= 1.5 and derivatives 13 terms for z <= 2.

use std::f64::consts::PI;
use std::sync::OnceLock;

/// Switch to series evaluation of values at and below this argument.
pub const SERIES_Z_VALUES: f64 = 1.5;
/// Switch to series evaluation of derivatives at and below this argument.
pub const SERIES_Z_DERIVS: f64 = 2.0;

const N_TERMS_VALUES: usize = 11;
const N_TERMS_DERIVS: usize = 13;
/// Highest index needed by any of the truncated sums below.
const N_MAX: usize = 16;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

pub(super) struct SeriesTable {
    pub i0: [f64; N_MAX + 1],
    pub i1: [f64; N_MAX + 1],
    pub k0s: [f64; N_MAX + 1],
    pub k0l: [f64; N_MAX + 1],
    pub k1s: [f64; N_MAX + 1],
    pub k1l: [f64; N_MAX + 1],
    /// a1[n] = 2 k0[n] + 4 k1[n] + k1[n-1], split into S/L parts (n >= 1)
    pub a1s: [f64; N_MAX + 1],
    pub a1l: [f64; N_MAX + 1],
    /// a2[n] = 4 k0[n] + 8 k1[n] + k1[n-1], split into S/L parts (n >= 2)
    pub a2s: [f64; N_MAX + 1],
    pub a2l: [f64; N_MAX + 1],
}

pub(super) fn table() -> &'static SeriesTable {
    static TABLE: OnceLock<SeriesTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut psi = [0.0; N_MAX + 3];
        psi[1] = -EULER_GAMMA;
        for n in 1..N_MAX + 2 {
            psi[n + 1] = psi[n] + 1.0 / n as f64;
        }
        let mut fact = [1.0; N_MAX + 3];
        for n in 1..N_MAX + 3 {
            fact[n] = fact[n - 1] * n as f64;
        }
        let ln2 = std::f64::consts::LN_2;
        let mut t = SeriesTable {
            i0: [0.0; N_MAX + 1],
            i1: [0.0; N_MAX + 1],
            k0s: [0.0; N_MAX + 1],
            k0l: [0.0; N_MAX + 1],
            k1s: [0.0; N_MAX + 1],
            k1l: [0.0; N_MAX + 1],
            a1s: [0.0; N_MAX + 1],
            a1l: [0.0; N_MAX + 1],
            a2s: [0.0; N_MAX + 1],
            a2l: [0.0; N_MAX + 1],
        };
        for n in 0..=N_MAX {
            let p4 = 4.0_f64.powi(n as i32);
            t.i0[n] = 1.0 / (p4 * fact[n] * fact[n]);
            t.i1[n] = 0.5 / (p4 * fact[n] * fact[n + 1]);
            // k0(z,n) = (psi(n+1) - log(z/2)) / (4^n (n!)^2)
            t.k0s[n] = (psi[n + 1] + ln2) * t.i0[n];
            t.k0l[n] = -t.i0[n];
            // k1(z,n) = (2 log(z/2) - psi(n+1) - psi(n+2)) / (4^(n+1) n! (n+1)!)
            let d = 1.0 / (4.0 * p4 * fact[n] * fact[n + 1]);
            t.k1s[n] = (-2.0 * ln2 - psi[n + 1] - psi[n + 2]) * d;
            t.k1l[n] = 2.0 * d;
        }
        for n in 1..=N_MAX {
            t.a1s[n] = 2.0 * t.k0s[n] + 4.0 * t.k1s[n] + t.k1s[n - 1];
            t.a1l[n] = 2.0 * t.k0l[n] + 4.0 * t.k1l[n] + t.k1l[n - 1];
            t.a2s[n] = 4.0 * t.k0s[n] + 8.0 * t.k1s[n] + t.k1s[n - 1];
            t.a2l[n] = 4.0 * t.k0l[n] + 8.0 * t.k1l[n] + t.k1l[n - 1];
        }
        t
    })
}

/// Split stresslet functions by series: (T1S, T1L, T2S, T2L, T3S, T3L).
pub(super) fn split_values_series(z: f64) -> (f64, f64, f64, f64, f64, f64) {
    let t = table();
    let z2 = z * z;
    let (mut t1s, mut t1l) = (0.0, 0.0);
    let mut zp = 1.0; // z^(2n-2) starting at n=1
    for n in 1..=N_TERMS_VALUES {
        t1s += t.a1s[n] * zp;
        t1l += t.a1l[n] * zp;
        zp *= z2;
    }
    t1s *= -1.0 / (2.0 * PI);
    t1l *= -1.0 / (2.0 * PI);

    let (mut t2s, mut t2l) = (0.0, 0.0);
    let mut zp = 1.0; // z^(2n-4) starting at n=2
    for n in 2..=N_TERMS_VALUES + 1 {
        t2s += t.a2s[n] * zp;
        t2l += t.a2l[n] * zp;
        zp *= z2;
    }
    t2s /= PI;
    t2l /= PI;

    let (mut t3s, mut t3l) = (0.0, 0.0);
    let mut zp = 1.0; // z^(2n) starting at n=0
    for n in 0..N_TERMS_VALUES {
        t3s += t.k1s[n] * zp;
        t3l += t.k1l[n] * zp;
        zp *= z2;
    }
    t3s /= 2.0 * PI;
    t3l /= 2.0 * PI;

    (t1s, t1l, t2s, t2l, t3s, t3l)
}

/// Derivatives of the split stresslet functions by series:
/// (T1S', T1L', T2S', T2L', T3S', T3L').
pub(super) fn split_derivs_series(z: f64) -> (f64, f64, f64, f64, f64, f64) {
    let t = table();
    let z2 = z * z;
    let (mut d1s, mut d1l) = (0.0, 0.0);
    let mut zp = z; // z^(2n-3) starting at n=2
    for n in 2..=N_TERMS_DERIVS + 1 {
        let c = (2 * n - 2) as f64;
        d1s += t.a1s[n] * c * zp;
        d1l += t.a1l[n] * c * zp;
        zp *= z2;
    }
    d1s *= -1.0 / (2.0 * PI);
    d1l *= -1.0 / (2.0 * PI);

    let (mut d2s, mut d2l) = (0.0, 0.0);
    let mut zp = z; // z^(2n-5) starting at n=3
    for n in 3..=N_TERMS_DERIVS + 2 {
        let c = (2 * n - 4) as f64;
        d2s += t.a2s[n] * c * zp;
        d2l += t.a2l[n] * c * zp;
        zp *= z2;
    }
    d2s /= PI;
    d2l /= PI;

    let (mut d3s, mut d3l) = (0.0, 0.0);
    let mut zp = z; // z^(2n-1) starting at n=1
    for n in 1..=N_TERMS_DERIVS {
        let c = (2 * n) as f64;
        d3s += t.k1s[n] * c * zp;
        d3l += t.k1l[n] * c * zp;
        zp *= z2;
    }
    d3s /= 2.0 * PI;
    d3l /= 2.0 * PI;

    (d1s, d1l, d2s, d2l, d3s, d3l)
}

/// log r + K0(alpha r) evaluated without cancellation for small alpha*r,
/// used by the modified biharmonic Green's function.
///
/// With K0(z) = K0S(z) - I0(z) log z and z = alpha r,
///   log r + K0(z) = -(I0(z) - 1) log r - I0(z) log alpha + K0S(z).
pub(super) fn log_plus_k0_series(r: f64, alpha: f64) -> f64 {
    let t = table();
    let z = alpha * r;
    let z2 = z * z;
    let mut i0m1 = 0.0; // I0(z) - 1
    let mut k0s = 0.0; // entire part of the K0 log split
    let mut zp = 1.0; // z^(2n)
    for n in 0..N_TERMS_VALUES {
        if n >= 1 {
            i0m1 += t.i0[n] * zp;
        }
        k0s += t.k0s[n] * zp;
        zp *= z2;
    }
    -i0m1 * r.ln() - (1.0 + i0m1) * alpha.ln() + k0s
}
