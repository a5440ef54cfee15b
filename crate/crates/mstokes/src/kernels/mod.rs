//! Closed-form fundamental solutions of the modified Stokes equations.
//!
//! The velocity Green's function (stokeslet) and its stress tensor (the
//! stresslet) are built from the modified biharmonic Green's function
//!
//!   G(r) = -(log r + K0(alpha r)) / (2 pi alpha^2),
//!
//! and reduce to radial functions S1, S2, T1, T2, T3 of z = alpha * |r|.
//! This module provides those functions, their derivatives, and the
//! log-split decomposition T_i = T_i^S + T_i^L log z (+ explicit singular
//! terms for T2) that the kernel-split quadrature consumes. All small-z
//! paths use the power series from `series.rs` to avoid cancellation.

mod bessel;
mod bessel_coeffs;
mod series;

pub use bessel::{bessel_i0, bessel_i1, bessel_in_seq, bessel_k0, bessel_k1, bessel_kn_seq};
pub use series::{SERIES_Z_DERIVS, SERIES_Z_VALUES};

use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KernelError {
    #[error("kernel is singular at zero distance")]
    ZeroDistance,
    #[error("argument must be positive")]
    NonPositiveArgument,
    #[error("invalid kernel parameter: {0}")]
    InvalidParameter(&'static str),
}

/// Parameters of the modified Stokes operator (alpha^2 - Laplace) u + Re grad p.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    pub alpha: f64,
    pub reynolds: f64,
}

impl KernelParams {
    pub fn new(alpha: f64, reynolds: f64) -> Result<Self, KernelError> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(KernelError::InvalidParameter("alpha must be positive"));
        }
        if !(reynolds > 0.0 && reynolds.is_finite()) {
            return Err(KernelError::InvalidParameter("reynolds must be positive"));
        }
        Ok(Self { alpha, reynolds })
    }

    /// alpha = sqrt(Re / dt) for a substep of length dt.
    pub fn from_timestep(reynolds: f64, dt: f64) -> Result<Self, KernelError> {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(KernelError::InvalidParameter("dt must be positive"));
        }
        Self::new((reynolds / dt).sqrt(), reynolds)
    }
}

/// Log-split components of the stresslet functions:
/// T_i(z) = tis + til*log z, with T2 carrying the extra explicit terms
/// 1/(8 pi z^2) - 1/(pi z^4).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SplitValues {
    pub t1s: f64,
    pub t1l: f64,
    pub t2s: f64,
    pub t2l: f64,
    pub t3s: f64,
    pub t3l: f64,
}

/// Derivatives of the split stresslet functions with respect to z.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SplitDerivs {
    pub t1s: f64,
    pub t1l: f64,
    pub t2s: f64,
    pub t2l: f64,
    pub t3s: f64,
    pub t3l: f64,
}

#[inline]
fn check_z(z: f64) -> Result<(), KernelError> {
    if z > 0.0 && z.is_finite() {
        Ok(())
    } else {
        Err(KernelError::NonPositiveArgument)
    }
}

/// T1L, T2L, T3L from closed forms (entire functions of z).
#[inline]
fn split_l_closed(z: f64, i0: f64, i1: f64) -> (f64, f64, f64) {
    let z2 = z * z;
    let z3 = z2 * z;
    let t1l = (2.0 * z * i0 - (z2 + 4.0) * i1) / (2.0 * PI * z3);
    let t2l = ((z2 + 8.0) * i1 - 4.0 * z * i0) / (PI * z3 * z2);
    let t3l = i1 / (2.0 * PI * z);
    (t1l, t2l, t3l)
}

/// Split values for moderate z via K0S = K0 + I0 log z, K1S = K1 - I1 log z - 1/z.
fn split_values_closed(z: f64) -> SplitValues {
    let (k0, k1, i0, i1) = (bessel_k0(z), bessel_k1(z), bessel_i0(z), bessel_i1(z));
    let lnz = z.ln();
    let k0s = k0 + i0 * lnz;
    let k1s = k1 - i1 * lnz - 1.0 / z;
    let z2 = z * z;
    let z3 = z2 * z;
    let (t1l, t2l, t3l) = split_l_closed(z, i0, i1);
    SplitValues {
        t1s: -(2.0 * z * k0s + (z2 + 4.0) * k1s + z) / (2.0 * PI * z3),
        t1l,
        t2s: (32.0 * z * k0s + 8.0 * (z2 + 8.0) * k1s - z * (z2 - 16.0)) / (8.0 * PI * z3 * z2),
        t2l,
        t3s: k1s / (2.0 * PI * z),
        t3l,
    }
}

/// Unsplit stresslet functions (T1, T2, T3) by the direct Bessel forms.
/// Only valid where the combinations do not cancel (z above the series cut).
fn stresslet_fns_closed(z: f64) -> (f64, f64, f64) {
    let (k0, k1) = (bessel_k0(z), bessel_k1(z));
    let z2 = z * z;
    let z4 = z2 * z2;
    let t1 = -(2.0 * z2 * k0 + (z2 + 4.0) * z * k1 - 4.0) / (2.0 * PI * z4);
    let t2 = (4.0 * z2 * k0 + (z2 + 8.0) * z * k1 - 8.0) / (PI * z4 * z2);
    let t3 = (z * k1 - 1.0) / (2.0 * PI * z2);
    (t1, t2, t3)
}

/// Derivatives T1', T2', T3' by the direct Bessel forms.
fn stresslet_fn_derivs_closed(z: f64) -> (f64, f64, f64) {
    let (k0, k1) = (bessel_k0(z), bessel_k1(z));
    let z2 = z * z;
    let z4 = z2 * z2;
    let d1 = ((z4 + 8.0 * z2) * k0 + 4.0 * z * (z2 + 4.0) * k1 - 16.0) / (2.0 * PI * z4 * z);
    let d2 = -((z4 + 24.0 * z2) * k0 + 8.0 * z * (z2 + 6.0) * k1 - 48.0) / (PI * z4 * z2 * z);
    let d3 = -(z2 * k0 + 2.0 * z * k1 - 2.0) / (2.0 * PI * z2 * z);
    (d1, d2, d3)
}

pub(crate) fn split_values_raw(z: f64) -> SplitValues {
    if z <= SERIES_Z_VALUES {
        let (t1s, t1l, t2s, t2l, t3s, t3l) = series::split_values_series(z);
        SplitValues { t1s, t1l, t2s, t2l, t3s, t3l }
    } else {
        split_values_closed(z)
    }
}

pub(crate) fn split_derivs_raw(z: f64) -> SplitDerivs {
    if z <= SERIES_Z_DERIVS {
        let (t1s, t1l, t2s, t2l, t3s, t3l) = series::split_derivs_series(z);
        SplitDerivs { t1s, t1l, t2s, t2l, t3s, t3l }
    } else {
        let (d1, d2, d3) = stresslet_fn_derivs_closed(z);
        let (i0, i1) = (bessel_i0(z), bessel_i1(z));
        let lnz = z.ln();
        let z2 = z * z;
        let z3 = z2 * z;
        let t1lp = (4.0 * (z2 + 4.0) * i1 - z * (z2 + 8.0) * i0) / (2.0 * PI * z2 * z2);
        let t2lp = (z * (z2 + 24.0) * i0 - 8.0 * (z2 + 6.0) * i1) / (PI * z3 * z3);
        let t3lp = (z * i0 - 2.0 * i1) / (2.0 * PI * z2);
        let (t1l, t2l, t3l) = split_l_closed(z, i0, i1);
        SplitDerivs {
            t1s: d1 - t1lp * lnz - t1l / z,
            t1l: t1lp,
            t2s: d2 - t2lp * lnz - t2l / z + 1.0 / (4.0 * PI * z3) - 4.0 / (PI * z3 * z2),
            t2l: t2lp,
            t3s: d3 - t3lp * lnz - t3l / z,
            t3l: t3lp,
        }
    }
}

/// (T1, T2, T3) with series reconstruction below the cancellation cut.
pub(crate) fn stresslet_fns_raw(z: f64) -> (f64, f64, f64) {
    if z <= SERIES_Z_VALUES {
        let v = split_values_raw(z);
        let lnz = z.ln();
        let z2 = z * z;
        (
            v.t1s + v.t1l * lnz,
            v.t2s + v.t2l * lnz + 1.0 / (8.0 * PI * z2) - 1.0 / (PI * z2 * z2),
            v.t3s + v.t3l * lnz,
        )
    } else {
        stresslet_fns_closed(z)
    }
}

/// (T1', T2', T3') with series reconstruction below the cancellation cut.
pub(crate) fn stresslet_fn_derivs_raw(z: f64) -> (f64, f64, f64) {
    if z <= SERIES_Z_DERIVS {
        let v = split_values_raw(z);
        let d = split_derivs_raw(z);
        let lnz = z.ln();
        let z2 = z * z;
        let z3 = z2 * z;
        (
            d.t1s + d.t1l * lnz + v.t1l / z,
            d.t2s + d.t2l * lnz + v.t2l / z - 1.0 / (4.0 * PI * z3) + 4.0 / (PI * z3 * z2),
            d.t3s + d.t3l * lnz + v.t3l / z,
        )
    } else {
        stresslet_fn_derivs_closed(z)
    }
}

/// Stokeslet radial functions (S1, S2). Series-combined coefficients are used
/// for small z where the closed forms cancel.
pub(crate) fn stokeslet_fns_raw(z: f64) -> (f64, f64) {
    if z <= SERIES_Z_VALUES {
        // S1 = (1/2pi) sum (k0 + k1)(z,n) z^(2n)
        // S2 = -(1/2pi z^2) sum (k0 + 2 k1)(z,n) z^(2n)
        let t = series::table();
        let lnz = z.ln();
        let z2 = z * z;
        let mut s1 = 0.0;
        let mut s2 = 0.0;
        let mut zp = 1.0;
        for n in 0..11 {
            let k0n = t.k0s[n] + t.k0l[n] * lnz;
            let k1n = t.k1s[n] + t.k1l[n] * lnz;
            s1 += (k0n + k1n) * zp;
            s2 += (k0n + 2.0 * k1n) * zp;
            zp *= z2;
        }
        (s1 / (2.0 * PI), -s2 / (2.0 * PI * z2))
    } else {
        let (k0, k1) = (bessel_k0(z), bessel_k1(z));
        let z2 = z * z;
        (
            (z2 * k0 + z * k1 - 1.0) / (2.0 * PI * z2),
            -(z2 * k0 + 2.0 * z * k1 - 2.0) / (2.0 * PI * z2 * z2),
        )
    }
}

/// (S1', S2') for the stokeslet gradient (closed forms; used away from z=0).
pub(crate) fn stokeslet_fn_derivs_raw(z: f64) -> (f64, f64) {
    let (k0, k1) = (bessel_k0(z), bessel_k1(z));
    let z2 = z * z;
    // N1 = z^2 K0 + z K1 - 1, S1 = N1/(2 pi z^2), N1' = z K0 - z^2 K1
    let n1 = z2 * k0 + z * k1 - 1.0;
    let n1p = z * k0 - z2 * k1;
    let s1p = (n1p * z - 2.0 * n1) / (2.0 * PI * z2 * z);
    // N2 = z^2 K0 + 2 z K1 - 2, S2 = -N2/(2 pi z^4), N2' = -z^2 K1
    let n2 = z2 * k0 + 2.0 * z * k1 - 2.0;
    let n2p = -z2 * k1;
    let s2p = -(n2p * z - 4.0 * n2) / (2.0 * PI * z2 * z2 * z);
    (s1p, s2p)
}

/// Free-space Green's function of the modified biharmonic equation,
/// G(r) = -(log r + K0(alpha r)) / (2 pi alpha^2).
pub fn greens_modbiharm(r: f64, alpha: f64) -> Result<f64, KernelError> {
    check_z(r)?;
    check_z(alpha)?;
    let z = alpha * r;
    let inner = if z <= SERIES_Z_VALUES {
        series::log_plus_k0_series(r, alpha)
    } else {
        r.ln() + bessel_k0(z)
    };
    Ok(-inner / (2.0 * PI * alpha * alpha))
}

/// Modified stokeslet tensor S_ij(r) = S1(z) delta_ij + alpha^2 S2(z) r_i r_j.
pub fn stokeslet(rvec: [f64; 2], alpha: f64) -> Result<[[f64; 2]; 2], KernelError> {
    let r = (rvec[0] * rvec[0] + rvec[1] * rvec[1]).sqrt();
    check_z(r)?;
    let (s1, s2) = stokeslet_fns_raw(alpha * r);
    let c = alpha * alpha * s2;
    let mut s = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            s[i][j] = c * (rvec[i] * rvec[j]);
        }
        s[i][i] += s1;
    }
    Ok(s)
}

/// Gradient of the stokeslet, d S_ij / d r_l, indexed [i][j][l].
pub fn stokeslet_gradient(rvec: [f64; 2], alpha: f64) -> Result<[[[f64; 2]; 2]; 2], KernelError> {
    let r = (rvec[0] * rvec[0] + rvec[1] * rvec[1]).sqrt();
    check_z(r)?;
    let z = alpha * r;
    let (_, s2) = stokeslet_fns_raw(z);
    let (s1p, s2p) = stokeslet_fn_derivs_raw(z);
    let a2 = alpha * alpha;
    let mut g = [[[0.0; 2]; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                let radial = alpha * rvec[l] / r * (if i == j { s1p } else { 0.0 })
                    + a2 * alpha * rvec[l] / r * s2p * rvec[i] * rvec[j];
                let product = a2
                    * s2
                    * ((if i == l { rvec[j] } else { 0.0 }) + (if j == l { rvec[i] } else { 0.0 }));
                g[i][j][l] = radial + product;
            }
        }
    }
    Ok(g)
}

/// Pressure vector phi_i(r) = r_i / (2 pi |r|^2).
pub fn pressure_vector(rvec: [f64; 2]) -> Result<[f64; 2], KernelError> {
    let r2 = rvec[0] * rvec[0] + rvec[1] * rvec[1];
    if r2 == 0.0 || !r2.is_finite() {
        return Err(KernelError::ZeroDistance);
    }
    Ok([rvec[0] / (2.0 * PI * r2), rvec[1] / (2.0 * PI * r2)])
}

/// Stresslet tensor T_ijk(r), indexed [i][j][k]:
/// alpha^2 T1 (d_jk r_i + d_ik r_j + d_ij r_k) + alpha^4 T2 r_i r_j r_k
/// + alpha^2 T3 d_ik r_j.
pub fn stresslet(rvec: [f64; 2], alpha: f64) -> Result<[[[f64; 2]; 2]; 2], KernelError> {
    let r = (rvec[0] * rvec[0] + rvec[1] * rvec[1]).sqrt();
    check_z(r)?;
    let (t1, t2, t3) = stresslet_fns_raw(alpha * r);
    let a2 = alpha * alpha;
    let a4 = a2 * a2;
    let mut t = [[[0.0; 2]; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let mut v = a4 * t2 * rvec[i] * rvec[j] * rvec[k];
                if j == k {
                    v += a2 * t1 * rvec[i];
                }
                if i == k {
                    v += a2 * t1 * rvec[j] + a2 * t3 * rvec[j];
                }
                if i == j {
                    v += a2 * t1 * rvec[k];
                }
                t[i][j][k] = v;
            }
        }
    }
    Ok(t)
}

/// The stresslet functions (T1, T2, T3) of z.
pub fn stresslet_functions(z: f64) -> Result<(f64, f64, f64), KernelError> {
    check_z(z)?;
    Ok(stresslet_fns_raw(z))
}

/// The log-split components of the stresslet functions.
pub fn kernel_split_functions(z: f64) -> Result<SplitValues, KernelError> {
    check_z(z)?;
    Ok(split_values_raw(z))
}

/// Derivatives of the split stresslet functions.
pub fn stresslet_function_derivatives(z: f64) -> Result<SplitDerivs, KernelError> {
    check_z(z)?;
    Ok(split_derivs_raw(z))
}

/// Structural evaluation of the T-like tensor given radial factors:
/// t[i][j][k] = a2*f1*(d_jk r_i + d_ik r_j + d_ij r_k) + a4*f2*r_i r_j r_k
///            + a2*f3*d_ik r_j.
#[inline]
pub(crate) fn stress_tensor_from_fns(
    rvec: [f64; 2],
    alpha: f64,
    f1: f64,
    f2: f64,
    f3: f64,
) -> [[[f64; 2]; 2]; 2] {
    let a2 = alpha * alpha;
    let a4 = a2 * a2;
    let mut t = [[[0.0; 2]; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let mut v = a4 * f2 * rvec[i] * rvec[j] * rvec[k];
                if j == k {
                    v += a2 * f1 * rvec[i];
                }
                if i == k {
                    v += a2 * f1 * rvec[j] + a2 * f3 * rvec[j];
                }
                if i == j {
                    v += a2 * f1 * rvec[k];
                }
                t[i][j][k] = v;
            }
        }
    }
    t
}

/// d/d r_l of the T-like tensor with radial factors (f1, f2, f3) and their
/// z-derivatives (d1, d2, d3); indexed [i][j][k][l].
#[inline]
pub(crate) fn stress_tensor_deriv_from_fns(
    rvec: [f64; 2],
    alpha: f64,
    f1: f64,
    f2: f64,
    f3: f64,
    d1: f64,
    d2: f64,
    d3: f64,
) -> [[[[f64; 2]; 2]; 2]; 2] {
    let r = (rvec[0] * rvec[0] + rvec[1] * rvec[1]).sqrt();
    let a2 = alpha * alpha;
    let a4 = a2 * a2;
    let mut g = [[[[0.0; 2]; 2]; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let mut structural = [0.0; 2];
                let mut radial = a4 * d2 * rvec[i] * rvec[j] * rvec[k];
                if j == k {
                    radial += a2 * d1 * rvec[i];
                }
                if i == k {
                    radial += a2 * d1 * rvec[j] + a2 * d3 * rvec[j];
                }
                if i == j {
                    radial += a2 * d1 * rvec[k];
                }
                for l in 0..2 {
                    let mut v = 0.0;
                    if j == k && i == l {
                        v += a2 * f1;
                    }
                    if i == k && j == l {
                        v += a2 * f1 + a2 * f3;
                    }
                    if i == j && k == l {
                        v += a2 * f1;
                    }
                    v += a4
                        * f2
                        * ((if i == l { rvec[j] * rvec[k] } else { 0.0 })
                            + (if j == l { rvec[i] * rvec[k] } else { 0.0 })
                            + (if k == l { rvec[i] * rvec[j] } else { 0.0 }));
                    structural[l] = v;
                }
                for l in 0..2 {
                    g[i][j][k][l] = alpha * rvec[l] / r * radial + structural[l];
                }
            }
        }
    }
    g
}

/// Full stresslet gradient d T_ijk / d r_l, indexed [i][j][k][l].
pub fn stresslet_gradient(
    rvec: [f64; 2],
    alpha: f64,
) -> Result<[[[[f64; 2]; 2]; 2]; 2], KernelError> {
    let r = (rvec[0] * rvec[0] + rvec[1] * rvec[1]).sqrt();
    check_z(r)?;
    let z = alpha * r;
    let (t1, t2, t3) = stresslet_fns_raw(z);
    let (d1, d2, d3) = stresslet_fn_derivs_raw(z);
    Ok(stress_tensor_deriv_from_fns(rvec, alpha, t1, t2, t3, d1, d2, d3))
}


/// Double layer kernel contraction D[i][j] = T_ijk(r) n_k: the contribution
/// of density component i to velocity component j, with r = y - x.
pub fn dlp_kernel(rvec: [f64; 2], normal: [f64; 2], alpha: f64) -> [[f64; 2]; 2] {
    let r = (rvec[0] * rvec[0] + rvec[1] * rvec[1]).sqrt();
    let (t1, t2, t3) = stresslet_fns_raw(alpha * r);
    let t = stress_tensor_from_fns(rvec, alpha, t1, t2, t3);
    let mut c = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = t[i][j][0] * normal[0] + t[i][j][1] * normal[1];
        }
    }
    c
}

/// Target-gradient of the double layer kernel contraction:
/// G[i][j][l] = d/dx_l (T_ijk(y - x) n_k).
pub fn dlp_kernel_gradient(rvec: [f64; 2], normal: [f64; 2], alpha: f64) -> [[[f64; 2]; 2]; 2] {
    let r = (rvec[0] * rvec[0] + rvec[1] * rvec[1]).sqrt();
    let z = alpha * r;
    let (t1, t2, t3) = stresslet_fns_raw(z);
    let (d1, d2, d3) = stresslet_fn_derivs_raw(z);
    let dt = stress_tensor_deriv_from_fns(rvec, alpha, t1, t2, t3, d1, d2, d3);
    let mut g = [[[0.0; 2]; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                // d/dx_l = -d/dr_l with r = y - x
                g[i][j][l] = -(dt[i][j][0][l] * normal[0] + dt[i][j][1][l] * normal[1]);
            }
        }
    }
    g
}
