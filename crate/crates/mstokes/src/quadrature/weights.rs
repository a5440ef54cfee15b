//! Assembly of quadrature weight blocks for the double layer potential and
//! its gradient on a single work panel.
//!
//! A block maps the density at the panel's nodes to six scalar outputs:
//!   0: u1        1: u2
//!   2: du1/dx1   3: du2/dx1
//!   4: du1/dx2   5: du2/dx2
//!
//! Three evaluation modes:
//!  - direct: node-wise evaluation of the closed-form kernel (and gradient),
//!  - kernel-split near evaluation: the four-term split with complex
//!    interpolatory weights for the log, Cauchy, and supersingular parts,
//!  - on-boundary: kernel-split for the log term only, direct quadrature for
//!    the smooth-on-boundary remainder, diagonal limit t t^T kappa / (2 pi).

use super::moments::{complex_moments, BranchInfo, MomentSet};
use super::workpanel::WorkPanel;
use super::QuadratureError;
use crate::kernels;
use crate::numutil;
use num_complex::Complex64;
use std::f64::consts::PI;

pub const N_OUTPUTS: usize = 6;

/// Weights over the nodes of one work panel: w[(out*2 + comp)*n + node].
pub struct RawBlock {
    pub n: usize,
    pub w: Vec<f64>,
}

impl RawBlock {
    pub fn zeros(n: usize) -> Self {
        RawBlock { n, w: vec![0.0; N_OUTPUTS * 2 * n] }
    }

    #[inline]
    pub fn add(&mut self, out: usize, comp: usize, m: usize, v: f64) {
        self.w[(out * 2 + comp) * self.n + m] += v;
    }

    /// Accumulate a complex-assembled contribution O = A*omega + B*conj(omega)
    /// to the output pair (re_out, im_out), where omega = mu1 + i mu2.
    #[inline]
    pub fn add_c(&mut self, pair: (usize, usize), m: usize, a: Complex64, b: Complex64) {
        let d_mu1 = a + b;
        let d_mu2 = Complex64::i() * (a - b);
        self.add(pair.0, 0, m, d_mu1.re);
        self.add(pair.1, 0, m, d_mu1.im);
        self.add(pair.0, 1, m, d_mu2.re);
        self.add(pair.1, 1, m, d_mu2.im);
    }

    /// Compose through the panel's interpolation matrix, producing weights
    /// over the parent columns.
    pub fn compose(&self, work: &WorkPanel) -> Vec<f64> {
        let cols = work.interp.ncols();
        let mut out = vec![0.0; N_OUTPUTS * 2 * cols];
        for a in 0..N_OUTPUTS {
            for c in 0..2 {
                for m in 0..self.n {
                    let v = self.w[(a * 2 + c) * self.n + m];
                    if v != 0.0 {
                        for col in 0..cols {
                            out[(a * 2 + c) * cols + col] += v * work.interp[(m, col)];
                        }
                    }
                }
            }
        }
        out
    }
}

const U: (usize, usize) = (0, 1);
const D1: (usize, usize) = (2, 3);
const D2: (usize, usize) = (4, 5);

#[inline]
fn out_idx(j: usize, l: usize) -> usize {
    2 + 2 * l + j
}

/// Contraction of a stress-like tensor with the normal: C[i][j] = T_ijk n_k.
#[inline]
fn contract(t: &[[[f64; 2]; 2]; 2], n: [f64; 2]) -> [[f64; 2]; 2] {
    let mut c = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = t[i][j][0] * n[0] + t[i][j][1] * n[1];
        }
    }
    c
}

/// Contraction of the tensor derivative: C[i][j][l] = dT_ijk/dr_l n_k.
#[inline]
fn contract_d(t: &[[[[f64; 2]; 2]; 2]; 2], n: [f64; 2]) -> [[[f64; 2]; 2]; 2] {
    let mut c = [[[0.0; 2]; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                c[i][j][l] = t[i][j][0][l] * n[0] + t[i][j][1][l] * n[1];
            }
        }
    }
    c
}

/// Direct node-wise evaluation of the full kernel (and its gradient).
pub fn direct_block(work: &WorkPanel, z: Complex64, alpha: f64, grad: bool) -> RawBlock {
    let n = work.nodes.len();
    let mut blk = RawBlock::zeros(n);
    for (m, node) in work.nodes.iter().enumerate() {
        let rc = node.z - z;
        let rv = [rc.re, rc.im];
        let r = rc.norm();
        let zg = alpha * r;
        let nu = node.nu();
        let nv = [nu.re, nu.im];
        let w = node.w_ds();
        let (t1, t2, t3) = kernels::stresslet_fns_raw(zg);
        let tens = kernels::stress_tensor_from_fns(rv, alpha, t1, t2, t3);
        let c = contract(&tens, nv);
        for i in 0..2 {
            for j in 0..2 {
                blk.add(j, i, m, c[i][j] * w);
            }
        }
        if grad {
            let (d1, d2, d3) = kernels::stresslet_fn_derivs_raw(zg);
            let dt = kernels::stress_tensor_deriv_from_fns(rv, alpha, t1, t2, t3, d1, d2, d3);
            let dc = contract_d(&dt, nv);
            for i in 0..2 {
                for j in 0..2 {
                    for l in 0..2 {
                        // d/dx_l = -d/dr_l
                        blk.add(out_idx(j, l), i, m, -dc[i][j][l] * w);
                    }
                }
            }
        }
    }
    blk
}

/// Complex interpolatory weights for the kernels on this panel and target.
pub struct PanelWeights {
    /// weights for int g(tau) log(tau - z) dtau (unscaled)
    pub w_log: Vec<Complex64>,
    /// weights for int g(tau) dtau / (tau - z)
    pub w_cau: Vec<Complex64>,
    /// weights for int g(tau) dtau / (tau - z)^2 (empty on-surface)
    pub w_sup: Vec<Complex64>,
}

pub fn interpolatory_weights(
    work: &WorkPanel,
    moms: &MomentSet,
) -> Result<PanelWeights, QuadratureError> {
    let n = work.nodes.len();
    let delta = work.z_end - work.z_start;
    let zs_nodes: Vec<Complex64> = work
        .nodes
        .iter()
        .map(|nd| (2.0 * nd.z - work.z_start - work.z_end) / delta)
        .collect();
    // plain d-tau moments on the scaled panel: (1 - (-1)^k)/k
    let plain: Vec<Complex64> = (1..=n)
        .map(|k| Complex64::new(if k % 2 == 1 { 2.0 / k as f64 } else { 0.0 }, 0.0))
        .collect();
    let w_plain = numutil::vandermonde_dual_solve_refined(&zs_nodes, &plain);
    let w_logs = numutil::vandermonde_dual_solve_refined(&zs_nodes, &moms.q);
    let w_cau = numutil::vandermonde_dual_solve_refined(&zs_nodes, &moms.p[..n]);
    // residual check on the Cauchy weights (monomial test functions)
    let mut max_res = 0.0_f64;
    for k in (n.saturating_sub(2))..n {
        let mut s = Complex64::new(0.0, 0.0);
        for j in 0..n {
            s += zs_nodes[j].powu(k as u32) * w_cau[j];
        }
        max_res = max_res.max((s - moms.p[k]).norm() / moms.p[k].norm().max(1.0));
    }
    if max_res > 1e-8 {
        return Err(QuadratureError::IllConditionedVandermonde(max_res));
    }
    let half_delta = 0.5 * delta;
    let log_shift = half_delta.ln();
    let w_log: Vec<Complex64> = (0..n)
        .map(|m| half_delta * (w_logs[m] + log_shift * w_plain[m]))
        .collect();
    let w_sup: Vec<Complex64> = if moms.r.is_empty() {
        Vec::new()
    } else {
        let ws = numutil::vandermonde_dual_solve_refined(&zs_nodes, &moms.r);
        ws.iter().map(|w| w / half_delta).collect()
    };
    Ok(PanelWeights { w_log, w_cau, w_sup })
}

/// Kernel-split near evaluation: target off the panel, all four split terms
/// via their dedicated weights; gradient optionally included.
pub fn ks_block(
    work: &WorkPanel,
    z: Complex64,
    alpha: f64,
    grad: bool,
) -> Result<RawBlock, QuadratureError> {
    ks_block_inner(work, z, alpha, grad, true)
}

/// The integration-by-parts bracket term of the supersingular gradient is
/// required for correctness; the switch exists only so a regression test can
/// demonstrate that omitting it breaks the finite-difference check.
pub fn ks_block_inner(
    work: &WorkPanel,
    z: Complex64,
    alpha: f64,
    grad: bool,
    include_bracket: bool,
) -> Result<RawBlock, QuadratureError> {
    let n = work.nodes.len();
    let branch = BranchInfo { darg: work.branch_darg(z, None), on_path: false };
    let moms = complex_moments(work.z_start, work.z_end, z, n, branch);
    let pw = interpolatory_weights(work, &moms)?;
    let ln_alpha = alpha.ln();
    let mut blk = RawBlock::zeros(n);

    // Differentiation matrix d/d tau (only needed for the gradient).
    let dmat = if grad {
        let s: Vec<f64> = work.nodes.iter().map(|nd| nd.s).collect();
        Some(numutil::diff_matrix(&s))
    } else {
        None
    };

    // node-wise pieces
    let mut l_tensors = Vec::with_capacity(n);
    for (m, node) in work.nodes.iter().enumerate() {
        let rc = node.z - z;
        let rv = [rc.re, rc.im];
        let zg = alpha * rc.norm();
        let nu = node.nu();
        let nv = [nu.re, nu.im];
        let w_ds = node.w_ds();
        let v = kernels::split_values_raw(zg);
        // 1: smooth part (T^S + log(alpha) T^L), direct quadrature
        let f1 = v.t1s + ln_alpha * v.t1l;
        let f2 = v.t2s + ln_alpha * v.t2l;
        let f3 = v.t3s + ln_alpha * v.t3l;
        let smooth = contract(&kernels::stress_tensor_from_fns(rv, alpha, f1, f2, f3), nv);
        // 2: log part coefficient L_ij = T^L_ijk n_k
        let lt = contract(&kernels::stress_tensor_from_fns(rv, alpha, v.t1l, v.t2l, v.t3l), nv);
        let c_log = -(pw.w_log[m] * nu.conj()).im;
        // 3: Cauchy part, f_j = alpha^2 (mu.r) r_j / (8 pi)
        let c_cau = -pw.w_cau[m].im * alpha * alpha / (8.0 * PI);
        for i in 0..2 {
            for j in 0..2 {
                blk.add(j, i, m, smooth[i][j] * w_ds + lt[i][j] * c_log + c_cau * rv[i] * rv[j]);
            }
        }
        // 4: supersingular part
        let a4 = pw.w_cau[m].im / (2.0 * PI);
        let b4 = Complex64::i() / (4.0 * PI)
            * (pw.w_cau[m].conj() * nu * nu + pw.w_sup[m].conj() * rc);
        blk.add_c(U, m, Complex64::new(a4, 0.0), b4);
        l_tensors.push(lt);

        if grad {
            let d = kernels::split_derivs_raw(zg);
            let df1 = d.t1s + ln_alpha * d.t1l;
            let df2 = d.t2s + ln_alpha * d.t2l;
            let df3 = d.t3s + ln_alpha * d.t3l;
            let dsm = contract_d(
                &kernels::stress_tensor_deriv_from_fns(rv, alpha, f1, f2, f3, df1, df2, df3),
                nv,
            );
            let dlg = contract_d(
                &kernels::stress_tensor_deriv_from_fns(
                    rv, alpha, v.t1l, v.t2l, v.t3l, d.t1l, d.t2l, d.t3l,
                ),
                nv,
            );
            for i in 0..2 {
                for j in 0..2 {
                    for l in 0..2 {
                        // smooth gradient and the log-coefficient gradient
                        blk.add(
                            out_idx(j, l),
                            i,
                            m,
                            -dsm[i][j][l] * w_ds - dlg[i][j][l] * c_log,
                        );
                    }
                    // log gradient, second piece: -int f_j r_l/|r|^2 dS in
                    // complex form i * conj(w_cau) nu * f_j
                    let kap = Complex64::i() * pw.w_cau[m].conj() * nu * lt[i][j];
                    blk.add(out_idx(j, 0), i, m, kap.re);
                    blk.add(out_idx(j, 1), i, m, kap.im);
                }
            }
            // Cauchy-term gradient via Wirtinger derivatives of phi3
            let p3 = -Complex64::i() * alpha * alpha / (32.0 * PI);
            let wdt = node.w_dtau();
            let az = -wdt.conj();
            let bz = wdt - 2.0 * pw.w_cau[m].conj() * (node.z - z);
            let azb = wdt;
            let bzb = (pw.w_sup[m] * ((node.z - z).conj() * (node.z - z).conj())).conj();
            blk.add_c(D1, m, p3 * (az + azb), p3 * (bz + bzb));
            blk.add_c(D2, m, Complex64::i() * p3 * (az - azb), Complex64::i() * p3 * (bz - bzb));
            // Supersingular-term gradient, pointwise parts of phi4
            let p4 = Complex64::i() / (4.0 * PI);
            let a4z = -pw.w_sup[m];
            let b4z = -pw.w_sup[m].conj();
            let a4zb = pw.w_sup[m].conj();
            blk.add_c(D1, m, p4 * (a4z + a4zb), p4 * b4z);
            blk.add_c(D2, m, Complex64::i() * p4 * (a4z - a4zb), Complex64::i() * p4 * b4z);
        }
    }

    if grad {
        // phi4 dzbar: conj( sum_m w_sup_m (conj(tau_m) - conj(z)) omega'_m )
        // with omega' = D omega, plus the integration-by-parts bracket.
        let p4 = Complex64::i() / (4.0 * PI);
        let dmat = dmat.as_ref().unwrap();
        let mut e = vec![Complex64::new(0.0, 0.0); n];
        for q in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for m in 0..n {
                let dtau = work.nodes[m].dz;
                acc += pw.w_sup[m] * (work.nodes[m].z - z).conj() * (dmat[(m, q)] / dtau);
            }
            e[q] = acc;
        }
        // bracket term -[conj(omega) (tau - z)/(conj(tau) - conj(z))^2]_a^b
        let s_nodes: Vec<f64> = work.nodes.iter().map(|nd| nd.s).collect();
        let bary = numutil::barycentric_weights(&s_nodes);
        let row_a = numutil::interp_row(&s_nodes, &bary, -1.0);
        let row_b = numutil::interp_row(&s_nodes, &bary, 1.0);
        let ca = (work.z_start - z) / ((work.z_start - z).conj() * (work.z_start - z).conj());
        let cb = (work.z_end - z) / ((work.z_end - z).conj() * (work.z_end - z).conj());
        for q in 0..n {
            let bracket =
                if include_bracket { -cb * row_b[q] + ca * row_a[q] } else { Complex64::ZERO };
            let bzb = e[q].conj() + bracket;
            blk.add_c(D1, q, Complex64::new(0.0, 0.0), p4 * bzb);
            blk.add_c(
                D2,
                q,
                Complex64::new(0.0, 0.0),
                Complex64::i() * p4 * (-bzb),
            );
        }
    }
    Ok(blk)
}

/// On-boundary evaluation (value only): kernel-split weights for the log
/// term, direct quadrature for the smooth-on-boundary remainder, and the
/// diagonal limit t_i t_j kappa / (2 pi) when the target is a node.
pub fn onsurface_block(
    work: &WorkPanel,
    z: Complex64,
    s_target: f64,
    alpha: f64,
) -> Result<RawBlock, QuadratureError> {
    let n = work.nodes.len();
    let on_panel = (-1.0..=1.0).contains(&s_target);
    let branch = BranchInfo {
        darg: work.branch_darg(z, if on_panel { Some(s_target) } else { None }),
        on_path: on_panel,
    };
    let moms = complex_moments(work.z_start, work.z_end, z, n, branch);
    let pw = interpolatory_weights(work, &moms)?;
    let ln_alpha = alpha.ln();
    let mut blk = RawBlock::zeros(n);
    let diag_tol = 1e-13 * work.h;

    for (m, node) in work.nodes.iter().enumerate() {
        let rc = node.z - z;
        let r = rc.norm();
        let nu = node.nu();
        let w_ds = node.w_ds();
        if r < diag_tol {
            // diagonal limit: T_ijk n_k -> t_i t_j kappa / (2 pi)
            let tv = [nu.im, -nu.re];
            let kappa = work.curvature_at(node.s);
            for i in 0..2 {
                for j in 0..2 {
                    blk.add(j, i, m, tv[i] * tv[j] * kappa / (2.0 * PI) * w_ds);
                }
            }
            continue;
        }
        let rv = [rc.re, rc.im];
        let nv = [nu.re, nu.im];
        let zg = alpha * r;
        let v = kernels::split_values_raw(zg);
        let f1 = v.t1s + ln_alpha * v.t1l;
        let f2 = v.t2s + ln_alpha * v.t2l;
        let f3 = v.t3s + ln_alpha * v.t3l;
        let smooth = contract(&kernels::stress_tensor_from_fns(rv, alpha, f1, f2, f3), nv);
        let lt = contract(&kernels::stress_tensor_from_fns(rv, alpha, v.t1l, v.t2l, v.t3l), nv);
        let c_log = -(pw.w_log[m] * nu.conj()).im;
        let r2 = r * r;
        let rdotn = rv[0] * nv[0] + rv[1] * nv[1];
        // real-form Cauchy and supersingular terms (smooth along the curve)
        let cau = alpha * alpha / (8.0 * PI) * rdotn / r2;
        let sup = -1.0 / PI * rdotn / (r2 * r2);
        for i in 0..2 {
            for j in 0..2 {
                let direct = smooth[i][j] + (cau + sup) * rv[i] * rv[j];
                blk.add(j, i, m, direct * w_ds + lt[i][j] * c_log);
            }
        }
    }
    Ok(blk)
}
