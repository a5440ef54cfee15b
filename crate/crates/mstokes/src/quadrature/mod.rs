//! Singular and nearly singular quadrature for the double layer potential:
//! scheme selection, panel upsampling and merging, kernel-split weight
//! construction, and recursive subdivision enforcing alpha * h <= 4.5 on
//! every subpanel that receives kernel-split treatment.

pub mod moments;
mod table;
#[doc(hidden)]
pub mod weights;
mod workpanel;

pub use table::{build_correction_table, CorrectionEntry, CorrectionTable};
pub use weights::{direct_block, ks_block, onsurface_block, RawBlock, N_OUTPUTS};
pub use workpanel::{WNode, WorkPanel};

use crate::geometry::{bernstein_radius, preimage_on, GeometryError, PanelizedBoundary};
use crate::numutil;
use num_complex::Complex64;
use thiserror::Error;

/// Largest admissible alpha * h for kernel-split treatment of a panel.
pub const ALPHA_H_MAX: f64 = 4.5;
/// Bernstein radius above which plain 16-point Gauss-Legendre is accurate.
pub const RHO_DIRECT: f64 = 3.5;
/// On-boundary treatment band in the neighbor panel's parameter.
pub const ONSURFACE_BAND: f64 = 1.4;
/// Subdivision depth cap.
const MAX_DEPTH: u32 = 64;

#[derive(Debug, Error)]
pub enum QuadratureError {
    #[error("preimage solve failed: {0}")]
    Preimage(#[from] GeometryError),
    #[error("panel subdivision exceeded {MAX_DEPTH} levels (degenerate geometry?)")]
    SubdivisionDepthExceeded,
    #[error("transposed Vandermonde solve ill-conditioned (residual {0:.2e})")]
    IllConditionedVandermonde(f64),
    #[error("panels are not adjacent and cannot be merged")]
    NonAdjacentMerge,
}

/// Evaluation scheme for one (target, panel) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeChoice {
    Direct16,
    Upsampled32,
    KernelSplit32,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeFlags {
    pub choice: SchemeChoice,
    /// Target closer than 0.05 min(h1, h2) to a shared panel edge.
    pub merge_with_neighbor: bool,
    /// Target closer than 0.05 h to a source node: the direct interaction
    /// with that node is skipped and folded into the correction instead.
    pub skip_direct_in_fmm: bool,
}

/// Scheme selection thresholds of the near-evaluation cascade.
pub fn select_scheme(rho: f64, dist_to_edge: f64, min_h: f64, dist_to_node: f64, h: f64) -> SchemeFlags {
    let choice = if rho >= RHO_DIRECT {
        SchemeChoice::Direct16
    } else if rho >= RHO_DIRECT.sqrt() {
        SchemeChoice::Upsampled32
    } else {
        SchemeChoice::KernelSplit32
    };
    SchemeFlags {
        choice,
        merge_with_neighbor: dist_to_edge < 0.05 * min_h,
        skip_direct_in_fmm: dist_to_node < 0.05 * h,
    }
}

/// Target of a weight construction.
#[derive(Debug, Clone, Copy)]
pub struct Target {
    pub z: Complex64,
    /// Global curve parameter when the target lies on the boundary curve
    /// (expressed in the frame of the base panel's parameter interval).
    pub on_curve: Option<f64>,
}

/// A leaf of the subdivision tree, for diagnostics and tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LeafRule {
    Direct,
    KernelSplit,
    OnSurface,
}

#[derive(Debug, Clone, Copy)]
pub struct Leaf {
    pub t0: f64,
    pub t1: f64,
    pub h: f64,
    pub rule: LeafRule,
}

fn split_fraction(local: f64) -> f64 {
    let frac = ((local + 1.0) / 2.0).clamp(0.0, 1.0);
    if (0.4..=0.6).contains(&frac) {
        if frac < 0.5 {
            0.65
        } else {
            0.35
        }
    } else {
        0.5
    }
}

#[allow(clippy::too_many_arguments)]
fn process(
    work: &WorkPanel,
    target: &Target,
    alpha: f64,
    grad: bool,
    depth: u32,
    acc: &mut [f64],
    leaves: &mut Option<&mut Vec<Leaf>>,
) -> Result<(), QuadratureError> {
    enum Decision {
        Leaf(LeafRule, f64),
        Split(f64),
    }
    let ks_ok = alpha * work.h <= ALPHA_H_MAX * (1.0 + 1e-12);
    let decision = match target.on_curve {
        Some(tg) if (work.local_of(tg)).abs() <= 1.8 => {
            let local = work.local_of(tg);
            if ks_ok {
                Decision::Leaf(LeafRule::OnSurface, local)
            } else {
                Decision::Split(local)
            }
        }
        _ => {
            // nearest node as Newton start
            let mut best = (f64::INFINITY, 0.0);
            for nd in &work.nodes {
                let d = (nd.z - target.z).norm_sqr();
                if d < best.0 {
                    best = (d, nd.s);
                }
            }
            match preimage_on(work, target.z, best.1) {
                Ok(s_star) => {
                    let rho = bernstein_radius(s_star);
                    let thr =
                        if work.nodes.len() == 16 { RHO_DIRECT } else { RHO_DIRECT.sqrt() };
                    if rho >= thr {
                        Decision::Leaf(LeafRule::Direct, s_star.re)
                    } else if ks_ok {
                        Decision::Leaf(LeafRule::KernelSplit, s_star.re)
                    } else {
                        Decision::Split(s_star.re.clamp(-1.0, 1.0))
                    }
                }
                // A failed preimage for a clearly well-separated subpanel is
                // harmless: direct quadrature applies there regardless.
                Err(_) if best.0.sqrt() > 3.0 * work.h => Decision::Leaf(LeafRule::Direct, 0.0),
                Err(e) => return Err(e.into()),
            }
        }
    };
    match decision {
        Decision::Leaf(rule, local) => {
            let blk = match rule {
                LeafRule::Direct => direct_block(work, target.z, alpha, grad),
                LeafRule::KernelSplit => ks_block(work, target.z, alpha, grad)?,
                LeafRule::OnSurface => onsurface_block(work, target.z, local, alpha)?,
            };
            let composed = blk.compose(work);
            for (a, v) in acc.iter_mut().zip(&composed) {
                *a += v;
            }
            if let Some(list) = leaves.as_deref_mut() {
                list.push(Leaf { t0: work.t0, t1: work.t1, h: work.h, rule });
            }
            Ok(())
        }
        Decision::Split(local) => {
            if depth >= MAX_DEPTH {
                return Err(QuadratureError::SubdivisionDepthExceeded);
            }
            let cut = -1.0 + 2.0 * split_fraction(local);
            let left = work.subpanel(-1.0, cut);
            let right = work.subpanel(cut, 1.0);
            process(&left, target, alpha, grad, depth + 1, acc, leaves)?;
            process(&right, target, alpha, grad, depth + 1, acc, leaves)
        }
    }
}

/// Weights (over original parent nodes) of one panel's total contribution to
/// the potential (and gradient) at a target point.
pub struct PairWeights {
    pub parents: Vec<usize>,
    /// Layout [output(6)][component(2)][16 * parents.len()].
    pub w: Vec<f64>,
}

impl PairWeights {
    #[inline]
    pub fn coeff(&self, out: usize, comp: usize, col: usize) -> f64 {
        let cols = 16 * self.parents.len();
        self.w[(out * 2 + comp) * cols + col]
    }
}

/// Corrected near-evaluation weights for a single panel or a merged pair
/// (adjacent panels, in curve order). The target must be off the boundary or
/// on a distant part of it.
pub fn near_corrected(
    b: &PanelizedBoundary,
    panel_ids: &[usize],
    target: [f64; 2],
    alpha: f64,
    grad: bool,
) -> Result<PairWeights, QuadratureError> {
    let work = match panel_ids {
        [single] => WorkPanel::upsampled32(b, *single),
        [first, second] => {
            let nb = b.neighbors(*first);
            if nb[1] != *second {
                return Err(QuadratureError::NonAdjacentMerge);
            }
            WorkPanel::merged32(b, *first, *second)
        }
        _ => panic!("near_corrected expects 1 or 2 panels"),
    };
    let tgt = Target { z: Complex64::new(target[0], target[1]), on_curve: None };
    let cols = work.interp.ncols();
    let mut acc = vec![0.0; N_OUTPUTS * 2 * cols];
    let mut none: Option<&mut Vec<Leaf>> = None;
    process(&work, &tgt, alpha, grad, 0, &mut acc, &mut none)?;
    Ok(PairWeights { parents: work.parents.clone(), w: acc })
}

/// Corrected on-boundary weights (value only) for the contribution of
/// `panel_id` to the potential at boundary node `target_node`. The node must
/// lie on the panel itself or on an adjacent panel with preimage within
/// [-1.4, 1.4] of the standard interval.
pub fn onsurface_corrected(
    b: &PanelizedBoundary,
    panel_id: usize,
    target_node: usize,
    alpha: f64,
) -> Result<PairWeights, QuadratureError> {
    let work = WorkPanel::base16(b, panel_id);
    let mut tg = b.params[target_node];
    let two_pi = 2.0 * std::f64::consts::PI;
    // express the node parameter in the frame of this panel's interval
    if tg < work.t0 - std::f64::consts::PI {
        tg += two_pi;
    } else if tg > work.t1 + std::f64::consts::PI {
        tg -= two_pi;
    }
    let tgt = Target { z: b.node_z(target_node), on_curve: Some(tg) };
    let mut acc = vec![0.0; N_OUTPUTS * 2 * 16];
    let mut none: Option<&mut Vec<Leaf>> = None;
    process(&work, &tgt, alpha, false, 0, &mut acc, &mut none)?;
    Ok(PairWeights { parents: vec![panel_id], w: acc })
}

/// Subdivision plan for a (panel, target) pair under the alpha*h criterion,
/// exposed for inspection in tests.
pub fn subdivide_plan(
    b: &PanelizedBoundary,
    panel_id: usize,
    target: [f64; 2],
    on_curve_node: Option<usize>,
    alpha: f64,
) -> Result<Vec<Leaf>, QuadratureError> {
    let work = match on_curve_node {
        Some(_) => WorkPanel::base16(b, panel_id),
        None => WorkPanel::upsampled32(b, panel_id),
    };
    let on_curve = on_curve_node.map(|m| {
        let mut tg = b.params[m];
        if tg < work.t0 - std::f64::consts::PI {
            tg += 2.0 * std::f64::consts::PI;
        } else if tg > work.t1 + std::f64::consts::PI {
            tg -= 2.0 * std::f64::consts::PI;
        }
        tg
    });
    let tgt = Target { z: Complex64::new(target[0], target[1]), on_curve };
    let cols = work.interp.ncols();
    let mut acc = vec![0.0; N_OUTPUTS * 2 * cols];
    let mut leaves = Vec::new();
    let mut rec = Some(&mut leaves);
    process(&work, &tgt, alpha, false, 0, &mut acc, &mut rec)?;
    Ok(leaves)
}

/// Barycentric upsampling of per-node data from the 16-point to the 32-point
/// Gauss-Legendre grid on the same panel.
pub fn upsample_16_to_32(data: &[f64]) -> Vec<f64> {
    assert_eq!(data.len(), 16);
    let m = numutil::interp_matrix(&numutil::gl16().0, &numutil::gl32().0);
    (0..32).map(|i| (0..16).map(|j| m[(i, j)] * data[j]).sum()).collect()
}

#[cfg(test)]
mod tests;
