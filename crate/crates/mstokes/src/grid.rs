//! The uniform N x N grid over the periodic box B = [0, 2*pi]^2.

use serde::{Deserialize, Serialize};

pub const BOX_SIDE: f64 = 2.0 * std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniformGrid {
    /// Points per side; must be even for clean Nyquist handling.
    pub n: usize,
}

impl UniformGrid {
    pub fn new(n: usize) -> Self {
        assert!(n >= 4 && n % 2 == 0, "grid side must be even and >= 4");
        Self { n }
    }

    #[inline]
    pub fn spacing(&self) -> f64 {
        BOX_SIDE / self.n as f64
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n * self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Row-major index: rows are y, columns are x.
    #[inline]
    pub fn idx(&self, ix: usize, iy: usize) -> usize {
        iy * self.n + ix
    }

    #[inline]
    pub fn point(&self, ix: usize, iy: usize) -> [f64; 2] {
        let h = self.spacing();
        [ix as f64 * h, iy as f64 * h]
    }

    #[inline]
    pub fn point_of(&self, idx: usize) -> [f64; 2] {
        self.point(idx % self.n, idx / self.n)
    }

    /// Signed Fourier wavenumber for index i: 0..n/2-1 -> i, n/2.. -> i - n.
    #[inline]
    pub fn wavenumber(&self, i: usize) -> i64 {
        if i <= self.n / 2 - 1 {
            i as i64
        } else {
            i as i64 - self.n as i64
        }
    }
}

/// Boolean interior mask over a uniform grid.
#[derive(Debug, Clone)]
pub struct InteriorMask {
    pub nx: usize,
    pub ny: usize,
    pub inside: Vec<bool>,
    pub n_interior: usize,
}

impl InteriorMask {
    pub fn new(nx: usize, ny: usize, inside: Vec<bool>) -> Self {
        assert_eq!(inside.len(), nx * ny);
        let n_interior = inside.iter().filter(|&&b| b).count();
        Self { nx, ny, inside, n_interior }
    }

    #[inline]
    pub fn is_inside(&self, idx: usize) -> bool {
        self.inside[idx]
    }

    /// Indices of interior nodes, row-major order.
    pub fn interior_indices(&self) -> Vec<usize> {
        (0..self.inside.len()).filter(|&i| self.inside[i]).collect()
    }
}
