//! Solver library for the two-dimensional modified Stokes equations
//! (alpha^2 - Laplace) u + Re grad p = F, div u = 0, u = f on the boundary,
//! the building block of a semi-implicit incompressible Navier-Stokes
//! time stepper.
//!
//! The solution is composed of a particular part, computed with a Fourier
//! method on a periodic box after smoothly extending the right-hand side from
//! the physical domain, and a homogeneous correction represented by a double
//! layer potential whose density solves a second-kind boundary integral
//! equation. Singular and nearly singular layer-potential evaluations use
//! kernel-split quadrature with complex interpolatory weights.

pub mod kernels;

pub use kernels::{KernelError, KernelParams};

pub mod geometry;
pub mod grid;
pub mod numutil;
pub mod quadrature;
