//! Parametrized closed curves and their complex-analytic maps.
//!
//! Curves are 2*pi-periodic maps t -> g(t) in R^2, also exposed as maps
//! C -> C (position as a complex number) so that panel preimages can be
//! found for complexified arguments.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Curve {
    Circle {
        center: [f64; 2],
        radius: f64,
    },
    /// g(t) = R (1 + A cos 5t) (cos t, sin t), rotated and translated.
    Starfish {
        r: f64,
        a: f64,
        rotation: f64,
        translation: [f64; 2],
    },
    /// Rounded box (W cos t, H sin t) / ((cos t)^p + (sin t)^p)^(1/p); p even.
    SuperellipseBox {
        w: f64,
        h: f64,
        p: u32,
        center: [f64; 2],
    },
    /// Orientation-reversed curve, used for obstacle boundaries so that the
    /// left-side normal points into the fluid.
    Reversed(Box<Curve>),
}

impl Curve {
    pub fn circle(center: [f64; 2], radius: f64) -> Self {
        Curve::Circle { center, radius }
    }

    pub fn starfish(r: f64, a: f64, rotation: f64, translation: [f64; 2]) -> Self {
        Curve::Starfish { r, a, rotation, translation }
    }

    pub fn superellipse_box(w: f64, h: f64, p: u32, center: [f64; 2]) -> Self {
        assert!(p >= 2 && p % 2 == 0, "superellipse exponent must be even");
        Curve::SuperellipseBox { w, h, p, center }
    }

    pub fn reversed(inner: Curve) -> Self {
        Curve::Reversed(Box::new(inner))
    }

    /// Complex position map, valid for complex parameter values.
    pub fn position_c(&self, t: Complex64) -> Complex64 {
        match self {
            Curve::Circle { center, radius } => {
                Complex64::new(center[0], center[1]) + radius * (Complex64::i() * t).exp()
            }
            Curve::Starfish { r, a, rotation, translation } => {
                let rot = Complex64::from_polar(1.0, *rotation);
                let radial = r * (1.0 + a * (5.0 * t).cos());
                rot * radial * (Complex64::i() * t).exp()
                    + Complex64::new(translation[0], translation[1])
            }
            Curve::SuperellipseBox { w, h, p, center } => {
                let c = t.cos();
                let s = t.sin();
                let d = (c.powu(*p) + s.powu(*p)).powf(1.0 / *p as f64);
                (Complex64::new(*w, 0.0) * c + Complex64::new(0.0, *h) * s) / d
                    + Complex64::new(center[0], center[1])
            }
            Curve::Reversed(inner) => {
                inner.position_c(Complex64::new(2.0 * std::f64::consts::PI, 0.0) - t)
            }
        }
    }

    /// Complex derivative map dg/dt.
    pub fn derivative_c(&self, t: Complex64) -> Complex64 {
        match self {
            Curve::Circle { radius, .. } => {
                Complex64::i() * radius * (Complex64::i() * t).exp()
            }
            Curve::Starfish { r, a, rotation, .. } => {
                let rot = Complex64::from_polar(1.0, *rotation);
                let e = (Complex64::i() * t).exp();
                let radial = 1.0 + a * (5.0 * t).cos();
                let dradial = -5.0 * a * (5.0 * t).sin();
                rot * *r * (dradial * e + radial * Complex64::i() * e)
            }
            Curve::SuperellipseBox { w, h, p, .. } => {
                let pf = *p as f64;
                let c = t.cos();
                let s = t.sin();
                let base = c.powu(*p) + s.powu(*p);
                let d = base.powf(1.0 / pf);
                let e = s.powu(p - 1) * c - c.powu(p - 1) * s;
                let dd = base.powf(1.0 / pf - 1.0) * e;
                let n = Complex64::new(*w, 0.0) * c + Complex64::new(0.0, *h) * s;
                let dn = -Complex64::new(*w, 0.0) * s + Complex64::new(0.0, *h) * c;
                dn / d - n * dd / (d * d)
            }
            Curve::Reversed(inner) => {
                -inner.derivative_c(Complex64::new(2.0 * std::f64::consts::PI, 0.0) - t)
            }
        }
    }

    /// Complex second derivative map d2g/dt2.
    pub fn second_derivative_c(&self, t: Complex64) -> Complex64 {
        match self {
            Curve::Circle { radius, .. } => -radius * (Complex64::i() * t).exp(),
            Curve::Starfish { r, a, rotation, .. } => {
                let rot = Complex64::from_polar(1.0, *rotation);
                let e = (Complex64::i() * t).exp();
                let radial = 1.0 + a * (5.0 * t).cos();
                let d1 = -5.0 * a * (5.0 * t).sin();
                let d2 = -25.0 * a * (5.0 * t).cos();
                rot * *r
                    * (d2 * e + 2.0 * d1 * Complex64::i() * e - radial * e)
            }
            Curve::SuperellipseBox { w, h, p, .. } => {
                let pf = *p as f64;
                let c = t.cos();
                let s = t.sin();
                let base = c.powu(*p) + s.powu(*p);
                let d = base.powf(1.0 / pf);
                let e = s.powu(p - 1) * c - c.powu(p - 1) * s;
                let de = (pf - 1.0) * s.powu(p - 2) * c * c - s.powu(*p)
                    + (pf - 1.0) * c.powu(p - 2) * s * s
                    - c.powu(*p);
                let dd = base.powf(1.0 / pf - 1.0) * e;
                let ddd =
                    (1.0 - pf) * base.powf(1.0 / pf - 2.0) * e * e + base.powf(1.0 / pf - 1.0) * de;
                let n = Complex64::new(*w, 0.0) * c + Complex64::new(0.0, *h) * s;
                let dn = -Complex64::new(*w, 0.0) * s + Complex64::new(0.0, *h) * c;
                let ddn = -n;
                ddn / d - 2.0 * dn * dd / (d * d) - n * ddd / (d * d)
                    + 2.0 * n * dd * dd / (d * d * d)
            }
            Curve::Reversed(inner) => {
                inner.second_derivative_c(Complex64::new(2.0 * std::f64::consts::PI, 0.0) - t)
            }
        }
    }

    pub fn position(&self, t: f64) -> [f64; 2] {
        let z = self.position_c(Complex64::new(t, 0.0));
        [z.re, z.im]
    }

    pub fn derivative(&self, t: f64) -> [f64; 2] {
        let z = self.derivative_c(Complex64::new(t, 0.0));
        [z.re, z.im]
    }

    pub fn second_derivative(&self, t: f64) -> [f64; 2] {
        let z = self.second_derivative_c(Complex64::new(t, 0.0));
        [z.re, z.im]
    }

    /// |dg/dt| at real parameter t.
    pub fn speed(&self, t: f64) -> f64 {
        self.derivative_c(Complex64::new(t, 0.0)).norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_derivatives(curve: &Curve) {
        let h = 1e-5;
        for i in 0..7 {
            let t = 0.3 + i as f64 * 0.9;
            let fd = (curve.position_c(Complex64::new(t + h, 0.0))
                - curve.position_c(Complex64::new(t - h, 0.0)))
                / (2.0 * h);
            let an = curve.derivative_c(Complex64::new(t, 0.0));
            assert!((fd - an).norm() < 1e-8 * (1.0 + an.norm()), "first deriv at {t}");
            let fd2 = (curve.derivative_c(Complex64::new(t + h, 0.0))
                - curve.derivative_c(Complex64::new(t - h, 0.0)))
                / (2.0 * h);
            let an2 = curve.second_derivative_c(Complex64::new(t, 0.0));
            assert!((fd2 - an2).norm() < 1e-7 * (1.0 + an2.norm()), "second deriv at {t}");
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        check_derivatives(&Curve::circle([1.0, -0.5], 2.0));
        check_derivatives(&Curve::starfish(1.0, 0.3, 0.4, [3.0, 3.1]));
        check_derivatives(&Curve::superellipse_box(2.5, 1.5, 10, [3.14, 3.14]));
        check_derivatives(&Curve::reversed(Curve::starfish(0.5, 0.2, 0.0, [3.0, 3.0])));
    }

    #[test]
    fn closed_curves() {
        for curve in [
            Curve::circle([0.0, 0.0], 1.0),
            Curve::starfish(1.0, 0.3, 0.0, [0.0, 0.0]),
            Curve::superellipse_box(2.0, 1.0, 10, [0.0, 0.0]),
        ] {
            let a = curve.position(0.0);
            let b = curve.position(2.0 * std::f64::consts::PI - 1e-12);
            assert!((a[0] - b[0]).abs() < 1e-10 && (a[1] - b[1]).abs() < 1e-10);
        }
    }
}
