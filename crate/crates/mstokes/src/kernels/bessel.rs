//! Modified Bessel functions K0, K1, I0, I1 in double precision, plus the
//! integer-order sequences K_n and I_n needed by the expansion machinery.
//!
//! The four base functions are evaluated from Chebyshev fits of smooth,
//! exponentially-rescaled factors (see `bessel_coeffs.rs`, generated at
//! 50-digit precision). Accuracy is a few ulp over the full range, which the
//! fixture test pins down against a 25-digit reference table.

use super::bessel_coeffs::*;

/// Clenshaw evaluation of f(u) = c[0]/2 + sum_{k>=1} c[k] T_k(u).
fn clenshaw(u: f64, c: &[f64]) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &ck in c.iter().skip(1).rev() {
        let b0 = ck + 2.0 * u * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    0.5 * c[0] + u * b1 - b2
}

/// Modified Bessel function of the first kind, I0(x).
pub fn bessel_i0(x: f64) -> f64 {
    let ax = x.abs();
    if ax <= 8.0 {
        ax.exp() * clenshaw(0.25 * ax - 1.0, &I0_SMALL)
    } else {
        ax.exp() * clenshaw(16.0 / ax - 1.0, &I0_LARGE) / ax.sqrt()
    }
}

/// Modified Bessel function of the first kind, I1(x).
pub fn bessel_i1(x: f64) -> f64 {
    let ax = x.abs();
    let v = if ax <= 8.0 {
        ax.exp() * clenshaw(0.25 * ax - 1.0, &I1_SMALL) * ax
    } else {
        ax.exp() * clenshaw(16.0 / ax - 1.0, &I1_LARGE) / ax.sqrt()
    };
    v * x.signum()
}

/// Modified Bessel function of the second kind, K0(x). Requires x > 0.
pub fn bessel_k0(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x <= 2.0 {
        clenshaw(0.5 * x * x - 1.0, &K0_SMALL) - (0.5 * x).ln() * bessel_i0(x)
    } else {
        (-x).exp() * clenshaw(4.0 / x - 1.0, &K0_LARGE) / x.sqrt()
    }
}

/// Modified Bessel function of the second kind, K1(x). Requires x > 0.
pub fn bessel_k1(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x <= 2.0 {
        (1.0 + clenshaw(0.5 * x * x - 1.0, &K1_SMALL)) / x + (0.5 * x).ln() * bessel_i1(x)
    } else {
        (-x).exp() * clenshaw(4.0 / x - 1.0, &K1_LARGE) / x.sqrt()
    }
}

/// K_n(x) for n = 0..=nmax via the (stable) upward recurrence.
pub fn bessel_kn_seq(nmax: usize, x: f64) -> Vec<f64> {
    debug_assert!(x > 0.0);
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(bessel_k0(x));
    if nmax >= 1 {
        out.push(bessel_k1(x));
    }
    for n in 1..nmax {
        let next = out[n - 1] + (2.0 * n as f64 / x) * out[n];
        out.push(if next.is_finite() { next } else { f64::MAX });
    }
    out
}

/// I_n(x) for n = 0..=nmax via Miller's downward recurrence, normalized
/// against I0. The upward recurrence is unstable for I_n.
pub fn bessel_in_seq(nmax: usize, x: f64) -> Vec<f64> {
    if x == 0.0 {
        let mut out = vec![0.0; nmax + 1];
        out[0] = 1.0;
        return out;
    }
    let ax = x.abs();
    let start = nmax + 16 + (2.0 * ax.sqrt()) as usize + (ax as usize);
    let mut ip1 = 0.0_f64;
    let mut i = 1e-300_f64;
    let mut out = vec![0.0; nmax + 1];
    for n in (0..start).rev() {
        let im1 = ip1 + (2.0 * (n + 1) as f64 / ax) * i;
        ip1 = i;
        i = im1;
        if n <= nmax {
            out[n] = i;
        }
        if i > 1e270 {
            let s = 1e-270;
            i *= s;
            ip1 *= s;
            for v in out.iter_mut() {
                *v *= s;
            }
        }
    }
    let scale = bessel_i0(ax) / out[0];
    let sign = x.signum();
    for (n, v) in out.iter_mut().enumerate() {
        *v *= scale;
        // I_n(-x) = (-1)^n I_n(x)
        if n % 2 == 1 {
            *v *= sign;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kn_seq_matches_base() {
        let x = 3.7;
        let k = bessel_kn_seq(5, x);
        assert!((k[0] - bessel_k0(x)).abs() < 1e-15);
        assert!((k[1] - bessel_k1(x)).abs() < 1e-15);
        // K2 from the recurrence identity directly
        let k2 = bessel_k0(x) + 2.0 / x * bessel_k1(x);
        assert!((k[2] - k2).abs() / k2.abs() < 1e-14);
    }

    #[test]
    fn in_seq_matches_base() {
        for &x in &[0.3, 2.0, 9.5, 40.0] {
            let i = bessel_in_seq(6, x);
            assert!((i[0] - bessel_i0(x)).abs() / bessel_i0(x) < 1e-13);
            assert!((i[1] - bessel_i1(x)).abs() / bessel_i1(x).abs() < 1e-13);
        }
    }

    #[test]
    fn wronskian_identity() {
        // I0(x) K1(x) + I1(x) K0(x) = 1/x
        for &x in &[0.01, 0.5, 1.9, 2.1, 7.0, 25.0, 120.0] {
            let w = bessel_i0(x) * bessel_k1(x) + bessel_i1(x) * bessel_k0(x);
            assert!(
                (w - 1.0 / x).abs() * x < 1e-13,
                "wronskian off at x={x}: {w} vs {}",
                1.0 / x
            );
        }
    }
}
