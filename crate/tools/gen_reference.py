#!/usr/bin/env python3
"""Generate reference data for the kernel tests and the embedded Chebyshev
coefficient tables for the modified Bessel functions.

Outputs (all committed):
  crates/mstokes/tests/fixtures/bessel_reference.txt
      columns: z K0 K1 I0 I1 T1 T2 T3        (25 significant digits)
  crates/mstokes/tests/fixtures/qnpn_reference.txt
      columns: n z Qn Pn                     (alpha = 1, 25 digits)
  crates/mstokes/src/kernels/bessel_coeffs.rs
      Chebyshev coefficient arrays for K0, K1, I0, I1.

Run from the repository root:  python3 tools/gen_reference.py
"""

import mpmath as mp

mp.mp.dps = 50


def t1(z):
    return -(2 * z**2 * mp.besselk(0, z) + (z**2 + 4) * z * mp.besselk(1, z) - 4) / (
        2 * mp.pi * z**4
    )


def t2(z):
    return (4 * z**2 * mp.besselk(0, z) + (z**2 + 8) * z * mp.besselk(1, z) - 8) / (
        mp.pi * z**6
    )


def t3(z):
    return (z * mp.besselk(1, z) - 1) / (2 * mp.pi * z**2)


def qn(n, z):
    n = abs(n)
    if n == 0:
        return mp.besselk(0, z) + mp.log(z)
    return mp.besselk(n, z) - mp.mpf(2) ** (n - 1) * mp.factorial(n - 1) / z**n


def pn(n, z):
    n = abs(n)
    return mp.besseli(n, z) - (z / 2) ** n / mp.factorial(n)


def fmt(x):
    return mp.nstr(x, 25, strip_zeros=False)


def bessel_table(path):
    zs = []
    # log-spaced general coverage
    for i in range(60):
        zs.append(mp.mpf(10) ** (mp.mpf(-8) + mp.mpf(9.5) * i / 59))
    # crossover neighborhoods used by the dual-path tests
    for base in (mp.mpf("1.5"), mp.mpf(2)):
        for eps in (mp.mpf("1e-9"), mp.mpf("1e-6"), mp.mpf("1e-3")):
            zs.extend([base - eps, base + eps])
    zs.extend([mp.mpf(1), mp.mpf("1.5"), mp.mpf(2), mp.mpf(5), mp.mpf(10), mp.mpf(20), mp.mpf(30)])
    zs = sorted(set(zs))
    with open(path, "w") as f:
        f.write("# z K0 K1 I0 I1 T1 T2 T3 (25 significant digits)\n")
        for z in zs:
            row = [
                z,
                mp.besselk(0, z),
                mp.besselk(1, z),
                mp.besseli(0, z),
                mp.besseli(1, z),
                t1(z),
                t2(z),
                t3(z),
            ]
            f.write(" ".join(fmt(x) for x in row) + "\n")
    print(f"wrote {path}")


def qnpn_table(path):
    zs = [mp.mpf(10) ** e for e in range(-12, 1)] + [
        mp.mpf("0.5"),
        mp.mpf(1),
        mp.mpf(2),
        mp.mpf(3),
        mp.mpf(5),
        mp.mpf(10),
    ]
    with open(path, "w") as f:
        f.write("# n z Qn Pn (alpha=1, 25 significant digits)\n")
        for n in range(0, 6):
            for z in sorted(set(zs)):
                f.write(f"{n} {fmt(z)} {fmt(qn(n, z))} {fmt(pn(n, z))}\n")
    print(f"wrote {path}")


def cheb_coeffs(f, n):
    """Chebyshev coefficients c_0..c_{n-1} of f on [-1,1]:
    f(u) ~ c_0/2 + sum_{k>=1} c_k T_k(u)."""
    pts = [mp.cos(mp.pi * (j + mp.mpf("0.5")) / n) for j in range(n)]
    vals = [f(u) for u in pts]
    out = []
    for k in range(n):
        s = mp.mpf(0)
        for j in range(n):
            s += vals[j] * mp.cos(mp.pi * k * (j + mp.mpf("0.5")) / n)
        out.append(2 * s / n)
    return out


def truncate(coeffs, rel=mp.mpf("1e-19")):
    scale = max(abs(c) for c in coeffs)
    keep = len(coeffs)
    while keep > 2 and abs(coeffs[keep - 1]) < rel * scale:
        keep -= 1
    return coeffs[:keep]


def rust_array(name, coeffs, doc):
    lines = [f"/// {doc}", f"pub(super) const {name}: [f64; {len(coeffs)}] = ["]
    for c in coeffs:
        lines.append(f"    {mp.nstr(c, 22)},")
    lines.append("];")
    return "\n".join(lines)


def gen_coeffs(path):
    tiny = mp.mpf("1e-30")

    # I0 on [0,8]: I0(x) = exp(x) * cheb(u), u = x/4 - 1
    def f_i0_small(u):
        x = 4 * (u + 1)
        if x < tiny:
            x = tiny
        return mp.besseli(0, x) * mp.exp(-x)

    # I0 on [8,inf): I0(x) = exp(x)/sqrt(x) * cheb(u), u = 16/x - 1
    def f_i0_large(u):
        x = 16 / (u + 1) if u > -1 + tiny else mp.mpf("1e40")
        return mp.besseli(0, x) * mp.exp(-x) * mp.sqrt(x)

    def f_i1_small(u):
        x = 4 * (u + 1)
        if x < tiny:
            return mp.mpf("0.5")
        return mp.besseli(1, x) * mp.exp(-x) / x

    def f_i1_large(u):
        x = 16 / (u + 1) if u > -1 + tiny else mp.mpf("1e40")
        return mp.besseli(1, x) * mp.exp(-x) * mp.sqrt(x)

    # K0 on (0,2]: K0(x) + log(x/2) I0(x) = cheb(u), u = x^2/2 - 1
    def f_k0_small(u):
        x = mp.sqrt(2 * (u + 1)) if u > -1 + tiny else tiny
        return mp.besselk(0, x) + mp.log(x / 2) * mp.besseli(0, x)

    # K0 on [2,inf): K0(x) = exp(-x)/sqrt(x) * cheb(u), u = 4/x - 1
    def f_k0_large(u):
        x = 4 / (u + 1) if u > -1 + tiny else mp.mpf("1e40")
        return mp.besselk(0, x) * mp.exp(x) * mp.sqrt(x)

    # K1 on (0,2]: x*K1(x) - 1 - x*log(x/2)*I1(x) = cheb(u), u = x^2/2 - 1
    def f_k1_small(u):
        x = mp.sqrt(2 * (u + 1)) if u > -1 + tiny else tiny
        return x * mp.besselk(1, x) - 1 - x * mp.log(x / 2) * mp.besseli(1, x)

    def f_k1_large(u):
        x = 4 / (u + 1) if u > -1 + tiny else mp.mpf("1e40")
        return mp.besselk(1, x) * mp.exp(x) * mp.sqrt(x)

    specs = [
        ("I0_SMALL", f_i0_small, "exp(-x) I0(x) on [0,8], u = x/4 - 1"),
        ("I0_LARGE", f_i0_large, "exp(-x) sqrt(x) I0(x) on [8,inf), u = 16/x - 1"),
        ("I1_SMALL", f_i1_small, "exp(-x) I1(x)/x on [0,8], u = x/4 - 1"),
        ("I1_LARGE", f_i1_large, "exp(-x) sqrt(x) I1(x) on [8,inf), u = 16/x - 1"),
        ("K0_SMALL", f_k0_small, "K0(x) + log(x/2) I0(x) on (0,2], u = x^2/2 - 1"),
        ("K0_LARGE", f_k0_large, "exp(x) sqrt(x) K0(x) on [2,inf), u = 4/x - 1"),
        ("K1_SMALL", f_k1_small, "x K1(x) - 1 - x log(x/2) I1(x) on (0,2], u = x^2/2 - 1"),
        ("K1_LARGE", f_k1_large, "exp(x) sqrt(x) K1(x) on [2,inf), u = 4/x - 1"),
    ]
    blocks = [
        "// Chebyshev coefficient tables generated by tools/gen_reference.py.",
        "// Convention: f(u) = c[0]/2 + sum_{k>=1} c[k] T_k(u), u in [-1,1].",
        "",
    ]
    for name, f, doc in specs:
        c = truncate(cheb_coeffs(f, 56))
        print(f"{name}: {len(c)} coefficients")
        blocks.append(rust_array(name, c, doc))
        blocks.append("")
    with open(path, "w") as fh:
        fh.write("\n".join(blocks))
    print(f"wrote {path}")


if __name__ == "__main__":
    import os

    os.makedirs("crates/mstokes/tests/fixtures", exist_ok=True)
    os.makedirs("crates/mstokes/src/kernels", exist_ok=True)
    bessel_table("crates/mstokes/tests/fixtures/bessel_reference.txt")
    qnpn_table("crates/mstokes/tests/fixtures/qnpn_reference.txt")
    gen_coeffs("crates/mstokes/src/kernels/bessel_coeffs.rs")
