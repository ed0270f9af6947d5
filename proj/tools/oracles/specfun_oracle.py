#!/usr/bin/env python3
"""One-off extended-precision reference values for the special-function tests.

Run with mpmath installed; paste the printed constants into the C++ tests.
Not a runtime dependency of the library.
"""

import mpmath as mp

mp.mp.dps = 40


def bessel_i_series(nu, x, terms=200):
    # plain ascending series, independent of mpmath's own besseli
    s = mp.mpf(0)
    for m in range(terms):
        s += (x / 2) ** (2 * m + nu) / (mp.factorial(m) * mp.gamma(m + 1 + nu))
    return s


def dawson_series(x, terms=200):
    # F(x) = sum (-1)^n 2^n x^(2n+1) / (2n+1)!!
    s = mp.mpf(0)
    t = mp.mpf(x)
    for n in range(terms):
        s += t
        t = t * (-2) * x * x / (2 * n + 3)
    return s


def j1_series(x, terms=30):
    # j1(x) = x * sum_m (-x^2/2)^m / (m! (2m+3)!!)
    s = mp.mpf(0)
    for m in range(terms):
        s += (-x * x / 2) ** m / (mp.factorial(m) * mp.fac2(2 * m + 3))
    return x * s


def gamma_product(x):
    # Gamma via Weierstrass-style shifted product plus reflection, as an
    # independent route from mpmath.gamma
    n = 60
    acc = mp.mpf(1)
    y = mp.mpf(x)
    while y < n:
        acc /= y
        y += 1
    # Stirling on the shifted argument
    return acc * mp.exp((y - mp.mpf(1) / 2) * mp.log(y) - y + mp.log(2 * mp.pi) / 2
                        + 1 / (12 * y) - 1 / (360 * y ** 3) + 1 / (1260 * y ** 5)
                        - 1 / (1680 * y ** 7))


def show(label, value, check=None):
    v = mp.mpf(value)
    line = f"{label:34s} = {mp.nstr(v, 22)}"
    if check is not None:
        line += f"   |diff vs mpmath| = {mp.nstr(abs(v - check), 3)}"
    print(line)


print("# gamma")
show("gamma(1/3)", gamma_product(mp.mpf(1) / 3), mp.gamma(mp.mpf(1) / 3))
show("gamma(1/6)", gamma_product(mp.mpf(1) / 6), mp.gamma(mp.mpf(1) / 6))
show("gamma(25.25)", gamma_product(mp.mpf("25.25")), mp.gamma(mp.mpf("25.25")))
show("gamma(-2.5)", mp.gamma(mp.mpf("-2.5")))
show("gamma(-9.5)", mp.gamma(mp.mpf("-9.5")))

print("# modified Bessel, ascending series oracle")
show("I(1/6, 2)", bessel_i_series(mp.mpf(1) / 6, mp.mpf(2)), mp.besseli(mp.mpf(1) / 6, 2))
show("I(-1/6, 2)", bessel_i_series(-mp.mpf(1) / 6, mp.mpf(2)), mp.besseli(-mp.mpf(1) / 6, 2))
show("I(1/2, 1)", bessel_i_series(mp.mpf(1) / 2, mp.mpf(1)), mp.sqrt(2 / (mp.pi * 1)) * mp.sinh(1))
show("I(1/3, 0.1)", bessel_i_series(mp.mpf(1) / 3, mp.mpf("0.1")), mp.besseli(mp.mpf(1) / 3, mp.mpf("0.1")))
show("I(5/4, 30)", bessel_i_series(mp.mpf(5) / 4, mp.mpf(30), 400), mp.besseli(mp.mpf(5) / 4, 30))

print("# Bessel K (mpmath; cross-checked via reflection of the series)")
for nu, x in [(mp.mpf(1) / 6, mp.mpf(2)), (mp.mpf(1) / 2, mp.mpf(1)),
              (mp.mpf(1) / 5, mp.mpf("0.3")), (mp.mpf(4) / 3, mp.mpf(10)),
              (mp.mpf(1) / 4, mp.mpf(45))]:
    refl = mp.pi / 2 * (bessel_i_series(-nu, x, 400) - bessel_i_series(nu, x, 400)) / mp.sin(mp.pi * nu)
    show(f"K({mp.nstr(nu,3)}, {mp.nstr(x,3)})", mp.besselk(nu, x), refl)

print("# Dawson / j1")
show("dawson(1)", dawson_series(mp.mpf(1)), mp.sqrt(mp.pi) / 2 * mp.exp(-1) * mp.erfi(1))
show("dawson(0.4)", dawson_series(mp.mpf("0.4")))
show("dawson(3.75)", mp.sqrt(mp.pi) / 2 * mp.exp(-mp.mpf("3.75") ** 2) * mp.erfi(mp.mpf("3.75")))
show("dawson(9)", mp.sqrt(mp.pi) / 2 * mp.exp(-81) * mp.erfi(9))
show("j1(0.05)", j1_series(mp.mpf("0.05")), mp.sqrt(mp.pi / (2 * mp.mpf("0.05"))) * mp.besselj(mp.mpf(3) / 2, mp.mpf("0.05")))
show("j1(pi)", j1_series(mp.pi))
show("erfcx(7.5)", mp.exp(mp.mpf("7.5") ** 2) * mp.erfc(mp.mpf("7.5")))

print("# power-law gamma sum rules, nu = 1/6 and 1/5 and 1/3")
for nu in [mp.mpf(1) / 6, mp.mpf(1) / 5, mp.mpf(1) / 3]:
    pre = nu ** (2 - 4 * nu)
    if nu < mp.mpf(1) / 4:
        s_even = pre * mp.gamma(2 * nu) * mp.gamma(nu) * mp.gamma(1 - 4 * nu) / (mp.gamma(1 - 3 * nu) * mp.gamma(1 - 2 * nu))
        s_odd = pre * mp.gamma(3 * nu) * mp.gamma(2 * nu) * mp.gamma(1 - 4 * nu) / (mp.gamma(1 - 2 * nu) * mp.gamma(1 - nu))
        show(f"S_even(nu={mp.nstr(nu,4)})", s_even)
        show(f"S_odd(nu={mp.nstr(nu,4)})", s_odd)
    s_alt = pre * mp.gamma(3 * nu) * mp.gamma(2 * nu) ** 2 / (mp.gamma(4 * nu) * mp.gamma(1 - nu))
    show(f"S_alt(nu={mp.nstr(nu,4)})", s_alt)

print("# Bessel product integrals (mpmath quadrature), nu = 1/6, 1/5")
for nu in [mp.mpf(1) / 6, mp.mpf(1) / 5]:
    for sgn, tag in [(-1, "-"), (+1, "+")]:
        f = lambda z: z ** (4 * nu - 1) * mp.besseli(sgn * nu, z) * mp.besselk(nu, z)
        val = mp.quad(f, [0, 1, 10, 40, mp.inf])
        show(f"int z^(4nu-1) I({tag}nu) K, nu={mp.nstr(nu,4)}", val)

print("# oscillator S2")
show("pi^2/32", mp.pi ** 2 / 32)
