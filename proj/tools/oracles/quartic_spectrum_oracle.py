#!/usr/bin/env python3
"""Numerov shooting oracle for U = x^4 (and the x^2 - 2 partner check).

h = 1e-4, x_max = 6, node-count bisection on the far-end value. Used once to
pin eigenvalues quoted in the C++ tests; not a runtime dependency.
"""

import numpy as np


def numerov_far_value(U, E, x_max, h, even):
    n = int(round(x_max / h)) + 1
    x = np.linspace(0.0, x_max, n)
    t = h * h * (U(x) - E) / 12.0
    psi = np.empty(n)
    if even:
        psi[0] = 1.0
        psi[1] = (1.0 + 5.0 * t[0]) / (1.0 - t[1])
    else:
        psi[0] = 0.0
        psi[1] = h * (1.0 + h * h * (U(h) - E) / 6.0)
    nodes = 0
    for i in range(1, n - 1):
        psi[i + 1] = ((2.0 + 10.0 * t[i]) * psi[i] - (1.0 - t[i - 1]) * psi[i - 1]) / (1.0 - t[i + 1])
        if psi[i + 1] == 0.0 or psi[i + 1] * psi[i] < 0.0:
            nodes += 1
        if abs(psi[i + 1]) > 1e280:
            psi[i] *= 1e-280
            psi[i + 1] *= 1e-280
    return nodes, psi[-1]


def eigenvalue(U, k, x_max, h, even, e_lo, e_hi):
    # bisect on node count: E_k is where the count passes k
    for _ in range(200):
        mid = 0.5 * (e_lo + e_hi)
        nodes, _ = numerov_far_value(U, mid, x_max, h, even)
        if nodes > k:
            e_hi = mid
        else:
            e_lo = mid
        if e_hi - e_lo < 1e-12 * max(1.0, abs(e_hi)):
            break
    return 0.5 * (e_lo + e_hi)


def spectrum(U, count, x_max, h, even, e_max):
    return [eigenvalue(U, k, x_max, h, even, -5.0, e_max) for k in range(count)]


quartic = lambda x: x ** 4
print("# U = x^4, h=1e-4, x_max=6")
ev_even = spectrum(quartic, 5, 6.0, 1e-4, True, 60.0)
ev_odd = spectrum(quartic, 5, 6.0, 1e-4, False, 60.0)
for n, e in enumerate(ev_even):
    print(f"E_even[{n}] = {e:.12f}")
for n, e in enumerate(ev_odd):
    print(f"E_odd[{n}]  = {e:.12f}")

full = sorted(ev_even + ev_odd)
print("merged lowest:", ", ".join(f"{e:.9f}" for e in full))

shifted = lambda x: x * x - 2.0
print("# U = x^2 - 2 (expect 2n - 1)")
se = spectrum(shifted, 3, 7.0, 1e-4, True, 30.0)
so = spectrum(shifted, 3, 7.0, 1e-4, False, 30.0)
print("even:", ", ".join(f"{e:.10f}" for e in se))
print("odd: ", ", ".join(f"{e:.10f}" for e in so))
