#!/usr/bin/env python3
"""Reference values for the C++ tests, computed with mpmath at 30 digits.

Run once and commit the output:

    python3 tests/oracles/generate_oracles.py > tests/oracles/frozen_values.hpp

Every quantity is evaluated independently of the library: closed forms
where they exist, mpmath quadrature otherwise.
"""

from mpmath import mp, mpf, quad, quadosc, sqrt, pi, exp, sin, gamma, e, log, expint, findroot, inf

mp.dps = 30


def k1(t):
    # 2 \int_0^inf exp(-r^2) sin^2(t sqrt r) / r dr, with r = z^2:
    # 4 \int_0^inf exp(-z^4) sin^2(t z) / z dz
    f = lambda z: 4 * exp(-z**4) * sin(t * z) ** 2 / z
    zeros = [k * pi / t for k in range(0, int(t * 3 / pi) + 2)]
    return quad(f, zeros + [inf])


def norm2_u1_gaussian(s, t):
    # \int |sin(t xi^s)/xi^s|^2 pi exp(-xi^2/2) dxi over the line.
    f = lambda xi: 2 * pi * exp(-xi**2 / 2) * (sin(t * xi**s) / xi**s) ** 2
    top = mpf(12)
    n = int(t * top**s / pi) + 1
    pts = [mpf(0)] + [(k * pi / t) ** (1 / mpf(s)) for k in range(1, n + 1)]
    pts = [p for p in pts if p < top] + [top]
    return quad(f, pts)


# Closed forms; tanh-sinh quadrature loses digits on the |xi|^{-2 theta} endpoint.
def riesz_gaussian(theta):
    # 2 pi \int_0^inf exp(-xi^2/2) xi^{-2 theta} dxi
    return pi * 2 ** (mpf(1) / 2 - theta) * gamma(mpf(1) / 2 - theta)


def riesz_gaussian_derivative(theta):
    # 2 pi \int_0^inf xi^2 exp(-xi^2/2) xi^{-2 theta} dxi
    return pi * 2 ** (mpf(3) / 2 - theta) * gamma(mpf(3) / 2 - theta)


def riesz_radial_gaussian(n, theta):
    # omega_n \int_0^inf pi^n exp(-r^2/2) r^{n-1-2 theta} dr
    omega = 2 * pi ** (mpf(n) / 2) / gamma(mpf(n) / 2)
    return omega * pi**n * 2 ** ((n - 2 * theta) / 2 - 1) * gamma((n - 2 * theta) / 2)


def c1s(s):
    return s * 2 ** (2 * s) * gamma((1 + 2 * s) / 2) / (sqrt(pi) * gamma(1 - s))


def hs_seminorm_sq_gaussian(s):
    # (2 pi)^{-1} \int |xi|^{2s} pi exp(-xi^2/2) dxi
    return quad(lambda xi: xi ** (2 * s) * exp(-xi**2 / 2), [0, inf])


def gagliardo_gaussian(s):
    # Direct double integral: 2 \int_0^inf h^{-1-2s} D(h) dh with
    # D(h) = \int (u(x+h) - u(x))^2 dx = 2 sqrt(pi/2) (1 - exp(-h^2/2)).
    D = lambda h: 2 * sqrt(pi / 2) * (1 - exp(-h**2 / 2))
    return sqrt(2 * quad(lambda h: h ** (-1 - 2 * s) * D(h), [0, 1, inf]))


def decay_tail(a):
    # \int_a^inf exp(-r^2)/r dr
    return expint(1, a**2) / 2


def theta_sup(threshold):
    return findroot(lambda x: sin(x) / x - threshold, 0.8)


def emit(name, value):
    print(f"inline constexpr double {name} = {mp.nstr(value, 17, strip_zeros=False)};")


print("#pragma once")
print()
print("// Generated by generate_oracles.py (mpmath, 30 digits). Do not edit.")
print()
print("namespace oracle {")
for t in (10, 100, 1000, 10000):
    emit(f"k1_t{t}", k1(mpf(t)))
for (s, t, tag) in ((0.75, 1, "s075_t1"), (0.75, 10, "s075_t10"), (0.75, 100, "s075_t100"),
                    (0.5, 100, "s05_t100"), (0.6, 1000, "s06_t1000")):
    emit(f"norm2_{tag}", norm2_u1_gaussian(mpf(s), mpf(t)))
emit("riesz_gaussian_theta02", riesz_gaussian(mpf("0.2")))
emit("riesz_gaussian_theta04", riesz_gaussian(mpf("0.4")))
emit("riesz_gaussian_derivative_theta09", riesz_gaussian_derivative(mpf("0.9")))
emit("riesz_radial_gaussian_n2_theta09", riesz_radial_gaussian(2, mpf("0.9")))
emit("riesz_radial_gaussian_n3_theta12", riesz_radial_gaussian(3, mpf("1.2")))
for s, tag in ((0.3, "03"), (0.5, "05"), (0.7, "07")):
    emit(f"c1s_{tag}", c1s(mpf(s)))
    emit(f"hs_seminorm_sq_gaussian_{tag}", hs_seminorm_sq_gaussian(mpf(s)))
    emit(f"gagliardo_gaussian_{tag}", gagliardo_gaussian(mpf(s)))
for t, tag in ((10, "10"), (1000, "1e3"), (100000, "1e5")):
    a0 = ((mpf(1) / 4) * pi / t) ** 2
    emit(f"decay_tail_t{tag}", decay_tail(a0))
emit("theta0_sup_09", theta_sup(mpf("0.9")))
emit("sinc_099", sin(mpf("0.99")) / mpf("0.99"))
emit("poly_lower_t1e4", mpf("0.99") / 4 * sqrt(pi) * mpf(10) ** (mpf(4) / 3))
emit("log_lower_at_e", sqrt(pi) / (3 * e))
print("}  // namespace oracle")
