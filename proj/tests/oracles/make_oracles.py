#!/usr/bin/env python3
"""Regenerates frozen_oracles.inc from the defining sums at 40 digits.

Every value comes from the raw definition (bilateral sums, the Mordell integral by
mpmath.quad, R from erf), never from the product formulas or the recurrences the
library uses.  Run once; the output is checked in.
"""
import itertools
import sys

import mpmath as mp

mp.mp.dps = 40
I = mp.mpc(0, 1)


def e(x):
    return mp.exp(2 * mp.pi * I * x)


def nome(tau, c=1):
    return mp.exp(2 * mp.pi * I * tau * c)


def theta(u, tau, M=40):
    s = 0
    for k in range(-M, M):
        nu = k + mp.mpf(1) / 2
        s += mp.exp(2 * mp.pi * I * nu * (u + mp.mpf(1) / 2) + mp.pi * I * tau * nu * nu)
    return s


def theta_q(x, tau, M=60):
    return mp.fsum(x ** n * nome(tau, mp.mpf(n * (n - 1)) / 2) for n in range(-M, M + 1))


def qpoch(x, tau, M=400):
    q = nome(tau)
    return mp.fprod(1 - x * q ** j for j in range(M))


def eta(tau):
    return nome(tau, mp.mpf(1) / 24) * qpoch(nome(tau), tau)


def mu(u, v, tau, M=60):
    s = 0
    for n in range(-M, M + 1):
        s += (-1) ** n * e(n * v) * nome(tau, mp.mpf(n * (n + 1)) / 2) / (1 - e(u) * nome(tau, n))
    return mp.exp(mp.pi * I * u) / theta(v, tau) * s


def mu_gen(u, v, alpha, tau, M=60):
    s = 0
    for n in range(-M, M + 1):
        top = qpoch(e(u) * nome(tau, n + 1), tau)
        bot = qpoch(e(u) * nome(tau, n - alpha + 1), tau)
        s += (-1) ** n * e((n + mp.mpf(1) / 2) * v) * nome(tau, mp.mpf(n * (n + 1)) / 2) * top / bot
    return mp.exp(mp.pi * I * alpha * (u - v)) / theta(v, tau) * s


def h(u, tau):
    f = lambda x: mp.exp(mp.pi * I * x * x * tau - 2 * mp.pi * x * u) / mp.cosh(mp.pi * x)
    return mp.quad(f, [-mp.inf, -4, -1, 0, 1, 4, mp.inf])


def R(u, tau, M=60):
    t = mp.im(tau)
    a = mp.im(u) / t
    s = 0
    for k in range(-M, M):
        nu = k + mp.mpf(1) / 2
        E = mp.erf(mp.sqrt(mp.pi) * (nu + a) * mp.sqrt(2 * t))
        s += (mp.sign(nu) - E) * (-1) ** k * mp.exp(-2 * mp.pi * I * nu * u) * nome(tau, -nu * nu / 2)
    return s


def muN(us, tau, M=14):
    N = len(us) - 1
    th = [theta(uj, tau) for uj in us[1:]]
    s = 0
    for n in itertools.product(range(-M, M + 1), repeat=N):
        t = mp.exp(mp.pi * I * us[0]) / (1 - e(us[0]) * nome(tau, sum(n)))
        for j, nj in enumerate(n):
            t *= (-1) ** nj * e(-nj * us[j + 1]) * nome(tau, mp.mpf(nj * (nj + 1)) / 2) / th[j]
        s += t
    return s


def fN(xs, a, tau, M=14):
    N = len(xs) - 1
    th = [theta_q(x, tau) for x in xs[1:]]
    s = 0
    for n in itertools.product(range(-M, M + 1), repeat=N):
        m = sum(n)
        t = qpoch(-a * xs[0] * nome(tau, m), tau) / qpoch(-xs[0] * nome(tau, m), tau)
        for j, nj in enumerate(n):
            t *= xs[j + 1] ** (-nj) * nome(tau, mp.mpf(nj * (nj + 1)) / 2) / th[j]
        s += t
    return s


def hat_muN(us, alpha, tau):
    N = len(us) - 1
    xs = [-e(uj) for uj in us]
    return I ** N * mp.exp(mp.pi * I * alpha * sum(us)) * nome(tau, -mp.mpf(N) / 8) * fN(xs, nome(tau, alpha), tau)


def hat_quadratic(n):
    return sum(x * x for x in n) + sum(n) ** 2


def nu(us, k, tau, M=14):
    N = len(us) - 1
    v = [us[0] + us[1] - us[j + 1] for j in range(1, N)]
    s = 0
    for m in itertools.product(range(-M, M + 1), repeat=N - 1):
        n = [mj + mp.mpf(k) / N for mj in m]
        s += mp.exp(mp.pi * I * hat_quadratic(n) * tau + 2 * mp.pi * I * sum(a * b for a, b in zip(v, n)))
    return s


def lattice_theta_hat(us, tau, M=14):
    s = 0
    for n in itertools.product(range(-M, M + 1), repeat=len(us)):
        s += mp.exp(mp.pi * I * hat_quadratic(n) * tau + 2 * mp.pi * I * sum(a * b for a, b in zip(us, n)))
    return s


def c(s):
    return mp.mpc(*s) if isinstance(s, tuple) else mp.mpc(s)


CASES = [
    # (function, u or x list, v, alpha, tau, k)
    ("theta", [(0.1, 0.05)], 0, 0, (0.1, 1.1), 0),
    ("theta", [(-0.37, 0.21)], 0, 0, (-0.25, 0.85), 0),
    ("theta_q", [(0.3, -0.2)], 0, 0, (0.0, 1.2), 0),
    ("theta_q", [(-1.7, 0.4)], 0, 0, (0.2, 0.9), 0),
    ("theta_q", [(1.0, 0.0)], 0, 0, (0.0, 1.0), 0),
    ("eta", [], 0, 0, (0.0, 1.0), 0),
    ("eta", [], 0, 0, (0.3, 0.8), 0),
    ("qpoch_inf", [(0.5, 0.0)], 0, 0, (0.0, 1.0), 0),
    ("qpoch", [(0.3, 0.0)], 0, (0.5, 0.0), (0.0, 1.0), 0),
    ("qpoch", [(0.5, 0.1)], 0, (0.3, 0.2), (0.1, 1.0), 0),
    ("phi11", [(0.1, 0.0)], 0, (0.5, 0.0), (0.0, 1.0), 0),
    ("phi11", [(-2.5, 1.5)], 0, (0.3, 0.1), (0.1, 0.9), 0),
    ("E", [(1.0, 0.0)], 0, 0, (0.0, 1.0), 0),
    ("mu", [(0.2, 0.1)], (0.35, -0.05), 0, (0.0, 1.0), 0),
    ("mu", [(-0.31, 0.17)], (0.12, 0.22), 0, (0.21, 1.3), 0),
    ("mu_gen", [(0.1, 0.05)], (0.2, 0.1), (0.4, 0.1), (0.0, 1.0), 0),
    ("mu_gen", [(-0.2, 0.1)], (0.3, -0.15), (0.65, -0.05), (-0.15, 1.2), 0),
    ("h", [(0.2, 0.0)], 0, 0, (0.0, 1.0), 0),
    ("h", [(0.13, -0.21)], 0, 0, (0.18, 0.95), 0),
    ("R", [(0.2, 0.0)], 0, 0, (0.0, 1.0), 0),
    ("R", [(-0.23, 0.31)], 0, 0, (0.27, 1.15), 0),
    ("muN", [(0.1, 0.02), (0.2, -0.1), (0.03, 0.05)], 0, 0, (0.0, 1.0), 0),
    ("muN", [(0.31, 0.1), (-0.2, 0.04), (0.12, -0.05), (0.07, 0.11)], 0, 0, (0.1, 1.2), 0),
    ("hat_muN", [(0.1, 0.02), (0.2, -0.1)], 0, (0.3, 0.05), (0.0, 1.0), 0),
    ("hat_muN", [(0.21, -0.05), (-0.13, 0.08), (0.34, 0.02)], 0, (0.55, -0.1), (-0.12, 1.1), 0),
    ("fN", [(0.3, 0.1), (-0.5, 0.2), (0.7, -0.3)], 0, (0.2, 0.1), (0.0, 1.0), 0),
    ("nu", [(0.1, 0.02), (0.2, -0.1), (0.3, 0.05), (-0.15, 0.1)], 0, 0, (0.05, 1.0), 1),
    ("nu", [(0.1, 0.02), (0.2, -0.1), (0.3, 0.05), (-0.15, 0.1)], 0, 0, (0.05, 1.0), 2),
    ("lattice_theta_hat", [(0.1, 0.05), (0.2, -0.03)], 0, 0, (0.0, 1.0), 0),
    ("lattice_theta_hat", [(0.1, 0.0), (0.2, 0.0)], 0, 0, (0.0, 1.0), 0),
    ("lattice_theta_2", [(0.1, 0.0)], 0, 0, (0.0, 1.0), 0),
]


def value(name, us, v, alpha, tau, k):
    if name == "theta":
        return theta(us[0], tau)
    if name == "theta_q":
        return theta_q(us[0], tau)
    if name == "eta":
        return eta(tau)
    if name == "qpoch":
        return qpoch(us[0], tau) / qpoch(nome(tau, alpha) * us[0], tau)
    if name == "qpoch_inf":
        return qpoch(us[0], tau)
    if name == "phi11":
        A, z, q = nome(tau, 1 - alpha), us[0], nome(tau)
        t, s = mp.mpc(1), mp.mpc(1)
        for n in range(200):
            t *= (1 - A * q ** n) / (1 - q ** (n + 1)) * (-1) * q ** n * z
            s += t
        return s
    if name == "E":
        return mp.erf(mp.sqrt(mp.pi) * us[0])
    if name == "mu":
        return mu(us[0], v, tau)
    if name == "mu_gen":
        return mu_gen(us[0], v, alpha, tau)
    if name == "h":
        return h(us[0], tau)
    if name == "R":
        return R(us[0], tau)
    if name == "muN":
        return muN(us, tau)
    if name == "hat_muN":
        return hat_muN(us, alpha, tau)
    if name == "fN":
        return fN(us, alpha, tau)  # the alpha slot carries a itself here
    if name == "nu":
        return nu(us, k, tau)
    if name == "lattice_theta_2":
        return mp.fsum(mp.exp(2 * mp.pi * I * n * n * tau + 2 * mp.pi * I * us[0] * n) for n in range(-40, 41))
    if name == "lattice_theta_hat":
        return lattice_theta_hat(us, tau)
    raise ValueError(name)


def lit(z):
    z = mp.mpc(z)
    # parts below the double range are exactly zero once stored
    z = mp.mpc(0 if abs(z.real) < 1e-300 else z.real, 0 if abs(z.imag) < 1e-300 else z.imag)
    return "cplx(%s, %s)" % (mp.nstr(z.real, 20, min_fixed=-3, max_fixed=3), mp.nstr(z.imag, 20, min_fixed=-3, max_fixed=3))


def main():
    out = ["// generated by make_oracles.py; do not edit", ""]
    for name, us, v, alpha, tau, k in CASES:
        us_c = [c(x) for x in us]
        val = value(name, us_c, c(v), c(alpha), c(tau), k)
        out.append('{"%s", {%s}, %s, %s, %s, %d, %s},' % (
            name, ", ".join(lit(x) for x in us_c), lit(c(v)), lit(c(alpha)), lit(c(tau)), k, lit(val)))
        print(name, mp.nstr(val, 17), file=sys.stderr)
    open(sys.argv[1] if len(sys.argv) > 1 else "frozen_oracles.inc", "w").write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
