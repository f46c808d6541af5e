#!/usr/bin/env python3
"""High-precision reference values for the kernel unit tests.

Evaluated with mpmath at 50 significant digits, independently of the C++
implementation. The printed literals are frozen in tests/test_spectral_kernel.cpp.

    python3 tests/oracles/golden_values.py
"""
import mpmath as mp

mp.mp.dps = 50
I = mp.mpc(0, 1)


def kp(z):
    return mp.sqrt(I - z)


def km(z):
    return mp.sqrt(-I - z)


def kernel(z, x, y):
    a, b = kp(z), km(z)
    if x >= 0 and y <= 0:
        return mp.exp(-a * abs(x) - b * abs(y)) / (a + b)
    if x <= 0 and y >= 0:
        return mp.exp(-b * abs(x) - a * abs(y)) / (a + b)
    if x >= 0 and y >= 0:
        return mp.exp(-a * abs(x - y)) / (2 * a) + (a - b) / (2 * a * (a + b)) * mp.exp(-a * abs(x + y))
    return mp.exp(-b * abs(x - y)) / (2 * b) - (a - b) / (2 * b * (a + b)) * mp.exp(-b * abs(x + y))


def dirichlet(z, x, y):
    if x > 0 and y > 0:
        k = kp(z)
    elif x < 0 and y < 0:
        k = km(z)
    else:
        return mp.mpc(0)
    return (mp.exp(-k * abs(x - y)) - mp.exp(-k * (abs(x) + abs(y)))) / (2 * k)


def show(name, v):
    print(f"{name}: {mp.nstr(v.real, 17)} {mp.nstr(v.imag, 17)}")


z = mp.mpc(-1, 0.5)
show("k_plus(-1+0.5i)", kp(z))
show("k_minus(-1+0.5i)", km(z))
z = mp.mpc(-1, 0)
show("R(-1; 1, -1)", kernel(z, 1, -1))
show("RD(-1; 1, 2)", dirichlet(z, 1, 2))
z = mp.mpc(2, 0.3)
show("R(2+0.3i; 0.7, 1.9)", kernel(z, mp.mpf("0.7"), mp.mpf("1.9")))
show("R(2+0.3i; -0.4, -2.2)", kernel(z, mp.mpf("-0.4"), mp.mpf("-2.2")))
z = mp.mpc(-3, -2)
show("R(-3-2i; -1.5, 0.25)", kernel(z, mp.mpf("-1.5"), mp.mpf("0.25")))
