"""Frozen reference values for the unit tests, computed with mpmath at 40 digits.

Run: python3 tests/oracles/gen_oracles.py > tests/unit/oracle_values.hpp
"""
import mpmath as mp

mp.mp.dps = 40


def jn(g, z):
    # normalized Bessel j_g(z) = Gamma(g+1) (2/z)^g J_g(z)
    if z == 0:
        return mp.mpf(1)
    z = abs(z)  # even in z
    return mp.gamma(g + 1) * (2 / z) ** g * mp.besselj(g, z)


def ekernel(g, lam, x):
    z = lam * x
    return jn(g, z) + 1j * z / (2 * (g + 1)) * jn(g + 1, z)


def sonine_const(a, b):
    return mp.gamma(b + 1) / (mp.gamma(a + 1) * mp.gamma(b - a))


def K(a, b, x, y):
    s = 1 if x > 0 else -1
    return sonine_const(a, b) * s * (x + y) * (x * x - y * y) ** (b - a - 1) / abs(x) ** (2 * b + 1)


def X(a, b, f, x):
    ax = abs(x)
    return mp.quad(lambda y: K(a, b, x, y) * f(y) * abs(y) ** (2 * a + 1), [-ax, 0, ax])


def tX(a, b, f, y):
    ay = abs(y)
    g = lambda x: K(a, b, x, y) * f(x) * abs(x) ** (2 * b + 1)
    return mp.quad(g, [ay, ay + 1, mp.inf]) + mp.quad(g, [-mp.inf, -ay - 1, -ay])


def tV(g, f, y):
    c = mp.gamma(g + 1) / (mp.sqrt(mp.pi) * mp.gamma(g + mp.mpf(1) / 2))
    ay = abs(y)
    h = lambda x: c * mp.sign(x) * (x + y) * (x * x - y * y) ** (g - mp.mpf(1) / 2) * f(x)
    return mp.quad(h, [ay, ay + 1, mp.inf]) + mp.quad(h, [-mp.inf, -ay - 1, -ay])


def dunkl_F(g, f, lam):
    h = lambda x: f(x) * ekernel(g, -lam, x) * abs(x) ** (2 * g + 1)
    return mp.quad(h, [-mp.inf, -4, 0, 4, mp.inf])


def fmt(v):
    return mp.nstr(v, 20, min_fixed=-1, max_fixed=-1) if v != 0 else "0.0"


def cplx(v):
    v = mp.mpc(v)
    return "{%s, %s}" % (fmt(v.real), fmt(v.imag))


f_mixed = lambda x: mp.exp(-x * x / 2) * (1 + x)

print("#pragma once")
print("// Generated by tests/oracles/gen_oracles.py (mpmath, 40 digits). Do not edit.")
print("#include <complex>")
print("namespace oracle {")
print("struct BesselCase { double g, z, value; };")
print("inline constexpr BesselCase kBessel[] = {")
for g, z in [(0, 0.5), (0.5, 3), (1.2, 7.9), (1.2, 8.1), (1.2, 25), (2.5, 40), (0, 100), (0.3, 1e-3), (3.7, 12.5), (0, 8.0)]:
    print("    {%r, %r, %s}," % (float(g), float(z), fmt(jn(mp.mpf(g), mp.mpf(z)))))
print("};")
print("struct KernelCase { double g, lambda, x; double re, im; };")
print("inline constexpr KernelCase kKernel[] = {")
for g, lam, x in [(0.7, 1.3, -2.1), (0.0, 2.0, 3.0), (1.2, 0.5, 9.0), (0.5, -1.1, 4.4)]:
    v = ekernel(mp.mpf(g), mp.mpf(lam), mp.mpf(x))
    print("    {%r, %r, %r, %s, %s}," % (g, lam, x, fmt(mp.re(v)), fmt(mp.im(v))))
print("};")
print("// f(x) = e^{-x^2/2}(1 + x)")
print("struct PointCase { double a, b, x; double value; };")
print("inline constexpr PointCase kSonine[] = {")
for a, b, x in [(0.5, 1.5, 1.7), (0.5, 1.5, -12.0), (0.5, 1.0, 2.3), (0.0, 2.2, -0.9)]:
    print("    {%r, %r, %r, %s}," % (a, b, x, fmt(X(mp.mpf(a), mp.mpf(b), f_mixed, mp.mpf(x)))))
print("};")
print("inline constexpr PointCase kDualSonine[] = {")
for a, b, y in [(0.5, 1.5, 0.8), (0.5, 1.5, -2.5), (0.5, 1.0, 1.1), (0.0, 2.2, 0.0)]:
    print("    {%r, %r, %r, %s}," % (a, b, y, fmt(tX(mp.mpf(a), mp.mpf(b), f_mixed, mp.mpf(y)))))
print("};")
print("// a unused, b = gamma")
print("inline constexpr PointCase kDualV[] = {")
for g, y in [(0.5, 0.8), (1.2, -1.4), (0.1, 2.0)]:
    print("    {0.0, %r, %r, %s}," % (g, y, fmt(tV(mp.mpf(g), f_mixed, mp.mpf(y)))))
print("};")
print("struct TransformCase { double g, lambda; double re, im; };")
print("inline constexpr TransformCase kTransform[] = {")
for g, lam in [(0.5, 0.7), (0.0, 2.0), (1.2, -1.5)]:
    v = dunkl_F(mp.mpf(g), f_mixed, mp.mpf(lam))
    print("    {%r, %r, %s, %s}," % (g, lam, fmt(mp.re(v)), fmt(mp.im(v))))
print("};")
print("}  // namespace oracle")
