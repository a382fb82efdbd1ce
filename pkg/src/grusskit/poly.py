"""Dense real polynomials as ascending coefficient tuples.

All helpers operate on plain sequences of floats ``(c0, c1, ...)`` meaning
``c0 + c1*t + c2*t**2 + ...``.  Root location is certified: roots are
bracketed by sign changes on monotone segments (segment ends come from the
recursively-located critical points of the derivative), then narrowed by
bisection.  Degrees 1 and 2 use closed forms.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

Coeffs = Sequence[float]

_EPS = 2.220446049250313e-16


def pvalue(c: Coeffs, x: float) -> float:
    acc = 0.0
    for ck in reversed(c):
        acc = acc * x + ck
    return acc


def pderiv(c: Coeffs) -> tuple[float, ...]:
    if len(c) <= 1:
        return (0.0,)
    return tuple(k * ck for k, ck in enumerate(c) if k >= 1)


def pinteg(c: Coeffs) -> tuple[float, ...]:
    """Antiderivative with zero constant term."""
    return (0.0,) + tuple(ck / (k + 1) for k, ck in enumerate(c))


def pintegrate(c: Coeffs, lo: float, hi: float) -> float:
    prim = pinteg(c)
    return pvalue(prim, hi) - pvalue(prim, lo)


def padd(a: Coeffs, b: Coeffs) -> tuple[float, ...]:
    n = max(len(a), len(b))
    return tuple((a[k] if k < len(a) else 0.0) + (b[k] if k < len(b) else 0.0)
                 for k in range(n))


def pneg(a: Coeffs) -> tuple[float, ...]:
    return tuple(-x for x in a)


def psub(a: Coeffs, b: Coeffs) -> tuple[float, ...]:
    return padd(a, pneg(b))


def pscale(a: Coeffs, s: float) -> tuple[float, ...]:
    return tuple(s * x for x in a)


def pmul(a: Coeffs, b: Coeffs) -> tuple[float, ...]:
    out = [0.0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0.0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return tuple(out)


def ppow(a: Coeffs, n: int) -> tuple[float, ...]:
    out: tuple[float, ...] = (1.0,)
    for _ in range(n):
        out = pmul(out, a)
    return out


def precenter(c: Coeffs, m: float) -> tuple[float, ...]:
    """Coefficients of p(m + s) as a polynomial in s (Taylor shift by
    repeated synthetic division)."""
    a = list(c)
    n = len(a)
    for j in range(n - 1):
        for i in range(n - 2, j - 1, -1):
            a[i] += m * a[i + 1]
    return tuple(a)


def _coeff_scale(c: Coeffs, lo: float, hi: float) -> float:
    bnd = max(1.0, abs(lo), abs(hi))
    s, f = 0.0, 1.0
    for ck in c:
        s += abs(ck) * f
        f *= bnd
    return s + 1e-300


def effective_degree(c: Coeffs, rel: float = 1e-13) -> int:
    mags = [abs(x) for x in c]
    top = max(mags) if mags else 0.0
    if top == 0.0:
        return -1  # identically zero
    deg = len(c) - 1
    while deg > 0 and mags[deg] <= rel * top:
        deg -= 1
    return deg


def is_zero_poly(c: Coeffs, rel: float = 1e-14) -> bool:
    mags = [abs(x) for x in c]
    return max(mags, default=0.0) <= rel


def _bisect_root(c: Coeffs, lo: float, hi: float, vlo: float) -> float:
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        vm = pvalue(c, mid)
        if vm == 0.0:
            return mid
        if (vm > 0) == (vlo > 0):
            lo, vlo = mid, vm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def proots(c: Coeffs, lo: float, hi: float) -> list[float]:
    """Certified real roots of p in [lo, hi], sorted.

    Tangential (even-multiplicity) roots without a sign change may be
    missed; every sign change of p is bracketed, which is exactly what
    splitting |p| and locating extrema require.
    """
    if hi <= lo:
        return []
    deg = effective_degree(c)
    if deg <= 0:
        return []
    ct = tuple(c[:deg + 1])
    scale = _coeff_scale(ct, lo, hi)
    ztol = 1e-13 * scale
    if deg == 1:
        c0, c1 = ct
        r = -c0 / c1
        span = 1e-12 * max(1.0, abs(lo), abs(hi))
        return [r] if lo - span <= r <= hi + span else []
    if deg == 2:
        a2, a1, a0 = ct[2], ct[1], ct[0]
        disc = a1 * a1 - 4.0 * a2 * a0
        if disc < 0.0:
            return []
        sq = math.sqrt(disc)
        if a1 >= 0.0:
            r1 = (-a1 - sq) / (2.0 * a2)
        else:
            r1 = (-a1 + sq) / (2.0 * a2)
        r2 = a0 / (a2 * r1) if r1 != 0.0 else -a1 / a2
        out = sorted(r for r in (r1, r2) if lo - 1e-12 <= r <= hi + 1e-12)
        return _dedupe(out, lo, hi)

    crit = proots(pderiv(ct), lo, hi)
    nodes = _dedupe([lo] + crit + [hi], lo, hi)
    roots: list[float] = []
    vals = [pvalue(ct, x) for x in nodes]
    for i in range(len(nodes) - 1):
        x0, x1 = nodes[i], nodes[i + 1]
        v0, v1 = vals[i], vals[i + 1]
        if abs(v0) <= ztol:
            roots.append(x0)
            continue
        if abs(v1) <= ztol:
            continue  # picked up as the next segment's left end
        if (v0 > 0) != (v1 > 0):
            roots.append(_bisect_root(ct, x0, x1, v0))
    if abs(vals[-1]) <= ztol:
        roots.append(nodes[-1])
    return _dedupe(sorted(roots), lo, hi)


def _dedupe(xs: list[float], lo: float, hi: float) -> list[float]:
    tol = 1e-13 * max(1.0, abs(lo), abs(hi))
    out: list[float] = []
    for x in sorted(xs):
        if not out or x - out[-1] > tol:
            out.append(x)
    return out


def pcritical(c: Coeffs, lo: float, hi: float) -> list[float]:
    """Sign-change roots of p' strictly inside (lo, hi)."""
    eps = 1e-14 * max(1.0, abs(lo), abs(hi))
    return [x for x in proots(pderiv(c), lo, hi) if lo + eps < x < hi - eps]


def pminmax_on(c: Coeffs, lo: float, hi: float) -> tuple[float, float]:
    """Exact min/max of p over the closed interval [lo, hi]."""
    xs = [lo, hi] + pcritical(c, lo, hi)
    vals = [pvalue(c, x) for x in xs]
    return min(vals), max(vals)


def pvariation_on(c: Coeffs, lo: float, hi: float) -> float:
    """Total variation of p over [lo, hi]: sum of |increments| between
    consecutive extrema."""
    nodes = [lo] + pcritical(c, lo, hi) + [hi]
    total = 0.0
    prev = pvalue(c, nodes[0])
    for x in nodes[1:]:
        cur = pvalue(c, x)
        total += abs(cur - prev)
        prev = cur
    return total
