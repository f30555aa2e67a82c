"""Floating-point brute-force oracle for 1-D Lipschitz equivalence.

Mirrors the exact decision procedure with numpy root finding and
tolerance-based matching. Returns (verdict, margin): the margin is a
rough distance to the nearest decision boundary; verdicts with margin
below ~1e-4 are low-confidence and excluded from agreement checks.
"""

from __future__ import annotations

import numpy as np

from lipsqh.polyarith import Poly

RATIO_TOL = 1e-7
CONFIDENT = 1.0


def _crit_points(p: Poly):
    """(points, multiplicities, margin) from numpy roots of p'."""
    margin = np.inf
    dp = p.derivative()
    if dp.is_constant():
        return [], [], margin
    roots = np.roots([float(c) for c in reversed(dp.coeffs)])
    real = []
    for z in roots:
        if z.imag == 0.0:
            real.append(z.real)
        elif abs(z.imag) < 1e-2:
            # a complex pair hugging the axis: could be a real double root
            margin = min(margin, abs(z.imag))
    real.sort()
    clusters: list[list[float]] = []
    for x in real:
        if clusters and x - clusters[-1][-1] < 1e-7:
            clusters[-1].append(x)
        else:
            if clusters:
                gap = x - clusters[-1][-1]
                if gap < 1e-3:
                    margin = min(margin, gap)
            clusters.append([x])
    pts = [float(np.mean(c)) for c in clusters]
    mults = [len(c) + 1 for c in clusters]
    return pts, mults, margin


def _signs(values, margin):
    out = []
    for v in values:
        if abs(v) <= 1e-9:
            out.append(0)
        else:
            if abs(v) < 1e-3:
                margin = min(margin, abs(v))
            out.append(1 if v > 0 else -1)
    return out, margin


def _ratio_match(avals, bvals, margin):
    """Does bvals = c * avals for one c > 0? Returns (bool, margin)."""
    nz = [i for i, v in enumerate(avals) if abs(v) > 1e-9]
    if not nz:
        return True, margin
    k = nz[0]
    c = bvals[k] / avals[k]
    if c <= 0:
        return False, margin
    scale = max(abs(v) for v in bvals) or 1.0
    res = max(abs(bvals[i] - c * avals[i]) for i in range(len(avals))) / scale
    if res > RATIO_TOL:
        return False, min(margin, res)
    if res > 1e-9:
        return True, min(margin, 1e-5)  # grey zone
    return True, margin


def oracle_equivalence(f: Poly, g: Poly):
    """(equivalent: bool, margin: float)."""
    if f.is_constant() or g.is_constant():
        if f.is_constant() != g.is_constant():
            return False, CONFIDENT
        a, b = float(f.coeffs[0]), float(g.coeffs[0])
        return (a > 0) == (b > 0), CONFIDENT
    if f.degree != g.degree:
        return False, CONFIDENT
    margin = CONFIDENT
    tf, mf, m1 = _crit_points(f)
    sg_pts, mg, m2 = _crit_points(g)
    margin = min(margin, m1, m2)
    if len(tf) != len(sg_pts):
        return False, margin
    p = len(tf)
    lf = 1 if f.lc > 0 else -1
    lg = 1 if g.lc > 0 else -1
    if p == 0:
        return True, margin
    fvals = [f.eval_float(t) for t in tf]
    gvals = [g.eval_float(s) for s in sg_pts]
    sf, margin = _signs(fvals, margin)
    sgn, margin = _signs(gvals, margin)
    if p == 1:
        if mf != mg or sf != sgn:
            return False, margin
        if f.degree % 2 == 0 and lf != lg:
            return False, margin
        return True, margin
    # p >= 2: direct or reverse similarity
    ok_dir = mf == mg and sf == sgn
    if ok_dir:
        ok_dir, margin = _ratio_match(fvals, gvals, margin)
    ok_rev = list(reversed(mf)) == mg and list(reversed(sf)) == sgn
    if ok_rev:
        ok_rev, margin = _ratio_match(list(reversed(fvals)), gvals, margin)
    return ok_dir or ok_rev, margin
