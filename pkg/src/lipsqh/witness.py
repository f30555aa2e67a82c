"""Numerical conjugacy witnesses.

Builds the 1-D conjugating homeomorphism phi piecewise (inverting g on
each monotone segment by bisection), assembles the planar map Phi from
the two branches, and verifies G(Phi(x, y)) = F(x, y) on a grid
together with sampled bi-Lipschitz ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .algnum import AlgebraicNumber
from .classify2d import EQUIVALENT, Verdict2D
from .lipeq1d import critical_points
from .polyarith import DomainError, Poly
from .quasihomog import QuasiHomogPoly, height_functions
from .transitions import DEC, INC, is_beta_transition


class WitnessError(ValueError):
    """The requested witness is not constructible from the given data."""


def _bisect(g: Poly, lo: float, hi: float, target: float) -> float:
    """Root of g(s) = target for g monotone on [lo, hi]."""
    glo = g.eval_float(lo)
    ghi = g.eval_float(hi)
    if glo == target:
        return lo
    if ghi == target:
        return hi
    increasing = ghi > glo
    for _ in range(120):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        v = g.eval_float(mid)
        if v == target:
            return mid
        if (v < target) == increasing:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _expand_bracket(g: Poly, start: float, direction: int,
                    target: float) -> tuple[float, float]:
    """Walk from start in the given direction until g passes target;
    valid because |g| -> infinity monotonically past the last critical
    point."""
    v0 = g.eval_float(start)
    step = 1.0
    point = start
    for _ in range(400):
        point = point + direction * step
        v = g.eval_float(point)
        if (v0 <= target <= v) or (v <= target <= v0):
            return (start, point) if direction > 0 else (point, start)
        step *= 2.0
    raise WitnessError("bracket expansion failed; |g| should be unbounded")


@dataclass
class PiecewiseMonotoneMap:
    """phi with g(phi(t)) = c*f(t), monotone, built segmentwise.

    Decreasing maps are realized by solving the reflected problem
    against g(-s) and negating the output.
    """

    f: Poly
    g: Poly
    c: AlgebraicNumber
    orientation: str  # Inc | Dec
    breakpoints: list = field(init=False)        # (exact, float) of the t_i
    image_breakpoints: list = field(init=False)  # (exact, float) of the s_i
    c_float: float = field(init=False)
    asymptotic_slope: float = field(init=False)  # the common |l| with sign

    def __post_init__(self):
        self.c_float = self.c.to_float()
        cf = critical_points(self.f)
        cg = critical_points(self.g)
        if len(cf.points) != len(cg.points):
            raise WitnessError("critical point counts differ")
        self.breakpoints = [(t, t.to_float()) for t, _ in cf.points]
        spts = [(s, s.to_float()) for s, _ in cg.points]
        if self.orientation == DEC:
            spts = list(reversed(spts))
        self.image_breakpoints = spts
        # |l|^deg = c * |lc f| / |lc g|; sign = orientation sign
        deg = self.f.degree
        mag = (self.c_float * abs(float(self.f.lc) / float(self.g.lc))
               ) ** (1.0 / deg)
        self._sign = 1.0 if self.orientation == INC else -1.0
        self.asymptotic_slope = self._sign * mag
        # reflected working copy for the decreasing case
        if self.orientation == DEC:
            self._gwork = self.g.compose(Poly((0, -1)))
            self._swork = sorted(-sf for _, sf in spts)
        else:
            self._gwork = self.g
            self._swork = [sf for _, sf in spts]

    def __call__(self, t: float) -> float:
        target = self.c_float * self.f.eval_float(t)
        g = self._gwork
        sw = self._swork
        tf = [bf for _, bf in self.breakpoints]
        if not tf:
            lo, hi = _expand_bracket_both(g, 0.0, target)
        else:
            idx = None
            for i in range(len(tf) - 1):
                if tf[i] <= t <= tf[i + 1]:
                    idx = i
                    break
            if idx is not None:
                lo, hi = sw[idx], sw[idx + 1]
            elif t < tf[0]:
                lo, hi = _expand_bracket(g, sw[0], -1, target)
            else:
                lo, hi = _expand_bracket(g, sw[-1], +1, target)
        s = _bisect(g, lo, hi, target)
        return self._sign * s if self.orientation == DEC else s


def _expand_bracket_both(g: Poly, start: float, target: float):
    """Bracket for a globally monotone g (no critical points)."""
    v0 = g.eval_float(start)
    increasing = float(g.lc) > 0  # odd degree
    if (target >= v0) == increasing:
        return _expand_bracket(g, start, +1, target)
    return _expand_bracket(g, start, -1, target)


def build_phi(f: Poly, g: Poly, c: AlgebraicNumber, orientation: str,
              tol: float = 1e-12) -> PiecewiseMonotoneMap:
    """The conjugacy phi with g(phi(t)) = c*f(t) for an admissible
    (c, orientation); bisection is run to float precision, which is
    well below any practical tol."""
    if orientation not in (INC, DEC):
        raise WitnessError(f"unknown orientation {orientation!r}")
    if c.sign() <= 0:
        raise WitnessError("scaling constant must be positive")
    return PiecewiseMonotoneMap(f, g, c, orientation)


@dataclass
class PlanarWitnessMap:
    """The planar map Phi with G(Phi) = F, one branch per half-plane.

    Phi(x, t|x|^beta) = (lambda1*x, |lambda1|^beta*phi1(t)*|x|^beta) for
    x > 0, the lambda2/phi2 branch for x < 0, and
    Phi(0, y) = (0, axis_slope*y).
    """

    beta_value: float
    d: int
    lambda1: float  # signed
    lambda2: float
    phi1: PiecewiseMonotoneMap | None
    phi2: PiecewiseMonotoneMap | None
    axis_slope: float

    def __call__(self, x: float, y: float) -> tuple[float, float]:
        if x == 0.0:
            return (0.0, self.axis_slope * y)
        ax = abs(x)
        xb = ax ** self.beta_value
        t = y / xb
        if x > 0:
            lam, phi = self.lambda1, self.phi1
        else:
            lam, phi = self.lambda2, self.phi2
        pt = phi(t) if phi is not None else t
        return (lam * x, abs(lam) ** self.beta_value * pt * xb)


def monomial_witness(F: QuasiHomogPoly, G: QuasiHomogPoly) -> PlanarWitnessMap:
    """Affine witness for a*X^d vs b*X^d: Phi(x, y) = (lambda*x, y)."""
    if not (F.is_monomial() and G.is_monomial() and F.d == G.d):
        raise WitnessError("not a matching monomial pair")
    a, b = float(F.coeffs[0]), float(G.coeffs[0])
    ratio = a / b
    if ratio < 0 and F.d % 2 == 0:
        raise WitnessError("even-degree monomials of opposite sign")
    lam = math.copysign(abs(ratio) ** (1.0 / F.d), ratio)
    bv = float(F.beta.value)
    # y is untouched, so phi(t) = t / |lam|^beta on both branches
    slope_inv = abs(lam) ** (-bv)

    class _Linear:
        asymptotic_slope = slope_inv

        def __call__(self, t):
            return slope_inv * t

    lin = _Linear()
    return PlanarWitnessMap(bv, F.d, lam, lam, lin, lin, 1.0)


def inverse_beta_transform(cert, c1: AlgebraicNumber, c2: AlgebraicNumber,
                           orientations, F: QuasiHomogPoly,
                           G: QuasiHomogPoly,
                           tol: float = 1e-9) -> PlanarWitnessMap:
    """Assemble Phi from a certificate and chosen constants/orientations.

    orientations is (phi1 orientation, phi2 orientation); both branches
    must share one (coherence), and the two axis-slope computations must
    agree, which is exactly the beta-transition condition.
    """
    o1, o2 = orientations
    fp, fm = height_functions(F)
    gp, gm = height_functions(G)
    if cert.orientation == "Direct":
        g1, g2 = gp, gm
    else:
        g1, g2 = gm, gp
    char, limit = is_beta_transition(
        cert, c1, c2, F.d - F.beta.r * F.m, F.beta, F.d,
        fp.lc, fm.lc, g1.lc, g2.lc)
    if not char:
        raise WitnessError("chosen data is not a beta-transition")
    phi1 = build_phi(fp, g1, c1, o1, tol)
    phi2 = build_phi(fm, g2, c2, o2, tol)
    d = F.d
    m1 = c1.to_float() ** (-1.0 / d)
    m2 = c2.to_float() ** (-1.0 / d)
    sign = 1.0 if cert.orientation == "Direct" else -1.0
    bv = float(F.beta.value)
    slope1 = m1 ** bv * phi1.asymptotic_slope
    slope2 = m2 ** bv * phi2.asymptotic_slope
    if abs(slope1 - slope2) > 1e-9 * max(1.0, abs(slope1)):
        raise WitnessError(
            f"axis slopes disagree: {slope1} vs {slope2}")
    return PlanarWitnessMap(bv, d, sign * m1, sign * m2, phi1, phi2,
                            0.5 * (slope1 + slope2))


def witness_for(verdict: Verdict2D, tol: float = 1e-9) -> PlanarWitnessMap:
    """Witness map for an Equivalent classification verdict."""
    if verdict.status != EQUIVALENT:
        raise WitnessError("witness requested for a non-Equivalent verdict")
    if verdict.F.is_monomial() and verdict.G.is_monomial():
        return monomial_witness(verdict.F, verdict.G)
    ch = verdict.chosen
    if ch is None:
        raise WitnessError("verdict carries no usable transition data")
    return inverse_beta_transform(
        ch.cert, ch.c1, ch.c2, (ch.phi1_orientation, ch.phi2_orientation),
        verdict.F, verdict.G, tol)


@dataclass
class ConjugacyReport:
    max_rel_residual: float
    lip_ratio_min: float
    lip_ratio_max: float
    strip_lipschitz_estimate: float
    success: bool

    def to_dict(self) -> dict:
        return {
            "max_rel_residual": self.max_rel_residual,
            "lip_ratio_min": self.lip_ratio_min,
            "lip_ratio_max": self.lip_ratio_max,
            "strip_lipschitz_estimate": self.strip_lipschitz_estimate,
            "success": self.success,
        }


def verify_conjugacy(F: QuasiHomogPoly, G: QuasiHomogPoly,
                     Phi: PlanarWitnessMap,
                     grid: dict | None = None,
                     tol: float = 1e-9) -> ConjugacyReport:
    """Grid check of G(Phi) = F plus sampled bi-Lipschitz ratios.

    Grid points are (x, t|x|^beta) for x in x_range excluding a
    neighborhood of 0 (axis points evaluated via the explicit
    Phi(0, y) formula), t in t_range.
    """
    grid = grid or {}
    x_count = grid.get("x_count", 64)
    t_count = grid.get("t_count", 64)
    x_lo, x_hi = grid.get("x_range", (-1.0, 1.0))
    t_lo, t_hi = grid.get("t_range", (-5.0, 5.0))
    x_cut = grid.get("x_exclude", 1e-3)
    bv = Phi.beta_value

    xs = [x_lo + (x_hi - x_lo) * i / (x_count - 1) for i in range(x_count)]
    xs = [x for x in xs if abs(x) >= x_cut]
    ts = [t_lo + (t_hi - t_lo) * j / (t_count - 1) for j in range(t_count)]

    max_rel = 0.0
    points: list[tuple[float, float]] = []
    images: list[tuple[float, float]] = []
    for x in xs:
        xb = abs(x) ** bv
        for t in ts:
            y = t * xb
            u, v = Phi(x, y)
            fv = F.eval_float(x, y)
            gv = G.eval_float(u, v)
            rel = abs(gv - fv) / max(1.0, abs(fv))
            if rel > max_rel:
                max_rel = rel
            points.append((x, y))
            images.append((u, v))
    # axis points through the explicit formula
    for t in ts:
        u, v = Phi(0.0, t)
        gv = G.eval_float(u, v)
        fv = F.eval_float(0.0, t)
        rel = abs(gv - fv) / max(1.0, abs(fv))
        if rel > max_rel:
            max_rel = rel

    def ratios(ps, qs):
        rmin, rmax = math.inf, 0.0
        n = len(ps)
        stride = max(1, t_count // 8)
        for i in range(0, n - 1, 1):
            j = i + 1 if (i + 1) % t_count else i + stride
            if j >= n:
                continue
            dx = math.hypot(ps[i][0] - ps[j][0], ps[i][1] - ps[j][1])
            dy = math.hypot(qs[i][0] - qs[j][0], qs[i][1] - qs[j][1])
            if dx == 0.0:
                continue
            r = dy / dx
            if r < rmin:
                rmin = r
            if r > rmax:
                rmax = r
        return rmin, rmax

    lip_min, lip_max = ratios(points, images)
    # difference quotients on a narrow strip around the y-axis
    strip_pts = []
    strip_img = []
    for x in (-0.05, -0.02, 0.02, 0.05):
        xb = abs(x) ** bv
        for t in ts:
            y = t * xb
            strip_pts.append((x, y))
            strip_img.append(Phi(x, y))
    _, strip_L = ratios(strip_pts, strip_img)

    L = max(lip_max, 1.0 / lip_min if lip_min > 0 else math.inf)
    success = max_rel <= tol and math.isfinite(L)
    return ConjugacyReport(max_rel, lip_min, lip_max, strip_L, success)
