"""Exact real algebraic numbers.

A number is stored as a square-free defining polynomial together with a
rational isolating interval containing exactly one of its real roots.
Field arithmetic goes through resultants; sign determination and
comparison work by gcd tests plus interval refinement, so no separation
bounds are ever needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy

from .polyarith import (
    DomainError,
    Interval,
    Poly,
    count_roots_closed,
    gcd as poly_gcd,
    interval_eval,
    squarefree_part,
)

_z = sympy.Symbol("z")
_x = sympy.Symbol("x")


class ConstructionError(ValueError):
    """The given (polynomial, interval) pair does not isolate one root."""


def _to_sympy(p: Poly, var) -> sympy.Poly:
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                       for c in reversed(p.coeffs)], var)


def _from_sympy(sp) -> Poly:
    cs = [Fraction(c.p, c.q) for c in reversed(sp.all_coeffs())]
    return Poly(cs)


class AlgebraicNumber:
    """A real algebraic number (square-free defining poly, isolating box).

    Rational numbers are normalized to defining t - q with the degenerate
    interval [q, q]. Instances are treated as immutable; refinement
    returns new objects.
    """

    __slots__ = ("defining", "isolating")

    def __init__(self, defining: Poly, isolating: Interval):
        self.defining = defining
        self.isolating = isolating

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(q) -> "AlgebraicNumber":
        q = Fraction(q)
        return AlgebraicNumber(Poly((-q, 1)), Interval(q, q))

    @property
    def rat(self) -> Fraction | None:
        """The exact rational value, or None if irrational."""
        if self.defining.degree == 1:
            return -self.defining.coeffs[0] / self.defining.coeffs[1]
        return None

    def is_rational(self) -> bool:
        return self.defining.degree == 1

    # -- refinement ---------------------------------------------------

    def refined(self, width: Fraction) -> "AlgebraicNumber":
        """Same number, isolating interval shrunk below width."""
        iv = self.isolating
        if iv.width <= width:
            return self
        p = self.defining
        lo, hi = iv.lo, iv.hi
        if p(lo) == 0:
            return _snap(p, lo)
        if p(hi) == 0:
            return _snap(p, hi)
        slo = 1 if p(lo) > 0 else -1
        while hi - lo > width:
            mid = (lo + hi) / 2
            v = p(mid)
            if v == 0:
                return _snap(p, mid)
            if (1 if v > 0 else -1) == slo:
                lo = mid
            else:
                hi = mid
        return AlgebraicNumber(p, Interval(lo, hi))

    def to_float(self) -> float:
        q = self.rat
        if q is not None:
            return float(q)
        a = self.refined(Fraction(1, 2**70))
        return float(a.isolating.mid)

    __float__ = to_float

    # -- predicates ---------------------------------------------------

    def sign(self) -> int:
        return sign_at(Poly.x(), self)

    def is_zero(self) -> bool:
        return self.sign() == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraicNumber):
            other = AlgebraicNumber.from_rational(other)
        return compare(self, other) == 0

    def __lt__(self, other) -> bool:
        return compare(self, other) < 0

    def __le__(self, other) -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other) -> bool:
        return compare(self, other) > 0

    def __ge__(self, other) -> bool:
        return compare(self, other) >= 0

    def __hash__(self):
        # classes of equal numbers must hash alike; fall back to a coarse
        # dyadic key
        a = self.refined(Fraction(1, 2**40))
        lo = a.isolating.lo
        return hash((lo.numerator * 2**40) // lo.denominator if lo else 0)

    def __neg__(self) -> "AlgebraicNumber":
        return arith("NEG", self)

    def __add__(self, other) -> "AlgebraicNumber":
        if not isinstance(other, AlgebraicNumber):
            other = AlgebraicNumber.from_rational(other)
        return arith("ADD", self, other)

    def __sub__(self, other) -> "AlgebraicNumber":
        if not isinstance(other, AlgebraicNumber):
            other = AlgebraicNumber.from_rational(other)
        return arith("ADD", self, arith("NEG", other))

    def __mul__(self, other) -> "AlgebraicNumber":
        if not isinstance(other, AlgebraicNumber):
            other = AlgebraicNumber.from_rational(other)
        return arith("MUL", self, other)

    def __truediv__(self, other) -> "AlgebraicNumber":
        if not isinstance(other, AlgebraicNumber):
            other = AlgebraicNumber.from_rational(other)
        return arith("MUL", self, arith("INV", other))

    def __abs__(self) -> "AlgebraicNumber":
        return self if self.sign() >= 0 else -self

    def __repr__(self):
        q = self.rat
        if q is not None:
            return f"AlgebraicNumber({q})"
        return (f"AlgebraicNumber({self.defining!r} in "
                f"[{self.isolating.lo}, {self.isolating.hi}] "
                f"~ {self.to_float():.6g})")


def _snap(p: Poly, q: Fraction) -> AlgebraicNumber:
    """p(q) == 0 exactly; represent the number as the rational q."""
    return AlgebraicNumber.from_rational(q)


def make_algebraic(p: Poly, interval: Interval) -> AlgebraicNumber:
    """Normalize (p, I) into an AlgebraicNumber.

    The square-free part of p must have exactly one real root in the
    closed interval I.
    """
    if p.is_zero() or p.is_constant():
        raise ConstructionError("defining polynomial must be non-constant")
    ps = squarefree_part(p)
    n = count_roots_closed(ps, interval)
    if n != 1:
        raise ConstructionError(
            f"interval [{interval.lo}, {interval.hi}] holds {n} roots, need 1")
    if ps(interval.lo) == 0:
        return _snap(ps, interval.lo)
    if ps(interval.hi) == 0:
        return _snap(ps, interval.hi)
    if ps.degree == 1:
        return AlgebraicNumber.from_rational(-ps.coeffs[0] / ps.coeffs[1])
    q = _rational_root_in(ps, interval)
    if q is not None:
        return AlgebraicNumber.from_rational(q)
    return AlgebraicNumber(ps, interval)


def _rational_root_in(ps: Poly, interval: Interval) -> Fraction | None:
    """The rational root of ps inside the interval, if any."""
    if ps.degree > 16:
        return None
    for root in _to_sympy(ps, _z).ground_roots():
        q = Fraction(root.p, root.q)
        if interval.contains(q):
            return q
    return None


def sign_at(q: Poly, alpha: AlgebraicNumber) -> int:
    """Exact sign of q(alpha) in {-1, 0, +1}."""
    r = alpha.rat
    if r is not None:
        v = q(r)
        return 0 if v == 0 else (1 if v > 0 else -1)
    if q.is_zero():
        return 0
    g = poly_gcd(alpha.defining, q)
    if not g.is_constant() and count_roots_closed(g, alpha.isolating) >= 1:
        # the only root of defining in the box is alpha itself
        return 0
    a = alpha
    while True:
        box = interval_eval(q, a.isolating)
        if box.lo > 0:
            return 1
        if box.hi < 0:
            return -1
        a = a.refined(a.isolating.width / 4)


def compare(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    """Total order: -1, 0, +1 as a <, =, > b."""
    ra, rb = a.rat, b.rat
    if ra is not None and rb is not None:
        return (ra > rb) - (ra < rb)
    if ra is not None:
        return -sign_at(Poly((-ra, 1)), b)
    if rb is not None:
        return sign_at(Poly((-rb, 1)), a)
    overlap = a.isolating.intersect(b.isolating)
    if overlap is not None:
        g = poly_gcd(a.defining, b.defining)
        if not g.is_constant() and count_roots_closed(g, overlap) >= 1:
            return 0
    while True:
        if a.isolating.hi < b.isolating.lo:
            return -1
        if b.isolating.hi < a.isolating.lo:
            return 1
        a = a.refined(a.isolating.width / 4)
        b = b.refined(b.isolating.width / 4)


@lru_cache(maxsize=4096)
def _resultant(op: str, ac: tuple, bc: tuple) -> Poly:
    A = Poly(ac)
    B = Poly(bc)
    sa = _to_sympy(A, _x)
    if op == "ADD":
        sb = _to_sympy(B.compose(Poly((0, -1))), _x)  # B(-x), then shift
        shifted = sympy.Poly(sb.as_expr().subs(_x, _x - _z), _x, _z)
        res = sympy.resultant(sa.as_expr(), shifted.as_expr(), _x)
    elif op == "MUL":
        # x^degB * B(z/x) = sum b_j z^j x^(degB - j)
        expr = sum(sympy.Rational(c.numerator, c.denominator)
                   * _z**j * _x**(B.degree - j)
                   for j, c in enumerate(B.coeffs))
        res = sympy.resultant(sa.as_expr(), expr, _x)
    else:  # pragma: no cover
        raise ValueError(op)
    rp = sympy.Poly(res, _z)
    return _from_sympy(rp)


def _irreducible_factors(defining: Poly) -> list[Poly]:
    """Distinct irreducible factors over Q (monic), via sympy.

    Resultants come out with large degree and coefficients; factoring
    first keeps all later Sturm/gcd work at the minimal degree.
    """
    _, factors = sympy.factor_list(_to_sympy(defining, _z).as_expr(), _z)
    return [_from_sympy(sympy.Poly(f, _z)).monic() for f, _ in factors]


def _normalize_from_enclosure(defining: Poly, enclose, refine_ops):
    """Shared tail of arith/eval: shrink operand boxes until the enclosure
    pins down one root of one irreducible factor of the defining
    polynomial."""
    if defining.is_zero() or defining.is_constant():
        raise DomainError("degenerate resultant; invalid operands")
    candidates = _irreducible_factors(defining)
    while True:
        box = enclose()
        live = [(p, count_roots_closed(p, box)) for p in candidates]
        live = [(p, n) for p, n in live if n > 0]
        if len(live) == 1 and live[0][1] == 1:
            return make_algebraic(live[0][0], box)
        candidates = [p for p, _ in live] or candidates
        refine_ops()


def arith(op: str, a: AlgebraicNumber,
          b: AlgebraicNumber | None = None) -> AlgebraicNumber:
    """Exact field arithmetic: ADD, MUL (binary), NEG, INV (unary)."""
    if op == "NEG":
        r = a.rat
        if r is not None:
            return AlgebraicNumber.from_rational(-r)
        return AlgebraicNumber(a.defining.compose(Poly((0, -1))),
                               -a.isolating)
    if op == "INV":
        s = a.sign()
        if s == 0:
            raise DomainError("inverse of zero")
        r = a.rat
        if r is not None:
            return AlgebraicNumber.from_rational(1 / r)
        a = _away_from_zero(a, s)
        return AlgebraicNumber(a.defining.reversed_coeffs().monic(),
                               a.isolating.inverse())
    if b is None:
        raise TypeError(f"{op} needs two operands")
    ra, rb = a.rat, b.rat
    if ra is not None and rb is not None:
        return AlgebraicNumber.from_rational(
            ra + rb if op == "ADD" else ra * rb)
    # one rational operand: compose instead of a resultant
    if ra is not None or rb is not None:
        if ra is not None:  # keep a irrational, b rational
            a, b = b, a
        q = b.rat
        if op == "ADD":
            d = a.defining.compose(Poly((-q, 1)))
            return AlgebraicNumber(d, Interval(a.isolating.lo + q,
                                               a.isolating.hi + q))
        if q == 0:
            return AlgebraicNumber.from_rational(0)
        d = a.defining.compose(Poly((0, Fraction(1, 1) / q))).monic()
        lo = a.isolating.lo * q
        hi = a.isolating.hi * q
        if lo > hi:
            lo, hi = hi, lo
        return AlgebraicNumber(d, Interval(lo, hi))
    defining = _resultant(op, a.defining.coeffs, b.defining.coeffs)
    state = {"a": a, "b": b}

    def enclose():
        ia, ib = state["a"].isolating, state["b"].isolating
        return ia + ib if op == "ADD" else ia * ib

    def refine_ops():
        state["a"] = state["a"].refined(state["a"].isolating.width / 4)
        state["b"] = state["b"].refined(state["b"].isolating.width / 4)

    return _normalize_from_enclosure(defining, enclose, refine_ops)


def _away_from_zero(a: AlgebraicNumber, s: int) -> AlgebraicNumber:
    """Refine until the isolating interval excludes 0 (a is nonzero)."""
    while a.isolating.lo <= 0 <= a.isolating.hi:
        a = a.refined(a.isolating.width / 4)
    assert (a.isolating.lo > 0) == (s > 0)
    return a


def eval_at(f: Poly, alpha: AlgebraicNumber) -> AlgebraicNumber:
    """The algebraic number f(alpha), via one resultant."""
    r = alpha.rat
    if r is not None:
        return AlgebraicNumber.from_rational(f(r))
    if f.is_constant():
        return AlgebraicNumber.from_rational(
            f.coeffs[0] if f.coeffs else Fraction(0))
    sa = _to_sympy(alpha.defining, _x)
    sf = _to_sympy(f, _x)
    res = sympy.resultant(sa.as_expr(), _z - sf.as_expr(), _x)
    defining = _from_sympy(sympy.Poly(res, _z))
    state = {"a": alpha}

    def enclose():
        return interval_eval(f, state["a"].isolating)

    def refine_ops():
        state["a"] = state["a"].refined(state["a"].isolating.width / 4)

    return _normalize_from_enclosure(defining, enclose, refine_ops)
