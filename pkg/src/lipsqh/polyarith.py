"""Exact univariate polynomial arithmetic over the rationals.

Dense polynomials with Fraction coefficients, polynomial gcd, Yun
square-free decomposition, Sturm sequences and certified real root
isolation by bisection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Sequence


class DomainError(ValueError):
    """Raised when an operation is applied outside its domain."""


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**15)
    return Fraction(x)


class Poly:
    """Dense univariate polynomial with exact rational coefficients.

    coeffs[i] is the coefficient of t**i; the top stored coefficient is
    nonzero except for the zero polynomial (empty tuple). Immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def const(c) -> "Poly":
        return Poly((c,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def from_roots(roots: Sequence) -> "Poly":
        p = Poly.const(1)
        for r in roots:
            p = p * Poly((-_to_fraction(r), 1))
        return p

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.coeffs or not other.coeffs:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = _to_fraction(c)
        return Poly(tuple(c * a for a in self.coeffs))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(), self
        quot = [Fraction(0)] * (dq + 1)
        dlc = other.lc
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / dlc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[: other.degree])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        """Exact Horner evaluation at a rational point."""
        x = _to_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(t)), exact."""
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.const(c)
        return acc

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lc)

    def primitive(self) -> "Poly":
        """Divide by the positive rational content; sign of lc preserved."""
        if self.is_zero():
            return self
        num = 0
        den = 1
        for c in self.coeffs:
            num = _int_gcd(num, abs(c.numerator))
            den = den * c.denominator // _int_gcd(den, c.denominator)
        return self.scale(Fraction(den, num))

    def reversed_coeffs(self) -> "Poly":
        """t**deg * self(1/t)."""
        return Poly(tuple(reversed(self.coeffs)))

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{i}")
        return "Poly(" + " + ".join(parts) + ")"


@dataclass(frozen=True)
class Interval:
    """Closed rational interval [lo, hi]."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _to_fraction(self.lo))
        object.__setattr__(self, "hi", _to_fraction(self.hi))
        if self.lo > self.hi:
            raise DomainError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = _to_fraction(x)
        return self.lo <= x <= self.hi

    def intersect(self, other: "Interval"):
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return Interval(lo, hi)

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        prods = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ]
        return Interval(min(prods), max(prods))

    def inverse(self) -> "Interval":
        if self.lo <= 0 <= self.hi:
            raise DomainError("interval inverse across zero")
        return Interval(1 / self.hi, 1 / self.lo)


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over the rationals; primitive normalization each step."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, (a % b)
        if not b.is_zero():
            b = b.primitive()
    if a.is_zero():
        return a
    return a.monic()


def squarefree_part(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of p."""
    if p.is_zero():
        raise DomainError("zero polynomial")
    if p.is_constant():
        return Poly.const(1)
    return (p // gcd(p, p.derivative())).monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: p = lc * prod(f_i ** m_i) with f_i monic,
    square-free and pairwise coprime; returned sorted by multiplicity."""
    if p.is_zero():
        raise DomainError("zero polynomial")
    if p.is_constant():
        return []
    p = p.monic()
    dp = p.derivative()
    g = gcd(p, dp)
    if g.is_constant():
        return [(p, 1)]
    out = []
    b = p // g
    c = dp // g
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


def cauchy_bound(p: Poly) -> Fraction:
    """1 + max|c_i / c_lead|: strict bound on the magnitude of all roots."""
    if p.is_zero() or p.is_constant():
        raise DomainError("bound undefined for constant polynomial")
    lead = p.lc
    return 1 + max(abs(c / lead) for c in p.coeffs[:-1])


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = -(seq[-2] % seq[-1])
        if r.is_zero():
            break
        seq.append(r.primitive())
    return seq


def _sign_variations(seq: Sequence[Poly], x: Fraction) -> int:
    signs = []
    for q in seq:
        v = q(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: Poly, interval: Interval, seq: list[Poly] | None = None) -> int:
    """Number of distinct real roots of p in (lo, hi].

    Endpoint roots are handled by exact deflation of the square-free part,
    which amounts to the rational endpoint perturbation the convention
    calls for.
    """
    if p.is_zero():
        raise DomainError("zero polynomial")
    if p.is_constant():
        return 0
    lo, hi = interval.lo, interval.hi
    if lo == hi:
        return 1 if p(hi) == 0 else 0
    ps = squarefree_part(p)
    n = 0
    if ps(hi) == 0:
        n += 1
        ps = ps // Poly((-hi, 1))
    if ps(lo) == 0:
        ps = ps // Poly((-lo, 1))
    if ps.is_constant():
        return n
    if seq is None or n or seq[0] != ps:
        seq = sturm_sequence(ps)
    return n + _sign_variations(seq, lo) - _sign_variations(seq, hi)


def count_roots_closed(p: Poly, interval: Interval) -> int:
    """Number of distinct real roots of p in [lo, hi]."""
    if p.is_constant():
        return 0
    n = sturm_count(p, interval)
    if interval.lo != interval.hi and p(interval.lo) == 0:
        n += 1
    return n


def _isolate_rec(ps: Poly, seq: list[Poly], lo: Fraction, hi: Fraction,
                 out: list[Interval]) -> None:
    # precondition: ps(lo) != 0 != ps(hi)
    n = sturm_count(ps, Interval(lo, hi), seq)
    if n == 0:
        return
    if n == 1:
        out.append(Interval(lo, hi))
        return
    mid = (lo + hi) / 2
    if ps(mid) == 0:
        delta = (hi - lo) / 4
        while (ps(mid - delta) == 0 or ps(mid + delta) == 0
               or sturm_count(ps, Interval(mid - delta, mid + delta), seq) != 1):
            delta /= 2
        out.append(Interval(mid, mid))
        _isolate_rec(ps, seq, lo, mid - delta, out)
        _isolate_rec(ps, seq, mid + delta, hi, out)
    else:
        _isolate_rec(ps, seq, lo, mid, out)
        _isolate_rec(ps, seq, mid, hi, out)


def isolate_real_roots(p: Poly) -> list[tuple[Interval, int]]:
    """Disjoint isolating intervals for the distinct real roots of p,
    sorted ascending, each tagged with the root's multiplicity in p."""
    if p.is_zero():
        raise DomainError("zero polynomial")
    if p.is_constant():
        raise DomainError("constant polynomial has no isolatable roots")
    factors = squarefree_decomposition(p)
    ps = Poly.const(1)
    for f, _ in factors:
        ps = ps * f
    bound = cauchy_bound(ps) if ps.degree >= 1 else None
    if bound is None:
        return []
    lo, hi = -bound, bound
    while ps(lo) == 0:
        lo -= 1
    while ps(hi) == 0:
        hi += 1
    boxes: list[Interval] = []
    seq = sturm_sequence(ps)
    _isolate_rec(ps, seq, lo, hi, boxes)
    boxes.sort(key=lambda b: (b.lo, b.hi))
    out = []
    for box in boxes:
        mult = None
        for f, m in factors:
            if count_roots_closed(f, box) == 1:
                mult = m
                break
        assert mult is not None, "isolated root not matched to a factor"
        out.append((box, mult))
    return out


def interval_eval(p: Poly, interval: Interval) -> Interval:
    """Horner-form interval enclosure of p over the interval; exact
    rational endpoints, inclusion isotonic."""
    acc = Interval(Fraction(0), Fraction(0))
    box = interval
    for c in reversed(p.coeffs):
        cc = Interval(c, c)
        acc = acc * box + cc
    return acc


def refine_root_interval(ps: Poly, interval: Interval, width: Fraction) -> Interval:
    """Shrink an isolating interval of the square-free ps below width by
    sign-change bisection; exact on rational roots (degenerate interval)."""
    lo, hi = interval.lo, interval.hi
    if lo == hi:
        return interval
    slo = ps(lo)
    if slo == 0 or ps(hi) == 0:
        raise DomainError("endpoints must not be roots")
    slo = 1 if slo > 0 else -1
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = ps(mid)
        if v == 0:
            return Interval(mid, mid)
        if (1 if v > 0 else -1) == slo:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)
