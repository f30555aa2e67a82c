"""Quasihomogeneous bivariate polynomials with rational weight beta = r/s.

F(X, Y) = sum_k a_k X^(d - r*k) Y^(s*k), with r > s > 0 coprime and
a_m != 0. Only this shape is representable; general bivariate
arithmetic is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .polyarith import DomainError, Poly, cauchy_bound, Interval, sturm_count


@dataclass(frozen=True)
class Beta:
    r: int
    s: int

    def __post_init__(self):
        if not (self.r > self.s > 0):
            raise DomainError(f"need r > s > 0, got r={self.r}, s={self.s}")
        if gcd(self.r, self.s) != 1:
            raise DomainError(f"r={self.r}, s={self.s} are not coprime")

    @property
    def value(self) -> Fraction:
        return Fraction(self.r, self.s)

    def __str__(self):
        return f"{self.r}/{self.s}"


@dataclass(frozen=True)
class QuasiHomogPoly:
    """Coefficient vector a_0..a_m of F = sum a_k X^(d-rk) Y^(sk)."""

    beta: Beta
    d: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.d < 1:
            raise DomainError("degree must be >= 1")
        cs = tuple(Fraction(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", cs)
        if not cs or cs[-1] == 0:
            raise DomainError("top coefficient a_m must be nonzero")
        if all(c == 0 for c in cs):
            raise DomainError("zero polynomial")
        if self.d - self.beta.r * self.m < 0:
            raise DomainError("negative X exponent: m exceeds d/r")

    @property
    def m(self) -> int:
        return len(self.coeffs) - 1

    def is_monomial(self) -> bool:
        """True for F = a*X^d (the m = 0 case)."""
        return self.m == 0

    def terms(self) -> list[tuple[Fraction, int, int]]:
        """(coefficient, X exponent, Y exponent) for nonzero terms."""
        r, s = self.beta.r, self.beta.s
        return [(c, self.d - r * k, s * k)
                for k, c in enumerate(self.coeffs) if c != 0]

    def evaluate(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        total = Fraction(0)
        for c, i, j in self.terms():
            total += c * x**i * y**j
        return total

    def eval_float(self, x: float, y: float) -> float:
        total = 0.0
        for c, i, j in self.terms():
            total += float(c) * x**i * y**j
        return total

    def __str__(self):
        parts = []
        for c, i, j in self.terms():
            factors = [] if abs(c) == 1 and (i or j) else [str(abs(c))]
            if i:
                factors.append("X" if i == 1 else f"X^{i}")
            if j:
                factors.append("Y" if j == 1 else f"Y^{j}")
            term = "*".join(factors)
            parts.append(("- " if c < 0 else "+ ") + term)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


def from_monomials(terms, beta: Beta) -> QuasiHomogPoly:
    """Build from (coefficient, i, j) monomials; validates that every
    term satisfies s*i + r*j = s*d for one d and that s divides j."""
    r, s = beta.r, beta.s
    agg: dict[tuple[int, int], Fraction] = {}
    for c, i, j in terms:
        c = Fraction(c)
        if c == 0:
            continue
        if i < 0 or j < 0:
            raise DomainError(f"negative exponent in X^{i} Y^{j}")
        agg[(i, j)] = agg.get((i, j), Fraction(0)) + c
    agg = {k: v for k, v in agg.items() if v != 0}
    if not agg:
        raise DomainError("zero polynomial")
    degrees = {s * i + r * j for i, j in agg}
    if len(degrees) > 1:
        raise DomainError(
            f"not quasihomogeneous for beta={beta}: mixed weighted degrees")
    (w,) = degrees
    if w % s != 0:
        raise DomainError(
            f"not quasihomogeneous for beta={beta}: weighted degree {w} "
            f"not divisible by s={s}")
    d = w // s
    coeffs: dict[int, Fraction] = {}
    for (i, j), c in agg.items():
        if j % s != 0:
            raise DomainError(
                f"not quasihomogeneous for beta={beta}: Y exponent {j} "
                f"not divisible by s={s}")
        coeffs[j // s] = c
    m = max(coeffs)
    vec = tuple(coeffs.get(k, Fraction(0)) for k in range(m + 1))
    return QuasiHomogPoly(beta, d, vec)


def height_functions(F: QuasiHomogPoly) -> tuple[Poly, Poly]:
    """(f_plus, f_minus) with f_plus(t) = F(1, t), f_minus(t) = F(-1, t)."""
    r, s = F.beta.r, F.beta.s
    plus = [Fraction(0)] * (s * F.m + 1)
    minus = [Fraction(0)] * (s * F.m + 1)
    for k, c in enumerate(F.coeffs):
        plus[s * k] = c
        minus[s * k] = c if (F.d - r * k) % 2 == 0 else -c
    return Poly(plus), Poly(minus)


def x_multiplicity(F: QuasiHomogPoly) -> int:
    """e = d - r*m, the multiplicity of X as a factor of F."""
    return F.d - F.beta.r * F.m


def halfplane_zeros(F: QuasiHomogPoly) -> tuple[bool, bool]:
    """Whether V(F) meets the open right / left half-plane, i.e. whether
    the corresponding height function has a real root."""
    fp, fm = height_functions(F)

    def has_root(p: Poly) -> bool:
        if p.is_constant():
            return p.is_zero()
        b = cauchy_bound(p)
        return sturm_count(p, Interval(-b, b)) > 0

    return has_root(fp), has_root(fm)
