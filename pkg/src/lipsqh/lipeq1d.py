"""Lipschitz equivalence of univariate real polynomial functions.

Two nonconstant polynomials f, g are equivalent when g(phi(t)) = c*f(t)
for some bi-Lipschitz homeomorphism phi of the line and a constant
c > 0. The decision splits on the number p of critical points:

* p = 0: always equivalent (both are monotone of odd degree); the
  orientation of phi is forced by the leading-coefficient signs.
* p = 1: equivalent iff the multiplicities agree and the critical
  values have the same sign; for even degree the extremum types
  (min vs max) must also match.
* p >= 2: equivalent iff the multiplicity symbols are similar, directly
  (increasing phi) or reversely (decreasing phi).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algnum import AlgebraicNumber, arith, compare, eval_at, make_algebraic
from .polyarith import DomainError, Poly, isolate_real_roots


@dataclass(frozen=True)
class CriticalData:
    """Critical points of f, ascending, with their multiplicities in f
    (multiplicity = 1 + order of the point as a root of f')."""

    points: tuple[tuple[AlgebraicNumber, int], ...]

    @property
    def count(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class MultiplicitySymbol:
    """(critical values, multiplicities) at the ascending critical
    points; defined only when there are at least two of them."""

    values: tuple[AlgebraicNumber, ...]
    mults: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.mults) or len(self.values) < 2:
            raise DomainError("symbol needs >= 2 critical points")


@dataclass(frozen=True)
class ConstantSet:
    """Admissible scaling constants c > 0 for one phi orientation.

    kind is Empty, AllPositive (every c > 0 works, the vacuous case
    where all critical values vanish), or Finite with explicit members.
    """

    kind: str  # "Empty" | "AllPositive" | "Finite"
    members: tuple[AlgebraicNumber, ...] = ()

    @staticmethod
    def empty() -> "ConstantSet":
        return ConstantSet("Empty")

    @staticmethod
    def all_positive() -> "ConstantSet":
        return ConstantSet("AllPositive")

    @staticmethod
    def finite(*members: AlgebraicNumber) -> "ConstantSet":
        uniq: list[AlgebraicNumber] = []
        for m in members:
            if not any(compare(m, u) == 0 for u in uniq):
                uniq.append(m)
        return ConstantSet("Finite", tuple(uniq))

    def is_empty(self) -> bool:
        return self.kind == "Empty"

    def contains(self, c: AlgebraicNumber) -> bool:
        if self.kind == "Empty":
            return False
        if self.kind == "AllPositive":
            return c.sign() > 0
        return any(compare(c, m) == 0 for m in self.members)

    def intersect(self, other: "ConstantSet") -> "ConstantSet":
        if self.kind == "Empty" or other.kind == "Empty":
            return ConstantSet.empty()
        if self.kind == "AllPositive":
            return other
        if other.kind == "AllPositive":
            return self
        common = [m for m in self.members if other.contains(m)]
        return ConstantSet.finite(*common) if common else ConstantSet.empty()

    def union(self, other: "ConstantSet") -> "ConstantSet":
        if self.kind == "Empty":
            return other
        if other.kind == "Empty":
            return self
        if self.kind == "AllPositive" or other.kind == "AllPositive":
            return ConstantSet.all_positive()
        return ConstantSet.finite(*self.members, *other.members)

    def any_member(self) -> AlgebraicNumber:
        """A representative constant (1 for AllPositive)."""
        if self.kind == "AllPositive":
            return AlgebraicNumber.from_rational(1)
        if self.kind == "Finite":
            return self.members[0]
        raise DomainError("empty constant set has no member")


@dataclass(frozen=True)
class Verdict1D:
    equivalent: bool
    direct: ConstantSet
    reverse: ConstantSet
    reason: str = ""


def _lead_sign(p: Poly) -> int:
    return 1 if p.lc > 0 else -1


def critical_points(f: Poly) -> CriticalData:
    """All real roots of f', tagged with the multiplicity of f there."""
    if f.is_constant():
        raise DomainError("constant polynomial has no critical structure")
    df = f.derivative()
    if df.is_constant():
        return CriticalData(())
    pts = []
    for box, order in isolate_real_roots(df):
        pts.append((make_algebraic(df, box), order + 1))
    return CriticalData(tuple(pts))


def multiplicity_symbol(f: Poly, crit: CriticalData | None = None) -> MultiplicitySymbol:
    if crit is None:
        crit = critical_points(f)
    if crit.count < 2:
        raise DomainError(
            f"multiplicity symbol needs >= 2 critical points, got {crit.count}")
    values = tuple(eval_at(f, t) for t, _ in crit.points)
    mults = tuple(m for _, m in crit.points)
    return MultiplicitySymbol(values, mults)


def _ratio(num: AlgebraicNumber, den: AlgebraicNumber) -> AlgebraicNumber:
    rn, rd = num.rat, den.rat
    if rn is not None and rd is not None:
        return AlgebraicNumber.from_rational(rn / rd)
    # a rational ratio between conjugate irrational values is common
    # (scaled polynomials); guess it from floats and verify exactly
    q = Fraction(num.to_float() / den.to_float()).limit_denominator(10**12)
    if q > 0 and _scaled_equals(num, q, den):
        return AlgebraicNumber.from_rational(q)
    return arith("MUL", num, arith("INV", den))


def _scaled_equals(b: AlgebraicNumber, q: Fraction, a: AlgebraicNumber) -> bool:
    """b == q*a, cheap (no resultants) because q is rational."""
    return compare(b, arith("MUL", a, AlgebraicNumber.from_rational(q))) == 0


def _match_values(avals, bvals) -> ConstantSet:
    """Constants c > 0 with bvals = c * avals, given matching lengths."""
    signs_a = [v.sign() for v in avals]
    signs_b = [v.sign() for v in bvals]
    if signs_a != signs_b:
        return ConstantSet.empty()
    nz = [i for i, s in enumerate(signs_a) if s != 0]
    if not nz:
        return ConstantSet.all_positive()
    k = nz[0]
    ak, bk = avals[k], bvals[k]
    # Fast path: a rational candidate ratio, verified exactly.
    ra, rb = ak.rat, bk.rat
    if ra is not None and rb is not None:
        q = rb / ra
        if all(_scaled_equals(bvals[i], q, avals[i]) for i in nz[1:]):
            return ConstantSet.finite(AlgebraicNumber.from_rational(q))
        return ConstantSet.empty()
    q = Fraction(bk.to_float() / ak.to_float()).limit_denominator(10**12)
    if _scaled_equals(bk, q, ak):
        if all(_scaled_equals(bvals[i], q, avals[i]) for i in nz[1:]):
            return ConstantSet.finite(AlgebraicNumber.from_rational(q))
        return ConstantSet.empty()
    # Irrational ratio: verify the cross products b_i*a_k = a_i*b_k.
    for i in nz[1:]:
        lhs = arith("MUL", bvals[i], ak)
        rhs = arith("MUL", avals[i], bk)
        if compare(lhs, rhs) != 0:
            return ConstantSet.empty()
    return ConstantSet.finite(_ratio(bk, ak))


def symbols_similarity(A: MultiplicitySymbol,
                       B: MultiplicitySymbol) -> tuple[ConstantSet, ConstantSet]:
    """(direct, reverse) constant sets: B = c*A in order / reversed."""
    if len(A.values) != len(B.values):
        return ConstantSet.empty(), ConstantSet.empty()
    direct = ConstantSet.empty()
    if A.mults == B.mults:
        direct = _match_values(A.values, B.values)
    reverse = ConstantSet.empty()
    if tuple(reversed(A.mults)) == B.mults:
        reverse = _match_values(tuple(reversed(A.values)), B.values)
    return direct, reverse


def equivalence_1d(f: Poly, g: Poly) -> Verdict1D:
    """Full decision, including the degenerate constant cases."""
    if f.is_zero() or g.is_zero():
        raise DomainError("zero polynomial is outside the equivalence setup")
    empty = ConstantSet.empty()
    if f.is_constant() and g.is_constant():
        a, b = f.coeffs[0], g.coeffs[0]
        if a == 0 or b == 0:
            raise DomainError("zero constant polynomial")
        if (a > 0) == (b > 0):
            cs = ConstantSet.finite(AlgebraicNumber.from_rational(b / a))
            return Verdict1D(True, cs, cs, "constants of equal sign")
        return Verdict1D(False, empty, empty, "constants of opposite sign")
    if f.is_constant() != g.is_constant():
        return Verdict1D(False, empty, empty, "degree mismatch")
    if f.degree != g.degree:
        return Verdict1D(False, empty, empty, "degree mismatch")
    d = f.degree
    cf, cg = critical_points(f), critical_points(g)
    if cf.count != cg.count:
        return Verdict1D(False, empty, empty, "critical point counts differ")
    p = cf.count
    lf, lg = _lead_sign(f), _lead_sign(g)
    if p == 0:
        # odd degree, strictly monotone: always equivalent
        direct = ConstantSet.all_positive() if lf == lg else empty
        reverse = ConstantSet.all_positive() if lf != lg else empty
        return Verdict1D(True, direct, reverse, "no critical points")
    if p == 1:
        (t0, mu) = cf.points[0]
        (s0, nu) = cg.points[0]
        if mu != nu:
            return Verdict1D(False, empty, empty, "multiplicity mismatch")
        vf = eval_at(f, t0)
        vg = eval_at(g, s0)
        sf, sg = vf.sign(), vg.sign()
        if sf != sg:
            return Verdict1D(False, empty, empty,
                             "critical value signs differ")
        if d % 2 == 0 and lf != lg:
            return Verdict1D(False, empty, empty,
                             "one extremum is a minimum, the other a maximum")
        cs = (ConstantSet.all_positive() if sf == 0
              else ConstantSet.finite(_ratio(vg, vf)))
        if d % 2 == 1:
            direct = cs if lf == lg else empty
            reverse = cs if lf != lg else empty
        else:
            # even degree: reflecting about the extremum gives both
            # orientations
            direct = reverse = cs
        return Verdict1D(True, direct, reverse, "single critical point")
    A = multiplicity_symbol(f, cf)
    B = multiplicity_symbol(g, cg)
    direct, reverse = symbols_similarity(A, B)
    eq = not (direct.is_empty() and reverse.is_empty())
    reason = ("multiplicity symbols similar" if eq
              else "multiplicity symbols not similar")
    return Verdict1D(eq, direct, reverse, reason)
