"""Proto-transitions and beta-transitions between height-function pairs.

A proto-transition ((lambda1, lambda2), (phi1, phi2)) with
lambda1*lambda2 > 0 acts on a pair of height functions; it is a
beta-transition when additionally |lambda1|^beta lim phi1(t)/t =
|lambda2|^beta lim phi2(t)/t. For pairs coming from polynomial
equivalences this reduces to an exact identity in the scaling constants
and leading coefficients, checked here without ever materializing the
d-th roots |lambda_i|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algnum import AlgebraicNumber, arith, compare
from .lipeq1d import ConstantSet, Verdict1D, equivalence_1d
from .polyarith import DomainError, Poly
from .quasihomog import Beta

INC = "Inc"
DEC = "Dec"


@dataclass(frozen=True)
class PairingCertificate:
    """Admissible proto-transition data between (f+, f-) and (g+, g-).

    orientation Direct pairs f+ with g+ (lambda > 0); Reverse pairs f+
    with g- (lambda < 0). c1/c2 are unions over the phi orientations of
    the admissible scaling constants; the per-orientation breakdown is
    kept so a coherent choice can be made later. c_i = |lambda_i|^(-d).
    """

    orientation: str  # "Direct" | "Reverse"
    c1_by_orient: dict[str, ConstantSet]
    c2_by_orient: dict[str, ConstantSet]

    @property
    def c1(self) -> ConstantSet:
        return self.c1_by_orient[INC].union(self.c1_by_orient[DEC])

    @property
    def c2(self) -> ConstantSet:
        return self.c2_by_orient[INC].union(self.c2_by_orient[DEC])

    @property
    def phi1_orientations(self) -> frozenset:
        return frozenset(o for o in (INC, DEC)
                         if not self.c1_by_orient[o].is_empty())

    @property
    def phi2_orientations(self) -> frozenset:
        return frozenset(o for o in (INC, DEC)
                         if not self.c2_by_orient[o].is_empty())

    def is_live(self) -> bool:
        return bool(self.phi1_orientations) and bool(self.phi2_orientations)


def _cert_from_verdicts(orientation: str, v1: Verdict1D,
                        v2: Verdict1D) -> PairingCertificate | None:
    if not (v1.equivalent and v2.equivalent):
        return None
    return PairingCertificate(
        orientation,
        {INC: v1.direct, DEC: v1.reverse},
        {INC: v2.direct, DEC: v2.reverse},
    )


def pairing_search(f_plus: Poly, f_minus: Poly, g_plus: Poly,
                   g_minus: Poly):
    """(direct certificate or None, reverse certificate or None).

    Direct requires f+ ~ g+ and f- ~ g-; reverse requires f+ ~ g- and
    f- ~ g+.
    """
    for p in (f_plus, f_minus, g_plus, g_minus):
        if p.is_zero():
            raise DomainError("zero height function")
    direct = _cert_from_verdicts("Direct",
                                 equivalence_1d(f_plus, g_plus),
                                 equivalence_1d(f_minus, g_minus))
    reverse = _cert_from_verdicts("Reverse",
                                  equivalence_1d(f_plus, g_minus),
                                  equivalence_1d(f_minus, g_plus))
    return direct, reverse


# -- proto-transition group on affine samples ------------------------------

@dataclass(frozen=True)
class AffineMap:
    """t -> a*t + b with a != 0."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a == 0:
            raise DomainError("affine map must be invertible")

    def __call__(self, t):
        return self.a * t + self.b

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other."""
        return AffineMap(self.a * other.a, self.a * other.b + self.b)

    def inverse(self) -> "AffineMap":
        return AffineMap(1 / self.a, -self.b / self.a)

    def as_poly(self) -> Poly:
        return Poly((self.b, self.a))


@dataclass(frozen=True)
class ProtoTransitionSample:
    """Test-grade group element with affine phi components."""

    lambda1: Fraction
    lambda2: Fraction
    phi1: AffineMap
    phi2: AffineMap

    def __post_init__(self):
        object.__setattr__(self, "lambda1", Fraction(self.lambda1))
        object.__setattr__(self, "lambda2", Fraction(self.lambda2))
        if self.lambda1 * self.lambda2 <= 0:
            raise DomainError("lambda components must have equal sign")


PROTO_IDENTITY = ProtoTransitionSample(
    Fraction(1), Fraction(1), AffineMap(1, 0), AffineMap(1, 0))


def compose_proto(p2: ProtoTransitionSample,
                  p1: ProtoTransitionSample) -> ProtoTransitionSample:
    """Group product p2 * p1; the case split is on the sign of p1's
    lambda (swap when negative)."""
    mu1, mu2 = p2.lambda1, p2.lambda2
    psi1, psi2 = p2.phi1, p2.phi2
    if p1.lambda1 > 0:
        return ProtoTransitionSample(p1.lambda1 * mu1, p1.lambda2 * mu2,
                                     psi1.compose(p1.phi1),
                                     psi2.compose(p1.phi2))
    return ProtoTransitionSample(p1.lambda1 * mu2, p1.lambda2 * mu1,
                                 psi2.compose(p1.phi1),
                                 psi1.compose(p1.phi2))


def invert_proto(p: ProtoTransitionSample) -> ProtoTransitionSample:
    if p.lambda1 > 0:
        return ProtoTransitionSample(1 / p.lambda1, 1 / p.lambda2,
                                     p.phi1.inverse(), p.phi2.inverse())
    return ProtoTransitionSample(1 / p.lambda2, 1 / p.lambda1,
                                 p.phi2.inverse(), p.phi1.inverse())


def act_on_pair(g1: Poly, g2: Poly, p: ProtoTransitionSample,
                d: int) -> tuple[Poly, Poly]:
    """(g1, g2) . p = (|l1|^d g1(phi1), |l2|^d g2(phi2)), components
    swapped when lambda < 0."""
    s1 = abs(p.lambda1) ** d
    s2 = abs(p.lambda2) ** d
    if p.lambda1 > 0:
        return (g1.compose(p.phi1.as_poly()).scale(s1),
                g2.compose(p.phi2.as_poly()).scale(s2))
    return (g2.compose(p.phi1.as_poly()).scale(s1),
            g1.compose(p.phi2.as_poly()).scale(s2))


# -- beta-transition test --------------------------------------------------

def _alg_pow(c: AlgebraicNumber, n: int) -> AlgebraicNumber:
    out = AlgebraicNumber.from_rational(1)
    for _ in range(n):
        out = arith("MUL", out, c)
    return out


def is_beta_transition(cert: PairingCertificate, c1: AlgebraicNumber,
                       c2: AlgebraicNumber, e: int, beta: Beta, d: int,
                       lead_f1: Fraction, lead_f2: Fraction,
                       lead_g1: Fraction, lead_g2: Fraction
                       ) -> tuple[bool, bool]:
    """(characterization, limit_check) for the chosen constants.

    characterization: some common phi orientation admits (c1, c2), and
    e = 0 or c1 = c2.

    limit_check: the asymptotic-slope condition
    |lambda1|^beta l1 = |lambda2|^beta l2 evaluated exactly. With
    c_i = |lambda_i|^(-d) and l_i^(s m) = c_i rho_i for the leading
    ratio rho_i = lead f_i / lead g_i, raising the slope magnitudes to
    the power s*m*d turns the condition into
    c1^e |rho1|^d = c2^e |rho2|^d together with a common sign for the
    l_i, i.e. a common orientation.
    """
    if not cert.is_live():
        raise DomainError("certificate is not live")
    if not (cert.c1.contains(c1) and cert.c2.contains(c2)):
        raise DomainError("constants are not members of the certificate sets")
    common = [o for o in (INC, DEC)
              if cert.c1_by_orient[o].contains(c1)
              and cert.c2_by_orient[o].contains(c2)]
    coherent = bool(common)
    characterization = coherent and (e == 0 or compare(c1, c2) == 0)

    rho1 = abs(Fraction(lead_f1) / Fraction(lead_g1)) ** d
    rho2 = abs(Fraction(lead_f2) / Fraction(lead_g2)) ** d
    r1, r2 = c1.rat, c2.rat
    if r1 is not None and r2 is not None:
        magnitudes_equal = r1**e * rho1 == r2**e * rho2
    else:
        lhs = arith("MUL", _alg_pow(c1, e), AlgebraicNumber.from_rational(rho1))
        rhs = arith("MUL", _alg_pow(c2, e), AlgebraicNumber.from_rational(rho2))
        magnitudes_equal = compare(lhs, rhs) == 0
    limit_check = coherent and magnitudes_equal
    return characterization, limit_check
