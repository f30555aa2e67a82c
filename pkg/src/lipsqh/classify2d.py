"""Three-valued Lipschitz classification of quasihomogeneous pairs.

The pipeline: monomial pairs are decided completely; otherwise the four
height functions are paired through 1-D equivalences, and any of the
three sufficient conditions (r even or s odd; equal scaling constants;
X divides neither polynomial) upgrades a live pairing to Equivalent.
When no pairing exists, non-equivalence follows only if some zero set
meets both open half-planes; everything else is honestly Undetermined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algnum import AlgebraicNumber, compare
from .lipeq1d import ConstantSet
from .polyarith import DomainError
from .quasihomog import QuasiHomogPoly, halfplane_zeros, height_functions, x_multiplicity
from .transitions import DEC, INC, PairingCertificate, pairing_search

EQUIVALENT = "Equivalent"
NOT_EQUIVALENT = "NotEquivalent"
UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class ChosenTransition:
    """A concrete admissible transition extracted from a certificate."""

    cert: PairingCertificate
    c1: AlgebraicNumber
    c2: AlgebraicNumber
    phi1_orientation: str
    phi2_orientation: str


@dataclass(frozen=True)
class Verdict2D:
    status: str
    reason: str  # CondA | CondB | CondC | MonomialCase | NecessaryFails
    #              | NoCriterionApplies | NoPairingUndetermined
    detail: str
    F: QuasiHomogPoly
    G: QuasiHomogPoly
    conditions: dict | None = None  # {"a": bool, "b": bool, "c": bool}
    chosen: ChosenTransition | None = None
    halfplanes: tuple | None = None  # (zeros of F, zeros of G)


def _choose_common(cert: PairingCertificate):
    """(c, orientation) with c in both constant sets for one common phi
    orientation, or None."""
    for o in (INC, DEC):
        inter = cert.c1_by_orient[o].intersect(cert.c2_by_orient[o])
        if not inter.is_empty():
            return inter.any_member(), o
    return None


def _choose_coherent(cert: PairingCertificate):
    """Any (c1, c2, orientation) with a common orientation, constants
    possibly different; or None."""
    for o in (INC, DEC):
        s1, s2 = cert.c1_by_orient[o], cert.c2_by_orient[o]
        if not s1.is_empty() and not s2.is_empty():
            return s1.any_member(), s2.any_member(), o
    return None


def classify(F: QuasiHomogPoly, G: QuasiHomogPoly) -> Verdict2D:
    if F.beta != G.beta:
        raise DomainError("polynomials have different beta weights")
    r, s = F.beta.r, F.beta.s

    if F.is_monomial() and G.is_monomial():
        a, b = F.coeffs[0], G.coeffs[0]
        if F.d != G.d:
            return Verdict2D(UNDETERMINED, "MonomialCase",
                             "monomials of different degree", F, G)
        if F.d % 2 == 1 or (a > 0) == (b > 0):
            return Verdict2D(EQUIVALENT, "MonomialCase",
                             f"a*X^{F.d} ~ b*X^{F.d}: "
                             + ("odd degree" if F.d % 2 else "equal signs"),
                             F, G)
        return Verdict2D(NOT_EQUIVALENT, "MonomialCase",
                         f"X^{F.d} coefficients of opposite sign, even degree",
                         F, G)

    fp, fm = height_functions(F)
    gp, gm = height_functions(G)
    direct, reverse = pairing_search(fp, fm, gp, gm)
    live = [c for c in (direct, reverse) if c is not None and c.is_live()]
    hf, hg = halfplane_zeros(F), halfplane_zeros(G)

    if not live:
        if hf == (True, True) or hg == (True, True):
            return Verdict2D(
                NOT_EQUIVALENT, "NecessaryFails",
                "no height-function pairing exists, and a zero set meets "
                "both open half-planes, so a pairing would be necessary",
                F, G, halfplanes=(hf, hg))
        return Verdict2D(
            UNDETERMINED, "NoPairingUndetermined",
            "no height-function pairing, but neither zero set meets both "
            "half-planes, so non-equivalence cannot be concluded",
            F, G, halfplanes=(hf, hg))

    eF, eG = x_multiplicity(F), x_multiplicity(G)
    assert eF == eG, "live pairing forces equal X-multiplicities"

    cond_a = (r % 2 == 0) or (s % 2 == 1)
    cond_c = eF == 0
    chosen = None
    cond_b = False
    for cert in live:
        pick = _choose_common(cert)
        if pick is not None:
            c, o = pick
            cond_b = True
            if chosen is None:
                chosen = ChosenTransition(cert, c, c, o, o)
    conditions = {"a": cond_a, "b": cond_b, "c": cond_c}

    if chosen is None:
        # no common constant; a coherent choice still witnesses (a)/(c)
        for cert in live:
            pick = _choose_coherent(cert)
            if pick is not None:
                c1, c2, o = pick
                chosen = ChosenTransition(cert, c1, c2, o, o)
                break

    if cond_b:
        scale = "common constant"
        if chosen is not None and chosen.c1.rat is not None:
            scale = f"common constant c = {chosen.c1.rat}"
        if cond_a:
            return Verdict2D(EQUIVALENT, "CondA",
                             f"r even or s odd (r={r}, s={s}); " + scale,
                             F, G, conditions, chosen)
        return Verdict2D(EQUIVALENT, "CondB", scale, F, G, conditions, chosen)
    if cond_a:
        return Verdict2D(EQUIVALENT, "CondA",
                         f"r even or s odd (r={r}, s={s})",
                         F, G, conditions, chosen)
    if cond_c:
        return Verdict2D(EQUIVALENT, "CondC",
                         "X divides neither polynomial (e = 0)",
                         F, G, conditions, chosen)
    return Verdict2D(
        UNDETERMINED, "NoCriterionApplies",
        "a pairing exists but none of the sufficient conditions holds",
        F, G, conditions, chosen)


def _fmt_constant(c: AlgebraicNumber) -> str:
    q = c.rat
    if q is not None:
        return str(q)
    return f"root of {c.defining!r} near {c.to_float():.12g}"


def explain(v: Verdict2D) -> str:
    """Human-readable report, stable field order."""
    lines = [
        f"F = {v.F}",
        f"G = {v.G}",
        f"beta = {v.F.beta}, degree = {v.F.d}",
        f"status: {v.status}",
        f"reason: {v.reason} -- {v.detail}",
    ]
    if v.conditions is not None:
        a, b, c = v.conditions["a"], v.conditions["b"], v.conditions["c"]
        lines.append(f"conditions: (a) r even or s odd: {a}; "
                     f"(b) common constant: {b}; (c) e = 0: {c}")
    if v.halfplanes is not None:
        hf, hg = v.halfplanes
        lines.append(f"zero set of F meets half-planes (right, left): {hf}")
        lines.append(f"zero set of G meets half-planes (right, left): {hg}")
    if v.chosen is not None:
        ch = v.chosen
        lines.append(f"pairing orientation: {ch.cert.orientation}")
        lines.append(f"c1 = {_fmt_constant(ch.c1)} "
                     f"(phi1 {ch.phi1_orientation})")
        lines.append(f"c2 = {_fmt_constant(ch.c2)} "
                     f"(phi2 {ch.phi2_orientation})")
        if compare(ch.c1, ch.c2) == 0 and ch.c1.rat is not None:
            lines.append(f"c = {ch.c1.rat}")
    return "\n".join(lines)
