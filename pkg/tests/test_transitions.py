import random
from fractions import Fraction

import pytest

from lipsqh.algnum import AlgebraicNumber
from lipsqh.polyarith import DomainError, Poly
from lipsqh.quasihomog import Beta, QuasiHomogPoly, height_functions
from lipsqh.transitions import (
    DEC,
    INC,
    PROTO_IDENTITY,
    AffineMap,
    ProtoTransitionSample,
    act_on_pair,
    compose_proto,
    invert_proto,
    is_beta_transition,
    pairing_search,
)

FP = Poly([16, 0, 8, 0, 1])
FM = Poly([-16, 0, 8, 0, -1])
GP = Poly([81, 0, 18, 0, 1])
GM = Poly([-81, 0, 18, 0, -1])


def rat(x):
    return AlgebraicNumber.from_rational(Fraction(x))


def _random_sample(rng):
    sgn = rng.choice([1, -1])
    lam1 = sgn * Fraction(rng.randint(1, 9), rng.randint(1, 4))
    lam2 = sgn * Fraction(rng.randint(1, 9), rng.randint(1, 4))
    phi = [AffineMap(Fraction(rng.choice([-3, -2, -1, 1, 2, 3]),
                              rng.choice([1, 2])),
                     Fraction(rng.randint(-4, 4), rng.choice([1, 3])))
           for _ in range(2)]
    return ProtoTransitionSample(lam1, lam2, phi[0], phi[1])


# -- pairing search --------------------------------------------------------

def test_pairing_paper_example():
    direct, reverse = pairing_search(FP, FM, GP, GM)
    assert direct is not None and direct.is_live()
    c = Fraction(81, 16)
    assert direct.c1.contains(rat(c))
    assert direct.c2.contains(rat(c))
    assert reverse is None or not reverse.is_live()


def test_pairing_identity():
    direct, _ = pairing_search(FP, FM, FP, FM)
    assert direct is not None
    assert direct.c1.contains(rat(1)) and direct.c2.contains(rat(1))


def test_pairing_crossed():
    fp, fm = Poly([0, 0, 1]), Poly([1, 0, 1])
    direct, reverse = pairing_search(fp, fm, fm, fp)
    assert direct is None  # same-side sign test fails at the minimum
    assert reverse is not None and reverse.is_live()


def test_pairing_rejects_zero():
    with pytest.raises(DomainError):
        pairing_search(Poly.zero(), FM, GP, GM)


def test_pairing_symmetry_constants_invert():
    rng = random.Random(11)
    for _ in range(10):
        deg = rng.randint(2, 4)
        mk = lambda: Poly([rng.randint(-4, 4) for _ in range(deg)]
                          + [rng.choice([-2, -1, 1, 2])])
        fp, fm, gp, gm = mk(), mk(), mk(), mk()
        d1, _ = pairing_search(fp, fm, gp, gm)
        d2, _ = pairing_search(gp, gm, fp, fm)
        assert (d1 is not None) == (d2 is not None)
        if d1 is not None and d1.c1.kind == "Finite":
            inv = {1 / m.rat for m in d1.c1.members if m.rat}
            assert inv == {m.rat for m in d2.c1.members if m.rat}


# -- group laws ------------------------------------------------------------

def test_group_identity_inverse_associativity_500():
    rng = random.Random(12)
    for _ in range(500):
        p = _random_sample(rng)
        q = _random_sample(rng)
        w = _random_sample(rng)
        assert compose_proto(PROTO_IDENTITY, p) == p
        assert compose_proto(p, PROTO_IDENTITY) == p
        assert compose_proto(p, invert_proto(p)) == PROTO_IDENTITY
        assert compose_proto(invert_proto(p), p) == PROTO_IDENTITY
        lhs = compose_proto(compose_proto(p, q), w)
        rhs = compose_proto(p, compose_proto(q, w))
        assert lhs == rhs


def test_compose_negative_lambda_swap():
    mu = ProtoTransitionSample(Fraction(5), Fraction(7),
                               AffineMap(1, 1), AffineMap(2, 0))
    lam = ProtoTransitionSample(Fraction(-1), Fraction(-2),
                                AffineMap(1, 0), AffineMap(1, 0))
    out = compose_proto(mu, lam)
    assert (out.lambda1, out.lambda2) == (-7, -10)  # (lam1*mu2, lam2*mu1)


def test_action_compatibility():
    rng = random.Random(13)
    d = 3
    for _ in range(200):
        g1 = Poly([rng.randint(-3, 3) for _ in range(rng.randint(1, 5))]
                  + [rng.choice([-2, 1])])
        g2 = Poly([rng.randint(-3, 3) for _ in range(rng.randint(1, 5))]
                  + [rng.choice([1, 2])])
        p2 = _random_sample(rng)
        p1 = _random_sample(rng)
        step = act_on_pair(*act_on_pair(g1, g2, p2, d), p1, d)
        combined = act_on_pair(g1, g2, compose_proto(p2, p1), d)
        assert step == combined


# -- beta-transition checks ------------------------------------------------

def test_beta_transition_paper_example():
    direct, _ = pairing_search(FP, FM, GP, GM)
    c = rat(Fraction(81, 16))
    char, limit = is_beta_transition(direct, c, c, 1, Beta(3, 2), 7,
                                     FP.lc, FM.lc, GP.lc, GM.lc)
    assert char and limit


def test_beta_transition_unequal_constants_with_x_factor():
    # f+- = +-t^2: every c > 0 is admissible, so force c1 != c2
    fp, fm = Poly([0, 0, 1]), Poly([0, 0, -1])
    direct, _ = pairing_search(fp, fm, fp, fm)
    char, limit = is_beta_transition(direct, rat(1), rat(2), 2, Beta(3, 2), 8,
                                     fp.lc, fm.lc, fp.lc, fm.lc)
    assert not char and not limit
    # same choice but equal constants passes
    char, limit = is_beta_transition(direct, rat(2), rat(2), 2, Beta(3, 2), 8,
                                     fp.lc, fm.lc, fp.lc, fm.lc)
    assert char and limit


def test_beta_transition_incoherent_orientations():
    # phi1 only decreasing, phi2 only increasing -> no coherent choice
    f = Poly([0, -3, 0, 1])          # t^3 - 3t, symbol ((2,-2),(2,2))
    f_flip = Poly([0, 3, 0, -1])     # f(-t)
    direct, _ = pairing_search(f, f, f_flip, f)
    assert direct is not None and direct.is_live()
    assert direct.phi1_orientations == frozenset({DEC})
    assert direct.phi2_orientations == frozenset({INC})
    char, limit = is_beta_transition(direct, rat(1), rat(1), 0, Beta(3, 2), 6,
                                     f.lc, f.lc, f_flip.lc, f.lc)
    assert not char and not limit


def test_beta_transition_constants_must_be_admissible():
    direct, _ = pairing_search(FP, FM, GP, GM)
    with pytest.raises(DomainError):
        is_beta_transition(direct, rat(2), rat(2), 1, Beta(3, 2), 7,
                           FP.lc, FM.lc, GP.lc, GM.lc)


def _scaled_copy(F, kappa, rng):
    """G with g_pm(t) = kappa * f_pm(t / 2^r): an honest pairing with
    c1 = c2 = kappa."""
    r, s = F.beta.r, F.beta.s
    sigma = Fraction(2) ** r
    return QuasiHomogPoly(F.beta, F.d,
                          tuple(kappa * a / sigma ** (s * k)
                                for k, a in enumerate(F.coeffs)))


def test_characterization_limit_agreement_random():
    rng = random.Random(14)
    betas = [Beta(3, 2), Beta(2, 1), Beta(5, 2), Beta(3, 1)]
    checked = 0
    while checked < 60:
        beta = rng.choice(betas)
        m = rng.randint(1, 2)
        d = beta.r * m + rng.randint(0, 3)
        coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(m)]
        coeffs.append(Fraction(rng.choice([-2, -1, 1, 2])))
        F = QuasiHomogPoly(beta, d, tuple(coeffs))
        kappa = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        G = _scaled_copy(F, kappa, rng)
        fp, fm = height_functions(F)
        gp, gm = height_functions(G)
        if fp.is_constant():
            continue
        direct, _ = pairing_search(fp, fm, gp, gm)
        assert direct is not None and direct.is_live()
        e = F.d - beta.r * F.m
        # admissible choices, equal and (where allowed) unequal
        picks = [(rat(kappa), rat(kappa))]
        if direct.c1.kind == "AllPositive" and direct.c2.kind == "AllPositive":
            picks.append((rat(kappa), rat(2 * kappa)))
        for c1, c2 in picks:
            if not (direct.c1.contains(c1) and direct.c2.contains(c2)):
                continue
            char, limit = is_beta_transition(
                direct, c1, c2, e, beta, F.d, fp.lc, fm.lc, gp.lc, gm.lc)
            assert char == limit
            checked += 1
