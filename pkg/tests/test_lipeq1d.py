import random
from fractions import Fraction

import pytest

from lipsqh.algnum import AlgebraicNumber, compare
from lipsqh.lipeq1d import (
    ConstantSet,
    critical_points,
    equivalence_1d,
    multiplicity_symbol,
    symbols_similarity,
)
from lipsqh.polyarith import DomainError, Poly

FP = Poly([16, 0, 8, 0, 1])    # t^4 + 8t^2 + 16
GP = Poly([81, 0, 18, 0, 1])
FM = Poly([-16, 0, 8, 0, -1])  # -t^4 + 8t^2 - 16
GM = Poly([-81, 0, 18, 0, -1])


def rat(x):
    return AlgebraicNumber.from_rational(Fraction(x))


def test_critical_points_single_minimum():
    crit = critical_points(FP)
    assert [(t.rat, m) for t, m in crit.points] == [(0, 2)]


def test_critical_points_three():
    crit = critical_points(FM)
    assert [(t.rat, m) for t, m in crit.points] == [(-2, 2), (0, 2), (2, 2)]


def test_critical_points_cubic_inflection():
    crit = critical_points(Poly([0, 0, 0, 1]))  # t^3
    assert [(t.rat, m) for t, m in crit.points] == [(0, 3)]


def test_critical_points_constant_rejected():
    with pytest.raises(DomainError):
        critical_points(Poly([5]))


def test_symbol_paper_pair():
    A = multiplicity_symbol(FM)
    assert [v.rat for v in A.values] == [0, -16, 0]
    assert A.mults == (2, 2, 2)
    B = multiplicity_symbol(GM)
    assert [v.rat for v in B.values] == [0, -81, 0]
    assert B.mults == (2, 2, 2)


def test_symbol_odd_cubic():
    A = multiplicity_symbol(Poly([0, -3, 0, 1]))  # t^3 - 3t
    assert [v.rat for v in A.values] == [2, -2]
    assert A.mults == (2, 2)


def test_symbol_needs_two_critical_points():
    with pytest.raises(DomainError):
        multiplicity_symbol(FP)


def test_similarity_paper_palindrome():
    A = multiplicity_symbol(FM)
    B = multiplicity_symbol(GM)
    direct, reverse = symbols_similarity(A, B)
    c = Fraction(81, 16)
    assert direct.kind == "Finite" and direct.members[0].rat == c
    assert reverse.kind == "Finite" and reverse.members[0].rat == c


def test_similarity_reversed_signs():
    A = multiplicity_symbol(Poly([0, -3, 0, 1]))   # values (2, -2)
    B = multiplicity_symbol(Poly([0, 3, 0, -1]))   # -t^3+3t: values (-2, 2)
    direct, reverse = symbols_similarity(A, B)
    assert direct.kind == "Empty"
    assert reverse.kind == "Finite" and reverse.members[0].rat == 1


def test_similarity_incompatible_ratios():
    A = multiplicity_symbol(Poly([0, -3, 0, 1]))
    # scale to values (12, -8): no single positive c, either order
    B_vals = (rat(12), rat(8))
    from lipsqh.lipeq1d import MultiplicitySymbol
    B = MultiplicitySymbol(B_vals, (2, 2))
    direct, reverse = symbols_similarity(A, B)
    assert direct.kind == "Empty" and reverse.kind == "Empty"


def test_equivalence_paper_heights():
    v = equivalence_1d(FP, GP)
    assert v.equivalent
    assert v.direct.members[0].rat == Fraction(81, 16)
    assert v.reverse.members[0].rat == Fraction(81, 16)


def test_equivalence_sign_obstruction():
    v = equivalence_1d(Poly([0, 0, 1]), Poly([1, 0, 1]))  # t^2 vs t^2+1
    assert not v.equivalent
    assert v.direct.kind == "Empty" and v.reverse.kind == "Empty"


def test_equivalence_two_cubics():
    v = equivalence_1d(Poly([0, -3, 0, 1]), Poly([0, -12, 0, 1]))
    assert v.equivalent
    assert v.direct.members[0].rat == 8


def test_equivalence_constants():
    v = equivalence_1d(Poly([3]), Poly([5]))
    assert v.equivalent and v.direct.members[0].rat == Fraction(5, 3)
    v = equivalence_1d(Poly([3]), Poly([-1]))
    assert not v.equivalent
    with pytest.raises(DomainError):
        equivalence_1d(Poly.zero(), Poly([1, 1]))


def test_equivalence_monotone_orientations():
    # both strictly increasing, no critical points
    v = equivalence_1d(Poly([0, 1, 0, 1]), Poly([1, 3, 0, 2]))
    assert v.equivalent
    assert v.direct.kind == "AllPositive" and v.reverse.kind == "Empty"
    w = equivalence_1d(Poly([0, 1, 0, 1]), Poly([0, -1, 0, -1]))
    assert w.equivalent
    assert w.direct.kind == "Empty" and w.reverse.kind == "AllPositive"


def test_monotone_vs_inflection_not_equivalent():
    # t^3 + t has multiplicity 1 everywhere, t^3 has multiplicity 3 at 0
    assert not equivalence_1d(Poly([0, 1, 0, 1]), Poly([0, 0, 0, 1])).equivalent


def test_equivalence_single_extremum_even_degree():
    v = equivalence_1d(Poly([1, 0, 1]), Poly([5, 0, 2]))  # t^2+1 vs 2t^2+5
    assert v.equivalent
    assert v.direct.members[0].rat == 5
    assert v.reverse.members[0].rat == 5  # reflection also works
    w = equivalence_1d(Poly([1, 0, 1]), Poly([-5, 0, -2]))  # min vs max
    assert not w.equivalent


def test_equivalence_zero_critical_values_any_constant():
    v = equivalence_1d(Poly([0, 0, 1]), Poly([0, 0, 2]))  # t^2 vs 2t^2
    assert v.equivalent
    assert v.direct.kind == "AllPositive"
    assert v.reverse.kind == "AllPositive"


def test_equivalence_single_critical_point_odd_degree():
    # t^3 + inflection-only pair with value signs agreeing
    f = Poly([1, 0, 0, 1])   # t^3 + 1, crit value 1 at t=0
    g = Poly([5, 0, 0, 2])   # 2t^3 + 5, crit value 5
    v = equivalence_1d(f, g)
    assert v.equivalent
    assert v.direct.members[0].rat == 5
    assert v.reverse.kind == "Empty"


def test_equivalence_degree_mismatch():
    assert not equivalence_1d(Poly([0, 1]), Poly([0, 0, 1])).equivalent
    assert not equivalence_1d(Poly([3]), Poly([0, 1])).equivalent


def test_reflexivity_direct_contains_one():
    rng = random.Random(7)
    one = rat(1)
    for _ in range(15):
        deg = rng.randint(1, 6)
        f = Poly([rng.randint(-4, 4) for _ in range(deg)]
                 + [rng.choice([-2, -1, 1, 2])])
        v = equivalence_1d(f, f)
        assert v.equivalent
        assert v.direct.contains(one)


def test_symmetry_constants_invert():
    rng = random.Random(8)
    for _ in range(10):
        deg = rng.randint(2, 5)
        f = Poly([rng.randint(-4, 4) for _ in range(deg)]
                 + [rng.choice([-2, -1, 1, 2])])
        g = Poly([rng.randint(-4, 4) for _ in range(deg)]
                 + [rng.choice([-2, -1, 1, 2])])
        v = equivalence_1d(f, g)
        w = equivalence_1d(g, f)
        assert v.equivalent == w.equivalent
        if v.direct.kind == "Finite":
            assert w.direct.kind == "Finite"
            inv = {1 / m.rat for m in v.direct.members if m.rat}
            assert inv == {m.rat for m in w.direct.members if m.rat}


def test_affine_conjugation_small_sample():
    rng = random.Random(9)
    for _ in range(10):
        deg = rng.randint(2, 6)
        f = Poly([rng.randint(-5, 5) for _ in range(deg)]
                 + [rng.choice([-2, -1, 1, 2])])
        a = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2]))
        b = Fraction(rng.randint(-3, 3))
        c = Fraction(rng.randint(1, 9), rng.randint(1, 3))
        g = f.compose(Poly((-b / a, 1 / a))).scale(c)
        v = equivalence_1d(f, g)
        assert v.equivalent
        target = v.direct if a > 0 else v.reverse
        assert target.contains(rat(c))


def test_constant_set_algebra():
    s2 = ConstantSet.finite(rat(2))
    s23 = ConstantSet.finite(rat(2), rat(3))
    allp = ConstantSet.all_positive()
    empty = ConstantSet.empty()
    assert s2.intersect(s23).members[0].rat == 2
    assert allp.intersect(s23) is s23 or allp.intersect(s23).members == s23.members
    assert empty.intersect(allp).kind == "Empty"
    assert s2.union(ConstantSet.finite(rat(3))).members == s23.members
    assert len(ConstantSet.finite(rat(2), rat(2)).members) == 1


def test_constant_sets_small_and_positive():
    rng = random.Random(10)
    for _ in range(10):
        deg = rng.randint(2, 5)
        f = Poly([rng.randint(-4, 4) for _ in range(deg)]
                 + [rng.choice([-2, -1, 1, 2])])
        g = Poly([rng.randint(-4, 4) for _ in range(deg)]
                 + [rng.choice([-2, -1, 1, 2])])
        v = equivalence_1d(f, g)
        for cs in (v.direct, v.reverse):
            if cs.kind == "Finite":
                assert len(cs.members) <= 2
                for m in cs.members:
                    assert m.sign() > 0
