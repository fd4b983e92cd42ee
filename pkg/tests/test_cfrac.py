from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pellfrac.acceptance import expansion_properties
from pellfrac.cfrac import (
    CFStep,
    DegenerateParameters,
    StructureError,
    cf_step,
    convergents,
    expand_sqrt,
    period,
    quasi_period,
    sb_sequences,
    scaled_expand,
)
from pellfrac.ecurve import infinity_order
from pellfrac.families import FamilySpec, InadmissibleParameters, family_quartic
from pellfrac.polyring import Poly
from pellfrac.qfield import QuadElem, parse_elem

x = Poly.x()


def first(f, a0):
    return CFStep(0, Poly([]), Poly([1]), a0)


def fam(tag, t, s=None):
    return family_quartic(FamilySpec(tag, t, s)).model


def test_first_step_examples():
    st1 = cf_step(x ** 4 + 1, first(x ** 4 + 1, x * x), x * x)
    assert (st1.P, st1.Q, st1.a) == (x * x, Poly([1]), 2 * x * x)
    st1 = cf_step(x ** 4 + 4, first(x ** 4 + 4, x * x), x * x)
    assert (st1.P, st1.Q, st1.a) == (x * x, Poly([4]), x * x * Fraction(1, 2))
    f = (x * x + 2) ** 2 - 32 * x
    st1 = cf_step(f, first(f, x * x + 2), x * x + 2)
    assert (st1.P, st1.Q, st1.a) == (x * x + 2, -32 * x, x * Fraction(-1, 16))


def test_small_expansions():
    e = expand_sqrt(x ** 4 + 1)
    assert (e.period, e.quasi_period, e.k) == (1, 1, 1)
    e = expand_sqrt(x ** 4 + 4)
    assert (e.period, e.quasi_period, e.k) == (2, 1, 4)
    assert quasi_period(e) == (1, 4)
    assert period(x ** 4 + 1) == 1


def test_order6_quartic_has_period_10():
    # (x^2+2)^2 + 8x is the order-6 model at t = 1
    f = (x * x + 2) ** 2 + 8 * x
    e = expand_sqrt(f)
    assert (e.period, e.quasi_period, e.k) == (10, 5, 4)


def test_nonperiodic_is_an_outcome_not_an_error():
    # (x^2+2)^2 - 32x: inf+ - inf- has infinite order
    e = expand_sqrt((x * x + 2) ** 2 - 32 * x, max_steps=60)
    assert e.period is None and e.quasi_period is None
    assert len(e.steps) == 61


def test_perfect_square_is_a_structure_error():
    with pytest.raises(StructureError):
        expand_sqrt((x * x + 1) ** 2)


def test_order10_and_order12_families():
    e = expand_sqrt(fam("ord10", 2).f)
    assert (e.period, e.quasi_period, e.k) == (18, 9, 8)
    e = expand_sqrt(fam("ord12", 2).f)
    assert (e.period, e.quasi_period, e.k) == (22, 11, 24696)


def test_scaled_examples():
    assert scaled_expand(x ** 4 + 4, Fraction(1, 2)).period == 1
    f = fam("ord10", 2).f
    assert scaled_expand(f, parse_elem("1/4*sqrt(2)")).period == 9
    plain, same = expand_sqrt(f), scaled_expand(f, 1)
    assert plain.quotients == same.quotients and plain.period == same.period


def test_convergents():
    e = expand_sqrt(x ** 4 + 1)
    assert convergents(e, 0) == (x * x, Poly([1]))
    assert convergents(e, 1) == (2 * x ** 4 + 1, 2 * x * x)
    e = expand_sqrt(fam("ord10", 2).f)
    for h in range(1, 10):
        p1, q1 = convergents(e, h)
        p0, q0 = convergents(e, h - 1)
        assert p1 * q0 - p0 * q1 == Poly([(-1) ** (h + 1)])


def test_convergents_solve_pell_at_quasi_period():
    # p^2 - f q^2 is the constant (-1)^r Q_{r+1} at h = r - 1
    e = expand_sqrt(fam("ord10", 2).f)
    p, q = convergents(e, e.quasi_period - 1)
    assert (p * p - e.f * q * q).degree == 0


def test_sb_examples():
    with pytest.raises(DegenerateParameters):
        sb_sequences(1, 3, Fraction(1, 2), 4)
    s, b = sb_sequences(2, 8, 0, 6)
    assert s[2] == 1 and s[3] == 8
    u, v, w = 5, -7, Fraction(2, 3)
    assert sb_sequences(u, v, w, 3)[0][3] == v / (1 - 2 * w)


@pytest.mark.parametrize("tag, t", [("ord10", 2), ("per14_i", 3), ("per10_i", 2), ("ord12", 3)])
def test_generic_first_quotients(tag, t):
    M = fam(tag, t)
    e = expand_sqrt(M.f)
    a1 = e.quotient(1)
    assert -a1[0] / a1[1] == M.w
    assert a1.lead == -1 / (2 * M.v)
    _, b = sb_sequences(M.u, M.v, M.w, 3)
    # the tabulated b_h match the leading coefficients only at h = 2, 3
    for h in (2, 3):
        assert e.quotient(h).lead * b[h] / 2 == 1


def test_property_checker_catches_corruption():
    e = expand_sqrt(fam("ord10", 2).f)
    assert expansion_properties(e, 10, QuadElem(3)) == []
    st2 = e.steps[2]
    e.steps[2] = CFStep(2, st2.P, st2.Q, st2.a * 2)
    assert expansion_properties(e, 10) != []
    e = expand_sqrt(fam("ord10", 2).f)
    assert expansion_properties(e, 11)  # wrong order


@settings(max_examples=15)
@given(st.sampled_from(["ord10", "ord12", "per10_i", "per14_i"]),
       st.builds(Fraction, st.integers(-12, 12), st.integers(1, 9)))
def test_structure_on_one_parameter_families(tag, t):
    try:
        M = fam(tag, t)
    except InadmissibleParameters:
        return
    e = expand_sqrt(M.f)
    n = infinity_order(M)
    assert expansion_properties(e, n, QuadElem(Fraction(5, 3))) == []
