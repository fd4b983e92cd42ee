from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from pellfrac.polyring import Poly, UnsupportedQuartic, is_squarefree, poly_gcd, poly_part_sqrt
from pellfrac.qfield import QuadElem

from conftest import rationals

x = Poly.x()
X = sp.Symbol("x")


def P(*high):
    return Poly.from_high([Fraction(c) for c in high])


def test_divmod_example():
    u, w = Fraction(3), Fraction(-2, 5)
    q, r = divmod(x * x + u, x + w)
    assert q == x - w and r == Poly.const(u + w * w)


def test_basic_examples():
    assert (x - 1) * (x + 1) == x * x - 1
    f = P(1, 0, 4, -32, 4)
    assert f + Poly([]) == f
    assert Poly([0, 0]).degree == -1


def test_gcd_examples():
    assert poly_gcd(x * x - 1, x - 1) == x - 1
    assert poly_gcd(x * x + 1, x * x + 2) == Poly.const(1)
    f = P(3, 0, 6, 9)
    assert poly_gcd(f, f) == f.monic()


def test_squarefree_examples():
    assert is_squarefree(x ** 4 + 1)
    assert not is_squarefree((x - 1) ** 2 * (x + 2))
    assert is_squarefree((x * x + 2) ** 2 - 32 * x)


def test_poly_part_sqrt_examples():
    assert poly_part_sqrt((x * x + 3) ** 2 - 4 * x) == x * x + 3
    assert poly_part_sqrt(x ** 4 + 1) == x * x
    assert poly_part_sqrt(P(4, 4, 1, 1, 0)) == P(2, 1, 0)


def test_poly_part_sqrt_needs_square_lead():
    with pytest.raises(UnsupportedQuartic):
        poly_part_sqrt(P(2, 0, 0, 0, 1))


def test_eval_examples():
    g = P(1, -2, 1, -2, 6, -4, 1)
    assert g(QuadElem(2)) == 17
    assert P(1, -3, 1)(QuadElem(2)) == -1
    assert g(QuadElem(0)) == 1


def test_quadratic_coefficients():
    r = QuadElem.sqrt_d(17)
    f = Poly([r, 1])
    assert (f * f) == Poly([17, 2 * r, 1], 17)
    assert f.d == 17


# properties -------------------------------------------------------------------

polys = st.lists(rationals, min_size=1, max_size=6).map(Poly)
nonzero_polys = polys.filter(lambda p: p.degree >= 0)


def to_sympy(p: Poly):
    return sp.Poly([sp.Rational(c.a.numerator, c.a.denominator) for c in reversed(p.coeffs)] or [0], X, domain="QQ")


@given(polys, nonzero_polys)
def test_divmod_reconstructs(f, g):
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@settings(max_examples=25)
@given(polys, nonzero_polys)
def test_divmod_matches_sympy(f, g):
    q, r = divmod(f, g)
    sq, sr = sp.div(to_sympy(f), to_sympy(g))
    assert to_sympy(q) == sq and to_sympy(r) == sr


@settings(max_examples=25)
@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both_and_matches_sympy(f, g):
    h = poly_gcd(f, g)
    assert not f % h and not g % h
    assert to_sympy(h) == sp.gcd(to_sympy(f), to_sympy(g)).monic()


@given(st.lists(rationals, min_size=4, max_size=4), st.sampled_from([1, 4, Fraction(9, 4)]))
def test_part_sqrt_remainder_is_linear(low, lead):
    f = Poly(low + [Fraction(lead)])
    A = poly_part_sqrt(f)
    assert (f - A * A).degree <= 1


def test_pickle_round_trip():
    import pickle

    f = Poly([QuadElem(1, 2, 5), 0, Fraction(1, 3)])
    assert pickle.loads(pickle.dumps(f)) == f
    assert pickle.loads(pickle.dumps(f.coeffs[0])) == QuadElem(1, 2, 5)
