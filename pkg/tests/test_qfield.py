import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pellfrac.qfield import (
    FieldError,
    QuadElem,
    canonical_field,
    conj_norm,
    enumerate_elements,
    enumerate_rationals,
    from_json,
    height,
    parse_elem,
    qf_sqrt,
    rat_sqrt,
    to_json,
)

from conftest import element_pairs, elements

R2 = QuadElem.sqrt_d(2)
R3 = QuadElem.sqrt_d(3)
R5 = QuadElem.sqrt_d(5)
I = QuadElem.sqrt_d(-1)


@pytest.mark.parametrize("d, kernel, square", [(17, 17, 1), (12, 3, 4), (-4, -1, 4), (1, 1, 1), (-28, -7, 4)])
def test_canonical_field(d, kernel, square):
    assert canonical_field(d) == (kernel, square)


def test_canonical_field_rejects_zero():
    with pytest.raises(FieldError):
        canonical_field(0)


def test_tag_normalized_at_construction():
    z = QuadElem(1, 1, 12)
    assert (z.d, z.b) == (3, 2)
    assert QuadElem(0, 1, -4) == 2 * I


def test_arithmetic_examples():
    assert (1 + R2) * (1 - R2) == -1
    assert (Fraction(1, 2) + R5) + (Fraction(1, 2) - R5) == 1
    assert 1 / (2 + R3) == 2 - R3


def test_conj_norm_examples():
    assert conj_norm(3 + 4 * I) == (3 - 4 * I, 25)
    seven = QuadElem(7, 0, 5)
    assert conj_norm(seven) == (seven, 49)
    assert conj_norm(2 + R3) == (2 - R3, 1)


def test_rat_sqrt_examples():
    assert rat_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rat_sqrt(2) is None
    assert rat_sqrt(Fraction(24696, 1764)) is None
    assert rat_sqrt(-4) is None


def test_qf_sqrt_examples():
    assert qf_sqrt(7 + 4 * R3) == 2 + R3
    assert qf_sqrt(QuadElem(3, 0, 5)) is None
    assert qf_sqrt(QuadElem(8, 0, 2)) == 2 * R2
    assert qf_sqrt(QuadElem(8)) is None
    # a rational element re-tagged into a field
    assert qf_sqrt(8, 2) == 2 * R2
    assert qf_sqrt(-7, -7) == QuadElem.sqrt_d(-7)


def test_mixed_fields_raise_but_rationals_promote():
    with pytest.raises(FieldError):
        R2 + R3
    assert (QuadElem(3) + R2).d == 2


def test_enumerate_elements_examples():
    assert list(enumerate_elements(1, 1)) == [0, 1, -1]
    e2 = list(enumerate_elements(2, 1))
    assert len(e2) == 9 and len(set(e2)) == 9
    assert set(e2) == {QuadElem(a, b, 2) for a in (-1, 0, 1) for b in (-1, 0, 1)}
    assert sorted(enumerate_rationals(2)) == sorted(map(Fraction, ["0", "1", "-1", "2", "-2", "1/2", "-1/2"]))


def test_enumeration_is_height_ordered():
    hs = [height(z) for z in enumerate_elements(5, 4)]
    assert hs == sorted(hs)


@pytest.mark.parametrize("text, want", [
    ("3/4", QuadElem(Fraction(3, 4))),
    ("1/2 + 3 * sqrt(5)", Fraction(1, 2) + 3 * R5),
    ("-sqrt(17)", -QuadElem.sqrt_d(17)),
    ("-3/2-1/2*sqrt(33)", QuadElem(Fraction(-3, 2), Fraction(-1, 2), 33)),
    ("sqrt(8)", 2 * R2),
])
def test_parse_elem(text, want):
    assert parse_elem(text) == want


def test_parse_elem_rejects_garbage_and_wrong_field():
    with pytest.raises(ValueError):
        parse_elem("x+1")
    with pytest.raises(ValueError):
        parse_elem("sqrt(3)", 2)


def test_json_shape():
    z = Fraction(1, 2) + 3 * R5
    assert to_json(z) == {"a": "1/2", "b": "3", "d": 5}
    assert from_json(json.dumps(to_json(z))) == z


# properties -------------------------------------------------------------------

@given(element_pairs())
def test_norm_and_conj_multiplicative(zw):
    z, w = zw
    assert (z * w).norm() == z.norm() * w.norm()
    assert (z * w).conj() == z.conj() * w.conj()


@given(elements())
def test_sqrt_of_square(z):
    r = qf_sqrt(z * z)
    assert r is not None and r * r == z * z
    assert r in (z, -z)


@given(elements())
def test_sqrt_is_sound(z):
    r = qf_sqrt(z)
    if r is not None:
        assert r * r == z
        assert r.a > 0 or (r.a == 0 and r.b >= 0)


@given(element_pairs(nonzero_second=True))
def test_division_round_trips(zw):
    z, w = zw
    assert (z / w) * w == z


@given(elements())
def test_hash_consistent_with_equality(z):
    assert hash(z) == hash(QuadElem(z.a, z.b, z.d))
    if z.d == 1:
        assert hash(z) == hash(z.a) and z == z.a


@given(elements())
def test_json_round_trip(z):
    assert from_json(to_json(z)) == z
    assert parse_elem(str(z)) == z


def test_sqrt_agrees_with_brute_force_small_grid():
    # the full height-8 sweep lives in the acceptance suite; this one is quick
    for d in (3, -7):
        grid = list(enumerate_elements(d, 3))
        squares = {r * r for r in grid}
        for z in grid:
            r = qf_sqrt(z)
            assert (r is not None) == (z in squares) or (r is not None and r * r == z)
