import copy
import random
from fractions import Fraction

import pytest

from pellfrac import _tables, families
from pellfrac.acceptance import _curve_points, sample_instances
from pellfrac.cfrac import expand_sqrt
from pellfrac.ecurve import QuarticModel, infinity_order
from pellfrac.families import (
    CertificateMismatch,
    FamilySpec,
    InadmissibleParameters,
    alpha_poly,
    eval_bivariate,
    family_k,
    family_quartic,
    odd_period_certificate,
    tate_params,
)
from pellfrac.modcurve import ModCurvePoint
from pellfrac.qfield import QuadElem, enumerate_rationals, parse_elem, qf_sqrt

S33 = parse_elem("-3/2+1/2*sqrt(33)")


def test_tate_params_examples():
    assert tate_params(10, 2) == (24, 6)
    # order 8: b = (t-1)(2t-1), c = b/t
    assert tate_params(8, 2) == (3, Fraction(3, 2))
    with pytest.raises(InadmissibleParameters, match=r"t\*\(t-1\)\*\(2t-1\)\*\(t\^2-3t\+1\) != 0"):
        tate_params(10, 1)


def test_order6_family_at_t1():
    fam = family_quartic(FamilySpec("per10_i", 1))
    assert (fam.b, fam.c) == (2, 1)
    assert fam.model == QuarticModel(2, -2, 0)
    assert fam.printed == QuarticModel(2, 8, 0) and not fam.agree
    assert expand_sqrt(fam.model.f).period == 10 and infinity_order(fam.model) == 6


def test_order8_family_at_t2():
    fam = family_quartic(FamilySpec("per14_i", 2))
    assert fam.model == QuarticModel(Fraction(47, 16), -3, Fraction(-1, 4))
    assert fam.printed == QuarticModel(Fraction(47, 16), 3, Fraction(-1, 4))
    assert expand_sqrt(fam.model.f).period == 14


def test_period12_model_over_q_sqrt17():
    fam = family_quartic(FamilySpec("per12_X13", 2, parse_elem("sqrt(17)")))
    # the x^2 coefficient of the printed example quartic is 2u with u as below
    assert fam.model.u == -3 * parse_elem("219/8192+221/8192*sqrt(17)")
    assert fam.printed.u == fam.model.u and fam.printed.w == fam.model.w
    assert fam.printed.v == -fam.model.v


def test_family_k_examples():
    assert family_k("ord10", 2) == 8
    assert family_k("ord12", 2) == 24696 == 42 ** 2 * 14
    with pytest.raises(InadmissibleParameters):
        family_k("ord10", 1)


def test_family_k_matches_expansion():
    pts = [t for t in enumerate_rationals(5) if t not in (0, 1, Fraction(1, 2))][:12]
    for tag in ("ord10", "ord12"):
        checked = 0
        for t in pts:
            try:
                fam = family_quartic(FamilySpec(tag, t))
            except InadmissibleParameters:
                continue
            assert expand_sqrt(fam.model.f).k == family_k(tag, t)
            checked += 1
        assert checked >= 10


def test_every_tag_has_its_torsion_order():
    specs = sample_instances(random.Random(11), per_tag=5)
    by_tag = {}
    for spec in specs:
        fam = family_quartic(spec)
        n = infinity_order(fam.model)
        assert n == spec.order <= 18
        per = expand_sqrt(fam.model.f).period
        assert per in (n - 1, 2 * (n - 1))
        by_tag[spec.tag] = by_tag.get(spec.tag, 0) + 1
    assert set(by_tag) == set(families.TAGS)
    assert min(by_tag.values()) >= 5


# certificates -------------------------------------------------------------------

def _raw_alpha(n, t, s):
    out = QuadElem(1)
    for fac in _tables.ALPHA_FACTORS[n]:
        out = out * eval_bivariate(fac, QuadElem(t), QuadElem(s))
    return out


@pytest.mark.parametrize("n, t, s, value", [
    (13, 2, 3, -468720),
    (15, 2, 3, 36122364277369898367424431),
    (17, 2, 3, 1016109789716066163655680),
    (13, 3, -2, -1507292634624),
    (15, 3, -2, 80337820083435532797474470562365440),
    (17, 3, -2, 59320567007861811657232269257280),
])
def test_alpha_table_checksums(n, t, s, value):
    assert _raw_alpha(n, t, s) == value


def test_alpha_term_counts():
    import sympy as sp

    T, S = sp.symbols("t s")
    for n, count in ((13, 175), (15, 510), (17, 454)):
        expr = sp.Integer(1)
        for fac in _tables.ALPHA_FACTORS[n]:
            expr *= sum(sp.Rational(str(c)) * T ** i * S ** j for i, j, c in fac)
        assert len(sp.Poly(sp.expand(expr), T, S).terms()) == count


def test_alpha_examples():
    with pytest.raises(InadmissibleParameters):
        alpha_poly(13, 1, 0)
    a = alpha_poly(13, 2, S33)
    assert a == parse_elem("-10916784+1900368*sqrt(33)")


def test_certificate_at_sqrt33_point():
    cert = odd_period_certificate(13, (2, S33))
    assert not cert.realizes and cert.mu is None
    assert cert.period == 26 and cert.scaled_period is None
    assert cert.k == parse_elem("-184/81-32/81*sqrt(33)")
    assert qf_sqrt(cert.k * cert.alpha, 33) is not None


def test_certificate_rejects_cusp():
    with pytest.raises(InadmissibleParameters):
        odd_period_certificate(13, ModCurvePoint.make(14, 0, 0))


@pytest.mark.parametrize("n", [13, 15, 17])
def test_alpha_and_k_share_a_square_class(n):
    pts = _curve_points(n + 1, [QuadElem(t) for t in enumerate_rationals(4)])[:6]
    assert len(pts) >= 3
    for p in pts:
        cert = odd_period_certificate(n, p)
        assert cert.period == 2 * n
        assert qf_sqrt(cert.alpha * cert.k, p.field) is not None


@pytest.mark.parametrize("drop", [1, 3, 7])
def test_corrupted_alpha_table_is_detected(monkeypatch, drop):
    broken = copy.deepcopy(_tables.ALPHA_FACTORS)
    del broken[13][drop]
    monkeypatch.setattr(_tables, "ALPHA_FACTORS", broken)
    with pytest.raises(CertificateMismatch):
        odd_period_certificate(13, (2, S33))


def test_corrupted_alpha_sign_flip_is_detected(monkeypatch):
    broken = copy.deepcopy(_tables.ALPHA_FACTORS)
    i, j, c = broken[13][7][0]
    broken[13][7][0] = (i, j, -c)
    monkeypatch.setattr(_tables, "ALPHA_FACTORS", broken)
    with pytest.raises(CertificateMismatch):
        odd_period_certificate(13, (2, S33))
