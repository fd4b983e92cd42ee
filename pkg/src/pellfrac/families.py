"""Parametrized families of periodic quartics and odd-period certificates.

Each family tag carries Tate normal form parameters ``(b, c)`` as functions of
``t`` (and ``s`` on a modular curve), plus the printed quartic coefficients
``(u, v, w)``. The quartic actually used for orders and periods is the one
composed from ``(b, c)``; the printed one is kept as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import _tables
from . import modcurve
from .cfrac import CFExpansion, DEFAULT_MAX_STEPS, expand_sqrt, scaled_expand
from .ecurve import (
    CurveError,
    QuarticModel,
    SingularCurve,
    TateCurve,
    DEFAULT_ORDER_BOUND,
    infinity_order,
    quartic_from_point,
    tate_to_short,
)
from .qfield import QuadElem, qf_sqrt, to_json

__all__ = [
    "TAGS",
    "TAG_ORDER",
    "TAG_CURVE",
    "ORDER_TAG",
    "ODD_PERIOD_TAG",
    "InadmissibleParameters",
    "CertificateMismatch",
    "FamilySpec",
    "FamilyModel",
    "OddPeriodCertificate",
    "eval_bivariate",
    "eval_formula",
    "tate_params",
    "family_quartic",
    "family_k",
    "alpha_poly",
    "odd_period_certificate",
]

TAG_ORDER = {
    "ord10": 10,
    "ord12": 12,
    "per10_i": 6,
    "per10_X11": 11,
    "per12_X13": 13,
    "per14_i": 8,
    "per14_X15": 15,
    "per26_X14": 14,
    "per30_X16": 16,
    "per34_X18": 18,
}
TAGS = tuple(TAG_ORDER)
ORDER_TAG = {n: tag for tag, n in TAG_ORDER.items()}
TAG_CURVE = {
    "per10_X11": 11,
    "per12_X13": 13,
    "per14_X15": 15,
    "per26_X14": 14,
    "per30_X16": 16,
    "per34_X18": 18,
}
ODD_PERIOD_TAG = {13: "per26_X14", 15: "per30_X16", 17: "per34_X18"}

# Nonvanishing products for the one-parameter families, highest degree first.
_T_CONDITIONS = {
    "ord10": [[1, 0], [1, -1], [2, -1], [1, -3, 1]],
    "ord12": [[1, 0], [1, -1], [2, -1], [2, -2, 1], [3, -3, 1]],
    "per10_i": [[1, 0], [1, 1], [3, 6, -1]],
    "per14_i": [[1, 0], [1, -1], [2, -1]],
}


class InadmissibleParameters(ValueError):
    pass


class CertificateMismatch(ArithmeticError):
    """The k-square and alpha-square verdicts disagree."""


def _q(z) -> QuadElem:
    return z if isinstance(z, QuadElem) else QuadElem(Fraction(z))


def _coeff(c):
    return Fraction(c) if isinstance(c, str) else c


def eval_bivariate(terms, t: QuadElem, s: QuadElem) -> QuadElem:
    """Evaluate ``sum c t^i s^j`` given as ``(i, j, c)`` terms."""
    t, s = _q(t), _q(s)
    tp: dict[int, QuadElem] = {0: t * 0 + 1}
    sp: dict[int, QuadElem] = {0: s * 0 + 1}

    def tpow(i):
        if i not in tp:
            tp[i] = tpow(i - 1) * t
        return tp[i]

    def spow(j):
        if j not in sp:
            sp[j] = spow(j - 1) * s
        return sp[j]

    acc = t * 0 + s * 0
    for i, j, c in terms:
        acc = acc + tpow(i) * spow(j) * _coeff(c)
    return acc


def eval_formula(tag: str, key: str, t, s=0) -> QuadElem:
    rf = _tables.FAMILY_FORMULAS[tag][key]
    den = eval_bivariate(rf["den"], t, s)
    if not den:
        raise InadmissibleParameters(f"{tag}.{key}: denominator vanishes at t={t}, s={s}")
    return eval_bivariate(rf["num"], t, s) / den


def _horner(coeffs, t):
    acc = t * 0
    for c in coeffs:
        acc = acc * t + c
    return acc


def condition_text(tag: str) -> str:
    if tag in TAG_CURVE:
        return modcurve.condition_text(TAG_CURVE[tag])
    parts = []
    for f in _T_CONDITIONS[tag]:
        deg = len(f) - 1
        terms = []
        for i, c in enumerate(f):
            e = deg - i
            if not c:
                continue
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and abs(c) == 1:
                terms.append(("-" if c < 0 else "+") + mono)
            else:
                terms.append(f"{'+' if c > 0 else '-'}{abs(c)}{mono}")
        body = "".join(terms).lstrip("+")
        parts.append(body if len(terms) == 1 else f"({body})")
    return "*".join(parts) + " != 0"


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    t: QuadElem
    s: Optional[QuadElem] = None

    def __post_init__(self):
        if self.tag not in TAG_ORDER:
            raise ValueError(f"unknown family tag {self.tag!r}; choose from {TAGS}")
        object.__setattr__(self, "t", _q(self.t))
        if self.s is not None:
            object.__setattr__(self, "s", _q(self.s))
        if self.tag in TAG_CURVE and self.s is None:
            raise ValueError(f"{self.tag} needs a point (t, s) on X1({TAG_CURVE[self.tag]})")

    @property
    def order(self) -> int:
        return TAG_ORDER[self.tag]

    @property
    def field(self) -> int:
        for z in (self.t, self.s):
            if z is not None and z.d != 1:
                return z.d
        return 1

    def check(self) -> None:
        """Raise :class:`InadmissibleParameters` unless the parameters are usable."""
        t = self.t
        if self.tag in TAG_CURVE:
            N = TAG_CURVE[self.tag]
            if not modcurve.on_curve(N, t, self.s):
                raise InadmissibleParameters(f"({t}, {self.s}) is not on X1({N})")
            if not modcurve.admissible(N, t, self.s):
                raise InadmissibleParameters(
                    f"{self.tag} requires {modcurve.condition_text(N)}; fails at t={t}")
            return
        for f in _T_CONDITIONS[self.tag]:
            if not _horner(f, t):
                raise InadmissibleParameters(f"{self.tag} requires {condition_text(self.tag)}; fails at t={t}")


def tate_params(order: int, t, s=None) -> tuple[QuadElem, QuadElem]:
    """Tate normal form ``(b, c)`` for a point of the given order."""
    if order not in ORDER_TAG:
        raise ValueError(f"no parametrization for order {order}; choose from {sorted(ORDER_TAG)}")
    spec = FamilySpec(ORDER_TAG[order], t, s)
    spec.check()
    sv = spec.s if spec.s is not None else 0
    b = eval_formula(spec.tag, "b", spec.t, sv)
    c = eval_formula(spec.tag, "c", spec.t, sv)
    try:
        tate_to_short(TateCurve(b, c))
    except SingularCurve as exc:
        raise InadmissibleParameters(str(exc)) from exc
    return b, c


@dataclass
class FamilyModel:
    """Both quartic models of one family instance.

    ``model`` is the composed quartic (authoritative); ``printed`` is the
    tabulated ``(u, v, w)``. ``agree`` allows for the harmless ``x -> -x``
    symmetry between the two.
    """

    spec: FamilySpec
    b: QuadElem
    c: QuadElem
    model: QuarticModel
    printed: Optional[QuarticModel]
    agree: bool
    note: str = ""

    def to_json(self) -> dict:
        return {
            "tag": self.spec.tag,
            "t": to_json(self.spec.t),
            "s": None if self.spec.s is None else to_json(self.spec.s),
            "b": to_json(self.b),
            "c": to_json(self.c),
            "model": self.model.to_json(),
            "printed": None if self.printed is None else self.printed.to_json(),
            "printed_agrees": self.agree,
            "note": self.note,
        }


def _printed(spec: FamilySpec) -> Optional[QuarticModel]:
    sv = spec.s if spec.s is not None else 0
    try:
        u = eval_formula(spec.tag, "u", spec.t, sv)
        v = eval_formula(spec.tag, "v", spec.t, sv)
        w = eval_formula(spec.tag, "w", spec.t, sv)
        return QuarticModel(u, v, w)
    except (InadmissibleParameters, CurveError):
        return None


def family_quartic(spec: FamilySpec) -> FamilyModel:
    spec.check()
    b, c = tate_params(spec.order, spec.t, spec.s)
    E, P = tate_to_short(TateCurve(b, c))
    model = quartic_from_point(E, P)
    if not isinstance(model, QuarticModel):
        raise InadmissibleParameters("torsion point became 2-torsion")
    printed = _printed(spec)
    agree = printed is not None and (printed == model or printed == model.negate_x())
    note = ""
    if printed is None:
        note = "printed model undefined at these parameters"
    elif not agree:
        note = f"printed model {printed} differs from composed model {model}"
    return FamilyModel(spec, b, c, model, printed, agree, note)


def family_k(tag: str, t) -> QuadElem:
    """Closed-form quasi-period constant for the order 10 and 12 families."""
    if tag not in ("ord10", "ord12"):
        raise ValueError("closed-form k is tabulated for ord10 and ord12 only")
    FamilySpec(tag, t).check()
    return eval_formula(tag, "k", t)


def alpha_poly(n: int, t, s) -> QuadElem:
    """Evaluate the square-class certificate for odd period ``n`` at ``(t, s)``."""
    if n not in ODD_PERIOD_TAG:
        raise ValueError("odd-period certificates exist for n in {13, 15, 17}")
    FamilySpec(ODD_PERIOD_TAG[n], t, s).check()
    t, s = _q(t), _q(s)
    out = t * 0 + s * 0 + 1
    for fac in _tables.ALPHA_FACTORS[n]:
        out = out * eval_bivariate(fac, t, s)
    return out


@dataclass
class OddPeriodCertificate:
    n: int
    point: modcurve.ModCurvePoint
    k: QuadElem
    alpha: QuadElem
    mu: Optional[QuadElem]
    period: int
    scaled_period: Optional[int]

    @property
    def realizes(self) -> bool:
        return self.mu is not None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "point": self.point.to_json(),
            "k": to_json(self.k),
            "alpha": to_json(self.alpha),
            "k_is_square": self.mu is not None,
            "mu": None if self.mu is None else to_json(self.mu),
            "period": self.period,
            "scaled_period": self.scaled_period,
        }


def odd_period_certificate(n: int, point, max_steps: int = DEFAULT_MAX_STEPS) -> OddPeriodCertificate:
    """Decide whether some ``mu * sqrt(f)`` has period ``n`` for the family at ``point``.

    Two independent square tests are run (on ``k`` from the expansion and on the
    tabulated certificate); disagreement, or ``alpha * k`` failing to be a
    square, raises :class:`CertificateMismatch`.
    """
    if n not in ODD_PERIOD_TAG:
        raise ValueError("odd-period certificates exist for n in {13, 15, 17}")
    if not isinstance(point, modcurve.ModCurvePoint):
        point = modcurve.ModCurvePoint.make(n + 1, *point)
    if point.N != n + 1:
        raise ValueError(f"period {n} needs a point on X1({n + 1}), got X1({point.N})")
    spec = FamilySpec(ODD_PERIOD_TAG[n], point.t, point.s)
    fam = family_quartic(spec)
    d = spec.field
    exp = expand_sqrt(fam.model.f, max_steps)
    if exp.k is None or exp.period is None:
        raise ArithmeticError(f"expansion of {fam.model} did not close within {max_steps} steps")
    k = exp.k
    alpha = alpha_poly(n, point.t, point.s)
    root_k = qf_sqrt(k, d)
    alpha_square = alpha and qf_sqrt(alpha, d) is not None
    if (root_k is not None) != bool(alpha_square):
        raise CertificateMismatch(
            f"k={k} square: {root_k is not None}; alpha={alpha} square: {bool(alpha_square)}")
    # stronger than agreeing verdicts: alpha and k lie in one square class
    if qf_sqrt(alpha * k, d) is None:
        raise CertificateMismatch(f"alpha={alpha} and k={k} lie in different square classes")
    mu = None
    scaled = None
    if root_k is not None:
        mu = root_k.inverse()
        scaled = scaled_expand(fam.model.f, mu, max_steps).period
        if scaled != n:
            raise ArithmeticError(f"mu^2 = 1/k but scaled period is {scaled}, expected {n}")
    return OddPeriodCertificate(n, point, k, alpha, mu, exp.period, scaled)
