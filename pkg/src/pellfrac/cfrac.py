"""Continued fraction expansion of sqrt(f) for quartic f over Q(sqrt(d)).

The complete quotients are ``(P_h + sqrt(f)) / Q_h``. Each step is

    P_{h+1} = a_h Q_h - P_h
    Q_{h+1} = (f - P_{h+1}^2) / Q_h
    a_{h+1} = polynomial part of (P_{h+1} + A) / Q_{h+1}

where ``A`` is the polynomial part of sqrt(f). Periodicity is detected by exact
repetition of the state ``(P_h, Q_h)`` for ``h >= 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .polyring import Poly, poly_part_sqrt, UnsupportedQuartic
from .qfield import QuadElem, qf_sqrt

__all__ = [
    "CFStep",
    "CFExpansion",
    "StructureError",
    "DegenerateParameters",
    "cf_step",
    "expand_sqrt",
    "quasi_period",
    "period",
    "scaled_expand",
    "convergents",
    "sb_sequences",
    "DEFAULT_MAX_STEPS",
]

DEFAULT_MAX_STEPS = 80


class StructureError(ArithmeticError):
    """An expansion violated a structural identity that must hold exactly."""


class DegenerateParameters(ValueError):
    pass


@dataclass(frozen=True)
class CFStep:
    h: int
    P: Poly
    Q: Poly
    a: Poly

    def to_json(self) -> dict:
        return {"h": self.h, "P": self.P.to_json(), "Q": self.Q.to_json(), "a": self.a.to_json()}


@dataclass
class CFExpansion:
    """Trace of an expansion of ``root``'s branch of sqrt(f).

    ``period`` is ``None`` when no repetition was found within the step budget.
    ``preperiod`` is the index at which the repeating block starts (1 for a
    purely periodic tail).
    """

    f: Poly
    root: Poly
    steps: list[CFStep]
    quasi_period: Optional[int] = None
    k: Optional[QuadElem] = None
    period: Optional[int] = None
    preperiod: Optional[int] = None

    @property
    def a0(self) -> Poly:
        return self.steps[0].a

    @property
    def quotients(self) -> list[Poly]:
        return [s.a for s in self.steps]

    @property
    def periodic(self) -> bool:
        return self.period is not None

    def quotient(self, h: int) -> Poly:
        """``a_h`` for any ``h``, extending past the computed block by periodicity."""
        if h < len(self.steps):
            return self.steps[h].a
        if self.period is None:
            raise IndexError(f"a_{h} not computed and expansion is not periodic")
        j = self.preperiod + (h - self.preperiod) % self.period
        return self.steps[j].a

    def to_json(self) -> dict:
        return {
            "f": self.f.to_json(),
            "a0": self.a0.to_json(),
            "steps": [s.to_json() for s in self.steps],
            "r": self.quasi_period,
            "k": None if self.k is None else _qjson(self.k),
            "period": self.period,
        }


def _qjson(z):
    from .qfield import to_json
    return to_json(z)


def cf_step(f: Poly, prev: CFStep, root: Poly) -> CFStep:
    """Advance the expansion by one step."""
    P = prev.a * prev.Q - prev.P
    num = f - P * P
    Q, rem = divmod(num, prev.Q)
    if rem:
        raise StructureError(f"Q_{prev.h} does not divide f - P_{prev.h + 1}^2")
    if not Q:
        raise StructureError("Q vanished; f is a perfect square or not square-free")
    a = (P + root) // Q
    return CFStep(prev.h + 1, P, Q, a)


def _first_step(f: Poly, root: Poly) -> CFStep:
    return CFStep(0, Poly([], f.d), Poly([1], f.d), root)


def _expand(f: Poly, root: Poly, max_steps: int) -> CFExpansion:
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    steps = [_first_step(f, root)]
    seen: dict[tuple, int] = {}
    exp = CFExpansion(f=f, root=root, steps=steps)
    for _ in range(max_steps):
        nxt = cf_step(f, steps[-1], root)
        key = (nxt.P, nxt.Q)
        if key in seen:
            j = seen[key]
            exp.period = nxt.h - j
            exp.preperiod = j
            break
        seen[key] = nxt.h
        steps.append(nxt)
    qp = quasi_period(exp)
    if qp is not None:
        exp.quasi_period, exp.k = qp
        if exp.period is not None and exp.preperiod == 1:
            expected = qp[0] if qp[1] == 1 else 2 * qp[0]
            if expected != exp.period:
                raise StructureError(
                    f"state repetition gives period {exp.period}, quasi-period rule gives {expected}")
    return exp


def expand_sqrt(f: Poly, max_steps: int = DEFAULT_MAX_STEPS) -> CFExpansion:
    """Expand sqrt(f) for a quartic ``f`` with square leading coefficient.

    A non-periodic result (``period is None``) is the expected outcome when the
    point at infinity difference has infinite order; it is not an error.
    """
    if f.degree != 4:
        raise UnsupportedQuartic(f"expected a quartic, got degree {f.degree}")
    root = poly_part_sqrt(f)
    return _expand(f, root, max_steps)


def scaled_expand(f: Poly, mu, max_steps: int = DEFAULT_MAX_STEPS) -> CFExpansion:
    """Expand ``mu * sqrt(f)``, i.e. sqrt(mu^2 f) on the branch ``mu * A``."""
    if not isinstance(mu, QuadElem):
        mu = QuadElem(Fraction(mu))
    if not mu:
        raise ValueError("mu must be nonzero")
    if f.degree != 4:
        raise UnsupportedQuartic(f"expected a quartic, got degree {f.degree}")
    root = poly_part_sqrt(f) * mu
    g = f * (mu * mu)
    return _expand(g, root, max_steps)


def quasi_period(e: CFExpansion) -> Optional[tuple[int, QuadElem]]:
    """``(r, k)``: first ``h >= 1`` with constant ``Q_h``, and ``k = 2 a_0 / a_r``.

    Raises :class:`StructureError` if ``2 a_0 / a_r`` is not a constant or
    disagrees with ``Q_r``.
    """
    for st in e.steps[1:]:
        if st.Q.degree == 0:
            a0 = e.steps[0].a
            q, rem = divmod(a0 * 2, st.a)
            if rem or q.degree != 0:
                raise StructureError(f"2*a_0/a_{st.h} is not constant")
            k = q.lead
            if k != st.Q.lead:
                raise StructureError(f"k = {k} but Q_{st.h} = {st.Q.lead}")
            return st.h, k
    return None


def period(f: Poly, max_steps: int = DEFAULT_MAX_STEPS) -> Optional[int]:
    return expand_sqrt(f, max_steps).period


def convergents(e: CFExpansion, h: int) -> tuple[Poly, Poly]:
    """``(p_h, q_h)`` with ``p_h / q_h = [a_0, ..., a_h]``."""
    if h < 0 or h >= len(e.steps):
        raise IndexError(f"h={h} outside computed steps 0..{len(e.steps) - 1}")
    d = e.f.d
    p_prev, p = Poly([], d), Poly([1], d)
    q_prev, q = Poly([1], d), Poly([], d)
    for i in range(h + 1):
        a = e.steps[i].a
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return p, q


def sb_sequences(u, v, w, hmax: int) -> tuple[dict[int, QuadElem], dict[int, QuadElem]]:
    """Closed-form ``s_h`` and ``b_h`` sequences for ``f = (x^2+u)^2 - 4v(x+w)``.

    Advisory only; the generic recurrence in :func:`expand_sqrt` is the ground truth.
    Returns dicts keyed by index (``s`` from 2, ``b`` from 2).
    """
    u, v, w = (_as_elem(z) for z in (u, v, w))
    den = 1 - 2 * w
    if not den:
        raise DegenerateParameters("-2w + 1 vanishes")
    s = {2: QuadElem(1, 0, v.d if v.d != 1 else w.d), 3: v / den}
    for h in range(4, hmax + 1):
        prev = s[h - 1]
        denom = prev * (prev - 1) * s[h - 2]
        if not denom:
            raise DegenerateParameters(f"s_{h} has a vanishing denominator")
        s[h] = v / denom
    b = {}
    for h in range(2, hmax + 1):
        if h % 2 == 0:
            num = _prod(s[i] for i in range(3, h, 2))
            den_ = _prod(s[i] for i in range(2, h + 1, 2))
            b[h] = num / den_
        else:
            num = _prod(s[i] for i in range(2, h, 2))
            den_ = _prod(s[i] for i in range(3, h + 1, 2))
            b[h] = 4 * v * num / den_
    return s, b


def _prod(it):
    out = QuadElem(1)
    for z in it:
        out = out * z
    return out


def _as_elem(z) -> QuadElem:
    if isinstance(z, QuadElem):
        return z
    return QuadElem(Fraction(z))


def is_square(z) -> bool:
    return qf_sqrt(z) is not None
