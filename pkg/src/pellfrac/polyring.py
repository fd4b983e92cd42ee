"""Dense univariate polynomials over Q(sqrt(d))."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .qfield import FieldError, QuadElem, qf_sqrt, to_json, from_json

__all__ = [
    "Poly",
    "poly_gcd",
    "is_squarefree",
    "poly_part_sqrt",
    "UnsupportedQuartic",
]


class UnsupportedQuartic(ValueError):
    """The quartic is not of the shape the continued fraction engine handles."""


def _elem(c, d: int) -> QuadElem:
    if isinstance(c, QuadElem):
        return c
    return QuadElem(Fraction(c), 0, d)


class Poly:
    """Polynomial with :class:`QuadElem` coefficients, lowest degree first.

    Trailing zero coefficients are stripped so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs", "d")

    def __init__(self, coeffs: Iterable = (), d: int | None = None):
        cs = list(coeffs)
        if d is None:
            d = 1
            for c in cs:
                if isinstance(c, QuadElem) and c.d != 1:
                    d = c.d
                    break
        out = []
        for c in cs:
            e = _elem(c, d)
            if e.d != d:
                if e.b:
                    raise FieldError(f"coefficient {e} not in Q(sqrt({d}))")
                e = e.in_field(d)
            out.append(e)
        while out and not out[-1]:
            out.pop()
        object.__setattr__(self, "coeffs", tuple(out))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (list(self.coeffs), self.d))

    @classmethod
    def x(cls, d: int = 1) -> "Poly":
        return cls([0, 1], d)

    @classmethod
    def const(cls, c, d: int = 1) -> "Poly":
        return cls([c], d)

    @classmethod
    def from_high(cls, coeffs: Sequence, d: int | None = None) -> "Poly":
        """Build from coefficients listed highest degree first."""
        return cls(list(reversed(list(coeffs))), d)

    # basic queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> QuadElem:
        if not self.coeffs:
            return QuadElem(0, 0, self.d)
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> QuadElem:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return QuadElem(0, 0, self.d)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, QuadElem)):
            return self.coeffs == Poly([other], self.d).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.d != self.d:
                if all(c.is_rational() for c in other.coeffs):
                    return Poly(other.coeffs, self.d)
                if all(c.is_rational() for c in self.coeffs):
                    return other
                raise FieldError(f"mixed fields: {self.d} and {other.d}")
            return other
        if isinstance(other, (int, Fraction, QuadElem)):
            return Poly([other], self.d if not isinstance(other, QuadElem) or other.d == 1 else other.d)
        return None

    def _field(self, other: "Poly") -> int:
        return other.d if self.d == 1 else self.d

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[i] + o[i] for i in range(n)], self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[i] - o[i] for i in range(n)], self._field(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadElem)):
            d = other.d if isinstance(other, QuadElem) and other.d != 1 else self.d
            return Poly([c * other for c in self.coeffs], d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly([], self._field(o))
        out = [QuadElem(0, 0, self._field(o))] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self._field(o))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly([1], self.d)
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        d = self._field(g)
        rem = list(self.coeffs)
        dg = g.degree
        inv_lead = g.lead.inverse()
        quot = [QuadElem(0, 0, d)] * max(len(rem) - dg, 0)
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k] * inv_lead
            if not c:
                continue
            quot[k - dg] = c
            for j, b in enumerate(g.coeffs):
                rem[k - dg + j] = rem[k - dg + j] - c * b
        return Poly(quot, d), Poly(rem[:dg] if dg > 0 else [], d)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"inexact division: remainder {r}")
        return q

    def scale(self, c) -> "Poly":
        return self * c

    def monic(self) -> "Poly":
        if not self:
            return self
        return self * self.lead.inverse()

    def derivative(self) -> "Poly":
        return Poly([c * i for i, c in enumerate(self.coeffs)][1:], self.d)

    def __call__(self, z):
        """Horner evaluation."""
        acc = QuadElem(0, 0, self.d)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def compose_neg(self) -> "Poly":
        """``f(-x)``."""
        return Poly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)], self.d)

    # display / serialization ---------------------------------------------

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            cs = str(c)
            if c.b and c.a:
                cs = f"({cs})"
            if mono and c == 1:
                term = mono
            elif mono and c == -1:
                term = "-" + mono
            elif mono:
                term = f"{cs}*{mono}"
            else:
                term = cs
            parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def to_json(self) -> list:
        return [to_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Poly":
        cs = [from_json(c) for c in data]
        return cls(cs)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over K."""
    if not f and not g:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def is_squarefree(f: Poly) -> bool:
    if not f:
        raise ValueError("zero polynomial")
    return poly_gcd(f, f.derivative()).degree == 0


def poly_part_sqrt(f: Poly, root_lead: QuadElem | None = None) -> Poly:
    """The quadratic ``A`` with ``deg(f - A^2) <= 1`` for a quartic ``f``.

    ``A``'s leading coefficient is the canonical square root of ``f``'s, unless
    ``root_lead`` picks the branch explicitly.
    """
    if f.degree != 4:
        raise UnsupportedQuartic(f"expected a quartic, got degree {f.degree}")
    if root_lead is None:
        root_lead = qf_sqrt(f.lead)
        if root_lead is None:
            raise UnsupportedQuartic(f"leading coefficient {f.lead} is not a square in Q(sqrt({f.d}))")
    elif root_lead * root_lead != f.lead:
        raise UnsupportedQuartic(f"{root_lead} does not square to {f.lead}")
    l2 = root_lead
    l1 = f[3] / (2 * l2)
    l0 = (f[2] - l1 * l1) / (2 * l2)
    return Poly([l0, l1, l2], f._field(Poly([l2])))
