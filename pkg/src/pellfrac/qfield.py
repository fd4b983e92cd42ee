"""Exact arithmetic in quadratic fields Q(sqrt(d)).

Elements are ``a + b*sqrt(d)`` with ``a, b`` stored as :class:`fractions.Fraction`.
``d == 1`` encodes the rational field itself; such elements always have ``b == 0``
and are promoted silently when combined with elements of a genuine quadratic field.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import isqrt
from typing import Iterator, Optional, Union

__all__ = [
    "FieldError",
    "QuadElem",
    "canonical_field",
    "rat_sqrt",
    "qf_sqrt",
    "conj_norm",
    "enumerate_elements",
    "enumerate_rationals",
    "height",
    "parse_elem",
    "to_json",
    "from_json",
]


class FieldError(ValueError):
    """Invalid field tag, mixed fields, or division by zero."""


def canonical_field(d: int) -> tuple[int, int]:
    """Return ``(kernel, square)`` with ``d == kernel * square`` and ``kernel`` square-free.

    >>> canonical_field(12)
    (3, 4)
    >>> canonical_field(-4)
    (-1, 4)
    """
    d = int(d)
    if d == 0:
        raise FieldError("d = 0 does not define a field")
    sign = -1 if d < 0 else 1
    n = abs(d)
    square = 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            square *= p * p
        p += 1
    return sign * n, square


def rat_sqrt(q) -> Optional[Fraction]:
    """Non-negative rational square root of ``q``, or ``None``."""
    q = Fraction(q)
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


Number = Union[int, Fraction, "QuadElem"]


class QuadElem:
    """An element ``a + b*sqrt(d)`` of Q(sqrt(d)). Immutable."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 1, _trusted: bool = False):
        if not _trusted:
            d = int(d)
            kernel, square = canonical_field(d)
            b = Fraction(b)
            if square != 1:
                # a + b*sqrt(m^2 k) == a + (b m) sqrt(k)
                b *= isqrt(square)
            d = kernel
            if d == 1:
                a = Fraction(a) + b
                b = Fraction(0)
            a = Fraction(a)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadElem is immutable")

    def __reduce__(self):
        return (QuadElem, (self.a, self.b, self.d, True))

    # construction helpers -------------------------------------------------

    @classmethod
    def _make(cls, a: Fraction, b: Fraction, d: int) -> "QuadElem":
        if d == 1 and b:
            a, b = a + b, Fraction(0)
        return cls(a, b, d, _trusted=True)

    @classmethod
    def sqrt_d(cls, d: int) -> "QuadElem":
        """The generator ``sqrt(d)`` of Q(sqrt(d)) (after square-free reduction)."""
        return cls(0, 1, d)

    def _coerce(self, other) -> Optional["QuadElem"]:
        if isinstance(other, QuadElem):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(Fraction(other), Fraction(0), self.d, _trusted=True)
        return None

    def _common(self, other: "QuadElem") -> int:
        if self.d == other.d:
            return self.d
        if self.d == 1 and not self.b:
            return other.d
        if other.d == 1 and not other.b:
            return self.d
        raise FieldError(f"mixed fields: Q(sqrt({self.d})) and Q(sqrt({other.d}))")

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem._make(self.a + o.a, self.b + o.b, self._common(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadElem._make(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem._make(self.a - o.a, self.b - o.b, self._common(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadElem._make(self.a * other, self.b * other, self.d)
        if not isinstance(other, QuadElem):
            return NotImplemented
        d = self._common(other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        if not b1 or not b2:
            return QuadElem._make(a1 * a2, a1 * b2 + b1 * a2, d)
        return QuadElem._make(a1 * a2 + d * b1 * b2, a1 * b2 + b1 * a2, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadElem":
        if not self:
            raise FieldError("division by zero")
        if not self.b:
            return QuadElem._make(1 / self.a, Fraction(0), self.d)
        n = self.a * self.a - self.d * self.b * self.b
        return QuadElem._make(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise FieldError("division by zero")
            return QuadElem._make(self.a / other, self.b / other, self.d)
        if not isinstance(other, QuadElem):
            return NotImplemented
        self._common(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadElem._make(Fraction(1), Fraction(0), self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, QuadElem) else other
        if o is None:
            return NotImplemented
        if self.a != o.a or self.b != o.b:
            return False
        return self.d == o.d or not self.b

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    # queries --------------------------------------------------------------

    def is_rational(self) -> bool:
        return not self.b

    def conj(self) -> "QuadElem":
        return QuadElem._make(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def height(self) -> int:
        return max(abs(self.a.numerator), self.a.denominator,
                   abs(self.b.numerator), self.b.denominator)

    def in_field(self, d: int) -> "QuadElem":
        """Re-tag a rational element as living in Q(sqrt(d))."""
        if self.d == d:
            return self
        if self.b:
            raise FieldError(f"{self} is not in Q(sqrt({d}))")
        return QuadElem(self.a, 0, d)

    def sqrt(self) -> Optional["QuadElem"]:
        return qf_sqrt(self)

    def __repr__(self):
        return f"QuadElem({self})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        rad = f"sqrt({self.d})"
        if self.b == 1:
            irr = rad
        elif self.b == -1:
            irr = "-" + rad
        else:
            irr = f"{self.b}*{rad}"
        if not self.a:
            return irr
        if irr.startswith("-"):
            return f"{self.a}{irr}"
        return f"{self.a}+{irr}"


def conj_norm(z: QuadElem) -> tuple[QuadElem, Fraction]:
    return z.conj(), z.norm()


def _canonical_sign(r: QuadElem) -> QuadElem:
    if r.a < 0 or (r.a == 0 and r.b < 0):
        return -r
    return r


def qf_sqrt(z, d: Optional[int] = None) -> Optional[QuadElem]:
    """Square root of ``z`` in Q(sqrt(d)), or ``None`` if ``z`` is not a square there.

    ``d`` defaults to the field ``z`` is tagged with. The returned root has its
    first nonzero coordinate positive.
    """
    if not isinstance(z, QuadElem):
        z = QuadElem(Fraction(z))
    if d is not None:
        z = z.in_field(canonical_field(d)[0])
    d, a, b = z.d, z.a, z.b
    if not z:
        return z
    if not b:
        # x = 0 branch: a = d y^2; y = 0 branch: a = x^2
        r = rat_sqrt(a)
        if r is not None:
            return QuadElem._make(r, Fraction(0), d)
        if d != 1:
            y = rat_sqrt(a / d)
            if y is not None:
                return QuadElem._make(Fraction(0), y, d)
        return None
    # (x + y sqrt d)^2 = (x^2 + d y^2) + 2xy sqrt d, with x, y both nonzero
    n = rat_sqrt(z.norm())
    if n is None:
        return None
    for x2 in ((a + n) / 2, (a - n) / 2):
        x = rat_sqrt(x2)
        if not x:
            continue
        y = b / (2 * x)
        if x * x + d * y * y == a:
            return _canonical_sign(QuadElem._make(x, y, d))
    return None


def enumerate_rationals(H: int) -> list[Fraction]:
    """All rationals p/q in lowest terms with |p| <= H, 1 <= q <= H, by height then value."""
    seen = {}
    for q in range(1, H + 1):
        for p in range(-H, H + 1):
            f = Fraction(p, q)
            h = max(abs(f.numerator), f.denominator)
            seen.setdefault(f, h)
    return sorted(seen, key=lambda f: (seen[f], abs(f), f < 0))


def enumerate_elements(d: int, H: int) -> Iterator[QuadElem]:
    """Yield every ``a + b*sqrt(d)`` whose coordinates have height at most ``H``.

    Order is non-decreasing in height, ties broken deterministically.
    """
    if H < 1:
        raise ValueError("H must be >= 1")
    d, _ = canonical_field(d)
    rats = enumerate_rationals(H)
    if d == 1:
        yield from (QuadElem._make(r, Fraction(0), 1) for r in rats)
        return
    hts = {r: max(abs(r.numerator), r.denominator) for r in rats}
    rank = {r: i for i, r in enumerate(rats)}
    pairs = [(x, y) for x in rats for y in rats]
    pairs.sort(key=lambda p: (max(hts[p[0]], hts[p[1]]), rank[p[1]], rank[p[0]]))
    for x, y in pairs:
        yield QuadElem._make(x, y, d)


def height(z) -> int:
    if isinstance(z, QuadElem):
        return z.height()
    f = Fraction(z)
    return max(abs(f.numerator), f.denominator)


# text and JSON ------------------------------------------------------------

_TERM = re.compile(r"^([+-]?[0-9/]*)\*?sqrt\((-?\d+)\)$")


def _parse_rational(s: str) -> Fraction:
    s = s.strip()
    if s in ("", "+"):
        return Fraction(1)
    if s == "-":
        return Fraction(-1)
    return Fraction(s)


def parse_elem(text: str, d: Optional[int] = None) -> QuadElem:
    """Parse ``"p/q"``, ``"p/q+r/s*sqrt(d)"``, ``"sqrt(d)"`` and similar forms.

    Whitespace is ignored. If the text names a radicand it must agree with ``d``
    (after square-free reduction) when ``d`` is given.
    """
    s = "".join(str(text).split())
    if not s:
        raise ValueError("empty element")
    # split into signed terms at top-level +/- (not inside sqrt(...) and not leading)
    terms, depth, cur = [], 0, ""
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur and cur[-1] not in "*/":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    a = Fraction(0)
    b = Fraction(0)
    field = 1 if d is None else canonical_field(d)[0]
    for term in terms:
        m = _TERM.match(term)
        if m:
            coeff, rad = m.group(1), int(m.group(2))
            kernel, square = canonical_field(rad)
            if field != 1 and kernel != field and kernel != 1:
                raise ValueError(f"sqrt({rad}) is not in Q(sqrt({field}))")
            if kernel != 1:
                field = kernel
            c = _parse_rational(coeff) * isqrt(square)
            if kernel == 1:
                a += c
            else:
                b += c
        else:
            try:
                a += Fraction(term)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"cannot parse {term!r} in {text!r}") from exc
    return QuadElem(a, b, field)


def to_json(z) -> dict:
    if not isinstance(z, QuadElem):
        z = QuadElem(Fraction(z))
    return {"a": str(z.a), "b": str(z.b), "d": z.d}


def from_json(obj) -> QuadElem:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return QuadElem(Fraction(obj["a"]), Fraction(obj["b"]), int(obj["d"]))
