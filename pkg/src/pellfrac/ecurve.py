"""Elliptic curves in Tate normal form and short Weierstrass form, and quartic models.

A point ``P = (a, b)`` on ``y^2 = x^3 + A x + B`` gives the quartic model

    y^2 = x^4 - 6 a x^2 - 8 b x - 4A - 3a^2

on which ``P`` and ``O`` become the two points at infinity. Writing the quartic
as ``(x^2 + u)^2 - 4 v (x + w)`` gives ``u = -3a``, ``v = 2b``, ``vw = A + 3a^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .polyring import Poly, is_squarefree
from .qfield import QuadElem, to_json

__all__ = [
    "SingularCurve",
    "CurveError",
    "TateCurve",
    "ShortWeierstrass",
    "O",
    "QuarticModel",
    "tate_to_short",
    "add",
    "neg",
    "mul",
    "point_order",
    "quartic_from_point",
    "quartic_forward",
    "quartic_backward",
    "jacobian_of_quartic",
    "infinity_order",
    "shape_model",
    "DEFAULT_ORDER_BOUND",
]

DEFAULT_ORDER_BOUND = 24


class CurveError(ValueError):
    pass


class SingularCurve(CurveError):
    pass


def _q(z) -> QuadElem:
    return z if isinstance(z, QuadElem) else QuadElem(Fraction(z))


class _Infinity:
    """The identity ``O``."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "O"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return 0


O = _Infinity()
Point = Union[_Infinity, tuple]


@dataclass(frozen=True)
class TateCurve:
    """``y^2 + (1-c)xy - by = x^3 - bx^2``."""

    b: QuadElem
    c: QuadElem

    def __post_init__(self):
        object.__setattr__(self, "b", _q(self.b))
        object.__setattr__(self, "c", _q(self.c))

    def contains(self, P) -> bool:
        if P is O:
            return True
        x, y = P
        b, c = self.b, self.c
        return y * y + (1 - c) * x * y - b * y == x * x * x - b * x * x


@dataclass(frozen=True)
class ShortWeierstrass:
    """``y^2 = x^3 + A x + B``."""

    A: QuadElem
    B: QuadElem

    def __post_init__(self):
        object.__setattr__(self, "A", _q(self.A))
        object.__setattr__(self, "B", _q(self.B))

    @property
    def discriminant(self) -> QuadElem:
        return 4 * self.A ** 3 + 27 * self.B ** 2

    def contains(self, P) -> bool:
        if P is O:
            return True
        x, y = P
        return y * y == x * x * x + self.A * x + self.B

    def to_json(self) -> dict:
        return {"A": to_json(self.A), "B": to_json(self.B)}


def point_json(P) -> Optional[dict]:
    if P is O:
        return None
    return {"x": to_json(P[0]), "y": to_json(P[1])}


def tate_to_short(T: TateCurve) -> tuple[ShortWeierstrass, tuple]:
    """Complete the square and cube; ``(0, 0)`` goes to ``((c^2-2c-4b+1)/12, -b/2)``."""
    b, c = T.b, T.c
    a1, a2, a3 = 1 - c, -b, -b
    b2 = a1 * a1 + 4 * a2
    b4 = a1 * a3
    b6 = a3 * a3
    c4 = b2 * b2 - 24 * b4
    c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
    E = ShortWeierstrass(-c4 / 48, -c6 / 864)
    if not E.discriminant:
        raise SingularCurve(f"Tate curve with b={b}, c={c} is singular")
    P = (b2 / 12, a3 / 2)
    if not E.contains(P):
        raise AssertionError("image of (0,0) is off the short Weierstrass model")
    return E, P


# group law ----------------------------------------------------------------

def neg(E: ShortWeierstrass, P):
    if P is O:
        return O
    return (P[0], -P[1])


def add(E: ShortWeierstrass, P, Q):
    """Chord-and-tangent addition on ``E``."""
    if P is O:
        return Q
    if Q is O:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 == -y2:
            return O
        lam = (3 * x1 * x1 + E.A) / (2 * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - x1 - x2
    y3 = lam * (x1 - x3) - y1
    return (x3, y3)


def mul(E: ShortWeierstrass, n: int, P):
    """``n * P`` by double-and-add."""
    if n < 0:
        return mul(E, -n, neg(E, P))
    result, base = O, P
    while n:
        if n & 1:
            result = add(E, result, base)
        base = add(E, base, base)
        n >>= 1
    return result


def point_order(E: ShortWeierstrass, P, bound: int = DEFAULT_ORDER_BOUND) -> Optional[int]:
    """Smallest ``n <= bound`` with ``nP = O``; ``None`` if there is none."""
    if P is not O and not E.contains(P):
        raise CurveError(f"{P} is not on {E}")
    Q = P
    for n in range(1, bound + 1):
        if Q is O:
            return n
        Q = add(E, Q, P)
    return None


# quartic models -------------------------------------------------------------

@dataclass(frozen=True)
class QuarticModel:
    """``f = (x^2 + u)^2 - 4v(x + w)``."""

    u: QuadElem
    v: QuadElem
    w: QuadElem

    def __post_init__(self):
        for name in ("u", "v", "w"):
            object.__setattr__(self, name, _q(getattr(self, name)))
        if not self.v:
            raise CurveError("v = 0: quartic is a perfect square")

    @property
    def d(self) -> int:
        for z in (self.u, self.v, self.w):
            if z.d != 1:
                return z.d
        return 1

    @property
    def f(self) -> Poly:
        u, v, w = self.u, self.v, self.w
        return Poly([u * u - 4 * v * w, -4 * v, 2 * u, 0, 1], self.d)

    def negate_x(self) -> "QuarticModel":
        """The model of ``f(-x)``."""
        return QuarticModel(self.u, -self.v, -self.w)

    def to_json(self) -> dict:
        return {"u": to_json(self.u), "v": to_json(self.v), "w": to_json(self.w),
                "f": self.f.to_json()}

    def __str__(self):
        return f"(x^2+({self.u}))^2-4*({self.v})*(x+({self.w}))"


def quartic_from_point(E: ShortWeierstrass, P) -> Union[QuarticModel, Poly]:
    """Quartic model sending ``P`` and ``O`` to infinity.

    Returns a :class:`QuarticModel`, or the raw quartic :class:`Poly` when ``P`` is
    2-torsion (``v = 0`` is not expressible in the ``(u, v, w)`` shape).
    """
    if P is O or not E.contains(P):
        raise CurveError("need an affine point on E")
    a, b = P
    if not b:
        d = a.d if a.d != 1 else E.A.d
        return Poly([-4 * E.A - 3 * a * a, 0, -6 * a, 0, 1], d)
    u = -3 * a
    v = 2 * b
    w = (E.A + 3 * a * a) / v
    M = QuarticModel(u, v, w)
    expected = Poly([-4 * E.A - 3 * a * a, -8 * b, -6 * a, 0, 1], M.d)
    if M.f != expected:
        raise AssertionError("quartic model re-expansion mismatch")
    return M


def quartic_forward(E: ShortWeierstrass, P, pt):
    """Map a point of ``E`` to the quartic model ``y^2 = x^4 - 6ax^2 - 8bx - 4A - 3a^2``."""
    a, b = P
    u, v = pt
    if u == a:
        raise CurveError("forward map has a pole at u = a")
    x = (v + b) / (u - a)
    return (x, 2 * u + a - x * x)


def quartic_backward(E: ShortWeierstrass, P, pt):
    """Inverse of :func:`quartic_forward`."""
    a, b = P
    x, y = pt
    return ((x * x + y - a) / 2, (x * x * x + x * y - 3 * a * x - 2 * b) / 2)


def jacobian_of_quartic(M: QuarticModel, check_squarefree: bool = True) -> tuple[ShortWeierstrass, tuple]:
    """Recover ``(E, P)`` with ``quartic_from_point(E, P) == M``."""
    if check_squarefree and not is_squarefree(M.f):
        raise CurveError(f"{M} is not square-free")
    a = -M.u / 3
    bP = M.v / 2
    A = M.v * M.w - M.u * M.u / 3
    B = bP * bP - a ** 3 - A * a
    E = ShortWeierstrass(A, B)
    P = (a, bP)
    if not E.contains(P):
        raise AssertionError("recovered point is off the recovered curve")
    if quartic_from_point(E, P) != M:
        raise AssertionError("jacobian_of_quartic does not round-trip")
    return E, P


def shape_model(f: Poly) -> QuarticModel:
    """Put a quartic with square leading coefficient into ``(u, v, w)`` shape.

    Uses ``x -> x - f_3 / (4 f_4)`` and division by ``f_4``; both fix the points
    at infinity, so the order of ``inf+ - inf-`` is unchanged.
    """
    from .qfield import qf_sqrt

    if f.degree != 4:
        raise CurveError(f"expected a quartic, got degree {f.degree}")
    if qf_sqrt(f.lead) is None:
        raise CurveError(f"leading coefficient {f.lead} is not a square")
    g = f * f.lead.inverse()
    shift = -g[3] / 4
    # g(x + shift), expanded by Horner on polynomials
    x = Poly([shift, 1], g.d)
    h = Poly([], g.d)
    for c in reversed(g.coeffs):
        h = h * x + c
    u = h[2] / 2
    v = -h[1] / 4
    if not v:
        raise CurveError("linear term vanishes after normalization; not of (u, v, w) shape")
    w = (u * u - h[0]) / (4 * v)
    return QuarticModel(u, v, w)


def infinity_order(M: QuarticModel, bound: int = DEFAULT_ORDER_BOUND) -> Optional[int]:
    """Order of ``inf+ - inf-`` on ``y^2 = f(x)``."""
    E, P = jacobian_of_quartic(M)
    return point_order(E, P, bound)
