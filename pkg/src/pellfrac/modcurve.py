"""The modular curves X1(N) used by the families: equations, cusps, point search."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from . import _tables
from .qfield import QuadElem, canonical_field, enumerate_elements, qf_sqrt, to_json

__all__ = [
    "SUPPORTED",
    "UnsupportedCurve",
    "ModCurvePoint",
    "curve_coeffs",
    "on_curve",
    "is_cusp",
    "admissible",
    "admissibility_product",
    "solve_points",
    "thread_cap",
]

SUPPORTED = (11, 13, 14, 15, 16, 18)


class UnsupportedCurve(ValueError):
    pass


def _check(N):
    if N not in SUPPORTED and N not in _tables.MODULAR_CURVES:
        raise UnsupportedCurve(f"X1({N}) is not supported; choose one of {SUPPORTED}")


def _q(z) -> QuadElem:
    return z if isinstance(z, QuadElem) else QuadElem(Fraction(z))


def _horner(coeffs_high: list, t: QuadElem) -> QuadElem:
    acc = t * 0
    for c in coeffs_high:
        acc = acc * t + c
    return acc


def curve_coeffs(N, t) -> tuple[QuadElem, QuadElem]:
    """``(p(t), q(t))`` with the curve written as ``s^2 + p(t) s + q(t) = 0``."""
    _check(N)
    row = _tables.MODULAR_CURVES[N]
    t = _q(t)
    return _horner(row["p"], t), _horner(row["q"], t)


def on_curve(N, t, s) -> bool:
    p, q = curve_coeffs(N, t)
    s = _q(s)
    return not (s * s + p * s + q)


def is_cusp(N, t) -> bool:
    _check(N)
    t = _q(t)
    return any(not _horner(f, t) for f in _tables.CUSP_FACTORS[N])


def admissibility_product(N, t) -> QuadElem:
    _check(N)
    t = _q(t)
    out = t * 0 + 1
    for f in _tables.ADMISSIBILITY_FACTORS[N]:
        out = out * _horner(f, t)
    return out


def admissible(N, t, s=None) -> bool:
    """Whether the nonvanishing condition attached to X1(N) holds at ``t``."""
    return bool(admissibility_product(N, t))


def condition_text(N) -> str:
    """Human-readable nonvanishing product for error messages."""
    _check(N)
    parts = []
    for f in _tables.ADMISSIBILITY_FACTORS[N]:
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
class ModCurvePoint:
    N: int
    t: QuadElem
    s: QuadElem
    on_curve: bool
    cusp: bool
    admissible: bool

    @classmethod
    def make(cls, N, t, s) -> "ModCurvePoint":
        t, s = _q(t), _q(s)
        return cls(N, t, s, on_curve(N, t, s), is_cusp(N, t), admissible(N, t, s))

    @property
    def field(self) -> int:
        for z in (self.t, self.s):
            if z.d != 1:
                return z.d
        return 1

    @property
    def usable(self) -> bool:
        """On the curve, not a cusp, and admissible."""
        return self.on_curve and not self.cusp and self.admissible

    def to_json(self) -> dict:
        return {"N": self.N, "t": to_json(self.t), "s": to_json(self.s),
                "on_curve": self.on_curve, "cusp": self.cusp, "admissible": self.admissible}


def _points_for(N, d: int, ts: Iterable[QuadElem]) -> list[ModCurvePoint]:
    out = []
    for t in ts:
        p, q = curve_coeffs(N, t)
        r = qf_sqrt(p * p - 4 * q, d)
        if r is None:
            continue
        roots = [(-p + r) / 2]
        if r:
            roots.append((-p - r) / 2)
        for s in roots:
            out.append(ModCurvePoint.make(N, t, s.in_field(d) if s.d != d else s))
    return out


def _chunk_worker(args):
    N, d, ts = args
    return _points_for(N, d, ts)


def thread_cap() -> int:
    """Parallelism cap from ``PELLFRAC_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("PELLFRAC_THREADS", "1")))
    except ValueError:
        return 1


def solve_points(N, d: int, H: int, workers: Optional[int] = None) -> list[ModCurvePoint]:
    """All points of X1(N) over Q(sqrt(d)) whose t-coordinate has height <= H.

    Both roots ``s`` are returned for each ``t``; order follows the height
    enumeration of ``t`` and is independent of ``workers``.
    """
    _check(N)
    d = canonical_field(d)[0]
    ts = list(enumerate_elements(d, H))
    workers = thread_cap() if workers is None else max(1, workers)
    if workers == 1 or len(ts) < 256:
        return _points_for(N, d, ts)
    size = -(-len(ts) // workers)
    chunks = [(N, d, ts[i:i + size]) for i in range(0, len(ts), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_chunk_worker, chunks))
    return [p for part in parts for p in part]
