"""Command-line front end: ``pellfrac expand|family|certify|points|order|selftest``.

Exit codes: 0 success (periodic / order found), 2 period or order not detected
within the configured bounds, 1 error.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from . import acceptance, families, modcurve
from .cfrac import DEFAULT_MAX_STEPS, expand_sqrt, scaled_expand
from .ecurve import (
    DEFAULT_ORDER_BOUND,
    QuarticModel,
    TateCurve,
    infinity_order,
    jacobian_of_quartic,
    point_json,
    point_order,
    shape_model,
    tate_to_short,
)
from .polyring import Poly
from .qfield import canonical_field, from_json, parse_elem, qf_sqrt, to_json

EXIT_OK, EXIT_ERROR, EXIT_UNDETECTED = 0, 1, 2

SCHEMA_PATH = Path(__file__).with_name("schema.json")


@dataclass(frozen=True)
class RunConfig:
    d: int = 1
    max_steps: int = DEFAULT_MAX_STEPS
    order_bound: int = DEFAULT_ORDER_BOUND
    height: int = 4
    format: str = "json"
    seed: int = acceptance.DEFAULT_SEED

    def __post_init__(self):
        for name in ("max_steps", "order_bound", "height"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.format not in ("json", "table"):
            raise ValueError("format must be json or table")
        if self.d == 0:
            raise ValueError("d must be nonzero")


def load_config(path: Optional[str]) -> RunConfig:
    """Read a flat ``key=value`` file (``#`` comments allowed)."""
    if not path:
        return RunConfig()
    parser = configparser.ConfigParser()
    parser.read_string("[run]\n" + Path(path).read_text())
    raw = dict(parser["run"])
    known = {"d", "max_steps", "order_bound", "height", "format", "seed"}
    extra = set(raw) - known
    if extra:
        raise ValueError(f"unknown config keys: {sorted(extra)}")
    vals = {k: (v if k == "format" else int(v)) for k, v in raw.items()}
    return RunConfig(**vals)


class UserError(Exception):
    pass


# helpers ----------------------------------------------------------------------

def _field(cfg: RunConfig, explicit: Optional[int]) -> int:
    d = cfg.d if explicit is None else explicit
    return canonical_field(d)[0]


def _poly_from_text(text: str, d: int) -> Poly:
    parts = [p for p in text.replace(";", ",").split(",")]
    if not parts or any(not p.strip() for p in parts):
        raise UserError(f"malformed coefficient list {text!r}")
    try:
        coeffs = [parse_elem(p, d if d != 1 else None) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise UserError(str(exc)) from exc
    fields = {c.d for c in coeffs if c.d != 1}
    if len(fields) > 1:
        raise UserError(f"coefficients lie in different fields {sorted(fields)}")
    return Poly.from_high(coeffs, d if d != 1 else (fields.pop() if fields else 1))


def _elem(text: str, d: int):
    try:
        return parse_elem(text, d if d != 1 else None)
    except (ValueError, ZeroDivisionError) as exc:
        raise UserError(str(exc)) from exc


def _expansion_report(e, trace: bool) -> dict:
    if trace:
        return e.to_json()
    # skip serializing steps: a non-periodic run can carry very large coefficients
    return {"f": e.f.to_json(), "a0": e.a0.to_json(), "r": e.quasi_period,
            "k": None if e.k is None else to_json(e.k), "period": e.period,
            "steps_computed": len(e.steps)}


def _family_point(tag: str, t, s_text: Optional[str], d: int):
    if tag not in families.TAG_CURVE:
        return None
    if s_text not in (None, "sqrt", "auto"):
        return _elem(s_text, d)
    N = families.TAG_CURVE[tag]
    p, q = modcurve.curve_coeffs(N, t)
    r = qf_sqrt(p * p - 4 * q, d)
    if r is None:
        raise UserError(f"X1({N}) has no point with t={t} over Q(sqrt({d}))")
    s = (-p + r) / 2
    return s.in_field(d) if d != 1 and s.d == 1 else s


# commands ---------------------------------------------------------------------

def cmd_expand(args, cfg: RunConfig) -> tuple[dict, int]:
    d = _field(cfg, args.d)
    f = _poly_from_text(args.f, d)
    if f.degree != 4:
        raise UserError(f"expected a quartic, got degree {f.degree}")
    if args.mu is not None:
        mu = _elem(args.mu, d)
        e = scaled_expand(f, mu, cfg.max_steps)
    else:
        mu = None
        e = expand_sqrt(f, cfg.max_steps)
    out = {"command": "expand", "mu": None if mu is None else to_json(mu)}
    out.update(_expansion_report(e, args.trace))
    return out, EXIT_OK if e.periodic else EXIT_UNDETECTED


def cmd_family(args, cfg: RunConfig) -> tuple[dict, int]:
    d = _field(cfg, args.d)
    t = _elem(args.t, d)
    s = _family_point(args.tag, t, args.s, d)
    spec = families.FamilySpec(args.tag, t, s)
    fam = families.family_quartic(spec)
    e = expand_sqrt(fam.model.f, cfg.max_steps)
    n = infinity_order(fam.model, cfg.order_bound)
    out = {"command": "family", "expected_order": spec.order, "order": n}
    out.update(fam.to_json())
    out.update(period=e.period, r=e.quasi_period, k=None if e.k is None else to_json(e.k))
    return out, EXIT_OK if e.periodic and n is not None else EXIT_UNDETECTED


def cmd_certify(args, cfg: RunConfig) -> tuple[dict, int]:
    d = _field(cfg, args.d)
    N = args.n + 1
    if args.n not in families.ODD_PERIOD_TAG:
        raise UserError("certify supports --n 13, 15 or 17")
    if args.t is not None:
        t = _elem(args.t, d)
        s = _family_point(families.ODD_PERIOD_TAG[args.n], t, args.s, d)
        pts = [modcurve.ModCurvePoint.make(N, t, s)]
    else:
        pts = [p for p in modcurve.solve_points(N, d, cfg.height) if p.usable]
    certs, skipped = [], []
    for p in pts:
        try:
            certs.append(families.odd_period_certificate(args.n, p, cfg.max_steps).to_json())
        except families.InadmissibleParameters as exc:
            skipped.append({"point": p.to_json(), "reason": str(exc)})
    out = {"command": "certify", "n": args.n, "d": d, "height": cfg.height,
           "certificates": certs, "skipped": skipped}
    return out, EXIT_OK


def cmd_points(args, cfg: RunConfig) -> tuple[dict, int]:
    d = _field(cfg, args.d)
    pts = modcurve.solve_points(args.curve, d, cfg.height)
    if args.usable:
        pts = [p for p in pts if p.usable]
    out = {"command": "points", "curve": args.curve, "d": d, "height": cfg.height,
           "points": [dict(p.to_json(), usable=p.usable) for p in pts]}
    return out, EXIT_OK


def cmd_order(args, cfg: RunConfig) -> tuple[dict, int]:
    d = _field(cfg, args.d)
    chosen = [x for x in (args.f, args.tate, args.model) if x is not None]
    if len(chosen) != 1:
        raise UserError("give exactly one of --f, --tate, --model")
    if args.tate is not None:
        b, c = (_elem(x, d) for x in _split(args.tate, 2))
        E, P = tate_to_short(TateCurve(b, c))
        n = point_order(E, P, cfg.order_bound)
        model = None
    else:
        if args.f is not None:
            model = shape_model(_poly_from_text(args.f, d))
        else:
            model = QuarticModel(*(_elem(x, d) for x in _split(args.model, 3)))
        E, P = jacobian_of_quartic(model)
        n = point_order(E, P, cfg.order_bound)
    out = {"command": "order", "order": n, "E": E.to_json(), "P": point_json(P),
           "model": None if model is None else model.to_json()}
    return out, EXIT_OK if n is not None else EXIT_UNDETECTED


def _split(text: str, n: int) -> list[str]:
    parts = text.split(",")
    if len(parts) != n:
        raise UserError(f"expected {n} comma-separated values, got {text!r}")
    return parts


def cmd_selftest(args, cfg: RunConfig) -> tuple[dict, int]:
    results = acceptance.run_all(cfg.seed)
    out = {"command": "selftest", "seed": cfg.seed, "results": [r.to_json() for r in results],
           "passed": all(r.passed for r in results)}
    return out, EXIT_OK if out["passed"] else EXIT_ERROR


COMMANDS = {
    "expand": cmd_expand,
    "family": cmd_family,
    "certify": cmd_certify,
    "points": cmd_points,
    "order": cmd_order,
    "selftest": cmd_selftest,
}


# rendering --------------------------------------------------------------------

def _is_elem(v) -> bool:
    return isinstance(v, dict) and set(v) == {"a", "b", "d"}


def _fmt(v) -> str:
    if _is_elem(v):
        return str(from_json(v))
    if isinstance(v, list) and v and all(_is_elem(c) for c in v):
        return str(Poly.from_json(v))
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}={_fmt(x)}" for k, x in v.items()) + "}"
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return "-" if v is None else str(v)


def render_table(out: dict) -> str:
    if out["command"] == "selftest":
        lines = [acceptance.CheckResult(r["id"], r["name"], r["passed"], r["detail"]).line()
                 for r in out["results"]]
        lines.append(f"seed {out['seed']}: {'all criteria pass' if out['passed'] else 'FAILURES'}")
        return "\n".join(lines)
    rows = []
    for key, val in out.items():
        if isinstance(val, list) and val and isinstance(val[0], dict) and not _is_elem(val[0]):
            rows.append(f"{key}: {len(val)}")
            rows.extend("  " + _fmt(item) for item in val)
        else:
            rows.append(f"{key}: {_fmt(val)}")
    return "\n".join(rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key=value file with defaults")
    common.add_argument("--format", choices=("json", "table"))
    common.add_argument("--max-steps", type=int)
    common.add_argument("--order-bound", type=int)
    common.add_argument("--height", type=int)
    common.add_argument("--seed", type=int)

    ap = argparse.ArgumentParser(prog="pellfrac", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="continued fraction of sqrt(f)")
    p.add_argument("--f", required=True, help="quartic coefficients, highest degree first")
    p.add_argument("--d", type=int, help="field Q(sqrt(d))")
    p.add_argument("--mu", help="expand mu*sqrt(f) instead")
    p.add_argument("--trace", action="store_true", help="include every (P, Q, a) step")

    p = sub.add_parser("family", parents=[common], help="instantiate a periodic family")
    p.add_argument("--tag", required=True, choices=families.TAGS)
    p.add_argument("--t", required=True)
    p.add_argument("--s", help="value, or 'sqrt' for the canonical root (default)")
    p.add_argument("--d", type=int)

    p = sub.add_parser("certify", parents=[common], help="odd-period square certificates")
    p.add_argument("--n", type=int, required=True, choices=sorted(families.ODD_PERIOD_TAG))
    p.add_argument("--d", type=int)
    p.add_argument("--t")
    p.add_argument("--s")

    p = sub.add_parser("points", parents=[common], help="search X1(N) over Q(sqrt(d))")
    p.add_argument("--curve", type=int, required=True, choices=modcurve.SUPPORTED)
    p.add_argument("--d", type=int)
    p.add_argument("--usable", action="store_true", help="only admissible non-cusp points")

    p = sub.add_parser("order", parents=[common], help="order of inf+ - inf- or of (0,0)")
    p.add_argument("--f", help="quartic coefficients, highest degree first")
    p.add_argument("--tate", help="b,c of a Tate normal form")
    p.add_argument("--model", help="u,v,w of (x^2+u)^2-4v(x+w)")
    p.add_argument("--d", type=int)

    sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    return ap


def _merge(cfg: RunConfig, args) -> RunConfig:
    over = {k: getattr(args, k) for k in ("format", "max_steps", "order_bound", "height", "seed")
            if getattr(args, k, None) is not None}
    return replace(cfg, **over)


def main(argv: Optional[list[str]] = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = _merge(load_config(args.config), args)
        out, code = COMMANDS[args.command](args, cfg)
    except families.InadmissibleParameters as exc:
        print(f"error: inadmissible parameters: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except families.CertificateMismatch as exc:
        print(f"error: certificate cross-check failed: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (UserError, ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if cfg.format == "json":
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        print(render_table(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
