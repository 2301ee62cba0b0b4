"""Code description files and JSON reports.

A description is a JSON object::

    {"q": 4, "gamma": 2, "m": 3, "layout": "block",
     "generators": [["<poly>", "<poly>"], ...],
     "two_generator": {"g1": "...", "g2": "...", "v1": "...", "v2": "..."}}

``q`` is the field size and ``gamma`` (optional) its extension degree, used
only as a consistency check.  ``generators`` lists rows of polynomial
products, one string per block; ``two_generator`` (optional) gives the
structured form, from which ``generators`` can be omitted.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import gf
from .errors import ConfigError, InvalidCode, ParseError
from .polyring import Poly, RingElem, gcd_many
from .qccode import TGenQc, TwoGenQc

LAYOUTS = ("block", "interleaved")


def dumps(obj) -> str:
    """Canonical report text: insertion-ordered keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_report(obj, path: str | Path | None):
    text = dumps(obj)
    if path is None or str(path) == "-":
        import sys
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")
    return text


def load_json(path: str | Path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise ConfigError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from exc


def parse_field(spec) -> gf.GF:
    """Accept 4, "4", "2^2" or "2**2"."""
    try:
        if isinstance(spec, int):
            return gf.field_of_order(spec)
        s = str(spec).replace("**", "^").strip()
        if "^" in s:
            p, e = s.split("^")
            return gf.ctx_new(int(p), int(e))
        return gf.field_of_order(int(s))
    except (ValueError, ArithmeticError) as exc:
        raise ConfigError(f"bad field specification {spec!r}: {exc}") from exc


class Description:
    """Parsed code description."""

    def __init__(self, data: dict, name: str | None = None):
        if not isinstance(data, dict):
            raise ConfigError("description must be a JSON object")
        for key in ("q", "m"):
            if key not in data:
                raise ConfigError(f"description lacks required key {key!r}")
        self.data = data
        self.name = name or data.get("name")
        self.ctx = parse_field(data["q"])
        if "gamma" in data and int(data["gamma"]) != self.ctx.gamma:
            raise ConfigError(f"gamma {data['gamma']} does not match q = {data['q']}")
        self.m = int(data["m"])
        if self.m < 1:
            raise ConfigError("m must be positive")
        self.layout = data.get("layout", "block")
        if self.layout not in LAYOUTS:
            raise ConfigError(f"layout must be one of {LAYOUTS}")
        self.two_gen = None
        tg = data.get("two_generator")
        try:
            if tg is not None:
                self.two_gen = TwoGenQc(self.ctx, self.m, *(self._poly(tg[k]) for k in ("g1", "g2", "v1", "v2")))
            rows = data.get("generators")
            if rows is None:
                if self.two_gen is None:
                    raise ConfigError("description needs generators or two_generator")
                self.tgen = self.two_gen.as_tgen()
            else:
                self.tgen = from_products(self.ctx, self.m, [[self._poly(s) for s in row] for row in rows])
                if self.two_gen is not None:
                    from . import matfq
                    if not matfq.row_space_equal(self.tgen.generator_matrix(), self.two_gen.generator_matrix()):
                        raise InvalidCode("generators and two_generator describe different codes")
        except KeyError as exc:
            raise ConfigError(f"two_generator lacks key {exc}") from exc

    def _poly(self, s) -> Poly:
        if not isinstance(s, str):
            raise ConfigError(f"polynomials must be strings, got {s!r}")
        try:
            return Poly.parse(self.ctx, s)
        except ParseError as exc:
            raise ConfigError(str(exc)) from exc

    @property
    def code(self):
        return self.two_gen if self.two_gen is not None else self.tgen

    def echo(self) -> dict:
        out = {"q": self.ctx.q, "gamma": self.ctx.gamma, "m": self.m, "layout": self.layout}
        if self.two_gen is not None:
            out["two_generator"] = self.two_gen.params()
        out["generators"] = [[str(p) for p in row] for row in products(self.tgen)]
        return out


def from_products(ctx: gf.GF, m: int, rows) -> TGenQc:
    """Recover the factored form (g_i, k_ij) from rows of products g_i k_ij."""
    xm = Poly.xm_minus_1(ctx, m)
    fact = []
    for row in rows:
        row = [RingElem(p, m).poly for p in row]
        g = gcd_many(xm, *row)
        fact.append((g, [p.exact_div(g) if not p.is_zero() else p for p in row]))
    return TGenQc(ctx, m, fact)


def products(c: TGenQc):
    return [[r.poly for r in row] for row in c.generator_polys()]


def describe(code, name: str | None = None, layout: str = "block") -> dict:
    """Description object for a TwoGenQc or TGenQc."""
    out = {}
    if name:
        out["name"] = name
    out.update({"q": code.ctx.q, "gamma": code.ctx.gamma, "m": code.m, "layout": layout})
    if isinstance(code, TwoGenQc):
        out["two_generator"] = code.params()
        code = code.as_tgen()
    out["generators"] = [[str(p) for p in row] for row in products(code)]
    return out


def load_description(path: str | Path) -> Description:
    return Description(load_json(path), name=Path(path).stem)
