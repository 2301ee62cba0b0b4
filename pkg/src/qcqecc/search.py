"""Deterministic search for two-generator QC codes yielding stabilizer codes.

Candidates are tuples (g1, g2, v1, v2).  Divisors of x^m - 1 are listed by
their exponent vectors over the irreducible factors in colex order; v
polynomials run over all coefficient vectors of length ``v_degree + 1`` in
lexicographic order of their ascending coefficient strings.  Sampling draws
candidate indices from a seeded generator and then visits them in that same
canonical order, so a fixed seed always yields the same report.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import distance, gf, qccode, quantum
from .errors import BudgetExceeded, InvalidCode, RangeTooLarge
from .polyring import Poly, RingElem, factor_xm_minus_1, gcd


def divisors(ctx: gf.GF, m: int) -> list[Poly]:
    """Monic divisors of x^m - 1, exponent vectors in colex order."""
    fac = factor_xm_minus_1(ctx, m)
    out = []
    # itertools.product varies the last slot fastest; feeding the factors
    # reversed makes the first exponent vary fastest, i.e. colex order
    for rev in itertools.product(*[range(e + 1) for _, e in reversed(fac)]):
        g = Poly.constant(ctx, 1)
        for (f, _), e in zip(fac, reversed(rev)):
            g = g * f ** e
        out.append(g)
    return out


def v_polys(ctx: gf.GF, m: int, v_degree: int) -> list[Poly]:
    n = min(v_degree, m - 1) + 1
    return [Poly(ctx, np.array(c, dtype=np.int64)) for c in itertools.product(range(ctx.q), repeat=n)]


def _key(p: Poly) -> str:
    return " ".join(str(int(c)) for c in p.c) or "0"


@dataclass(frozen=True)
class SearchConfig:
    q: int
    m: int
    kind: str = "S"
    test: str = "so"
    v_degree: int | None = None
    min_k: int = 0
    samples: int | None = None
    seed: int = 0
    top: int = 10
    budget: int = distance.DEFAULT_BUDGET

    def echo(self) -> dict:
        return {"q": self.q, "m": self.m, "kind": self.kind, "test": self.test,
                "v_degree": self.v_degree if self.v_degree is not None else self.m - 1,
                "min_k": self.min_k, "samples": self.samples, "seed": self.seed,
                "top": self.top, "budget": self.budget}


def _candidates(cfg: SearchConfig, ndiv: int, nv: int):
    total = ndiv * ndiv * nv * nv
    if cfg.samples is None:
        if total > cfg.budget:
            raise RangeTooLarge(f"{total} candidates exceed the budget {cfg.budget}; lower --v-degree or sample")
        return total, range(total)
    rng = np.random.default_rng(cfg.seed)
    n = min(cfg.samples, total)
    picks = rng.choice(total, size=n, replace=False) if total <= 1 << 24 else rng.integers(0, total, size=n)
    return total, sorted({int(i) for i in picks})


def run(cfg: SearchConfig) -> dict:
    ctx = gf.field_of_order(cfg.q)
    qccode._check_kind(cfg.kind)
    if cfg.test not in ("so", "dc"):
        raise ValueError("test must be 'so' or 'dc'")
    if cfg.kind == "H":
        qccode._require_quadratic(ctx)
    m = cfg.m
    divs = divisors(ctx, m)
    vs = v_polys(ctx, m, m - 1 if cfg.v_degree is None else cfg.v_degree)
    ring_vs = [RingElem(v, m) for v in vs]
    xm = Poly.xm_minus_1(ctx, m)
    nd, nv = len(divs), len(vs)
    total, order = _candidates(cfg, nd, nv)

    # clauses 1 and 3 depend on a single (g, v) pair, so they are tabulated lazily
    c1: dict[tuple[int, int], bool] = {}
    c3: dict[tuple[int, int], bool] = {}
    one = RingElem(Poly.constant(ctx, 1), m)
    kind = cfg.kind
    passed = 0
    found = []
    for idx in order:
        idx, b = divmod(idx, nv)
        idx, a = divmod(idx, nv)
        i, j = divmod(idx, nd)
        g1, g2, v1, v2 = divs[i], divs[j], ring_vs[a], ring_vs[b]
        d = (v1 * v2 - one).poly
        if d.is_zero() or gcd(d, xm).degree != 0:
            continue
        if cfg.test == "so":
            if (i, a) not in c1:
                c1[(i, a)] = qccode.so_clause(kind, 1, m, g1, g2, v1, v2)
            if not c1[(i, a)]:
                continue
            if (j, b) not in c3:
                c3[(j, b)] = qccode.so_clause(kind, 3, m, g1, g2, v1, v2)
            if not c3[(j, b)] or not qccode.so_clause(kind, 2, m, g1, g2, v1, v2):
                continue
        try:
            code = qccode.TwoGenQc(ctx, m, g1, g2, v1, v2)
        except InvalidCode:
            continue
        if cfg.test == "dc":
            if not qccode.is_dual_containing(code, kind).holds:
                continue
            code = qccode.dual(code, kind)
        passed += 1
        deg = code.g1.degree + code.g2.degree - m
        k = 2 * deg if kind in "EH" else deg
        if k < cfg.min_k:
            continue
        try:
            sp = quantum.STABILIZERS[kind](code, budget=cfg.budget, partial=True)
        except BudgetExceeded:
            continue
        found.append({
            "params": str(sp), "n": sp.n, "k": sp.k, "d": sp.d, "d_status": sp.d_status,
            "g1": str(g1), "g2": str(g2), "v1": str(vs[a]), "v2": str(vs[b]),
            "_key": "|".join(_key(p) for p in (g1, g2, vs[a], vs[b])),
        })
    found.sort(key=lambda r: (-(r["d"] or 0), -r["k"], r["_key"]))
    results = []
    for r in found[: cfg.top]:
        r = dict(r)
        r.pop("_key")
        results.append(r)
    return {"command": "search", "query": cfg.echo(), "divisors": nd, "v_polynomials": nv,
            "space": total, "visited": len(order), "passing": passed, "results": results}
