"""Report builders shared by the CLI subcommands and the reproduction runner.

Every builder returns a plain dict whose key order is fixed by construction,
so serialising it with :func:`qcqecc.io.dumps` is deterministic.
"""

from __future__ import annotations

import warnings

from . import distance, qccode, quantum
from .io import Description
from .qccode import KIND_NAMES, TwoGenQc


def _kinds_for(code, kinds):
    out = []
    for k in kinds:
        if k == "H" and code.ctx.sub_q is None:
            continue
        if k == "S" and code.l % 2:
            continue
        out.append(k)
    return out


def check(desc: Description, kinds=None) -> dict:
    """Self-orthogonality (and, for two-generator codes, dual-containment) verdicts.

    Without explicit ``kinds`` every inner product that applies to the code is used.
    """
    code = desc.code
    out = {}
    for kind in kinds or _kinds_for(code, qccode.KINDS):
        name = KIND_NAMES[kind]
        so = qccode.is_self_orthogonal(desc.tgen, kind)
        entry = {"verdict": f"{name} self-orthogonal: {str(so.holds).lower()}",
                 "self_orthogonal": so.holds}
        if isinstance(code, TwoGenQc):
            entry["conditions"] = dict(qccode.two_gen_so_conditions(code, kind).conditions)
            dc = qccode.is_dual_containing(code, kind)
            entry["dual_containing"] = dc.holds
            entry["dual_containing_conditions"] = dict(dc.conditions)
        else:
            entry["failing_pairs"] = [list(p) for p in so.failures]
        out[kind] = entry
    return {"command": "check", "input": desc.echo(), "checks": out}


def dual(desc: Description, kind: str) -> dict:
    code = desc.code
    out = {"command": "dual", "input": desc.echo(), "kind": kind}
    if isinstance(code, TwoGenQc):
        d = qccode.dual(code, kind)
        out["dual"] = d.params()
        out["dimension"] = d.dimension()
    else:
        out["dimension"] = qccode.dual_matrix(code, kind).rows
    return out


def distance_report(desc: Description, weight: str, budget: int) -> dict:
    code = desc.tgen
    out = {"command": "distance", "input": desc.echo(), "weight": weight, "budget": budget}
    res = distance.min_weight(code.generator_matrix(), None, weight, budget)
    out["min_distance"] = res.value
    out["method"] = res.method
    if res.witness is not None:
        w = res.witness
        if desc.layout == "interleaved":
            w = qccode.to_interleaved(w, code.m, code.l)
        out["witness"] = [int(x) for x in w]
    return out


def stabilizer(code: TwoGenQc, kind: str, budget: int, partial: bool = True,
               dual_dimension: bool = False) -> dict:
    """Self-orthogonality verdict and the derived stabilizer parameters."""
    so = qccode.two_gen_so_conditions(code, kind)
    out = {"kind": kind, "self_orthogonal": so.holds, "conditions": dict(so.conditions)}
    if so.holds:
        sp = quantum.STABILIZERS[kind](code, budget=budget, partial=partial)
        out.update({"params": str(sp), "n": sp.n, "k": sp.k, "d": sp.d, "q": sp.q,
                    "d_status": sp.d_status})
    else:
        out["params"] = None
    if dual_dimension:
        out["dual_dimension"] = qccode.dual(code, kind).dimension()
    return out


def legacy_comparison(code: TwoGenQc, which: str) -> dict:
    kind = which[-1]
    dc = qccode.is_dual_containing(code, kind)
    return {"kind": kind, "legacy_condition": which, "dual_containing": dc.holds,
            "conditions": dict(dc.conditions),
            "legacy_sufficient": qccode.legacy_sufficient_conditions(code, which)}


def classical(desc: Description, kind: str | None, budget: int) -> dict:
    code = desc.tgen
    out = {"generator_rows": code.generator_matrix().rows, "dimension": code.dimension()}
    if kind:
        out["self_orthogonal"] = qccode.is_self_orthogonal(code, kind).holds
    out["min_distance"] = qccode.min_distance(code, budget=budget)
    return out


# ---- synchronizable codes ---------------------------------------------------

def build_chain(cfg: dict) -> quantum.QscChain:
    """Chain from a sync config (see the README for the keys)."""
    builder = cfg.get("builder", "prime_power")
    if builder == "prime_power":
        r, s = cfg["r"], cfg["s"]
        return quantum.build_qsc_prime_power(int(cfg["q"]), int(cfg["t"]), int(r[0]), int(r[1]),
                                             int(s[0]), int(s[1]), cfg["v1"], cfg["v2"])
    if builder == "general":
        return quantum.build_qsc_general(int(cfg["q"]), int(cfg["l"]), int(cfg["t"]), cfg["r"], cfg["j"],
                                         cfg["v1"], cfg["v2"])
    raise ValueError(f"unknown builder {builder!r}")


def sync(cfg: dict, a_l: int, a_r: int, budget: int) -> dict:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", quantum.ConstructionWarning)
        chain = build_chain(cfg)
    sp = quantum.qsc_from_chain(chain, a_l, a_r, budget)
    return {
        "params": str(sp),
        "a_l": sp.a_l, "a_r": sp.a_r,
        "m": chain.m,
        "length_base": 2 * chain.m,
        "n": sp.n, "k": sp.k, "q": sp.q,
        "formula_k": chain.formula_k,
        "max_tolerance": sp.max_tolerance,
        "chain_verified": True,
        "inner": chain.inner.params(),
        "outer": chain.outer.params(),
        "f": str(chain.f),
        "phase_floor": sp.phase_floor,
        "bit_floor": sp.bit_floor,
        "warnings": list(chain.warnings),
    }

