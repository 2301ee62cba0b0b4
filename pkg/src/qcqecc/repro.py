"""Replay the committed worked examples and compare against golden reports.

Each file in ``data/codes`` is a code description (or a sync config) with a
``repro`` block naming the task, the published figures (``published``)
and curated notes.  The computed value is always the one reported as truth;
``agreement`` records, key by key, whether it matches the published figure.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from . import distance, reports
from .errors import ConfigError
from .io import Description, dumps, load_json

DATA = Path(str(resources.files("qcqecc") / "data"))
CODES = DATA / "codes"
GOLDEN = DATA / "golden"


def names() -> list[str]:
    return sorted(p.stem for p in CODES.glob("*.json"))


def load(name: str) -> dict:
    path = CODES / f"{name}.json"
    if not path.exists():
        raise ConfigError(f"unknown reproduction item {name!r}")
    return load_json(path)


def compute(item: dict, budget: int = distance.DEFAULT_BUDGET) -> dict:
    rep = item.get("repro")
    if not rep:
        raise ConfigError(f"{item.get('name')}: no repro block")
    task = rep["task"]
    if task == "sync":
        return reports.sync(item["sync"], int(rep.get("a_l", 0)), int(rep.get("a_r", 0)), budget)
    desc = Description(item)
    if task == "classical":
        return reports.classical(desc, rep.get("kind"), budget)
    if task == "stabilizer":
        return reports.stabilizer(desc.code, rep["kind"], budget, dual_dimension=bool(rep.get("dual_dimension")))
    if task == "legacy_comparison":
        return reports.legacy_comparison(desc.code, rep["legacy"])
    raise ConfigError(f"unknown task {task!r}")


def report(name: str, budget: int = distance.DEFAULT_BUDGET) -> dict:
    item = load(name)
    rep = item["repro"]
    computed = compute(item, budget)
    published = rep.get("published", {})
    agreement = {k: computed.get(k) == v for k, v in published.items()}
    echo = {k: v for k, v in item.items() if k not in ("name", "repro")}
    out = {"name": name, "task": rep["task"], "input": echo, "computed": computed,
           "published": published, "agreement": agreement,
           "discrepancies": [k for k, ok in agreement.items() if not ok]}
    out["notes"] = list(rep.get("notes", []))
    return out


def golden_text(name: str) -> str | None:
    path = GOLDEN / f"{name}.json"
    return path.read_text(encoding="utf-8") if path.exists() else None


def run(selected: list[str] | None = None, out_dir: str | Path | None = None,
        update_golden: bool = False, budget: int = distance.DEFAULT_BUDGET) -> dict:
    """Recompute the selected items (all by default) and diff them against golden files."""
    selected = selected or names()
    rows = []
    for name in selected:
        text = dumps(report(name, budget))
        if out_dir is not None:
            Path(out_dir).mkdir(parents=True, exist_ok=True)
            (Path(out_dir) / f"{name}.json").write_text(text, encoding="utf-8")
        if update_golden:
            GOLDEN.mkdir(parents=True, exist_ok=True)
            (GOLDEN / f"{name}.json").write_text(text, encoding="utf-8")
        gold = golden_text(name)
        status = "missing" if gold is None else ("match" if gold == text else "differs")
        rows.append({"name": name, "golden": status})
    return {"command": "repro", "items": rows,
            "all_match": all(r["golden"] == "match" for r in rows)}
