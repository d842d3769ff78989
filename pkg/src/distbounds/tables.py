"""Golden tables shipped with the package and their regeneration."""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Iterable, Sequence

from .multi import best_bound
from .single import T4Params, theorem4_bound, theorem4_optimize, theorem6_optimize, theorem7_optimize

__all__ = [
    "TABLES",
    "golden_path",
    "load_golden",
    "table_rows",
    "compare_rows",
    "default_workers",
    "Deviation",
    "closed_form_at_golden",
]

TABLES = {"3.3": "table_3_3.csv", "4.2": "table_4_2.csv", "6.6": "table_6_6.csv"}
WORKERS_ENV = "DISTBOUNDS_WORKERS"


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{WORKERS_ENV}={raw!r} is not an integer") from None


def golden_path(which: str):
    if which not in TABLES:
        raise KeyError(f"unknown table {which!r}; choose from {sorted(TABLES)}")
    return resources.files("distbounds") / "data" / TABLES[which]


def _parse(text: str) -> list[dict]:
    body = io.StringIO("".join(l for l in text.splitlines(keepends=True) if not l.startswith("#")))
    return list(csv.DictReader(body))


def load_golden(which: str, source=None) -> list[dict]:
    """Rows of a golden table as dicts of strings (provenance comments dropped)."""
    if source is None:
        text = golden_path(which).read_text()
    else:
        with open(source) as fh:
            text = fh.read()
    return _parse(text)


# --- row generators (module-level so worker processes can pickle them) ----

def _row_3_3(item: tuple[int, int]) -> dict:
    k, _ = item
    opt = theorem4_optimize(k)
    return {"k": k, "b": opt.params.get("b"), "a": opt.params.get("a"),
            "value": opt.value, "valid": opt.valid}


def _row_4_2(item: tuple[int, int]) -> dict:
    k, seed = item
    t7 = theorem7_optimize(k, seed=seed)
    t6 = theorem6_optimize(k)
    return {"k": k, "b_neg": t7.params["b_neg"], "b_pos": t7.params["b_pos"],
            "t7_value": t7.value, "b0": t6.params["b0"], "t6_value": t6.value,
            "max_value": max(t6.value, t7.value)}


def _row_6_6(item: tuple[int, int, int, int]) -> dict:
    k, m, r_max, seed = item
    res = best_bound(k, m, r_max=r_max, seed=seed)
    return {"k": k, "m": m, "value": res.value, "r": res.r, "valid": res.valid,
            "v": " ".join(f"{x:.8f}" for x in res.v_star)}


def _run(fn: Callable, items: Sequence, workers: int) -> list[dict]:
    # completion order never leaks into the output
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def table_rows(which: str, ks: Iterable[int], ms: Iterable[int] = (1,), r_max: int = 10,
               workers: int = 1, seed: int = 0) -> list[dict]:
    ks = list(ks)
    if which == "3.3":
        return _run(_row_3_3, [(k, seed) for k in ks], workers)
    if which == "4.2":
        return _run(_row_4_2, [(k, seed) for k in ks], workers)
    if which == "6.6":
        items = [(k, m, r_max, seed) for m in ms for k in ks]
        return _run(_row_6_6, items, workers)
    raise KeyError(f"unknown table {which!r}")


VALUE_COLUMNS = {"3.3": ("value",), "4.2": ("t7_value", "t6_value", "max_value"), "6.6": ("value",)}


@dataclass(frozen=True)
class Deviation:
    key: tuple
    column: str
    computed: float
    golden: float

    @property
    def abs_diff(self) -> float:
        return abs(self.computed - self.golden)


def compare_rows(which: str, rows: list[dict], golden: list[dict]) -> list[Deviation]:
    """Pair computed rows with golden rows by key and list per-column deviations."""
    key_cols = ("k", "m") if which == "6.6" else ("k",)
    index = {tuple(int(g[c]) for c in key_cols): g for g in golden}
    out = []
    for row in rows:
        key = tuple(int(row[c]) for c in key_cols)
        g = index.get(key)
        if g is None:
            continue
        for col in VALUE_COLUMNS[which]:
            out.append(Deviation(key, col, float(row[col]), float(g[col])))
    return out


def closed_form_at_golden(row: dict) -> float:
    """Coding-bound value at a table row's printed (b, a)."""
    return theorem4_bound(T4Params(float(row["a"]), float(row["b"]), int(row["k"]))).value
