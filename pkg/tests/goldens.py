"""Access to the checked-in example manifest and its golden term lists."""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

from quiverdet.klw import KroneckerSetting, complex
from quiverdet.notation import canonical_golden, render_term
from quiverdet.tensor import TensorSetting, tensor_complex

ROOT = Path(__file__).resolve().parent.parent
MANIFEST = ROOT / "manifests" / "examples.json"


@lru_cache(maxsize=None)
def jobs() -> dict:
    data = json.loads(MANIFEST.read_text())
    return {j["name"]: j for j in data["jobs"] if j["kind"] in ("complex", "tcomplex")}


def golden(name: str) -> dict:
    return json.loads((MANIFEST.parent / jobs()[name]["expected_file"]).read_text())


@lru_cache(maxsize=None)
def computed(name: str):
    job = jobs()[name]
    p = job["params"]
    if job["kind"] == "complex":
        return complex(KroneckerSetting(p["m"], tuple(p["alpha"]), tuple(p["gamma"])), tuple(p["weight"]))
    return tensor_complex(TensorSetting(tuple(p["alpha"]), tuple(p["gamma"])), tuple(p["weight"]))


def mismatches(name: str, use_errata: bool = False) -> list:
    """Indices whose canonical golden differs from the computed term.

    Only the delimiter fixes apply unless ``use_errata`` adds the job's own
    documented corrections.  An index computed nonzero but missing from an
    exact golden also counts.
    """
    g = golden(name)
    cx = computed(name)
    out = []
    for key, text in g["terms"].items():
        extra = [tuple(e) for e in g.get("errata", {}).get(key, ())] if use_errata else ()
        want, _ = canonical_golden(text, cx, extra)
        if want != render_term(cx.term(int(key))):
            out.append(int(key))
    if g.get("exact", True):
        out.extend(sorted(set(cx.indices()) - {int(k) for k in g["terms"]}))
    return out
