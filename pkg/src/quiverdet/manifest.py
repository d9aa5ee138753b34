"""Batch jobs with golden values, run from a JSON manifest.

A manifest is ``{"jobs": [...]}``; each job has ``kind``, ``params`` and
optionally ``expected`` (inline) or ``expected_file`` (relative path to a
JSON file holding the same value).  Complex goldens are
``{"terms": {i: text}, "exact": bool, "errata": {i: [[bad, good], ...]}}``;
job-level errata are applied on top of the delimiter fixes and show up in
the report.  Jobs run in a thread pool; the report is
ordered by job index regardless of completion order.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .bott import GrassmannianShape, bott, cohomology_Qdual_twist, cohomology_S_twist
from .characters import kronecker
from .klw import KroneckerSetting, cm_weight_search, complex, degree, dual_weight
from .notation import compare_term, to_json_obj
from .partitions import parse_partition
from .quiver import generic_hom_ext, parse_quiver
from .tensor import TensorSetting, codim_and_fiber, tensor_complex, tensor_degree, tensor_dual_weight

KINDS = ("complex", "tcomplex", "degree", "tdegree", "tcodim", "ext", "cm-search", "kron", "bott", "dual-weight")


@dataclass
class JobResult:
    index: int
    name: str
    kind: str
    ok: bool
    lines: list = field(default_factory=list)
    value: object = None


@dataclass
class Report:
    results: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def text(self) -> str:
        out = []
        for r in self.results:
            out.append(f"[{'PASS' if r.ok else 'FAIL'}] #{r.index} {r.kind} {r.name}")
            out.extend("    " + line for line in r.lines)
        passed = sum(r.ok for r in self.results)
        out.append(f"{passed}/{len(self.results)} jobs passed")
        return "\n".join(out)


def _part(x):
    return parse_partition(x) if isinstance(x, str) else tuple(x)


def _kron_setting(p):
    return KroneckerSetting(int(p["m"]), tuple(p["alpha"]), tuple(p["gamma"]))


def _tensor_setting(p):
    return TensorSetting(tuple(p["alpha"]), tuple(p["gamma"]))


def _check_terms(cx, expected, lines):
    ok = True
    errata = expected.get("errata", {})
    for key, golden in expected.get("terms", {}).items():
        good, msg = compare_term(cx, int(key), golden, [tuple(e) for e in errata.get(key, ())])
        ok &= good
        lines.append(msg)
    if expected.get("exact", True):
        extra = sorted(set(cx.indices()) - {int(k) for k in expected.get("terms", {})})
        if extra:
            ok = False
            lines.append(f"unexpected nonzero terms at {extra}")
    return ok


def _simple(value, expected, lines):
    if value == expected:
        lines.append(f"value {value!r}")
        return True
    lines.append(f"expected {expected!r}, computed {value!r}")
    return False


def execute(kind: str, params: dict, seed: int = 0):
    """Run one job and return its JSON-friendly value."""
    if kind in ("complex", "tcomplex"):
        if kind == "complex":
            cx = complex(_kron_setting(params), tuple(params.get("weight", (0, 0))))
        else:
            cx = tensor_complex(_tensor_setting(params), tuple(params.get("weight", (0, 0, 0))))
        return cx
    if kind == "degree":
        return degree(_kron_setting(params))
    if kind == "tdegree":
        return tensor_degree(_tensor_setting(params))
    if kind == "tcodim":
        cf = codim_and_fiber(_tensor_setting(params), seed=params.get("seed", seed))
        return {"e": cf.e, "h": cf.h, "probe_e": cf.probe_e, "probe_h": cf.probe_h}
    if kind == "ext":
        q = parse_quiver(params["quiver"])
        res = generic_hom_ext(q, params["gamma"], params["beta"], seed=params.get("seed", seed))
        return {"hom": res.hom, "ext": res.ext, "euler": res.euler}
    if kind == "cm-search":
        st = _kron_setting(params)
        lo, hi = params["box"]
        box = [(a, b) for a in range(lo, hi + 1) for b in range(lo, hi + 1)]
        res = cm_weight_search(st, box, seed=params.get("seed", seed))
        return {"weights": [[list(w), cert] for w, cert in res.weights], "reason": res.reason}
    if kind == "kron":
        return kronecker(_part(params["lambda"]), _part(params["mu"]), _part(params["nu"]))
    if kind == "bott":
        shape = GrassmannianShape(int(params["r"]), int(params["s"]))
        twist = params.get("twist")
        if twist == "S":
            out = cohomology_S_twist(shape, _part(params["partition"]), int(params["w"]))
        elif twist == "Qdual":
            out = cohomology_Qdual_twist(shape, _part(params["partition"]), int(params["w"]))
        else:
            out = bott(shape, tuple(params["on_q"]), tuple(params["on_s"]))
        return None if out is None else {"degree": out.degree, "weight": list(out.weight), "dual": out.dual}
    if kind == "dual-weight":
        if "m" in params:
            return list(dual_weight(_kron_setting(params), tuple(params["weight"])))
        return list(tensor_dual_weight(_tensor_setting(params), tuple(params["weight"])))
    raise ValueError(f"unknown job kind {kind!r}")


def run_job(index: int, job: dict, base: Path, seed: int = 0) -> JobResult:
    kind = job.get("kind")
    name = job.get("name", "")
    res = JobResult(index, name, kind, False)
    try:
        if kind not in KINDS:
            raise ValueError(f"unknown job kind {kind!r}")
        if "expected_file" in job:
            path = base / job["expected_file"]
            if not path.exists():
                raise FileNotFoundError(f"missing golden file {path}")
            expected = json.loads(path.read_text())
        elif "expected" in job:
            expected = job["expected"]
        else:
            expected = None
        value = execute(kind, job.get("params", {}), seed)
        if kind in ("complex", "tcomplex"):
            res.value = to_json_obj(value)
            res.ok = True if expected is None else _check_terms(value, expected, res.lines)
        else:
            res.value = value
            res.ok = True if expected is None else _simple(value, expected, res.lines)
    except Exception as exc:  # reported per job, never aborts the run
        res.lines.append(f"error: {type(exc).__name__}: {exc}")
        res.ok = False
    return res


def load_manifest(path) -> dict:
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict) or not isinstance(data.get("jobs"), list):
        raise ValueError("manifest must be an object with a 'jobs' list")
    return data


def run_manifest(path, jobs: int = 1, seed: int = 0) -> Report:
    path = Path(path)
    data = load_manifest(path)
    base = path.parent
    items = list(enumerate(data["jobs"]))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda ij: run_job(ij[0], ij[1], base, seed), items))
    else:
        results = [run_job(i, j, base, seed) for i, j in items]
    results.sort(key=lambda r: r.index)
    return Report(results)
