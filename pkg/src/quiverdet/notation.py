"""Text and JSON forms of complexes.

A summand is written ``(a;b;c)`` with each slot in the exponent shorthand
(``2,1^2``), prefixed by its multiplicity when that exceeds one.  Summands
that differ only in the last slot are wrapped as ``(a;b;(c1⊕c2))``.

Comparing against hand-written term lists goes through
``render(parse(text))`` so that summand order and ``3,3`` versus ``3^2`` do
not matter.
"""

from __future__ import annotations

import json
import re
from typing import Callable, NamedTuple, Sequence

from .klw import KLWComplex, KroneckerSetting, sort_key
from .partitions import format_partition, pad, parse_partition, strip
from .tensor import TensorSetting

OPLUS = "⊕"

#: Delimiter slips in published term lists: a comma printed where a slot
#: separator is needed, leaving a summand with two slots.
KNOWN_ERRATA = {
    "(5,2^2;5,2^2,3^3)": "(5,2^2;5,2^2;3^3)",
    "(2^3;3,2^2,1)": "(2^3;3,2^2;1)",
}


class ParsedSummand(NamedTuple):
    slots: tuple
    mult: int
    degree: int


def _canon_text(text: str) -> str:
    text = text.replace("\\oplus", OPLUS).replace("+", OPLUS)
    return re.sub(r"\s+", "", text)


def normalize_golden(text: str, extra=()) -> tuple[str, list]:
    """Apply :data:`KNOWN_ERRATA` and any ``extra`` (bad, good) pairs; returns the text and the fixes used."""
    text = _canon_text(text)
    used = []
    for bad, good in list(KNOWN_ERRATA.items()) + [(_canon_text(b), _canon_text(g)) for b, g in extra]:
        if bad in text:
            text = text.replace(bad, good)
            used.append((bad, good))
    return text, used


def _split_top(text: str, sep: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    out.append("".join(cur))
    return out


_SUMMAND_RE = re.compile(r"^(\d*)\((.*)\)$")


def parse_term(text: str, dims: Sequence[int], degree_of: Callable[[tuple], int]) -> list[ParsedSummand]:
    """Parse one term, expanding wrapped last slots; weights padded to ``dims``."""
    text = _canon_text(text)
    if not text:
        return []
    out = []
    for chunk in _split_top(text, OPLUS):
        m = _SUMMAND_RE.match(chunk)
        if not m:
            raise ValueError(f"bad summand {chunk!r}")
        mult = int(m.group(1) or 1)
        slots = _split_top(m.group(2), ";")
        if len(slots) != len(dims):
            raise ValueError(f"summand {chunk!r} has {len(slots)} slots, expected {len(dims)}")
        head = tuple(_padded(parse_partition(s), r) for s, r in zip(slots[:-1], dims))
        last = slots[-1]
        if last.startswith("(") and last.endswith(")"):
            lasts = _split_top(last[1:-1], OPLUS)
        else:
            lasts = [last]
        for piece in lasts:
            full = head + (_padded(parse_partition(piece), dims[-1]),)
            out.append(ParsedSummand(full, mult, degree_of(full)))
    return out


def _padded(weight, rank):
    weight = tuple(weight)
    return pad(weight, rank) if len(weight) < rank else weight


def _fmt(weight) -> str:
    return format_partition(strip(weight))


def render_term(summands: Sequence) -> str:
    """Canonical shorthand for one term (summands need ``slots``, ``mult``, ``degree``)."""
    ordered = sorted(summands, key=sort_key)
    groups: dict = {}
    for s in ordered:
        key = (s.degree,) + tuple(s.slots[:-1]) + (s.mult,)
        groups.setdefault(key, []).append(s.slots[-1])
    parts = []
    for key, lasts in groups.items():
        head = ";".join(_fmt(w) for w in key[1:-1])
        mult = key[-1]
        tail = _fmt(lasts[0]) if len(lasts) == 1 else "(" + OPLUS.join(_fmt(w) for w in lasts) + ")"
        parts.append(f"{mult if mult > 1 else ''}({head};{tail})")
    return OPLUS.join(parts)


def degree_function(setting, weight) -> Callable[[tuple], int]:
    """Recover |lambda| from the displayed slots of a summand."""
    if isinstance(setting, TensorSetting):
        b1, w1 = setting.beta[0], weight[0]
        return lambda slots: sum(slots[0]) - b1 * w1
    return lambda slots: sum(slots[-1])


def canonical_golden(text: str, cx: KLWComplex, extra=()) -> tuple[str, list]:
    """``render(parse(text))`` in the frame of ``cx``, after errata normalization."""
    fixed, used = normalize_golden(text, extra)
    parsed = parse_term(fixed, cx.dims, degree_function(cx.setting, cx.weight))
    return render_term(parsed), used


def compare_term(cx: KLWComplex, i: int, golden: str, extra=()) -> tuple[bool, str]:
    """Compare term i of ``cx`` with a hand-written golden; returns (ok, message)."""
    want, used = canonical_golden(golden, cx, extra)
    got = render_term(cx.term(i))
    note = f" (normalized {used})" if used else ""
    if want == got:
        return True, f"F_{i} ok{note}"
    return False, f"F_{i} mismatch{note}\n  expected: {want}\n  computed: {got}"


def render_shorthand(cx: KLWComplex) -> str:
    return "\n".join(f"F_{i} = {render_term(cx.term(i))}" for i in cx.indices())


def _setting_json(setting) -> dict:
    if isinstance(setting, KroneckerSetting):
        return {"m": setting.m, "alpha": list(setting.alpha), "gamma": list(setting.gamma)}
    return {"alpha": list(setting.alpha), "gamma": list(setting.gamma)}


def to_json_obj(cx: KLWComplex) -> dict:
    tensor = isinstance(cx.setting, TensorSetting)
    terms = {}
    for i in cx.indices():
        rows = []
        for s in cx.term(i):
            if tensor:
                row = {"lambda1": list(s.lambda1), "lambda2": list(s.lambda2), "lambda3": list(s.lambda3)}
            else:
                row = {"mu": list(s.mu_circ), "nu": list(s.nu_circ), "lambdaConj": list(s.lambda_conj)}
            row.update(mult=s.mult, degree=s.degree)
            rows.append(row)
        terms[str(i)] = rows
    return {"setting": _setting_json(cx.setting), "weight": list(cx.weight), "terms": terms}


def render(cx: KLWComplex, fmt: str = "shorthand") -> str:
    if fmt == "json":
        return json.dumps(to_json_obj(cx), ensure_ascii=False, sort_keys=False)
    if fmt == "shorthand":
        return render_shorthand(cx)
    raise ValueError(f"unknown format {fmt!r}")
