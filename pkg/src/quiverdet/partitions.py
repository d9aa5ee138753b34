"""Partitions, dominant weights, Schur-functor dimensions and Bott windows.

Partitions are plain tuples of positive ints in weakly decreasing order
(no trailing zeros).  Dominant weights are weakly decreasing int tuples whose
length is the rank of the ambient ``GL``; zeros and negatives are stored.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import groupby
from typing import Iterator, NamedTuple, Sequence

Partition = tuple  # tuple[int, ...], weakly decreasing, positive entries
DominantWeight = tuple  # tuple[int, ...], weakly decreasing, len == rank


class PWindow(NamedTuple):
    """The admissibility window P(s, q, t, w) used by Bott's algorithm."""

    s: int
    q: int
    t: int
    w: int


def make_partition(parts: Sequence[int]) -> Partition:
    lam = tuple(int(x) for x in parts)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not weakly decreasing: {lam}")
    lam = tuple(x for x in lam if x != 0)
    if any(x < 0 for x in lam):
        raise ValueError(f"negative part in partition: {lam}")
    return lam


def is_partition(seq: Sequence[int]) -> bool:
    return all(x >= 1 for x in seq) and all(a >= b for a, b in zip(seq, seq[1:]))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def pad(weight: Sequence[int], rank: int) -> DominantWeight:
    """Pad with zeros (or trim trailing zeros) to the given rank."""
    w = tuple(weight)
    if len(w) > rank:
        if any(w[rank:]):
            raise ValueError(f"weight {w} does not fit in rank {rank}")
        return w[:rank]
    return w + (0,) * (rank - len(w))


def strip(weight: Sequence[int]) -> tuple:
    w = list(weight)
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """Componentwise containment of Young diagrams, ``inner`` inside ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> tuple:
    """All partitions of ``n`` in descending lexicographic order.

    ``max_part`` bounds the first part, ``max_len`` the number of parts.
    """
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    return tuple(_partitions(n, max_part, max_len))


def _partitions(n: int, max_part: int, max_len: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        if first * max_len < n:
            break
        for rest in _partitions(n - first, first, max_len - 1):
            yield (first,) + rest


def _bounded_sequences(total: int, length: int, lo: int, hi: int | None) -> Iterator[tuple]:
    """Weakly decreasing integer sequences of given length and sum, entries in [lo, hi]."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if total < lo * length:
        return
    top = total - lo * (length - 1)
    if hi is not None:
        top = min(top, hi)
    for first in range(top, lo - 1, -1):
        if first * length < total:
            break
        for rest in _bounded_sequences(total - first, length - 1, lo, first):
            yield (first,) + rest


def schur_dim(eta: Sequence[int], rank: int | None = None) -> int:
    """Dimension of the irreducible GL_rank module with highest weight ``eta``.

    Uses the hook-content formula after shifting ``eta`` to be non-negative.
    """
    eta = tuple(eta)
    if rank is None:
        rank = len(eta)
    if any(a < b for a, b in zip(eta, eta[1:])):
        raise ValueError(f"weight not dominant: {eta}")
    if len(eta) != rank:
        if eta and eta[-1] < 0:
            raise ValueError(f"weight {eta} with negative entries must have length {rank}")
        if len(strip(eta)) > rank:
            return 0
        eta = pad(strip(eta), rank)
    if rank == 0:
        return 1
    shift = min(eta)
    lam = tuple(x - shift for x in eta)
    return _schur_dim_partition(strip(lam), rank)


@lru_cache(maxsize=None)
def _schur_dim_partition(lam: Partition, n: int) -> int:
    if len(lam) > n:
        return 0
    conj = conjugate(lam)
    value = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = row - j + conj[j] - i - 1
            value *= Fraction(n + j - i, hook)
    assert value.denominator == 1
    return int(value)


def in_P(mu: Sequence[int], win: PWindow) -> bool:
    s, q, t, w = win
    if len(mu) > s or not 0 <= t <= s:
        return False
    parts = tuple(mu) + (0,) * (s - len(mu))
    if t >= 1 and parts[t - 1] < q + t + w:
        return False
    if t < s and parts[t] > t + w:
        return False
    return True


def bott_t(mu: Sequence[int], s: int, q: int, w: int) -> int | None:
    """The unique t with ``mu`` in P(s, q, t, w), or None.

    ``mu[t-1] - t`` is strictly decreasing in t, so the candidates satisfying
    the first inequality form an initial segment; only its end can work.
    """
    if len(mu) > s:
        return None
    parts = tuple(mu) + (0,) * (s - len(mu))
    t = 0
    while t < s and parts[t] >= q + t + 1 + w:
        t += 1
    if t < s and parts[t] > t + w:
        return None
    return t


def enumerate_P(win: PWindow, n: int) -> list[Partition]:
    """Partitions of ``n`` in P(s, q, t, w), descending lex order.

    Built from a top block of t rows, each >= q+t+w, and a bottom block of
    s-t rows, each <= t+w.  Zero rows are allowed in either block.
    """
    s, q, t, w = win
    if not 0 <= t <= s:
        return []
    bottom_hi = t + w
    if t < s and bottom_hi < 0:
        return []
    top_lo = max(q + t + w, 0)
    out = []
    top_min = top_lo * t
    for top_total in range(n, top_min - 1, -1):
        bottom_total = n - top_total
        if t < s:
            bottoms = list(_bounded_sequences(bottom_total, s - t, 0, bottom_hi))
        else:
            bottoms = [()] if bottom_total == 0 else []
        if not bottoms:
            continue
        for top in _bounded_sequences(top_total, t, top_lo, None):
            for bottom in bottoms:
                out.append(strip(top + bottom))
    out.sort(reverse=True)
    return out


_PART_RE = re.compile(r"^(-?\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> tuple:
    """Parse the exponent shorthand, e.g. ``"2,1^2"`` -> (2, 1, 1); ``"0"`` -> ().

    Negative entries are accepted so the same grammar covers weights.
    """
    text = text.strip()
    if text in ("0", ""):
        return ()
    out = []
    for chunk in text.split(","):
        m = _PART_RE.match(chunk.strip())
        if not m:
            raise ValueError(f"bad partition chunk {chunk!r} in {text!r}")
        out.extend([int(m.group(1))] * int(m.group(2) or 1))
    if any(a < b for a, b in zip(out, out[1:])):
        raise ValueError(f"not weakly decreasing: {text!r}")
    return strip(out)


def format_partition(weight: Sequence[int]) -> str:
    w = strip(weight)
    if not w:
        return "0"
    chunks = []
    for value, run in groupby(w):
        k = len(list(run))
        chunks.append(f"{value}^{k}" if k > 1 else f"{value}")
    return ",".join(chunks)
