"""Symmetric-group characters and Kronecker coefficients.

Character values come from the Murnaghan-Nakayama rule.  Whole tables are
filled by the compiled kernel in :mod:`quiverdet._kernels`; isolated values
use a memoized recursion.  Kronecker coefficients are class sums in exact
integer arithmetic, with a second independent route through Schur
polynomials kept as an oracle.
"""

from __future__ import annotations

import threading
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import NamedTuple

from . import _kernels
from .partitions import Partition, conjugate, partitions, strip

#: Largest n whose full character table is built by the kernel.  Past this,
#: class sums fall back to the memoized recursion.
TABLE_MAX = 24


class KroneckerQuery(NamedTuple):
    lam: Partition
    mu: Partition
    nu: Partition


class _Memo:
    """Dict cache: lock-free reads, locked writes, first writer wins."""

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value):
        with self._lock:
            return self._data.setdefault(key, value)

    def __len__(self):
        return len(self._data)

    def clear(self):
        with self._lock:
            self._data.clear()


def centralizer_order(rho: Partition) -> int:
    """z_rho = prod_i i^{m_i} m_i!; the class of cycle type rho has n!/z_rho elements."""
    return prod(i**m * factorial(m) for i, m in Counter(rho).items())


_char_memo = _Memo()


def character(lam: Partition, rho: Partition) -> int:
    """chi^lam evaluated on the class of cycle type ``rho``."""
    lam, rho = tuple(lam), tuple(sorted(rho, reverse=True))
    if sum(lam) != sum(rho):
        raise ValueError(f"size mismatch: {lam} vs cycle type {rho}")
    return _mn(lam, rho)


def _mn(lam, rho):
    if not rho:
        return 1
    key = (lam, rho)
    hit = _char_memo.get(key)
    if hit is not None:
        return hit
    r, rest = rho[0], rho[1:]
    total = 0
    for sign, smaller in _remove_rim_hooks(lam, r):
        total += sign * _mn(smaller, rest)
    return _char_memo.put(key, total)


def _remove_rim_hooks(lam, r):
    length = len(lam)
    beta = [lam[s] + length - 1 - s for s in range(length)]
    beads = set(beta)
    for s, b in enumerate(beta):
        target = b - r
        if target < 0 or target in beads:
            continue
        between = sum(1 for x in beta if target < x < b)
        new = sorted((x if x != b else target for x in beta), reverse=True)
        smaller = strip(tuple(x - (length - 1 - i) for i, x in enumerate(new)))
        yield (-1) ** between, smaller


class CharacterTable:
    """Character table of S_n: rows are irreducibles, columns are classes."""

    def __init__(self, n, values=None):
        self.n = n
        self.partitions = partitions(n)
        self.index = {lam: i for i, lam in enumerate(self.partitions)}
        self.class_sizes = [factorial(n) // centralizer_order(rho) for rho in self.partitions]
        self._values = values
        self._rows = _Memo()

    def row(self, lam) -> list[int]:
        hit = self._rows.get(lam)
        if hit is not None:
            return hit
        if self._values is not None:
            row = [int(x) for x in self._values[self.index[lam]]]
        else:
            row = [_mn(lam, rho) for rho in self.partitions]
        return self._rows.put(lam, row)

    def __getitem__(self, key):
        lam, rho = key
        return self.row(tuple(lam))[self.index[tuple(rho)]]


_tables: dict[int, CharacterTable] = {}
_tables_lock = threading.Lock()


def character_table(n: int) -> CharacterTable:
    tab = _tables.get(n)
    if tab is not None:
        return tab
    with _tables_lock:
        if n in _tables:
            return _tables[n]
        if n <= TABLE_MAX:
            top = max(n, min(TABLE_MAX, max(_tables, default=0) + 4, 12))
            arrays = _kernels.character_tables(top, partitions)
            for k in range(top + 1):
                if k not in _tables:
                    _tables[k] = CharacterTable(k, arrays[k])
        else:
            _tables[n] = CharacterTable(n)
        return _tables[n]


def _kronecker_may_be_nonzero(lam, mu, nu) -> bool:
    # g is unchanged by conjugating two arguments, so each test below is
    # applied to all four such variants and all three rotations:
    #   x_1 >= y_1 + z_1 - n   (Littlewood-Murnaghan)
    #   len(x) <= len(y) * len(z)
    n = sum(lam)
    lc, mc, nc = conjugate(lam), conjugate(mu), conjugate(nu)
    for triple in ((lam, mu, nu), (lam, mc, nc), (lc, mc, nu), (lc, mu, nc)):
        for x, y, z in (triple, triple[1:] + triple[:1], triple[2:] + triple[:2]):
            if x[0] < y[0] + z[0] - n:
                return False
            if len(x) > len(y) * len(z):
                return False
    return True


_kron_memo = _Memo()


@lru_cache(maxsize=4096)
def _pair_vector(mu, nu):
    tab = character_table(sum(mu))
    return tuple(c * a * b for c, a, b in zip(tab.class_sizes, tab.row(mu), tab.row(nu)))


def kronecker(lam: Partition, mu: Partition, nu: Partition, prune: bool = True) -> int:
    """Kronecker coefficient g_{mu,nu}^lam (symmetric in its three arguments)."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise ValueError(f"sizes differ: {lam}, {mu}, {nu}")
    if n == 0:
        return 1
    if prune and not _kronecker_may_be_nonzero(lam, mu, nu):
        return 0
    key = tuple(sorted((lam, mu, nu)))
    hit = _kron_memo.get(key)
    if hit is not None:
        return hit
    a, b, c = key
    vec = _pair_vector(b, c)
    row = character_table(n).row(a)
    total = sum(x * y for x, y in zip(vec, row))
    g, rem = divmod(total, factorial(n))
    if rem or g < 0:
        raise ArithmeticError(f"class sum for {key} is {total}, not a non-negative multiple of {n}!")
    return _kron_memo.put(key, g)


def clear_caches():
    _kron_memo.clear()
    _char_memo.clear()
    _pair_vector.cache_clear()


# --- independent oracle: Schur polynomials in the product alphabet -------------
#
# s_lam(x_i y_j) is symmetric in x and in y separately, so peeling leading
# terms s_mu(x) s_nu(y) only ever inspects monomials whose x- and y-exponents
# are both partitions.  Those coefficients are sums of Kostka numbers over
# contingency tables, which keeps the expansion small.


@lru_cache(maxsize=None)
def kostka(lam: Partition, content: tuple) -> int:
    """Number of SSYT of shape ``lam`` with the given content (order irrelevant)."""
    content = tuple(sorted((c for c in content if c), reverse=True))
    if sum(lam) != sum(content):
        return 0
    return _kostka(tuple(lam), content)


@lru_cache(maxsize=None)
def _kostka(lam, content):
    if not content:
        return 1 if not lam else 0
    if len(lam) > len(content):
        return 0
    *rest, last = content
    return sum(_kostka(nu, tuple(rest)) for nu in _horizontal_strip_removals(lam, last))


def _horizontal_strip_removals(lam, k):
    """Partitions nu with lam/nu a horizontal strip of size k."""
    ell = len(lam)

    def rec(i, left):
        if i == ell:
            if left == 0:
                yield ()
            return
        lo = lam[i + 1] if i + 1 < ell else 0
        for take in range(min(left, lam[i] - lo), -1, -1):
            for tail in rec(i + 1, left - take):
                yield (lam[i] - take,) + tail

    for nu in rec(0, k):
        yield strip(nu)


def _contingency_tables(rows, cols):
    """Non-negative integer matrices with the given margins, flattened row by row."""
    if not rows:
        if not any(cols):
            yield ()
        return
    first, rest = rows[0], rows[1:]

    def fill(j, left, remaining):
        if j == len(remaining) - 1:
            if left <= remaining[j]:
                yield (left,)
            return
        for x in range(min(left, remaining[j]), -1, -1):
            for tail in fill(j + 1, left - x, remaining):
                yield (x,) + tail

    for row in fill(0, first, cols):
        reduced = tuple(c - x for c, x in zip(cols, row))
        for tail in _contingency_tables(rest, reduced):
            yield row + tail


def _dominant_weights(n, length):
    return [p + (0,) * (length - len(p)) for p in partitions(n, max_len=length)]


@lru_cache(maxsize=None)
def product_alphabet_decomposition(lam: Partition, a: int, b: int) -> dict:
    """Expand s_lam(x_i y_j) and peel off s_mu(x) s_nu(y) by leading terms.

    Returns {(mu, nu): g_{mu,nu}^lam} for mu, nu of length at most a, b.
    """
    n = sum(lam)
    poly = {}
    for p in _dominant_weights(n, a):
        for q in _dominant_weights(n, b):
            c = sum(kostka(lam, m) for m in _contingency_tables(p, q))
            if c:
                poly[p + q] = c
    result = {}
    while poly:
        lead = max(poly)
        coeff = poly[lead]
        if coeff < 0:
            raise ArithmeticError(f"negative multiplicity {coeff} at {lead}")
        mu, nu = strip(lead[:a]), strip(lead[a:])
        result[(mu, nu)] = coeff
        for p in _dominant_weights(n, a):
            kp = kostka(mu, p)
            if not kp:
                continue
            for q in _dominant_weights(n, b):
                kq = kostka(nu, q)
                if kq:
                    key = p + q
                    left = poly.get(key, 0) - coeff * kp * kq
                    if left:
                        poly[key] = left
                    else:
                        poly.pop(key, None)
    return result


def kronecker_oracle(lam: Partition, mu: Partition, nu: Partition, a: int | None = None, b: int | None = None) -> int:
    """Kronecker coefficient from Schur polynomial arithmetic alone (small n only).

    With explicit ``a``/``b`` the triple is used as given.  Otherwise the
    cheapest equivalent form under g(l,m,n) = g(l,m',n') and the S_3 symmetry
    is chosen and alphabets of size len(mu)+1, len(nu)+1 are used.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if not sum(lam) == sum(mu) == sum(nu):
        raise ValueError("sizes differ")
    if a is None and b is None:
        lam, mu, nu = _cheapest_form(lam, mu, nu)
    a = len(mu) + 1 if a is None else a
    b = len(nu) + 1 if b is None else b
    if len(mu) > a or len(nu) > b:
        raise ValueError(f"alphabet sizes ({a}, {b}) cannot see {mu}, {nu}")
    if len(lam) > a * b:
        raise ValueError(f"alphabet of size {a}x{b} cannot see {lam}")
    return product_alphabet_decomposition(lam, a, b).get((mu, nu), 0)


def _cheapest_form(lam, mu, nu):
    candidates = []
    for x, y, z in ((lam, mu, nu), (mu, nu, lam), (nu, lam, mu)):
        for yy, zz in ((y, z), (conjugate(y), conjugate(z))):
            for l2, m2, n2 in ((x, yy, zz), (x, zz, yy)):
                if len(l2) <= (len(m2) + 1) * (len(n2) + 1):
                    candidates.append(((len(m2) + 1) * (len(n2) + 1), l2, m2, n2))
    candidates.sort()
    _, l2, m2, n2 = candidates[0]
    return l2, m2, n2
