"""Numeric inner loops: Murnaghan-Nakayama character tables and rank over F_p.

Everything here sticks to int64 arrays and scalar loops so the same source
runs under numba or as plain Python (see :mod:`quiverdet._jit`).
"""

import numpy as np

from ._jit import njit


@njit
def partition_rank(arr, length, n, cnt):
    """Position of ``arr[:length]`` among partitions of ``n`` in descending lex order.

    ``cnt[a, b]`` is the number of partitions of ``a`` with parts at most ``b``.
    Zero entries terminate the partition.
    """
    r = 0
    rem = n
    bound = n
    for idx in range(length):
        x = arr[idx]
        if x == 0:
            break
        top = bound if bound < rem else rem
        for first in range(x + 1, top + 1):
            r += cnt[rem - first, first]
        rem -= x
        bound = x
    return r


@njit
def _mn_fill(nmax, parts, lengths, poff, toff, cnt, table):
    beta = np.zeros(nmax + 1, dtype=np.int64)
    nbeta = np.zeros(nmax + 1, dtype=np.int64)
    newpart = np.zeros(nmax + 1, dtype=np.int64)
    tail = np.zeros(nmax + 1, dtype=np.int64)
    table[toff[0]] = 1
    for k in range(1, nmax + 1):
        pk = poff[k + 1] - poff[k]
        for j in range(pk):
            rho = poff[k] + j
            r = parts[rho, 0]
            rest = k - r
            tl = lengths[rho] - 1
            for u in range(tl):
                tail[u] = parts[rho, u + 1]
            jr = partition_rank(tail, tl, rest, cnt)
            pr = poff[rest + 1] - poff[rest]
            for i in range(pk):
                lam = poff[k] + i
                ln = lengths[lam]
                for s in range(ln):
                    beta[s] = parts[lam, s] + ln - 1 - s
                total = 0
                for s in range(ln):
                    b = beta[s] - r
                    if b < 0:
                        continue
                    clash = False
                    between = 0
                    for u in range(ln):
                        if beta[u] == b:
                            clash = True
                            break
                        if beta[u] > b and beta[u] < beta[s]:
                            between += 1
                    if clash:
                        continue
                    for u in range(ln):
                        nbeta[u] = beta[u]
                    for u in range(between):
                        nbeta[s + u] = beta[s + u + 1]
                    nbeta[s + between] = b
                    for u in range(ln):
                        newpart[u] = nbeta[u] - (ln - 1 - u)
                    ii = partition_rank(newpart, ln, rest, cnt)
                    val = table[toff[rest] + ii * pr + jr]
                    if between % 2 == 1:
                        total -= val
                    else:
                        total += val
                table[toff[k] + i * pk + j] = total


@njit
def _inv_mod(a, p):
    # extended Euclid; a and p coprime
    t, new_t = 0, 1
    r, new_r = p, a % p
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    if t < 0:
        t += p
    return t


@njit
def rank_mod_p(mat, p):
    """Rank of an int64 matrix over F_p (p < 2**31).  ``mat`` is overwritten."""
    rows, cols = mat.shape
    for i in range(rows):
        for j in range(cols):
            mat[i, j] %= p
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        piv = -1
        for i in range(rank, rows):
            if mat[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(c, cols):
                tmp = mat[piv, j]
                mat[piv, j] = mat[rank, j]
                mat[rank, j] = tmp
        inv = _inv_mod(mat[rank, c], p)
        for j in range(c, cols):
            mat[rank, j] = (mat[rank, j] * inv) % p
        for i in range(rank + 1, rows):
            f = mat[i, c]
            if f != 0:
                for j in range(c, cols):
                    mat[i, j] = (mat[i, j] - f * mat[rank, j]) % p
        rank += 1
    return rank


def partition_counts(nmax):
    """``cnt[a, b]`` = number of partitions of ``a`` with all parts <= ``b``."""
    cnt = np.zeros((nmax + 1, nmax + 1), dtype=np.int64)
    cnt[0, :] = 1
    for a in range(1, nmax + 1):
        for b in range(1, nmax + 1):
            cnt[a, b] = cnt[a, b - 1] + (cnt[a - b, b] if b <= a else 0)
    return cnt


def character_tables(nmax, partitions_of):
    """Character tables of S_0 .. S_nmax.

    ``partitions_of(k)`` must list the partitions of ``k`` in descending lex
    order; rows index irreducibles and columns index cycle types, both in that
    order.  Returns a list of int64 arrays, one per k.
    """
    plists = [partitions_of(k) for k in range(nmax + 1)]
    sizes = np.array([len(pl) for pl in plists], dtype=np.int64)
    poff = np.zeros(nmax + 2, dtype=np.int64)
    poff[1:] = np.cumsum(sizes)
    toff = np.zeros(nmax + 2, dtype=np.int64)
    toff[1:] = np.cumsum(sizes * sizes)
    width = max(nmax, 1)
    parts = np.zeros((int(poff[-1]), width), dtype=np.int64)
    lengths = np.zeros(int(poff[-1]), dtype=np.int64)
    for k, pl in enumerate(plists):
        for i, lam in enumerate(pl):
            row = poff[k] + i
            parts[row, : len(lam)] = lam
            lengths[row] = len(lam)
    table = np.zeros(int(toff[-1]), dtype=np.int64)
    _mn_fill(nmax, parts, lengths, poff, toff, partition_counts(nmax), table)
    return [table[toff[k] : toff[k + 1]].reshape(sizes[k], sizes[k]) for k in range(nmax + 1)]
