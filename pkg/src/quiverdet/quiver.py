"""Quivers, dimension vectors, Euler forms and generic hom/ext.

Generic hom is measured directly: draw random representations M, N over a
prime field, build the linear map

    phi -> (phi_{head a} M_a - N_a phi_{tail a})_a

whose kernel is Hom(M, N), and take the smallest kernel dimension seen.
ext then follows from hom - ext = <gamma, beta>.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from . import _kernels

DEFAULT_PRIME = 2147483647
DEFAULT_SAMPLES = 5


@dataclass(frozen=True)
class Quiver:
    """Vertices are 0..n_vertices-1; arrows are (tail, head) pairs."""

    n_vertices: int
    arrows: tuple

    def __post_init__(self):
        arrows = tuple((int(a), int(b)) for a, b in self.arrows)
        for a, b in arrows:
            if not (0 <= a < self.n_vertices and 0 <= b < self.n_vertices):
                raise ValueError(f"arrow {(a, b)} leaves the vertex set")
        object.__setattr__(self, "arrows", arrows)

    def check(self, dim: Sequence[int]) -> tuple:
        dim = tuple(int(x) for x in dim)
        if len(dim) != self.n_vertices or any(x < 0 for x in dim):
            raise ValueError(f"bad dimension vector {dim} for {self.n_vertices} vertices")
        return dim


def kronecker_quiver(m: int) -> Quiver:
    """Two vertices and m parallel arrows 0 -> 1."""
    if m < 1:
        raise ValueError("K_m needs m >= 1")
    return Quiver(2, ((0, 1),) * m)


def parse_quiver(text: str) -> Quiver:
    """``"K3"`` for a Kronecker quiver, or ``"n:0-1,1-2"`` for an arrow list."""
    text = text.strip()
    if text[:1] in "Kk" and text[1:].isdigit():
        return kronecker_quiver(int(text[1:]))
    head, _, body = text.partition(":")
    arrows = []
    for chunk in filter(None, (c.strip() for c in body.split(","))):
        a, b = chunk.split("-")
        arrows.append((int(a), int(b)))
    return Quiver(int(head), tuple(arrows))


@dataclass(frozen=True)
class EulerForm:
    value: int
    dot: int  # sum over vertices of gamma(v) beta(v)
    arrows: int  # sum over arrows of gamma(tail) beta(head); the Koszul length


def euler_form(quiver: Quiver, gamma, beta) -> EulerForm:
    gamma, beta = quiver.check(gamma), quiver.check(beta)
    dot = sum(g * b for g, b in zip(gamma, beta))
    arr = sum(gamma[t] * beta[h] for t, h in quiver.arrows)
    return EulerForm(dot - arr, dot, arr)


@dataclass(frozen=True)
class GenericHomExt:
    hom: int
    ext: int
    euler: int
    samples_used: int
    field_prime: int


def _random_rep(quiver, dim, p, rng):
    return [rng.integers(0, p, size=(dim[h], dim[t]), dtype=np.int64) for t, h in quiver.arrows]


def hom_matrix(quiver: Quiver, gamma, beta, M, N, p: int) -> np.ndarray:
    """Matrix of phi -> (phi_h M_a - N_a phi_t) over F_p.

    Columns index the entries of phi_v in Hom(k^gamma(v), k^beta(v)); rows the
    entries of each Hom(k^gamma(ta), k^beta(ha)).
    """
    col_off, c = [], 0
    for v in range(quiver.n_vertices):
        col_off.append(c)
        c += beta[v] * gamma[v]
    row_off, r = [], 0
    for t, h in quiver.arrows:
        row_off.append(r)
        r += beta[h] * gamma[t]
    mat = np.zeros((r, c), dtype=np.int64)
    for a, (t, h) in enumerate(quiver.arrows):
        Ma, Na, ro = M[a], N[a], row_off[a]
        # (phi_h M_a)[i, j] = sum_k phi_h[i, k] M_a[k, j]
        for i in range(beta[h]):
            for j in range(gamma[t]):
                row = ro + i * gamma[t] + j
                for k in range(gamma[h]):
                    mat[row, col_off[h] + i * gamma[h] + k] += Ma[k, j]
                # (N_a phi_t)[i, j] = sum_k N_a[i, k] phi_t[k, j]
                for k in range(beta[t]):
                    mat[row, col_off[t] + k * gamma[t] + j] -= Na[i, k]
    return mat % p


def generic_hom_ext(quiver: Quiver, gamma, beta, samples: int = DEFAULT_SAMPLES,
                    prime: int = DEFAULT_PRIME, seed: int | None = 0) -> GenericHomExt:
    """Generic hom/ext by random sampling over F_prime (minimum kernel dimension)."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    gamma, beta = quiver.check(gamma), quiver.check(beta)
    euler = euler_form(quiver, gamma, beta).value
    domain = sum(g * b for g, b in zip(gamma, beta))
    floor = max(0, euler)  # ext >= 0
    rng = np.random.default_rng(seed)
    best, used = domain, 0
    for _ in range(samples):
        used += 1
        M = _random_rep(quiver, gamma, prime, rng)
        N = _random_rep(quiver, beta, prime, rng)
        mat = hom_matrix(quiver, gamma, beta, M, N, prime)
        rank = _kernels.rank_mod_p(mat, prime) if mat.size else 0
        best = min(best, domain - rank)
        if best == floor:
            break
    return GenericHomExt(best, best - euler, euler, used, prime)


def homext_condition(quiver: Quiver, gamma, beta, **kw) -> bool:
    """hom(gamma, beta) = 0 and <gamma, beta> < 0: q can be birational onto a proper subvariety."""
    res = generic_hom_ext(quiver, gamma, beta, **kw)
    return res.hom == 0 and res.euler < 0


@dataclass(frozen=True)
class BirationalVerdict:
    certified: bool
    reason: str  # "certified" | "hom-nonzero" | "inconclusive"
    witness: tuple | None = None  # a delta violating the criterion

    def __bool__(self):
        return self.certified


def birational_check(quiver: Quiver, gamma, alpha, **kw) -> BirationalVerdict:
    """Sufficient numerical test that Z -> Rep_{gamma in alpha} is birational.

    Needs generic hom(gamma, beta) = 0.  Then for every delta strictly below
    gamma with 2 gamma - delta <= alpha, one of
    <2g-d, b-g+d> < <g, b>  or  <g, b> < <d, b-g+d>  must hold.
    """
    gamma, alpha = quiver.check(gamma), quiver.check(alpha)
    if any(g > a for g, a in zip(gamma, alpha)):
        raise ValueError(f"gamma {gamma} is not below alpha {alpha}")
    beta = tuple(a - g for a, g in zip(alpha, gamma))
    if generic_hom_ext(quiver, gamma, beta, **kw).hom != 0:
        return BirationalVerdict(False, "hom-nonzero")

    def ef(x, y):
        return euler_form(quiver, x, y).value

    base = ef(gamma, beta)
    for delta in product(*(range(g + 1) for g in gamma)):
        if delta == gamma:
            continue
        big = tuple(2 * g - d for g, d in zip(gamma, delta))
        if any(x > a for x, a in zip(big, alpha)):
            continue
        rest = tuple(b - g + d for b, g, d in zip(beta, gamma, delta))
        if ef(big, rest) < base or base < ef(delta, rest):
            continue
        return BirationalVerdict(False, "inconclusive", delta)
    return BirationalVerdict(True, "certified")
