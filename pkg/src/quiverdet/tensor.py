"""The three-factor tensor analogue of the Kronecker quiver complexes.

Here the bundle resolved is S_1 (x) S_2 (x) S_3 on a product of three
Grassmannians Gr(alpha_k, gamma_k), so the complex has at most
gamma_1 gamma_2 gamma_3 + 1 internal degrees, and each factor goes through
the same Bott window as the quiver case.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

import numpy as np

from . import _kernels
from .bott import twisted_weight
from .characters import kronecker
from .klw import KLWComplex, _as_natural, _finish, _run_cells, alternating_degree
from .partitions import PWindow, conjugate, enumerate_P
from .quiver import DEFAULT_PRIME


@dataclass(frozen=True)
class TensorSetting:
    alpha: tuple
    gamma: tuple

    def __post_init__(self):
        alpha = tuple(int(x) for x in self.alpha)
        gamma = tuple(int(x) for x in self.gamma)
        if len(alpha) != 3 or len(gamma) != 3:
            raise ValueError("tensor settings have three factors")
        if any(g < 0 or g > a for g, a in zip(gamma, alpha)):
            raise ValueError(f"gamma {gamma} is not between 0 and alpha {alpha}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "gamma", gamma)

    @property
    def beta(self) -> tuple:
        return tuple(a - g for a, g in zip(self.alpha, self.gamma))

    @property
    def koszul_length(self) -> int:
        g1, g2, g3 = self.gamma
        return g1 * g2 * g3

    @property
    def inner(self) -> int:
        """h - e: sum of gamma_k beta_k minus gamma_1 gamma_2 gamma_3."""
        return sum(g * b for g, b in zip(self.gamma, self.beta)) - self.koszul_length

    @property
    def dims(self) -> tuple:
        return self.alpha

    def permuted(self, perm) -> "TensorSetting":
        return TensorSetting(tuple(self.alpha[p] for p in perm), tuple(self.gamma[p] for p in perm))


class TensorSummand(NamedTuple):
    lambda1: tuple
    lambda2: tuple
    lambda3: tuple
    mult: int
    degree: int

    @property
    def slots(self) -> tuple:
        return (self.lambda1, self.lambda2, self.lambda3)


def _others(k):
    return [j for j in range(3) if j != k]


def tensor_complex(setting: TensorSetting, weight=(0, 0, 0), jobs: int = 1) -> KLWComplex:
    """All terms of the complex twisted by the line weight (w1; w2; w3)."""
    gam, bet = setting.gamma, setting.beta
    w = tuple(int(x) for x in weight)
    top = setting.koszul_length

    def cell(ts):
        shift = sum(b * t for b, t in zip(bet, ts))
        out = []
        for n in range(top + 1):
            lists = []
            for k in range(3):
                lists.append(enumerate_P(PWindow(gam[k], bet[k], ts[k], w[k]), n))
                if not lists[-1]:
                    break
            else:
                i = n - shift
                for l1, l2, l3 in product(*lists):
                    g = kronecker(conjugate(l1), l2, l3)
                    if g:
                        circ = [twisted_weight(lam, gam[k], bet[k], ts[k], w[k]) for k, lam in enumerate((l1, l2, l3))]
                        out.append((i, TensorSummand(*circ, g, n)))
        return out

    cells = list(product(*(range(g + 1) for g in gam)))
    return _finish(setting, w, setting.dims, _run_cells(cells, cell, jobs))


def tensor_dual_weight(setting: TensorSetting, weight) -> tuple:
    g = setting.gamma
    return tuple(g[i] * g[j] - setting.alpha[k] - weight[k] for k, (i, j) in enumerate(map(_others, range(3))))


def tensor_dual_summand(setting: TensorSetting, i: int, s: TensorSummand) -> tuple:
    """Where a summand of F^w_i lands in F^{w dual}: (index, summand)."""
    g, b = setting.gamma, setting.beta
    slots = []
    for k, weight in enumerate(s.slots):
        i1, i2 = _others(k)
        c = g[i1] * g[i2] - b[k]
        slots.append(tuple(c - x for x in reversed(weight)))
    return -setting.inner - i, TensorSummand(*slots, s.mult, setting.koszul_length - s.degree)


def tensor_nonneg_admissible(setting: TensorSetting, weight) -> bool:
    """Sufficient test that the twisted tensor complex has no negative-index terms."""
    b, a = setting.beta, setting.alpha
    w = tuple(weight)
    score = sum((2 * bk - wk) ** 2 for bk, wk in zip(b, w))
    if score < 12:
        return True
    if score == 12:
        if len(set(b)) > 1 or len(set(w)) > 1:
            return True
        return any(sum(w[j] for j in _others(k)) > a[k] - 3 for k in range(3))
    return False


def probe_matrix(setting: TensorSetting, rng, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Differential of Z -> R_alpha at a random point, restricted to the Grassmannian directions.

    The subspaces are the first gamma_k coordinates; T is random with its
    gamma block zeroed.  A tangent vector X_k in Hom(S_k, R_k / S_k) moves
    the block entry (a1, a2, a3) by sum_b X_k[b, a_k] T[..., gamma_k + b, ...].
    """
    a, g, b = setting.alpha, setting.gamma, setting.beta
    T = rng.integers(0, p, size=a, dtype=np.int64)
    T[: g[0], : g[1], : g[2]] = 0
    col_off = np.cumsum([0] + [b[k] * g[k] for k in range(3)])
    mat = np.zeros((g[0] * g[1] * g[2], int(col_off[-1])), dtype=np.int64)
    for a1, a2, a3 in product(range(g[0]), range(g[1]), range(g[2])):
        row = (a1 * g[1] + a2) * g[2] + a3
        idx = (a1, a2, a3)
        for k in range(3):
            for bb in range(b[k]):
                src = list(idx)
                src[k] = g[k] + bb
                mat[row, col_off[k] + bb * g[k] + idx[k]] = T[tuple(src)]
    return mat


class CodimFiber(NamedTuple):
    e: int
    h: int
    probe_e: int
    probe_h: int

    @property
    def agrees(self) -> bool:
        return self.e == self.probe_e and self.h == self.probe_h


def codim_and_fiber(setting: TensorSetting, seed: int | None = 0, samples: int = 3,
                    p: int = DEFAULT_PRIME) -> CodimFiber:
    """Codimension e from the untwisted complex length, h = e + inner.

    A Jacobian rank at random points gives an independent estimate of both.
    """
    cx = tensor_complex(setting)
    e = max(cx.length or 0, 0)
    rng = np.random.default_rng(seed)
    rank = 0
    for _ in range(samples):
        mat = probe_matrix(setting, rng, p)
        if mat.size:
            rank = max(rank, _kernels.rank_mod_p(mat, p))
    gb = sum(g * b for g, b in zip(setting.gamma, setting.beta))
    return CodimFiber(e, e + setting.inner, setting.koszul_length - rank, gb - rank)


def tensor_degree(setting: TensorSetting) -> int:
    """deg(q) * deg(R_{gamma in alpha}) with r = -(h - e); needs r > 0."""
    r = -setting.inner
    if r <= 0:
        raise ValueError(f"degree needs h - e < 0, got h - e = {setting.inner}")
    return _as_natural(alternating_degree(tensor_complex(setting), r))


class KronVanishingReport(NamedTuple):
    counterexamples: list
    witnesses: list
    checked: int


def kron_vanishing_check(setting: TensorSetting, weight=(0, 0, 0), max_size: int = 8, part: int = 1,
                         e: int | None = None, h: int | None = None) -> KronVanishingReport:
    """Exhaustive check of the tensor Kronecker vanishing statements.

    Part 1: lambda_k in P(gamma_k, beta_k, t_k, w_k) with common size above
    sum beta_k t_k + e.  Part 2: the windows use the dual weight and the size
    is below sum beta_k t_k - h.  In both, g(lambda_i', lambda_j, lambda_k)
    must vanish for each choice of conjugated slot i.  Witnesses are nonzero
    coefficients at the boundary size.
    """
    if e is None or h is None:
        cf = codim_and_fiber(setting)
        e = cf.e if e is None else e
        h = cf.h if h is None else h
    gam, bet = setting.gamma, setting.beta
    w = tensor_dual_weight(setting, weight) if part == 2 else tuple(weight)
    bad, wit, checked = [], [], 0
    for ts in product(*(range(g + 1) for g in gam)):
        shift = sum(b * t for b, t in zip(bet, ts))
        edge = shift - h if part == 2 else shift + e
        for n in range(max_size + 1):
            if (part == 2 and n > edge) or (part != 2 and n < edge):
                continue
            lists = [enumerate_P(PWindow(gam[k], bet[k], ts[k], w[k]), n) for k in range(3)]
            for lams in product(*lists):
                for i in range(3):
                    j, k = _others(i)
                    g = kronecker(conjugate(lams[i]), lams[j], lams[k])
                    checked += 1
                    if g:
                        (wit if n == edge else bad).append((ts, i, lams, g))
    return KronVanishingReport(bad, wit, checked)


def quiver_embedding(m: int, alpha, gamma, weight=(0, 0)):
    """The tensor data reproducing the K_m complex: R_1, R_2^*, R_12 as the three factors."""
    a1, a2 = alpha
    g1, g2 = gamma
    return TensorSetting((a1, a2, m), (g1, a2 - g2, m)), (weight[0], weight[1], 0)

