"""Borel-Weil-Bott on a single Grassmannian.

A homogeneous bundle ``S^a Q (x) S^b S`` on Gr(r, s) is described by the
concatenated weight ``(a, b)`` of length r.  Its cohomology is computed by
sorting ``weight + rho`` with rho = (r-1, ..., 0): a repeated entry kills
everything, otherwise the number of inversions is the cohomological degree
and ``sorted - rho`` is the highest weight of the resulting GL_r module.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .partitions import PWindow, bott_t, in_P


class GrassmannianShape(NamedTuple):
    """Gr(r, s): s-dimensional subspaces of an r-dimensional space."""

    r: int
    s: int

    @property
    def q(self) -> int:
        return self.r - self.s

    @property
    def dim(self) -> int:
        return self.s * self.q


class BottOutcome(NamedTuple):
    """The single non-vanishing cohomology group: its degree and highest weight.

    ``dual`` marks weights of the dual space R^*; dimensions ignore it.
    Vanishing cohomology is represented by ``None`` instead of an outcome.
    """

    degree: int
    weight: tuple
    dual: bool = False


def _check_shape(shape: GrassmannianShape):
    if not 0 <= shape.s <= shape.r:
        raise ValueError(f"bad Grassmannian shape {shape}")


def _check_dominant(seq, what):
    if any(a < b for a, b in zip(seq, seq[1:])):
        raise ValueError(f"{what} is not weakly decreasing: {seq}")


def count_inversions(seq: Sequence[int]) -> int:
    # merge sort; counts pairs i < j with seq[i] < seq[j] (we sort descending)
    seq = list(seq)
    if len(seq) < 2:
        return 0
    mid = len(seq) // 2
    left, right = seq[:mid], seq[mid:]
    inv = count_inversions(left) + count_inversions(right)
    left.sort(reverse=True)
    right.sort(reverse=True)
    j = 0
    for x in left:
        while j < len(right) and right[j] > x:
            j += 1
        inv += j
    return inv


def bott(shape: GrassmannianShape, mu_on_Q: Sequence[int], nu_on_S: Sequence[int]) -> BottOutcome | None:
    """Cohomology of ``S^mu Q (x) S^nu S`` on Gr(r, s); None if it all vanishes."""
    _check_shape(shape)
    mu, nu = tuple(mu_on_Q), tuple(nu_on_S)
    if len(mu) != shape.q or len(nu) != shape.s:
        raise ValueError(f"weights of lengths {len(mu)}, {len(nu)} do not fit {shape}")
    _check_dominant(mu, "weight on Q")
    _check_dominant(nu, "weight on S")
    r = shape.r
    shifted = [x + r - 1 - i for i, x in enumerate(mu + nu)]
    if len(set(shifted)) < r:
        return None
    degree = count_inversions(shifted)
    ordered = sorted(shifted, reverse=True)
    return BottOutcome(degree, tuple(x - (r - 1 - i) for i, x in enumerate(ordered)))


def twisted_weight(mu: Sequence[int], rows: int, q: int, t: int, w: int) -> tuple:
    """The Bott output for ``S^mu S (x) det^w Q`` once t is known.

    Subtract q from the first t rows, insert q copies of t+w, then the rest
    of ``mu`` padded to ``rows`` entries.
    """
    mu = tuple(mu) + (0,) * (rows - len(mu))
    return tuple(x - q for x in mu[:t]) + (t + w,) * q + mu[t:]


def cohomology_S_twist(shape: GrassmannianShape, mu: Sequence[int], w: int) -> BottOutcome | None:
    """Cohomology of ``S^mu S (x) det^w Q`` on Gr(r, s).

    Nonzero only in degree q*t for the unique t with mu in P(s, q, t, w).
    """
    _check_shape(shape)
    s, q = shape.s, shape.q
    mu = tuple(mu)
    _check_dominant(mu, "mu")
    t = bott_t(mu, s, q, w)
    if t is None:
        return None
    assert in_P(mu, PWindow(s, q, t, w))
    return BottOutcome(q * t, twisted_weight(mu, s, q, t, w))


def cohomology_Qdual_twist(shape: GrassmannianShape, nu: Sequence[int], w: int) -> BottOutcome | None:
    """Cohomology of ``S^nu Q^* (x) det^w S^*`` on Gr(r, s), as a weight of R^*.

    Mirror of :func:`cohomology_S_twist` with s and q exchanged: nonzero only
    in degree s*t' for the unique t' with nu in P(q, s, t', w).  On the dual
    Grassmannian Gr(r, q) of R^*, Q^* is the subbundle and S^* the quotient.
    """
    _check_shape(shape)
    out = cohomology_S_twist(GrassmannianShape(shape.r, shape.q), nu, w)
    if out is None:
        return None
    return out._replace(dual=True)


def serre_dual_weights(shape: GrassmannianShape, mu_on_Q: Sequence[int], nu_on_S: Sequence[int]):
    """Weights of ``V^* (x) K`` for ``V = S^mu Q (x) S^nu S``.

    The canonical bundle is ``det(S)^q (x) det(Q)^(-s)``.
    """
    s, q = shape.s, shape.q
    dual_mu = tuple(-x - s for x in reversed(tuple(mu_on_Q)))
    dual_nu = tuple(-x + q for x in reversed(tuple(nu_on_S)))
    return dual_mu, dual_nu
