"""Exhaustive desk-scale sweeps shared by the property tests and the acceptance gate.

Each sweep is cached so the acceptance criteria reuse the work done by the
module tests in the same session.  Every sweep returns a summary whose
``failures`` list must be empty.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from typing import NamedTuple

from quiverdet.bott import GrassmannianShape, bott, cohomology_S_twist
from quiverdet.characters import character_table, kronecker, kronecker_oracle
from quiverdet.klw import (KroneckerSetting, complex, dual_summand, dual_weight, nonneg_admissible,
                           vanishing_report)
from quiverdet.partitions import partitions
from quiverdet.quiver import generic_hom_ext
from quiverdet.tensor import (TensorSetting, codim_and_fiber, kron_vanishing_check, tensor_complex,
                              tensor_dual_summand, tensor_dual_weight, tensor_nonneg_admissible)

# Koszul-length caps keep each sweep within seconds; see the README.
LENGTH_CAP = 24
DUALITY_CAP = 12
TENSOR_DUALITY_CAP = 8
TENSOR_SYMMETRY_CAP = 8
TENSOR_CAP = 12


class Sweep(NamedTuple):
    checked: int
    failures: list


def kron_settings(mmax: int, amax: int, cap: int | None = None, proper: bool = False):
    for m in range(1, mmax + 1):
        for a1, a2 in product(range(1, amax + 1), repeat=2):
            for g1, g2 in product(range(a1 + 1), range(a2 + 1)):
                st = KroneckerSetting(m, (a1, a2), (g1, g2))
                if cap is not None and st.koszul_length > cap:
                    continue
                if proper and (g1 + g2 == 0 or (g1, g2) == (a1, a2)):
                    continue
                yield st


def tensor_settings(amax: int, gmax: int, cap: int | None = None, sorted_alpha: bool = True):
    for a in product(range(1, amax + 1), repeat=3):
        if sorted_alpha and list(a) != sorted(a):
            continue
        for g in product(*(range(min(x, gmax) + 1) for x in a)):
            st = TensorSetting(a, g)
            if st.koszul_length == 0 or (cap is not None and st.koszul_length > cap):
                continue
            yield st


@lru_cache(maxsize=None)
def kronecker_symmetry(nmax: int = 7) -> Sweep:
    bad, n_checked = [], 0
    for n in range(1, nmax + 1):
        ps = partitions(n)
        for lam, mu, nu in product(ps, repeat=3):
            g = kronecker(lam, mu, nu)
            n_checked += 1
            for perm in permutations((lam, mu, nu)):
                if kronecker(*perm) != g:
                    bad.append((lam, mu, nu, perm))
    return Sweep(n_checked, bad)


@lru_cache(maxsize=None)
def littlewood_murnaghan(nmax: int = 7) -> Sweep:
    bad, n_checked = [], 0
    for n in range(1, nmax + 1):
        for lam, mu, nu in product(partitions(n), repeat=3):
            n_checked += 1
            if kronecker(lam, mu, nu) and lam[0] < mu[0] + nu[0] - n:
                bad.append((lam, mu, nu))
    return Sweep(n_checked, bad)


@lru_cache(maxsize=None)
def oracle_agreement(nmax: int = 6) -> Sweep:
    bad, n_checked = [], 0
    for n in range(1, nmax + 1):
        for lam, mu, nu in product(partitions(n), repeat=3):
            n_checked += 1
            if kronecker(lam, mu, nu) != kronecker_oracle(lam, mu, nu):
                bad.append((lam, mu, nu))
    return Sweep(n_checked, bad)


@lru_cache(maxsize=None)
def dimension_count(nmax: int = 7) -> Sweep:
    bad, n_checked = [], 0
    for n in range(1, nmax + 1):
        table = character_table(n)
        ps = partitions(n)
        dims = {lam: table[lam, (1,) * n] for lam in ps}
        for mu, nu in product(ps, repeat=2):
            n_checked += 1
            total = sum(kronecker(lam, mu, nu) * dims[lam] for lam in ps)
            if total != dims[mu] * dims[nu]:
                bad.append((mu, nu, total))
    return Sweep(n_checked, bad)


@lru_cache(maxsize=None)
def bott_corollary(rmax: int = 5, size_max: int = 8, wmax: int = 3) -> Sweep:
    bad, n_checked = [], 0
    for r in range(1, rmax + 1):
        for s in range(r + 1):
            shape = GrassmannianShape(r, s)
            for k in range(size_max + 1):
                for mu in partitions(k, max_len=s):
                    padded = tuple(mu) + (0,) * (s - len(mu))
                    for w in range(-wmax, wmax + 1):
                        n_checked += 1
                        a = cohomology_S_twist(shape, mu, w)
                        b = bott(shape, (w,) * shape.q, padded)
                        if a != b:
                            bad.append((shape, mu, w, a, b))
    return Sweep(n_checked, bad)


def _summand_counter(cx, mapper=None):
    out = Counter()
    for i in cx.indices():
        for s in cx.term(i):
            out[mapper(i, s) if mapper else (i, s)] += 1
    return out


@lru_cache(maxsize=None)
def klw_duality(mmax: int = 4, amax: int = 4, wmax: int = 2, cap: int = DUALITY_CAP) -> Sweep:
    """Full summand correspondence between F^w and F^(w dual), which implies rank mirroring."""
    bad, n_checked = [], 0
    for st in kron_settings(mmax, amax, cap, proper=True):
        for w in product(range(-wmax, wmax + 1), repeat=2):
            cx = complex(st, w)
            dx = complex(st, dual_weight(st, w))
            n_checked += 1
            mirrored = {-st.euler - i: r for i, r in cx.ranks().items()}
            if mirrored != dx.ranks():
                bad.append((st, w, "ranks"))
            elif _summand_counter(cx, lambda i, s: dual_summand(st, i, s)) != _summand_counter(dx):
                bad.append((st, w, "summands"))
    return Sweep(n_checked, bad)


@lru_cache(maxsize=None)
def klw_length(mmax: int = 4, amax: int = 4, cap: int = LENGTH_CAP) -> Sweep:
    bad, n_checked = [], 0
    for st in kron_settings(mmax, amax, cap):
        n_checked += 1
        ext = generic_hom_ext(st.quiver, st.gamma, st.beta).ext
        length = complex(st).length or 0
        if ext != length:
            bad.append((st, ext, length))
    return Sweep(n_checked, bad)


@lru_cache(maxsize=None)
def klw_reflection(mmax: int = 3, amax: int = 3, wmax: int = 1, cap: int = LENGTH_CAP) -> Sweep:
    bad, n_checked = [], 0
    for st in kron_settings(mmax, amax, cap):
        ref = st.reflected()
        for w in product(range(-wmax, wmax + 1), repeat=2):
            n_checked += 1
            if complex(st, w).degree_rank_profile() != complex(ref, w[::-1]).degree_rank_profile():
                bad.append((st, w))
    return Sweep(n_checked, bad)


@lru_cache(maxsize=None)
def klw_vanishing(mmax: int = 3, amax: int = 3, max_size: int = 8) -> Sweep:
    """Both vanishing statements for w in {0,-1}^2, plus sharpness at w = 0.

    A sharpness witness is a summand of the top term, so it can only be
    missing when every such summand lies above ``max_size``.
    """
    bad, n_checked = [], 0
    for st in kron_settings(mmax, amax):
        for w in product((0, -1), repeat=2):
            for dual in (False, True):
                rep = vanishing_report(st, w, max_size, dual=dual)
                n_checked += rep.checked
                if rep.counterexamples:
                    bad.append((st, w, dual, rep.counterexamples[0]))
                if w == (0, 0) and not dual and not rep.witnesses:
                    cx = complex(st)
                    top = cx.term(cx.length or 0)
                    if min(s.degree for s in top) <= max_size:
                        bad.append((st, "no sharpness witness"))
    return Sweep(n_checked, bad)


@lru_cache(maxsize=None)
def klw_nonneg_lemma(mmax: int = 3, amax: int = 3, wmax: int = 3, cap: int = LENGTH_CAP) -> Sweep:
    """The lemma, and its dual form for the top index.

    The top-index form needs a nonzero complex; an empty one only occurs
    when generic hom(gamma, beta) is nonzero.
    """
    bad, n_checked = [], 0
    for st in kron_settings(mmax, amax, cap, proper=True):
        hom = None
        for w in product(range(-wmax, wmax + 1), repeat=2):
            if nonneg_admissible(st, w):
                n_checked += 1
                cx = complex(st, w)
                if cx.has_negative_terms():
                    bad.append((st, w, "negative terms"))
                if not nonneg_admissible(st, dual_weight(st, w)):
                    continue
                if cx.length is None:
                    if hom is None:
                        hom = generic_hom_ext(st.quiver, st.gamma, st.beta).hom
                    if hom == 0:
                        bad.append((st, w, "empty complex with hom = 0"))
                elif cx.length != -st.euler:
                    bad.append((st, w, "top index"))
    return Sweep(n_checked, bad)


@lru_cache(maxsize=None)
def tensor_duality(amax: int = 4, gmax: int = 3, wmax: int = 2, cap: int = TENSOR_DUALITY_CAP) -> Sweep:
    bad, n_checked = [], 0
    for st in tensor_settings(amax, gmax, cap):
        for w in product(range(-wmax, wmax + 1), repeat=3):
            cx = tensor_complex(st, w)
            dx = tensor_complex(st, tensor_dual_weight(st, w))
            n_checked += 1
            mirrored = {-st.inner - i: r for i, r in cx.ranks().items()}
            if mirrored != dx.ranks():
                bad.append((st, w, "ranks"))
            elif _summand_counter(cx, lambda i, s: tensor_dual_summand(st, i, s)) != _summand_counter(dx):
                bad.append((st, w, "summands"))
    return Sweep(n_checked, bad)


@lru_cache(maxsize=None)
def tensor_symmetry(amax: int = 3, wmax: int = 1, cap: int = TENSOR_SYMMETRY_CAP) -> Sweep:
    bad, n_checked = [], 0
    for st in tensor_settings(amax, amax, cap):
        for w in product(range(-wmax, wmax + 1), repeat=3):
            base = tensor_complex(st, w).degree_rank_profile()
            for perm in permutations(range(3)):
                n_checked += 1
                other = tensor_complex(st.permuted(perm), tuple(w[p] for p in perm))
                if other.degree_rank_profile() != base:
                    bad.append((st, w, perm))
    return Sweep(n_checked, bad)


@lru_cache(maxsize=None)
def tensor_vanishing(amax: int = 3, max_size: int = 8, cap: int = TENSOR_CAP) -> Sweep:
    bad, n_checked = [], 0
    for st in tensor_settings(amax, amax, cap):
        cf = codim_and_fiber(st)
        if not cf.agrees:
            bad.append((st, "probe", cf))
        for w in product((0, -1), repeat=3):
            for part in (1, 2):
                rep = kron_vanishing_check(st, w, max_size, part, cf.e, cf.h)
                n_checked += rep.checked
                if rep.counterexamples:
                    bad.append((st, w, part, rep.counterexamples[0]))
    return Sweep(n_checked, bad)


@lru_cache(maxsize=None)
def tensor_mcm(amax: int = 3, wmax: int = 2, cap: int = TENSOR_CAP) -> Sweep:
    """Whenever h = 0 and both w and its dual pass the lemma, the complex is MCM."""
    bad, n_checked = [], 0
    for st in tensor_settings(amax, amax, cap):
        cf = codim_and_fiber(st)
        if cf.h != 0:
            continue
        for w in product(range(-wmax, wmax + 1), repeat=3):
            if tensor_nonneg_admissible(st, w) and tensor_nonneg_admissible(st, tensor_dual_weight(st, w)):
                n_checked += 1
                cx = tensor_complex(st, w)
                if cx.has_negative_terms() or cx.length != cf.e:
                    bad.append((st, w, cx.lowest, cx.length, cf.e))
    return Sweep(n_checked, bad)

