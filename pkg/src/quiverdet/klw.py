"""Kempf-Lascoux-Weyman complexes for the m-arrow Kronecker quiver.

For dimension vectors gamma <= alpha (beta = alpha - gamma) and a weight on
the product of Grassmannians Gr(alpha_1, gamma_1) x Gr(alpha_2, gamma_2),
the i-th term is a sum of free modules

    S^{mu°} R_1 (x) S^{nu°} R_2^* (x) g S^{lambda'} R_12 (x) A(-|lambda|)

where g is the Kronecker coefficient g(lambda, mu, nu) and mu°, nu° come
from Bott's algorithm on the two Grassmannians.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial
from typing import NamedTuple, Sequence

from .bott import GrassmannianShape, bott, twisted_weight
from .characters import kronecker
from .partitions import PWindow, conjugate, enumerate_P, pad, partitions, schur_dim
from .quiver import euler_form, generic_hom_ext, kronecker_quiver


@dataclass(frozen=True)
class KroneckerSetting:
    m: int
    alpha: tuple
    gamma: tuple

    def __post_init__(self):
        alpha = tuple(int(x) for x in self.alpha)
        gamma = tuple(int(x) for x in self.gamma)
        if self.m < 1 or len(alpha) != 2 or len(gamma) != 2:
            raise ValueError("need m >= 1 and two-vertex dimension vectors")
        if any(g < 0 or g > a for g, a in zip(gamma, alpha)):
            raise ValueError(f"gamma {gamma} is not between 0 and alpha {alpha}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "gamma", gamma)

    @property
    def beta(self) -> tuple:
        return tuple(a - g for a, g in zip(self.alpha, self.gamma))

    @property
    def quiver(self):
        return kronecker_quiver(self.m)

    @property
    def euler(self) -> int:
        return euler_form(self.quiver, self.gamma, self.beta).value

    @property
    def koszul_length(self) -> int:
        """Rank of the bundle being resolved: m gamma_1 beta_2."""
        return self.m * self.gamma[0] * self.beta[1]

    @property
    def dims(self) -> tuple:
        return (self.alpha[0], self.alpha[1], self.m)

    def reflected(self) -> "KroneckerSetting":
        """The symmetric data gamma' = (beta_2, beta_1), beta' = (gamma_2, gamma_1)."""
        b1, b2 = self.beta
        g1, g2 = self.gamma
        return KroneckerSetting(self.m, (b2 + g2, b1 + g1), (b2, b1))


class Summand(NamedTuple):
    mu_circ: tuple  # weight on R_1, length alpha_1
    nu_circ: tuple  # weight on R_2^*, length alpha_2
    lambda_conj: tuple  # partition with at most m parts, on R_12
    mult: int
    degree: int

    @property
    def slots(self) -> tuple:
        return (self.mu_circ, self.nu_circ, self.lambda_conj)


def summand_rank(slots: Sequence[tuple], mult: int, dims: Sequence[int]) -> int:
    out = mult
    for weight, rank in zip(slots, dims):
        out *= schur_dim(pad(weight, rank) if len(weight) < rank else weight, rank)
    return out


def sort_key(summand) -> tuple:
    return (summand.degree,) + tuple(summand.slots) + (summand.mult,)


@dataclass
class KLWComplex:
    """Terms indexed by homological degree; shared by the quiver and tensor builders."""

    setting: object
    weight: tuple
    dims: tuple
    terms: dict = field(default_factory=dict)

    def indices(self) -> list[int]:
        return sorted(i for i, t in self.terms.items() if t)

    def term(self, i: int) -> list:
        return self.terms.get(i, [])

    def rank(self, i: int) -> int:
        return sum(summand_rank(s.slots, s.mult, self.dims) for s in self.term(i))

    def ranks(self) -> dict:
        return {i: self.rank(i) for i in self.indices()}

    @property
    def length(self) -> int | None:
        idx = self.indices()
        return idx[-1] if idx else None

    @property
    def lowest(self) -> int | None:
        idx = self.indices()
        return idx[0] if idx else None

    def has_negative_terms(self) -> bool:
        return any(i < 0 for i in self.indices())

    def degree_rank_profile(self) -> dict:
        """Per index, the sorted multiset of (internal degree, rank)."""
        return {
            i: sorted((s.degree, summand_rank(s.slots, s.mult, self.dims)) for s in self.term(i))
            for i in self.indices()
        }


def _finish(setting, weight, dims, found) -> KLWComplex:
    terms: dict[int, list] = {}
    for i, summand in found:
        terms.setdefault(i, []).append(summand)
    for i in terms:
        terms[i].sort(key=sort_key)
    return KLWComplex(setting, tuple(weight), tuple(dims), dict(sorted(terms.items())))


def _run_cells(cells, work, jobs):
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(work, cells))
    else:
        chunks = [work(c) for c in cells]
    return [x for chunk in chunks for x in chunk]


def complex(setting: KroneckerSetting, weight=(0, 0), jobs: int = 1) -> KLWComplex:
    """All terms of the complex twisted by the line weight (w1; w2)."""
    m = setting.m
    g1, g2 = setting.gamma
    b1, b2 = setting.beta
    a1, a2 = setting.alpha
    w1, w2 = (int(x) for x in weight)
    top = setting.koszul_length

    def cell(ts):
        t1, t2 = ts
        out = []
        for n in range(top + 1):
            mus = enumerate_P(PWindow(g1, b1, t1, w1), n)
            if not mus:
                continue
            nus = enumerate_P(PWindow(b2, g2, t2, w2), n)
            if not nus:
                continue
            lams = partitions(n, max_part=m, max_len=g1 * b2)
            i = n - b1 * t1 - g2 * t2
            for mu in mus:
                mu_c = twisted_weight(mu, g1, b1, t1, w1)
                for nu in nus:
                    nu_c = twisted_weight(nu, b2, g2, t2, w2)
                    for lam in lams:
                        g = kronecker(lam, mu, nu)
                        if g:
                            out.append((i, Summand(mu_c, nu_c, conjugate(lam), g, n)))
        return out

    cells = list(product(range(g1 + 1), range(b2 + 1)))
    found = _run_cells(cells, cell, jobs)
    assert all(len(s.mu_circ) == a1 and len(s.nu_circ) == a2 for _, s in found)
    return _finish(setting, (w1, w2), setting.dims, found)


def complex_general(setting: KroneckerSetting, omega1: Sequence[int], omega2: Sequence[int]) -> KLWComplex:
    """Terms for an arbitrary weight: omega1 on Q_1 (length beta_1), omega2 on S_2^* (length gamma_2).

    Vertex 1 is Bott on Gr(alpha_1, gamma_1) with omega1 on Q and mu on S.
    Vertex 2 is read on the dual Grassmannian of R_2^*, where Q_2^* is the
    subbundle (rank beta_2) carrying nu and S_2^* the quotient carrying omega2.
    """
    m = setting.m
    g1, g2 = setting.gamma
    b1, b2 = setting.beta
    a1, a2 = setting.alpha
    omega1, omega2 = tuple(omega1), tuple(omega2)
    if len(omega1) != b1 or len(omega2) != g2:
        raise ValueError(f"weight lengths must be ({b1}, {g2})")
    shape1 = GrassmannianShape(a1, g1)
    shape2 = GrassmannianShape(a2, b2)
    found = []
    for n in range(setting.koszul_length + 1):
        for mu in partitions(n, max_len=g1):
            first = bott(shape1, omega1, pad(mu, g1))
            if first is None:
                continue
            for nu in partitions(n, max_len=b2):
                second = bott(shape2, omega2, pad(nu, b2))
                if second is None:
                    continue
                i = n - first.degree - second.degree
                for lam in partitions(n, max_part=m, max_len=g1 * b2):
                    g = kronecker(lam, mu, nu)
                    if g:
                        found.append((i, Summand(first.weight, second.weight, conjugate(lam), g, n)))
    return _finish(setting, (omega1, omega2), setting.dims, found)


def dual_weight(setting: KroneckerSetting, weight) -> tuple:
    m, (a1, a2), (g1, _), (_, b2) = setting.m, setting.alpha, setting.gamma, setting.beta
    w1, w2 = weight
    return (m * b2 - a1 - w1, m * g1 - a2 - w2)


def dual_summand(setting: KroneckerSetting, i: int, s: Summand) -> tuple:
    """Where a summand of F^w_i lands in F^{w dual}: (index, summand).

    Weights are dualized and shifted by the determinant characters picked up
    from the canonical bundle and the top exterior power of the bundle.
    """
    m = setting.m
    g1, g2 = setting.gamma
    b1, b2 = setting.beta
    c1 = m * b2 - b1
    c2 = m * g1 - g2
    box = g1 * b2
    lam = pad(s.lambda_conj, m)
    return (
        -setting.euler - i,
        Summand(
            tuple(c1 - x for x in reversed(s.mu_circ)),
            tuple(c2 - x for x in reversed(s.nu_circ)),
            tuple(x for x in (box - y for y in reversed(lam)) if x),
            s.mult,
            setting.koszul_length - s.degree,
        ),
    )


def nonneg_admissible(setting: KroneckerSetting, weight) -> bool:
    """Sufficient test that the twisted complex has no terms in negative index."""
    m = setting.m
    b1, g2 = setting.beta[0], setting.gamma[1]
    w1, w2 = weight
    score = (b1 - w1) ** 2 + (g2 - w2) ** 2
    if score < 8:
        return True
    if score == 8:
        return b1 != g2 or w1 != w2 or w1 + w2 > m - 3
    return False


@dataclass
class CMSearchResult:
    weights: list  # [(weight, "theorem" | "direct")]
    reason: str = "ok"


def cm_weight_search(setting: KroneckerSetting, box, seed: int | None = 0) -> CMSearchResult:
    """Line weights in ``box`` whose complex resolves a maximal Cohen-Macaulay module.

    ``box`` is an iterable of (w1, w2).  A weight whose own test and dual test
    pass is certified "theorem"; otherwise the complex is built and checked
    for no negative terms and length equal to ext ("direct").
    """
    res = generic_hom_ext(setting.quiver, setting.gamma, setting.beta, seed=seed)
    if res.hom != 0:
        return CMSearchResult([], "hom-nonzero")
    out = []
    for weight in box:
        weight = tuple(weight)
        if nonneg_admissible(setting, weight) and nonneg_admissible(setting, dual_weight(setting, weight)):
            out.append((weight, "theorem"))
            continue
        cx = complex(setting, weight)
        if not cx.has_negative_terms() and cx.length == res.ext:
            out.append((weight, "direct"))
    return CMSearchResult(out)


def alternating_degree(cx: KLWComplex, r: int) -> Fraction:
    """sum over summands of (-1)^(i+r) d^r / r! * rank."""
    total = Fraction(0)
    for i in cx.indices():
        for s in cx.term(i):
            sign = -1 if (i + r) % 2 else 1
            total += sign * Fraction(s.degree**r, factorial(r)) * summand_rank(s.slots, s.mult, cx.dims)
    return total


def _as_natural(value: Fraction) -> int:
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"degree sum {value} is not a non-negative integer")
    return int(value)


def degree(setting: KroneckerSetting) -> int:
    """deg(q) * deg(Rep_{gamma in alpha}) from the untwisted complex, with r = -<gamma, beta>."""
    r = -setting.euler
    if r <= 0:
        raise ValueError(f"degree needs -<gamma, beta> > 0, got {r}")
    return _as_natural(alternating_degree(complex(setting), r))


def support_degree(cx: KLWComplex) -> int:
    """Multiplicity of the alternating sum of the terms along its support.

    Uses r = length of the complex (the codimension) instead of the Euler form,
    so it also applies when the generic fibre of q is positive dimensional.
    """
    r = cx.length
    if not r or r <= 0:
        raise ValueError("complex has no positive-index terms")
    return _as_natural(alternating_degree(cx, r))


class VanishingReport(NamedTuple):
    counterexamples: list
    witnesses: list
    checked: int


def vanishing_report(setting: KroneckerSetting, weight=(0, 0), max_size: int = 8, seed: int | None = 0,
                     dual: bool = False) -> VanishingReport:
    """Check that g(lambda, mu, nu) = 0 for lambda_1 <= m beyond the complex's range.

    Non-dual: mu in P(g1, b1, t1, w1), nu in P(b2, g2, t2, w2) with
    |mu| > b1 t1 + g2 t2 + ext; witnesses are nonzero coefficients at equality.
    Dual: the windows use the dual weight and the bound is
    |mu| < b1 t1 + g2 t2 - hom; witnesses sit at equality.
    """
    m = setting.m
    g1, g2 = setting.gamma
    b1, b2 = setting.beta
    res = generic_hom_ext(setting.quiver, setting.gamma, setting.beta, seed=seed)
    w1, w2 = dual_weight(setting, weight) if dual else weight
    bad, wit, checked = [], [], 0
    for t1 in range(g1 + 1):
        for t2 in range(b2 + 1):
            shift = b1 * t1 + g2 * t2
            edge = shift - res.hom if dual else shift + res.ext
            for n in range(max_size + 1):
                if dual:
                    if n > edge:
                        continue
                elif n < edge:
                    continue
                for mu in enumerate_P(PWindow(g1, b1, t1, w1), n):
                    for nu in enumerate_P(PWindow(b2, g2, t2, w2), n):
                        for lam in partitions(n, max_part=m):
                            g = kronecker(lam, mu, nu)
                            checked += 1
                            if n == edge:
                                if g:
                                    wit.append((t1, t2, lam, mu, nu, g))
                            elif g:
                                bad.append((t1, t2, lam, mu, nu, g))
    return VanishingReport(bad, wit, checked)
