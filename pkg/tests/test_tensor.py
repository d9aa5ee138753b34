from itertools import permutations, product

import pytest

from quiverdet.characters import kronecker
from quiverdet.klw import KroneckerSetting, complex, degree, support_degree
from quiverdet.notation import render, render_term
from quiverdet.partitions import PWindow, conjugate, in_P
from quiverdet.quiver import generic_hom_ext
from quiverdet.tensor import (TensorSetting, codim_and_fiber, kron_vanishing_check, tensor_complex,
                              tensor_degree, tensor_dual_weight, tensor_nonneg_admissible)

import sweeps

T345 = TensorSetting((3, 4, 5), (2, 3, 2))
T444 = TensorSetting((4, 4, 4), (2, 2, 3))

# tensor data with a one-dimensional first subspace, and the quiver data it reduces to
IDENTIFICATIONS = [
    ((2, 3, 4), (1, 2, 3), KroneckerSetting(2, (3, 4), (1, 1))),
    ((2, 4, 5), (1, 2, 4), KroneckerSetting(2, (4, 5), (1, 1))),
    ((2, 4, 5), (1, 3, 3), KroneckerSetting(2, (4, 5), (1, 1))),
    ((3, 3, 5), (1, 2, 4), KroneckerSetting(3, (5, 3), (3, 2))),
    ((4, 4, 4), (1, 3, 3), KroneckerSetting(4, (4, 4), (2, 3))),
    ((4, 5, 5), (1, 3, 4), KroneckerSetting(5, (4, 5), (1, 3))),
]


def terms(cx):
    return {i: render_term(cx.term(i)) for i in cx.indices()}


def test_untwisted_example():
    assert terms(tensor_complex(T345)) == {
        -1: "(2,1^2;1^4;1^4)",
        0: "(0;0;0)⊕(3,1^2;2,1^3;1^5)⊕(5,3,2;3^2,2^2;2^5)",
        1: "(5^2,2;3^4;3^2,2^3)",
    }


def test_twisted_example():
    assert terms(tensor_complex(T444, (2, 0, 1))) == {
        0: "(2^2;0;1)",
        1: "(2^4;1^4;2^2,1)⊕(4,3^2,2;2^4;3,2^3)",
    }


def test_zero_subspaces():
    cx = tensor_complex(TensorSetting((2, 3, 2), (0, 0, 0)))
    assert terms(cx) == {0: "(0;0;0)"}


def test_dual_weight_examples():
    assert tensor_dual_weight(T444, (0, 0, 0)) == (2, 2, 0)
    assert tensor_dual_weight(TensorSetting((2, 2, 2), (1, 1, 1)), (0, 0, 0)) == (-1, -1, -1)


def test_dual_weight_involution():
    for st in sweeps.tensor_settings(3, 3):
        for w in product(range(-2, 3), repeat=3):
            assert tensor_dual_weight(st, tensor_dual_weight(st, w)) == w


def test_nonneg_examples():
    assert tensor_nonneg_admissible(TensorSetting((2, 3, 4), (2, 3, 4)), (0, 0, 0))
    st = TensorSetting((2, 2, 2), (1, 1, 1))
    assert tensor_nonneg_admissible(st, (2, 2, 2))
    assert tensor_nonneg_admissible(st, (0, 0, 0))


def test_codim_examples():
    assert codim_and_fiber(T345).e == 1
    assert codim_and_fiber(T444).e == 1
    for st in (T345, T444):
        assert codim_and_fiber(st).agrees


def test_full_subspaces_give_the_origin():
    # every tensor must vanish on the full space, so the variety is a point
    cf = codim_and_fiber(TensorSetting((2, 2, 2), (2, 2, 2)))
    assert (cf.e, cf.h) == (8, 0) and cf.agrees


def test_h_minus_e_is_inner():
    for st in sweeps.tensor_settings(3, 3, cap=12):
        cf = codim_and_fiber(st)
        assert cf.h - cf.e == st.inner


def test_degrees():
    assert tensor_degree(T345) == 240
    assert tensor_degree(T444) == 560


def test_degree_needs_negative_inner():
    with pytest.raises(ValueError):
        tensor_degree(TensorSetting((2, 3, 4), (1, 2, 3)))


@pytest.mark.parametrize("alpha,gamma,kst", IDENTIFICATIONS)
def test_identification(alpha, gamma, kst):
    st = TensorSetting(alpha, gamma)
    cf = codim_and_fiber(st)
    ext = generic_hom_ext(kst.quiver, kst.gamma, kst.beta).ext
    assert cf.e == ext == complex(kst).length
    assert support_degree(tensor_complex(st)) == degree(kst)


def test_small_identification_degree_is_twelve():
    # zero inner form: the degree comes from the complex length
    st = TensorSetting((2, 3, 4), (1, 2, 3))
    assert st.inner == 0
    assert support_degree(tensor_complex(st)) == 12


def test_vanishing_examples():
    rep = kron_vanishing_check(TensorSetting((2, 2, 2), (1, 1, 1)), (0, 0, 0), 8, part=1)
    assert rep.counterexamples == [] and rep.checked > 0
    rep = kron_vanishing_check(TensorSetting((3, 3, 3), (2, 2, 2)), (0, 0, 0), 6, part=2)
    assert rep.counterexamples == []
    rep = kron_vanishing_check(TensorSetting((2, 2, 2), (1, 1, 1)), (0, 0, 0), -1)
    assert rep == ([], [], 0)


def test_conjugated_slot_matters():
    # three copies of (2) sit in the windows past the size bound: the coefficient
    # vanishes only once one slot is conjugated
    st = TensorSetting((1, 1, 3), (1, 1, 2))
    cf = codim_and_fiber(st)
    lam = (2,)
    assert all(in_P(lam, PWindow(g, b, 1, 0)) for g, b in zip(st.gamma, st.beta))
    assert 2 > sum(st.beta) + cf.e
    assert kronecker(lam, lam, lam) == 1
    assert kronecker(conjugate(lam), lam, lam) == 0
    assert kron_vanishing_check(st, (0, 0, 0), 4, part=1).counterexamples == []


def test_permuted_output_is_deterministic():
    for perm in permutations(range(3)):
        st = T345.permuted(perm)
        assert render(tensor_complex(st, jobs=1), "json") == render(tensor_complex(st, jobs=3), "json")


def test_setting_validation():
    with pytest.raises(ValueError):
        TensorSetting((2, 2), (1, 1))
    with pytest.raises(ValueError):
        TensorSetting((2, 2, 2), (3, 1, 1))


def test_duality_sweep():
    res = sweeps.tensor_duality()
    assert res.checked > 20000 and not res.failures


def test_symmetry_sweep():
    res = sweeps.tensor_symmetry()
    assert not res.failures


def test_vanishing_sweep():
    res = sweeps.tensor_vanishing()
    assert res.checked > 50000 and not res.failures


def test_mcm_sweep():
    res = sweeps.tensor_mcm()
    assert res.checked > 1000 and not res.failures
