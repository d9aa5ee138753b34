import pytest

from quiverdet.klw import KroneckerSetting, complex
from quiverdet.notation import (KNOWN_ERRATA, canonical_golden, compare_term, normalize_golden,
                                parse_term, render_term)
from quiverdet.tensor import TensorSetting, tensor_complex

import goldens


@pytest.mark.parametrize("name", sorted(goldens.jobs()))
def test_render_parse_round_trip(name):
    cx = goldens.computed(name)
    for i in cx.indices():
        text = render_term(cx.term(i))
        assert canonical_golden(text, cx)[0] == text


def test_order_and_exponents_do_not_matter():
    cx = complex(KroneckerSetting(3, (3, 3), (2, 2)))
    ok, _ = compare_term(cx, 0, "(2,1;1,1,1;1^3) + (1^3;1^3;2,1) + (0;0;0)")
    assert ok


def test_wrapped_last_slot_expands():
    cx = complex(KroneckerSetting(3, (3, 3), (2, 1)))
    g = goldens.golden("K3-33-21")["terms"]["1"]
    assert compare_term(cx, 1, g)[0]


def test_corrupted_golden_reports_diff():
    cx = complex(KroneckerSetting(3, (3, 3), (2, 2)))
    ok, msg = compare_term(cx, 1, "(2,1^2;2,1^2;3)")
    assert not ok
    assert "expected: (2,1^2;2,1^2;3)" in msg and "computed: (2,1^2;2,1^2;2,1^2)" in msg


def test_delimiter_errata_are_reported():
    text, used = normalize_golden("(5,2^2;5,2^2,3^3)")
    assert text == KNOWN_ERRATA["(5,2^2;5,2^2,3^3)"]
    assert used == [("(5,2^2;5,2^2,3^3)", "(5,2^2;5,2^2;3^3)")]
    cx = complex(KroneckerSetting(3, (3, 3), (2, 1)))
    ok, msg = compare_term(cx, 5, goldens.golden("K3-33-21")["terms"]["5"])
    assert ok and "normalized" in msg


def test_extra_errata_are_applied_and_reported():
    text, used = normalize_golden("(1;2;3)", [("(1;2;3)", "(3;2;1)")])
    assert text == "(3;2;1)" and used


def test_parse_errors():
    dims, deg = (3, 3, 3), lambda slots: sum(slots[-1])
    with pytest.raises(ValueError):
        parse_term("(1;1)", dims, deg)
    with pytest.raises(ValueError):
        parse_term("(1;1;1", dims, deg)
    with pytest.raises(ValueError):
        parse_term("1;1;1", dims, deg)


def test_multiplicity_prefix_parses():
    parsed = parse_term("2(1;1;1)", (2, 2, 2), lambda slots: sum(slots[-1]))
    assert [(p.mult, p.degree) for p in parsed] == [(2, 1)]


def test_tensor_degree_recovered_from_first_slot():
    cx = tensor_complex(TensorSetting((4, 4, 4), (2, 2, 3)), (2, 0, 1))
    assert canonical_golden("(2^2;0;1)", cx)[0] == render_term(cx.term(0))
