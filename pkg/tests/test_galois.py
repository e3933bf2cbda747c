import itertools

import pytest

from gl2diagrams.errors import GenericityError
from gl2diagrams.galois import (
    EMPTY, J0, J1, J01, P, R0, R1, GaloisParams, Label, WeightTemplate,
    genericity_violations, is_generic, parse_J, format_J, tilde_family, weight_set,
)
from gl2diagrams.weights import SerreWeight, central_character


def test_is_generic_examples():
    assert is_generic(GaloisParams(5, 2, 0, 3, 2))
    assert is_generic(GaloisParams(7, 2, 0, 4, 3))
    assert not any(is_generic(GaloisParams(5, 3, 0, a, b)) for a, b in itertools.product(range(5), repeat=2))


def test_genericity_message_names_the_bound():
    bad = genericity_violations(GaloisParams(5, 2, 0, 4, 2))
    assert bad == ["r0 = 4 > p-2 = 3"]


def test_params_validation():
    with pytest.raises(ValueError):
        GaloisParams(9, 1, 0, 3, 2)
    with pytest.raises(ValueError):
        GaloisParams(5, 0, 0, 3, 2)
    with pytest.raises(ValueError):
        GaloisParams(5, 1, 0, 3, 2, f=3)


def test_weight_set_base():
    ws = weight_set(GaloisParams(5, 2, 0, 3, 2))
    assert len(ws) == 16 and len({w.weight for w in ws}) == 16
    first = ws[0]
    assert first.label == Label((0, 0), EMPTY)
    assert first.weight == SerreWeight(5, 0, 3, 2)
    assert first.template == WeightTemplate(R0, R1, "+")


def test_weight_set_e1():
    ws = weight_set(GaloisParams(5, 1, 0, 3, 2))
    assert [w.J for w in ws] == [EMPTY, J0, J1, J01]


def test_weight_set_rejects_non_generic():
    with pytest.raises(GenericityError, match="r1"):
        weight_set(GaloisParams(5, 2, 0, 3, 0))


def test_tilde_family_examples():
    tf = tilde_family(GaloisParams(5, 2, 0, 3, 2))
    assert tf[Label((0, 0), EMPTY)].cosocle == SerreWeight(5, 14, 4, 1)
    assert tf[Label((0, 0), J0)].cosocle == SerreWeight(5, 13, 1, 2)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_disjointness_and_central_character_exhaustive(p):
    for e in range(1, (p - 1) // 2 + 1):
        for r0, r1 in itertools.product(range(p), repeat=2):
            params = GaloisParams(p, e, 1, r0, r1)
            if not is_generic(params):
                continue
            ws = weight_set(params)
            assert len({w.weight for w in ws}) == 4 * e * e
            assert len({central_character(w.weight) for w in ws}) == 1
            for w in ws:
                assert w.template.evaluate(params.tau) == w.weight
                assert w.weight.r0 <= p - 2 and w.weight.r1 <= p - 2


def test_digit_form_rendering_and_evaluation():
    form = P - R1 - 2
    assert str(form) == "p-r1-2"
    assert form(5, 3, 2) == 1
    assert str(R0 + 1) == "r0+1"


def test_J_text_round_trip():
    for J in (EMPTY, J0, J1, J01):
        assert parse_J(format_J(J)) == J
