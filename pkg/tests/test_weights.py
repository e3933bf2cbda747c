import pytest

from gl2diagrams.errors import ParityError, RegularityError
from gl2diagrams.weights import (
    SerreWeight, TorusCharacter, central_character, character_of,
    conjugate_character, dual_weight, twist_signed, weight_from_character,
)


def W(m, r0, r1, p=5):
    return SerreWeight(p, m, r0, r1)


def T(a, b, p=5):
    return TorusCharacter(p, a, b)


@pytest.mark.parametrize("sigma, chi", [
    (W(0, 3, 2), (13, 0)),
    (W(1, 0, 0), (1, 1)),
    (W(13, 1, 2), (0, 13)),
])
def test_character_of(sigma, chi):
    assert character_of(sigma) == T(*chi)


def test_conjugate_character():
    assert conjugate_character(T(13, 0)) == T(0, 13)
    assert conjugate_character(T(7, 7)) == T(7, 7)


def test_dual_weight():
    sigma = W(0, 3, 2)
    assert dual_weight(sigma) == W(13, 1, 2)
    assert dual_weight(dual_weight(sigma)) == sigma
    with pytest.raises(RegularityError):
        dual_weight(W(0, 0, 0))
    with pytest.raises(RegularityError):
        dual_weight(W(3, 4, 4))


def test_twist_signed():
    sigma = W(0, 3, 2)
    assert twist_signed(sigma, 3, 2, "+") == sigma
    assert twist_signed(sigma, 2, 1, "-") == W(15, 2, 1)
    for sign in "+-":
        with pytest.raises(ParityError):
            twist_signed(sigma, 0, 2, sign)


def test_weight_from_character():
    assert weight_from_character(T(13, 0)) == W(0, 3, 2)
    assert weight_from_character(T(0, 13)) == W(13, 1, 2)
    with pytest.raises(RegularityError):
        weight_from_character(T(5, 5))


@pytest.mark.parametrize("sigma, z", [(W(0, 3, 2), 13), (W(15, 2, 1), 13), (W(1, 0, 0), 2)])
def test_central_character(sigma, z):
    assert central_character(sigma) == z


def test_m_is_reduced_and_digits_checked():
    assert W(24, 3, 2) == W(0, 3, 2)
    assert W(-1, 3, 2).m == 23
    with pytest.raises(ValueError):
        W(0, 5, 0)


def test_text_and_json_forms():
    sigma = W(15, 2, 1)
    assert str(sigma) == "det^15*(2,1)"
    assert SerreWeight.parse("det^15*(2,1)", 5) == sigma
    assert SerreWeight.from_json(sigma.to_json(), 5) == sigma
    chi = T(13, 0)
    assert str(chi) == "[13,0]"
    assert TorusCharacter.from_json(chi.to_json(), 5) == chi


def test_dimension():
    assert W(0, 3, 2).dim == 12
