import pytest

from gl2diagrams.errors import DigitRangeError, RegularityError
from gl2diagrams.gammamod import ExtensionClass, induced_filtration, q_module, q_source_weight, q_type
from gl2diagrams.weights import SerreWeight, dual_weight, twist_signed


def W(m, r0, r1, p=5):
    return SerreWeight(p, m, r0, r1)


def test_induced_filtration_base():
    filt = induced_filtration(W(0, 3, 2))
    assert filt.layer0 == W(0, 3, 2)
    assert filt.layer1 == frozenset({W(4, 0, 1), W(15, 2, 1)})
    assert filt.layer2 == W(13, 1, 2) == dual_weight(W(0, 3, 2))


def test_induced_filtration_rejects_degenerate():
    with pytest.raises(RegularityError):
        induced_filtration(W(0, 0, 0))


def test_q_module_examples():
    sigma = W(0, 3, 2)
    assert q_module(sigma, {0}) == ExtensionClass(sigma, W(23, 0, 3))
    assert q_module(sigma, {1}) == ExtensionClass(sigma, W(14, 4, 1))
    with pytest.raises(DigitRangeError):
        q_module(W(0, 4, 2), {0})
    with pytest.raises(DigitRangeError):
        q_module(W(0, 2, 4), {1})


def test_q_type_detects_both_quotients():
    sigma = W(0, 3, 2)
    assert q_type(q_module(sigma, {0})) == 0
    assert q_type(q_module(sigma, {1})) == 1
    assert q_type(ExtensionClass(sigma, W(13, 1, 2))) is None


def test_q_module_sits_in_the_middle_layer_of_its_source():
    sigma = W(0, 3, 2)
    src0 = twist_signed(sigma, 5 - 2 - 3, 2 + 1, "+")
    src1 = twist_signed(sigma, 3 + 1, 5 - 2 - 2, "-")
    assert q_module(sigma, {0}).cosocle == src0
    assert q_module(sigma, {1}).cosocle == src1
    for j, src in ((0, src0), (1, src1)):
        assert q_source_weight(sigma, j) == src
        assert sigma in induced_filtration(src).layer1


def test_extension_class_text_and_json():
    ext = q_module(W(0, 3, 2), {1})
    assert str(ext) == "det^0*(3,2) --- det^14*(4,1)"
    assert ExtensionClass.from_json(ext.to_json(), 5) == ext
    with pytest.raises(ValueError):
        ExtensionClass(W(0, 3, 2), W(0, 3, 2))
