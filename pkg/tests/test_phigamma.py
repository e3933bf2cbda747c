import pytest

from gl2diagrams.errors import TransitivityError
from gl2diagrams.family import all_adjacent_variant, build_family
from gl2diagrams.galois import EMPTY, J1, GaloisParams, Label
from gl2diagrams.lattice import enumerate_walks, snake_walk
from gl2diagrams.phigamma import (
    FIRST, SECOND, character_level, check_sigma_independence, exponent_A,
    frobenius_orbit, inertial_descriptor, level_comparison_report, s_value,
)


def test_s_value_examples(base_family):
    sv = s_value(base_family, Label((0, 0), EMPTY))
    assert (sv.s, sv.abs, sv.kind) == (15, 3, SECOND)
    sv = s_value(base_family, Label((0, 0), J1))
    assert (sv.s, sv.abs, sv.kind) == (1, 1, FIRST)
    for lab in base_family.labels:
        assert 1 <= s_value(base_family, lab).abs <= 4


def test_exponent_base(base_family):
    A, poly = exponent_A(base_family, Label((0, 0), EMPTY), symbolic=True)
    assert A == 26712331464
    assert A % 156 == 0
    assert poly(5, 3, 2) == A


def test_symbolic_digits_within_range(base_family):
    from gl2diagrams.phigamma import s_sequence
    for sv in s_sequence(base_family):
        val = sv.digit_template(5, 3, 2)
        assert val == sv.abs and 1 <= val <= 4


def test_cyclic_start_identity(base_family):
    p, N = 5, 16
    for lab in base_family.labels:
        A = exponent_A(base_family, lab)
        A2 = exponent_A(base_family, base_family.beta[lab])
        s0 = s_value(base_family, lab).abs
        assert (p - 1) * A2 == p * (p - 1) * A - s0 * (p ** N - 1)


def test_non_transitive_rejected(base):
    with pytest.raises(TransitivityError):
        exponent_A(all_adjacent_variant(base))


def test_descriptor(base_family):
    d = inertial_descriptor(base_family, Label((0, 0), EMPTY))
    assert d.twist_exponent == 15
    assert 0 <= d.E < d.level_modulus
    assert d.level == 16


def test_character_level():
    assert character_level(0, 16, 5) == 1
    assert character_level((5 ** 16 - 1) // (5 ** 4 - 1), 16, 5) == 4
    assert character_level(1, 16, 5) == 16
    with pytest.raises(ValueError):
        character_level(5 ** 16 - 1, 16, 5)


def test_orbit_and_levels_all_walks(base):
    for w in enumerate_walks(2):
        fam = build_family(base, w)
        descs = check_sigma_independence(fam)
        assert len(descs) == 16
        assert inertial_descriptor(fam).level not in (1, 2, 4)


def test_frobenius_orbit_closed():
    orb = frobenius_orbit(7, 4, 5)
    assert all((x * 5) % (5 ** 4 - 1) in orb for x in orb)


def test_report_fields(base):
    rep = level_comparison_report(base, snake_walk(2))
    for key in ("A_decimal", "A_factored_check", "E_decimal", "level", "compatible_level_le_4"):
        assert key in rep
    assert rep["compatible_level_le_4"] is False


def test_report_p7_regression():
    rep = level_comparison_report(GaloisParams(7, 2, 0, 4, 3), snake_walk(2))
    assert rep["A_decimal"] == "4226995538400"
    assert rep["level"] == 16
