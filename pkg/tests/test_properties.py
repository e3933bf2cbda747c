"""Hypothesis checks of the algebraic invariants."""

from hypothesis import assume, given, settings, strategies as st

from gl2diagrams.family import build_family
from gl2diagrams.galois import GaloisParams, is_generic, weight_set
from gl2diagrams.gammamod import induced_filtration, q_module
from gl2diagrams.lattice import enumerate_walks, validate_walk
from gl2diagrams.phigamma import exponent_A, exponent_polynomial
from gl2diagrams.poly import AffineForm, PPoly, arith, evaluate, exact_div
from gl2diagrams.weights import (
    SerreWeight, TorusCharacter, central_character, character_of,
    conjugate_character, dual_weight, is_regular, twist_signed, weight_from_character,
)

primes = st.sampled_from([3, 5, 7, 11, 13])


@st.composite
def weights(draw, regular=True):
    p = draw(primes)
    sigma = SerreWeight(p, draw(st.integers(-500, 500)), draw(st.integers(0, p - 1)),
                        draw(st.integers(0, p - 1)))
    if regular:
        assume(is_regular(sigma))
    return sigma


@st.composite
def generic_params(draw, e=None):
    p = draw(st.sampled_from([5, 7, 11, 13]))
    e = e or draw(st.integers(1, (p - 1) // 2))
    assume(2 * e - 1 <= p - 2 and 2 * e - 2 <= p - 3)
    r0 = draw(st.integers(2 * e - 1, p - 2))
    r1 = draw(st.integers(2 * e - 2, p - 3))
    params = GaloisParams(p, e, draw(st.integers(0, p * p - 2)), r0, r1)
    assert is_generic(params)
    return params


@given(weights())
def test_character_round_trip(sigma):
    assert weight_from_character(character_of(sigma)) == sigma


@given(weights())
def test_dual_is_involution_and_conjugates(sigma):
    assert dual_weight(dual_weight(sigma)) == sigma
    assert character_of(dual_weight(sigma)) == conjugate_character(character_of(sigma))


@given(primes, st.integers(), st.integers())
def test_conjugation_involution(p, a, b):
    chi = TorusCharacter(p, a, b)
    assert conjugate_character(conjugate_character(chi)) == chi


@given(weights(regular=False), st.data())
def test_signed_twists_differ_by_half(sigma, data):
    p = sigma.p
    a0 = data.draw(st.integers(0, p - 1))
    a1 = data.draw(st.integers(0, p - 1))
    assume((sigma.r0 - a0 + p * (sigma.r1 - a1)) % 2 == 0)
    plus, minus = twist_signed(sigma, a0, a1, "+"), twist_signed(sigma, a0, a1, "-")
    assert plus.digits == minus.digits == (a0, a1)
    assert central_character(plus) == central_character(minus) == central_character(sigma)
    assert (minus.m - plus.m) % (p * p - 1) == (p * p - 1) // 2


@given(weights())
def test_filtration_bottom_is_dual(sigma):
    assert induced_filtration(sigma).layer2 == dual_weight(sigma)


@given(weights(regular=False), st.sampled_from([0, 1]))
def test_q_module_central_character(sigma, j):
    assume(sigma.r0 <= sigma.p - 2 and sigma.r1 <= sigma.p - 2)
    ext = q_module(sigma, {j})
    assert central_character(ext.socle) == central_character(ext.cosocle)


@settings(max_examples=40, deadline=None)
@given(generic_params(e=2))
def test_every_walk_is_transitive_and_symbolic_matches(params):
    for w in enumerate_walks(2):
        fam = build_family(params, w)
        assert fam.is_transitive
        A, poly = exponent_A(fam, symbolic=True)
        assert poly(params.p, params.r0, params.r1) == A


@settings(max_examples=15, deadline=None)
@given(generic_params(e=3), st.data())
def test_sampled_e3_walks(params, data):
    w = data.draw(st.sampled_from(enumerate_walks(3)))
    fam = build_family(params, w)
    assert len(fam.cycles()) == 1
    assert exponent_polynomial(fam)(params.p, params.r0, params.r1) == exponent_A(fam)


@settings(max_examples=30, deadline=None)
@given(generic_params())
def test_weight_set_distinct(params):
    ws = weight_set(params)
    assert len({w.weight for w in ws}) == 4 * params.e ** 2


@given(st.permutations(list(range(4))))
def test_walk_reversal_normalized(order):
    cycle = [(0, 0), (1, 0), (1, 1), (0, 1)]
    start = order[0]
    path = cycle[start:] + cycle[:start]
    assert validate_walk(path, 2) == validate_walk(path[::-1], 2)


affine = st.builds(AffineForm, st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
const = st.integers(-9, 9).map(lambda c: AffineForm(c, 0, 0))


@st.composite
def polys(draw, constant_only=False):
    coeffs = draw(st.lists(const if constant_only else affine, max_size=6))
    return PPoly(coeffs)


@given(polys(), polys(constant_only=True), st.sampled_from(["add", "sub", "mul"]),
       st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20))
def test_evaluation_is_a_ring_homomorphism(a, b, op, p, r0, r1):
    x, y = evaluate(a, p, r0, r1), evaluate(b, p, r0, r1)
    z = evaluate(arith(a, b, op), p, r0, r1)
    assert z == {"add": x + y, "sub": x - y, "mul": x * y}[op]


@given(polys(), st.lists(st.integers(-9, 9), max_size=4), st.sampled_from([1, -1]))
def test_division_reconstructs(a, low, lead):
    b = PPoly(low + [lead])
    prod = arith(a, b, "mul")
    assert exact_div(prod, b) == a
