"""Inertial data attached to a family: s-values, the exponent A, levels.

For a label sigma = det^c (x) (a0, a1), ``s(sigma)`` is ``a0 + 1`` when the
summand at ``beta(sigma)`` is a ``Q_{1}`` and ``p*(a1 + 1)`` when it is a
``Q_{0}``; ``|s|`` drops the factor p.  The exponent is

    A = (1/(p-1)) * sum_{i < N} p^(N-1-i) * |s(beta^i(sigma))|,  N = 4e^2,

and the descriptor ``E = A - (c + a0 + p*a1 + 2) * (p^N - 1)/(p - 1)``
modulo ``p^N - 1`` is the exponent of a level-N fundamental character.
All arithmetic is on Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisibilityError, InternalError, TransitivityError
from .family import DiagramFamily, build_family
from .galois import DigitForm, GaloisParams, Label
from .gammamod import q_type
from .lattice import Walk
from .poly import AffineForm, PPoly, exact_div

__all__ = [
    "SValue", "InertialDescriptor", "s_value", "s_sequence", "exponent_A",
    "exponent_polynomial", "inertial_descriptor", "character_level",
    "frobenius_orbit", "check_sigma_independence", "level_comparison_report",
]

FIRST = "first-digit"
SECOND = "second-digit"


@dataclass(frozen=True)
class SValue:
    s: int
    abs: int
    kind: str
    digit_template: DigitForm  # |s| as an affine form in p, r0, r1

    def __post_init__(self):
        if self.kind == FIRST and self.s != self.abs:
            raise ValueError("first-digit s must equal |s|")


def s_value(fam: DiagramFamily, label: Label) -> SValue:
    p = fam.params.p
    image = fam.beta[label]
    j = q_type(fam.entries[image])
    if j is None:
        raise InternalError(f"summand at {image} is neither Q_{{0}} nor Q_{{1}} of its socle")
    sigma = fam.entries[label].socle
    tmpl = fam.socle_templates[label]
    if j == 1:
        return SValue(sigma.r0 + 1, sigma.r0 + 1, FIRST, tmpl.a0 + 1)
    return SValue(p * (sigma.r1 + 1), sigma.r1 + 1, SECOND, tmpl.a1 + 1)


def _orbit(fam: DiagramFamily, start: Label) -> list[Label]:
    n = len(fam.labels)
    orbit, cur = [], start
    for _ in range(n):
        orbit.append(cur)
        cur = fam.beta[cur]
    if len(set(orbit)) != n:
        raise TransitivityError(f"the beta orbit of {start} has {len(set(orbit))} of {n} labels")
    return orbit


def s_sequence(fam: DiagramFamily, start: Label | None = None) -> list[SValue]:
    start = start or fam.labels[0]
    return [s_value(fam, lab) for lab in _orbit(fam, start)]


def _digit_poly(form: DigitForm) -> PPoly:
    return PPoly([AffineForm(form.const, form.c0, form.c1), AffineForm(form.cp)])


def exponent_polynomial(fam: DiagramFamily, start: Label | None = None) -> PPoly:
    """A as a polynomial in p with coefficients affine in r0, r1.

    The Q-types along the orbit are read off the instance; genericity makes
    them independent of the particular (p, r0, r1).
    """
    seq = s_sequence(fam, start)
    n = len(seq)
    total = PPoly()
    for i, sv in enumerate(seq):
        total = total + PPoly.monomial(n - 1 - i) * _digit_poly(sv.digit_template)
    try:
        return exact_div(total, PPoly([-1, 1]))
    except ArithmeticError as exc:
        raise DivisibilityError(f"(p - 1) does not divide the symbolic sum: {exc}") from exc


def exponent_A(fam: DiagramFamily, start: Label | None = None, symbolic: bool = False):
    """Exact A; with ``symbolic=True`` also return its polynomial in p."""
    p = fam.params.p
    seq = s_sequence(fam, start)
    n = len(seq)
    total = sum(p ** (n - 1 - i) * sv.abs for i, sv in enumerate(seq))
    if total % (p - 1):
        raise DivisibilityError(f"p - 1 = {p - 1} does not divide {total}")
    A = total // (p - 1)
    if symbolic:
        return A, exponent_polynomial(fam, start)
    return A


@dataclass(frozen=True)
class InertialDescriptor:
    p: int
    N: int  # 4e^2
    A: int
    twist_exponent: int
    E: int
    level: int
    start: Label

    @property
    def level_modulus(self) -> int:
        return self.p ** self.N - 1

    def to_json(self) -> dict:
        p = self.p
        return {
            "start": str(self.start),
            "A_decimal": str(self.A),
            "A_factored_check": self.A % ((p + 1) * (p * p + 1)) == 0,
            "twist_exponent": self.twist_exponent,
            "E_decimal": str(self.E),
            "level": self.level,
            "compatible_level_le_4": self.level <= 4,
        }


def character_level(E: int, N: int, p: int) -> int:
    """Minimal d | N with (p^N - 1) | E * (p^d - 1)."""
    modulus = p ** N - 1
    if not 0 <= E < modulus:
        raise ValueError(f"E must lie in [0, p^{N} - 1)")
    for d in sorted(d for d in range(1, N + 1) if N % d == 0):
        if (E * (p ** d - 1)) % modulus == 0:
            return d
    raise AssertionError("d = N always works")


def inertial_descriptor(fam: DiagramFamily, label: Label | None = None) -> InertialDescriptor:
    p = fam.params.p
    label = label or fam.labels[0]
    N = len(fam.labels)
    A = exponent_A(fam, label)
    sigma = fam.entries[label].socle
    twist = sigma.m + sigma.r0 + p * sigma.r1 + 2
    modulus = p ** N - 1
    E = (A - twist * (modulus // (p - 1))) % modulus
    return InertialDescriptor(p, N, A, twist, E, character_level(E, N, p), label)


def frobenius_orbit(E: int, N: int, p: int) -> frozenset:
    modulus = p ** N - 1
    return frozenset((E * pow(p, j, modulus)) % modulus for j in range(N))


def check_sigma_independence(fam: DiagramFamily) -> list[InertialDescriptor]:
    """Descriptors for every starting label; their Frobenius orbits must coincide."""
    descs = [inertial_descriptor(fam, lab) for lab in fam.labels]
    ref = frobenius_orbit(descs[0].E, descs[0].N, descs[0].p)
    for d in descs[1:]:
        if frobenius_orbit(d.E, d.N, d.p) != ref:
            raise InternalError(
                "inertial orbit depends on the starting weight:\n"
                f"  {descs[0].to_json()}\n  {d.to_json()}"
            )
    return descs


def level_comparison_report(params: GaloisParams, walk: Walk | DiagramFamily) -> dict:
    fam = walk if isinstance(walk, DiagramFamily) else build_family(params, walk)
    desc = inertial_descriptor(fam)
    out = desc.to_json()
    out["walk"] = str(fam.walk) if fam.walk is not None else fam.variant
    out["verdict"] = (
        "level <= 4: compatible with a sum of level <= 4 characters"
        if desc.level <= 4
        else f"level {desc.level} > 4: not a sum of characters of level <= 4"
    )
    return out
