"""Generic inertial parameters, the weight set D(rho) and the unswitched family.

Every weight of D(rho) is written as a signed twist ``(a0, a1)^{+/-}_tau``
of the base weight ``tau = det^m (x) (r0, r1)`` where ``a0``, ``a1`` are
affine in (p, r0, r1).  Those templates are kept next to the numeric weights
so the exponent computation can run symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import GenericityError, InternalError
from .gammamod import q_module
from .weights import SerreWeight, twist_signed

__all__ = [
    "EMPTY", "J0", "J1", "J01", "J_ORDER",
    "GaloisParams", "DigitForm", "WeightTemplate", "Label", "LabeledWeight",
    "is_generic", "check_generic", "weight_set", "tilde_family", "format_J",
]

EMPTY = frozenset()
J0 = frozenset({0})
J1 = frozenset({1})
J01 = frozenset({0, 1})
J_ORDER = (EMPTY, J0, J1, J01)


def format_J(J) -> str:
    J = frozenset(J)
    if not J:
        return "{}"
    return "{" + ",".join(str(i) for i in sorted(J)) + "}"


def parse_J(text: str) -> frozenset:
    text = text.strip().strip("{}").strip()
    if text in ("", "∅"):
        return EMPTY
    return frozenset(int(t) for t in text.split(","))


class Label(NamedTuple):
    delta: tuple
    J: frozenset

    def sort_key(self):
        return (tuple(self.delta), J_ORDER.index(self.J))

    def __str__(self) -> str:
        return f"(({self.delta[0]},{self.delta[1]}),{format_J(self.J)})"


def _is_odd_prime(p: int) -> bool:
    return p > 2 and p % 2 == 1 and all(p % d for d in range(3, int(p**0.5) + 1, 2))


@dataclass(frozen=True)
class GaloisParams:
    p: int
    e: int
    m: int
    r0: int
    r1: int
    f: int = 2

    def __post_init__(self):
        if self.f != 2:
            raise ValueError(f"only residue degree f = 2 is supported, got f = {self.f}")
        if not _is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.e < 1:
            raise ValueError(f"ramification degree must be >= 1, got {self.e}")
        object.__setattr__(self, "m", self.m % (self.p * self.p - 1))

    @property
    def q(self) -> int:
        return self.p * self.p

    @property
    def tau(self) -> SerreWeight:
        return SerreWeight(self.p, self.m, self.r0, self.r1)

    @property
    def vertices(self) -> list:
        return [(d0, d1) for d0 in range(self.e) for d1 in range(self.e)]

    @property
    def labels(self) -> list:
        return [Label(v, J) for v in self.vertices for J in J_ORDER]


def genericity_violations(params: GaloisParams) -> list[str]:
    p, e, r0, r1 = params.p, params.e, params.r0, params.r1
    bad = []
    if not 2 * e - 1 <= r0:
        bad.append(f"r0 = {r0} < 2e-1 = {2 * e - 1}")
    if not r0 <= p - 2:
        bad.append(f"r0 = {r0} > p-2 = {p - 2}")
    if not 2 * e - 2 <= r1:
        bad.append(f"r1 = {r1} < 2e-2 = {2 * e - 2}")
    if not r1 <= p - 3:
        bad.append(f"r1 = {r1} > p-3 = {p - 3}")
    return bad


def is_generic(params: GaloisParams) -> bool:
    return not genericity_violations(params)


def check_generic(params: GaloisParams) -> None:
    bad = genericity_violations(params)
    if bad:
        raise GenericityError(f"parameters {params} are not generic: " + "; ".join(bad))


@dataclass(frozen=True)
class DigitForm:
    """``const + cp*p + c0*r0 + c1*r1`` with integer coefficients."""

    const: int = 0
    cp: int = 0
    c0: int = 0
    c1: int = 0

    def __call__(self, p: int, r0: int, r1: int) -> int:
        return self.const + self.cp * p + self.c0 * r0 + self.c1 * r1

    def __add__(self, other):
        if isinstance(other, int):
            other = DigitForm(other)
        return DigitForm(self.const + other.const, self.cp + other.cp,
                         self.c0 + other.c0, self.c1 + other.c1)

    __radd__ = __add__

    def __neg__(self):
        return DigitForm(-self.const, -self.cp, -self.c0, -self.c1)

    def __sub__(self, other):
        return self + (-other if isinstance(other, DigitForm) else DigitForm(-other))

    def __rsub__(self, other):
        return (-self) + other

    def __str__(self) -> str:
        parts = []
        for coef, name in ((self.cp, "p"), (self.c0, "r0"), (self.c1, "r1")):
            if coef:
                parts.append((coef, name))
        out = ""
        for coef, name in parts:
            sign = "-" if coef < 0 else "+"
            mag = "" if abs(coef) == 1 else f"{abs(coef)}"
            out += f"{sign}{mag}{name}"
        if self.const or not out:
            out += f"{self.const:+d}"
        return out.lstrip("+")


P = DigitForm(cp=1)
R0 = DigitForm(c0=1)
R1 = DigitForm(c1=1)


@dataclass(frozen=True)
class WeightTemplate:
    """``(a0, a1)^{sign}_tau`` with affine digit forms."""

    a0: DigitForm
    a1: DigitForm
    sign: str

    def evaluate(self, tau: SerreWeight) -> SerreWeight:
        p = tau.p
        return twist_signed(tau, self.a0(p, tau.r0, tau.r1), self.a1(p, tau.r0, tau.r1), self.sign)

    def q_cosocle(self, j: int) -> "WeightTemplate":
        """Template of the cosocle of ``Q_{j}`` of the weight this template describes."""
        if j == 0:
            return WeightTemplate(P - 2 - self.a0, self.a1 + 1, self.sign)
        return WeightTemplate(self.a0 + 1, P - 2 - self.a1, "-" if self.sign == "+" else "+")

    def __str__(self) -> str:
        return f"({self.a0}, {self.a1})^{self.sign}"


def schematic_rows(delta) -> list[tuple[frozenset, WeightTemplate, WeightTemplate]]:
    """The four (J, socle, cosocle) rows of the unswitched module at ``delta``."""
    d0, d1 = delta
    T = WeightTemplate
    return [
        (EMPTY, T(R0 - 2 * d0, R1 - 2 * d1, "+"),
         T(R0 - 2 * d0 + 1, P - R1 + 2 * d1 - 2, "-")),
        (J0, T(R0 - 2 * d0 - 1, P - R1 + 2 * d1 - 2, "-"),
         T(P - R0 + 2 * d0 - 1, P - R1 + 2 * d1 - 1, "-")),
        (J1, T(P - R0 + 2 * d0 - 2, R1 - 2 * d1 + 1, "+"),
         T(R0 - 2 * d0, R1 - 2 * d1 + 2, "+")),
        (J01, T(P - R0 + 2 * d0 - 1, P - R1 + 2 * d1 - 3, "-"),
         T(P - R0 + 2 * d0, R1 - 2 * d1 + 1, "+")),
    ]


def tilde_q_index(J) -> int:
    """Which Q_J the unswitched summand is: Q_{0} for J = {0}, {1}; else Q_{1}."""
    return 0 if frozenset(J) in (J0, J1) else 1


@dataclass(frozen=True)
class LabeledWeight:
    label: Label
    weight: SerreWeight
    template: WeightTemplate

    @property
    def delta(self):
        return self.label.delta

    @property
    def J(self):
        return self.label.J

    @property
    def digit_template(self) -> tuple[DigitForm, DigitForm]:
        return (self.template.a0, self.template.a1)

    @property
    def twist_sign(self) -> str:
        return self.template.sign

    def to_json(self) -> dict:
        return {
            "delta": list(self.delta),
            "J": sorted(self.J),
            "weight": self.weight.to_json(),
            "templates": {
                "a0": str(self.template.a0),
                "a1": str(self.template.a1),
                "sign": self.template.sign,
            },
        }


def weight_set(params: GaloisParams) -> list[LabeledWeight]:
    check_generic(params)
    tau = params.tau
    out = []
    for delta in params.vertices:
        for J, soc, _ in schematic_rows(delta):
            out.append(LabeledWeight(Label(delta, J), soc.evaluate(tau), soc))
    if len(set(w.weight for w in out)) != len(out):
        raise InternalError(f"weight set of {params} is not a disjoint union")
    return out


def tilde_family(params: GaloisParams) -> dict:
    """Map each label to its unswitched summand, cross-checked against the schematic."""
    check_generic(params)
    tau = params.tau
    fam = {}
    for delta in params.vertices:
        for J, soc, cos in schematic_rows(delta):
            ext = q_module(soc.evaluate(tau), {tilde_q_index(J)})
            if ext.cosocle != cos.evaluate(tau):
                raise InternalError(f"cosocle of {Label(delta, J)} disagrees with the schematic")
            fam[Label(delta, J)] = ext
    return fam


def template_map(params: GaloisParams) -> dict:
    """Socle templates keyed by label (parameter-free apart from e)."""
    return {
        Label(delta, J): soc
        for delta in params.vertices
        for J, soc, _ in schematic_rows(delta)
    }
