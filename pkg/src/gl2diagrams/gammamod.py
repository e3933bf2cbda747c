"""Length-two and length-four Gamma-modules described by their constituents."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DigitRangeError, InternalError, ParityError
from .weights import (
    SerreWeight,
    central_character,
    character_of,
    dual_weight,
    twist_signed,
)

__all__ = ["ExtensionClass", "InducedFiltration", "induced_filtration", "q_module", "q_type"]


@dataclass(frozen=True)
class ExtensionClass:
    """A non-split extension recorded as (socle, cosocle)."""

    socle: SerreWeight
    cosocle: SerreWeight

    def __post_init__(self):
        if character_of(self.socle) == character_of(self.cosocle):
            raise ValueError(f"socle and cosocle share the character of {self.socle}")

    def __str__(self) -> str:
        return f"{self.socle} --- {self.cosocle}"

    def to_json(self) -> dict:
        return {"socle": self.socle.to_json(), "cosocle": self.cosocle.to_json()}

    @classmethod
    def from_json(cls, obj: dict, p: int) -> "ExtensionClass":
        return cls(
            SerreWeight.from_json(obj["socle"], p),
            SerreWeight.from_json(obj["cosocle"], p),
        )


@dataclass(frozen=True)
class InducedFiltration:
    """Socle filtration of Ind_B^Gamma chi(sigma)^w.

    ``layer1`` is a frozenset: the middle layer is semisimple and its two
    summands carry no order.  A summand whose digits leave [0, p-1] is absent
    (this only happens when a digit of sigma is 0 or p-1).
    """

    layer0: SerreWeight
    layer1: frozenset
    layer2: SerreWeight

    @property
    def layers(self) -> tuple:
        return (self.layer0, tuple(sorted(self.layer1)), self.layer2)

    @property
    def dim(self) -> int:
        return self.layer0.dim + sum(w.dim for w in self.layer1) + self.layer2.dim


def _twist_or_none(sigma, a0, a1, sign):
    p = sigma.p
    if not (0 <= a0 <= p - 1 and 0 <= a1 <= p - 1):
        return None
    try:
        return twist_signed(sigma, a0, a1, sign)
    except ParityError as exc:  # every twist here has even parity
        raise InternalError(f"odd parity in socle filtration of {sigma}") from exc


def induced_filtration(sigma: SerreWeight) -> InducedFiltration:
    p, r0, r1 = sigma.p, sigma.r0, sigma.r1
    top = dual_weight(sigma)  # raises RegularityError on the degenerate pairs
    bottom = _twist_or_none(sigma, r0, r1, "+")
    middle = [
        _twist_or_none(sigma, p - 2 - r0, r1 - 1, "+"),
        _twist_or_none(sigma, r0 - 1, p - 2 - r1, "-"),
    ]
    last = _twist_or_none(sigma, p - 1 - r0, p - 1 - r1, "-")
    if bottom != sigma or last != top:
        raise InternalError(f"outer layers of Ind chi({sigma})^w inconsistent")
    return InducedFiltration(sigma, frozenset(w for w in middle if w is not None), top)


def q_module(sigma: SerreWeight, J) -> ExtensionClass:
    """``Q_{0}(sigma)`` or ``Q_{1}(sigma)``; ``J`` is 0, 1 or a one-element set."""
    j = _as_index(J)
    p, m, r0, r1 = sigma.p, sigma.m, sigma.r0, sigma.r1
    if r0 == p - 1 or r1 == p - 1:
        raise DigitRangeError(f"Q_J({sigma}) is undefined: a digit equals p - 1")
    if j == 0:
        cosocle = SerreWeight(p, m + r0 + 1 - p, p - 2 - r0, r1 + 1)
    else:
        cosocle = SerreWeight(p, m + p * r1 + p - 1, r0 + 1, p - 2 - r1)
    ext = ExtensionClass(sigma, cosocle)
    if central_character(sigma) != central_character(cosocle):
        raise InternalError(f"central characters differ in {ext}")
    return ext


def q_type(ext: ExtensionClass):
    """Return 0 or 1 according to which ``Q_J(socle)`` the extension is, else None."""
    for j in (0, 1):
        try:
            if q_module(ext.socle, j).cosocle == ext.cosocle:
                return j
        except DigitRangeError:
            return None
    return None


def q_source_weight(sigma: SerreWeight, J) -> SerreWeight:
    """The weight tau with ``Q_J(sigma)`` a quotient of Ind_B^Gamma chi(tau)."""
    j = _as_index(J)
    p = sigma.p
    if j == 0:
        return twist_signed(sigma, p - 2 - sigma.r0, sigma.r1 + 1, "+")
    return twist_signed(sigma, sigma.r0 + 1, p - 2 - sigma.r1, "-")


def _as_index(J) -> int:
    if isinstance(J, int) and J in (0, 1):
        return J
    J = frozenset(J)
    if J == frozenset({0}):
        return 0
    if J == frozenset({1}):
        return 1
    raise ValueError(f"J must be {{0}} or {{1}}, got {set(J)}")
