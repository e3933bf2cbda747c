"""Serre weights det^m (x) (r0, r1) and diagonal torus characters, f = 2.

Everything is a small frozen value.  The residue field has q = p^2 elements
and twist exponents live in Z/(q-1).  A torus character ``(a, b)`` means
``diag(x, y) -> eps(x)^a * eps(y)^b`` for the fixed embedding ``eps``.

The highest-weight convention is used throughout: ``det^m (x) (r0, r1)``
acts on its U-invariant line by ``(m + r0 + p*r1, m)``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import ParityError, RegularityError

__all__ = [
    "SerreWeight",
    "TorusCharacter",
    "character_of",
    "conjugate_character",
    "dual_weight",
    "twist_signed",
    "weight_from_character",
    "central_character",
    "is_regular",
]


@dataclass(frozen=True, order=True)
class SerreWeight:
    """``det^m (x) (r0, r1)`` over F_{p^2}; ``m`` is stored reduced mod p^2 - 1."""

    p: int
    m: int
    r0: int
    r1: int

    def __post_init__(self):
        q1 = self.p * self.p - 1
        if not (0 <= self.r0 <= self.p - 1 and 0 <= self.r1 <= self.p - 1):
            raise ValueError(f"digits ({self.r0},{self.r1}) outside [0, {self.p - 1}]")
        object.__setattr__(self, "m", self.m % q1)

    @property
    def q(self) -> int:
        return self.p * self.p

    @property
    def r(self) -> int:
        return self.r0 + self.p * self.r1

    @property
    def digits(self) -> tuple[int, int]:
        return (self.r0, self.r1)

    @property
    def dim(self) -> int:
        return (self.r0 + 1) * (self.r1 + 1)

    def __str__(self) -> str:
        return f"det^{self.m}*({self.r0},{self.r1})"

    def to_json(self) -> dict:
        return {"m": self.m, "r0": self.r0, "r1": self.r1}

    @classmethod
    def from_json(cls, obj: dict | str, p: int) -> "SerreWeight":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(p, int(obj["m"]), int(obj["r0"]), int(obj["r1"]))

    @classmethod
    def parse(cls, token: str, p: int) -> "SerreWeight":
        """Parse the text token ``det^m*(r0,r1)``."""
        match = _TOKEN.fullmatch(token.strip())
        if match is None:
            raise ValueError(f"not a weight token: {token!r}")
        m, r0, r1 = (int(g) for g in match.groups())
        return cls(p, m, r0, r1)


_TOKEN = re.compile(r"det\^(-?\d+)\*\(\s*(\d+)\s*,\s*(\d+)\s*\)")


@dataclass(frozen=True, order=True)
class TorusCharacter:
    p: int
    a: int
    b: int

    def __post_init__(self):
        q1 = self.p * self.p - 1
        object.__setattr__(self, "a", self.a % q1)
        object.__setattr__(self, "b", self.b % q1)

    @property
    def is_regular(self) -> bool:
        return self.a != self.b

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"

    def to_json(self) -> list[int]:
        return [self.a, self.b]

    @classmethod
    def from_json(cls, obj, p: int) -> "TorusCharacter":
        if isinstance(obj, str):
            obj = json.loads(obj)
        a, b = obj
        return cls(p, int(a), int(b))


def character_of(sigma: SerreWeight) -> TorusCharacter:
    return TorusCharacter(sigma.p, sigma.m + sigma.r, sigma.m)


def conjugate_character(chi: TorusCharacter) -> TorusCharacter:
    return TorusCharacter(chi.p, chi.b, chi.a)


def is_regular(sigma: SerreWeight) -> bool:
    return sigma.digits not in {(0, 0), (sigma.p - 1, sigma.p - 1)}


def _require_regular(sigma: SerreWeight) -> None:
    if not is_regular(sigma):
        raise RegularityError(
            f"{sigma}: digit pair {sigma.digits} has chi = chi^w, no distinct dual weight"
        )


def dual_weight(sigma: SerreWeight) -> SerreWeight:
    """The weight ``sigma^[w]`` whose character is ``chi(sigma)^w``."""
    _require_regular(sigma)
    p = sigma.p
    return SerreWeight(p, sigma.m + sigma.r, p - 1 - sigma.r0, p - 1 - sigma.r1)


def twist_signed(sigma: SerreWeight, a0: int, a1: int, sign: str) -> SerreWeight:
    """The twist ``(a0, a1)^{+/-}_sigma`` with the central character of ``sigma``.

    The halving happens over the integers; reducing first would be ambiguous
    because q - 1 is even.
    """
    p = sigma.p
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    if not (0 <= a0 <= p - 1 and 0 <= a1 <= p - 1):
        raise ValueError(f"digits ({a0},{a1}) outside [0, {p - 1}]")
    diff = sigma.r0 - a0 + p * (sigma.r1 - a1)
    if diff % 2:
        raise ParityError(f"r0 - a0 + p(r1 - a1) = {diff} is odd for ({a0},{a1}) rel. {sigma}")
    shift = diff // 2
    if sign == "-":
        shift += (p * p - 1) // 2
    return SerreWeight(p, sigma.m + shift, a0, a1)


def weight_from_character(chi: TorusCharacter) -> SerreWeight:
    """Left inverse of :func:`character_of` on regular weights."""
    if not chi.is_regular:
        raise RegularityError(f"character {chi} is not regular (a = b)")
    p = chi.p
    r = (chi.a - chi.b) % (p * p - 1)
    return SerreWeight(p, chi.b, r % p, r // p)


def central_character(sigma: SerreWeight) -> int:
    """Exponent of the scalar action ``lambda * Id -> eps(lambda)^c``."""
    return (2 * sigma.m + sigma.r) % (sigma.q - 1)
