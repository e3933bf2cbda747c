"""Polynomials in p whose coefficients are affine integer forms in r0, r1.

The coefficient ring is deliberately tiny: products are only allowed when at
least one factor has purely integer coefficients, which is all the exponent
bookkeeping needs.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

from .errors import DivisionError, NonAffineError

__all__ = ["AffineForm", "PPoly", "arith", "exact_div", "evaluate", "E2_REFERENCE_EXPONENT"]


@dataclass(frozen=True)
class AffineForm:
    """``c0 + c_r0*r0 + c_r1*r1``."""

    c0: int = 0
    c_r0: int = 0
    c_r1: int = 0

    @property
    def is_constant(self) -> bool:
        return self.c_r0 == 0 and self.c_r1 == 0

    def __bool__(self) -> bool:
        return bool(self.c0 or self.c_r0 or self.c_r1)

    def __add__(self, other: "AffineForm") -> "AffineForm":
        return AffineForm(self.c0 + other.c0, self.c_r0 + other.c_r0, self.c_r1 + other.c_r1)

    def __neg__(self) -> "AffineForm":
        return AffineForm(-self.c0, -self.c_r0, -self.c_r1)

    def __sub__(self, other: "AffineForm") -> "AffineForm":
        return self + (-other)

    def scale(self, k: int) -> "AffineForm":
        return AffineForm(k * self.c0, k * self.c_r0, k * self.c_r1)

    def __mul__(self, other: "AffineForm") -> "AffineForm":
        if self.is_constant:
            return other.scale(self.c0)
        if other.is_constant:
            return self.scale(other.c0)
        raise NonAffineError(f"({self}) * ({other}) is not affine in r0, r1")

    def __call__(self, r0: int, r1: int) -> int:
        return self.c0 + self.c_r0 * r0 + self.c_r1 * r1

    def __str__(self) -> str:
        return f"{self.c0} + {self.c_r0}*r0 + {self.c_r1}*r1"


_ZERO = AffineForm()


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class PPoly:
    """Dense polynomial in ``p``; ``coeffs[k]`` multiplies ``p**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(c if isinstance(c, AffineForm) else AffineForm(c) for c in coeffs)

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "PPoly":
        coeff = coeff if isinstance(coeff, AffineForm) else AffineForm(coeff)
        return cls([_ZERO] * k + [coeff])

    @classmethod
    def p(cls) -> "PPoly":
        return cls.monomial(1)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_integral(self) -> bool:
        return all(c.is_constant for c in self.coeffs)

    def coeff(self, k: int) -> AffineForm:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = PPoly([other])
        return isinstance(other, PPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            body = _render_affine(c)
            if k == 0:
                terms.append(f"({body})")
            elif k == 1:
                terms.append(f"p*({body})")
            else:
                terms.append(f"p^{k}*({body})")
        return " + ".join(terms)

    def __add__(self, other):
        return arith(self, _lift(other), "add")

    __radd__ = __add__

    def __sub__(self, other):
        return arith(self, _lift(other), "sub")

    def __rsub__(self, other):
        return arith(_lift(other), self, "sub")

    def __mul__(self, other):
        if isinstance(other, int):
            return arith(self, other, "scalar_mul")
        return arith(self, _lift(other), "mul")

    def __rmul__(self, other):
        return self.__mul__(other)

    def __neg__(self):
        return arith(self, -1, "scalar_mul")

    def __pow__(self, n: int):
        out = PPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __floordiv__(self, other):
        return exact_div(self, _lift(other))

    def __call__(self, p: int, r0: int = 0, r1: int = 0) -> int:
        return evaluate(self, p, r0, r1)


def _lift(x) -> PPoly:
    if isinstance(x, PPoly):
        return x
    if isinstance(x, (int, AffineForm)):
        return PPoly([x])
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def _render_affine(c: AffineForm) -> str:
    parts = [str(c.c0)] if c.c0 or c.is_constant else []
    for coef, name in ((c.c_r0, "r0"), (c.c_r1, "r1")):
        if coef:
            parts.append(f"{coef}*{name}")
    out = " + ".join(parts)
    return out.replace("+ -", "- ")


def arith(a: PPoly, b, op: str) -> PPoly:
    if op == "scalar_mul":
        return PPoly(c.scale(b) for c in a.coeffs)
    if op in ("add", "sub"):
        f = operator.add if op == "add" else operator.sub
        n = max(len(a.coeffs), len(b.coeffs))
        return PPoly(f(a.coeff(k), b.coeff(k)) for k in range(n))
    if op == "mul":
        if not (a.is_integral or b.is_integral):
            raise NonAffineError("both factors depend on r0, r1")
        if not a.coeffs or not b.coeffs:
            return PPoly()
        out = [_ZERO] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                out[i + j] = out[i + j] + x * y
        return PPoly(out)
    raise ValueError(f"unknown operation {op!r}")


def exact_div(a: PPoly, b: PPoly) -> PPoly:
    """Long division by an integer-coefficient divisor; the remainder must vanish."""
    if not b.coeffs:
        raise DivisionError("division by the zero polynomial")
    if not b.is_integral:
        raise DivisionError("divisor must have integer coefficients")
    lead = b.coeffs[-1].c0
    rem = list(a.coeffs)
    quot = [_ZERO] * max(len(rem) - len(b.coeffs) + 1, 0)
    for k in range(len(rem) - len(b.coeffs), -1, -1):
        top = rem[k + b.degree]
        if not top:
            continue
        if top.c0 % lead or top.c_r0 % lead or top.c_r1 % lead:
            raise DivisionError(f"leading coefficient {lead} does not divide {top}")
        q = AffineForm(top.c0 // lead, top.c_r0 // lead, top.c_r1 // lead)
        quot[k] = q
        for i, c in enumerate(b.coeffs):
            rem[k + i] = rem[k + i] - q.scale(c.c0)
    if any(rem):
        raise DivisionError(f"nonzero remainder {PPoly(rem)}")
    return PPoly(quot)


def evaluate(a: PPoly, p: int, r0: int = 0, r1: int = 0) -> int:
    total = 0
    for c in reversed(a.coeffs):
        total = total * p + c(r0, r1)
    return total


def _bracket(cp: int, c0: int, c_r0: int, c_r1: int) -> PPoly:
    """``cp*p + c0 + c_r0*r0 + c_r1*r1`` as a polynomial."""
    return PPoly([AffineForm(c0, c_r0, c_r1), cp])


def _reference_exponent() -> PPoly:
    # coefficient of p^k, for k = 15 down to 0
    brackets = [
        (1, -2, 1, 0), (1, -3, 1, 0), (1, -2, 0, 1), (2, -2, -1, 0),
        (2, -3, -1, 0), (1, -3, 0, 1), (1, -2, 1, 0), (1, -3, 1, 0),
        (1, -4, 1, 0), (2, -2, 0, -1), (2, -3, 0, -1), (2, -4, 0, -1),
        (2, -1, -1, 0), (2, -2, -1, 0), (2, -3, -1, 0), (1, -1, 0, 1),
    ]
    total = PPoly()
    for i, br in enumerate(brackets):
        total = total + PPoly.monomial(15 - i) * _bracket(*br)
    return total


#: Reference 16-term exponent for e = 2 and the walk 0,0;1,0;1,1;0,1.
E2_REFERENCE_EXPONENT = _reference_exponent()
