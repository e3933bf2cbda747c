"""F_{p^2} as F_p[t]/(t^2 - n) with table-driven arithmetic on integer codes.

An element ``a + b*t`` is encoded as the integer ``a + p*b``; vectors and
matrices are numpy ``int64`` arrays of codes.  Addition and multiplication
are table lookups, so row operations vectorize with fancy indexing.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from ..errors import PrimalityError

__all__ = ["QuadExtField", "build_field"]


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


class QuadExtField:
    def __init__(self, p: int):
        if p % 2 == 0 or not _is_prime(p):
            raise PrimalityError(f"p must be an odd prime, got {p}")
        self.p = p
        self.q = p * p
        self.nonresidue = next(n for n in range(2, p) if pow(n, (p - 1) // 2, p) == p - 1)
        codes = np.arange(self.q)
        a, b = codes % p, codes // p
        self.add = ((a[:, None] + a[None, :]) % p + p * ((b[:, None] + b[None, :]) % p)).astype(np.int64)
        self.sub = ((a[:, None] - a[None, :]) % p + p * ((b[:, None] - b[None, :]) % p)).astype(np.int64)
        re = (a[:, None] * a[None, :] + self.nonresidue * b[:, None] * b[None, :]) % p
        im = (a[:, None] * b[None, :] + b[:, None] * a[None, :]) % p
        self.mul = (re + p * im).astype(np.int64)
        self.neg = self.sub[0].copy()
        self.inv = np.zeros(self.q, dtype=np.int64)
        for x in range(1, self.q):
            self.inv[x] = int(np.nonzero(self.mul[x] == 1)[0][0])
        self.gen = self._find_generator()
        self.exp = np.zeros(self.q - 1, dtype=np.int64)
        self.log = np.full(self.q, -1, dtype=np.int64)
        x = 1
        for k in range(self.q - 1):
            self.exp[k] = x
            self.log[x] = k
            x = int(self.mul[x, self.gen])

    @property
    def modulus(self) -> tuple[int, int, int]:
        """Coefficients (1, 0, -n) of the monic modulus t^2 - n, reduced mod p."""
        return (1, 0, (-self.nonresidue) % self.p)

    @property
    def t(self) -> int:
        return self.p

    def element(self, a: int, b: int = 0) -> int:
        return a % self.p + self.p * (b % self.p)

    def pair(self, x: int) -> tuple[int, int]:
        return (int(x) % self.p, int(x) // self.p)

    def order(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        k, y = 1, x
        while y != 1:
            y = int(self.mul[y, x])
            k += 1
        return k

    def _find_generator(self) -> int:
        for x in range(2, self.q):
            if self.order(x) == self.q - 1:
                return x
        raise AssertionError("F_q^x is cyclic")

    def power(self, x: int, k: int) -> int:
        """``x**k`` with the convention 0**0 = 1."""
        if x == 0:
            return 1 if k == 0 else 0
        return int(self.exp[(int(self.log[x]) * k) % (self.q - 1)])

    def teich_power(self, k: int) -> int:
        """``xi**k`` for the fixed generator xi."""
        return int(self.exp[k % (self.q - 1)])

    @cached_property
    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    # matrices -------------------------------------------------------------
    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        p, n = self.p, self.nonresidue
        a0, a1 = A % p, A // p
        b0, b1 = B % p, B // p
        re = (a0 @ b0 + n * (a1 @ b1)) % p
        im = (a0 @ b1 + a1 @ b0) % p
        return re + p * im

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def scale(self, c: int, A: np.ndarray) -> np.ndarray:
        return self.mul[c, A]

    def axpy(self, c: int, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """``y + c*x``."""
        return self.add[y, self.mul[c, x]]

    def rref(self, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and pivot columns."""
        M = np.array(M, dtype=np.int64, copy=True)
        rows, cols = M.shape
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(M[r:, c])[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                M[[r, i]] = M[[i, r]]
            M[r] = self.mul[self.inv[M[r, c]], M[r]]
            others = np.nonzero(M[:, c])[0]
            others = others[others != r]
            if others.size:
                M[others] = self.sub[M[others], self.mul[M[others, c][:, None], M[r][None, :]]]
            pivots.append(c)
            r += 1
        return M[:r], pivots

    def kernel(self, M: np.ndarray) -> np.ndarray:
        """Basis (as rows) of ``{x : M x = 0}``."""
        cols = M.shape[1]
        R, pivots = self.rref(M)
        free = [c for c in range(cols) if c not in set(pivots)]
        basis = np.zeros((len(free), cols), dtype=np.int64)
        for k, f in enumerate(free):
            basis[k, f] = 1
            for i, pc in enumerate(pivots):
                basis[k, pc] = self.neg[R[i, f]]
        return basis

    def rank(self, M: np.ndarray) -> int:
        return len(self.rref(M)[1])

    # 2x2 group elements as tuples (a, b, c, d) of codes ---------------------
    def gmul(self, g, h):
        a, b, c, d = g
        e, f, x, y = h
        mul, add = self.mul, self.add
        return (
            int(add[mul[a, e], mul[b, x]]), int(add[mul[a, f], mul[b, y]]),
            int(add[mul[c, e], mul[d, x]]), int(add[mul[c, f], mul[d, y]]),
        )

    def gdet(self, g) -> int:
        a, b, c, d = g
        return int(self.sub[self.mul[a, d], self.mul[b, c]])

    def ginv(self, g):
        a, b, c, d = g
        di = int(self.inv[self.gdet(g)])
        m = self.mul
        return (int(m[di, d]), int(m[di, self.neg[b]]), int(m[di, self.neg[c]]), int(m[di, a]))

    def __repr__(self) -> str:
        return f"QuadExtField(p={self.p}, modulus=t^2-{self.nonresidue})"


_CACHE: dict[int, QuadExtField] = {}


def build_field(p: int) -> QuadExtField:
    if p not in _CACHE:
        _CACHE[p] = QuadExtField(p)
    return _CACHE[p]
