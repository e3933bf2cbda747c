"""Matrix models of Gamma = GL_2(F_{p^2})-modules over F_{p^2}.

``Ind_B^Gamma chi`` is realized on functions ``f(bg) = chi(b) f(g)`` with
basis indexed by the points of P^1(k): the coset ``Bg`` is determined by
the second row of ``g`` up to scalars.  Group elements act by right
translation.  Quotients are taken against an RREF subspace, using the
non-pivot coordinates as the complement basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..weights import TorusCharacter
from .field import QuadExtField

__all__ = [
    "Subspace", "RealizedModule", "realize_induced", "quotient_module",
    "direct_sum", "u_eigenvectors", "gamma_span", "generating_set",
    "upper_unipotent_generators",
]


class Subspace:
    """Subspace of F^n kept in reduced row echelon form."""

    def __init__(self, F: QuadExtField, n: int):
        self.F = F
        self.n = n
        self.rows = np.zeros((0, n), dtype=np.int64)
        self.pivots: list[int] = []

    @classmethod
    def spanned_by(cls, F, n, vectors) -> "Subspace":
        S = cls(F, n)
        for v in vectors:
            S.add(v)
        return S

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        F = self.F
        v = np.asarray(v, dtype=np.int64).copy()
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                v = F.sub[v, F.mul[c, row]]
        return v

    def reduce_columns(self, C: np.ndarray) -> np.ndarray:
        """Reduce every column of ``C`` modulo the subspace."""
        if not self.pivots:
            return C.copy()
        F = self.F
        coeffs = C[self.pivots, :]
        return F.sub[C, F.matmul(self.rows.T, coeffs)]

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v))

    def add(self, v) -> bool:
        F = self.F
        v = self.reduce(v)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        pc = int(nz[0])
        v = F.mul[F.inv[v[pc]], v]
        rows = self.rows
        if rows.shape[0]:
            c = rows[:, pc]
            hit = np.nonzero(c)[0]
            if hit.size:
                rows[hit] = F.sub[rows[hit], F.mul[c[hit][:, None], v[None, :]]]
        order = np.searchsorted(self.pivots, pc)
        self.rows = np.insert(rows, order, v, axis=0)
        self.pivots.insert(int(order), pc)
        return True

    def basis(self) -> np.ndarray:
        return self.rows.copy()


def generating_set(F: QuadExtField) -> list[tuple]:
    """Two transvections, the torus generators and w."""
    xi = F.gen
    return [(1, 1, 0, 1), (1, 0, 1, 1), (xi, 0, 0, 1), (1, 0, 0, xi), (0, 1, 1, 0)]


def upper_unipotent_generators(F: QuadExtField) -> list[tuple]:
    """Generators of U as an F_p-vector space: translations by 1 and by t."""
    return [(1, 1, 0, 1), (1, F.t, 0, 1)]


@dataclass
class RealizedModule:
    F: QuadExtField
    dim: int
    action: Callable = field(repr=False)
    provenance: str = ""
    blocks: list | None = field(default=None, repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    def matrix(self, g) -> np.ndarray:
        g = tuple(int(x) for x in g)
        if g not in self._cache:
            self._cache[g] = self.action(g)
        return self._cache[g]

    def act(self, g, v: np.ndarray) -> np.ndarray:
        return self.F.matmul(self.matrix(g), np.asarray(v)[:, None])[:, 0]

    @property
    def generator_matrices(self) -> list[np.ndarray]:
        return [self.matrix(g) for g in generating_set(self.F)]


def _point_index(F: QuadExtField, c: int, d: int) -> int:
    q = F.q
    if d == 0:
        return q
    return int(F.mul[c, F.inv[d]])


def realize_induced(chi: TorusCharacter, F: QuadExtField) -> RealizedModule:
    """``Ind_B^Gamma chi`` of dimension q + 1."""
    q = F.q
    reps = [(1, 0, x, 1) for x in range(q)] + [(0, 1, 1, 0)]
    rep_inv = [F.ginv(g) for g in reps]

    def char_value(b) -> int:
        return F.mul[F.power(b[0], chi.a), F.power(b[3], chi.b)]

    def action(g):
        M = np.zeros((q + 1, q + 1), dtype=np.int64)
        for x, gx in enumerate(reps):
            h = F.gmul(gx, g)
            y = _point_index(F, h[2], h[3])
            b = F.gmul(h, rep_inv[y])
            M[x, y] = char_value(b)
        return M

    return RealizedModule(F, q + 1, action, provenance=f"induced{chi}")


def quotient_module(mod: RealizedModule, S: Subspace, provenance: str = "") -> RealizedModule:
    keep = [c for c in range(mod.dim) if c not in set(S.pivots)]

    def action(g):
        M = mod.matrix(g)
        cols = S.reduce_columns(M[:, keep])
        return cols[keep, :]

    qmod = RealizedModule(mod.F, len(keep), action, provenance=provenance or f"quotient/{mod.provenance}")
    qmod.parent = mod
    qmod.keep = keep
    qmod.sub = S
    return qmod


def lift(qmod: RealizedModule, v: np.ndarray) -> np.ndarray:
    """Section of the projection from the parent onto a quotient module."""
    out = np.zeros(qmod.parent.dim, dtype=np.int64)
    out[qmod.keep] = v
    return out


def project(qmod: RealizedModule, v: np.ndarray) -> np.ndarray:
    return qmod.sub.reduce(v)[qmod.keep]


def direct_sum(mods: list[RealizedModule], provenance: str = "sum") -> RealizedModule:
    F = mods[0].F
    offsets = np.cumsum([0] + [m.dim for m in mods])

    def action(g):
        M = np.zeros((offsets[-1], offsets[-1]), dtype=np.int64)
        for m, o0, o1 in zip(mods, offsets[:-1], offsets[1:]):
            M[o0:o1, o0:o1] = m.matrix(g)
        return M

    out = RealizedModule(F, int(offsets[-1]), action, provenance=provenance,
                         blocks=[(m, int(o)) for m, o in zip(mods, offsets[:-1])])
    return out


def embed(total: RealizedModule, block: int, v: np.ndarray) -> np.ndarray:
    out = np.zeros(total.dim, dtype=np.int64)
    m, o = total.blocks[block]
    out[o:o + m.dim] = v
    return out


def _u_invariants(mod: RealizedModule) -> np.ndarray:
    F = mod.F
    I = F.identity(mod.dim)
    stack = np.vstack([F.sub[mod.matrix(u), I] for u in upper_unipotent_generators(F)])
    return F.kernel(stack)


def u_eigenvectors(mod: RealizedModule, blockwise: bool = True) -> list[tuple[TorusCharacter, np.ndarray]]:
    """Basis of the U-invariants made of H-eigenvectors, with their characters.

    For a direct sum the computation runs summand by summand (the kernel of a
    block-diagonal operator is the sum of the blockwise kernels) unless
    ``blockwise`` is False.
    """
    if blockwise and mod.blocks:
        out = []
        for k, (m, _) in enumerate(mod.blocks):
            for chi, v in u_eigenvectors(m):
                out.append((chi, embed(mod, k, v)))
        return out
    F = mod.F
    K = _u_invariants(mod)
    if K.shape[0] == 0:
        return []
    R, pivots = F.rref(K)
    xi = F.gen

    def restricted(g):
        images = F.matmul(mod.matrix(g), R.T)  # columns are images of basis vectors
        return images[pivots, :]  # coordinates in the RREF basis

    H1, H2 = restricted((xi, 0, 0, 1)), restricted((1, 0, 0, xi))
    d = R.shape[0]
    I = F.identity(d)
    out = []
    for a in range(F.q - 1):
        E = F.kernel(F.sub[H1, F.mul[F.teich_power(a), I]])
        if E.shape[0] == 0:
            continue
        # H2 restricted to this H1-eigenspace
        for b in range(F.q - 1):
            shifted = F.sub[H2, F.mul[F.teich_power(b), I]]
            Eb = F.kernel(np.vstack([F.sub[H1, F.mul[F.teich_power(a), I]], shifted]))
            for coords in Eb:
                v = F.matmul(coords[None, :], R)[0]
                out.append((TorusCharacter(F.p, a, b), v))
    if len(out) != d:
        raise ArithmeticError("torus action on U-invariants is not diagonalizable")
    return out


def gamma_span(mod: RealizedModule, vectors) -> Subspace:
    """Smallest Gamma-stable subspace containing ``vectors``."""
    F = mod.F
    S = Subspace(F, mod.dim)
    queue = [np.asarray(v, dtype=np.int64) for v in vectors]
    gens = mod.generator_matrices
    while queue:
        v = queue.pop()
        if not S.add(v):
            continue
        for M in gens:
            w = F.matmul(M, v[:, None])[:, 0]
            if not S.contains(w):
                queue.append(w)
    return S
