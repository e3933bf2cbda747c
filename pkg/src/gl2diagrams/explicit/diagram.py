"""Realized quotients Q_J(sigma), the diagram (D0, D1, Pi) and the S_s scan."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import InternalError, ScalarError, UniquenessError
from ..family import DiagramFamily, build_family
from ..galois import GaloisParams, Label
from ..gammamod import induced_filtration, q_module, q_source_weight
from ..lattice import Walk
from ..weights import SerreWeight, character_of, dual_weight
from .field import QuadExtField, build_field
from .modules import (
    RealizedModule, Subspace, direct_sum, embed, gamma_span, lift,
    quotient_module, realize_induced, u_eigenvectors, upper_unipotent_generators,
)

__all__ = ["RealizedQ", "realize_q_module", "RealizedDiagram", "realize_diagram", "s_scan"]


@dataclass
class RealizedQ:
    """A realized ``Q_J(sigma)`` with its two U-eigenvectors and socle."""

    sigma: SerreWeight
    J: int
    module: RealizedModule
    socle_vector: np.ndarray
    cosocle_vector: np.ndarray
    socle: Subspace
    eigencharacters: tuple


def _eigvec(pairs, chi, what):
    hits = [v for c, v in pairs if c == chi]
    if len(hits) != 1:
        raise InternalError(f"expected one U-eigenvector of character {chi} in {what}, got {len(hits)}")
    return hits[0]


def realize_q_module(sigma: SerreWeight, J, F: QuadExtField | None = None) -> RealizedQ:
    """Quotient of ``Ind_B^Gamma chi(source)`` with socle ``sigma`` and length two.

    The kernel of the quotient map is spanned by the socle of the induced
    module and a lift of the U-eigenvector of the middle constituent other
    than ``sigma``.
    """
    ext = q_module(sigma, J)  # raises DigitRangeError
    j = 0 if J in (0, {0}, frozenset({0})) else 1
    F = F or build_field(sigma.p)
    source = q_source_weight(sigma, j)
    bottom = dual_weight(source)
    ind = realize_induced(character_of(source), F)

    ind_vectors = u_eigenvectors(ind)
    socle_vec = _eigvec(ind_vectors, character_of(bottom), "the induced module")
    kernel = gamma_span(ind, [socle_vec])
    if kernel.dim != bottom.dim:
        raise InternalError(f"socle of Ind chi({source}) has dim {kernel.dim}, expected {bottom.dim}")

    middle = induced_filtration(bottom).layer1
    if sigma not in middle:
        raise InternalError(f"{sigma} is not in the middle layer of Ind chi({source})")
    others = [w for w in middle if w != sigma]
    if others:
        (other,) = others
        stage = quotient_module(ind, kernel)
        vec = _eigvec(u_eigenvectors(stage), character_of(other), "the socle quotient")
        kernel = gamma_span(ind, list(kernel.basis()) + [lift(stage, vec)])

    Q = quotient_module(ind, kernel, provenance=f"Q_{{{j}}}({sigma})")
    if Q.dim != sigma.dim + ext.cosocle.dim:
        raise InternalError(f"realized Q_{{{j}}}({sigma}) has dim {Q.dim}")
    pairs = u_eigenvectors(Q)
    soc_v = _eigvec(pairs, character_of(sigma), str(Q.provenance))
    cos_v = _eigvec(pairs, character_of(ext.cosocle), str(Q.provenance))
    socle = gamma_span(Q, [soc_v])
    return RealizedQ(sigma, j, Q, soc_v, cos_v, socle, tuple(c for c, _ in pairs))


@dataclass
class RealizedDiagram:
    family: DiagramFamily
    d0: RealizedModule
    entries: dict  # Label -> RealizedQ
    block_of: dict  # Label -> block index in d0
    d1_basis: list  # [(Label, side, vector in d0)]
    pi_action: dict  # index in d1_basis -> (index, scalar)
    scalars: dict = field(default_factory=dict)

    @property
    def F(self) -> QuadExtField:
        return self.d0.F

    def d1_index(self, label: Label, side: str) -> int:
        return self._index[(label, side)]

    def pi(self, k: int) -> tuple[int, int]:
        return self.pi_action[k]

    def pi_vector(self, k: int) -> np.ndarray:
        j, c = self.pi_action[k]
        return self.F.mul[c, self.d1_basis[j][2]]

    def pi_squared_is_identity(self) -> bool:
        F = self.F
        for k in range(len(self.d1_basis)):
            j, c = self.pi_action[k]
            back, c2 = self.pi_action[j]
            if back != k or F.mul[c, c2] != 1:
                return False
        return True

    def socle_contains(self, v: np.ndarray) -> bool:
        """Whether ``v`` lies in soc D0 (the sum of the summands' socles)."""
        for label, rq in self.entries.items():
            m, off = self.d0.blocks[self.block_of[label]]
            part = v[off:off + m.dim]
            if np.any(part) and not rq.socle.contains(part):
                return False
        return True

    def socle_dim(self) -> int:
        return sum(rq.socle.dim for rq in self.entries.values())


def _normalize_scalars(fam, F, scalars):
    """Map each socle label to the pair (forward, backward) of nonzero codes."""
    out = {}
    scalars = scalars or {}
    for label in fam.labels:
        val = scalars.get(label, 1)
        if isinstance(val, tuple):
            fwd, bwd = (int(x) % F.q for x in val)
        else:
            fwd = int(val) % F.q
            if fwd == 0:
                raise ScalarError(f"pairing scalar for {label} is zero")
            bwd = int(F.inv[fwd])
        if fwd == 0 or bwd == 0:
            raise ScalarError(f"pairing scalar for {label} is zero")
        if F.mul[fwd, bwd] != 1:
            raise ScalarError(f"pairing scalars for {label} multiply to {F.pair(F.mul[fwd, bwd])}, Pi^2 != 1")
        out[label] = (fwd, bwd)
    return out


def realize_diagram(params: GaloisParams, walk: Walk | DiagramFamily, scalars=None) -> RealizedDiagram:
    """Realize D0 as a direct sum and Pi on the 8e^2 U-eigenvectors.

    ``scalars`` maps a label to the field code by which Pi multiplies its
    socle eigenvector (the way back uses the inverse), or to an explicit
    pair ``(forward, backward)`` whose product must be 1.
    """
    fam = walk if isinstance(walk, DiagramFamily) else build_family(params, walk)
    F = build_field(params.p)
    scal = _normalize_scalars(fam, F, scalars)
    entries, mods, block_of = {}, [], {}
    for k, label in enumerate(fam.labels):
        ext = fam.entries[label]
        rq = realize_q_module(ext.socle, fam.q_index[label], F)
        entries[label] = rq
        mods.append(rq.module)
        block_of[label] = k
    d0 = direct_sum(mods, provenance=f"D0[{fam.variant}]")
    basis, index = [], {}
    for label in fam.labels:
        rq = entries[label]
        for side, v in (("socle", rq.socle_vector), ("cosocle", rq.cosocle_vector)):
            index[(label, side)] = len(basis)
            basis.append((label, side, embed(d0, block_of[label], v)))
    pi = {}
    for label in fam.labels:
        target = fam.beta[label]
        s, c = index[(label, "socle")], index[(target, "cosocle")]
        fwd, bwd = scal[label]
        pi[s] = (c, fwd)
        pi[c] = (s, bwd)
    diag = RealizedDiagram(fam, d0, entries, block_of, basis, pi, scal)
    diag._index = index
    return diag


def s_scan(diag: RealizedDiagram, label: Label, detail: bool = False):
    """The unique ``0 <= s <= q-1`` with ``sum_lambda lambda^s g_lambda (Pi v)`` a
    nonzero U-invariant of soc D0.

    ``g_lambda = [[lambda, 1], [1, 0]]`` and ``v`` is the socle eigenvector at
    ``label``; ``0**0`` is taken to be 1.
    """
    F = diag.F
    q = F.q
    k = diag.d1_index(label, "socle")
    j, c = diag.pi_action[k]
    target_label = diag.d1_basis[j][0]
    rq = diag.entries[target_label]
    w = F.mul[c, rq.cosocle_vector]
    images = np.stack([rq.module.act((lam, 1, 1, 0), w) for lam in range(q)])
    unipotents = [rq.module.matrix(u) for u in upper_unipotent_generators(F)]
    hits = []
    for s in range(q):
        coeffs = np.array([F.power(lam, s) for lam in range(q)], dtype=np.int64)
        total = F.matmul(coeffs[None, :], images)[0]
        if not np.any(total) or not rq.socle.contains(total):
            continue
        if all(np.array_equal(F.matmul(U, total[:, None])[:, 0], total) for U in unipotents):
            hits.append(s)
    if len(hits) != 1:
        raise UniquenessError(f"S_s scan at {label}: hits {hits}")
    return (hits[0], hits) if detail else hits[0]
