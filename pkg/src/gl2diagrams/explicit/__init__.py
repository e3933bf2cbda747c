"""Brute-force models over F_{p^2} used to check the symbolic layer."""

from .diagram import RealizedDiagram, RealizedQ, realize_diagram, realize_q_module, s_scan
from .field import QuadExtField, build_field
from .modules import (
    RealizedModule, Subspace, direct_sum, gamma_span, quotient_module,
    realize_induced, u_eigenvectors,
)

__all__ = [
    "QuadExtField", "build_field", "RealizedModule", "Subspace", "realize_induced",
    "u_eigenvectors", "gamma_span", "quotient_module", "direct_sum",
    "RealizedQ", "realize_q_module", "RealizedDiagram", "realize_diagram", "s_scan",
]
