"""Serre weights, Hamiltonian-walk diagram families and their inertial exponents
for GL2 over a ramified extension with residue field F_{p^2}."""

from .errors import *  # noqa: F401,F403
from .weights import SerreWeight, TorusCharacter, character_of, dual_weight, twist_signed
from .gammamod import ExtensionClass, induced_filtration, q_module, q_type
from .galois import GaloisParams, Label, is_generic, check_generic, weight_set
from .lattice import Walk, enumerate_walks, count_walks_frontier, parse_walk, snake_walk, walk_to_dot
from .family import (
    DiagramFamily, build_family, all_adjacent_variant, beta_permutation,
    cycle_decomposition, distinguish_walks, render_table,
)
from .phigamma import (
    s_value, exponent_A, exponent_polynomial, inertial_descriptor,
    character_level, level_comparison_report,
)
from .poly import AffineForm, PPoly, exact_div, evaluate

__version__ = "0.1.0"
