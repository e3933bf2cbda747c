"""Verification suites shared by the CLI and the acceptance tests.

Each check returns a :class:`CheckResult`.  A check that trips a
:class:`~gl2diagrams.errors.FalsificationError` is reported with status
``"falsified"`` rather than ``"fail"`` so callers can tell a broken claim from
a mismatch in an equality test.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from .errors import FalsificationError
from .explicit import (
    build_field, gamma_span, realize_diagram, realize_induced, realize_q_module,
    s_scan, u_eigenvectors,
)
from .family import all_adjacent_variant, build_family, distinguish_walks
from .galois import EMPTY, J0, J01, J1, P, R0, R1, GaloisParams, Label, WeightTemplate, is_generic
from .lattice import count_walks_frontier, enumerate_walks, parse_walk
from .phigamma import (
    check_sigma_independence, exponent_A, inertial_descriptor, s_value,
)
from .poly import E2_REFERENCE_EXPONENT, PPoly, evaluate, exact_div
from .weights import character_of, dual_weight

__all__ = [
    "CheckResult", "BASE", "EXAMPLE_WALK", "REFERENCE_ROWS", "SUITES",
    "run_suite", "check_reference_table", "check_transitivity", "check_walk_counts",
    "check_distinctness", "check_symmetry_break", "check_exponent",
    "check_lemmas", "check_genericity_boundary", "check_levels",
    "check_sigma_orbits",
]

BASE = GaloisParams(5, 2, 0, 3, 2)
EXAMPLE_WALK = "0,0;1,0;1,1;0,1"


def _t(a0, a1, sign):
    return WeightTemplate(a0, a1, sign)


# (delta, J, socle template, n, cosocle template, cosocle subscript) as printed.
REFERENCE_ROWS = [
    ((0, 0), EMPTY, _t(R0, R1, "+"), 0, _t(R0 + 1, P - 2 - R1, "-"), 15),
    ((0, 0), J0, _t(R0 - 1, P - 2 - R1, "-"), 1, _t(P - 1 - R0, P - 1 - R1, "-"), 0),
    ((0, 0), J1, _t(P - 2 - R0, R1 + 1, "+"), 15, _t(R0, R1 + 2, "+"), 14),
    ((0, 0), J01, _t(P - 1 - R0, P - 3 - R1, "-"), 14, _t(R0 - 1, P - 2 - R1, "-"), 13),
    ((0, 1), EMPTY, _t(R0, R1 - 2, "+"), 6, _t(R0 + 1, P - R1, "-"), 5),
    ((0, 1), J0, _t(R0 - 1, P - R1, "-"), 7, _t(P - 1 - R0, P + 1 - R1, "-"), 6),
    ((0, 1), J1, _t(P - 2 - R0, R1 - 1, "+"), 5, _t(R0, R1, "+"), 4),
    ((0, 1), J01, _t(P - 1 - R0, P - 1 - R1, "-"), 4, _t(R0 - 1, P - R1, "-"), 3),
    ((1, 0), EMPTY, _t(R0 - 2, R1, "+"), 2, _t(P - R0, R1 + 1, "+"), 1),
    ((1, 0), J0, _t(R0 - 3, P - 2 - R1, "-"), 11, _t(R0 - 2, R1, "+"), 10),
    ((1, 0), J1, _t(P - R0, R1 + 1, "+"), 13, _t(R0 - 2, R1 + 2, "+"), 12),
    ((1, 0), J01, _t(P + 1 - R0, P - 3 - R1, "-"), 12, _t(P + 2 - R0, R1 + 1, "+"), 11),
    ((1, 1), EMPTY, _t(R0 - 2, R1 - 2, "+"), 8, _t(P - R0, R1 - 1, "+"), 7),
    ((1, 1), J0, _t(R0 - 3, P - R1, "-"), 9, _t(P + 1 - R0, P + 1 - R1, "-"), 8),
    ((1, 1), J1, _t(P - R0, R1 - 1, "+"), 3, _t(P + 1 - R0, P - 1 - R1, "-"), 2),
    ((1, 1), J01, _t(P + 1 - R0, P - 1 - R1, "-"), 10, _t(P + 2 - R0, R1 - 1, "+"), 9),
]


@dataclass
class CheckResult:
    criterion: int
    name: str
    status: str  # "pass", "fail" or "falsified"
    detail: str
    seconds: float
    budget: float

    @property
    def passed(self) -> bool:
        return self.status == "pass" and self.seconds <= self.budget

    def line(self) -> str:
        tag = "PASS" if self.passed else self.status.upper()
        if self.status == "pass" and not self.passed:
            tag = "SLOW"
        return (f"[{tag}] criterion {self.criterion} {self.name} "
                f"({self.seconds:.2f}s, budget {self.budget:g}s): {self.detail}")


def _run(criterion: int, name: str, budget: float, body: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    try:
        ok, detail = body()
        status = "pass" if ok else "fail"
    except FalsificationError as exc:
        status, detail = "falsified", f"{type(exc).__name__}: {exc}"
    return CheckResult(criterion, name, status, detail, time.perf_counter() - start, budget)


def generic_instances(e: int, count: int, primes=(5, 7, 11, 13, 17)) -> list[GaloisParams]:
    out = []
    for p in primes:
        for r0, r1 in itertools.product(range(p), repeat=2):
            params = GaloisParams(p, e, 0, r0, r1)
            if is_generic(params):
                out.append(params)
                if len(out) == count:
                    return out
    return out


# -- criterion 1 ---------------------------------------------------------------

def check_reference_table(params: GaloisParams = BASE, walk: str = EXAMPLE_WALK) -> CheckResult:
    def body():
        fam = build_family(params, parse_walk(walk, params.e))
        if not fam.is_transitive:
            return False, "beta is not a single cycle"
        index = fam.beta_power_index(Label((0, 0), EMPTY))
        size = len(fam.labels)
        bad = []
        for delta, J, soc_t, n, cos_t, cn in REFERENCE_ROWS:
            lab = Label(delta, J)
            ext = fam.entries[lab]
            if fam.socle_templates[lab] != soc_t or fam.cosocle_template(lab) != cos_t:
                bad.append(f"{lab}: templates")
            if ext.socle != soc_t.evaluate(params.tau) or ext.cosocle != cos_t.evaluate(params.tau):
                bad.append(f"{lab}: numeric weights")
            if index[lab] != n:
                bad.append(f"{lab}: beta index {index[lab]} != {n}")
            if index[fam.matching[lab]] != cn or cn != (n - 1) % size:
                bad.append(f"{lab}: cosocle subscript")
        if bad:
            return False, "; ".join(bad)
        return True, f"all {len(REFERENCE_ROWS)} rows reproduced"

    return _run(1, "example4", 1.0, body)


# -- walks suite ---------------------------------------------------------------

def check_transitivity() -> CheckResult:
    def body():
        checked = 0
        for e in (1, 2, 3):
            walks = enumerate_walks(e)
            for params in generic_instances(e, 2):
                for w in walks:
                    fam = build_family(params, w)
                    if not fam.is_transitive:
                        return False, f"{params} walk {w}: cycle type {sorted(map(len, fam.cycles()))}"
                    checked += 1
        return True, f"{checked} families, each a single 4e^2-cycle"

    return _run(2, "beta-transitivity", 30.0, body)


def check_walk_counts() -> CheckResult:
    def body():
        counts = []
        for e in range(1, 5):
            a, b = len(enumerate_walks(e)), count_walks_frontier(e)
            if a != b:
                return False, f"e={e}: backtracking {a} vs frontier {b}"
            counts.append(a)
        if counts[1] != 4:
            return False, f"e=2 count is {counts[1]}"
        return True, f"counts for e=1..4: {counts}"

    return _run(3, "walk-enumeration", 60.0, body)


def check_distinctness(samples: int = 12, seed: int = 0) -> CheckResult:
    def body():
        n2 = n3 = 0
        params2 = BASE
        for w1, w2 in itertools.combinations(enumerate_walks(2), 2):
            cmp = distinguish_walks(params2, w1, w2)
            if cmp.equal or cmp.witness is None:
                return False, f"no witness for {w1} vs {w2}"
            n2 += 1
        params3 = generic_instances(3, 1)[0]
        pairs = list(itertools.combinations(enumerate_walks(3), 2))
        for w1, w2 in random.Random(seed).sample(pairs, samples):
            cmp = distinguish_walks(params3, w1, w2)
            if cmp.equal or cmp.witness is None:
                return False, f"no witness for {w1} vs {w2}"
            n3 += 1
        return True, f"witnesses for {n2} pairs at e=2 and {n3} sampled pairs at e=3"

    return _run(4, "walk-distinctness", 10.0, body)


def check_symmetry_break() -> CheckResult:
    def body():
        types = set()
        for params in generic_instances(2, 6):
            fam = all_adjacent_variant(params)
            cyc = sorted((len(c) for c in fam.cycles()), reverse=True)
            if len(cyc) < 2:
                return False, f"{params}: beta is transitive"
            types.add(tuple(cyc))
        return True, f"beta decomposes; cycle types {sorted(types)}"

    return _run(5, "symmetry-break", 1.0, body)


# -- phigamma suite ------------------------------------------------------------

def check_exponent(params: GaloisParams = BASE, walk: str = EXAMPLE_WALK) -> CheckResult:
    def body():
        notes, ok = [], True
        fam = build_family(params, parse_walk(walk, params.e))
        A = exponent_A(fam, Label((0, 0), EMPTY))
        ref = evaluate(E2_REFERENCE_EXPONENT, params.p, params.r0, params.r1)
        if A == ref:
            notes.append("A equals the reference display")
        else:
            ok = False
            notes.append(f"A = {A} but the reference display evaluates to {ref}")
        try:
            B = exact_div(exact_div(E2_REFERENCE_EXPONENT, PPoly([1, 1])), PPoly([1, 0, 1]))
            if B.degree == 13:
                notes.append("display = (p+1)(p^2+1)B with deg B = 13")
            else:
                ok = False
                notes.append(f"quotient has degree {B.degree}")
        except ArithmeticError as exc:
            ok = False
            notes.append(f"display not divisible: {exc}")
        agreements = 0
        for inst in generic_instances(2, 5, primes=(5, 7, 11)):
            for w in enumerate_walks(2):
                f = build_family(inst, w)
                num, poly = exponent_A(f, symbolic=True)
                if poly(inst.p, inst.r0, inst.r1) != num:
                    ok = False
                    notes.append(f"symbolic mismatch at {inst} walk {w}")
                agreements += 1
        notes.append(f"numeric == symbolic on {agreements} (instance, walk) pairs")
        return ok, "; ".join(notes)

    return _run(6, "exponent-A", 5.0, body)


def check_levels(params: GaloisParams = BASE) -> CheckResult:
    def body():
        levels = []
        for w in enumerate_walks(params.e):
            levels.append(inertial_descriptor(build_family(params, w)).level)
        ok = all(d not in (1, 2, 4) for d in levels)
        return ok, f"levels per walk: {levels}"

    return _run(9, "level-comparison", 1.0, body)


def check_sigma_orbits(params: GaloisParams = BASE, walk: str = EXAMPLE_WALK) -> CheckResult:
    def body():
        descs = check_sigma_independence(build_family(params, parse_walk(walk, params.e)))
        return True, f"Frobenius orbit of E identical across {len(descs)} starting labels"

    return _run(10, "sigma-independence", 5.0, body)


# -- lemmas suite --------------------------------------------------------------

def _lemma_checks(params: GaloisParams, walk: str) -> list[str]:
    F = build_field(params.p)
    fam = build_family(params, parse_walk(walk, params.e))
    bad = []
    q = params.q
    for label in fam.labels:
        ext = fam.entries[label]
        sigma = ext.socle
        ind = realize_induced(character_of(sigma), F)
        if ind.dim != q + 1:
            bad.append(f"dim Ind at {label} is {ind.dim}")
        if len(u_eigenvectors(ind)) != 2:
            bad.append(f"U-invariants of Ind at {label}")
        rq = realize_q_module(sigma, fam.q_index[label], F)
        if rq.socle.dim != sigma.dim:
            bad.append(f"socle span at {label} has dim {rq.socle.dim}")
        if rq.module.dim != sigma.dim + ext.cosocle.dim:
            bad.append(f"dim Q at {label} is {rq.module.dim}")
        expected = {character_of(sigma), character_of(ext.cosocle)}
        if len(rq.eigencharacters) != 2 or set(rq.eigencharacters) != expected:
            bad.append(f"eigencharacters at {label}: {rq.eigencharacters}")
        if gamma_span(rq.module, [rq.cosocle_vector]).dim != rq.module.dim:
            bad.append(f"Q at {label} is split")
    # the socle of Ind chi(sigma) is the dual weight; check its span once more directly
    tau = params.tau
    ind = realize_induced(character_of(tau), F)
    dual = dual_weight(tau)
    vec = [v for c, v in u_eigenvectors(ind) if c == character_of(dual)]
    if len(vec) != 1 or gamma_span(ind, vec).dim != dual.dim:
        bad.append("socle of Ind chi(tau)")
    diag = realize_diagram(params, fam)
    if len(diag.d1_basis) != 8 * params.e ** 2:
        bad.append(f"dim D1 = {len(diag.d1_basis)}")
    if not diag.pi_squared_is_identity():
        bad.append("Pi^2 != 1")
    for label in fam.labels:
        s = s_scan(diag, label)  # UniquenessError propagates as a falsification
        sv = s_value(fam, label)
        if s != sv.s:
            bad.append(f"s_scan {s} != s_value {sv.s} at {label}")
    return bad


def check_lemmas(params: GaloisParams = BASE, walk: str = EXAMPLE_WALK) -> CheckResult:
    def body():
        bad = _lemma_checks(params, walk)
        if bad:
            return False, "; ".join(bad)
        n = len(params.labels)
        return True, (f"dim Ind = {params.q + 1}, 2 U-eigenlines, {n} realized Q's non-split, "
                      f"dim D1 = {8 * params.e ** 2}, Pi^2 = 1, s_scan == s_value on {n} labels")

    return _run(7, "explicit-lemmas", 120.0, body)


def check_genericity_boundary(max_p: int = 13) -> CheckResult:
    def body():
        tested = 0
        for p in (3, 5, 7, 11, 13):
            if p > max_p:
                break
            for e in range((p - 1) // 2 + 1, (p - 1) // 2 + 3):
                for r0, r1 in itertools.product(range(p), repeat=2):
                    if is_generic(GaloisParams(p, e, 0, r0, r1)):
                        return False, f"p={p}, e={e}, (r0,r1)=({r0},{r1}) is generic"
                    tested += 1
            # the boundary is sharp: e = (p-1)/2 admits a generic pair
            e = (p - 1) // 2
            if e >= 1 and not any(is_generic(GaloisParams(p, e, 0, a, b))
                                  for a, b in itertools.product(range(p), repeat=2)):
                return False, f"p={p}, e={e} has no generic pair"
        return True, f"{tested} pairs with e > (p-1)/2 rejected; e = (p-1)/2 admits generic pairs"

    return _run(8, "genericity-boundary", 1.0, body)


SUITES = {
    "example4": lambda params, walk: [check_reference_table(params)],
    "walks": lambda params, walk: [check_transitivity(), check_walk_counts(),
                                   check_distinctness(), check_symmetry_break()],
    "lemmas": lambda params, walk: [check_lemmas(params, walk), check_genericity_boundary()],
    "phigamma": lambda params, walk: [check_exponent(params, walk), check_levels(params),
                                      check_sigma_orbits(params, walk)],
}


def run_suite(name: str, params: GaloisParams = BASE, walk: str = EXAMPLE_WALK) -> list[CheckResult]:
    if name == "all":
        results = []
        for key in ("example4", "walks", "lemmas", "phigamma"):
            results.extend(SUITES[key](params, walk))
        return sorted(results, key=lambda r: r.criterion)
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    return SUITES[name](params, walk)
