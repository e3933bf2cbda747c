"""Walk-dependent families of length-two extensions and their beta permutation.

For a Hamiltonian walk the unswitched family is modified on the labels that
sit on a walk edge; the U-eigencharacters are then paired socle-to-cosocle
and the pairing induces a permutation ``beta`` of the 4e^2 labels.  Every
object here is scalar-free; the pairing constants live in ``explicit``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import InternalError, MatchingError
from .galois import (
    EMPTY, J0, J1, J01, GaloisParams, Label, WeightTemplate, check_generic,
    format_J, schematic_rows, template_map, tilde_q_index,
)
from .gammamod import ExtensionClass, q_module
from .lattice import Walk, adjacent, format_walk, lattice_edges, parse_walk
from .weights import character_of, conjugate_character

__all__ = [
    "DiagramFamily", "kappa_pairs", "build_family", "all_adjacent_variant",
    "character_matching", "beta_permutation", "cycle_decomposition",
    "distinguish_walks", "WalkComparison", "switch_index", "cycle_type",
    "family_document", "family_from_document",
    "family_table", "render_table", "label_from_json",
]


def switch_index(label: Label, is_adjacent: Callable) -> int:
    """Q-index of the summand at ``label`` once switches along edges are applied."""
    (d0, d1), J = label.delta, label.J
    if J == J0 and is_adjacent((d0, d1), (d0, d1 + 1)):
        return 1
    if J == J1 and is_adjacent((d0, d1), (d0, d1 - 1)):
        return 1
    if J == J01 and is_adjacent((d0, d1), (d0 + 1, d1)):
        return 0
    if J == EMPTY and is_adjacent((d0, d1), (d0 - 1, d1)):
        return 0
    return tilde_q_index(J)


@dataclass
class DiagramFamily:
    params: GaloisParams
    walk: Walk | None
    entries: dict  # Label -> ExtensionClass
    q_index: dict  # Label -> 0 or 1
    socle_templates: dict  # Label -> WeightTemplate
    matching: dict = field(default_factory=dict)  # cosocle-owner label -> socle-owner label
    beta: dict = field(default_factory=dict)
    variant: str = "walk"

    @property
    def labels(self) -> list:
        return self.params.labels

    def cosocle_template(self, label: Label) -> WeightTemplate:
        return self.socle_templates[label].q_cosocle(self.q_index[label])

    def cycles(self) -> list[list[Label]]:
        return cycle_decomposition(self.beta, self.labels)

    @property
    def is_transitive(self) -> bool:
        return len(self.cycles()) == 1

    def beta_power_index(self, start: Label | None = None) -> dict:
        """``n`` with ``label = beta^n(start)``; requires a single cycle."""
        start = start or self.labels[0]
        index, cur = {}, start
        for n in range(len(self.labels)):
            index[cur] = n
            cur = self.beta[cur]
        if len(index) != len(self.labels):
            raise InternalError("beta is not transitive; no global beta index")
        return index

    def matched_with(self, label: Label) -> Label:
        """Owner of the socle occurrence paired with the cosocle of ``label``."""
        return self.matching[label]

    def to_json(self) -> list[dict]:
        out = []
        for label in self.labels:
            ext = self.entries[label]
            out.append({
                "delta": list(label.delta),
                "J": sorted(label.J),
                "socle": ext.socle.to_json(),
                "cosocle": ext.cosocle.to_json(),
                "q_type": self.q_index[label],
                "beta_image": _label_json(self.beta[label]),
                "matched_with": _label_json(self.matching[label]),
            })
        return out


def _label_json(label: Label) -> dict:
    return {"delta": list(label.delta), "J": sorted(label.J)}


def label_from_json(obj: dict) -> Label:
    return Label(tuple(obj["delta"]), frozenset(obj["J"]))


def kappa_pairs(params: GaloisParams) -> list[tuple[Label, Label]]:
    """Label pairs whose unswitched cosocles are mutually dual, one per lattice edge."""
    from .galois import tilde_family

    tilde = tilde_family(params)
    pairs = []
    for u, v in lattice_edges(params.e):
        if u[0] == v[0]:  # vertical edge (d0, d1) -- (d0, d1 + 1)
            pair = (Label(tuple(u), J0), Label(tuple(v), J1))
        else:
            pair = (Label(tuple(u), J01), Label(tuple(v), EMPTY))
        a, b = (tilde[x].cosocle for x in pair)
        if character_of(a) != conjugate_character(character_of(b)):
            raise InternalError(f"kappa condition fails on {pair[0]}, {pair[1]}")
        pairs.append(pair)
    return pairs


def _assemble(params: GaloisParams, is_adjacent, walk, variant) -> DiagramFamily:
    check_generic(params)
    tau = params.tau
    entries, qidx, templates = {}, {}, {}
    for delta in params.vertices:
        for J, soc, _ in schematic_rows(delta):
            label = Label(delta, J)
            j = switch_index(label, is_adjacent)
            entries[label] = q_module(soc.evaluate(tau), {j})
            qidx[label] = j
            templates[label] = soc
    fam = DiagramFamily(params, walk, entries, qidx, templates, variant=variant)
    fam.matching = character_matching(fam)
    fam.beta = beta_permutation(fam)
    return fam


def build_family(params: GaloisParams, walk: Walk) -> DiagramFamily:
    if walk.e != params.e:
        raise ValueError(f"walk is on a {walk.e}x{walk.e} lattice, parameters have e = {params.e}")
    edges = walk.edges

    def on_walk(u, v):
        return frozenset((tuple(u), tuple(v))) in edges

    return _assemble(params, on_walk, walk, "walk")


def all_adjacent_variant(params: GaloisParams) -> DiagramFamily:
    """Switch along every lattice edge instead of along a walk."""
    e = params.e

    def inside(v):
        return 0 <= v[0] < e and 0 <= v[1] < e

    def any_edge(u, v):
        return inside(u) and inside(v) and adjacent(u, v)

    return _assemble(params, any_edge, None, "all-adjacent")


def character_matching(fam: DiagramFamily) -> dict:
    """Pair each cosocle occurrence with the socle occurrence of conjugate character.

    Occurrences are (label, side); weights may repeat across sides when e > 1,
    so matching is done per side and must be a bijection.
    """
    socle_chars: dict = {}
    cosocle_chars: dict = {}
    for label, ext in fam.entries.items():
        socle_chars.setdefault(character_of(ext.socle), []).append(label)
        cosocle_chars.setdefault(character_of(ext.cosocle), []).append(label)
    matching = {}
    for chi, owners in cosocle_chars.items():
        if chi == conjugate_character(chi):
            raise MatchingError(f"cosocle character {chi} is self-conjugate")
        partners = socle_chars.get(conjugate_character(chi), [])
        if len(owners) != 1 or len(partners) != 1:
            raise MatchingError(
                f"character {chi}: {len(owners)} cosocle and {len(partners)} socle candidates"
            )
        matching[owners[0]] = partners[0]
    if len(matching) != len(fam.entries) or len(set(matching.values())) != len(fam.entries):
        raise MatchingError("socle/cosocle pairing is not a perfect matching")
    return matching


def beta_permutation(fam: DiagramFamily) -> dict:
    """``beta(sigma)`` is the label whose cosocle carries ``chi(sigma)^w``."""
    matching = fam.matching or character_matching(fam)
    return {socle_owner: cos_owner for cos_owner, socle_owner in matching.items()}


def cycle_decomposition(perm: dict, order=None) -> list[list]:
    order = list(order) if order is not None else sorted(perm)
    seen = set()
    cycles = []
    for start in order:
        if start in seen:
            continue
        cyc, cur = [], start
        while cur not in seen:
            seen.add(cur)
            cyc.append(cur)
            cur = perm[cur]
        cycles.append(cyc)
    return cycles


def cycle_type(perm: dict) -> list[int]:
    return sorted((len(c) for c in cycle_decomposition(perm)), reverse=True)


@dataclass(frozen=True)
class WalkComparison:
    equal: bool
    witness: Label | None = None
    image1: Label | None = None
    image2: Label | None = None
    edge: tuple | None = None

    def __str__(self) -> str:
        if self.equal:
            return "walks have the same edge set; beta permutations agree"
        return (f"witness {self.witness}: beta1 -> {self.image1}, beta2 -> {self.image2} "
                f"(edge {self.edge[0]}--{self.edge[1]} only in the first walk)")


def distinguish_walks(params: GaloisParams, walk1: Walk, walk2: Walk) -> WalkComparison:
    """Find a label on which the two beta permutations disagree.

    For an edge (d, d') of ``walk1`` that ``walk2`` avoids there is exactly
    one label at ``d`` that ``beta1`` sends to ``d'``; ``beta2`` cannot.
    """
    fam1 = build_family(params, walk1)
    fam2 = build_family(params, walk2)
    if walk1.edges == walk2.edges:
        if fam1.beta != fam2.beta:
            raise InternalError("equal walks produced different beta permutations")
        return WalkComparison(True)
    for edge in sorted(tuple(sorted(e)) for e in walk1.edges - walk2.edges):
        for d, d2 in (edge, edge[::-1]):
            hits = [lab for lab in params.labels
                    if lab.delta == tuple(d) and fam1.beta[lab].delta == tuple(d2)]
            if len(hits) != 1:
                raise InternalError(f"{len(hits)} labels at {d} map into {d2} under beta")
            lab = hits[0]
            if fam2.beta[lab] == fam1.beta[lab]:
                raise InternalError(f"beta1 and beta2 agree on the witness {lab}")
            return WalkComparison(False, lab, fam1.beta[lab], fam2.beta[lab],
                                  (tuple(d), tuple(d2)))
    raise InternalError("no edge separates the walks")


def family_table(fam: DiagramFamily, start: Label | None = None) -> list[dict]:
    """Rows in label order with beta subscripts, as in a printed table."""
    index = fam.beta_power_index(start) if fam.is_transitive else None
    rows = []
    for label in fam.labels:
        ext = fam.entries[label]
        rows.append({
            "label": label,
            "socle_template": fam.socle_templates[label],
            "cosocle_template": fam.cosocle_template(label),
            "socle": ext.socle,
            "cosocle": ext.cosocle,
            "n": None if index is None else index[label],
            "cosocle_n": None if index is None else index[fam.matching[label]],
            "q_type": fam.q_index[label],
        })
    return rows


def render_table(fam: DiagramFamily) -> str:
    lines = []
    for row in family_table(fam):
        n = "" if row["n"] is None else f"_{row['n']}"
        cn = "" if row["cosocle_n"] is None else f"_{row['cosocle_n']}"
        lab = row["label"]
        lines.append(
            f"(({lab.delta[0]},{lab.delta[1]}),{format_J(lab.J)})  "
            f"{row['socle_template']}{n} --- {row['cosocle_template']}{cn}  "
            f"[{row['socle']} --- {row['cosocle']}]"
        )
    return "\n".join(lines) + "\n"


def family_document(fam: DiagramFamily) -> dict:
    """Self-contained JSON document: parameters, walk and the entry list."""
    pr = fam.params
    return {
        "params": {"p": pr.p, "e": pr.e, "m": pr.m, "r0": pr.r0, "r1": pr.r1},
        "walk": None if fam.walk is None else format_walk(fam.walk),
        "variant": fam.variant,
        "entries": fam.to_json(),
    }


def family_from_document(doc: dict) -> DiagramFamily:
    params = GaloisParams(**doc["params"])
    walk = None if doc["walk"] is None else parse_walk(doc["walk"], params.e)
    entries, qidx, beta, matching = {}, {}, {}, {}
    for row in doc["entries"]:
        lab = label_from_json(row)
        entries[lab] = ExtensionClass.from_json(row, params.p)
        qidx[lab] = row["q_type"]
        beta[lab] = label_from_json(row["beta_image"])
        matching[lab] = label_from_json(row["matched_with"])
    if set(entries) != set(params.labels):
        raise ValueError("family document does not cover every label")
    templates = template_map(params)
    return DiagramFamily(params, walk, entries, qidx, templates, matching, beta, doc["variant"])
