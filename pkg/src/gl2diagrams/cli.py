"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 falsification
(a matching, uniqueness or divisibility claim failed on the input).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import FalsificationError, Gl2DiagramsError, UsageError
from .family import (
    DiagramFamily, all_adjacent_variant, build_family, cycle_decomposition,
    family_document, render_table,
)
from .galois import GaloisParams, check_generic, format_J, weight_set
from .lattice import count_walks_frontier, enumerate_walks, format_walk, parse_walk, snake_walk, walk_to_dot
from .phigamma import exponent_polynomial, level_comparison_report
from .verify import run_suite

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_FALSIFIED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class RunConfig:
    p: int
    e: int
    m: int
    r0: int
    r1: int
    walk: str
    fmt: str = "table"

    @property
    def params(self) -> GaloisParams:
        try:
            return GaloisParams(self.p, self.e, self.m, self.r0, self.r1)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc

    def walks(self):
        e = self.e
        if self.walk == "snake":
            return [snake_walk(e)]
        if self.walk == "all":
            return enumerate_walks(e)
        return [parse_walk(self.walk, e)]


def _add_instance(sp, walk=True):
    sp.add_argument("--p", type=int, default=5)
    sp.add_argument("--e", type=int, default=2)
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--r0", type=int, default=3)
    sp.add_argument("--r1", type=int, default=2)
    if walk:
        sp.add_argument("--walk", default="snake",
                        help='"d0,d1;d0,d1;...", "snake" or "all"')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gl2diagrams", description="Diagram families for GL2 over ramified fields")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    sp = sub.add_parser("weights", help="labelled weight set")
    _add_instance(sp, walk=False)
    sp.add_argument("--format", choices=("table", "json"), default="table")

    sp = sub.add_parser("walks", help="Hamiltonian walks of the e x e lattice")
    sp.add_argument("--e", type=int, default=2)
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--allow-large", action="store_true")

    sp = sub.add_parser("family", help="diagram family table")
    _add_instance(sp)
    sp.add_argument("--variant", choices=("walk", "all-adjacent"), default="walk")
    sp.add_argument("--format", choices=("table", "json"), default="table")

    sp = sub.add_parser("beta", help="cycle decomposition of beta")
    _add_instance(sp)
    sp.add_argument("--variant", choices=("walk", "all-adjacent"), default="walk")

    sp = sub.add_parser("phigamma", help="exponent A, descriptor E and level")
    _add_instance(sp)
    sp.add_argument("--polynomial", action="store_true", help="also print A as a polynomial in p")

    sp = sub.add_parser("verify", help="run verification suites")
    _add_instance(sp)
    sp.set_defaults(walk="0,0;1,0;1,1;0,1")
    sp.add_argument("--suite", choices=("example4", "lemmas", "walks", "phigamma", "all"), default="all")

    sp = sub.add_parser("export", help="DOT or JSON export")
    _add_instance(sp)
    sp.add_argument("--format", required=True, choices=("dot", "json"))
    sp.add_argument("--object", choices=("lattice", "beta", "family"), default=None,
                    help="default: lattice for dot, family for json")
    return parser


def _config(args) -> RunConfig:
    return RunConfig(args.p, args.e, args.m, args.r0, args.r1, getattr(args, "walk", "snake"),
                     getattr(args, "format", "table"))


def _families(cfg: RunConfig, variant: str = "walk") -> list[DiagramFamily]:
    params = cfg.params
    check_generic(params)
    if variant == "all-adjacent":
        return [all_adjacent_variant(params)]
    return [build_family(params, w) for w in cfg.walks()]


def _heading(fam: DiagramFamily) -> str:
    return f"# walk {format_walk(fam.walk)}" if fam.walk is not None else f"# variant {fam.variant}"


def _cmd_weights(args) -> tuple[int, str]:
    cfg = _config(args)
    params = cfg.params
    check_generic(params)
    rows = weight_set(params)
    if cfg.fmt == "json":
        return EXIT_OK, _dump([w.to_json() for w in rows])
    lines = [f"(({w.delta[0]},{w.delta[1]}),{format_J(w.J)}): {w.weight}    {w.template}" for w in rows]
    return EXIT_OK, "\n".join(lines) + "\n"


def _cmd_walks(args) -> tuple[int, str]:
    if args.count_only:
        return EXIT_OK, f"{count_walks_frontier(args.e)}\n"
    return EXIT_OK, "".join(format_walk(w) + "\n" for w in enumerate_walks(args.e, args.allow_large))


def _cmd_family(args) -> tuple[int, str]:
    cfg = _config(args)
    fams = _families(cfg, args.variant)
    if cfg.fmt == "json":
        return EXIT_OK, _dump([family_document(f) for f in fams])
    return EXIT_OK, "".join(f"{_heading(f)}\n{render_table(f)}" for f in fams)


def _cmd_beta(args) -> tuple[int, str]:
    out = []
    for fam in _families(_config(args), args.variant):
        cycles = cycle_decomposition(fam.beta, fam.labels)
        out.append(_heading(fam))
        out.append(f"cycle type {sorted((len(c) for c in cycles), reverse=True)}")
        for c in cycles:
            out.append(" -> ".join(str(lab) for lab in c))
    return EXIT_OK, "\n".join(out) + "\n"


def _cmd_phigamma(args) -> tuple[int, str]:
    cfg = _config(args)
    reports = []
    for fam in _families(cfg):
        rep = level_comparison_report(fam.params, fam)
        if args.polynomial:
            rep["A_polynomial"] = str(exponent_polynomial(fam))
        reports.append(rep)
    return EXIT_OK, _dump(reports)


def _cmd_verify(args) -> tuple[int, str]:
    cfg = _config(args)
    params = cfg.params
    check_generic(params)
    parse_walk(cfg.walk, params.e)  # validate early
    results = run_suite(args.suite, params, cfg.walk)
    text = "".join(r.line() + "\n" for r in results)
    if any(r.status == "falsified" for r in results):
        return EXIT_FALSIFIED, text
    if not all(r.passed for r in results):
        return EXIT_VERIFY, text
    return EXIT_OK, text


def _beta_dot(fam: DiagramFamily) -> str:
    lines = ["digraph beta {"]
    for lab in fam.labels:
        lines.append(f'  "{lab}" -> "{fam.beta[lab]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_export(args) -> tuple[int, str]:
    cfg = _config(args)
    obj = args.object or ("lattice" if args.format == "dot" else "family")
    if obj == "lattice":
        walks = cfg.walks()
        if args.format == "dot":
            return EXIT_OK, "".join(walk_to_dot(w) for w in walks)
        return EXIT_OK, _dump([[list(v) for v in w.vertices] for w in walks])
    fams = _families(cfg)
    if obj == "beta" and args.format == "dot":
        return EXIT_OK, "".join(_beta_dot(f) for f in fams)
    if obj == "beta":
        return EXIT_OK, _dump([{str(k): str(v) for k, v in f.beta.items()} for f in fams])
    if args.format == "dot":
        raise UsageError("a family has no DOT form; use --object lattice or beta")
    return EXIT_OK, _dump([family_document(f) for f in fams])


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


COMMANDS = {
    "weights": _cmd_weights, "walks": _cmd_walks, "family": _cmd_family, "beta": _cmd_beta,
    "phigamma": _cmd_phigamma, "verify": _cmd_verify, "export": _cmd_export,
}


def run_command(argv: list[str]) -> tuple[int, str]:
    """Run one invocation; returns (exit code, text for stdout or stderr)."""
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except FalsificationError as exc:
        return EXIT_FALSIFIED, f"falsified: {type(exc).__name__}: {exc}\n"
    except (UsageError, ValueError) as exc:
        return EXIT_USAGE, f"error: {exc}\n"
    except Gl2DiagramsError as exc:  # e.g. DivisionError
        return EXIT_USAGE, f"error: {type(exc).__name__}: {exc}\n"


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        build_parser().parse_args(argv)  # prints help, exits 0
    code, text = run_command(argv)
    (sys.stdout if code in (EXIT_OK, EXIT_VERIFY) else sys.stderr).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
