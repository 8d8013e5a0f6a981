"""Command-line interface.

Subcommands: build, radius, dump-operator, check, verify, search, oracle.
Complex arguments are file paths or ``-`` for standard input, in the
facet-list text format (``--compact`` additionally accepts digit-string
facets).  All numeric output uses 12 significant digits and every subcommand
is deterministic given its inputs and seed.

Exit codes: 0 success, 1 claim violation found (verify), 2 usage or input
error.  ``QSIMPLEX_THREADS`` sets the default worker count for verify and
search.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .complex_core import Complex, Cycle, format_complex, parse_complex
from .constructions import book, cocycle_complex, remark2_complex, wheel
from .errors import QsimplexError
from .operators import boundary, laplacians, q_down, q_up, signless_boundary
from .search import search_extremal, verify_extremal_classification, verify_upper_bound
from .spectral import dense_eigenvalues, q_signless
from .structure_checks import (
    classify_r_plus_3,
    contains_wheel,
    down_neighbor_bound_violations,
    neighbor_uniformity,
)

OPERATOR_CHOICES = ("boundary", "signless-boundary", "q-up", "q-down",
                    "l-up", "l-down", "l-full")


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _read_complex(source: str, compact: bool) -> Complex:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise QsimplexError(f"cannot read {source}: {exc}") from exc
    return parse_complex(text, compact=compact)


def _default_workers() -> int:
    raw = os.environ.get("QSIMPLEX_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _operator_for(k: Complex, kind: str, dim: int | None):
    if dim is None:
        if kind == "q-up":
            dim = k.r - 1
        elif kind.startswith("l-"):
            dim = 0
        else:
            dim = k.r
    if kind == "boundary":
        return boundary(k, dim)
    if kind == "signless-boundary":
        return signless_boundary(k, dim)
    if kind == "q-up":
        return q_up(k, dim)
    if kind == "q-down":
        return q_down(k, dim)
    trio = laplacians(k, dim)
    return {"l-up": trio.up, "l-down": trio.down, "l-full": trio.full}[kind]


def _cmd_build(args) -> int:
    if args.what == "book":
        k = book(_int(args.params, 0, "n"), _int(args.params, 1, "r"))
    elif args.what == "wheel":
        k = wheel(_int(args.params, 0, "n"), _int(args.params, 1, "r"))
    elif args.what == "cocycle":
        r = _int(args.params, 0, "r")
        rest = " ".join(args.params[1:])
        try:
            vertices = [int(t) for t in rest.split()]
        except ValueError as exc:
            raise QsimplexError(f"bad cycle vertices {rest!r}") from exc
        k = cocycle_complex(r, Cycle(vertices))
    elif args.what == "remark2":
        k = remark2_complex()
    else:  # pragma: no cover - argparse restricts choices
        raise QsimplexError(f"unknown construction {args.what!r}")
    sys.stdout.write(format_complex(k))
    return 0


def _int(params: list[str], idx: int, name: str) -> int:
    try:
        return int(params[idx])
    except (IndexError, ValueError) as exc:
        raise QsimplexError(f"missing or bad integer argument {name!r}") from exc


def _cmd_radius(args) -> int:
    k = _read_complex(args.complex, args.compact)
    res = q_signless(k, tol=args.tol)
    print(f"radius {_fmt(res.radius_estimate)}")
    print(f"lower {_fmt(res.lower_bound)}")
    print(f"upper {_fmt(res.upper_bound)}")
    print(f"iterations {res.iterations}")
    print(f"converged {'yes' if res.converged else 'no'}")
    print(f"components {len(res.component_radii)}")
    if args.perron:
        for f, v in zip(k.facets, res.perron_vector):
            print(" ".join(str(x) for x in f) + f" {_fmt(v)}")
    return 0


def _cmd_dump_operator(args) -> int:
    k = _read_complex(args.complex, args.compact)
    sys.stdout.write(_operator_for(k, args.kind, args.dim).dump())
    return 0


def _face_list(f) -> list[int]:
    return [int(v) for v in f]


def _cmd_check(args) -> int:
    k = _read_complex(args.complex, args.compact)
    selected = [name for name, on in (
        ("wheel", args.wheel),
        ("uniformity", args.uniformity),
        ("lemma-bound", args.lemma_bound),
        ("classify", args.classify),
    ) if on]
    if not selected:
        selected = ["wheel", "uniformity", "lemma-bound"]
        if k.n_vertices == k.r + 3:
            selected.append("classify")
    for name in selected:
        if name == "wheel":
            witness = contains_wheel(k)
            record = {
                "check": "wheel",
                "found": witness is not None,
                "apex": _face_list(witness.apex) if witness else None,
                "cycle": list(witness.cycle.vertices) if witness else None,
            }
        elif name == "uniformity":
            rep = neighbor_uniformity(k)
            record = {
                "check": "uniformity",
                "uniform": rep.is_uniform,
                "t": rep.t,
                "violations": [[_face_list(f), u, c] for f, u, c in rep.violations],
            }
        elif name == "lemma-bound":
            violations = down_neighbor_bound_violations(k)
            record = {
                "check": "lemma-bound",
                "count": len(violations),
                "violations": [[_face_list(f), u, c]
                               for f, u, c in violations[:100]],
            }
        else:
            cls = classify_r_plus_3(k)
            record = {
                "check": "classify",
                "kind": cls.kind,
                "cycle_length": cls.cycle_length,
            }
        print(json.dumps(record))
    return 0


def _cmd_oracle(args) -> int:
    k = _read_complex(args.complex, args.compact)
    for value in dense_eigenvalues(_operator_for(k, args.kind, args.dim)):
        print(_fmt(value))
    return 0


def _emit_report(report, out: str | None) -> int:
    text = report.render()
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if report.counterexamples else 0


def _cmd_verify(args) -> int:
    if args.classification:
        report = verify_extremal_classification(args.r, workers=args.workers)
    else:
        report = verify_upper_bound(
            args.n, args.r, mode=args.mode, samples=args.samples,
            seed=args.seed, prob=args.prob, workers=args.workers)
    return _emit_report(report, args.out)


def _cmd_search(args) -> int:
    report = search_extremal(
        args.n, args.r, mode=args.mode, samples=args.samples,
        seed=args.seed, prob=args.prob, workers=args.workers)
    return _emit_report(report, args.out)


def _add_complex_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("complex", nargs="?", default="-",
                   help="facet-list file, or - for stdin (default)")
    p.add_argument("--compact", action="store_true",
                   help="accept digit-string facets for single-digit vertices")


def _add_scan_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=False)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "random"),
                   default="exhaustive")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--prob", type=float, default=None)
    p.add_argument("--out", default=None, help="write the report to a file")
    p.add_argument("--workers", type=int, default=_default_workers())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsimplex",
        description="Signless Laplacian spectra and wheel-freeness of pure "
                    "simplicial complexes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit a named complex as facet-list text")
    p.add_argument("what", choices=("book", "wheel", "cocycle", "remark2"))
    p.add_argument("params", nargs="*")
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("radius",
                       help="certified signless Laplacian spectral radius")
    _add_complex_arg(p)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--perron", action="store_true",
                   help="also print the Perron vector as `facet value` lines")
    p.set_defaults(fn=_cmd_radius)

    p = sub.add_parser("dump-operator",
                       help="print an operator matrix in triplet form")
    _add_complex_arg(p)
    p.add_argument("--kind", choices=OPERATOR_CHOICES, required=True)
    p.add_argument("--dim", type=int, default=None)
    p.set_defaults(fn=_cmd_dump_operator)

    p = sub.add_parser("check", help="structural predicates as JSON records")
    _add_complex_arg(p)
    p.add_argument("--wheel", action="store_true")
    p.add_argument("--uniformity", action="store_true")
    p.add_argument("--lemma-bound", dest="lemma_bound", action="store_true")
    p.add_argument("--classify", action="store_true")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("oracle",
                       help="full spectrum via the dense eigensolver")
    _add_complex_arg(p)
    p.add_argument("--kind", choices=OPERATOR_CHOICES, default="q-down")
    p.add_argument("--dim", type=int, default=None)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("verify",
                       help="check the upper bound / equality claims")
    _add_scan_args(p)
    p.add_argument("--classification", action="store_true",
                   help="classify extremal complexes on r+3 vertices instead")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("search", help="extremal statistics without claims")
    _add_scan_args(p)
    p.set_defaults(fn=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("verify", "search"):
            classification = getattr(args, "classification", False)
            if not classification and args.n is None:
                raise QsimplexError("--n is required")
        return args.fn(args)
    except QsimplexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
