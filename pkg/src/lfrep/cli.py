"""Command-line entry point.

Every command prints one JSON document (DOT text for ``export dot``) on
standard output.  Exit codes: 0 success, 1 a verification found violations,
2 bad input; input errors name the JSON path of the offending field.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager

from . import io
from .chains import chain_explore, repeated_classes
from .dot import export_dot
from .homs import hom_system, is_indecomposable
from .inventory import component_inventory
from .knitting import knit_preinjective, knit_preprojective
from .oracle import build_catalog, oracle_ar_quiver
from .quiver import (
    InvalidPresentation,
    QuiverStructureError,
    classify_quiver,
    make_walk,
    require_valid,
    resolve_vertex,
    validate_presentation,
)
from .rep import injective_at, projective_at, simple_at, walk_rep
from .status import is_in_rrep, presentation_status
from .verify import fixture_suite, oracle_suite
from .wings import Bounds, Interval, quasi_wing


class UsageError(Exception):
    pass


@contextmanager
def _input_errors():
    """Report library ``ValueError``s as input errors at the document root."""
    try:
        yield
    except io.InputError:
        raise
    except ValueError as e:
        raise io.InputError("$", str(e)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _vertex(qp, text: str):
    try:
        v = resolve_vertex(qp, text)
    except KeyError:
        raise io.InputError("$", f"unknown vertex {text!r}") from None
    if not qp.has_vertex(v):
        raise io.InputError("$", f"unknown vertex {text!r}")
    return v


def _quiver(path: str, *, valid: bool = True):
    qp = io.load_quiver(path)
    if valid:
        try:
            require_valid(qp)
        except InvalidPresentation as e:
            raise io.InputError("$", str(e)) from None
    return qp


def _knit(args):
    qp = _quiver(args.quiver)
    fn = knit_preinjective if args.preinjective else knit_preprojective
    if not qp.tails:
        n = len(qp.core.vertices)
        return fn(qp, args.depth if args.depth is not None else n * n + 1)
    if args.radius is None:
        raise io.InputError("$", "a quiver with tails needs --radius R")
    return fn(qp, args.depth if args.depth is not None else 3, args.radius)


def _make_rep(args):
    qp = _quiver(args.quiver)
    if args.make in ("proj", "inj", "simple"):
        if args.at is None:
            raise io.InputError("$", f"--make {args.make} needs --at VERTEX")
        v = _vertex(qp, args.at)
        return {"proj": projective_at, "inj": injective_at, "simple": simple_at}[args.make](qp, v)
    steps = [s for s in (args.steps or "").split(",") if s]
    try:
        w = make_walk(
            qp,
            steps,
            start=args.start,
            tail_in=args.tail_in,
            tail_out=args.tail_out,
        )
    except (QuiverStructureError, KeyError, ValueError) as e:
        raise io.InputError("$", f"bad walk: {e}") from None
    return walk_rep(qp, w)


def _wing(args):
    try:
        interval = Interval(args.lo, args.hi)
        bounds = Bounds(*args.window) if args.window else None
        return quasi_wing(interval, bounds)
    except ValueError as e:
        raise io.InputError("$", str(e)) from None


def _chain(args):
    qp = _quiver(args.quiver)
    seed = io.load_rep(qp, args.seed)
    with _input_errors():
        return chain_explore(qp, seed, args.steps, radius=args.radius)


def cmd_validate(args) -> int:
    qp = _quiver(args.quiver, valid=False)
    report = validate_presentation(qp)
    print(io.dumps(report.to_json()))
    return 0 if report.valid else 1


def cmd_classify(args) -> int:
    qp = _quiver(args.quiver)
    with _input_errors():
        report = classify_quiver(qp)
    print(io.dumps(report.to_json()))
    return 0


def cmd_inventory(args) -> int:
    qp = _quiver(args.quiver)
    with _input_errors():
        inv = component_inventory(qp)
    print(io.dumps(inv.to_json()))
    return 0


def cmd_knit(args) -> int:
    with _input_errors():
        comp = _knit(args)
    print(io.dumps(comp.to_json()))
    return 0


def cmd_rep(args) -> int:
    print(io.dumps(io.rep_to_json(_make_rep(args))))
    return 0


def cmd_hom(args) -> int:
    qp = _quiver(args.quiver)
    m, n = io.load_rep(qp, args.M), io.load_rep(qp, args.N)
    space = hom_system(m, n)
    print(
        io.dumps(
            {
                "dim": space.dim,
                "window_depths": list(space.source.depths),
                "basis": [io.morphism_to_json(f) for f in space.basis],
            }
        )
    )
    return 0


def cmd_status(args) -> int:
    qp = _quiver(args.quiver)
    m = io.load_rep(qp, args.M)
    payload = presentation_status(m).to_json()
    payload.update(
        {
            "rrep": is_in_rrep(m),
            "indecomposable": is_indecomposable(m),
            "finite_dimensional": m.is_finite_dimensional,
        }
    )
    print(io.dumps(payload))
    return 0


def cmd_chain(args) -> int:
    chain = _chain(args)
    payload = chain.to_json()
    payload["repeated_classes"] = [list(p) for p in repeated_classes(chain.members)]
    print(io.dumps(payload))
    return 0


def cmd_wing(args) -> int:
    frag = _wing(args)
    print(io.dumps({"vertices": [list(v) for v in frag.vertices], "arrows": [[list(u), list(w)] for u, w in frag.arrows]}))
    return 0


def cmd_verify(args) -> int:
    if args.suite == "oracle":
        if args.n is None:
            raise UsageError("verify oracle needs --n N")
        if not 1 <= args.n <= 12:
            raise io.InputError("$", "n must lie between 1 and 12")
        res = oracle_suite(args.n, sequences=not args.no_sequences)
    else:
        res = fixture_suite()
    print(io.dumps(res.to_json()))
    return 0 if res.ok else 1


def cmd_export(args) -> int:
    if args.what == "knit":
        obj = _knit(args)
    elif args.what == "wing":
        obj = _wing(args)
    elif args.what == "chain":
        obj = _chain(args)
    else:
        qp = _quiver(args.quiver)
        try:
            obj = oracle_ar_quiver(build_catalog(qp), sequences=False)
        except ValueError as e:
            raise io.InputError("$", str(e)) from None
    sys.stdout.write(export_dot(obj))
    return 0


def _knit_args(p):
    p.add_argument("quiver")
    p.add_argument("--depth", type=int)
    p.add_argument("--radius", type=int)
    p.add_argument("--preinjective", action="store_true")


def _wing_args(p):
    p.add_argument("--lo", type=int, help="left end of the interval (omit for unbounded)")
    p.add_argument("--hi", type=int, help="right end of the interval (omit for unbounded)")
    p.add_argument("--window", type=int, nargs=3, metavar=("I_MIN", "I_MAX", "LEVELS"))


def _chain_args(p):
    p.add_argument("quiver")
    p.add_argument("seed", help="representation JSON")
    p.add_argument("--steps", type=int, default=4)
    p.add_argument("--radius", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lfrep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, fn in (("validate", cmd_validate), ("classify", cmd_classify), ("inventory", cmd_inventory)):
        p = sub.add_parser(name)
        p.add_argument("quiver")
        p.set_defaults(func=fn)

    p = sub.add_parser("knit", help="knit the preprojective (or preinjective) component")
    _knit_args(p)
    p.set_defaults(func=cmd_knit)

    p = sub.add_parser("rep", help="build a representation")
    p.add_argument("quiver")
    p.add_argument("--make", required=True, choices=["proj", "inj", "simple", "walk"])
    p.add_argument("--at", help="vertex for proj/inj/simple, e.g. x1 or @0:3")
    p.add_argument("--start", help="start vertex of a walk")
    p.add_argument("--steps", help="comma-separated walk steps, e.g. a,b^-1,@0:2")
    p.add_argument("--tail-in", type=int, help="tail the walk arrives from at infinity")
    p.add_argument("--tail-out", type=int, help="tail the walk leaves along to infinity")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("hom")
    p.add_argument("quiver")
    p.add_argument("M")
    p.add_argument("N")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("status")
    p.add_argument("quiver")
    p.add_argument("M")
    p.set_defaults(func=cmd_status)

    p = sub.add_parser("chain", help="grow a linear chain of irreducible maps")
    _chain_args(p)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("wing", help="materialize a quasi-wing")
    _wing_args(p)
    p.set_defaults(func=cmd_wing)

    p = sub.add_parser("verify")
    p.add_argument("suite", choices=["oracle", "fixtures"])
    p.add_argument("--n", type=int)
    p.add_argument("--no-sequences", action="store_true", help="skip almost split sequences")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="DOT export")
    p.add_argument("format", choices=["dot"])
    what = p.add_subparsers(dest="what", required=True, parser_class=_Parser)
    _knit_args(what.add_parser("knit"))
    _wing_args(what.add_parser("wing"))
    _chain_args(what.add_parser("chain"))
    what.add_parser("oracle").add_argument("quiver")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except io.InputError as e:
        print(f"input error at {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
