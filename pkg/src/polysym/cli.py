"""Command-line entry point: ``polysym <subcommand> [input.json]``.

Polynomials are read as ``{"coeffs": [...]}`` (ascending powers, each entry a
number or an ``[re, im]`` pair) from a file or standard input.  Reports are
JSON with a top-level ``"schema": 1``; derived floats carry 12 significant
digits while emitted polynomials keep full precision so they re-parse exactly.

Exit codes: 0 success, 1 usage or input error, 2 numerical non-convergence,
3 soundness incident in the criteria battery.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import bethe, catalog, criteria, mahler, mobius, roots, symmetry
from .polycore import Polynomial, transform

SCHEMA = 1
EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_INCIDENT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Exact(dict):
    """A mapping whose floats are emitted at full precision."""


def _poly(p: Polynomial) -> _Exact:
    return _Exact(p.to_dict(compact=True))


def _fmt(x, exact: bool = False):
    if isinstance(x, _Exact):
        return {k: _fmt(v, True) for k, v in x.items()}
    if isinstance(x, dict):
        return {k: _fmt(v, exact) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_fmt(v, exact) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, complex):
        return [_fmt(x.real, exact), _fmt(x.imag, exact)]
    if isinstance(x, float):
        if not math.isfinite(x):
            return None
        return x if exact else float(f"{x:.12g}")
    conv = criteria._jsonable(x)
    if conv is x:
        raise TypeError(f"cannot serialize {type(x).__name__}")
    return _fmt(conv, exact)


def dumps(report: dict) -> str:
    body = {"schema": SCHEMA}
    body.update(report)
    return json.dumps(_fmt(body), allow_nan=False)


def read_polynomial(source: str | None) -> Polynomial:
    if source is None or source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {source}: {e.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(
            f"malformed JSON at line {e.lineno} column {e.colno} (char {e.pos}): {e.msg}"
        ) from None
    try:
        return Polynomial.from_dict(data)
    except ValueError as e:
        raise UsageError(f"invalid polynomial: {e}") from None


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([f"{x:.12g}" if isinstance(x, float) else x for x in r])
    return buf.getvalue().rstrip("\n")


# -- subcommands ----------------------------------------------------------------


def cmd_classify(args, p):
    rep = symmetry.classify(p, args.tol)
    return EXIT_OK, dumps({"degree": p.degree, **rep.to_dict()})


def cmd_transform(args, p):
    return EXIT_OK, dumps({"kind": args.kind, "poly": _poly(transform(p, args.kind))})


def cmd_mobius(args, p):
    res = mobius.transform_Q(p) if args.direction == "Q" else mobius.transform_T(p)
    return EXIT_OK, dumps(
        {
            "direction": res.direction,
            "degree_drop": res.degree_drop,
            "poly": _poly(res.poly),
            "root_mapping_error": mobius.root_mapping_check(p, res),
        }
    )


def cmd_roots(args, p):
    rs = roots.find_roots(p, seed=args.seed)
    if args.format == "csv":
        return EXIT_OK, _csv(
            ("re", "im", "multiplicity"), [(r.value.real, r.value.imag, r.multiplicity) for r in rs.roots]
        )
    loc = roots.locate(rs, args.loc_tol)
    return EXIT_OK, dumps({**rs.to_dict(), "location": loc.to_dict()})


def cmd_count(args, p):
    if args.method == "oracle":
        loc = roots.locate(roots.find_roots(p, seed=args.seed), args.loc_tol)
        return EXIT_OK, dumps(
            {"method": "oracle", "inside": loc.inside, "on_circle": loc.on_circle, "outside": loc.outside}
        )
    seq, v = criteria.marden_jury(p)
    out = {"method": "marden-jury", "conclusion": v.label}
    if v.conclusion == "ExactInside":
        out.update(inside=v.count, on_circle=0, outside=p.degree - v.count)
    elif v.conclusion == "OnOrSymmetric":
        out.update(inside=None, symmetric_or_on=v.count, inside_among_rest=v.witness["inside_among_rest"])
    else:
        out.update(inside=None)
    out["schur_products"] = list(seq.schur_products)
    return EXIT_OK, dumps(out)


def cmd_criteria(args, p):
    names = None if args.all or not args.name else tuple(args.name)
    rep = criteria.battery(p, args.tol, args.loc_tol, names)
    code = EXIT_INCIDENT if rep.incidents else EXIT_OK
    return code, dumps({**rep.to_dict(), "fired": rep.fired})


def cmd_mahler(args, p):
    return EXIT_OK, dumps(mahler.mahler_measure(p).to_dict())


def cmd_salem_search(args, p):
    constraint = "psr" if args.psr else "non-sr" if args.non_sr else "none"
    res = mahler.family_search(args.degree, args.height, constraint, not args.non_monic, chunks=args.chunks)
    return EXIT_OK, dumps(res.to_dict())


def _parse_sweep(spec: str):
    parts = spec.split(":")
    if len(parts) != 5:
        raise UsageError('--sweep expects "Lmin:Lmax:dmin:dmax:step"')
    try:
        lmin, lmax = int(parts[0]), int(parts[1])
        dmin, dmax, step = (float(x) for x in parts[2:])
    except ValueError:
        raise UsageError(f"cannot parse --sweep {spec!r}") from None
    if step <= 0 or dmax < dmin or lmax < lmin:
        raise UsageError("--sweep needs Lmin <= Lmax, dmin <= dmax and step > 0")
    return range(lmin, lmax + 1), bethe.delta_grid(dmin, dmax, step)


def cmd_bethe(args, p):
    if args.sweep:
        Ls, deltas = _parse_sweep(args.sweep)
        rows = bethe.phase_sweep(Ls, deltas)
        if args.format == "csv":
            return EXIT_OK, _csv(
                ("L", "a", "delta", "predicted", "observed", "on_circle", "off_circle", "agrees"),
                [
                    (v.L, v.a, v.delta, v.predicted, v.observed, v.on_circle, v.off_circle,
                     "" if v.agrees is None else str(v.agrees).lower())
                    for v in rows
                ],
            )
        return EXIT_OK, dumps({"verdicts": [v.to_dict() for v in rows]})
    if args.L is None or args.a is None or args.delta is None:
        raise UsageError("bethe needs --L, --a and --delta, or --sweep")
    inst = bethe.build_instance(args.L, args.a, args.delta)
    out = inst.to_dict()
    out["poly"] = _poly(inst.poly)
    if not inst.degenerate:
        out["phase"] = bethe.phase_check(inst, args.loc_tol).to_dict()
        sol = bethe.solutions(inst)
        out["residual1"], out["residual2"] = sol.residual1, sol.residual2
        out["product_residual"] = sol.product_residual
    return EXIT_OK, dumps(out)


def cmd_catalog(args, p):
    spec = catalog.FamilySpec(args.family, args.n, args.knot, args.seed)
    q = catalog.generate(spec)
    return EXIT_OK, dumps({"family": args.family, "poly": _poly(q)})


def cmd_chebyshev(args, p):
    red = symmetry.psr_to_q(p, args.tol)
    return EXIT_OK, dumps(
        {
            "m": red.m,
            "q": _poly(red.q),
            "chebyshev": list(red.cheb_coeffs),
            "max_residual": red.max_residual,
        }
    )


COMMANDS = {
    "classify": (cmd_classify, True),
    "transform": (cmd_transform, True),
    "mobius": (cmd_mobius, True),
    "roots": (cmd_roots, True),
    "count": (cmd_count, True),
    "criteria": (cmd_criteria, True),
    "mahler": (cmd_mahler, True),
    "salem-search": (cmd_salem_search, False),
    "bethe": (cmd_bethe, False),
    "catalog": (cmd_catalog, False),
    "chebyshev": (cmd_chebyshev, True),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=symmetry.DEFAULT_TOL, help="classification tolerance")
    common.add_argument("--loc-tol", type=float, default=roots.LOCATION_TOL, help="on-circle tolerance")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=0)

    with_input = argparse.ArgumentParser(add_help=False, parents=[common])
    with_input.add_argument("input", nargs="?", help="JSON file; standard input when omitted or '-'")

    ap = _Parser(prog="polysym", description="Symmetric polynomials and their zeros.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("classify", parents=[with_input], help="SC/SR/SI/PSR/NSR flags and rotations")
    s = sub.add_parser("transform", parents=[with_input], help="conjugate, reciprocal or inversive polynomial")
    s.add_argument("--kind", choices=("conjugate", "reciprocal", "inversive"), required=True)
    s = sub.add_parser("mobius", parents=[with_input], help="Cayley-transformed polynomial Q or T")
    s.add_argument("--direction", choices=("Q", "T"), default="Q")
    sub.add_parser("roots", parents=[with_input], help="roots with multiplicities")
    s = sub.add_parser("count", parents=[with_input], help="zeros inside, on and outside the circle")
    s.add_argument("--method", choices=("oracle", "marden-jury"), default="oracle")
    s = sub.add_parser("criteria", parents=[with_input], help="zero-location criteria refereed by the oracle")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--name", action="append", choices=criteria.CRITERIA)
    g.add_argument("--all", action="store_true")
    sub.add_parser("mahler", parents=[with_input], help="Mahler measure of a monic integer polynomial")
    s = sub.add_parser("salem-search", parents=[common], help="exhaustive small-measure search")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--height", type=int, default=1)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--psr", action="store_true")
    g.add_argument("--non-sr", action="store_true")
    s.add_argument("--non-monic", action="store_true")
    s.add_argument("--chunks", type=int, default=1)
    s = sub.add_parser("bethe", parents=[common], help="two-magnon Bethe polynomial p_a")
    s.add_argument("--L", type=int)
    s.add_argument("--a", type=int)
    s.add_argument("--delta", type=float)
    s.add_argument("--sweep", help='phase map over "Lmin:Lmax:dmin:dmax:step"')
    s = sub.add_parser("catalog", parents=[common], help="named polynomial families")
    s.add_argument("--family", choices=catalog.FAMILIES, required=True)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--knot", default="")
    sub.add_parser("chebyshev", parents=[with_input], help="q(z + 1/z) = p(z)/z^m for even PSR p")
    return ap


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Execute one invocation; returns (exit code, stdout text)."""
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        fn, needs_input = COMMANDS[args.command]
        p = read_polynomial(args.input) if needs_input else None
        return fn(args, p)
    except UsageError as e:
        return EXIT_USAGE, f"error: {e}"
    except roots.RootFindingError as e:
        return EXIT_NUMERIC, f"error: {e}"
    except ArithmeticError as e:
        return EXIT_NUMERIC, f"error: {e}"
    except ValueError as e:
        return EXIT_USAGE, f"error: {e}"


def main(argv: list[str] | None = None) -> int:
    code, text = run(argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_INCIDENT) else sys.stderr
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
