"""Command-line entry point: ``lieposet <subcommand> ...``.

Exit status: 0 on success, 1 when a check fails, 2 on usage errors
(including fields whose characteristic is too small for the poset).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb

from .algebra import ADJOINT, TRIVIAL, AlgebraError, build_algebra, parse_label
from .complex import ComplexError, cohomology, complex_for_acting
from .deform import (
    DeformError,
    deformation_from_class,
    infinitesimal_of,
    jacobi_check,
    plain_table_json,
)
from .fields import FieldError, parse_field
from .nerve import SimplicialCochain, build_nerve, simplicial_cohomology
from .poset import Poset, PosetError, parse_family
from .verify import full_degrees, verify_algebra

THREADS_ENV = "LIEPOSET_THREADS"


class UsageError(Exception):
    pass


def thread_count() -> int:
    """Read the thread-count variable; all work currently runs on one thread."""
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


# -- argument parsing ------------------------------------------------------


def _source_args(p: argparse.ArgumentParser, field: bool = True):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--poset", metavar="FILE", help='poset JSON file {"n": N, "relations": [[i, j], ...]}')
    src.add_argument("--family", metavar="NAME:PARAM", help="chain:N, antichain:N or sphere:n")
    if field:
        p.add_argument("--field", default="q", help="q (default) or fp:<prime>")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lieposet", description="Cohomology and deformations of Lie poset algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poset", help="describe a poset")
    _source_args(p, field=False)

    p = sub.add_parser("nerve", help="simplicial cohomology of the nerve")
    _source_args(p)
    p.add_argument("--augmented", action="store_true", help="add the (-1)-simplex (reduced cohomology)")

    p = sub.add_parser("algebra", help="basis, brackets, weights and center of g(P)")
    _source_args(p)

    p = sub.add_parser("cohomology", help="Chevalley-Eilenberg cohomology")
    _source_args(p)
    p.add_argument("--module", choices=[TRIVIAL, ADJOINT], default=ADJOINT)
    p.add_argument("--acting", choices=["g", "k"], default="g")
    p.add_argument("--weight-zero", action="store_true", help="restrict to the weight-zero subcomplex")
    p.add_argument("--max-degree", type=int, default=None, metavar="N")

    p = sub.add_parser("verify", help="run the full check suite on one poset")
    _source_args(p)
    p.add_argument("--max-degree", type=int, default=None, metavar="N")
    p.add_argument("--timings", action="store_true", help="include wall-clock times (output no longer reproducible)")

    p = sub.add_parser("deform", help="build a deformation family and certify Jacobi")
    _source_args(p)
    p.add_argument("--type", required=True, choices=["20", "11", "02"], dest="dtype")
    p.add_argument("--pair", metavar="I,J", help="type 20: eta indices (default 1,2)")
    p.add_argument("--central", metavar="LABEL:V,...", help="type 20: central element, e.g. eta1:1,eta2:2")
    p.add_argument("--xi", metavar="V1,V2,...", help="type 11: coordinates of xi in the dual basis of h")
    p.add_argument("--cochain", metavar="S:V;...", help="types 11/02: nerve cochain, e.g. '1,3:1;2,4:-1'")
    p.add_argument("--specialize", metavar="t=VALUE", help="emit the plain bracket table at t = VALUE")
    return parser


def _poset(args) -> tuple[Poset, str]:
    if args.poset:
        try:
            return Poset.load(args.poset), args.poset
        except OSError as exc:
            raise UsageError(f"cannot read {args.poset}: {exc.strerror}") from None
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad poset file {args.poset}: {exc}") from None
    return parse_family(args.family), args.family


def _check_degree(n):
    if n is not None and n < 0:
        raise UsageError("--max-degree must be nonnegative")


def _emit(out, data, as_json: bool, text: str):
    if as_json:
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _table(header, rows) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


# -- subcommands -------------------------------------------------------------


def cmd_poset(args, out) -> int:
    P, name = _poset(args)
    data = P.to_json()
    text = "\n".join([
        f"poset {name}: N={P.n}",
        "relations: " + " ".join(f"{i}<{j}" for i, j in P.relations),
        "covers:    " + " ".join(f"{i}<{j}" for i, j in P.covers()),
        f"height:    {P.height()}",
        "components: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in P.comparability_components()),
    ])
    _emit(out, data, args.json, text)
    return 0


def cmd_nerve(args, out) -> int:
    P, name = _poset(args)
    field = parse_field(args.field)
    cx = build_nerve(P, args.augmented)
    res = simplicial_cohomology(cx, field, representatives=False)
    rows = [(r.degree, r.n_simplices, r.dim_ker, r.dim_im, r.dim_h) for r in res.rows]
    data = {
        "poset": name,
        "field": str(field),
        "augmented": args.augmented,
        "degrees": [dict(zip(("degree", "simplices", "dim_ker", "dim_im", "dim_h"), r)) for r in rows],
        "euler_characteristic": res.euler_characteristic(),
    }
    text = _table(["m", "simplices", "ker", "im", "H"], rows)
    text = f"nerve of {name}{' (augmented)' if args.augmented else ''} over {field}\n{text}\neuler characteristic {data['euler_characteristic']}"
    _emit(out, data, args.json, text)
    return 0


def cmd_algebra(args, out) -> int:
    P, name = _poset(args)
    alg = build_algebra(P, parse_field(args.field))
    brackets = []
    for a in range(alg.dim):
        for b in range(a + 1, alg.dim):
            v = alg.basis_bracket(a, b)
            if v:
                brackets.append((str(alg.basis[a]), str(alg.basis[b]), alg.format_element(alg.element(v))))
    centre = [alg.format_element(c) for c in alg.center_elements()]
    data = {
        "poset": name,
        "field": str(alg.field),
        "dim": alg.dim,
        "basis": [str(b) for b in alg.basis],
        "weights": {str(b): list(w) for b, w in zip(alg.basis, alg.weights) if not b.is_eta},
        "center": centre,
        "brackets": [{"x": x, "y": y, "value": v} for x, y, v in brackets],
    }
    lines = [f"g({name}) over {alg.field}: dim {alg.dim}", "basis: " + " ".join(data["basis"]), "weights:"]
    lines += [f"  {b}: {tuple(w)}" for b, w in data["weights"].items()]
    lines.append("center: " + ("; ".join(centre) if centre else "0"))
    lines.append("brackets:")
    lines += [f"  [{x}, {y}] = {v}" for x, y, v in brackets]
    _emit(out, data, args.json, "\n".join(lines))
    return 0


def cmd_cohomology(args, out) -> int:
    _check_degree(args.max_degree)
    P, name = _poset(args)
    alg = build_algebra(P, parse_field(args.field))
    cx = complex_for_acting(alg, args.module, args.acting, args.weight_zero)
    if args.acting == "g":
        degs = full_degrees(alg, args.max_degree)
    else:
        top = cx.top_degree if args.max_degree is None else min(args.max_degree, cx.top_degree)
        degs = range(0, top + 1)
    res = cohomology(cx, degs)
    dims = res.dims()
    nh = alg.n_h
    checks = []
    if not args.weight_zero:
        wz = cohomology(complex_for_acting(alg, args.module, args.acting, True), degs).dims()
        checks.append(("viviani", wz == dims))
    nerve = simplicial_cohomology(build_nerve(P, True), alg.field, representatives=False).dims()
    if args.acting == "g" and args.module == TRIVIAL:
        checks.append(("binomial", all(dims[n] == comb(nh, n) for n in degs)))
    elif args.acting == "g":
        want = {n: sum(comb(nh, r) * nerve.get(n - r, 0) for r in range(0, min(n, nh) + 1)) for n in degs}
        checks.append(("nerve-factorization", want == dims))
    elif args.module == ADJOINT and args.weight_zero:
        checks.append(("nerve", all(dims[n] == nerve.get(n, 0) for n in degs)))
    elif args.module == TRIVIAL and args.weight_zero:
        checks.append(("ideal-trivial", all(dims[n] == (1 if n == 0 else 0) for n in degs)))
    spurious = sum(len(cx.spurious_keys(n)) for n in degs) if alg.field.p else 0
    rows = [(r.degree, r.dim_c, r.rank_out, r.dim_h) for r in res.rows]
    data = {
        "poset": name,
        "field": str(alg.field),
        "module": args.module,
        "acting": args.acting,
        "weight_zero": args.weight_zero,
        "degrees": [dict(zip(("degree", "dim_c", "rank_delta", "dim_h"), r)) for r in rows],
        "checks": {k: "pass" if v else "fail" for k, v in checks},
        "spurious_weight_keys": spurious,
    }
    head = f"H*({args.acting}({name}), {args.module}){' weight 0' if args.weight_zero else ''} over {alg.field}"
    text = [head, _table(["n", "dim C", "rank d", "dim H"], rows)]
    text += [f"{'PASS' if v else 'FAIL'}  {k}" for k, v in checks]
    if spurious:
        text.append(f"warning: {spurious} basis cochains have weight zero only modulo {alg.field.p}")
    _emit(out, data, args.json, "\n".join(text))
    return 0 if all(v for _, v in checks) else 1


def cmd_verify(args, out) -> int:
    _check_degree(args.max_degree)
    P, name = _poset(args)
    alg = build_algebra(P, parse_field(args.field))
    report = verify_algebra(alg, args.max_degree, name)
    _emit(out, report.to_json(args.timings), args.json, report.format_table(args.timings))
    return 0 if report.ok else 1


def _parse_cochain(spec: str, dim: int, field) -> SimplicialCochain:
    values = {}
    for part in filter(None, (s.strip() for s in spec.split(";"))):
        simplex, _, v = part.partition(":")
        try:
            s = tuple(int(x) for x in simplex.split(","))
            values[s] = field.parse(v or "1")
        except ValueError:
            raise UsageError(f"bad cochain entry {part!r}") from None
    try:
        return SimplicialCochain(dim, values, field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_deform(args, out) -> int:
    P, name = _poset(args)
    alg = build_algebra(P, parse_field(args.field))
    field = alg.field
    kw = {}
    try:
        if args.pair:
            kw["pair"] = tuple(int(x) for x in args.pair.split(","))
        if args.central:
            c = {}
            for part in args.central.split(","):
                lab, _, v = part.partition(":")
                c[parse_label(lab)] = field.parse(v or "1")
            kw["central"] = c
        if args.xi:
            kw["xi"] = {k: field.parse(v) for k, v in enumerate(args.xi.split(","))}
            if len(kw["xi"]) > alg.n_h:
                raise UsageError(f"xi has more than {alg.n_h} coordinates")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.cochain:
        kw["cochain"] = _parse_cochain(args.cochain, 1 if args.dtype == "11" else 2, field)
    d = deformation_from_class(alg, args.dtype, **kw)
    cert = jacobi_check(d)
    if args.specialize:
        var, _, value = args.specialize.partition("=")
        if var.strip() != "t" or not value:
            raise UsageError("--specialize expects t=VALUE")
        try:
            t = field.parse(value)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad value {value!r}") from None
        data = plain_table_json(d, t)
        data["jacobi"] = cert.to_json()
        out.write(json.dumps(data, indent=2) + "\n")
        return 0 if cert else 1
    inf = infinitesimal_of(d)
    data = {"poset": name, "type": args.dtype, "table": d.to_json(), "jacobi": cert.to_json(), "infinitesimal": inf.to_json()}
    out.write(json.dumps(data, indent=2) + "\n")
    return 0 if cert else 1


COMMANDS = {
    "poset": cmd_poset,
    "nerve": cmd_nerve,
    "algebra": cmd_algebra,
    "cohomology": cmd_cohomology,
    "verify": cmd_verify,
    "deform": cmd_deform,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        thread_count()
        return COMMANDS[args.command](args, out)
    except (UsageError, FieldError, PosetError, AlgebraError, ComplexError, DeformError) as exc:
        err.write(f"lieposet: error: {exc}\n")
        if isinstance(exc, FieldError) and "characteristic" in str(exc):
            err.write("lieposet: the results hold only in characteristic 0 or greater than N\n")
        return 2


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
