"""Command-line surface: argument parsing, file I/O, JSON and DOT
emission, and the selftest harness.

Exit codes: 0 on success, 1 when the mathematics rejects a well-formed
request (bad character, singular matrix, non-hyperbolic signature), 2 on
usage or grammar problems.  Errors are emitted as one JSON object on
standard error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import jsonio
from .acceptance import CRITERIA, run_all
from .alexander import (
    AlexanderData,
    bns_rays,
    commutator_cocycle,
    jump_locus_branch,
    minimal_prime_characters,
    torsion_branches,
)
from .cohomology import h1
from .errors import MathDomainError, ParseError
from .fields import Rationals
from .grammar import (
    parse_assignments,
    parse_character,
    parse_element,
    parse_field,
    parse_valuation,
)
from .orbifolds import (
    OrbifoldSignature,
    crosscheck_prediction,
    predict_exceptional_set,
)
from .presentations import Character, parse_presentation, parse_word
from .tree import (
    ball,
    ball_dot,
    base_vertex,
    busemann_upper,
    classify_affine_action,
    classify_matrix,
)


def _read_presentation(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}")
    return parse_presentation(text)


def _parse_matrix(field, text):
    parts = text.split(",")
    if len(parts) != 4:
        raise ParseError("--matrix takes four comma-separated entries a,b,c,d")
    a, b, c, d = (parse_element(field, p) for p in parts)
    return ((a, b), (c, d))


def _emit(obj):
    sys.stdout.write(jsonio.dumps(obj) + "\n")


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_h1(args):
    P = _read_presentation(args.file)
    K = parse_field(args.field)
    chi = parse_character(P, K, args.char)
    _emit(h1(P, chi, crosscheck=args.crosscheck).to_json())
    return 0


def _cmd_jumplocus(args):
    P = _read_presentation(args.file)
    data = AlexanderData(P, args.char_p)
    base = parse_field(args.base) if args.base else None
    if args.exponents is not None:
        try:
            exps = tuple(int(p) for p in args.exponents.split(",") if p.strip())
        except ValueError:
            raise ParseError("--exponents takes comma-separated integers")
        branches = [jump_locus_branch(data, exps, base=base)]
    else:
        branches = torsion_branches(data, base=base)
    _emit({
        "generators": list(P.gens),
        "characteristic": data.characteristic,
        "freeRank": len(data.ab.free_indices),
        "torsionOrders": list(data.ab.torsion_orders),
        "branches": [b.to_json() for b in branches],
    })
    return 0


def _cmd_alexander(args):
    P = _read_presentation(args.file)
    data = AlexanderData(P, args.char_p)
    base = None
    if args.char_p:
        from .fields import PrimeField
        base = PrimeField(args.char_p)
    trivial = jump_locus_branch(
        data, tuple(0 for _ in data.ab.torsion_orders), base=base)
    records = minimal_prime_characters(P, base=base)
    g0 = None
    if args.g0 is not None:
        g0 = parse_word(args.g0, P.gens)
        if not g0:
            raise ParseError("--g0 word reduces to the empty word")
    cocycle = None
    for index, rec in enumerate(records):
        if not isinstance(rec.field, Rationals):
            continue
        chi = Character(P, rec.field, rec.images)
        theta = h1(P, chi).nontrivial_cocycle()
        if theta is None:
            continue
        pivot, values = commutator_cocycle(chi, theta, g0=g0)
        from .cohomology import is_coboundary
        cocycle = {
            "record": index,
            "pivot": P.word_str(pivot),
            "values": {g: jsonio.element_json(v)
                       for g, v in zip(P.gens, values)},
            "isCoboundary": is_coboundary(P, chi, list(values)),
        }
        break
    _emit({
        "matrix": data.to_json(),
        "ideal": None if trivial.delta is None else str(trivial.delta),
        "records": [r.to_json() for r in records],
        "rays": bns_rays(P, records),
        "commutatorCocycle": cocycle,
    })
    return 0


def _cmd_tree(args):
    K = parse_field(args.field)
    v = parse_valuation(K, args.val)
    if args.mode in ("classify", "busemann"):
        if args.matrix is None:
            raise ParseError(f"tree {args.mode} needs --matrix")
        m = _parse_matrix(K, args.matrix)
        if args.mode == "classify":
            cls = classify_matrix(v, m)
            _emit({"kind": cls["type"], "length": cls["translationLength"],
                   "detValuation": cls["detValuation"]})
        else:
            _emit({"busemann": busemann_upper(v, m)})
        return 0
    # ball
    center = base_vertex(v)
    if args.dot:
        sys.stdout.write(ball_dot(v, center, args.radius))
        return 0
    vertices, edges = ball(v, center, args.radius)
    _emit({
        "center": center.label(),
        "radius": args.radius,
        "vertexCount": len(vertices),
        "vertices": [x.label() for x in vertices],
        "edges": [[x.label(), y.label()] for x, y in edges],
    })
    return 0


def _cmd_action(args):
    P = _read_presentation(args.file)
    K = parse_field(args.field)
    v = parse_valuation(K, args.val)
    chi = parse_character(P, K, args.char)
    theta = parse_assignments(P, K, args.cocycle)
    _emit(classify_affine_action(chi, theta, v).to_json())
    return 0


def _cmd_orbifold(args):
    cone = []
    if args.cone:
        try:
            cone = [int(p) for p in args.cone.split(",") if p.strip()]
        except ValueError:
            raise ParseError("--cone takes comma-separated integers")
    sig = OrbifoldSignature(args.genus, cone)
    K = parse_field(args.field)
    if not args.check:
        _emit(predict_exceptional_set(sig, K).to_json())
        return 0
    report = crosscheck_prediction(sig, K, budget=args.budget)
    out = {"verdict": report.prediction.verdict, "agrees": report.agrees}
    out.update(report.to_json())
    _emit(out)
    return 0


def _cmd_selftest(args):
    names = set(args.criterion) if args.criterion else None
    if names:
        known = {name for name, _b, _f in CRITERIA}
        unknown = names - known
        if unknown:
            raise ParseError(
                f"unknown criterion {sorted(unknown)}; "
                f"choose from {sorted(known)}")
    results = run_all(names)
    for entry in results:
        sys.stdout.write(jsonio.dumps(entry) + "\n")
        sys.stdout.flush()
    passed = sum(1 for e in results if e["ok"])
    summary = {
        "criteria": len(results),
        "passed": passed,
        "failed": len(results) - passed,
        "seconds": round(sum(e["seconds"] for e in results), 3),
        "ok": passed == len(results),
    }
    _emit(summary)
    return 0 if summary["ok"] else 1


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    """Argparse with JSON errors and exit code 2 on usage problems."""

    def error(self, message):
        sys.stderr.write(jsonio.dumps({"error": "UsageError",
                                       "message": message}) + "\n")
        raise SystemExit(2)


def build_parser():
    parser = _Parser(prog="charloci",
                     description="Exceptional character sets of finitely "
                                 "presented groups over exact fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("h1", parents=[], help="twisted H^1 at one character")
    p.add_argument("file", help="presentation file")
    p.add_argument("--field", required=True, help="field descriptor, e.g. Q or F5")
    p.add_argument("--char", required=True, help="character as name=value,...")
    p.add_argument("--crosscheck", action="store_true",
                   help="also rebuild the relator system from affine products")
    p.set_defaults(func=_cmd_h1)

    p = sub.add_parser("jumplocus", help="torsion branches of the rank-one jump locus")
    p.add_argument("file")
    p.add_argument("--char-p", type=int, default=0, metavar="P",
                   help="reduce the matrix mod the prime P")
    p.add_argument("--base", help="base field descriptor for the branches")
    p.add_argument("--exponents", help="single branch: comma-separated "
                                       "torsion exponents")
    p.set_defaults(func=_cmd_jumplocus)

    p = sub.add_parser("alexander", help="matrix, ideal, records and rays")
    p.add_argument("file")
    p.add_argument("--char-p", type=int, default=0, metavar="P",
                   help="run the pipeline in characteristic P")
    p.add_argument("--g0", help="pivot word for the commutator cocycle")
    p.set_defaults(func=_cmd_alexander)

    p = sub.add_parser("tree", help="tree isometries and balls")
    p.add_argument("mode", choices=("classify", "busemann", "ball"))
    p.add_argument("--field", required=True)
    p.add_argument("--val", required=True, help="p:<prime>, pi:<poly> or deg")
    p.add_argument("--matrix", help="four entries a,b,c,d")
    p.add_argument("--radius", type=int, default=2)
    p.add_argument("--dot", action="store_true", help="emit a DOT graph")
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("action", help="classify the affine action of a "
                                      "character-cocycle pair on the tree")
    p.add_argument("file")
    p.add_argument("--field", required=True)
    p.add_argument("--val", required=True)
    p.add_argument("--char", required=True)
    p.add_argument("--cocycle", required=True,
                   help="cocycle generator values as name=value,...")
    p.set_defaults(func=_cmd_action)

    p = sub.add_parser("orbifold", help="jump-locus prediction for a "
                                        "hyperbolic 2-orbifold group")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--cone", help="cone orders m1,m2,...")
    p.add_argument("--field", required=True)
    p.add_argument("--check", action="store_true",
                   help="cross-check against enumeration or sampling")
    p.add_argument("--budget", type=int, default=20000)
    p.set_defaults(func=_cmd_orbifold)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--criterion", action="append",
                   help="run only this criterion (repeatable)")
    p.set_defaults(func=_cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(jsonio.dumps(jsonio.error_json(exc)) + "\n")
        return 2
    except MathDomainError as exc:
        sys.stderr.write(jsonio.dumps(jsonio.error_json(exc)) + "\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
