"""``alex`` command line front end.

Exit codes: 0 success (or positive verdict), 1 negative verdict (no
Fox-Milnor witness, linkings condition fails, obstruction inconclusive),
2 unreadable input, 3 nonzero linking matrix, 4 singular presentation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .aribbon import (
    ARibbonPresentation,
    MissingEtaData,
    NonzeroLinkingMatrix,
    PresentationError,
    SeifertBlocks,
    check_concentricity,
    check_linkings_condition,
    homology,
    seifert_blocks,
)
from .classical import InvalidSeifertMatrix, UnknownKnot, catalog, spun
from .factor import DEFAULT_MAX_DEGREE, DegreeTooLarge, fox_milnor_witness
from .formats import ParseError
from .intlinalg import IntMatrix
from .laurent import LaurentPoly, PolySyntaxError, ZeroPolynomial, parse, to_compact, to_str
from .modulecalc import (
    ModulePresentation,
    connected_sum,
    elementary_ideal,
    from_seifert,
    mirror,
    mirror_sum_obstruction,
)
from .seifert import SeifertPair, ZeroDeterminant, alexander, direct_sum, mirror_pair

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_LINKING, EXIT_ZERODET = 0, 1, 2, 3, 4


def to_seifert(obj) -> SeifertPair:
    if isinstance(obj, SeifertPair):
        return obj
    if isinstance(obj, ARibbonPresentation):
        return seifert_blocks(obj).seifert_pair()
    if isinstance(obj, SeifertBlocks):
        return obj.seifert_pair()
    raise TypeError(f"{type(obj).__name__} has no Seifert pair")


def to_module(obj) -> ModulePresentation:
    if isinstance(obj, ModulePresentation):
        return obj
    return from_seifert(to_seifert(obj))


def alexander_of(obj) -> LaurentPoly:
    if isinstance(obj, ModulePresentation):
        return obj.alexander()
    return alexander(to_seifert(obj))


def _emit(args, text_lines, data):
    if args.format == "structured":
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _poly_data(p: LaurentPoly) -> dict:
    return {"text": to_str(p), "compact": to_compact(p)}


def _load_one(args):
    if not args.input:
        raise ParseError("--input is required")
    return formats.load(args.input[0])


def cmd_alexander(args) -> int:
    obj = _load_one(args)
    delta = alexander_of(obj)
    _emit(args, [to_str(delta)], {"alexander": _poly_data(delta)})
    return EXIT_OK


def _poly_from_args(args) -> LaurentPoly:
    text = args.poly or (" ".join(args.polynomial) if args.polynomial else None)
    if text is not None:
        return parse(text)
    if not args.input:
        raise ParseError("give a polynomial or --input")
    path = args.input[0]
    raw = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    try:
        return parse(raw.strip())
    except PolySyntaxError:
        return alexander_of(formats.loads(raw))


def cmd_factorize(args) -> int:
    p = _poly_from_args(args)
    w = fox_milnor_witness(p, args.max_degree)
    if w is None:
        _emit(args, ["none"], {"input": _poly_data(p), "witness": None})
        return EXIT_NO
    _emit(args, [to_str(w)], {"input": _poly_data(p), "witness": _poly_data(w)})
    return EXIT_OK


def cmd_check(args) -> int:
    obj = _load_one(args)
    lines, data = [], {}
    if isinstance(obj, SeifertBlocks):
        ok = obj.matrix_check()
        lines.append(f"matrix_check: {'holds' if ok else 'fails'}")
        data["matrix_check"] = ok
        _emit(args, lines, data)
        return EXIT_OK if ok else EXIT_NO
    if not isinstance(obj, ARibbonPresentation):
        raise ParseError("check needs an aribbon or blocks file")
    rep = check_linkings_condition(obj)
    lines.append(f"linkings: {'holds' if rep.holds else 'fails'}")
    if rep.witness is not None:
        lines.append(f"linkings_witness: {rep.witness[0]} {rep.witness[1]}")
    lines.append(f"lk_trivial: {'yes' if rep.lk_trivial else 'no'}")
    if rep.matrix_check is None:
        lines.append("matrix_check: not evaluated (Lk_S != 0)")
    else:
        lines.append(f"matrix_check: {'holds' if rep.matrix_check else 'fails'}")
    data["linkings"] = {
        "holds": rep.holds,
        "witness": list(rep.witness) if rep.witness else None,
        "lk_trivial": rep.lk_trivial,
        "matrix_check": rep.matrix_check,
    }
    try:
        conc = check_concentricity(obj)
        lines.append(f"concentricity: {'holds' if conc.holds else 'fails'}")
        data["concentricity"] = {"holds": conc.holds, "failing": [list(x) for x in conc.failing]}
    except MissingEtaData:
        lines.append("concentricity: not evaluated (no eta data)")
        data["concentricity"] = None
    h = homology(obj)
    lines.append(f"homology: {h}")
    data["homology"] = {
        "h1_free_rank": h.h1_free_rank,
        "h1_torsion": list(h.h1_torsion),
        "h2_rank": h.h2_rank,
    }
    _emit(args, lines, data)
    return EXIT_OK if rep.holds else EXIT_NO


def _eval_points(args):
    if not args.eval:
        return (-1,)
    try:
        return tuple(int(x) for x in args.eval.split(","))
    except ValueError:
        raise ParseError(f"bad --eval list {args.eval!r}") from None


def cmd_obstruct(args) -> int:
    obj = _load_one(args)
    P = to_module(obj)
    rep = mirror_sum_obstruction(P, _eval_points(args), args.max_degree)
    e2 = elementary_ideal(P, 2)
    lines = [
        f"verdict: {rep.verdict}",
        f"alexander: {to_str(rep.alexander)}",
        "e2_images: " + ", ".join(f"t={t}: {d}Z" for t, d in sorted(rep.e2_images.items())),
        "pairings: " + (", ".join(to_str(g) for g in rep.pairings) or "none"),
        f"note: {rep.explanation}",
    ]
    data = {
        "verdict": rep.verdict,
        "alexander": _poly_data(rep.alexander),
        "e2_generators": [to_str(g) for g in e2],
        "e2_images": {str(t): d for t, d in sorted(rep.e2_images.items())},
        "pairings": [
            {"g": to_str(g), "gcd": {str(t): rep.pairing_gcds[(g, t)] for t in rep.e2_images}}
            for g in rep.pairings
        ],
        "note": rep.explanation,
    }
    _emit(args, lines, data)
    return EXIT_OK if rep.obstructed else EXIT_NO


def _write(args, obj):
    out = args.output or "-"
    formats.dump(obj, out)
    return EXIT_OK


def cmd_spun(args) -> int:
    if args.matrix:
        try:
            rows = json.loads(args.matrix)
        except json.JSONDecodeError:
            raise ParseError(f"--matrix is not a JSON row list: {args.matrix!r}") from None
        V = IntMatrix.from_rows(rows) if rows else IntMatrix.zeros(0)
        name = None
    elif args.knot:
        V = catalog(args.knot)
        name = f"spun {args.knot}"
    else:
        raise ParseError("give a knot name or --matrix")
    s = spun(V)
    return _write(args, SeifertPair(s.v_plus, s.v_minus, name=name))


def cmd_mirror(args) -> int:
    obj = _load_one(args)
    if isinstance(obj, ModulePresentation):
        return _write(args, mirror(obj))
    return _write(args, mirror_pair(to_seifert(obj)))


def cmd_connsum(args) -> int:
    if not args.input or len(args.input) != 2:
        raise ParseError("connsum needs exactly two --input files")
    a, b = (formats.load(p) for p in args.input)
    if isinstance(a, ModulePresentation) or isinstance(b, ModulePresentation):
        return _write(args, connected_sum(to_module(a), to_module(b)))
    return _write(args, direct_sum(to_seifert(a), to_seifert(b)))


COMMANDS = {
    "alexander": (cmd_alexander, "print the canonical Alexander polynomial"),
    "factorize": (cmd_factorize, "find f with Delta ~ f(t) f(t^-1)"),
    "check": (cmd_check, "linkings / concentricity / homology report"),
    "obstruct": (cmd_obstruct, "mirror connected-sum obstruction"),
    "spun": (cmd_spun, "write the Seifert pair of a spun classical knot"),
    "mirror": (cmd_mirror, "write the mirror image"),
    "connsum": (cmd_connsum, "write the connected sum of two inputs"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", action="append", metavar="F",
                        help="input file ('-' for stdin); repeat for connsum")
    common.add_argument("--output", "-o", metavar="F", help="output file (default stdout)")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--eval", metavar="T0,...", help="evaluation points (default -1)")
    common.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE,
                        help="degree bound for factorization")
    parser = argparse.ArgumentParser(prog="alex", description="Alexander invariants of 2-knots")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name == "factorize":
            p.add_argument("polynomial", nargs="*", help="e.g. '2*t^2 - 2*t + 1' (use -- before a leading minus)")
            p.add_argument("--poly", help="polynomial text")
        if name == "spun":
            p.add_argument("knot", nargs="?", help="catalog name")
            p.add_argument("--matrix", help="Seifert matrix as JSON rows")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        return func(args)
    except NonzeroLinkingMatrix as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LINKING
    except ZeroDeterminant as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ZERODET
    except (ParseError, PolySyntaxError, PresentationError, UnknownKnot, InvalidSeifertMatrix,
            DegreeTooLarge, ZeroPolynomial, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
