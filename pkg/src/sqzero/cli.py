"""
Command-line front end.

    sqzero list --n 4 [--rank 1]
    sqzero class --n 4 --w "(1,2)(3,4)" --theory H --kind fund [--format json]
    sqzero schubert --perm 3,1,2
    sqzero grothendieck --perm 3,1,2
    sqzero weight --n 3 --tau 2,1,3
    sqzero verify --suite dim --n-max 8 [--jobs 4]

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import suites
from .classes import compute_class
from .combin import (Involution, Permutation, ReducedWord, arc_diagram, enumerate_involutions,
                     orbit_dim, pi_w, reduced_word)
from .ring import LaurentPoly, NotDivisible, RatFunc
from .schubert import double_schubert, grothendieck
from .weightfn import weight_function

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
N_BOUND = 9


class UsageError(Exception):
    pass


def _check_bound(n: int, force: bool):
    if n < 1:
        raise UsageError("--n must be positive")
    if n > N_BOUND and not force:
        raise UsageError(f"n = {n} exceeds the default bound {N_BOUND}; pass --force to run anyway")


def _parse_perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as e:
        raise UsageError(f"bad permutation {text!r}: {e}") from None


def _poly_json(p) -> object:
    if isinstance(p, LaurentPoly):
        return p.to_json()
    return {"num": p.num.to_json(), "den": p.den.to_json()}


def _render(value, fmt: str, payload: dict) -> str:
    if fmt == "text":
        return str(value)
    if fmt == "latex":
        return value.to_latex()
    payload = dict(payload)
    payload.setdefault("terms", _poly_json(value))
    return json.dumps(payload, ensure_ascii=False)


# -- commands -------------------------------------------------------------------

def cmd_list(args) -> int:
    _check_bound(args.n, args.force)
    rows = []
    for w in enumerate_involutions(args.n):
        if args.rank is not None and w.rank != args.rank:
            continue
        p = pi_w(w)
        dim = orbit_dim(w)
        rows.append({
            "involution": str(w), "rank": w.rank, "dim": dim,
            "codim": args.n * (args.n - 1) // 2 - dim, "arcs": arc_diagram(w),
            "pi_w": str(p), "word": str(reduced_word(p)),
        })
    if args.format == "json":
        for r in rows:
            print(json.dumps(r))
        return EXIT_OK
    header = ("involution", "rank", "dim", "codim", "arcs", "pi_w", "word")
    table = [header] + [tuple(str(r[k if k != "pi_w" else "pi_w"]) for k in header) for r in rows]
    widths = [max(len(row[c]) for row in table) for c in range(len(header))]
    for row in table:
        print("  ".join(cell.ljust(wd) for cell, wd in zip(row, widths)).rstrip())
    return EXIT_OK


def cmd_class(args) -> int:
    _check_bound(args.n, args.force)
    try:
        w = Involution.parse(args.w, args.n)
    except ValueError as e:
        raise UsageError(f"bad involution {args.w!r}: {e}") from None
    word = None
    if args.word:
        try:
            word = ReducedWord.parse(args.word)
        except ValueError as e:
            raise UsageError(f"bad word {args.word!r}: {e}") from None
    try:
        r = compute_class(w, args.theory, args.kind, word=word, u_mode=args.u_mode)
    except NotDivisible:
        raise
    except ValueError as e:
        raise UsageError(str(e)) from None
    value = r.normalized if args.normalized else r.value
    payload = r.to_json()
    if args.normalized:
        payload["normalized"] = True
        payload["terms"] = _poly_json(value)
    print(_render(value, args.format, payload))
    return EXIT_OK


def cmd_schubert(args) -> int:
    p = _parse_perm(args.perm)
    _check_bound(p.n, args.force)
    s = double_schubert(p).poly
    print(_render(s, args.format, {"perm": list(p.one_line), "kind": "double_schubert"}))
    return EXIT_OK


def cmd_grothendieck(args) -> int:
    p = _parse_perm(args.perm)
    _check_bound(p.n, args.force)
    g = grothendieck(p).poly
    print(_render(g, args.format, {"perm": list(p.one_line), "kind": "grothendieck"}))
    return EXIT_OK


def cmd_weight(args) -> int:
    _check_bound(args.n, args.force)
    tau = _parse_perm(args.tau)
    if tau.n != args.n:
        raise UsageError(f"--tau must permute {args.n} letters")
    W = weight_function(tau, args.n).value
    print(_render(W, args.format, {"tau": list(tau.one_line), "n": args.n}))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_max is not None:
        _check_bound(args.n_max, args.force)
    rep = suites.run_suite(args.suite, args.n_max, args.jobs)
    for line in rep.json_lines():
        print(line)
    print(rep.summary(), file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_FAIL


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sqzero", description=(
        "Equivariant classes of Borel orbits of square-zero upper-triangular matrices."))
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        p.add_argument("--force", action="store_true", help=f"allow n > {N_BOUND}")
        if fmt:
            p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p = sub.add_parser("list", help="enumerate orbits")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int)
    common(p)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("class", help="compute the class of one orbit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", required=True, help='involution, e.g. "(1,2)(3,4)" or id')
    p.add_argument("--theory", choices=("H", "K"), default="H")
    p.add_argument("--kind", choices=("fund", "csm", "mc"), default="fund")
    p.add_argument("--u-mode", choices=("keep", "zero", "one"), default=None)
    p.add_argument("--word", help="reduced word to use instead of the default, e.g. 2,6,4,5,6")
    p.add_argument("--normalized", action="store_true", help="print the class divided by e(N)")
    common(p)
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("schubert", help="double Schubert polynomial")
    p.add_argument("--perm", required=True, help="one-line notation, e.g. 3,1,2")
    common(p)
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("grothendieck", help="double Grothendieck polynomial")
    p.add_argument("--perm", required=True)
    common(p)
    p.set_defaults(func=cmd_grothendieck)

    p = sub.add_parser("weight", help="normalized trigonometric weight function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", required=True, help="one-line notation")
    common(p)
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("verify", help="run a verification suite, JSON lines on stdout")
    p.add_argument("--suite", required=True, choices=suites.SUITES)
    p.add_argument("--n-max", type=int)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")
    common(p, fmt=False)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"sqzero: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NotDivisible as e:
        print(f"sqzero: internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
