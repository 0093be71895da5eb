"""Command line front end.

Subcommands: ``lattice`` (intersection points and divisible-point table),
``beta1`` (modular first cohomology rank of a deconing), ``degenerate``
(degeneration matrices plus verification), ``report`` (full vanishing
report). Arrangements come from a file (one line per projective line,
three integers, ``#`` comments) or from ``--builtin``.

Exit codes: 0 success, 2 unparseable input or bad usage, 3 invalid
arrangement (zero or duplicate lines, fewer than three), 4 modulus not
prime.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .aomoto import beta1_full
from .degeneration import (
    NoTransversalError,
    TooFewClassesError,
    delta_dir,
    delta_tot,
    verify_homomorphism,
)
from .geometry import (
    BadIndexError,
    DuplicateLineError,
    ProjArrangement,
    TooFewLinesError,
    ZeroLineError,
    decone,
    is_essential,
    lattice,
)
from .modp import NotPrimeError
from .orlik_solomon import OSAlgebra
from .report import mu_table, report

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_NOT_PRIME = 4


class ParseError(ValueError):
    """Arrangement file is not three integers per line."""


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def read_arrangement_file(path: str) -> ProjArrangement:
    triples = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        if len(parts) != 3:
            raise ParseError(f"{path}:{lineno}: expected three integers, got {raw!r}")
        try:
            triples.append(tuple(int(t) for t in parts))
        except ValueError:
            raise ParseError(f"{path}:{lineno}: expected three integers, got {raw!r}") from None
    if not triples:
        raise ParseError(f"{path}: no lines found")
    return ProjArrangement.from_coeffs(triples)


def resolve_arrangement(args) -> ProjArrangement:
    if args.builtin is not None and args.file is not None:
        raise ParseError("give either a file or --builtin, not both")
    if args.builtin is not None:
        return catalog.build_named(args.builtin, args.m)
    if args.file is not None:
        return read_arrangement_file(args.file)
    raise ParseError("no input: give a file or --builtin NAME")


def cmd_lattice(args) -> int:
    arr = resolve_arrangement(args)
    lat = lattice(arr)
    table = mu_table(arr, lat)
    if args.json:
        payload = {
            "degree": len(arr.lines),
            "essential": is_essential(arr, lat),
            "points": [
                {"point": list(pt.coords), "lines": list(inc)} for pt, inc in lat.points
            ],
            "histogram": {str(k): v for k, v in sorted(lat.histogram().items())},
            "mu_table": {"ks": list(table.ks), "rows": [list(r) for r in table.rows]},
        }
        print(canonical_json(payload))
        return EXIT_OK
    print(f"{len(arr.lines)} lines, {len(lat)} intersection points")
    for pt, inc in lat.points:
        print(f"  {pt}  multiplicity {len(inc)}  lines {list(inc)}")
    print(f"multiplicity histogram: {dict(sorted(lat.histogram().items()))}")
    print(f"essential: {is_essential(arr, lat)}")
    print(f"divisible-point counts, k in {list(table.ks)}:")
    for i, row in enumerate(table.rows):
        print(f"  line {i} {arr.lines[i]}: {list(row)}")
    return EXIT_OK


def cmd_beta1(args) -> int:
    arr = resolve_arrangement(args)
    p = args.prime
    degree = len(arr.lines)
    if args.all_deconings:
        choices = list(range(degree))
    else:
        choices = [args.infinity if args.infinity is not None else 0]
    results = []
    for idx in choices:
        arr.check_index(idx)
        alg = OSAlgebra(decone(arr, idx), p)
        results.append((idx, beta1_full(alg, alg.ones())))
    if args.json:
        payload = {
            "degree": degree,
            "p": p,
            "results": [
                {"infinity": idx, "beta1": res.value, "method": res.method,
                 "certificate": res.certificate}
                for idx, res in results
            ],
        }
        print(canonical_json(payload))
    else:
        for idx, res in results:
            print(
                f"p = {p}, infinity = {idx}: beta1 = {res.value} "
                f"[{res.method}] {res.certificate}"
            )
    if args.all_deconings and degree % p == 0:
        values = {res.value for _, res in results}
        if len(values) != 1:
            print("error: deconing changed beta1 although p divides the degree",
                  file=sys.stderr)
            return 1
        print(f"all {degree} deconings agree: beta1 = {values.pop()}")
    return EXIT_OK


def _matrix_lines(mat) -> list[str]:
    return ["  [" + " ".join(str(x) for x in row) + "]" for row in mat.tolist()]


def cmd_degenerate(args) -> int:
    arr = resolve_arrangement(args)
    p = args.prime
    infinity = args.infinity if args.infinity is not None else 0
    arr.check_index(infinity)
    aff = decone(arr, infinity)
    classes = aff.classes_as_positions()
    maps = []
    try:
        maps.append(("total", None, delta_tot(aff, p)))
    except TooFewClassesError:
        pass
    for a in range(aff.num_classes):
        try:
            maps.append(("directional", a, delta_dir(aff, a, p)))
        except NoTransversalError:
            pass
    if args.json:
        payload = {
            "p": p,
            "infinity": infinity,
            "classes": [list(c) for c in classes],
            "maps": [
                {
                    "kind": kind,
                    "class": a,
                    "deg1": dmap.deg1_matrix.tolist(),
                    "deg2": dmap.deg2_matrix.tolist(),
                    "verified": verify_homomorphism(dmap),
                }
                for kind, a, dmap in maps
            ],
        }
        print(canonical_json(payload))
        return EXIT_OK
    print(f"infinity = {infinity}, parallel classes (generator positions): "
          + " ".join(str(list(c)) for c in classes))
    if not maps:
        print("no degenerations available (single parallel class)")
    for kind, a, dmap in maps:
        tag = "total" if kind == "total" else f"directional, class {a}"
        print(f"{tag}: target has {dmap.target.n} lines, "
              f"degree 2 rank {dmap.target.dim2}")
        print(" deg1 matrix:")
        for line in _matrix_lines(dmap.deg1_matrix):
            print(" " + line)
        print(" deg2 matrix:")
        for line in _matrix_lines(dmap.deg2_matrix):
            print(" " + line)
        print(f" verified: {verify_homomorphism(dmap)}")
    return EXIT_OK


def cmd_report(args) -> int:
    arr = resolve_arrangement(args)
    rep = report(arr)
    if args.json:
        print(canonical_json(rep.to_json_dict()))
        return EXIT_OK
    print(f"degree: {rep.degree} lines, essential: {rep.essential}")
    print(f"trivial eigenspace dimension: {rep.trivial_eigenspace_dim}")
    for rec in rep.primes:
        print(
            f"p = {rec.p}: min divisible-point count {rec.min_mu} "
            f"(line {rec.witness_line}), beta1 = {rec.beta1}, "
            f"small-mu vanishing applicable: {rec.theorem16_applicable}"
        )
    for rec in rep.orders:
        pp = f"{rec.prime_power[0]}^{rec.prime_power[1]}" if rec.prime_power else "-"
        bound = "?" if rec.bound is None else rec.bound
        print(f"order {rec.k} (prime power: {pp}): {rec.verdict}, bound {bound}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arrcohom",
        description="Exact invariants of complex projective line arrangements",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p_sub, prime=False):
        p_sub.add_argument("file", nargs="?", help="arrangement file (3 ints per line)")
        p_sub.add_argument("--builtin", help="catalog arrangement name")
        p_sub.add_argument("--m", type=int, help="size parameter for parametric builtins")
        p_sub.add_argument("--json", action="store_true", help="canonical JSON output")
        if prime:
            p_sub.add_argument("--prime", type=int, required=True, help="field characteristic")

    p_lat = sub.add_parser("lattice", help="intersection points and multiplicities")
    add_common(p_lat)
    p_lat.set_defaults(func=cmd_lattice)

    p_b1 = sub.add_parser("beta1", help="modular bound for one prime")
    add_common(p_b1, prime=True)
    p_b1.add_argument("--infinity", type=int, help="line sent to infinity (default 0)")
    p_b1.add_argument("--all-deconings", action="store_true",
                      help="compute every choice of infinity line")
    p_b1.set_defaults(func=cmd_beta1)

    p_deg = sub.add_parser("degenerate", help="degeneration matrices and checks")
    add_common(p_deg, prime=True)
    p_deg.add_argument("--infinity", type=int, help="line sent to infinity (default 0)")
    p_deg.set_defaults(func=cmd_degenerate)

    p_rep = sub.add_parser("report", help="eigenspace vanishing report")
    add_common(p_rep)
    p_rep.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, catalog.BadParameterError, BadIndexError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ZeroLineError, DuplicateLineError, TooFewLinesError) as exc:
        print(f"invalid arrangement: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NotPrimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_PRIME


if __name__ == "__main__":
    sys.exit(main())
