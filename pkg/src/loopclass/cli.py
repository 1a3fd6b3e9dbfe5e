"""Command line interface: ``loopclass <command> ...``.

Every command prints records (one per line in TSV with a header, or a JSON
list) to stdout.  Exit status is 0 on success, 2 for bad input and 3 when
an internal invariant check fails.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Any, Callable, Sequence

from . import azumaya_pgl as az
from . import exceptional_rank3 as ex3
from . import g2_octonion as g2
from . import quadratic_forms as qf
from .exact_linalg import FinAb, FinAbHom, IntMatrix, InvariantViolation
from .nullity2_classifier import DEFAULT_TABLE_TYPES, class_rows, classify_k, classify_r2, eala_table
from .profinite_cohomology import ZnModule, koszul_cohomology
from .root_catalog import SimpleType, symbolic_rows

Record = dict[str, Any]

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parsing helpers


def parse_chain(text: str) -> tuple[int, ...]:
    if not re.fullmatch(r"\s*\d+(\s*,\s*\d+)*\s*", text or ""):
        raise InputError(f"malformed chain {text!r} (expected e.g. 2,4)")
    return tuple(int(x) for x in text.split(","))


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*([ab])(\d*)")


def parse_word(word: str, l: int) -> tuple[int, ...]:
    """``"2a1 - b2"`` -> coordinates ``(2, 0, 0, -1)`` for ``l = 2``; ``a``/``b`` mean block 1."""
    coords = [0] * (2 * l)
    w = word.replace(" ", "")
    if w in ("0", ""):
        if w == "":
            raise InputError("empty tuple entry")
        return tuple(coords)
    pos = 0
    while pos < len(w):
        m = _TERM.match(w, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)):
            raise InputError(f"malformed tuple entry {word!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        block = int(m.group(4)) if m.group(4) else 1
        if not 1 <= block <= l:
            raise InputError(f"block {block} out of range in {word!r}")
        coords[2 * (block - 1) + (m.group(3) == "b")] += sign * coef
        pos = m.end()
    return tuple(coords)


def parse_tuple(text: str, l: int) -> list[tuple[int, ...]]:
    return [parse_word(w.strip(), l) for w in text.split(";")]


def parse_matrix(text: str) -> list[list[int]]:
    """``"1,0;0,1"`` -> ``[[1, 0], [0, 1]]``."""
    try:
        rows = [[int(x) for x in r.split(",")] for r in text.split(";")]
    except ValueError:
        raise InputError(f"malformed matrix {text!r}") from None
    if len({len(r) for r in rows}) != 1:
        raise InputError(f"ragged matrix {text!r}")
    return rows


def _type(text: str) -> SimpleType:
    try:
        return SimpleType.parse(text)
    except ValueError as e:
        raise InputError(str(e)) from None


# ---------------------------------------------------------------------------
# commands


def cmd_classify(args: argparse.Namespace) -> list[Record]:
    if args.nullity == 3:
        if args.type not in ("F4", "E7", "E8"):
            raise InputError("nullity 3 is available for F4, E7, E8")
        return _rank3_records(args.type, args.over == "k")
    if args.nullity != 2:
        raise InputError("nullity must be 2 or 3")
    t = _type(args.type)
    if args.over == "k":
        return [{"absolute": str(t), "dynkin_tits": r.dynkin_tits, "h2_rep": ",".join(map(str, r.h2_rep)),
                 "quasisplit": r.quasisplit, "name": r.name, "index": r.tits_index, "relative": r.relative}
                for r in class_rows(t)]
    return [{"absolute": str(t), "dynkin_tits": f.dynkin_tits.label, "h2_rep": ",".join(map(str, f.h2_rep)),
             "quasisplit": f.quasisplit} for f in classify_r2(t)]


def cmd_table(args: argparse.Namespace) -> list[Record]:
    if args.which != "eala2":
        raise InputError(f"unknown table {args.which!r}")
    if args.symbolic:
        return symbolic_rows()
    types = args.types.split(",") if args.types else DEFAULT_TABLE_TYPES
    return [{"absolute": str(r.absolute), "name": r.name, "index": r.tits_index, "relative": r.relative}
            for r in eala_table([_type(x) for x in types])]


def cmd_cohomology(args: argparse.Namespace) -> list[Record]:
    group = FinAb.from_orders(parse_chain(args.group)) if args.group else FinAb()
    if args.sigma:
        sigmas = [FinAbHom(group, group, IntMatrix.from_rows(parse_matrix(s), ncols=group.rank)) for s in args.sigma]
        if args.n is not None and args.n != len(sigmas):
            raise InputError("-n disagrees with the number of --sigma matrices")
        module = ZnModule(group, tuple(sigmas))
    else:
        module = ZnModule.trivial(group, args.n if args.n is not None else 2)
    degrees = [args.degree] if args.degree is not None else range(module.n + 1)
    return [{"degree": i, "divisors": ",".join(map(str, koszul_cohomology(module, i).group.divisors)),
             "group": str(koszul_cohomology(module, i).group)} for i in degrees]


def cmd_quadforms(args: argparse.Namespace) -> list[Record]:
    if args.count:
        r = qf.count_report(args.dim, args.n)
        return [{"dim": r.d, "n": r.n, "count": r.classes, "closed_form": r.closed_form,
                 "parametrization_count": r.parametrization_index_count, "discrepancy": r.discrepancy}]
    return [{"dim": args.dim, "n": args.n, "class": str(w), "representative": str(qf.form_of(w, args.n))}
            for w in qf.classify_od(args.dim, args.n)]


def cmd_g2(args: argparse.Namespace) -> list[Record]:
    if args.completeness:
        r = g2.completeness_report(args.n)
        return [{"n": r.n, "block_classes": r.block_classes, "nonzero_invariants": r.nonzero_invariants,
                 "complete": r.complete}]
    classes = g2.glnz_quotient_g2(args.n) if args.quotient else g2.classify_g2(args.n)
    return [{"n": args.n, "class": str(c), "rost": str(c.invariant())} for c in classes]


def _rank3_records(group_type: str, quotient: bool) -> list[Record]:
    if quotient:
        res = ex3.glnz_quotient_rank3(group_type)
        return [{"type": group_type, "d": o[0].datum.d, "class": str(o[0]),
                 "orbit": ",".join(str(c.unit) for c in o), "note": res.note()} for o in res.orbits]
    return [{"type": group_type, "d": c.datum.d, "class": str(c), "unit": c.unit} for c in ex3.classify_rank3(group_type)]


def cmd_exceptional3(args: argparse.Namespace) -> list[Record]:
    return _rank3_records(args.type, args.quotient)


def _phase(p) -> str:
    return "0" if p == 0 else f"{p.numerator}/{p.denominator}"


def cmd_azumaya(args: argparse.Namespace) -> list[Record]:
    if args.action == "real":
        return [{"degree": args.degree, "class": c} for c in az.real_nullity1_table(args.degree)]
    if args.chain is None:
        raise InputError("--chain is required")
    chain = parse_chain(args.chain)
    if args.action == "irreducible":
        datum = az.MumfordDatum(chain)
        return [{"chain": args.chain, "degree": args.degree, "irreducible": az.is_irreducible(datum, args.degree)}]
    if args.action == "generators":
        out = []
        for j, pair in enumerate(az.mumford_generators(chain, args.degree), start=1):
            for name, m in zip("ab", pair):
                out.append({"generator": f"{name}{j}", "perm": ",".join(map(str, m.perm)),
                            "phases": ",".join(_phase(p) for p in m.phases)})
        return out
    if args.action == "presentation":
        pairs = [(1, s) for s in chain]
        return [{"block": k + 1, "presentation": str(b)} for k, b in enumerate(az.cyclic_presentation(pairs).blocks)]
    raise InputError(f"unknown azumaya action {args.action!r}")


def cmd_normal_form(args: argparse.Namespace) -> list[Record]:
    if args.kind != "brussel":
        raise InputError(f"unknown normal form {args.kind!r}")
    datum = az.MumfordDatum(parse_chain(args.chain))
    xs = parse_tuple(args.tuple, datum.l)
    form = az.brussel_normal_form(datum, xs)
    return [{"n": form.n, "chain": ",".join(map(str, form.chain)), "r1": form.r1, "form": str(form),
             "presentation": str(az.cyclic_presentation(form))}]


def _verify_checks() -> list[tuple[str, Callable[[], bool]]]:
    def h2() -> bool:
        return all(koszul_cohomology(ZnModule.trivial(FinAb.from_orders([2 * n + 1]), 2), 2).group.order == 2 * n + 1
                   for n in range(1, 5))

    def nullity2() -> bool:
        expect = {"A1": (2, 2), "D4": (12, 5), "E6": (5, 3), "E8": (1, 1)}
        return all((len(classify_r2(_type(t))), len(classify_k(_type(t)))) == v for t, v in expect.items())

    def quad() -> bool:
        return all(len(qf.classify_od(d, n)) == qf.count_od(d, n) for d in range(1, 5) for n in range(3))

    def g2_counts() -> bool:
        return [len(g2.classify_g2(n)) - 1 for n in (2, 3, 4)] == [0, 1, 7]

    def rank3() -> bool:
        return [len(ex3.classify_rank3(t)) for t in ("F4", "E7", "E8")] == [2, 2, 6]

    def brussel() -> bool:
        return str(az.brussel_normal_form(az.MumfordDatum((5,)), [(1, 0), (0, 3)])) == "A(2,5)"

    def multiloop() -> bool:
        return az.multiloop_oracle_d2([(1, 0), (0, 1)])

    return [("h2", h2), ("nullity2", nullity2), ("quadforms", quad), ("g2", g2_counts),
            ("rank3", rank3), ("brussel", brussel), ("multiloop", multiloop)]


def cmd_verify(args: argparse.Namespace) -> list[Record]:
    out = []
    for name, check in _verify_checks():
        if args.suite not in ("all", name):
            continue
        out.append({"check": name, "status": "PASS" if check() else "FAIL"})
    if not out:
        raise InputError(f"unknown suite {args.suite!r}")
    return out


# ---------------------------------------------------------------------------
# output


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(records: Sequence[Record], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(list(records), ensure_ascii=False)
    if not records:
        return ""
    keys = list(records[0])
    lines = ["\t".join(keys)] + ["\t".join(_cell(r.get(k, "")) for k in keys) for r in records]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loopclass", description="Classification of loop torsors and related tables.")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify loop forms of a simple type")
    c.add_argument("--type", required=True)
    c.add_argument("--nullity", type=int, default=2)
    c.add_argument("--over", choices=("r2", "r3", "k"), default="r2")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("table", help="emit a classification table")
    c.add_argument("which")
    c.add_argument("--types", help="comma separated list of types")
    c.add_argument("--symbolic", action="store_true")
    c.set_defaults(func=cmd_table)

    c = sub.add_parser("cohomology", help="Z^n cohomology of a finite abelian group")
    c.add_argument("--group", help="orders of cyclic factors, e.g. 2,4")
    c.add_argument("--sigma", action="append", help="action matrix of one generator, e.g. '0,1;1,0'")
    c.add_argument("-n", type=int)
    c.add_argument("--degree", type=int)
    c.set_defaults(func=cmd_cohomology)

    c = sub.add_parser("quadforms", help="diagonal quadratic forms over Laurent polynomials")
    c.add_argument("--dim", type=int, required=True)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--count", action="store_true")
    c.set_defaults(func=cmd_quadforms)

    c = sub.add_parser("g2", help="octonion classes and Rost invariants")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--quotient", action="store_true")
    c.add_argument("--completeness", action="store_true")
    c.set_defaults(func=cmd_g2)

    c = sub.add_parser("exceptional3", help="anisotropic classes of F4, E7, E8 in nullity 3")
    c.add_argument("--type", required=True, choices=("F4", "E7", "E8"))
    c.add_argument("--quotient", action="store_true")
    c.set_defaults(func=cmd_exceptional3)

    c = sub.add_parser("azumaya", help="Mumford groups and real nullity one classes")
    c.add_argument("action", choices=("generators", "irreducible", "presentation", "real"))
    c.add_argument("--chain")
    c.add_argument("--degree", "-d", type=int, required=True)
    c.set_defaults(func=cmd_azumaya)

    c = sub.add_parser("normal-form", help="normal form of a loop class")
    c.add_argument("kind")
    c.add_argument("--chain", required=True)
    c.add_argument("--tuple", required=True, help="entries separated by ';', e.g. 'a;3b'")
    c.set_defaults(func=cmd_normal_form)

    c = sub.add_parser("verify", help="run the built-in consistency checks")
    c.add_argument("--suite", default="all")
    c.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    try:
        records = args.func(args)
    except (InvariantViolation, AssertionError) as e:
        print(f"error: invariant violated: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, KeyError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    text = render(records, args.format)
    if text:
        print(text)
    if args.command == "verify" and any(r["status"] != "PASS" for r in records):
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
