"""Static data per simple type: center, outer automorphisms and the index table.

The center of the simply connected group is stored as a :class:`FinAb` with
the outer automorphism group acting on it.  Type ``D4`` uses ``S3`` realized
as permutations of the three nonzero elements ``(1,0), (0,1), (1,1)`` of
``(Z/2)^2``.

The nullity 2 index table lives in ``data/eala2.json``.  Rows there are
symbolic in a rank parameter ``n``; :func:`match_row` instantiates them.
"""

from __future__ import annotations

import ast
import json
import math
import operator
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Any, Callable, Hashable, Iterable, Mapping

from .exact_linalg import FinAb, FinAbHom, IntMatrix
from .loop_cocycles import FiniteGroup

_LEGAL = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _LEGAL:
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not _LEGAL[self.family](self.rank):
            raise ValueError(f"illegal type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> SimpleType:
        m = re.fullmatch(r"\s*([A-Ga-g])_?\{?(\d+)\}?\s*", text)
        if not m:
            raise ValueError(f"cannot parse simple type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True, eq=False)
class CenterDatum:
    """Center of the simply connected group with the action of ``Out``."""

    center: FinAb
    out: FiniteGroup
    action: Callable[[Hashable], FinAbHom]

    def rho(self, a: Hashable) -> FinAbHom:
        return self.action(a)


def _matrix_action(center: FinAb, table: Mapping[Hashable, list[list[int]]]):
    homs = {a: FinAbHom(center, center, IntMatrix.from_rows(m, ncols=center.rank)) for a, m in table.items()}
    return homs.__getitem__


# nonzero elements of (Z/2)^2, permuted by S3
D4_NONZERO = ((1, 0), (0, 1), (1, 1))


def _s3_on_klein(perm: tuple[int, ...]) -> list[list[int]]:
    c0, c1 = D4_NONZERO[perm[0]], D4_NONZERO[perm[1]]
    return [[c0[0], c1[0]], [c0[1], c1[1]]]


def lookup(t: SimpleType) -> CenterDatum:
    fam, r = t.family, t.rank
    trivial_out = FiniteGroup.trivial()
    z2 = FiniteGroup.cyclic(2)
    if fam == "A":
        d = r + 1
        g = FinAb((d,))
        if r == 1:
            return CenterDatum(g, trivial_out, _matrix_action(g, {0: [[1]]}))
        return CenterDatum(g, z2, _matrix_action(g, {0: [[1]], 1: [[-1]]}))
    if fam in "BC" or (fam == "E" and r == 7):
        g = FinAb((2,))
        return CenterDatum(g, trivial_out, _matrix_action(g, {0: [[1]]}))
    if fam == "D":
        if r == 4:
            g = FinAb((2, 2))
            s3 = FiniteGroup.symmetric(3)
            return CenterDatum(g, s3, _matrix_action(g, {p: _s3_on_klein(p) for p in s3.elements}))
        if r % 2:
            g = FinAb((4,))
            return CenterDatum(g, z2, _matrix_action(g, {0: [[1]], 1: [[-1]]}))
        g = FinAb((2, 2))
        return CenterDatum(g, z2, _matrix_action(g, {0: [[1, 0], [0, 1]], 1: [[0, 1], [1, 0]]}))
    if fam == "E" and r == 6:
        g = FinAb((3,))
        return CenterDatum(g, z2, _matrix_action(g, {0: [[1]], 1: [[-1]]}))
    g = FinAb()
    return CenterDatum(g, trivial_out, _matrix_action(g, {0: []}))


# ---------------------------------------------------------------------------
# index table

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.FloorDiv: operator.floordiv}


def _eval(expr: str, env: Mapping[str, int]) -> int:
    def ev(node: ast.AST) -> int:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise KeyError(f"variable {node.id!r} not available")
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        raise ValueError(f"unsupported expression {expr!r}")

    return ev(ast.parse(expr, mode="eval"))


def _fill(template: str, env: Mapping[str, int]) -> str:
    return re.sub(r"<([^<>]+)>", lambda m: str(_eval(m.group(1), env)), template)


def _rank_pattern(p: str) -> tuple[int, int] | int:
    """``"2n-1"`` -> ``(2, -1)``; a constant pattern returns the constant."""
    if p.isdigit():
        return int(p)
    m = re.fullmatch(r"(\d*)n([+-]\d+)?", p)
    if not m:
        raise ValueError(f"bad rank pattern {p!r}")
    return (int(m.group(1) or 1), int(m.group(2) or 0))


@dataclass(frozen=True)
class TableRow:
    family: str
    rank: str
    n_min: int
    name: str
    kind: str
    coset: Any
    quasisplit: bool | None
    index: str
    relative: str
    name_tex: str
    index_tex: str
    relative_tex: str

    def parameter(self, rank: int) -> int | None:
        """The value of ``n`` for which this row's pattern gives ``rank``."""
        pat = _rank_pattern(self.rank)
        if isinstance(pat, int):
            return 0 if pat == rank else None
        a, b = pat
        if (rank - b) % a:
            return None
        n = (rank - b) // a
        return n if n >= self.n_min else None

    def absolute_tex(self) -> str:
        r = self.rank
        return f"{self.family}_{r}" if len(r) == 1 else f"{self.family}_{{{r}}}"

    def condition(self) -> str:
        return "" if self.rank.isdigit() else f"n >= {self.n_min}"


@lru_cache(maxsize=None)
def load_table() -> tuple[TableRow, ...]:
    raw = json.loads(resources.files("loopclass").joinpath("data/eala2.json").read_text(encoding="utf-8"))
    if raw.get("format") != "loopclass-eala2" or raw.get("version") != 1:
        raise ValueError("unexpected table format or version")
    rows = []
    for r in raw["rows"]:
        rows.append(TableRow(
            family=r["family"], rank=r["rank"], n_min=r["n_min"], name=r["name"], kind=r["kind"],
            coset=r.get("coset"), quasisplit=r.get("quasisplit"),
            index=r["index"], relative=r["relative"],
            name_tex=r.get("name_tex", r["name"]), index_tex=r["index_tex"], relative_tex=r["relative_tex"],
        ))
    return tuple(rows)


def symbolic_rows() -> list[dict[str, str]]:
    """The table in its symbolic form, one record per stored row."""
    return [
        {"absolute": row.absolute_tex(), "condition": row.condition(), "name": row.name_tex,
         "index": row.index_tex, "relative": row.relative_tex}
        for row in load_table()
    ]


@dataclass(frozen=True)
class InstantiatedRow:
    absolute: SimpleType
    name: str
    tits_index: str
    relative: str
    position: tuple[int, int] = (0, 0)


def match_row(absolute: SimpleType, kind: str, coset: Iterable[tuple[int, ...]] = (), quasisplit: bool | None = None) -> InstantiatedRow:
    """Find and instantiate the table row for a classification invariant.

    ``kind`` is ``"inner"``, ``"quadratic"`` or ``"cubic"``; ``coset`` is the
    set of center elements (inner case) whose class the invariant names.
    """
    coset = {tuple(c) for c in coset}
    for pos, row in enumerate(load_table()):
        if row.family != absolute.family or row.kind != kind:
            continue
        n = row.parameter(absolute.rank)
        if n is None:
            continue
        env = {"n": n}
        if kind == "inner":
            if row.coset == "any":
                center = lookup(absolute).center
                if center.rank != 1:
                    raise ValueError("formula rows need a cyclic center")
                d = center.order
                q = min(c[0] for c in coset)
                env.update(d=d, q=q, r=math.gcd(q, d))
            elif not coset & {tuple(c) for c in row.coset}:
                continue
        elif kind == "quadratic":
            if row.quasisplit != quasisplit:
                continue
        return InstantiatedRow(absolute, _fill(row.name, env), _fill(row.index, env), _fill(row.relative, env),
                               (pos, env.get("q", 0)))
    raise KeyError(f"no table row for {absolute} ({kind}, coset={sorted(coset)}, quasisplit={quasisplit})")


def relative_type(absolute: SimpleType, invariant: Any) -> str:
    """Relative root system of the class described by ``invariant``.

    ``invariant`` is a classification record as produced by the nullity 2
    classifier (it must expose ``dynkin_tits.kind``, ``coset`` and
    ``quasisplit``).  Inner type A is computed from the formula
    ``A_{r-1}``, ``r = gcd(q, d)``; everything else comes from the table.
    """
    return match_row(absolute, invariant.dynkin_tits.kind, invariant.coset, invariant.quasisplit).relative
