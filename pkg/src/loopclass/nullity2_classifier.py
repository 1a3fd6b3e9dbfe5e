"""Loop forms of simple adjoint groups over ``R_2 = k[t1^+-1, t2^+-1]``.

A class is a pair: a Dynkin-Tits class (a commuting pair in ``Out`` up to
conjugacy) and an element of the fiber over it, which is ``H^2`` of the
center twisted through that pair modulo the centralizer of the pair in
``Out``.  Over ``k`` one further divides by ``GL_2(Z)``: it permutes the
Dynkin-Tits classes, and the stabilizer of a class acts on its fiber by
``det(g)`` times the coefficient map.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Sequence

from .exact_linalg import FinAbHom, IntMatrix, InvariantViolation, bfs_orbits, glnz_generators
from .loop_cocycles import FiniteGroup, LoopClass, classify_commuting_tuples, glnz_orbit_partition
from .profinite_cohomology import ZnModule, base_change_action_on_top, equivariant_action_on_h, koszul_cohomology
from .root_catalog import CenterDatum, SimpleType, lookup, match_row


@dataclass(frozen=True)
class DynkinTitsClass:
    out_hom: LoopClass
    label: str

    @property
    def kind(self) -> str:
        """``inner`` for the split class, otherwise ``quadratic`` or ``cubic``."""
        return "inner" if self.label == "split" else self.label.split("(")[0]

    def label_key(self) -> tuple[int, ...]:
        if self.label == "split":
            return ()
        i, j = (int(x) for x in self.label[self.label.index("(") + 1:-1].split(","))
        return (j, i)


@dataclass(frozen=True)
class LoopFormR2:
    """One loop form.

    ``coset`` is the set of center elements (degree 2 cochains) whose class
    lies in this form's orbit; ``h2_rep`` is its smallest member.
    """

    absolute: SimpleType
    dynkin_tits: DynkinTitsClass
    h2_rep: tuple[int, ...]
    coset: frozenset[tuple[int, ...]]
    quasisplit: bool

    def table_row(self):
        return match_row(self.absolute, self.dynkin_tits.kind, self.coset, self.quasisplit)


@dataclass(frozen=True)
class ClassRow:
    absolute: SimpleType
    name: str
    tits_index: str
    relative: str
    dynkin_tits: str
    h2_rep: tuple[int, ...]
    quasisplit: bool


def _subgroup_order(g: FiniteGroup, xs: Sequence[Hashable]) -> int:
    seen = {g.identity}
    queue = deque([g.identity])
    while queue:
        y = queue.popleft()
        for x in xs:
            z = g.mul(y, x)
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return len(seen)


def dynkin_tits_label(out: FiniteGroup, pair: Sequence[Hashable]) -> str:
    """``split``, ``quadratic(i,j)`` or ``cubic(i,j)`` for a commuting pair in ``Out``."""
    order = _subgroup_order(out, pair)
    e = out.identity
    if order == 1:
        return "split"
    if order == 2:
        i, j = (int(x != e) for x in pair)
        return f"quadratic({i},{j})"
    if order == 3:
        # write each entry as a power of a fixed 3-cycle, up to inverting the cycle
        c = next(x for x in out.elements if out.element_order(x) == 3)
        exps = [next(k for k in range(3) if out.power(c, k) == x) for x in pair]
        last = [x for x in exps if x][-1]
        if last == 2:
            exps = [(-x) % 3 for x in exps]
        return f"cubic({exps[0]},{exps[1]})"
    raise InvariantViolation(f"unexpected image of order {order}")


def dynkin_tits_classes(datum: CenterDatum) -> list[DynkinTitsClass]:
    return [DynkinTitsClass(c, dynkin_tits_label(datum.out, c.tuple)) for c in classify_commuting_tuples(datum.out, 2)]


def twisted_center(datum: CenterDatum, dt: DynkinTitsClass) -> ZnModule:
    return ZnModule(datum.center, tuple(datum.rho(x) for x in dt.out_hom.tuple))


def _forms_from_orbits(t: SimpleType, dt: DynkinTitsClass, module: ZnModule, maps: Sequence[FinAbHom]) -> list[LoopFormR2]:
    h = koszul_cohomology(module, 2)
    points = list(h.group.coordinate_vectors())
    orbits = bfs_orbits(points, [lambda x, f=f: f(x).coords for f in maps])
    fibers: dict[tuple[int, ...], set] = {}
    for x in module.group.coordinate_vectors():
        fibers.setdefault(h.class_of(x), set()).add(x)
    zero = (0,) * h.group.rank
    out = []
    for orbit in orbits:
        coset = frozenset().union(*(fibers[p] for p in orbit))
        out.append(LoopFormR2(t, dt, min(coset), coset, zero in orbit))
    out.sort(key=lambda f: (not f.quasisplit, f.h2_rep))
    return out


@lru_cache(maxsize=None)
def classify_r2(t: SimpleType) -> tuple[LoopFormR2, ...]:
    datum = lookup(t)
    forms: list[LoopFormR2] = []
    for dt in dynkin_tits_classes(datum):
        module = twisted_center(datum, dt)
        cent = datum.out.centralizer(dt.out_hom.tuple)
        maps = [equivariant_action_on_h(module, 2, datum.rho(a)) for a in cent]
        forms.extend(_forms_from_orbits(t, dt, module, maps))
    return tuple(forms)


@lru_cache(maxsize=None)
def _gl2_image(m: int) -> tuple[IntMatrix, ...]:
    """Integer lifts of every element of the image of ``GL_2(Z)`` in ``GL_2(Z/m)``."""
    gens = glnz_generators(2)
    ident = IntMatrix.identity(2)
    lifts = {ident.mod(m).rows: ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g @ x
            key = y.mod(m).rows
            if key not in lifts:
                lifts[key] = y
                queue.append(y)
    return tuple(lifts[k] for k in sorted(lifts))


def stabilizer_maps(datum: CenterDatum, dt: DynkinTitsClass) -> list[FinAbHom]:
    """Automorphisms of ``H^2`` induced by pairs ``(g, a)`` fixing the class ``dt``.

    ``g`` runs over the image of ``GL_2(Z)`` modulo ``m = lcm(exp(Out), 4)``
    (enough to see both the action on ``Out``-valued pairs and the sign of
    ``det g``); ``a`` runs over the elements of ``Out`` with
    ``a (g.t) a^-1 = t``.
    """
    out = datum.out
    m = math.lcm(out.exponent, 4)
    module = twisted_center(datum, dt)
    t = dt.out_hom.tuple
    chosen: dict[tuple[int, Hashable], IntMatrix] = {}
    for g in _gl2_image(m):
        moved = dt.out_hom.act(g).tuple
        for a in out.elements:
            if all(out.conj(a, y) == x for x, y in zip(t, moved)):
                chosen.setdefault((g.det(), a), g)
    return [base_change_action_on_top(module, g, datum.rho(a)) for (_, a), g in sorted(chosen.items(), key=lambda kv: (kv[0][0], out.index(kv[0][1])))]


@lru_cache(maxsize=None)
def classify_k(t: SimpleType) -> tuple[LoopFormR2, ...]:
    """Classes over ``k``: one representative per ``GL_2(Z)``-orbit."""
    datum = lookup(t)
    dts = {dt.out_hom.key(): dt for dt in dynkin_tits_classes(datum)}
    forms: list[LoopFormR2] = []
    for orbit in glnz_orbit_partition([dt.out_hom for dt in dts.values()], 2):
        members = [dts[c.key()] for c in orbit]
        rep = min(members, key=DynkinTitsClass.label_key)
        forms.extend(_forms_from_orbits(t, rep, twisted_center(datum, rep), stabilizer_maps(datum, rep)))
    return tuple(forms)


DEFAULT_TABLE_TYPES = (
    "A1", "A2", "A4", "A3", "A5", "B2", "B3", "C3", "C4", "C5",
    "D4", "D5", "D7", "D6", "D8", "E6", "E7", "E8", "F4", "G2",
)


def class_rows(t: SimpleType) -> list[ClassRow]:
    """Rows for one type, in the order of the table."""
    found = []
    for f in classify_k(t):
        r = f.table_row()
        found.append((r.position, ClassRow(t, r.name, r.tits_index, r.relative, f.dynkin_tits.label, f.h2_rep, f.quasisplit)))
    found.sort(key=lambda x: x[0])
    return [row for _, row in found]


def eala_table(types: Sequence[str | SimpleType] = DEFAULT_TABLE_TYPES) -> list[ClassRow]:
    """The nullity 2 classification over ``k`` with names, indices and relative types."""
    rows: list[ClassRow] = []
    for t in types:
        st = t if isinstance(t, SimpleType) else SimpleType.parse(t)
        rows.extend(class_rows(st))
    return rows


def relative_key_collisions(rows: Sequence[ClassRow]) -> list[tuple[ClassRow, ClassRow]]:
    """Pairs of rows outside type A sharing both absolute and relative type."""
    seen: dict[tuple[SimpleType, str], ClassRow] = {}
    clashes = []
    for r in rows:
        if r.absolute.family == "A":
            continue
        key = (r.absolute, r.relative)
        if key in seen:
            clashes.append((seen[key], r))
        else:
            seen[key] = r
    return clashes
