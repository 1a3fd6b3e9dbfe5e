"""Loop ``G_2``-torsors over ``R_n`` through their Rost invariant.

An octonion class is given by three monomial classes ``(t_I1), (t_I2),
(t_I3)`` and its Rost invariant is the cup product in ``H^3(F_n, Z/2)``.
With ``k`` quadratically closed, ``(t_i).(t_i) = (t_i).(-1) = 0``, so the
degree 3 symbols live in the exterior algebra ``wedge^3 F_2^n`` and the
invariant is the trilinear expansion of the three indicator vectors.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exact_linalg import glnz_generators

Triple = tuple[frozenset[int], frozenset[int], frozenset[int]]


@dataclass(frozen=True)
class ExteriorElement:
    """A degree 3 element of ``wedge F_2^n``: a set of 3-subsets of ``{1..n}``."""

    n: int
    terms: frozenset[tuple[int, int, int]]

    def __post_init__(self) -> None:
        terms = frozenset(tuple(sorted(t)) for t in self.terms)
        for t in terms:
            if len(set(t)) != 3 or not all(1 <= i <= self.n for i in t):
                raise ValueError(f"bad basis element {t}")
        object.__setattr__(self, "terms", terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: ExteriorElement) -> ExteriorElement:
        if self.n != other.n:
            raise ValueError("different ambient dimensions")
        return ExteriorElement(self.n, self.terms ^ other.terms)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return sorted(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join("e" + "".join(str(i) for i in t) for t in self.sorted_terms())


def wedge3(n: int, u: Iterable[int], v: Iterable[int], w: Iterable[int]) -> ExteriorElement:
    """``u ^ v ^ w`` for vectors given by their supports (coefficients in F_2)."""
    acc: set[tuple[int, int, int]] = set()
    for i in u:
        for j in v:
            for k in w:
                if len({i, j, k}) == 3:
                    acc ^= {tuple(sorted((i, j, k)))}
    return ExteriorElement(n, frozenset(acc))


def rost_invariant(triple: Sequence[Iterable[int]], n: int | None = None) -> ExteriorElement:
    sets = [frozenset(s) for s in triple]
    if len(sets) != 3:
        raise ValueError("need three subsets")
    if n is None:
        n = max((max(s) for s in sets if s), default=0)
    if n < 1:
        raise ValueError("n must be >= 1")
    return wedge3(n, *sets)


@dataclass(frozen=True)
class G2Class:
    """``triple`` is ``None`` for the trivial class."""

    n: int
    triple: Triple | None

    def invariant(self) -> ExteriorElement:
        if self.triple is None:
            return ExteriorElement(self.n, frozenset())
        return rost_invariant(self.triple, self.n)

    def __str__(self) -> str:
        if self.triple is None:
            return "trivial"
        return "(" + ", ".join("t" + "t".join(str(i) for i in sorted(s)) for s in self.triple) + ")"


def block_triples(n: int) -> list[Triple]:
    """Triples of nonempty subsets with ``max I1 < min I2`` and ``max I2 < min I3``."""
    out = []
    for u in range(3, n + 1):
        for support in itertools.combinations(range(1, n + 1), u):
            # cut the sorted support into three consecutive nonempty blocks
            for a, b in itertools.combinations(range(1, u), 2):
                out.append((frozenset(support[:a]), frozenset(support[a:b]), frozenset(support[b:])))
    out.sort(key=lambda t: tuple(tuple(sorted(s)) for s in t))
    return out


def block_triple_count(n: int) -> int:
    return sum(math.comb(n, u) * math.comb(u - 1, 2) for u in range(3, n + 1))


def classify_g2(n: int) -> list[G2Class]:
    """The trivial class followed by the block-ordered triples.

    Raises if two block triples share a Rost invariant.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    classes = [G2Class(n, None)] + [G2Class(n, t) for t in block_triples(n)]
    seen = set()
    for c in classes:
        inv = c.invariant()
        if inv in seen:
            raise ValueError(f"two classes share the invariant {inv}")
        seen.add(inv)
    return classes


def all_invariants(n: int) -> set[ExteriorElement]:
    """Every Rost invariant of a triple of subsets of ``{1..n}`` (brute force)."""
    if n < 1:
        return {ExteriorElement(0, frozenset())}
    subsets = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(1, n + 1), k)]
    return {rost_invariant(t, n) for t in itertools.product(subsets, repeat=3)}


@dataclass(frozen=True)
class CompletenessReport:
    n: int
    block_classes: int
    nonzero_invariants: int

    @property
    def complete(self) -> bool:
        return self.block_classes == self.nonzero_invariants


def completeness_report(n: int) -> CompletenessReport:
    """Compare block triples with the exhaustive set of nonzero invariants."""
    return CompletenessReport(n, len(block_triples(n)), sum(1 for e in all_invariants(n) if not e.is_zero()))


def _act(g: tuple[tuple[int, ...], ...], e: ExteriorElement) -> ExteriorElement:
    # g acts on F_2^n through its columns: e_j -> sum_i g_ij e_i
    n = e.n
    cols = [frozenset(i + 1 for i in range(n) if g[i][j] % 2) for j in range(n)]
    acc = ExteriorElement(n, frozenset())
    for a, b, c in e.terms:
        acc = acc + wedge3(n, cols[a - 1], cols[b - 1], cols[c - 1])
    return acc


def glnz_quotient_g2(n: int) -> list[G2Class]:
    """Orbit representatives of ``GL_n(Z)`` (through ``GL_n(F_2)``) on the classes.

    The action on invariants is ``wedge^3`` of the reduction mod 2.  Each
    orbit is represented by its first class in :func:`classify_g2` order.
    """
    classes = classify_g2(n)
    if n < 3:
        return classes[:1]
    gens = [tuple(tuple(x % 2 for x in r) for r in g.rows) for g in glnz_generators(n)]
    by_inv = {c.invariant(): i for i, c in enumerate(classes)}
    where: dict[ExteriorElement, int] = {}
    reps = []
    for c in classes:
        inv = c.invariant()
        if inv in where:
            continue
        where[inv] = len(reps)
        reps.append(c)
        queue = deque([inv])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = _act(g, x)
                if y not in where:
                    where[y] = where[inv]
                    queue.append(y)
    # every class must land in an orbit that was discovered
    if any(inv not in where for inv in by_inv):
        raise AssertionError("orbit search missed a class")
    return reps
