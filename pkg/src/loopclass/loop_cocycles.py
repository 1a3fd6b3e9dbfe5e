"""Loop cocycles over an algebraically closed field.

Such a cocycle with values in a finite group ``G`` is a homomorphism
``Z^n -> G``, i.e. an ``n``-tuple of pairwise commuting elements.  Two of them
give the same class when the tuples are conjugate.  ``GL_n(Z)`` acts by
precomposition: the matrix ``g`` sends ``(x_1, ..., x_n)`` to the tuple whose
``i``-th entry is ``prod_j x_j^{g_ij}``.  With this rule acting by ``g`` and
then by ``h`` is the same as acting by ``hg``.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .exact_linalg import IntMatrix, glnz_generators


class FiniteGroup:
    """A finite group stored by its multiplication table.

    Elements are arbitrary hashable labels; internally they are indexed by
    position in ``elements`` (sorted by label when the labels are sortable).
    """

    def __init__(self, elements: Sequence[Hashable], table: Sequence[Sequence[int]], name: str = "", check: bool = True):
        self.elements = tuple(elements)
        self.name = name
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate element labels")
        self._table = tuple(tuple(r) for r in table)
        n = len(self.elements)
        if len(self._table) != n or any(len(r) != n for r in self._table):
            raise ValueError("table has the wrong shape")
        ident = [i for i in range(n) if all(self._table[i][j] == j for j in range(n))]
        if not ident:
            raise ValueError("no identity element")
        self._e = ident[0]
        self._inv = []
        for i in range(n):
            inv = [j for j in range(n) if self._table[i][j] == self._e]
            if len(inv) != 1 or self._table[inv[0]][i] != self._e:
                raise ValueError("element without a two-sided inverse")
            self._inv.append(inv[0])
        if check:
            self._check_associative()

    def _check_associative(self) -> None:
        # Light's test: it is enough to check (x g) y = x (g y) for g in a generating set
        t = self._table
        gens: list[int] = []
        span = {self._e}
        for g in range(len(self.elements)):
            if g not in span:
                gens.append(g)
                span = self._closure_indices(gens)
        n = len(self.elements)
        for g in gens:
            for x in range(n):
                xg = t[x][g]
                for y in range(n):
                    if t[xg][y] != t[x][t[g][y]]:
                        raise ValueError("multiplication is not associative")

    def _closure_indices(self, gens: Sequence[int]) -> set[int]:
        seen = {self._e}
        queue = deque([self._e])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self._table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    # constructors -------------------------------------------------------

    @classmethod
    def from_mul(cls, elements: Iterable[Hashable], mul: Callable, name: str = "") -> FiniteGroup:
        els = list(elements)
        try:
            els.sort()
        except TypeError:
            pass
        index = {e: i for i, e in enumerate(els)}
        table = [[index[mul(a, b)] for b in els] for a in els]
        return cls(els, table, name)

    @classmethod
    def from_permutations(cls, gens: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
        """Group generated by permutations of ``range(k)`` given as image tuples.

        Products compose right to left: ``(p * q)(x) = p(q(x))``.
        """
        gens = [tuple(g) for g in gens]
        k = len(gens[0]) if gens else 0
        ident = tuple(range(k))

        def mul(p, q):
            return tuple(p[x] for x in q)

        seen = {ident}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = mul(g, x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        els = sorted(seen)
        index = {e: i for i, e in enumerate(els)}
        table = [[index[mul(a, b)] for b in els] for a in els]
        return cls(els, table, name, check=False)

    @classmethod
    def trivial(cls) -> FiniteGroup:
        return cls([0], [[0]], "1", check=False)

    @classmethod
    def cyclic(cls, m: int) -> FiniteGroup:
        return cls(list(range(m)), [[(a + b) % m for b in range(m)] for a in range(m)], f"Z/{m}", check=False)

    @classmethod
    def symmetric(cls, k: int) -> FiniteGroup:
        gens = []
        if k >= 2:
            gens.append(tuple([1, 0] + list(range(2, k))))
            gens.append(tuple(list(range(1, k)) + [0]))
        return cls.from_permutations(gens or [tuple(range(k))], f"S{k}")

    @classmethod
    def direct_product(cls, g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
        els = list(itertools.product(g.elements, h.elements))
        return cls.from_mul(els, lambda a, b: (g.mul(a[0], b[0]), h.mul(a[1], b[1])), f"{g.name}x{h.name}")

    # arithmetic ---------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Hashable:
        return self.elements[self._e]

    def index(self, x: Hashable) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise ValueError(f"{x!r} is not an element of {self.name or 'the group'}") from None

    def __contains__(self, x: Hashable) -> bool:
        return x in self._index

    def mul(self, a: Hashable, b: Hashable) -> Hashable:
        return self.elements[self._table[self._index[a]][self._index[b]]]

    def inv(self, a: Hashable) -> Hashable:
        return self.elements[self._inv[self._index[a]]]

    def power(self, a: Hashable, k: int) -> Hashable:
        if k < 0:
            a, k = self.inv(a), -k
        out = self.identity
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def conj(self, g: Hashable, x: Hashable) -> Hashable:
        """``g x g^-1``."""
        return self.mul(self.mul(g, x), self.inv(g))

    def element_order(self, a: Hashable) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    @property
    def exponent(self) -> int:
        e = 1
        for a in self.elements:
            e = math.lcm(e, self.element_order(a))
        return e

    def commute(self, a: Hashable, b: Hashable) -> bool:
        return self.mul(a, b) == self.mul(b, a)

    def centralizer(self, xs: Iterable[Hashable]) -> list[Hashable]:
        xs = list(xs)
        return [g for g in self.elements if all(self.commute(g, x) for x in xs)]

    def conjugacy_classes(self) -> list[list[Hashable]]:
        seen: set = set()
        out = []
        for x in self.elements:
            if x in seen:
                continue
            cls_ = sorted({self.conj(g, x) for g in self.elements}, key=self.index)
            seen.update(cls_)
            out.append(cls_)
        return out

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


@dataclass(frozen=True)
class LoopClass:
    """A tuple of pairwise commuting elements of ``target``."""

    target: FiniteGroup
    tuple: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "tuple", tuple(self.tuple))
        for x in self.tuple:
            self.target.index(x)
        for a, b in itertools.combinations(self.tuple, 2):
            if not self.target.commute(a, b):
                raise ValueError(f"entries {a!r} and {b!r} do not commute")

    @property
    def n(self) -> int:
        return len(self.tuple)

    def key(self) -> tuple[int, ...]:
        return tuple(self.target.index(x) for x in self.tuple)

    def conjugated(self, g: Hashable) -> LoopClass:
        return LoopClass(self.target, tuple(self.target.conj(g, x) for x in self.tuple))

    def canonical(self) -> LoopClass:
        """The conjugate with the smallest index tuple."""
        g = self.target
        best = min(tuple(g.index(g.conj(h, x)) for x in self.tuple) for h in g.elements)
        return LoopClass(g, tuple(g.elements[i] for i in best))

    def act(self, m: IntMatrix) -> LoopClass:
        """Base change by ``m`` in ``GL_n(Z)``: entry ``i`` becomes ``prod_j x_j^{m_ij}``."""
        if m.shape != (self.n, self.n):
            raise ValueError("matrix size does not match the tuple length")
        g = self.target
        out = []
        for i in range(self.n):
            y = g.identity
            for j in range(self.n):
                y = g.mul(y, g.power(self.tuple[j], m[i, j]))
            out.append(y)
        return LoopClass(g, tuple(out))


def are_conjugate(c1: LoopClass, c2: LoopClass) -> bool:
    if c1.target is not c2.target:
        raise ValueError("classes live in different groups")
    if c1.n != c2.n:
        raise ValueError("tuples have different lengths")
    g = c1.target
    return any(all(g.conj(h, x) == y for x, y in zip(c1.tuple, c2.tuple)) for h in g.elements)


def commuting_tuples(g: FiniteGroup, n: int) -> list[tuple]:
    """Every ``n``-tuple of pairwise commuting elements, in index order."""
    out: list[tuple] = []

    def extend(prefix: tuple, pool: list) -> None:
        if len(prefix) == n:
            out.append(prefix)
            return
        for x in pool:
            extend(prefix + (x,), [y for y in pool if g.commute(x, y)])

    extend((), list(g.elements))
    return out


def classify_commuting_tuples(g: FiniteGroup, n: int) -> list[LoopClass]:
    """One representative (the canonical one) per conjugacy class of tuples."""
    seen: dict[tuple[int, ...], LoopClass] = {}
    for t in commuting_tuples(g, n):
        c = LoopClass(g, t)
        k = c.key()
        if k in seen:
            continue
        canon = c.canonical()
        seen.setdefault(canon.key(), canon)
    return [seen[k] for k in sorted(seen)]


def glnz_orbit_partition(classes: Sequence[LoopClass], n: int) -> list[list[LoopClass]]:
    """Orbits of ``GL_n(Z)`` on conjugacy classes, found by breadth first search."""
    gens = glnz_generators(n)
    canon = {c.canonical().key(): c.canonical() for c in classes}
    where: dict[tuple[int, ...], int] = {}
    orbits: list[list[LoopClass]] = []
    for k in sorted(canon):
        if k in where:
            continue
        idx = len(orbits)
        where[k] = idx
        members = [canon[k]]
        queue = deque([canon[k]])
        while queue:
            c = queue.popleft()
            for m in gens:
                d = c.act(m).canonical()
                dk = d.key()
                if dk not in canon:
                    raise ValueError("class list is not closed under GL_n(Z)")
                if dk not in where:
                    where[dk] = idx
                    members.append(d)
                    queue.append(d)
        orbits.append(sorted(members, key=LoopClass.key))
    return orbits


def glnz_orbits(classes: Sequence[LoopClass], n: int) -> list[LoopClass]:
    """One representative per ``GL_n(Z)``-orbit (the member with the smallest key)."""
    return [orbit[0] for orbit in glnz_orbit_partition(classes, n)]
