"""Quadratic forms over ``R_n = k[t1^+-1, ..., tn^+-1]`` with ``k`` quadratically closed.

Every unit of ``k`` is a square, so a diagonal form is a multiset of
monomials ``t_I`` (``I`` a subset of ``{1..n}``).  Since ``-1`` is a square,
``<t_I, t_I>`` is a hyperbolic plane.  Iterating Springer's theorem over
``k((t_1))...((t_n))`` shows that the form with the duplicates cancelled
is anisotropic, so the Witt class is the set ``T`` of subsets occurring an
odd number of times plus the number of hyperbolic planes.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable


def all_subsets(n: int) -> list[frozenset[int]]:
    """Subsets of ``{1..n}`` ordered by size, then lexicographically."""
    return [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(1, n + 1), k)]


def _subset_key(s: frozenset[int]) -> tuple[int, tuple[int, ...]]:
    return (len(s), tuple(sorted(s)))


@dataclass(frozen=True)
class LaurentDiagonalForm:
    """``<t_I1, ..., t_Id>`` over ``R_n``; ``entries`` is kept sorted."""

    n: int
    entries: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        ents = tuple(sorted((frozenset(e) for e in self.entries), key=_subset_key))
        for e in ents:
            if any(not 1 <= i <= self.n for i in e):
                raise ValueError(f"subset {sorted(e)} is not inside 1..{self.n}")
        object.__setattr__(self, "entries", ents)

    @classmethod
    def of(cls, n: int, *entries: Iterable[int]) -> LaurentDiagonalForm:
        return cls(n, tuple(frozenset(e) for e in entries))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "<" + ", ".join(monomial(e) for e in self.entries) + ">"


def monomial(s: frozenset[int]) -> str:
    return "t" + "t".join(str(i) for i in sorted(s)) if s else "1"


@dataclass(frozen=True)
class WittClass:
    anisotropic_part: frozenset[frozenset[int]]
    hyperbolic_rank: int

    @property
    def dim(self) -> int:
        return len(self.anisotropic_part) + 2 * self.hyperbolic_rank

    def sorted_part(self) -> list[frozenset[int]]:
        return sorted(self.anisotropic_part, key=_subset_key)

    def __str__(self) -> str:
        parts = [monomial(e) for e in self.sorted_part()]
        s = "<" + ", ".join(parts) + ">" if parts else ""
        if self.hyperbolic_rank:
            s += (" + " if s else "") + f"H^{self.hyperbolic_rank}"
        return s or "0"


def springer_normal_form(q: LaurentDiagonalForm) -> WittClass:
    counts = Counter(q.entries)
    t = frozenset(s for s, c in counts.items() if c % 2)
    v = sum(c // 2 for c in counts.values())
    return WittClass(t, v)


def is_isometric(q1: LaurentDiagonalForm, q2: LaurentDiagonalForm) -> bool:
    if q1.n != q2.n:
        raise ValueError("forms over different rings")
    return q1.dim == q2.dim and springer_normal_form(q1) == springer_normal_form(q2)


def classify_od(d: int, n: int) -> list[WittClass]:
    """All isometry classes of ``d``-dimensional diagonal forms over ``R_n``."""
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")
    subsets = all_subsets(n)
    out = []
    for j in range(d % 2, min(d, len(subsets)) + 1, 2):
        for t in itertools.combinations(subsets, j):
            out.append(WittClass(frozenset(t), (d - j) // 2))
    return out


def count_od(d: int, n: int) -> int:
    """Closed form ``sum_{j = d mod 2, j <= min(d, 2^n)} C(2^n, j)``."""
    m = 2 ** n
    return sum(math.comb(m, j) for j in range(d % 2, min(d, m) + 1, 2))


def parametrization_count(d: int, n: int) -> int:
    """Size of the index set of the ``S``-indexed parametrization.

    That index set consists of the subsets ``S`` of ``{1..n}`` with
    ``|S| <= d`` and ``|S|`` of the parity of ``d``.  It is reported next to
    :func:`count_od` for comparison; the two differ in general (for
    ``d = 2, n = 1`` it gives 1 while there are 2 classes).
    """
    return sum(math.comb(n, j) for j in range(d % 2, min(d, n) + 1, 2))


def parametrization_dimension(s_size: int, d: int) -> int:
    """Dimension of ``(perp_{I in S} <t_I>) + H^(m - |S|/2)`` read literally.

    The orthogonal sum over all ``I`` contained in ``S`` has ``2^|S|``
    terms, so with ``d = 2m`` the total is ``2^|S| + 2m - |S|``.
    """
    return 2 ** s_size + d - s_size


@dataclass(frozen=True)
class CountReport:
    d: int
    n: int
    classes: int
    closed_form: int
    parametrization_index_count: int
    parametrization_dimension_ok: bool

    @property
    def discrepancy(self) -> bool:
        return self.parametrization_index_count != self.classes or not self.parametrization_dimension_ok


def count_report(d: int, n: int) -> CountReport:
    classes = len(classify_od(d, n))
    sizes = range(d % 2, min(d, n) + 1, 2)
    ok = all(parametrization_dimension(s, d) == d for s in sizes)
    return CountReport(d, n, classes, count_od(d, n), parametrization_count(d, n), ok)


# ---------------------------------------------------------------------------
# residue oracle (Springer's theorem applied one variable at a time)


def residue_forms(q: LaurentDiagonalForm) -> tuple[LaurentDiagonalForm, LaurentDiagonalForm]:
    """First and second residue forms with respect to ``t_n`` (over ``R_{n-1}``)."""
    if q.n < 1:
        raise ValueError("no variable left")
    first = tuple(e for e in q.entries if q.n not in e)
    second = tuple(e - {q.n} for e in q.entries if q.n in e)
    return LaurentDiagonalForm(q.n - 1, first), LaurentDiagonalForm(q.n - 1, second)


def residue_isometric(q1: LaurentDiagonalForm, q2: LaurentDiagonalForm) -> bool:
    """Isometry decided recursively through residue forms.

    Forms of equal dimension are isometric iff they are Witt equivalent.
    Over ``K((t))`` the two residue maps identify the Witt group with
    ``W(K) + W(K)``, and over ``k`` the Witt class is the parity of the
    dimension.  No cancellation of duplicate entries is used here.
    """
    if q1.n != q2.n:
        raise ValueError("forms over different rings")
    if q1.dim != q2.dim:
        return False
    return _witt_equal(q1, q2)


def _witt_equal(q1: LaurentDiagonalForm, q2: LaurentDiagonalForm) -> bool:
    # Witt equivalence over k((t_1))...((t_n)): residue forms must be Witt equivalent
    if q1.n == 0:
        return q1.dim % 2 == q2.dim % 2
    a1, b1 = residue_forms(q1)
    a2, b2 = residue_forms(q2)
    return _witt_equal(a1, a2) and _witt_equal(b1, b2)


def residue_isotropic(q: LaurentDiagonalForm) -> bool:
    """Isotropy over ``k((t_1))...((t_n))``: isotropic iff some residue form is."""
    if q.n == 0:
        return q.dim >= 2
    a, b = residue_forms(q)
    return residue_isotropic(a) or residue_isotropic(b)


def diagonal_forms(d: int, n: int) -> list[LaurentDiagonalForm]:
    """Every diagonal form of dimension ``d`` (as multisets of subsets)."""
    subsets = all_subsets(n)
    return [LaurentDiagonalForm(n, c) for c in itertools.combinations_with_replacement(subsets, d)]


def form_of(w: WittClass, n: int) -> LaurentDiagonalForm:
    """A diagonal representative: the anisotropic part plus ``<1, 1>`` per hyperbolic plane."""
    entries: list[frozenset[int]] = w.sorted_part() + [frozenset()] * (2 * w.hyperbolic_rank)
    return LaurentDiagonalForm(n, tuple(entries))
