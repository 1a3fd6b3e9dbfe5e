"""Anisotropic loop classes in nullity 3 for ``F4``, ``E7`` (simply connected) and ``E8``.

Each of these groups contains a rank zero subgroup ``(Z/d)^3`` (unique up
to conjugacy) for the listed values of ``d``, whose normalizer acts on it
through ``SL_3(Z/d)``.  Anisotropic loop classes are then surjections
``Z^3 -> (Z/d)^3`` up to ``SL_3(Z/d)``, i.e. the cosets
``GL_3(Z/d) / SL_3(Z/d)`` indexed by the determinant.  The class with
determinant ``i`` is the one of ``(t1, t2, t3^i)``.

Dividing further by ``GL_3(Z)`` multiplies the determinant by ``+-1``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .exact_linalg import bfs_orbits, glnz_generators

LEGAL_DATA = (("F4", 3), ("E7", 4), ("E8", 5), ("E8", 6))

# counts of GL_3(Z)-orbits stated in the reference classification, kept for comparison
REFERENCE_QUOTIENT_COUNTS = {"F4": 1, "E7": 1, "E8": 2}


@dataclass(frozen=True)
class SL3Descriptor:
    """``SL_3(Z/d)``, described rather than enumerated."""

    d: int

    def order(self) -> int:
        return _sl3_order(self.d)

    def contains(self, m: tuple[tuple[int, ...], ...]) -> bool:
        return _det3(m) % self.d == 1 % self.d


def _primes(d: int) -> list[int]:
    out, p = [], 2
    while p * p <= d:
        if d % p == 0:
            out.append(p)
            while d % p == 0:
                d //= p
        p += 1
    if d > 1:
        out.append(d)
    return out


def _sl3_order(d: int) -> int:
    # |SL_3(Z/p^k)| = p^(8(k-1)) (p^3 - 1)(p^3 - p)(p^3 - p^2) / (p - 1), multiplicative in d
    o = 1
    for p in _primes(d):
        k = 0
        m = d
        while m % p == 0:
            m //= p
            k += 1
        o *= p ** (8 * (k - 1)) * (p ** 3 - 1) * (p ** 3 - p) * (p ** 3 - p ** 2) // (p - 1)
    return o


@dataclass(frozen=True)
class RankZeroDatum:
    group_type: str
    d: int

    def __post_init__(self) -> None:
        if (self.group_type, self.d) not in LEGAL_DATA:
            raise ValueError(f"no rank zero datum ({self.group_type}, {self.d})")

    @property
    def weyl_image(self) -> SL3Descriptor:
        return SL3Descriptor(self.d)


@dataclass(frozen=True)
class Rank3Class:
    datum: RankZeroDatum
    unit: int

    def __post_init__(self) -> None:
        if math.gcd(self.unit, self.datum.d) != 1:
            raise ValueError("unit must be invertible")

    def __str__(self) -> str:
        e = "" if self.unit == 1 else f"^{self.unit}"
        return f"f_{{{self.datum.d},*}}(t1, t2, t3{e})"


def data_for(group_type: str) -> list[RankZeroDatum]:
    out = [RankZeroDatum(t, d) for t, d in LEGAL_DATA if t == group_type]
    if not out:
        raise ValueError(f"type must be one of F4, E7, E8 (got {group_type!r})")
    return out


def units(d: int) -> list[int]:
    return [u for u in range(1, d) if math.gcd(u, d) == 1] if d > 1 else [0]


def classify_rank3(group_type: str) -> list[Rank3Class]:
    return [Rank3Class(dt, u) for dt in data_for(group_type) for u in units(dt.d)]


def _det3(m) -> int:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def brute_force_sl3_orbits(d: int) -> list[list[tuple[tuple[int, ...], ...]]]:
    """Orbits of ``SL_3(Z/d)`` acting by left multiplication on ``GL_3(Z/d)``.

    ``SL_3(Z/d)`` is generated by the elementary transvections, which is all
    the search uses; the answer is independent of the determinant formula.
    """
    mats = []
    for entries in itertools.product(range(d), repeat=9):
        m = (entries[0:3], entries[3:6], entries[6:9])
        if math.gcd(_det3(m), d) == 1:
            mats.append(m)

    def transvection(i: int, j: int):
        def apply(m):
            rows = [list(r) for r in m]
            rows[i] = [(a + b) % d for a, b in zip(rows[i], rows[j])]
            return tuple(tuple(r) for r in rows)

        return apply

    gens = [transvection(i, j) for i in range(3) for j in range(3) if i != j]
    return bfs_orbits(mats, gens)


@dataclass(frozen=True)
class QuotientResult:
    group_type: str
    orbits: tuple[tuple[Rank3Class, ...], ...]
    reference_count: int

    @property
    def representatives(self) -> list[Rank3Class]:
        return [o[0] for o in self.orbits]

    @property
    def discrepancy(self) -> bool:
        return len(self.orbits) != self.reference_count

    def note(self) -> str:
        if not self.discrepancy:
            return ""
        return f"computed {len(self.orbits)} orbits; reference lists {self.reference_count}"


def _formula_orbits(dt: RankZeroDatum) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for u in units(dt.d):
        if u in seen:
            continue
        orbit = sorted({u, (-u) % dt.d})
        seen.update(orbit)
        out.append(orbit)
    return out


def _bfs_orbits(dt: RankZeroDatum) -> list[list[int]]:
    # g sends the class of f to the class of f o g, whose determinant is det(g) det(f)
    dets = [g.det() for g in glnz_generators(3)]
    return bfs_orbits(units(dt.d), [lambda u, s=s: (s * u) % dt.d for s in dets])


def glnz_quotient_rank3(group_type: str) -> QuotientResult:
    """``GL_3(Z)``-orbits, computed from the formula and by search (they must agree)."""
    orbits = []
    for dt in data_for(group_type):
        a, b = _formula_orbits(dt), _bfs_orbits(dt)
        if a != b:
            raise AssertionError(f"orbit computations disagree for d = {dt.d}: {a} vs {b}")
        orbits.extend(tuple(Rank3Class(dt, u) for u in o) for o in a)
    return QuotientResult(group_type, tuple(orbits), REFERENCE_QUOTIENT_COUNTS[group_type])
