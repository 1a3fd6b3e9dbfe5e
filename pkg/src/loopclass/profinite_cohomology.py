"""Cohomology of ``Z^n`` (equivalently of its profinite completion) with finite coefficients.

A :class:`ZnModule` is a finite abelian group with ``n`` commuting
automorphisms ``sigma_1, ..., sigma_n``.  Its cohomology is computed from the
Koszul complex on the operators ``sigma_j - 1``: the degree ``i`` cochains
are indexed by ``i``-subsets ``S`` of ``{0, ..., n-1}`` and the differential
sends the ``S`` component to the ``S + {j}`` component with the sign
``(-1)^#{s in S : s < j}``.  Degree 0 gives the invariants and degree ``n``
the coinvariants ``M / sum_j (sigma_j - 1) M``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .exact_linalg import (
    FinAb,
    FinAbHom,
    IntMatrix,
    Subquotient,
    hstack,
    preimage_lattice,
)


@dataclass(frozen=True)
class ZnModule:
    group: FinAb
    sigmas: tuple[FinAbHom, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigmas", tuple(self.sigmas))
        for s in self.sigmas:
            if s.domain != self.group or s.codomain != self.group:
                raise ValueError("action maps must be endomorphisms of the module")
            if not s.is_automorphism():
                raise ValueError("action maps must be invertible")
        for s, t in itertools.combinations(self.sigmas, 2):
            if s @ t != t @ s:
                raise ValueError("action maps do not commute")

    @classmethod
    def trivial(cls, group: FinAb, n: int) -> ZnModule:
        return cls(group, tuple(FinAbHom.identity(group) for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.sigmas)

    def cochain_moduli(self, i: int) -> tuple[int, ...]:
        return self.group.divisors * math.comb(self.n, i)

    def cochain_order(self, i: int) -> int:
        return self.group.order ** math.comb(self.n, i)

    def differential(self, i: int) -> IntMatrix:
        """Integer matrix of ``d^i : C^i -> C^{i+1}`` on lifted coordinates."""
        n, r = self.n, self.group.rank
        src = list(itertools.combinations(range(n), i))
        dst = list(itertools.combinations(range(n), i + 1))
        rows = [[0] * (r * len(src)) for _ in range(r * len(dst))]
        pos = {s: k for k, s in enumerate(src)}
        for t_idx, t in enumerate(dst):
            for j in t:
                s = tuple(x for x in t if x != j)
                sign = -1 if sum(1 for x in s if x < j) % 2 else 1
                op = (self.sigmas[j].matrix - IntMatrix.identity(r)).scale(sign)
                s_idx = pos[s]
                for a in range(r):
                    for b in range(r):
                        rows[t_idx * r + a][s_idx * r + b] += op[a, b]
        return IntMatrix.from_rows(rows, ncols=r * len(src))


@dataclass(frozen=True, eq=False)
class CohomologyGroup:
    """``H^i`` of a :class:`ZnModule` together with cocycle representatives.

    ``representatives[k]`` is a cochain (a flat coordinate tuple over the
    ``i``-subsets, in lexicographic order) whose class is the ``k``-th
    canonical generator of ``group``.
    """

    module: ZnModule
    degree: int
    group: FinAb
    representatives: tuple[tuple[int, ...], ...]
    _sq: Subquotient = field(repr=False)

    def is_cocycle(self, cochain: Sequence[int]) -> bool:
        return self._sq.contains(cochain)

    def class_of(self, cochain: Sequence[int]) -> tuple[int, ...]:
        """Coordinates in ``group`` of the class of a cocycle."""
        if not self._sq.contains(cochain):
            raise ValueError("cochain is not a cocycle")
        return self._sq.coordinates(cochain)


def koszul_cohomology(m: ZnModule, i: int) -> CohomologyGroup:
    if not 0 <= i <= m.n:
        raise ValueError(f"degree {i} out of range 0..{m.n}")
    moduli = m.cochain_moduli(i)
    size = len(moduli)
    if i < m.n:
        lattice = preimage_lattice(m.differential(i), m.cochain_moduli(i + 1))
    else:
        lattice = IntMatrix.identity(size)
    rel = IntMatrix.diag(list(moduli))
    sub = hstack(m.differential(i - 1), rel) if i > 0 else rel
    if size == 0:
        sq = Subquotient(IntMatrix.identity(0), IntMatrix.zeros(0, 0))
    else:
        sq = Subquotient(lattice, sub)
    reps = tuple(tuple(x % e for x, e in zip(v, moduli)) for v in sq.representatives)
    return CohomologyGroup(m, i, sq.group, reps, sq)


def _check_automorphism(m: ZnModule, u: FinAbHom) -> None:
    if u.domain != m.group or u.codomain != m.group or not u.is_automorphism():
        raise ValueError("u must be an automorphism of the module's group")


def _induced(h: CohomologyGroup, cochain_map) -> FinAbHom:
    cols = [h.class_of(cochain_map(v)) for v in h.representatives]
    return FinAbHom(h.group, h.group, IntMatrix.from_columns(cols, h.group.rank))


def _blockwise(u: FinAbHom, copies: int):
    r = u.domain.rank

    def apply(v: Sequence[int]) -> tuple[int, ...]:
        out: list[int] = []
        for k in range(copies):
            out.extend(u.matrix.apply(v[k * r:(k + 1) * r]))
        return tuple(out)

    return apply


def equivariant_action_on_h(m: ZnModule, i: int, u: FinAbHom) -> FinAbHom:
    """Automorphism of ``H^i(m)`` induced by a module automorphism ``u``.

    ``u`` must commute with every ``sigma_j``; it then acts componentwise on
    cochains and commutes with the differentials.
    """
    _check_automorphism(m, u)
    for s in m.sigmas:
        if u @ s != s @ u:
            raise ValueError("u does not commute with the action")
    h = koszul_cohomology(m, i)
    return _induced(h, _blockwise(u, math.comb(m.n, i)))


def compound_matrix(g: IntMatrix, k: int) -> IntMatrix:
    """``k``-th exterior power of ``g`` in the basis of sorted ``k``-subsets."""
    subsets = list(itertools.combinations(range(g.nrows), k))
    rows = []
    for rs in subsets:
        rows.append([
            IntMatrix.from_rows([[g[a, b] for b in cs] for a in rs], ncols=k).det() if k else 1
            for cs in subsets
        ])
    return IntMatrix.from_rows(rows, ncols=len(subsets))


def glnz_action_on_h2(m: ZnModule, g: IntMatrix) -> FinAbHom:
    """Action of ``g`` in ``GL_2(Z)`` on ``H^2`` for a trivial module.

    With trivial coefficients the Koszul complex has zero differentials and
    ``H^i = Hom(wedge^i Z^n, M)``.  Pulling back along ``g`` acts on degree
    ``i`` cochains through the transposed ``i``-th compound matrix of ``g``.
    """
    if m.n != 2:
        raise ValueError("defined for n = 2")
    if any(s != FinAbHom.identity(m.group) for s in m.sigmas):
        raise ValueError("module action must be trivial")
    if g.shape != (2, 2) or not g.is_unimodular():
        raise ValueError("g must lie in GL_2(Z)")
    return glnz_pullback(m, 2, g)


def glnz_pullback(m: ZnModule, i: int, g: IntMatrix) -> FinAbHom:
    """Pullback along ``g`` on ``H^i`` of a module with trivial action."""
    if g.shape != (m.n, m.n) or not g.is_unimodular():
        raise ValueError("g must lie in GL_n(Z)")
    h = koszul_cohomology(m, i)
    c = compound_matrix(g, i).transpose()
    r = m.group.rank
    nsub = c.nrows

    def pull(v: Sequence[int]) -> tuple[int, ...]:
        blocks = [v[k * r:(k + 1) * r] for k in range(nsub)]
        out: list[int] = []
        for s in range(nsub):
            out.extend(sum(c[s, t] * blocks[t][a] for t in range(nsub)) for a in range(r))
        return tuple(out)

    return _induced(h, pull)


def base_change_action_on_top(m: ZnModule, g: IntMatrix, u: FinAbHom) -> FinAbHom:
    """Action of a pair ``(g, u)`` on ``H^2`` of a twisted module (``n = 2``).

    The pair must be compatible: ``u`` carries the action of ``g``
    transported module back to ``m``, i.e. ``u sigma'_i u^-1 = sigma_i`` where
    ``sigma'_i = prod_j sigma_j^{g_ij}``.  On the top degree, which is the
    coinvariants, the pair acts as ``det(g) * u`` (the orientation character
    of ``Z^2`` times the coefficient map).
    """
    if m.n != 2:
        raise ValueError("defined for n = 2")
    if g.shape != (2, 2) or not g.is_unimodular():
        raise ValueError("g must lie in GL_2(Z)")
    _check_automorphism(m, u)
    moved = transported_action(m, g)
    uinv = u.inverse()
    for s, t in zip(moved, m.sigmas):
        if u @ s @ uinv != t:
            raise ValueError("u is not compatible with g")
    h = koszul_cohomology(m, 2)
    return _induced(h, _blockwise(u.scaled(g.det()), 1))


def _power(f: FinAbHom, k: int) -> FinAbHom:
    if k < 0:
        f, k = f.inverse(), -k
    out = FinAbHom.identity(f.domain)
    for _ in range(k):
        out = out @ f
    return out


def transported_action(m: ZnModule, g: IntMatrix) -> tuple[FinAbHom, ...]:
    """The operators ``sigma'_i = prod_j sigma_j^{g_ij}``."""
    out = []
    for i in range(m.n):
        op = FinAbHom.identity(m.group)
        for j in range(m.n):
            op = op @ _power(m.sigmas[j], g[i, j])
        out.append(op)
    return tuple(out)
