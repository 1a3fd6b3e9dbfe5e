"""Loop Azumaya algebras of degree ``d`` over ``R_n``.

Irreducible loop classes come from finite abelian subgroups of ``PGL_d``
conjugate to a Mumford group ``H(s_1, ..., s_l)``: the product over blocks
of ``(Z/s_j)^2``, generated by a cyclic shift ``a_j`` and a diagonal
``b_j = diag(1, z, ..., z^(s_j - 1))``.  A loop class is then a generating
``n``-tuple in ``H`` and its normal form is ``A(r_1, s_1, 1, s_2, ...)``.

Roots of unity are handled as exact phases in ``Q/Z``: ``Fraction(p, q)``
stands for ``exp(2 pi i p / q)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from .exact_linalg import FinAb, FinAbElement, IntMatrix, alternating_divisors, bfs_orbits, glnz_generators, hstack, quotient_group


def _mod1(x: Fraction) -> Fraction:
    return x - math.floor(x)


@dataclass(frozen=True)
class MonomialMatrix:
    """``M e_j = exp(2 pi i phases[j]) e_perm[j]`` (0-based)."""

    perm: tuple[int, ...]
    phases: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(len(self.perm))) or len(self.phases) != len(self.perm):
            raise ValueError("not a monomial matrix")
        object.__setattr__(self, "phases", tuple(_mod1(Fraction(p)) for p in self.phases))

    @property
    def size(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, d: int) -> MonomialMatrix:
        return cls(tuple(range(d)), (Fraction(0),) * d)

    @classmethod
    def shift(cls, s: int) -> MonomialMatrix:
        return cls(tuple((j + 1) % s for j in range(s)), (Fraction(0),) * s)

    @classmethod
    def clock(cls, s: int) -> MonomialMatrix:
        return cls(tuple(range(s)), tuple(Fraction(k, s) for k in range(s)))

    def __matmul__(self, other: MonomialMatrix) -> MonomialMatrix:
        if self.size != other.size:
            raise ValueError("size mismatch")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.size))
        phases = tuple(self.phases[other.perm[j]] + other.phases[j] for j in range(self.size))
        return MonomialMatrix(perm, phases)

    def inverse(self) -> MonomialMatrix:
        perm = [0] * self.size
        phases = [Fraction(0)] * self.size
        for j, i in enumerate(self.perm):
            perm[i] = j
            phases[i] = -self.phases[j]
        return MonomialMatrix(tuple(perm), tuple(phases))

    def power(self, k: int) -> MonomialMatrix:
        base = self if k >= 0 else self.inverse()
        out = MonomialMatrix.identity(self.size)
        for _ in range(abs(k)):
            out = out @ base
        return out

    def kron(self, other: MonomialMatrix) -> MonomialMatrix:
        m = other.size
        perm, phases = [], []
        for i in range(self.size):
            for k in range(m):
                perm.append(self.perm[i] * m + other.perm[k])
                phases.append(self.phases[i] + other.phases[k])
        return MonomialMatrix(tuple(perm), tuple(phases))

    def scalar_ratio(self, other: MonomialMatrix) -> Fraction | None:
        """``c`` with ``self = exp(2 pi i c) other``, or ``None``."""
        if self.perm != other.perm:
            return None
        diffs = {_mod1(p - q) for p, q in zip(self.phases, other.phases)}
        return diffs.pop() if len(diffs) == 1 else None

    def to_sympy(self) -> sympy.Matrix:
        m = sympy.zeros(self.size, self.size)
        for j, (i, p) in enumerate(zip(self.perm, self.phases)):
            m[i, j] = sympy.exp(2 * sympy.pi * sympy.I * sympy.Rational(p.numerator, p.denominator))
        return m


def _check_chain(chain: Sequence[int]) -> tuple[int, ...]:
    chain = tuple(int(s) for s in chain)
    if not chain:
        raise ValueError("empty chain")
    if chain[0] < 2 or any(b % a for a, b in zip(chain, chain[1:])):
        raise ValueError(f"chain {chain} must satisfy 2 <= s_1 | s_2 | ...")
    return chain


def mumford_generators(chain: Sequence[int], d: int) -> list[tuple[MonomialMatrix, MonomialMatrix]]:
    """``(a_j, b_j)`` for each block, embedded block-diagonally into ``M_d``."""
    chain = _check_chain(chain)
    prod = math.prod(chain)
    if d % prod:
        raise ValueError(f"product of {chain} does not divide {d}")
    pad = MonomialMatrix.identity(d // prod)
    out = []
    for j, s in enumerate(chain):
        pair = []
        for core in (MonomialMatrix.shift(s), MonomialMatrix.clock(s)):
            m = MonomialMatrix.identity(1)
            for k, t in enumerate(chain):
                m = m.kron(core if k == j else MonomialMatrix.identity(t))
            pair.append(m.kron(pad))
        out.append((pair[0], pair[1]))
    return out


Element = Sequence[int] | FinAbElement


def _coords(x: Element) -> tuple[int, ...]:
    return tuple(x.coords) if isinstance(x, FinAbElement) else tuple(int(c) for c in x)


@dataclass(frozen=True)
class MumfordDatum:
    """``H(s_1, ..., s_l)``; coordinates are ``(alpha_1, beta_1, alpha_2, ...)``."""

    chain: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "chain", _check_chain(self.chain))

    @property
    def l(self) -> int:
        return len(self.chain)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(s for s in self.chain for _ in range(2))

    @property
    def group(self) -> FinAb:
        return FinAb(self.moduli)

    @property
    def exponent(self) -> int:
        return self.chain[-1]

    def basis(self) -> list[tuple[int, ...]]:
        return [tuple(int(i == k) for i in range(2 * self.l)) for k in range(2 * self.l)]

    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(m) for m in self.moduli)))

    def pairing(self, x: Element, y: Element) -> Fraction:
        """``<x, y>``, defined by ``lift(y) lift(x) = e(<x, y>) lift(x) lift(y)``."""
        x, y = _coords(x), _coords(y)
        total = Fraction(0)
        for j, s in enumerate(self.chain):
            a, b, a2, b2 = x[2 * j], x[2 * j + 1], y[2 * j], y[2 * j + 1]
            total += Fraction(a * b2 - b * a2, s)
        return _mod1(total)

    def lift(self, x: Element, d: int | None = None) -> MonomialMatrix:
        x = _coords(x)
        gens = mumford_generators(self.chain, d or math.prod(self.chain))
        m = MonomialMatrix.identity(gens[0][0].size)
        for j, (a, b) in enumerate(gens):
            m = m @ a.power(x[2 * j]) @ b.power(x[2 * j + 1])
        return m

    def monomial_pairing(self, x: Element, y: Element, d: int | None = None) -> Fraction:
        """The pairing read off the commutator of monomial lifts."""
        lx, ly = self.lift(x, d), self.lift(y, d)
        c = (ly @ lx).scalar_ratio(lx @ ly)
        if c is None:
            raise ValueError("lifts do not commute up to a scalar")
        return c

    def pairing_matrix(self, xs: Sequence[Element]) -> IntMatrix:
        m = self.exponent
        return IntMatrix.from_rows([[int(self.pairing(x, y) * m) for y in xs] for x in xs])

    def generates(self, xs: Sequence[Element]) -> bool:
        cols = [list(_coords(x)) for x in xs]
        rank = 2 * self.l
        gens = IntMatrix.from_columns(cols, nrows=rank) if cols else IntMatrix.zeros(rank, 0)
        q, _ = quotient_group(hstack(gens, IntMatrix.diag(list(self.moduli))))
        return q.order == 1


def is_irreducible(datum: MumfordDatum, d: int) -> bool:
    if d % math.prod(datum.chain):
        raise ValueError(f"H{datum.chain} does not embed in PGL_{d}")
    return math.prod(datum.chain) == d


def _radical_trivial(datum: MumfordDatum) -> bool:
    basis = datum.basis()
    return alternating_divisors(datum.pairing_matrix(basis), datum.exponent) == datum.chain


def is_irreducible_by_pairing(datum: MumfordDatum, d: int) -> bool:
    """Nondegenerate pairing and ``|H| = d^2``, checked without the product formula."""
    return _radical_trivial(datum) and datum.group.order == d * d


@dataclass(frozen=True)
class BrusselForm:
    """``A(r_1, s_1, 1, s_2, ..., 1, s_l)`` in ``n`` variables."""

    n: int
    chain: tuple[int, ...]
    r1: int

    def __post_init__(self) -> None:
        chain = _check_chain(self.chain)
        object.__setattr__(self, "chain", chain)
        if 2 * len(chain) > self.n:
            raise ValueError("need l <= n/2")
        s1 = chain[0]
        if math.gcd(self.r1, s1) != 1:
            raise ValueError("r_1 must be a unit mod s_1")
        r = self.r1 % s1
        object.__setattr__(self, "r1", 1 if 2 * len(chain) < self.n else min(r, s1 - r))

    @property
    def degree(self) -> int:
        return math.prod(self.chain)

    def pairs(self) -> list[tuple[int, int]]:
        return [(self.r1 if j == 0 else 1, s) for j, s in enumerate(self.chain)]

    def primary_components(self) -> dict[int, tuple[int, ...]]:
        """For each prime ``p | d``, the ``p``-parts of the chain (1s dropped)."""
        out = {}
        for p in sympy.primefactors(self.degree):
            parts = []
            for s in self.chain:
                q = 1
                while s % (q * p) == 0:
                    q *= p
                if q > 1:
                    parts.append(q)
            out[p] = tuple(parts)
        return out

    def __str__(self) -> str:
        return "A(" + ",".join(f"{r},{s}" for r, s in self.pairs()) + ")"


def wedge_invariant(datum: MumfordDatum, xs: Sequence[Element]) -> int:
    """``det`` of the ``2l x 2l`` coordinate matrix, reduced mod ``s_1``."""
    if len(xs) != 2 * datum.l:
        raise ValueError("the wedge invariant needs exactly 2l elements")
    return IntMatrix.from_rows([list(_coords(x)) for x in xs]).det() % datum.chain[0]


def brussel_normal_form(datum: MumfordDatum, xs: Sequence[Element]) -> BrusselForm:
    """Normal form of the loop class of a generating ``n``-tuple in ``H``."""
    xs = list(xs)
    if not datum.generates(xs):
        raise ValueError("tuple does not generate the group; decompose the algebra first")
    chain = alternating_divisors(datum.pairing_matrix(xs), datum.exponent)
    n = len(xs)
    if 2 * len(chain) < n:
        return BrusselForm(n, chain, 1)
    s1 = chain[0]
    delta = wedge_invariant(datum, xs)
    return BrusselForm(n, chain, pow(delta, -1, s1) if s1 > 1 else 1)


@dataclass(frozen=True)
class PresentationBlock:
    i: int
    j: int
    q: int
    p: int

    def __str__(self) -> str:
        y = f"t{self.j}" if self.p == 1 else f"t{self.j}^{self.p}"
        z = "-XY" if self.q == 2 else f"zeta_{self.q} XY"
        return f"(X^{self.q} = t{self.i}, Y^{self.q} = {y}, YX = {z})"


@dataclass(frozen=True)
class Presentation:
    blocks: tuple[PresentationBlock, ...]

    def __str__(self) -> str:
        return " (x) ".join(str(b) for b in self.blocks)


def cyclic_presentation(form: BrusselForm | Sequence[tuple[int, int]]) -> Presentation:
    """Tensor factors ``(t_{2j-1}, t_{2j})^{r_j}_{s_j}``.

    Accepts a normal form or a raw list of ``(r_j, s_j)`` pairs.
    """
    pairs = form.pairs() if isinstance(form, BrusselForm) else list(form)
    return Presentation(tuple(PresentationBlock(2 * j + 1, 2 * j + 2, s, r % s) for j, (r, s) in enumerate(pairs)))


# ---------------------------------------------------------------------------
# brute force equivalence of loop classes


def _act_glnz(g: IntMatrix, xs: tuple[tuple[int, ...], ...], moduli) -> tuple[tuple[int, ...], ...]:
    # new_i = sum_j g_ij x_j
    n = len(xs)
    return tuple(
        tuple(sum(g.rows[i][j] * xs[j][k] for j in range(n)) % moduli[k] for k in range(len(moduli)))
        for i in range(n)
    )


def pairing_preserving_automorphisms(datum: MumfordDatum) -> list[tuple[tuple[int, ...], ...]]:
    """Every automorphism of ``H`` preserving the pairing, as images of the basis."""
    basis = datum.basis()
    elems = datum.elements()
    target = [[datum.pairing(x, y) for y in basis] for x in basis]
    out = []
    for images in itertools.product(elems, repeat=len(basis)):
        # well defined on (Z/s_j)^2: s_j kills the image of each block basis vector
        if any(any((datum.chain[k // 2] * c) % m for c, m in zip(images[k], datum.moduli)) for k in range(len(basis))):
            continue
        if all(datum.pairing(images[a], images[b]) == target[a][b] for a in range(len(basis)) for b in range(a + 1, len(basis))):
            if datum.generates(images):
                out.append(tuple(images))
    return out


def _apply_aut(u, x: tuple[int, ...], moduli) -> tuple[int, ...]:
    return tuple(sum(x[k] * u[k][i] for k in range(len(x))) % moduli[i] for i in range(len(moduli)))


def brute_force_classes(datum: MumfordDatum, n: int) -> list[list[tuple[tuple[int, ...], ...]]]:
    """Orbits of generating ``n``-tuples under ``GL_n(Z)`` and pairing-preserving automorphisms."""
    moduli = datum.moduli
    tuples = [t for t in itertools.product(datum.elements(), repeat=n) if datum.generates(t)]
    maps = [lambda t, g=g: _act_glnz(g, t, moduli) for g in glnz_generators(n)]
    maps += [lambda t, u=u: tuple(_apply_aut(u, x, moduli) for x in t) for u in pairing_preserving_automorphisms(datum)]
    return bfs_orbits(tuples, maps)


def irreducible_data(d: int, n: int) -> list[MumfordDatum]:
    """Chains with product ``d`` that fit in ``n`` variables."""
    out = []

    def rec(prefix: list[int], rest: int) -> None:
        if rest == 1:
            if prefix and 2 * len(prefix) <= n:
                out.append(MumfordDatum(tuple(prefix)))
            return
        lo = prefix[-1] if prefix else 2
        for s in range(lo, rest + 1):
            if rest % s == 0 and (not prefix or s % prefix[-1] == 0):
                rec(prefix + [s], rest // s)

    rec([], d)
    return out


# ---------------------------------------------------------------------------
# degree 2 multiloop oracle


def _eigenspace(ops: Sequence[sympy.Matrix], signs: Sequence[int]) -> list[sympy.Matrix]:
    stacked = sympy.Matrix.vstack(*(op - s * sympy.eye(4) for op, s in zip(ops, signs)))
    return [sympy.Matrix(2, 2, list(v)) for v in stacked.nullspace()]


def _ad(m: sympy.Matrix) -> sympy.Matrix:
    # x -> m x m^-1 on M_2, in the basis E11, E12, E21, E22 (row-major vec)
    inv = m.inv()
    cols = []
    for k in range(4):
        e = sympy.zeros(2, 2)
        e[k // 2, k % 2] = 1
        cols.append(list(m * e * inv))
    return sympy.Matrix(cols).T


def multiloop_generators_d2(xs: Sequence[Element]) -> tuple[tuple[sympy.Matrix, tuple[Fraction, ...]], tuple[sympy.Matrix, tuple[Fraction, ...]]]:
    """``X, Y`` in the multiloop algebra of ``M_2`` twisted by the lifted pair.

    Elements are ``(matrix, exponent of t)``; ``X`` spans the eigenspace on
    which the first automorphism acts by ``-1`` (and the second trivially),
    scaled so that ``X^2 = t_1``; likewise ``Y``.
    """
    datum = MumfordDatum((2,))
    if len(xs) != 2:
        raise ValueError("need a pair")
    if not datum.generates(xs):
        raise ValueError("tuple does not generate the group")
    ops = [_ad(datum.lift(x).to_sympy()) for x in xs]
    gens = []
    for e in ((1, 0), (0, 1)):
        space = _eigenspace(ops, [(-1) ** k for k in e])
        if len(space) != 1:
            raise ValueError("eigenspace is not a line")
        v = space[0]
        sq = sympy.simplify(v * v)
        c = sq[0, 0]
        if sq != c * sympy.eye(2) or c == 0:
            raise ValueError("generator does not square to a scalar")
        gens.append((sympy.simplify(v / sympy.sqrt(c)), tuple(Fraction(k, 2) for k in e)))
    return gens[0], gens[1]


def _mul(p, q):
    return (sympy.simplify(p[0] * q[0]), tuple(a + b for a, b in zip(p[1], q[1])))


def multiloop_oracle_d2(xs: Sequence[Element]) -> bool:
    """Check ``X^2 = t_1``, ``Y^2 = t_2`` and ``YX = -XY`` exactly."""
    x, y = multiloop_generators_d2(xs)
    one = sympy.eye(2)
    x2, y2 = _mul(x, x), _mul(y, y)
    yx, xy = _mul(y, x), _mul(x, y)
    ok = (x2 == (one, (1, 0))) and (y2 == (one, (0, 1)))
    ok = ok and yx[1] == xy[1] and sympy.simplify(yx[0] + xy[0]) == sympy.zeros(2, 2)
    if not ok:
        raise AssertionError("quaternion relations fail in the multiloop algebra")
    return True


# ---------------------------------------------------------------------------
# nullity one over the reals

REAL_CLASS_LABELS = ("0+0", "0+chi_C/R", "[(-1,-1)]+0", "[(-1,-1)]+chi_C/R")

# quaternion algebras listed for d = 2 alongside the four classes
D2_QUATERNION_LIST = ("(1,1)", "(1,t)", "(-1,-1)", "(-1,t)")


def real_nullity1_table(d: int) -> list[str]:
    """Brauer classes ``Br(R) + H^1(R, Q/Z)`` of loop ``PGL_d``-torsors over ``R[t^+-1]``."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return [REAL_CLASS_LABELS[0]] if d % 2 else list(REAL_CLASS_LABELS)


def quaternion_class(a: str, b: str) -> str:
    """Class of the quaternion algebra ``(a, b)`` over ``R((t))``, ``a, b`` in ``{1, -1, t, -t}``.

    Computed by bilinearity of symbols with ``(t, t) = (-1, t)``: the
    ``Br(R)`` part is ``(u, v)`` for the unit parts and the residue is the
    class of ``u^n v^m (-1)^(mn)`` for ``a = u t^m``, ``b = v t^n``.
    """

    def split(x: str) -> tuple[int, int]:
        x = x.strip()
        u = -1 if x.startswith("-") else 1
        x = x.lstrip("+-")
        if x not in ("1", "t"):
            raise ValueError(f"unsupported entry {x!r}")
        return u, int(x == "t")

    (u, m), (v, n) = split(a), split(b)
    brauer = u == -1 and v == -1
    residue = (u ** n) * (v ** m) * (-1) ** (m * n) == -1
    return REAL_CLASS_LABELS[2 * brauer + residue]
