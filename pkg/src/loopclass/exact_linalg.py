"""Exact linear algebra over the integers and over ``Z/m``.

Everything here works with Python integers, so there is no overflow and no
floating point.  The main pieces are:

* :class:`IntMatrix`, a small immutable integer matrix,
* :func:`smith_normal_form` with its transformation matrices,
* :class:`FinAb` (finite abelian groups in elementary divisor form), their
  elements and homomorphisms,
* :func:`hom_kernel_image_cokernel`,
* :func:`glnz_generators` and :func:`alternating_divisors`.

>>> smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))[1].diagonal()
(2, 4)
>>> FinAb.from_orders([2, 3, 4])
FinAb(divisors=(2, 12))
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Sequence, TypeVar

T = TypeVar("T", bound=Hashable)


class InvariantViolation(RuntimeError):
    """An internal consistency check failed (a bug, not a bad input)."""


# ---------------------------------------------------------------------------
# integer matrices


@dataclass(frozen=True)
class IntMatrix:
    """Immutable rectangular matrix with arbitrary precision integer entries."""

    nrows: int
    ncols: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise ValueError("matrix is not rectangular")
        for r in self.rows:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise TypeError(f"non-integer entry {x!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols needed for a matrix with no rows")
            ncols = len(rows[0])
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]], nrows: int) -> IntMatrix:
        return cls.from_rows([[c[i] for c in cols] for i in range(nrows)], ncols=len(cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls(nrows, ncols, tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def diag(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls(n, n, tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.ncols, self.nrows, tuple(self.columns()))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return IntMatrix(
            self.nrows,
            other.ncols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows),
        )

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(
            self.nrows, self.ncols,
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
        )

    def __neg__(self) -> IntMatrix:
        return self.scale(-1)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix(self.nrows, self.ncols, tuple(tuple(k * a for a in r) for r in self.rows))

    def mod(self, m: int) -> IntMatrix:
        return IntMatrix(self.nrows, self.ncols, tuple(tuple(a % m for a in r) for r in self.rows))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def det(self) -> int:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        return _bareiss_det([list(r) for r in self.rows])

    def is_unimodular(self) -> bool:
        return self.nrows == self.ncols and self.det() in (1, -1)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"


def _bareiss_det(a: list[list[int]]) -> int:
    # fraction-free elimination; every intermediate division is exact
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_inverse(m: IntMatrix) -> list[list[Fraction]]:
    """Inverse over Q by Gauss-Jordan elimination."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError("not square")
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.rows)]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            raise ValueError("singular matrix")
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [r[n:] for r in a]


def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    inv = rational_inverse(m)
    if any(x.denominator != 1 for r in inv for x in r):
        raise ValueError("matrix is not unimodular")
    return IntMatrix.from_rows([[int(x) for x in r] for r in inv], ncols=m.ncols)


def _rational_apply(inv: list[list[Fraction]], v: Sequence[int]) -> tuple[int, ...]:
    out = []
    for r in inv:
        x = sum((a * b for a, b in zip(r, v)), Fraction(0))
        if x.denominator != 1:
            raise ValueError("vector is not in the lattice")
        out.append(int(x))
    return tuple(out)


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``D = U @ m @ V`` in Smith normal form.

    ``U`` and ``V`` are unimodular and the diagonal of ``D`` is nonnegative
    with each entry dividing the next (zeros last).
    """
    r, c = m.nrows, m.ncols
    a = [list(row) for row in m.rows]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, k: int) -> None:
        # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, k: int) -> None:
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(r, c)):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            restart = False
            for i in range(t + 1, r):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        swap_rows(i, t)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, c):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(j, t)
                        restart = True
                        break
            if restart:
                continue
            p = a[t][t]
            bad = next((i for i in range(t + 1, r) for j in range(t + 1, c) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return (
        IntMatrix.from_rows(u, ncols=r),
        IntMatrix.from_rows(a, ncols=c),
        IntMatrix.from_rows(v, ncols=c),
    )


def lattice_basis(gens: IntMatrix) -> IntMatrix:
    """Basis (as columns) of the lattice spanned by the columns of ``gens``.

    The lattice must have full rank ``gens.nrows``.
    """
    u, d, _ = smith_normal_form(gens)
    n = gens.nrows
    diag = d.diagonal()
    if len(diag) < n or any(x == 0 for x in diag[:n]):
        raise ValueError("lattice does not have full rank")
    uinv = unimodular_inverse(u)
    return uinv @ IntMatrix.diag(list(diag[:n]))


def integer_kernel(m: IntMatrix) -> IntMatrix:
    """Columns spanning ``{x in Z^c : m x = 0}``."""
    _, d, v = smith_normal_form(m)
    rank = sum(1 for x in d.diagonal() if x)
    cols = [v.column(j) for j in range(rank, m.ncols)]
    return IntMatrix.from_columns(cols, m.ncols)


def hstack(*ms: IntMatrix) -> IntMatrix:
    nrows = ms[0].nrows
    if any(x.nrows != nrows for x in ms):
        raise ValueError("row count mismatch")
    rows = tuple(tuple(itertools.chain.from_iterable(x.rows[i] for x in ms)) for i in range(nrows))
    return IntMatrix(nrows, sum(x.ncols for x in ms), rows)


# ---------------------------------------------------------------------------
# finite abelian groups


@dataclass(frozen=True)
class FinAb:
    """Finite abelian group ``Z/d1 + ... + Z/dk`` with ``1 < d1 | d2 | ... | dk``.

    The trivial group has an empty divisor chain.  Two instances are equal
    exactly when the groups are isomorphic.
    """

    divisors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        ds = tuple(int(d) for d in self.divisors)
        object.__setattr__(self, "divisors", ds)
        if any(d < 2 for d in ds):
            raise ValueError(f"divisors must be >= 2: {ds}")
        if any(b % a for a, b in zip(ds, ds[1:])):
            raise ValueError(f"divisors do not form a chain: {ds}")

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> FinAb:
        """Canonical form of a direct sum of cyclic groups of the given orders."""
        return cls.from_presentation(list(orders))[0]

    @classmethod
    def from_presentation(cls, moduli: Sequence[int]) -> tuple[FinAb, IntMatrix]:
        """Canonicalize ``Z/e1 + ... + Z/er``; also return the coordinate change.

        The second value maps a coordinate vector of the presentation to the
        canonical coordinates of the returned group.
        """
        if any(e < 1 for e in moduli):
            raise ValueError("moduli must be positive")
        return quotient_group(IntMatrix.diag(list(moduli)) if moduli else IntMatrix.zeros(0, 0))

    @property
    def rank(self) -> int:
        return len(self.divisors)

    @property
    def order(self) -> int:
        return math.prod(self.divisors)

    @property
    def exponent(self) -> int:
        return self.divisors[-1] if self.divisors else 1

    def reduce(self, coords: Sequence[int]) -> tuple[int, ...]:
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        return tuple(int(x) % d for x, d in zip(coords, self.divisors))

    def element(self, coords: Sequence[int]) -> FinAbElement:
        return FinAbElement(self, self.reduce(coords))

    def zero(self) -> FinAbElement:
        return FinAbElement(self, (0,) * self.rank)

    def gens(self) -> list[FinAbElement]:
        return [self.element([int(i == j) for j in range(self.rank)]) for i in range(self.rank)]

    def coordinate_vectors(self) -> Iterator[tuple[int, ...]]:
        """All elements as reduced coordinate tuples, in lexicographic order."""
        return itertools.product(*(range(d) for d in self.divisors))

    def elements(self) -> Iterator[FinAbElement]:
        for c in self.coordinate_vectors():
            yield FinAbElement(self, c)

    def direct_sum(self, other: FinAb) -> FinAb:
        return FinAb.from_orders(self.divisors + other.divisors)

    def __str__(self) -> str:
        if not self.divisors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.divisors)


@dataclass(frozen=True)
class FinAbElement:
    group: FinAb
    coords: tuple[int, ...]

    def _check(self, other: FinAbElement) -> None:
        if not isinstance(other, FinAbElement) or other.group != self.group:
            raise TypeError("elements belong to different groups")

    def __add__(self, other: FinAbElement) -> FinAbElement:
        self._check(other)
        return self.group.element([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: FinAbElement) -> FinAbElement:
        self._check(other)
        return self.group.element([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> FinAbElement:
        return self.group.element([-a for a in self.coords])

    def __mul__(self, k: int) -> FinAbElement:
        return self.group.element([k * a for a in self.coords])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def order(self) -> int:
        o = 1
        for a, d in zip(self.coords, self.group.divisors):
            o = math.lcm(o, d // math.gcd(a, d))
        return o


def quotient_group(relations: IntMatrix) -> tuple[FinAb, IntMatrix]:
    """The group ``Z^g / (column span of relations)`` and the projection onto it.

    The projection is a ``rank x g`` matrix sending a vector of ``Z^g`` to
    canonical coordinates (to be reduced modulo the divisors).
    """
    g = relations.nrows
    u, d, _ = smith_normal_form(relations)
    diag = list(d.diagonal()) + [0] * (g - min(g, relations.ncols))
    if any(x == 0 for x in diag):
        raise ValueError("relations do not define a finite group")
    keep = [i for i, x in enumerate(diag) if x != 1]
    group = FinAb(tuple(diag[i] for i in keep))
    proj = IntMatrix.from_rows([u.rows[i] for i in keep], ncols=g)
    return group, proj


@dataclass(frozen=True)
class FinAbHom:
    """Homomorphism given by an integer matrix acting on coordinate columns.

    Column ``j`` is the image of the ``j``-th generator of the domain.  Row
    ``i`` is reduced modulo the ``i``-th divisor of the codomain.
    """

    domain: FinAb
    codomain: FinAb
    matrix: IntMatrix

    def __post_init__(self) -> None:
        m = self.matrix
        if m.shape != (self.codomain.rank, self.domain.rank):
            raise ValueError(f"matrix shape {m.shape} does not fit {self.domain} -> {self.codomain}")
        cd = self.codomain.divisors
        red = IntMatrix(m.nrows, m.ncols, tuple(tuple(x % cd[i] for x in r) for i, r in enumerate(m.rows)))
        object.__setattr__(self, "matrix", red)
        for j, dj in enumerate(self.domain.divisors):
            if any((dj * red.rows[i][j]) % cd[i] for i in range(red.nrows)):
                raise ValueError("matrix does not define a homomorphism")

    @classmethod
    def identity(cls, g: FinAb) -> FinAbHom:
        return cls(g, g, IntMatrix.identity(g.rank))

    @classmethod
    def scalar(cls, g: FinAb, k: int) -> FinAbHom:
        return cls(g, g, IntMatrix.identity(g.rank).scale(k))

    @classmethod
    def zero(cls, dom: FinAb, cod: FinAb) -> FinAbHom:
        return cls(dom, cod, IntMatrix.zeros(cod.rank, dom.rank))

    def __call__(self, x: FinAbElement | Sequence[int]) -> FinAbElement:
        if isinstance(x, FinAbElement):
            if x.group != self.domain:
                raise TypeError("element is not in the domain")
            x = x.coords
        return self.codomain.element(self.matrix.apply(self.domain.reduce(x)))

    def __matmul__(self, other: FinAbHom) -> FinAbHom:
        """Composition ``self o other``."""
        if other.codomain != self.domain:
            raise TypeError("cannot compose: codomain/domain mismatch")
        return FinAbHom(other.domain, self.codomain, self.matrix @ other.matrix)

    def __add__(self, other: FinAbHom) -> FinAbHom:
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise TypeError("cannot add homomorphisms between different groups")
        return FinAbHom(self.domain, self.codomain, self.matrix + other.matrix)

    def __sub__(self, other: FinAbHom) -> FinAbHom:
        return self + other.scaled(-1)

    def scaled(self, k: int) -> FinAbHom:
        return FinAbHom(self.domain, self.codomain, self.matrix.scale(k))

    def is_endomorphism(self) -> bool:
        return self.domain == self.codomain

    def is_automorphism(self) -> bool:
        if not self.is_endomorphism():
            return False
        return hom_kernel_image_cokernel(self)[0].order == 1

    def inverse(self) -> FinAbHom:
        if not self.is_automorphism():
            raise ValueError("not an automorphism")
        ident = FinAbHom.identity(self.domain)
        prev, cur = ident, self
        while cur != ident:
            prev, cur = cur, cur @ self
        return prev


def hom_kernel_image_cokernel(f: FinAbHom) -> tuple[FinAb, FinAb, FinAb]:
    """Kernel, image and cokernel of ``f``, each in canonical form."""
    a, b = f.domain.rank, f.codomain.rank
    cod = IntMatrix.diag(list(f.codomain.divisors)) if b else IntMatrix.zeros(0, 0)
    dom = IntMatrix.diag(list(f.domain.divisors)) if a else IntMatrix.zeros(0, 0)
    cokernel = quotient_group(hstack(f.matrix, cod))[0] if b else FinAb()
    if a == 0:
        return FinAb(), FinAb(), cokernel
    lb = preimage_lattice(f.matrix, f.codomain.divisors)
    x = IntMatrix.from_rows(
        [[int(v) for v in r] for r in _rational_matmul(rational_inverse(lb), dom)], ncols=a
    )
    kernel = quotient_group(x)[0]
    image = quotient_group(lb)[0]
    return kernel, image, cokernel


def _rational_matmul(a: list[list[Fraction]], b: IntMatrix) -> list[list[Fraction]]:
    cols = b.columns()
    out = [[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols] for r in a]
    if any(x.denominator != 1 for r in out for x in r):
        raise InvariantViolation("sublattice is not contained in the lattice")
    return out


def preimage_lattice(a: IntMatrix, moduli: Sequence[int]) -> IntMatrix:
    """Basis of ``{x in Z^n : a x = 0 mod moduli}`` (full rank, as columns)."""
    n = a.ncols
    if a.nrows == 0:
        return IntMatrix.identity(n)
    big = hstack(a, IntMatrix.diag(list(moduli)))
    ker = integer_kernel(big)
    gens = IntMatrix.from_rows([ker.rows[i] for i in range(n)], ncols=ker.ncols)
    return lattice_basis(gens)


class Subquotient:
    """The group ``L / K`` for lattices ``K <= L <= Z^a`` with ``L`` of full rank.

    Used for cohomology: ``L`` holds cocycles and ``K`` coboundaries plus the
    relations of the cochain group.  Representatives of the canonical
    generators are chosen through the Smith normal form, so they are
    deterministic.
    """

    def __init__(self, lattice: IntMatrix, sub_gens: IntMatrix):
        self.lattice = lattice
        self._linv = rational_inverse(lattice)
        x = IntMatrix.from_rows(
            [[int(v) for v in r] for r in _rational_matmul(self._linv, sub_gens)],
            ncols=sub_gens.ncols,
        )
        u, d, _ = smith_normal_form(x)
        a = lattice.nrows
        diag = list(d.diagonal()) + [0] * (a - min(a, x.ncols))
        if any(v == 0 for v in diag):
            raise ValueError("subquotient is infinite")
        keep = [i for i, v in enumerate(diag) if v != 1]
        self.group = FinAb(tuple(diag[i] for i in keep))
        self._u = IntMatrix.from_rows([u.rows[i] for i in keep], ncols=a)
        uinv = unimodular_inverse(u)
        reps = lattice @ uinv
        self.representatives = tuple(reps.column(i) for i in keep)

    def contains(self, v: Sequence[int]) -> bool:
        try:
            _rational_apply(self._linv, v)
        except ValueError:
            return False
        return True

    def coordinates(self, v: Sequence[int]) -> tuple[int, ...]:
        """Canonical coordinates of the class of ``v`` (which must lie in ``L``)."""
        y = _rational_apply(self._linv, v)
        return self.group.reduce(self._u.apply(y))


# ---------------------------------------------------------------------------
# GL_n(Z) and orbit utilities


def glnz_generators(n: int) -> list[IntMatrix]:
    """A generating set of ``GL_n(Z)``.

    For ``n = 2`` these are ``-I``, ``diag(1, -1)``, the transvection
    ``[[1, 1], [0, 1]]`` and the swap.  In general: a sign flip, one
    elementary transvection, a transposition and an ``n``-cycle.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return [IntMatrix.from_rows([[-1]])]
    if n == 2:
        return [IntMatrix.from_rows(r) for r in (
            [[-1, 0], [0, -1]], [[1, 0], [0, -1]], [[1, 1], [0, 1]], [[0, 1], [1, 0]],
        )]
    ident = IntMatrix.identity(n).tolist()
    flip = [r[:] for r in ident]
    flip[0][0] = -1
    trans = [r[:] for r in ident]
    trans[0][1] = 1
    swap = [r[:] for r in ident]
    swap[0], swap[1] = swap[1], swap[0]
    cycle = [[int(i == (j + 1) % n) for j in range(n)] for i in range(n)]
    return [IntMatrix.from_rows(m) for m in (flip, trans, swap, cycle)]


Mat = tuple[tuple[int, ...], ...]


def matmul_mod(a: Mat, b: Mat, m: int) -> Mat:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) % m for c in cols) for r in a)


def matrix_group_closure(gens: Sequence[IntMatrix], m: int) -> set[Mat]:
    """All products of ``gens`` reduced modulo ``m`` (breadth first search)."""
    gs = [g.mod(m).rows for g in gens]
    n = gens[0].nrows
    ident = IntMatrix.identity(n).mod(m).rows
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gs:
            y = matmul_mod(g, x, m)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def bfs_orbits(points: Iterable[T], maps: Sequence[Callable[[T], T]]) -> list[list[T]]:
    """Partition ``points`` into orbits of the group generated by ``maps``.

    ``maps`` must be bijections of the point set (so forward closure is
    enough).  Orbits are sorted and listed by their smallest element.
    """
    pts = sorted(points)
    where: dict[T, int] = {}
    orbits: list[list[T]] = []
    for p in pts:
        if p in where:
            continue
        idx = len(orbits)
        where[p] = idx
        orbit = [p]
        queue = deque([p])
        while queue:
            x = queue.popleft()
            for f in maps:
                y = f(x)
                if y not in where:
                    where[y] = idx
                    orbit.append(y)
                    queue.append(y)
                elif where[y] != idx:
                    raise InvariantViolation("maps do not preserve the point set partition")
        orbits.append(sorted(orbit))
    return orbits


# ---------------------------------------------------------------------------
# alternating forms


def _symplectic_blocks(b: list[list[int]]) -> list[int]:
    """Congruence-reduce an integer alternating matrix to blocks ``c_i J``.

    Returns the positive block values ``c_i`` (the zero part is dropped).
    No divisibility normalization is done; callers only need the multiset
    of block orders modulo ``m``.
    """
    a = [r[:] for r in b]
    n = len(a)

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for r in a:
            r[i], r[j] = r[j], r[i]

    def add(dst: int, src: int, k: int) -> None:
        # basis change e_dst += k e_src, applied as a congruence
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        for r in a:
            r[dst] += k * r[src]

    blocks = []
    s = 0
    while s + 1 < n:
        best = None
        for i in range(s, n):
            for j in range(i + 1, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap(s, best[0])
        swap(s + 1, best[1])
        while True:
            p = a[s][s + 1]
            for k in range(s + 2, n):
                if a[s][k]:
                    add(k, s + 1, -(a[s][k] // p))
                if a[s + 1][k]:
                    add(k, s, a[s + 1][k] // p)
            rest = [(i, k) for i in (s, s + 1) for k in range(s + 2, n) if a[i][k]]
            if not rest:
                break
            i, k = min(rest, key=lambda ik: abs(a[ik[0]][ik[1]]))
            # bring the smaller entry to the pivot slot
            if i == s:
                swap(s + 1, k)
            else:
                swap(s, k)
                swap(s, s + 1)
        blocks.append(abs(a[s][s + 1]))
        s += 2
    return blocks


def alternating_divisors(b: IntMatrix, m: int) -> tuple[int, ...]:
    """Divisor chain ``(s_1, ..., s_l)`` of an alternating form with values in ``Z/m``.

    The form is ``(x, y) -> x^T b y mod m``.  Modulo its radical the lattice
    becomes ``(Z/s_1)^2 + ... + (Z/s_l)^2`` with the pairing a sum of
    hyperbolic planes; the chain lists the ``s_j`` ascending, without 1s.

    >>> alternating_divisors(IntMatrix.from_rows([[0, 1], [-1, 0]]), 2)
    (2,)
    """
    n = b.nrows
    if b.ncols != n:
        raise ValueError("form matrix must be square")
    for i in range(n):
        if b[i, i] % m:
            raise ValueError("form is not alternating")
        for j in range(n):
            if (b[i, j] + b[j, i]) % m:
                raise ValueError("form is not skew-symmetric")
    lift = [[(b[i, j] % m if i < j else -(b[j, i] % m)) if i != j else 0 for j in range(n)] for i in range(n)]
    orders = [m // math.gcd(c, m) for c in _symplectic_blocks(lift)]
    return FinAb.from_orders(orders).divisors
