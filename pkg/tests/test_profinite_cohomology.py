import pytest
from hypothesis import given, settings, strategies as st

from loopclass.exact_linalg import FinAb, FinAbHom, IntMatrix, glnz_generators
from loopclass.loop_cocycles import FiniteGroup
from loopclass.profinite_cohomology import (
    ZnModule,
    base_change_action_on_top,
    compound_matrix,
    equivariant_action_on_h,
    glnz_action_on_h2,
    koszul_cohomology,
)
from loopclass.root_catalog import D4_NONZERO, SimpleType, lookup


def hom(group, rows):
    return FinAbHom(group, group, IntMatrix.from_rows(rows, ncols=group.rank))


def _span(group, vectors):
    # subgroup generated by vectors, by closure
    seen = {group.reduce([0] * group.rank)}
    frontier = list(seen)
    while frontier:
        x = frontier.pop()
        for v in vectors:
            y = group.reduce([a + b for a, b in zip(x, v)])
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def brute_h0(module):
    g = module.group
    return [x for x in g.coordinate_vectors() if all(s(x).coords == x for s in module.sigmas)]


def brute_top(module):
    # coinvariants M / sum (sigma_j - 1) M
    g = module.group
    gens = [e.coords for e in g.gens()]
    rel = [tuple(a - b for a, b in zip(s(x).coords, x)) for s in module.sigmas for x in gens]
    return g.order // len(_span(g, rel))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_trivial_odd_cyclic(n):
    m = ZnModule.trivial(FinAb((2 * n + 1,)), 2)
    assert koszul_cohomology(m, 2).group.divisors == (2 * n + 1,)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_inversion_twist_on_even_cyclic(n):
    g = FinAb((2 * n,))
    m = ZnModule(g, (hom(g, [[-1]]), FinAbHom.identity(g)))
    assert koszul_cohomology(m, 2).group.divisors == (2,)


def test_odd_inversion_kills_h2():
    g = FinAb((5,))
    m = ZnModule(g, (hom(g, [[-1]]), FinAbHom.identity(g)))
    assert koszul_cohomology(m, 2).group.order == 1


def test_switch_twist():
    g = FinAb((2, 2))
    m = ZnModule(g, (hom(g, [[0, 1], [1, 0]]), FinAbHom.identity(g)))
    assert koszul_cohomology(m, 2).group.divisors == (2,)


def test_cubic_twist_on_klein_group():
    datum = lookup(SimpleType("D", 4))
    cycle = next(p for p in datum.out.elements if datum.out.element_order(p) == 3)
    m = ZnModule(datum.center, (datum.rho(cycle), FinAbHom.identity(datum.center)))
    assert koszul_cohomology(m, 2).group.order == 1
    assert len(D4_NONZERO) == 3


def test_noncommuting_action_rejected():
    s3 = FiniteGroup.symmetric(3)
    datum = lookup(SimpleType("D", 4))
    a, b = s3.elements[1], s3.elements[2]
    assert not s3.commute(a, b)
    with pytest.raises(ValueError):
        ZnModule(datum.center, (datum.rho(a), datum.rho(b)))


def random_modules():
    def build(args):
        orders, mats = args
        g = FinAb.from_orders(orders)
        sig = []
        for rows in mats:
            try:
                f = FinAbHom(g, g, IntMatrix.from_rows([r[: g.rank] for r in rows[: g.rank]], ncols=g.rank))
            except ValueError:
                f = FinAbHom.identity(g)
            sig.append(f if f.is_automorphism() else FinAbHom.identity(g))
        return g, sig

    mat = st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=2, max_size=2)
    return st.tuples(st.lists(st.integers(2, 6), min_size=1, max_size=2), st.lists(mat, min_size=1, max_size=1)).map(build)


@settings(max_examples=60, deadline=None)
@given(random_modules(), st.integers(1, 2))
def test_euler_characteristic_and_brute_force(mod, n):
    g, sig = mod
    sigmas = tuple(sig) + (FinAbHom.identity(g),) * (n - 1)
    m = ZnModule(g, sigmas[:n])
    orders = [koszul_cohomology(m, i).group.order for i in range(n + 1)]
    num = 1
    den = 1
    for i, o in enumerate(orders):
        if i % 2:
            den *= o
        else:
            num *= o
    assert num == den
    assert orders[0] == len(brute_h0(m))
    assert orders[n] == brute_top(m)


def test_differentials_compose_to_zero():
    g = FinAb((4,))
    m = ZnModule(g, (hom(g, [[-1]]), hom(g, [[-1]]), FinAbHom.identity(g)))
    for i in range(2):
        d = m.differential(i + 1) @ m.differential(i)
        moduli = m.cochain_moduli(i + 2)
        assert all(x % moduli[r] == 0 for r, row in enumerate(d.rows) for x in row)


@pytest.mark.parametrize("d", range(2, 13))
def test_glnz_acts_on_h2_by_determinant(d):
    m = ZnModule.trivial(FinAb.from_orders([d]), 2)
    for g in glnz_generators(2):
        assert glnz_action_on_h2(m, g) == FinAbHom.scalar(m.group, g.det())


def test_compound_matrix_top_is_det():
    g = IntMatrix.from_rows([[2, 1, 0], [1, 1, 0], [0, 0, -1]])
    assert compound_matrix(g, 3).rows == ((g.det(),),)


def test_equivariant_action_inversion():
    g = FinAb((3,))
    m = ZnModule.trivial(g, 2)
    f = equivariant_action_on_h(m, 2, hom(g, [[-1]]))
    assert f == FinAbHom.scalar(koszul_cohomology(m, 2).group, -1)


def test_base_change_twists_by_det():
    g = FinAb((5,))
    m = ZnModule.trivial(g, 2)
    swap = IntMatrix.from_rows([[0, 1], [1, 0]])
    f = base_change_action_on_top(m, swap, FinAbHom.identity(g))
    assert f == FinAbHom.scalar(koszul_cohomology(m, 2).group, -1)


def test_representatives_are_cocycles():
    for k in range(1, 5):
        g = FinAb((4 * k,))
        m = ZnModule(g, (hom(g, [[-1]]), FinAbHom.identity(g)))
        for i in range(3):
            h = koszul_cohomology(m, i)
            for r in h.representatives:
                assert h.is_cocycle(r)
