import math

import pytest

from loopclass.exceptional_rank3 import (
    LEGAL_DATA,
    Rank3Class,
    RankZeroDatum,
    SL3Descriptor,
    brute_force_sl3_orbits,
    classify_rank3,
    glnz_quotient_rank3,
)


@pytest.mark.parametrize("t,count", [("F4", 2), ("E7", 2), ("E8", 6)])
def test_class_counts(t, count):
    assert len(classify_rank3(t)) == count


@pytest.mark.parametrize("t,orbits,discrepancy", [("F4", 1, False), ("E7", 1, False), ("E8", 3, True)])
def test_quotient(t, orbits, discrepancy):
    r = glnz_quotient_rank3(t)
    assert len(r.orbits) == orbits
    assert r.discrepancy == discrepancy
    assert bool(r.note()) == discrepancy


def test_e8_orbits():
    r = glnz_quotient_rank3("E8")
    assert [(o[0].datum.d, [c.unit for c in o]) for o in r.orbits] == [(5, [1, 4]), (5, [2, 3]), (6, [1, 5])]


def test_brute_force_sl3_f3():
    orbits = brute_force_sl3_orbits(3)
    assert sum(len(o) for o in orbits) == 11232
    assert len(orbits) == len(classify_rank3("F4")) == 2
    # each orbit is a determinant fiber
    for o in orbits:
        assert len({_det(m) % 3 for m in o}) == 1


def _det(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


@pytest.mark.parametrize("d,order", [(2, 168), (3, 5616), (4, 86016 // 2), (6, 168 * 5616)])
def test_sl3_order(d, order):
    assert SL3Descriptor(d).order() == order


def test_sl3_orbit_sizes():
    for o in brute_force_sl3_orbits(3):
        assert len(o) == SL3Descriptor(3).order()


def test_illegal_data():
    with pytest.raises(ValueError):
        RankZeroDatum("E8", 4)
    with pytest.raises(ValueError):
        classify_rank3("E6")
    with pytest.raises(ValueError):
        Rank3Class(RankZeroDatum("E8", 6), 2)


def test_units():
    for t, d in LEGAL_DATA:
        units = [c.unit for c in classify_rank3(t) if c.datum.d == d]
        assert len(units) == sum(1 for u in range(d) if math.gcd(u, d) == 1)
