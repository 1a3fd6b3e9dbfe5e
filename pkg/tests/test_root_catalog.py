import pytest

from loopclass.nullity2_classifier import classify_k
from loopclass.root_catalog import SimpleType, _eval, load_table, lookup, match_row, relative_type, symbolic_rows


@pytest.mark.parametrize("text,expected", [("D4", ("D", 4)), ("e_8", ("E", 8)), (" A{12} ", ("A", 12)), ("g2", ("G", 2))])
def test_parse(text, expected):
    t = SimpleType.parse(text)
    assert (t.family, t.rank) == expected


@pytest.mark.parametrize("text", ["A0", "B1", "D2", "E5", "E9", "F3", "G3", "H4", "X"])
def test_illegal_types(text):
    with pytest.raises(ValueError):
        SimpleType.parse(text)


@pytest.mark.parametrize("t,center,out", [
    ("A1", 2, 1), ("A2", 3, 2), ("A5", 6, 2), ("B3", 2, 1), ("C4", 2, 1),
    ("D4", 4, 6), ("D5", 4, 2), ("D6", 4, 2), ("E6", 3, 2), ("E7", 2, 1), ("E8", 1, 1), ("F4", 1, 1), ("G2", 1, 1),
])
def test_center_and_out(t, center, out):
    d = lookup(SimpleType.parse(t))
    assert d.center.order == center
    assert d.out.order == out
    for a in d.out.elements:
        assert d.rho(a).is_automorphism()


def test_out_acts_by_homomorphism():
    d = lookup(SimpleType("D", 4))
    g = d.out
    for a in g.elements:
        for b in g.elements:
            assert d.rho(g.mul(a, b)) == d.rho(a) @ d.rho(b)


def test_table_loads():
    rows = load_table()
    assert len(rows) == 35
    assert len(symbolic_rows()) == 35


def test_safe_eval():
    assert _eval("2*n-1", {"n": 3}) == 5
    with pytest.raises(ValueError):
        _eval("__import__('os')", {})
    with pytest.raises(KeyError):
        _eval("m + 1", {"n": 1})


def test_a_formula_rows():
    a5 = SimpleType("A", 5)
    assert match_row(a5, "inner", [(2,), (4,)]).relative == "A_1"
    assert match_row(a5, "inner", [(3,)]).tits_index == "^1A^{(2)}_{5,2}"


def test_missing_row_raises():
    with pytest.raises(KeyError):
        match_row(SimpleType("C", 2), "inner", [(0,)])


def test_relative_type_of_classified_forms():
    for f in classify_k(SimpleType("D", 6)):
        assert relative_type(f.absolute, f) == f.table_row().relative
