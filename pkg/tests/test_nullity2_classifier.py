import csv
from pathlib import Path

import pytest

from loopclass.exact_linalg import InvariantViolation
from loopclass.loop_cocycles import FiniteGroup
from loopclass.nullity2_classifier import (
    DEFAULT_TABLE_TYPES,
    class_rows,
    classify_k,
    classify_r2,
    dynkin_tits_classes,
    dynkin_tits_label,
    eala_table,
    relative_key_collisions,
    stabilizer_maps,
)
from loopclass.root_catalog import SimpleType, load_table, lookup

GOLDEN = Path(__file__).parent / "golden"


def r2_expected(t: SimpleType) -> int:
    f, r = t.family, t.rank
    if f == "A" and r == 1:
        return 2
    if f == "A" and r % 2 == 0:
        return (r // 2 + 1) + 3
    if f == "A":
        return ((r + 1) // 2 + 1) + 6
    if f == "D" and r == 4:
        return 12
    if f == "D":
        return 3 + 6
    if f == "E" and r == 6:
        return 5
    if f in "BC" or (f, r) == ("E", 7):
        return 2
    return 1


def k_expected(t: SimpleType) -> int:
    f, r = t.family, t.rank
    if f == "A" and r == 1:
        return 2
    if f == "A" and r % 2 == 0:
        return (r // 2 + 1) + 1
    if f == "A":
        return ((r + 1) // 2 + 1) + 2
    if f == "D" and r == 4:
        return 5
    if f == "D":
        return 3 + 2
    if f == "E" and r == 6:
        return 3
    if f in "BC" or (f, r) == ("E", 7):
        return 2
    return 1


TYPES = ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "C3", "C4", "D4", "D5", "D6", "D7", "D8",
         "E6", "E7", "E8", "F4", "G2"]


@pytest.mark.parametrize("name", TYPES)
def test_counts_over_r2(name):
    t = SimpleType.parse(name)
    assert len(classify_r2(t)) == r2_expected(t)


@pytest.mark.parametrize("name", TYPES)
def test_counts_over_k(name):
    t = SimpleType.parse(name)
    assert len(classify_k(t)) == k_expected(t)


def test_dynkin_tits_labels():
    d4 = lookup(SimpleType("D", 4))
    labels = sorted(dt.label for dt in dynkin_tits_classes(d4))
    assert labels.count("split") == 1
    assert sum(lab.startswith("cubic") for lab in labels) == 4
    assert sum(lab.startswith("quadratic") for lab in labels) == 3


def test_label_rejects_large_images():
    s4 = FiniteGroup.symmetric(4)
    a = next(x for x in s4.elements if s4.element_order(x) == 4)
    with pytest.raises(InvariantViolation):
        dynkin_tits_label(s4, (a, s4.identity))


def test_stabilizer_maps_are_automorphisms():
    for name in ("A4", "D4", "D5", "E6"):
        datum = lookup(SimpleType.parse(name))
        for dt in dynkin_tits_classes(datum):
            for f in stabilizer_maps(datum, dt):
                assert f.is_automorphism()


def test_quasisplit_form_per_dynkin_tits_class():
    for name in ("A5", "D4", "D6"):
        forms = classify_k(SimpleType.parse(name))
        kinds = {}
        for f in forms:
            kinds.setdefault(f.dynkin_tits.label, []).append(f.quasisplit)
        assert all(v.count(True) == 1 for v in kinds.values())


def _read_tsv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh, delimiter="\t"))


def test_instantiated_table_golden():
    rows = [{"absolute": str(r.absolute), "name": r.name, "index": r.tits_index, "relative": r.relative}
            for r in eala_table(DEFAULT_TABLE_TYPES)]
    assert rows == _read_tsv(GOLDEN / "eala2_k.tsv")


def test_symbolic_table_golden():
    golden = _read_tsv(GOLDEN / "eala2_symbolic.tsv")
    rows = load_table()
    assert len(golden) == len(rows)
    for g, r in zip(golden, rows):
        assert (g["name"], g["index"], g["relative"]) == (r.name_tex, r.index_tex, r.relative_tex)


def test_every_table_row_is_realized():
    # each stored row is hit by some class at the sampled ranks
    hit = set()
    for name in DEFAULT_TABLE_TYPES:
        for f in classify_k(SimpleType.parse(name)):
            hit.add(f.table_row().position[0])
    assert hit == set(range(len(load_table())))


def test_relative_key_collisions_are_the_odd_d_pair():
    clashes = relative_key_collisions(eala_table(DEFAULT_TABLE_TYPES))
    assert [(str(a.absolute), a.name, b.name, a.relative) for a, b in clashes] == [
        ("D5", "g_2", "_Eg^-", "BC_1"),
        ("D7", "g_2", "_Eg^-", "BC_2"),
    ]


def test_class_rows_follow_table_order():
    names = [r.name for r in class_rows(SimpleType("D", 5))]
    assert names == ["g_0", "g_1", "g_2", "_Eg^+", "_Eg^-"]
