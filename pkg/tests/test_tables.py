import pytest
import sympy

from knotperm.counting import expected
from knotperm.counting.tables import (
    CountRow,
    CountTable,
    catalan_numbers,
    count_unknotted_cycles,
    count_unlinked,
    derangement_count,
    dg_experiment,
    unknot_probability,
    unknotted_cycle_table,
    unlinked_table,
)
from knotperm.exceptions import CapExceeded, InternalInconsistency


@pytest.mark.parametrize("n", range(2, 8))
def test_unknotted_cycles(n):
    assert count_unknotted_cycles(n) == expected.UNKNOTTED_CYCLES[n]


@pytest.mark.parametrize("n", range(1, 8))
def test_unlinked_derangements(n):
    assert count_unlinked(n).total == expected.UNLINKED_DERANGEMENTS[n]


def test_unlinked_by_components():
    row = count_unlinked(4, by_components=True)
    assert row.by_components == {1: 6, 2: 2}
    assert row.stratum(3) == 0


def test_unlinked_strata():
    row = count_unlinked(7, by_components=True)
    assert row.stratum(1) == expected.UNKNOTTED_CYCLES[7]
    assert row.stratum(2) == expected.UNLINKED_BY_COMPONENTS[2][7]
    assert row.stratum(3) == expected.UNLINKED_BY_COMPONENTS[3][7]


def test_unlinked_with_fixed_points():
    assert count_unlinked(4, include_fixed_points=True).total == 23
    row = count_unlinked(3, by_components=True, include_fixed_points=True)
    assert row.by_components == {1: 2, 2: 3, 3: 1}


def test_unstratified_row():
    with pytest.raises(ValueError):
        count_unlinked(3).stratum(1)


def test_count_caps():
    with pytest.raises(CapExceeded):
        count_unlinked(6, cap=5)
    with pytest.raises(CapExceeded):
        count_unknotted_cycles(12)


def test_row_strata_must_add_up():
    with pytest.raises(InternalInconsistency):
        CountRow(4, 8, {1: 6, 2: 1})


def test_table():
    table = unknotted_cycle_table(range(2, 6))
    assert table.target == "unknotted-cycles"
    assert table.totals() == [1, 2, 6, 22]
    assert table.row(4).total == 6
    with pytest.raises(KeyError):
        table.row(9)


def test_table_format():
    table = CountTable("unlinked", (CountRow(4, 8, {1: 6, 2: 2}), CountRow(5, 32, {1: 22, 2: 10})))
    assert table.format() == "n  all  k=1  k=2\n4    8    6    2\n5   32   22   10\n"


def test_table_json():
    table = unlinked_table([2, 3], by_components=True)
    assert table.to_json() == {
        "target": "unlinked",
        "rows": [
            {"n": 2, "total": 1, "by_components": {"1": 1}},
            {"n": 3, "total": 2, "by_components": {"1": 2}},
        ],
    }


@pytest.mark.parametrize(
    ("n", "probability"),
    [
        (2, sympy.Rational(1)),
        (3, sympy.Rational(1)),
        (4, sympy.Rational(1)),
        (5, sympy.Rational(11, 12)),
        (9, sympy.Rational(4279, 20160)),
    ],
)
def test_unknot_probability(n, probability):
    assert unknot_probability(n) == probability


def test_unknot_probability_needs_a_cycle():
    with pytest.raises(ValueError):
        unknot_probability(1)


def test_oracles():
    assert derangement_count(5) == 44
    assert catalan_numbers(5) == [1, 2, 5, 14, 42]


def test_dg_experiment_small():
    one = dg_experiment(1)
    assert one.equal
    assert one.dg_tight == one.unlinked == 1

    three = dg_experiment(3)
    assert three.equal
    assert three.unlinked == 6


def test_dg_experiment_json():
    report = dg_experiment(4)
    assert report.equal
    assert report.unlinked == 23
    assert report.to_json() == {
        "n": 4,
        "equal": True,
        "dg_tight": 23,
        "unlinked": 23,
        "only_dg": [],
        "only_unlinked": [],
    }
