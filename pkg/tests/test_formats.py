import pytest

from stcores.core_quotient import bar_decompose, decompose
from stcores.formats import (
    bar_to_json,
    checks_report,
    core_tuple_to_json,
    count_table_csv,
    count_table_json,
    grid_csv,
    parse_partition_argument,
    partition_to_json,
    scan_report_json,
    series_csv,
    series_json,
    tower_to_json,
)
from stcores.lattice import yinyang_grid
from stcores.oracle import core_counts
from stcores.series import TruncatedSeries


def test_partition_json_is_compact():
    assert partition_to_json((3, 2, 1)) == "[3,2,1]"
    assert partition_to_json(()) == "[]"


def test_bar_json_tags_the_kind_first():
    assert bar_to_json((4, 1)) == '{"kind":"bar","parts":[4,1]}'


def test_tower_json_shapes():
    assert (
        tower_to_json(decompose((4, 2, 1, 1, 1), 2))
        == '{"g":2,"core":[1],"quotient":[[],[3,1]],"weight":4}'
    )
    assert (
        tower_to_json(bar_decompose((5, 3, 1), 3))
        == '{"kind":"bar","g":3,"core":[],"quotient":[[1],[1,1]],"weight":3}'
    )


def test_core_tuple_json():
    assert core_tuple_to_json((2, 0, -2), 3) == '{"t":3,"entries":[2,0,-2]}'


def test_scan_report_matches_the_documented_shape():
    got = scan_report_json(5, 2, (3, 4), 60)
    assert got == '{"modulus":2,"g":5,"residues":[3,4],"verified_to":60}'


@pytest.mark.parametrize(
    "text, kind, parts",
    (
        ("[3,3,3]", "straight", (3, 3, 3)),
        ("[]", "straight", ()),
        ('{"kind":"bar","parts":[6]}', "bar", (6,)),
        ('{"kind": "bar", "parts": []}', "bar", ()),
    ),
)
def test_parse_partition_argument(text, kind, parts):
    assert parse_partition_argument(text) == (kind, parts)


@pytest.mark.parametrize(
    "text, message",
    (
        ("nope", "not valid JSON"),
        ("[true]", "integers"),
        ("[1.5]", "integers"),
        ('{"parts":[2]}', "kind"),
        ('"str"', "integers"),
    ),
)
def test_parse_partition_argument_rejections(text, message):
    with pytest.raises(ValueError, match=message):
        parse_partition_argument(text)


def test_count_table_renderings():
    table = core_counts(2, 4)
    assert count_table_csv(table) == "n,count\n0,1\n1,1\n2,0\n3,1\n4,0"
    assert count_table_json(table) == '{"label":"f_2","counts":[1,1,0,1,0]}'


def test_series_renderings():
    series = TruncatedSeries([1, 1, 2], 3)
    assert series_csv(series) == "n,coefficient\n0,1\n1,1\n2,2\n3,0"
    assert series_json(series) == '{"coefficients":[1,1,2,0]}'


def test_grid_csv_rows():
    assert grid_csv(yinyang_grid(3, 5)) == "2,-1"
    assert grid_csv(yinyang_grid(3, 7)) == "4,1,-2"


def test_checks_report_text():
    text, failures = checks_report({"demo": [("works", True, "all 3 cases")]})
    assert failures == 0
    assert text == "[demo] PASS works\nall 1 checks passed"
    text, failures = checks_report(
        {"demo": [("works", True, ""), ("breaks", False, "n=2")]}
    )
    assert failures == 1
    assert "[demo] FAIL breaks: n=2" in text
    assert text.endswith("1 of 2 checks failed")
