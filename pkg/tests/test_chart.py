import xml.etree.ElementTree as ET

import pytest

from freesummand.chart import REGION_CODES, boundary_lines, chart
from freesummand.exceptions import BudgetExceeded
from freesummand.ranges import Assumptions, VerdictKind
from freesummand.verification import (
    BS_TRIANGLE,
    reference_region,
    reference_tsv,
    golden_chart_bytes,
    polygon_position,
)


@pytest.fixture(scope="module")
def ref_chart():
    return chart(8, 9, (0, 20), (-2, 20))


def test_golden_file(ref_chart):
    assert ref_chart.to_tsv().encode() == golden_chart_bytes()
    assert golden_chart_bytes() == reference_tsv().encode()


def test_every_cell_matches_drawn_geometry(ref_chart):
    for (d, e), code in ref_chart.codes().items():
        assert code == reference_region(d, e), (d, e)


def test_tsv_layout(ref_chart):
    text = ref_chart.to_tsv()
    assert "\r" not in text and text.endswith("\n")
    rows = text.splitlines()
    assert rows[0].split("\t")[:3] == ["e\\d", "0", "1"]
    assert [r.split("\t")[0] for r in rows[1:3]] == ["20", "19"]
    assert len(rows) == 1 + 23
    assert all(len(r.split("\t")) == 22 for r in rows)
    assert {c for r in rows[1:] for c in r.split("\t")[1:]} <= set(REGION_CODES)


def test_six_boundary_lines():
    names = [line.equation for line in boundary_lines(8, 9)]
    assert len(names) == 6
    assert names == ["d = 8", "d = 14", "e = 8", "e = d + 3", "d + e = 17", "d + e = 16"]


def test_bs_changes_exactly_the_triangle(ref_chart):
    flagged = chart(8, 9, (0, 20), (-2, 20), Assumptions(beilinson_soule=True))
    changed = {p for p in ref_chart.codes() if ref_chart.codes()[p] != flagged.codes()[p]}
    triangle = {(d, e) for d in range(0, 21) for e in range(-2, 21)
                if polygon_position((d, e), BS_TRIANGLE) == "inside" or (d == 14 and 3 < e < 8)}
    assert changed == triangle
    assert all(flagged.codes()[p] == "ISO" for p in changed)


def test_single_cell():
    c = chart(8, 9, (5, 5), (5, 5))
    assert c.to_tsv() == "e\\d\t5\n5\tZ\n"
    assert c.verdict(5, 5).kind is VerdictKind.ZERO_SOURCE


def test_budget_and_empty_ranges():
    with pytest.raises(BudgetExceeded):
        chart(8, 9, (0, 1000), (0, 1000))
    with pytest.raises(ValueError):
        chart(8, 9, (3, 2), (0, 1))


def test_svg_is_self_contained(ref_chart):
    svg = ref_chart.to_svg()
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    assert "<style" not in svg and "href" not in svg
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.findall(f"{ns}line")) >= 6
    assert len(root.findall(f"{ns}rect")) >= 21 * 23
    assert svg == ref_chart.to_svg()
