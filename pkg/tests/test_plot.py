import re
import xml.etree.ElementTree as ET

import pytest

from mertens_matrices.harness.plot import ColumnError, nice_ticks, render_plot
from mertens_matrices.harness.sweep import SweepConfig, sweep

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture(scope="module")
def csv_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("plot") / "s.csv"
    sweep(SweepConfig(1000, 6000, 1000, out=path), workers=1)
    return path


def series(svg_path):
    root = ET.parse(svg_path).getroot()
    return {p.get("data-column"): p for p in root.iter(SVG + "polyline")}


def test_ratio_layout(csv_path, tmp_path):
    out = render_plot(csv_path, ["ratio_M_sqrt", "ratio_mertens_sqrt"], tmp_path / "a.svg", title="ratios")
    lines = series(out)
    assert set(lines) == {"ratio_M_sqrt", "ratio_mertens_sqrt"}
    assert lines["ratio_M_sqrt"].get("stroke") == "#000000"
    assert lines["ratio_mertens_sqrt"].get("stroke") == "#1f3fd6"
    assert len(lines["ratio_M_sqrt"].get("points").split()) == 6
    assert "ratios" in out.read_text()


def test_normalized_layout(csv_path, tmp_path):
    cols = ["norm_M", "norm_Mtilde", "norm_T"]
    out = render_plot(csv_path, cols, tmp_path / "b.svg", normalize_at=2500)
    text = out.read_text()
    assert "value at n=2000" in text
    lines = series(out)
    assert lines["norm_Mtilde"].get("stroke") == "#d62020"
    assert len({lines[c].get("stroke") for c in cols}) == 3


def test_derived_column(csv_path, tmp_path):
    out = render_plot(csv_path, ["ratio_Mtilde_sqrt"], tmp_path / "c.svg")
    assert "ratio_Mtilde_sqrt" in series(out)


def test_missing_column(csv_path, tmp_path):
    with pytest.raises(ColumnError, match="nope"):
        render_plot(csv_path, ["nope"], tmp_path / "d.svg")


def test_no_columns(csv_path, tmp_path):
    with pytest.raises(ValueError):
        render_plot(csv_path, [], tmp_path / "e.svg")


def test_normalize_before_data(csv_path, tmp_path):
    with pytest.raises(ValueError):
        render_plot(csv_path, ["norm_M"], tmp_path / "f.svg", normalize_at=10)


def test_points_inside_frame(csv_path, tmp_path):
    out = render_plot(csv_path, ["norm_M", "norm_T"], tmp_path / "g.svg")
    for line in series(out).values():
        for x, y in (map(float, p.split(",")) for p in line.get("points").split()):
            assert 72 <= x <= 936 and 34 <= y <= 312


def test_nice_ticks():
    ticks = nice_ticks(0.13, 0.97)
    assert ticks[0] <= 0.13 and ticks[-1] >= 0.97
    steps = {round(b - a, 12) for a, b in zip(ticks, ticks[1:])}
    assert len(steps) == 1
    assert nice_ticks(5.0, 5.0)[0] < 5.0
