"""Self-contained SVG line charts of sweep columns against n."""
from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from mertens_matrices.harness.sweep import read_csv

WIDTH, HEIGHT = 960, 360
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 72, 24, 34, 48

BLACK, BLUE, RED = "#000000", "#1f3fd6", "#d62020"
SERIES_COLORS = {
    "norm_M": BLACK,
    "ratio_M_sqrt": BLACK,
    "ratio_M_Mtilde": BLACK,
    "mertens_n": BLUE,
    "ratio_mertens_sqrt": BLUE,
    "norm_T": BLUE,
    "ratio_T_sqrt": BLUE,
    "norm_Mtilde": RED,
    "ratio_Mtilde_sqrt": RED,
}
SPARE_COLORS = ("#1a9641", "#ff7f00", "#7b3294", "#8c8c8c", "#00a6a6")

# derived from the CSV when not stored in it
DERIVED = {"ratio_Mtilde_sqrt": lambda row: float(row["norm_Mtilde"]) / math.sqrt(float(row["n"]))}


class ColumnError(KeyError):
    """A requested column is not in the sweep CSV."""

    def __str__(self) -> str:
        return str(self.args[0])


def _series(rows: list[dict[str, str]], column: str) -> list[float]:
    if rows and column in rows[0]:
        return [float(r[column]) for r in rows]
    if column in DERIVED and rows and all(k in rows[0] for k in ("n", "norm_Mtilde")):
        return [DERIVED[column](r) for r in rows]
    raise ColumnError(f"column {column!r} not found in CSV")


def nice_ticks(lo: float, hi: float, count: int = 6) -> list[float]:
    if hi <= lo:
        pad = abs(lo) * 0.05 or 1.0
        lo, hi = lo - pad, hi + pad
    raw = (hi - lo) / max(count - 1, 1)
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    start = math.floor(lo / step) * step
    ticks = []
    t = start
    while t <= hi + step * 1e-9:
        ticks.append(round(t, 12))
        t += step
    if ticks[-1] < hi:
        ticks.append(round(t, 12))
    return ticks


def _label(v: float) -> str:
    if v != 0 and (abs(v) >= 1e7 or abs(v) < 1e-3):
        return f"{v:.3g}"
    return f"{v:.6g}"


def render_plot(
    csv_path: str | Path,
    columns: Sequence[str],
    output_path: str | Path,
    normalize_at: int | None = None,
    title: str | None = None,
) -> Path:
    """Plot ``columns`` against n as an SVG.

    With ``normalize_at``, every series is divided by its value at the
    largest n <= normalize_at present in the CSV.
    """
    columns = list(columns)
    if not columns:
        raise ValueError("no columns selected")
    rows = read_csv(csv_path)
    if not rows:
        raise ValueError(f"{csv_path} has no data rows")
    xs = _series(rows, "n")
    series = {c: _series(rows, c) for c in columns}

    ylabel = "value"
    if normalize_at is not None:
        candidates = [i for i, x in enumerate(xs) if x <= normalize_at]
        if not candidates:
            raise ValueError(f"no row with n <= {normalize_at}")
        ref = max(candidates, key=lambda i: xs[i])
        for c, ys in series.items():
            if ys[ref] == 0:
                raise ValueError(f"{c} is zero at n={int(xs[ref])}; cannot normalize")
            series[c] = [y / ys[ref] for y in ys]
        ylabel = f"value / value at n={int(xs[ref])}"

    x_ticks = nice_ticks(min(xs), max(xs))
    all_y = [y for ys in series.values() for y in ys]
    y_ticks = nice_ticks(min(all_y), max(all_y))
    x0, x1 = x_ticks[0], x_ticks[-1]
    y0, y1 = y_ticks[0], y_ticks[-1]
    pw = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    ph = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(x: float) -> float:
        return MARGIN_LEFT + (x - x0) / (x1 - x0) * pw

    def py(y: float) -> float:
        return MARGIN_TOP + (y1 - y) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
    ]
    if title:
        out.append(f'<text x="{WIDTH / 2:.1f}" y="20" text-anchor="middle" font-size="14">{escape(title)}</text>')
    for t in x_ticks:
        out.append(f'<line x1="{px(t):.2f}" y1="{MARGIN_TOP}" x2="{px(t):.2f}" y2="{MARGIN_TOP + ph}" stroke="#e6e6e6"/>')
        out.append(
            f'<text x="{px(t):.2f}" y="{MARGIN_TOP + ph + 16}" text-anchor="middle">{_label(t)}</text>'
        )
    for t in y_ticks:
        out.append(f'<line x1="{MARGIN_LEFT}" y1="{py(t):.2f}" x2="{MARGIN_LEFT + pw}" y2="{py(t):.2f}" stroke="#e6e6e6"/>')
        out.append(f'<text x="{MARGIN_LEFT - 6}" y="{py(t) + 4:.2f}" text-anchor="end">{_label(t)}</text>')
    out.append(f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{pw}" height="{ph}" fill="none" stroke="#000000"/>')
    out.append(f'<text x="{MARGIN_LEFT + pw / 2:.1f}" y="{HEIGHT - 8}" text-anchor="middle">n</text>')
    out.append(
        f'<text x="16" y="{MARGIN_TOP + ph / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {MARGIN_TOP + ph / 2:.1f})">{escape(ylabel)}</text>'
    )

    legend_w = 52 + 7 * max(len(c) for c in series)
    legend = [
        f'<rect x="{MARGIN_LEFT + 6}" y="{MARGIN_TOP + 4}" width="{legend_w}" '
        f'height="{18 * len(series) + 6}" fill="#ffffff" fill-opacity="0.85" stroke="#bbbbbb"/>'
    ]
    used: set[str] = set()
    spare = iter(SPARE_COLORS)
    for i, (c, ys) in enumerate(series.items()):
        color = SERIES_COLORS.get(c)
        if color is None or color in used:
            color = next(spare, "#555555")
        used.add(color)
        points = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
        out.append(
            f'<polyline class="series" data-column="{escape(c)}" fill="none" '
            f'stroke="{color}" stroke-width="1.5" points="{points}"/>'
        )
        ly = MARGIN_TOP + 20 + 18 * i
        legend.append(
            f'<line x1="{MARGIN_LEFT + 12}" y1="{ly - 4}" x2="{MARGIN_LEFT + 36}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        legend.append(f'<text x="{MARGIN_LEFT + 42}" y="{ly}">{escape(c)}</text>')
    out.extend(legend)
    out.append("</svg>")

    path = Path(output_path)
    path.write_text("\n".join(out) + "\n")
    return path
