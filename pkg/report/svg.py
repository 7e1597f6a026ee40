import io

from typing import List, Sequence, Tuple

import svgwrite

from common import cell_label
from richardson.core import MultiplicityReport


CHAINS = "chains"
FAMILIES = "families"
ALL = "all"
CONTENTS = (CHAINS, FAMILIES, ALL)

# distance between neighbouring grid points, in user units
GRID_SPACING = 40
DOT_RADIUS = 2
MARKER_RADIUS = 5


class RenderError(Exception):
    pass


def render_svg(report: MultiplicityReport, which: str = CHAINS) -> str:
    if which not in CONTENTS:
        raise RenderError(f"unknown SVG content {which!r}")
    elif which in (FAMILIES, ALL) and "families" not in report:
        raise RenderError("families requested but not listed in the report")

    present = set(report["beta"])
    rows = [value for value in range(1, report["ambient"] + 1) if value not in present]
    cols = list(report["beta"])

    panels = []  # type: List[Tuple[str, Sequence[Sequence[List[int]]]]]
    if which in (CHAINS, ALL):
        panels.append((CHAINS, ()))
    if which in (FAMILIES, ALL):
        panels.extend((FAMILIES, family) for family in report["families"])
    if not panels:
        panels.append((CHAINS, ()))

    panel_width = GRID_SPACING * (len(cols) + 2)
    drawing = svgwrite.Drawing(
        size=(panel_width * len(panels), GRID_SPACING * (len(rows) + 2)),
        profile="full",
        debug=False,
    )

    for offset, (kind, family) in enumerate(panels):
        panel = drawing.g(
            class_="panel", transform="translate(%i,0)" % (offset * panel_width,)
        )
        _draw_grid(drawing, panel, rows, cols)

        if kind == CHAINS:
            anchors = report.get("t_alpha", []) + report.get("w_gamma", [])
            for row, col in sorted(anchors):
                center = _position(row, col, rows, cols)
                marker = drawing.circle(
                    center=center, r=MARKER_RADIUS, class_="chain-marker"
                )
                marker.set_desc(title="(%s)" % (cell_label((row, col)),))
                panel.add(marker)
        else:
            group = drawing.g(class_="family", fill="none", stroke="black")
            for path in family:
                points = [_position(row, col, rows, cols) for row, col in path]
                group.add(
                    drawing.polyline(points=points, class_="path", stroke_width=3)
                )
                if len(points) == 1:
                    group.add(
                        drawing.circle(
                            center=points[0], r=MARKER_RADIUS, class_="path-point"
                        )
                    )
            panel.add(group)

        drawing.add(panel)

    buffer = io.StringIO()
    drawing.write(buffer)

    return buffer.getvalue()


def _draw_grid(
    drawing: svgwrite.Drawing, panel: svgwrite.container.Group, rows: List[int], cols: List[int]
) -> None:
    for row_idx, row in enumerate(rows, start=1):
        panel.add(
            drawing.text(
                str(row),
                insert=(GRID_SPACING // 4, GRID_SPACING * row_idx + 4),
                class_="label",
                font_size=12,
            )
        )

    for col_idx, col in enumerate(cols, start=1):
        panel.add(
            drawing.text(
                str(col),
                insert=(GRID_SPACING * col_idx - 4, GRID_SPACING // 2),
                class_="label",
                font_size=12,
            )
        )

    for row in rows:
        for col in cols:
            dot = drawing.circle(
                center=_position(row, col, rows, cols), r=DOT_RADIUS, class_="grid-dot"
            )
            dot.set_desc(title="(%s)" % (cell_label((row, col)),))
            panel.add(dot)

    # Boundary between the positive cells (lower left) and the negative ones
    half = GRID_SPACING // 2
    points = []
    for row_idx, row in enumerate(rows, start=1):
        x = GRID_SPACING * sum(1 for col in cols if col < row) + half
        points.append((x, GRID_SPACING * row_idx - half))
        points.append((x, GRID_SPACING * row_idx + half))

    panel.add(
        drawing.polyline(
            points=points,
            class_="staircase",
            fill="none",
            stroke="grey",
            stroke_dasharray="4,4",
        )
    )


def _position(row: int, col: int, rows: List[int], cols: List[int]) -> Tuple[int, int]:
    return (GRID_SPACING * (cols.index(col) + 1), GRID_SPACING * (rows.index(row) + 1))
