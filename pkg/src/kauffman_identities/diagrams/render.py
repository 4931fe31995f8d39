# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Schematic ASCII and SVG drawings of wire diagrams."""

from __future__ import annotations

import io

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Circle, PathPatch
from matplotlib.path import Path

from kauffman_identities.config import RenderFormat
from kauffman_identities.diagrams.wire import WireDiagram

MIDDLE_WIDTH = 12
ROW_HEIGHT = 30
MARGIN = 40
POINTS_PER_INCH = 72


def _arcs(d: WireDiagram, right: bool) -> list[tuple[int, int]]:
    n = d.rank
    offset = n if right else 0
    arcs = []
    for p in range(offset, offset + n):
        q = d.mate[p]
        if offset <= q < offset + n and p < q:
            arcs.append((p - offset + 1, q - offset + 1))
    return arcs


def _assign_columns(arcs: list[tuple[int, int]]) -> dict[tuple[int, int], int]:
    """Greedy column per arc; shorter arcs sit nearer the boundary."""
    columns: dict[tuple[int, int], int] = {}
    used: list[list[tuple[int, int]]] = []
    for arc in sorted(arcs, key=lambda a: (a[1] - a[0], a[0])):
        for col, occupied in enumerate(used):
            if all(arc[1] < lo or arc[0] > hi for lo, hi in occupied):
                occupied.append(arc)
                columns[arc] = col
                break
        else:
            used.append([arc])
            columns[arc] = len(used) - 1
    return columns


def _side_grid(d: WireDiagram, right: bool) -> list[list[str]]:
    """Character grid for one side, column 0 next to the boundary points."""
    n = d.rank
    columns = _assign_columns(_arcs(d, right))
    width = max(columns.values(), default=-1) + 1 or 1
    grid = [[" "] * width for _ in range(n)]
    for (lo, hi), col in columns.items():
        for row in (lo, hi):
            for k in range(col):
                if grid[row - 1][k] == " ":
                    grid[row - 1][k] = "-"
            grid[row - 1][col] = "+"
        for row in range(lo + 1, hi):
            grid[row - 1][col] = "|"
    return grid


def render_ascii(d: WireDiagram) -> str:
    """Text drawing: one row per point index, arcs as bracket columns."""
    n = d.rank
    left = _side_grid(d, right=False)
    right = _side_grid(d, right=True)
    half = MIDDLE_WIDTH // 2
    outgoing = [" " * half] * n
    incoming = [" " * half] * n
    horizontal = [False] * n

    for p in range(n):
        q = d.mate[p]
        if q < n:
            continue
        j = q - n + 1
        for k, ch in enumerate(left[p]):
            if ch == " ":
                left[p][k] = "-"
        for k, ch in enumerate(right[j - 1]):
            if ch == " ":
                right[j - 1][k] = "-"
        if j == p + 1:
            horizontal[p] = True
        else:
            outgoing[p] = f"-> {j}'".ljust(half)
            incoming[j - 1] = f"{p + 1} <-".rjust(half)

    lines = []
    for row in range(n):
        middle = "-" * MIDDLE_WIDTH if horizontal[row] else outgoing[row] + incoming[row]
        lines.append(
            f"{row + 1:>2} o"
            + "".join(left[row])
            + middle
            + "".join(reversed(right[row]))
            + f"o {row + 1}'"
        )
    circles = f"circles: {d.circles}"
    if d.circles:
        circles += " " + " ".join("O" * d.circles)
    lines.append(circles)
    return "\n".join(lines)


def _wire_gid(p: int, q: int, n: int) -> str:
    if p < n <= q:
        return f"t-wire-{p + 1}-{q - n + 1}"
    if p >= n:
        return f"arc-right-{p - n + 1}-{q - n + 1}"
    return f"arc-left-{p + 1}-{q + 1}"


def render_svg(d: WireDiagram) -> str:
    """SVG drawing: straight t-wires, cubic arcs, circles beneath.

    Every artist carries a gid (``t-wire-1-1``, ``arc-left-1-2``,
    ``point-3'``, ``circle-1``) that appears as an element id in the output.
    """
    n = d.rank
    width = 2 * MARGIN + ROW_HEIGHT * max(n, 4)
    height = ROW_HEIGHT * (n + 2) + (ROW_HEIGHT if d.circles else 0)
    x_left, x_right = MARGIN, width - MARGIN

    fig = Figure(figsize=(width / POINTS_PER_INCH, height / POINTS_PER_INCH))
    ax = fig.add_axes((0, 0, 1, 1))
    ax.set_xlim(0, width)
    ax.set_ylim(height, 0)
    ax.set_axis_off()
    style = {"fill": False, "edgecolor": "black", "linewidth": 2}

    def y(index: int) -> int:
        return ROW_HEIGHT * index

    for p, q in ((p, q) for p, q in enumerate(d.mate) if p < q):
        if p < n <= q:
            (line,) = ax.plot([x_left, x_right], [y(p + 1), y(q - n + 1)], color="black", linewidth=2)
            line.set_gid(_wire_gid(p, q, n))
            continue
        right_side = p >= n
        x0 = x_right if right_side else x_left
        i, j = (p - n + 1, q - n + 1) if right_side else (p + 1, q + 1)
        bulge = (j - i) * ROW_HEIGHT // 2
        dx = -bulge if right_side else bulge
        arc = Path(
            [(x0, y(i)), (x0 + dx, y(i)), (x0 + dx, y(j)), (x0, y(j))],
            [Path.MOVETO, Path.CURVE4, Path.CURVE4, Path.CURVE4],
        )
        ax.add_patch(PathPatch(arc, gid=_wire_gid(p, q, n), **style))

    for index in range(1, n + 1):
        for x0, label in ((x_left, str(index)), (x_right, f"{index}'")):
            ax.add_patch(Circle((x0, y(index)), 3, color="black", gid=f"point-{label}"))

    for k in range(d.circles):
        center = (x_left + ROW_HEIGHT * (k + 1), y(n + 1) + ROW_HEIGHT // 2)
        ax.add_patch(Circle(center, 8, gid=f"circle-{k + 1}", **style))

    buffer = io.StringIO()
    with matplotlib.rc_context({"svg.hashsalt": "kauffman-identities"}):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def render(d: WireDiagram, fmt: RenderFormat = RenderFormat.ASCII) -> str:
    """Render a diagram in the requested format."""
    if fmt is RenderFormat.SVG:
        return render_svg(d)
    return render_ascii(d)
