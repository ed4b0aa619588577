"""Render staircase regions: matplotlib figures, corner tables, ASCII panels.

Figures are written to files only (Agg backend); corner dots carry SVG
gid attributes of the form corner_{x}_{y} so that saved figures remain
machine-checkable.
"""

from __future__ import annotations

import csv

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .regions import Region  # noqa: E402


def staircase_figure(region: Region, window, title: str | None = None):
    """Figure for a two-dimensional region over an inclusive window."""
    if region.dim != 2:
        raise ValueError("staircase figures are only drawn for two factors")
    (x0, x1), (y0, y1) = window
    fig, ax = plt.subplots(figsize=(4.8, 4.8))
    xs = range(x0, x1 + 1)
    ys = range(y0, y1 + 1)
    inn_x, inn_y, out_x, out_y = [], [], [], []
    for x in xs:
        for y in ys:
            if region.contains((x, y)):
                inn_x.append(x)
                inn_y.append(y)
            else:
                out_x.append(x)
                out_y.append(y)
    ax.scatter(out_x, out_y, s=10, color="0.75", zorder=2)
    ax.scatter(inn_x, inn_y, s=14, color="tab:green", zorder=2)

    if region.everything:
        ax.axhspan(y0 - 0.5, y1 + 0.5, color="tab:green", alpha=0.25, zorder=1)
    elif region.corners:
        top = y1 + 0.5
        right = x1 + 0.5
        cs = sorted(region.corners)
        # staircase boundary: down the left wall of the first corner, then
        # right/down across the antichain, then off to the right edge
        pts = [(cs[0][0], top)]
        for k, (cx, cy) in enumerate(cs):
            pts.append((cx, cy))
            if k + 1 < len(cs):
                pts.append((cs[k + 1][0], cy))
        pts.append((right, cs[-1][1]))
        xs_b = [p[0] for p in pts]
        ys_b = [p[1] for p in pts]
        ax.plot(xs_b, ys_b, color="tab:green", lw=1.6, zorder=3)
        ax.fill(xs_b + [right, cs[0][0]], ys_b + [top, top],
                color="tab:green", alpha=0.18, zorder=1)
        for cx, cy in cs:
            ax.scatter([cx], [cy], s=36, color="black", zorder=4,
                       gid=f"corner_{cx}_{cy}")

    ax.set_xlim(x0 - 0.5, x1 + 0.5)
    ax.set_ylim(y0 - 0.5, y1 + 0.5)
    ax.set_xticks(list(xs))
    ax.set_yticks(list(ys))
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    return fig


def save_staircase(path, region: Region, window, title: str | None = None) -> None:
    fig = staircase_figure(region, window, title=title)
    fig.savefig(path)
    plt.close(fig)


def write_corner_table(path, region: Region) -> None:
    """Delimited corner list, one corner per row."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"m{k+1}" for k in range(region.dim)])
        if region.everything:
            writer.writerow(["everything"] + [""] * (region.dim - 1))
        else:
            for c in region.corners:
                writer.writerow(list(c))


def ascii_staircase(region: Region, window) -> str:
    """Text panel for two factors: # inside, . outside, C at corners."""
    if region.dim != 2:
        raise ValueError("ascii staircases are only drawn for two factors")
    (x0, x1), (y0, y1) = window
    corners = set(region.corners)
    lines = []
    width = max(len(str(y0)), len(str(y1)))
    for y in range(y1, y0 - 1, -1):
        row = []
        for x in range(x0, x1 + 1):
            if (x, y) in corners:
                row.append("C")
            elif region.contains((x, y)):
                row.append("#")
            else:
                row.append(".")
        lines.append(f"{y:>{width}} | " + " ".join(row))
    lines.append(" " * width + " +-" + "--" * (x1 - x0 + 1))
    labels = [str(x) for x in range(x0, x1 + 1)]
    lines.append(" " * width + "   " + " ".join(lab[-1] for lab in labels))
    return "\n".join(lines)
