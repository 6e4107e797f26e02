"""
Schematic drawings of a Kirby diagram's shadow.

Balls are drawn as pairs of disks along the top, each framed component as a
loop labelled with its word and framing. Thin grey lines join a component to
every ball it passes through; dashed lines join linked components and carry
the linking number. The picture is a summary, not an isotopy-faithful link
diagram.
"""

from __future__ import annotations

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Circle, Ellipse

from .kirby import DUAL

# component colours by role, page curves first
_COLORS = {"page": "#1f5fa8", "dual": "#b8322a"}


def _spell(word):
    if not word:
        return "1"
    out = []
    for l, s in word:
        out.append(f"x{l}" if s > 0 else f"x{l}^-1")
    return "".join(out)


def shadow_figure(kd, width=8.0):
    m = len(kd.components)
    cols = max(m, kd.balls, 1)
    height = 4.2 if kd.balls else 3.0
    fig = Figure(figsize=(width, height))
    ax = fig.add_axes((0.02, 0.02, 0.96, 0.96))
    ax.set_xlim(-0.5, cols + 0.5)
    ax.set_ylim(-1.6, 2.4 if kd.balls else 1.2)
    ax.set_aspect("equal")
    ax.axis("off")

    ball_xy = {}
    for l in range(1, kd.balls + 1):
        x = (l - 0.5) * cols / kd.balls
        for dx in (-0.22, 0.22):
            ax.add_patch(Circle((x + dx, 1.6), 0.16, fill=False, lw=1.2, ec="black"))
        ax.text(x, 2.0, f"x{l}", ha="center", va="bottom", fontsize=9)
        ball_xy[l] = (x, 1.44)

    comp_xy = []
    for i, c in enumerate(kd.components, 1):
        x = (i - 0.5) * cols / max(m, 1)
        comp_xy.append((x, 0.0))
        ax.add_patch(Ellipse((x, 0.0), 0.7, 0.5, fill=False, lw=1.6,
                             ec=_COLORS[c.role], ls="--" if c.role == DUAL else "-"))
        ax.text(x, 0.0, str(c.framing), ha="center", va="center", fontsize=10)
        ax.text(x, -0.45, f"{c.name}\n{_spell(c.word)}", ha="center", va="top", fontsize=8)
        for l in sorted({ball for ball, _ in c.word}):
            bx, by = ball_xy[l]
            ax.plot([x, bx], [0.25, by], color="0.6", lw=0.8)

    for i in range(m):
        for k in range(i + 1, m):
            v = kd.linking[i][k]
            if v:
                (x1, y1), (x2, y2) = comp_xy[i], comp_xy[k]
                ax.plot([x1 + 0.35, x2 - 0.35], [y1, y2], color="0.3", lw=0.8, ls=":")
                ax.text((x1 + x2) / 2, 0.08, f"lk={v}", ha="center", va="bottom", fontsize=7)

    title = "closed" if kd.closed else "open (half open book)"
    ax.text(-0.4, -1.5, f"{title}; 3-handles: {kd.three_handles}", fontsize=8, va="bottom")
    return fig


def render_svg(kd, path):
    """Write the schematic as a standalone SVG 1.1 file. Output is byte-stable."""
    fig = shadow_figure(kd)
    with matplotlib.rc_context({"svg.hashsalt": "openbook", "svg.fonttype": "path"}):
        fig.savefig(path, format="svg", metadata={"Date": None})


def component_table(kd):
    """Tab-delimited summary printed next to the figure."""
    lines = ["index\tname\trole\tword\tframing"]
    for i, c in enumerate(kd.components, 1):
        lines.append(f"{i}\t{c.name}\t{c.role}\t{_spell(c.word)}\t{c.framing}")
    return "\n".join(lines) + "\n"
