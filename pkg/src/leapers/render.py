"""ASCII and SVG pictures of paths and embeddings, plus plain-text search tables.

SVG uses board coordinates with the y-axis pointing up and 20 px per unit.
Board squares are drawn as small circles (``class="board"``), images of
grid vertices as larger filled circles (``class="vertex"``) and images of
grid edges as segments (``class="edge"``). Output depends only on the input.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from leapers.core.embedding import GridEmbedding
from leapers.core.paths import Box, LeaperPath
from leapers.core.vec import Vec
from leapers.extremal.search import SearchResult

UNIT = 20


class Picture:
    """Labelled points and segments, the common input of both renderers."""

    def __init__(self, labels: dict[Vec, str], segments: Sequence[tuple[Vec, Vec]], title: str = ""):
        self.labels = labels
        self.segments = list(segments)
        self.title = title

    @property
    def box(self) -> Box:
        return Box.of(self.labels)


def picture_of_path(path: LeaperPath) -> Picture:
    labels = {v: str(i) for i, v in enumerate(path.vertices)}
    segs = list(zip(path.vertices, path.vertices[1:]))
    return Picture(labels, segs, f"{path.leaper} path, {len(path)} vertices")


def picture_of_embedding(emb: GridEmbedding) -> Picture:
    m = emb.m
    labels = {}
    for i, row in enumerate(emb.points):
        for j, v in enumerate(row):
            labels.setdefault(v, str(i * m + j))
    return Picture(labels, emb.edges(), f"{m}x{m} grid into {emb.leaper} leaper graph")


def to_ascii(pic: Picture, blank: str = ".") -> str:
    box = pic.box
    w = max(len(s) for s in pic.labels.values()) + 1
    lines = [pic.title] if pic.title else []
    for y in range(box.y_max, box.y_min - 1, -1):
        cells = [pic.labels.get((x, y), blank).rjust(w) for x in range(box.x_min, box.x_max + 1)]
        lines.append(f"{y:>4} |" + "".join(cells))
    axis = "".join(str(x).rjust(w) for x in range(box.x_min, box.x_max + 1))
    lines.append("      " + axis)
    return "\n".join(lines) + "\n"


def to_svg(pic: Picture) -> str:
    box = pic.box
    width, height = (box.size_x + 1) * UNIT, (box.size_y + 1) * UNIT

    def px(v: Vec) -> tuple[int, int]:
        return (v[0] - box.x_min + 1) * UNIT, (box.y_max - v[1] + 1) * UNIT

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if pic.title:
        out.append(f"<title>{pic.title}</title>")
    out.append('<g fill="#bbbbbb">')
    for y in range(box.y_max, box.y_min - 1, -1):
        for x in range(box.x_min, box.x_max + 1):
            cx, cy = px((x, y))
            out.append(f'<circle class="board" cx="{cx}" cy="{cy}" r="2"/>')
    out.append("</g>")
    out.append('<g stroke="#1f4e99" stroke-width="2">')
    for a, b in pic.segments:
        (x1, y1), (x2, y2) = px(a), px(b)
        out.append(f'<line class="edge" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    out.append('<g fill="#000000">')
    for v in sorted(pic.labels, key=lambda v: (-v[1], v[0])):
        cx, cy = px(v)
        out.append(f'<circle class="vertex" cx="{cx}" cy="{cy}" r="5"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def format_table(rows: Iterable[SearchResult]) -> str:
    rows = list(rows)
    head = ("n", "m_star", "m_upper", "exhausted", "nodes", "seconds")
    body = [(str(r.n), str(r.m_star), str(r.m_upper), "yes" if r.exhausted else "no",
             str(r.nodes), f"{r.seconds:.2f}") for r in rows]
    widths = [max(len(c) for c in col) for col in zip(head, *body)]
    fmt = lambda cells: "  ".join(c.rjust(w) for c, w in zip(cells, widths))
    lines = [fmt(head), "  ".join("-" * w for w in widths)] + [fmt(b) for b in body]
    return "\n".join(lines) + "\n"
