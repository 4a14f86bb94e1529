"""
Static drawings of hook diagrams and wiring diagrams, as SVG or ASCII.

Hook diagrams use matrix orientation: row r grows downwards, column c to the
right, and the hook of i joins ``(i, 0)``, ``(i, p(i))`` and ``(0, p(i))``.
Wiring diagrams draw position 1 at the top and read words left to right.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Literal

from .core import Permutation, Word, apply_word, inverse, inversion_count, mset
from .hook import build_hook_diagram

__all__ = ["RenderOptions", "render_hook", "render_wiring"]

SVG_NS = "http://www.w3.org/2000/svg"


@dataclass(frozen=True)
class RenderOptions:
    format: Literal["svg", "ascii"] = "svg"
    show_indices: bool = False
    show_diagonals: bool = False
    scale: float = 30.0

    def __post_init__(self):
        if self.format not in ("svg", "ascii"):
            raise ValueError(f"unknown format {self.format!r}")
        if not self.scale > 0:
            raise ValueError("scale must be positive")


def _num(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def _svg_root(width: float, height: float) -> ET.Element:
    return ET.Element("svg", {
        "xmlns": SVG_NS, "version": "1.1",
        "width": _num(width), "height": _num(height),
        "viewBox": f"0 0 {_num(width)} {_num(height)}",
    })


def _svg_text(parent: ET.Element, x: float, y: float, text: str, size: float, **attrs) -> ET.Element:
    el = ET.SubElement(parent, "text", {"x": _num(x), "y": _num(y), "font-size": _num(size),
                                        "font-family": "sans-serif", **attrs})
    el.text = text
    return el


def _serialize(root: ET.Element) -> str:
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def render_hook(p: Permutation, opts: RenderOptions = RenderOptions()) -> str:
    """Draw the hook diagram of ``p`` with one marker per crossing."""
    diagram = build_hook_diagram(p)
    if opts.format == "ascii":
        return _hook_ascii(p, diagram, opts)

    n, s = p.n, opts.scale
    margin = s
    size = 2 * margin + n * s

    def xy(r: float, c: float) -> tuple[float, float]:
        return margin + c * s, margin + r * s

    root = _svg_root(size, size)
    ET.SubElement(root, "title").text = f"hook diagram of {p}"
    axes = ET.SubElement(root, "g", {"class": "axes", "stroke": "#999", "stroke-width": "1"})
    x0, y0 = xy(0, 0)
    ET.SubElement(axes, "line", {"x1": _num(x0), "y1": _num(y0), "x2": _num(xy(0, n)[0]), "y2": _num(y0)})
    ET.SubElement(axes, "line", {"x1": _num(x0), "y1": _num(y0), "x2": _num(x0), "y2": _num(xy(n, 0)[1])})
    labels = ET.SubElement(root, "g", {"class": "axis-labels", "fill": "#555"})
    for t in range(1, n + 1):
        x, y = xy(0, t)
        _svg_text(labels, x, y - 0.3 * s, str(t), 0.4 * s, **{"text-anchor": "middle"})
        x, y = xy(t, 0)
        _svg_text(labels, x - 0.3 * s, y + 0.15 * s, str(t), 0.4 * s, **{"text-anchor": "end"})

    if opts.show_diagonals:
        diag = ET.SubElement(root, "g", {"class": "diagonals", "stroke": "#4a7",
                                         "stroke-dasharray": "4 3", "stroke-width": "1"})
        for k in mset(p):
            r0, r1 = max(0, -k), min(n, n - k)
            (xa, ya), (xb, yb) = xy(r0, r0 + k), xy(r1, r1 + k)
            ET.SubElement(diag, "line", {"class": "diagonal", "data-k": str(k), "x1": _num(xa),
                                         "y1": _num(ya), "x2": _num(xb), "y2": _num(yb)})

    hooks = ET.SubElement(root, "g", {"class": "hooks", "fill": "none", "stroke": "#000", "stroke-width": "1.5"})
    for i, v in enumerate(p.map, 1):
        pts = [xy(i, 0), xy(i, v), xy(0, v)]
        ET.SubElement(hooks, "polyline", {"class": "hook", "data-i": str(i),
                                          "points": " ".join(f"{_num(a)},{_num(b)}" for a, b in pts)})
    corners = ET.SubElement(root, "g", {"class": "corners", "fill": "#000"})
    for i, v in enumerate(p.map, 1):
        x, y = xy(i, v)
        ET.SubElement(corners, "circle", {"cx": _num(x), "cy": _num(y), "r": _num(0.12 * s)})

    marks = ET.SubElement(root, "g", {"class": "crossings", "fill": "#fff", "stroke": "#c22", "stroke-width": "1.5"})
    text = ET.SubElement(root, "g", {"class": "indices", "fill": "#c22"}) if opts.show_indices else None
    for c in diagram.crossings():
        x, y = xy(*c.point)
        ET.SubElement(marks, "circle", {"class": "crossing", "data-k": str(c.diagonal),
                                        "cx": _num(x), "cy": _num(y), "r": _num(0.16 * s)})
        if text is not None:
            _svg_text(text, x - 0.2 * s, y - 0.2 * s, str(c.transposition_index), 0.35 * s,
                      **{"text-anchor": "end", "class": "index"})
    return _serialize(root)


def _hook_ascii(p: Permutation, diagram, opts: RenderOptions) -> str:
    n = p.n
    row_of = (0,) + inverse(p).map
    diagonals = set(mset(p)) if opts.show_diagonals else set()
    width = len(str(n))
    lines = []
    for r in range(1, n + 1):
        top = p.map[r - 1]
        cells = []
        for c in range(1, n + 1):
            horiz = c < top
            vert = r < row_of[c]
            if c == top:
                ch = "o"
            elif horiz and vert:
                ch = "+"
            elif horiz:
                ch = "-"
            elif vert:
                ch = "|"
            elif c - r in diagonals:
                ch = ":"
            else:
                ch = "."
            cells.append(ch)
        lines.append(f"{r:>{width}} " + "".join(cells))
    if opts.show_indices:
        for k, cs in diagram.crossings_by_diagonal.items():
            items = " ".join(f"({c.point[0]},{c.point[1]})=s{c.transposition_index}" for c in cs)
            lines.append(f"k={k}: {items}")
    return "\n".join(lines) + "\n"


def render_wiring(wd: Word, opts: RenderOptions = RenderOptions()) -> str:
    """
    Draw the strands of a word, one column per letter.

    Words that are not reduced are still drawn, with a warning: some pair of
    strands then crosses more than once.
    """
    n, letters = wd.n, wd.letters
    reduced = len(letters) == inversion_count(apply_word(letters, n))
    if opts.format == "ascii":
        return _wiring_ascii(wd, reduced, opts)

    s = opts.scale
    margin = s
    cols = len(letters)
    width = 2 * margin + max(cols, 1) * s
    height = 2 * margin + max(n - 1, 0) * s + (0.8 * s if not reduced else 0)

    def xy(col: float, q: float) -> tuple[float, float]:
        return margin + col * s, margin + (q - 1) * s

    # trace every strand through the columns
    at = list(range(n + 2))
    tracks = {t: [t] for t in range(1, n + 1)}
    for a in letters:
        at[a], at[a + 1] = at[a + 1], at[a]
        where = {at[q]: q for q in range(1, n + 1)}
        for t in tracks:
            tracks[t].append(where[t])

    root = _svg_root(width, height)
    ET.SubElement(root, "title").text = f"wiring diagram of {' '.join(f's{a}' for a in letters) or 'empty word'}"
    labels = ET.SubElement(root, "g", {"class": "labels", "fill": "#555"})
    for q in range(1, n + 1):
        x, y = xy(0, q)
        _svg_text(labels, x - 0.3 * s, y + 0.15 * s, str(q), 0.4 * s, **{"text-anchor": "end"})
        x, y = xy(max(cols, 1), q)
        _svg_text(labels, x + 0.3 * s, y + 0.15 * s, str(q), 0.4 * s)
    strands = ET.SubElement(root, "g", {"class": "strands", "fill": "none", "stroke": "#000", "stroke-width": "1.5"})
    for t, track in tracks.items():
        pts = [xy(c, q) for c, q in enumerate(track)]
        if not letters:
            pts.append(xy(1, t))
        ET.SubElement(strands, "polyline", {"class": "strand", "data-line": str(t),
                                            "points": " ".join(f"{_num(a)},{_num(b)}" for a, b in pts)})
    marks = ET.SubElement(root, "g", {"class": "crossings", "fill": "#fff", "stroke": "#c22", "stroke-width": "1.5"})
    text = ET.SubElement(root, "g", {"class": "indices", "fill": "#c22"}) if opts.show_indices else None
    for col, a in enumerate(letters):
        x, y = xy(col + 0.5, a + 0.5)
        ET.SubElement(marks, "circle", {"class": "crossing", "cx": _num(x), "cy": _num(y), "r": _num(0.12 * s)})
        if text is not None:
            _svg_text(text, x, y - 0.25 * s, str(a), 0.35 * s, **{"text-anchor": "middle", "class": "index"})
    if not reduced:
        _svg_text(root, margin, height - 0.3 * s, "warning: word is not reduced (strands cross twice)",
                  0.35 * s, **{"class": "warning", "fill": "#c60"})
    return _serialize(root)


def _wiring_ascii(wd: Word, reduced: bool, opts: RenderOptions) -> str:
    n, letters = wd.n, wd.letters
    width = len(str(max(n, 1)))
    grid = [[" "] * (2 * len(letters) + 1) for _ in range(max(2 * n - 1, 0))]
    for q in range(n):
        grid[2 * q] = ["-"] * (2 * len(letters) + 1)
    for col, a in enumerate(letters):
        x = 2 * col + 1
        grid[2 * (a - 1)][x] = "\\"
        grid[2 * (a - 1) + 1][x] = "+"
        grid[2 * a][x] = "/"
    final = apply_word(letters, n)
    ends = (0,) + inverse(final).map  # strand that ends at each position
    lines = []
    for y, row in enumerate(grid):
        if y % 2 == 0:
            q = y // 2 + 1
            lines.append(f"{q:>{width}} " + "".join(row) + f" {ends[q]}")
        else:
            lines.append(" " * (width + 1) + "".join(row).rstrip())
    if opts.show_indices and letters:
        lines.append("letters: " + " ".join(f"s{a}" for a in letters))
    if not reduced:
        lines.append("warning: word is not reduced (strands cross twice)")
    return "\n".join(lines) + "\n"
