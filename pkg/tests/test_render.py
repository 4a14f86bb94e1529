import xml.etree.ElementTree as ET

import pytest

from bandperm.core import Permutation, Word, identity, inversion_count
from bandperm.render import RenderOptions, render_hook, render_wiring

NS = {"svg": "http://www.w3.org/2000/svg"}
FIG2 = Permutation((5, 4, 7, 1, 9, 2, 3, 10, 8, 6))


def parse(doc):
    return ET.fromstring(doc.split("\n", 1)[1])


def find(root, tag, cls):
    return [e for e in root.iter(f"{{{NS['svg']}}}{tag}") if e.get("class") == cls]


class TestHookSvg:
    def test_identity(self):
        root = parse(render_hook(identity(4)))
        assert len(find(root, "polyline", "hook")) == 4
        assert find(root, "circle", "crossing") == []

    def test_single_swap(self):
        root = parse(render_hook(Permutation((2, 1)), RenderOptions(show_indices=True)))
        assert len(find(root, "polyline", "hook")) == 2
        marks = find(root, "circle", "crossing")
        assert len(marks) == 1
        # grid point (1, 1) with 30 units per cell and a 30 unit margin
        assert (marks[0].get("cx"), marks[0].get("cy")) == ("60", "60")
        assert [t.text for t in find(root, "text", "index")] == ["1"]

    def test_figure2(self):
        root = parse(render_hook(FIG2, RenderOptions(show_indices=True, show_diagonals=True)))
        assert len(find(root, "circle", "crossing")) == 18 == inversion_count(FIG2)
        diags = find(root, "line", "diagonal")
        assert sorted(int(d.get("data-k")) for d in diags) == [-3, -2, -1, 0, 1, 2, 3]
        assert len(find(root, "text", "index")) == 18

    def test_deterministic(self):
        opts = RenderOptions(show_indices=True, show_diagonals=True, scale=12.5)
        assert render_hook(FIG2, opts) == render_hook(FIG2, opts)

    def test_options_validate(self):
        with pytest.raises(ValueError):
            RenderOptions(scale=0)
        with pytest.raises(ValueError):
            RenderOptions(format="png")


class TestHookAscii:
    def test_marker_count(self):
        art = render_hook(FIG2, RenderOptions("ascii"))
        assert art.count("+") == 18
        assert art.count("o") == 10

    def test_indices_legend(self):
        art = render_hook(Permutation((2, 1)), RenderOptions("ascii", show_indices=True))
        assert art.splitlines() == ["1 +o", "2 o.", "k=0: (1,1)=s1"]


class TestWiring:
    def test_figure1(self):
        root = parse(render_wiring(Word(5, (2, 4, 3, 1, 4)), RenderOptions(show_indices=True)))
        assert len(find(root, "circle", "crossing")) == 5
        assert len(find(root, "polyline", "strand")) == 5
        assert find(root, "text", "warning") == []

    def test_empty_word(self):
        root = parse(render_wiring(Word(3, ())))
        strands = find(root, "polyline", "strand")
        assert len(strands) == 3
        assert find(root, "circle", "crossing") == []

    def test_non_reduced_warns(self):
        doc = render_wiring(Word(2, (1, 1)))
        root = parse(doc)
        assert len(find(root, "circle", "crossing")) == 2
        assert len(find(root, "text", "warning")) == 1
        art = render_wiring(Word(2, (1, 1)), RenderOptions("ascii"))
        assert art.count("+") == 2 and "warning" in art

    def test_ascii_figure1(self):
        art = render_wiring(Word(5, (2, 4, 3, 1, 4)), RenderOptions("ascii"))
        assert art.count("+") == 5 and "warning" not in art
        # right-hand labels list the strand ending at each position: the inverse of 25143
        ends = [int(line.split()[-1]) for line in art.splitlines()[::2]]
        assert ends == [3, 1, 5, 4, 2]
