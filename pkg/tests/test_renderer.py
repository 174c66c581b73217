"""Tests for DOT/TikZ rendering and output highlighting."""

import pytest

from meander_py.composition import parse_pair
from meander_py.config import Config
from meander_py.highlighter import SyntaxHighlighter
from meander_py.renderer import MeanderRenderer

pytestmark = pytest.mark.usefixtures("isolated_config_dir")


@pytest.fixture
def renderer():
    return MeanderRenderer(Config())


def test_dot_counts(renderer):
    """Test DOT edge counts."""
    dot = renderer.render_pair(parse_pair("3,2,2|2,5"), "dot")
    lines = dot.splitlines()
    assert lines[0] == "graph meander {"
    assert sum(1 for line in lines if 'pos="top"' in line) == 3
    assert sum(1 for line in lines if 'pos="bottom"' in line) == 3
    assert sum(1 for line in lines if line.startswith('\t\t"')) == 7


def test_dot_single_vertex(renderer):
    """Test DOT for one vertex."""
    dot = renderer.render_pair(parse_pair("1|1"), "dot")
    assert '\t\t"1";' in dot
    assert "--" not in dot


def test_dot_modified_loops(renderer):
    """Test DOT loops."""
    dot = renderer.render_pair(parse_pair("5,2,2|2,4,3"), "dot", modified=True)
    assert '"3" -- "3" [pos="top", loop="top"' in dot
    assert '"8" -- "8" [pos="bottom", loop="bottom"' in dot
    assert 'label="M\'(5,2,2|2,4,3)";' in dot


def test_tikz_loops(renderer):
    """Test TikZ loops."""
    tikz = renderer.render_pair(parse_pair("5,2,2|2,4,3"), "tikz", modified=True)
    assert "% top loop at 3" in tikz
    assert "% bottom loop at 8" in tikz
    assert tikz.startswith("% M'(5,2,2|2,4,3)\n\\begin{tikzpicture}[scale=1.0]")


def test_tikz_arcs(renderer):
    """Test TikZ arcs."""
    tikz = renderer.render_pair(parse_pair("2|2"), "tikz")
    assert "\\draw[black] (1,0) arc[start angle=180, end angle=0, radius=0.5];" in tikz
    assert "\\draw[gray] (1,0) arc[start angle=180, end angle=360, radius=0.5];" in tikz


def test_render_is_deterministic(renderer):
    """Test that rendering is deterministic."""
    pair = parse_pair("5,2,2|2,4,3")
    assert renderer.render_pair(pair, "dot") == renderer.render_pair(pair, "dot")


def test_colors_from_config():
    """Test colors taken from the config."""
    config = Config()
    config.override("render.top_color", "red")
    dot = MeanderRenderer(config).render_pair(parse_pair("2|2"), "dot")
    assert "color=red" in dot


def test_unknown_format(renderer):
    """Test an unknown render format."""
    with pytest.raises(ValueError):
        renderer.render_pair(parse_pair("2|2"), "svg")


def test_highlighter_disabled_returns_text():
    """Test that disabled highlighting returns the input."""
    highlighter = SyntaxHighlighter(enabled=False)
    assert highlighter.highlight_document("graph g {}\n", "dot") == "graph g {}\n"


def test_highlighter_adds_escapes():
    """Test that highlighting adds escapes."""
    if not SyntaxHighlighter.is_available():
        pytest.skip("Pygments not installed")
    highlighted = SyntaxHighlighter().highlight_document("graph g { a -- b; }\n", "dot")
    assert "\x1b[" in highlighted
