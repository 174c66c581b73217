"""DOT and TikZ renderers for meander diagrams."""

from typing import List

from .composition import SeaweedPair, render_pair
from .config import Config
from .meander import Meander, build_meander


class MeanderRenderer:
    """Render meanders as Graphviz DOT or TikZ source.

    Output is deterministic: arcs are emitted in sorted order.
    """

    FORMATS = ("dot", "tikz")

    def __init__(self, config: Config):
        """Initialize renderer.

        Args:
            config: Configuration object (colors and TikZ scale)
        """
        self.config = config
        self.top_color = config.get("render.top_color", "black")
        self.bottom_color = config.get("render.bottom_color", "gray")
        self.scale = config.get("render.tikz_scale", 1.0)

    def render_pair(self, pair: SeaweedPair, fmt: str = "dot", modified: bool = False) -> str:
        """Build the (modified) meander of `pair` and render it."""
        meander = build_meander(pair, modified=modified)
        title = ("M'" if modified else "M") + f"({render_pair(pair)})"
        return self.render(meander, fmt, title)

    def render(self, meander: Meander, fmt: str = "dot", title: str = "") -> str:
        if fmt == "dot":
            return self.to_dot(meander, title)
        if fmt == "tikz":
            return self.to_tikz(meander, title)
        raise ValueError(f"unknown format {fmt!r}; expected one of {self.FORMATS}")

    def to_dot(self, meander: Meander, title: str = "") -> str:
        """Undirected graph with vertices in one rank, arcs tagged by side."""
        lines: List[str] = ["graph meander {"]
        if title:
            lines.append(f'\tlabel="{title}";')
        lines.append("\tnode [shape=circle];")
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for v in range(1, meander.n + 1):
            lines.append(f'\t\t"{v}";')
        lines.append("\t}")
        # Invisible spine keeps the vertices in line order.
        if meander.n > 1:
            spine = " -- ".join(f'"{v}"' for v in range(1, meander.n + 1))
            lines.append(f"\t{spine} [style=invis];")
        for i, j in sorted(meander.top_arcs):
            lines.append(f'\t"{i}" -- "{j}" [pos="top", constraint=false, color={self.top_color}];')
        for i, j in sorted(meander.bottom_arcs):
            lines.append(f'\t"{i}" -- "{j}" [pos="bottom", color={self.bottom_color}];')
        for v in sorted(meander.top_loops):
            lines.append(f'\t"{v}" -- "{v}" [pos="top", loop="top", color={self.top_color}];')
        for v in sorted(meander.bottom_loops):
            lines.append(f'\t"{v}" -- "{v}" [pos="bottom", loop="bottom", color={self.bottom_color}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_tikz(self, meander: Meander, title: str = "") -> str:
        """Vertices at (i, 0), semicircles above and below, loops as small circles."""
        lines: List[str] = []
        if title:
            lines.append(f"% {title}")
        lines.append(f"\\begin{{tikzpicture}}[scale={self.scale}]")
        for v in range(1, meander.n + 1):
            lines.append(f"  \\fill ({v},0) circle[radius=2pt] node[above right=1pt] {{\\tiny {v}}};")
        for i, j in sorted(meander.top_arcs):
            radius = (j - i) / 2
            lines.append(f"  \\draw[{self.top_color}] ({i},0) arc[start angle=180, end angle=0, radius={radius:g}];")
        for i, j in sorted(meander.bottom_arcs):
            radius = (j - i) / 2
            lines.append(f"  \\draw[{self.bottom_color}] ({i},0) arc[start angle=180, end angle=360, radius={radius:g}];")
        for v in sorted(meander.top_loops):
            lines.append(f"  \\draw[{self.top_color}] ({v},0.25) circle[radius=0.25]; % top loop at {v}")
        for v in sorted(meander.bottom_loops):
            lines.append(f"  \\draw[{self.bottom_color}] ({v},-0.25) circle[radius=0.25]; % bottom loop at {v}")
        lines.append("\\end{tikzpicture}")
        return "\n".join(lines) + "\n"
