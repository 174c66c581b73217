"""Syntax highlighting for rendered DOT and TikZ output."""

try:
    from pygments import highlight
    from pygments.lexers import get_lexer_by_name
    from pygments.formatters import Terminal256Formatter
    from pygments.util import ClassNotFound
    PYGMENTS_AVAILABLE = True
except ImportError:
    PYGMENTS_AVAILABLE = False


# Render format -> Pygments lexer alias
LEXERS = {
    "dot": "graphviz",
    "tikz": "tex",
}


class SyntaxHighlighter:
    """Syntax highlighter for DOT/TikZ documents."""

    def __init__(self, enabled: bool = True, style: str = "monokai"):
        """Initialize syntax highlighter.

        Args:
            enabled: Whether to enable syntax highlighting (requires Pygments)
            style: Pygments style name
        """
        self.enabled = enabled and PYGMENTS_AVAILABLE
        if self.enabled:
            try:
                self.formatter = Terminal256Formatter(style=style)
            except ClassNotFound:
                self.formatter = Terminal256Formatter(style="monokai")

    def highlight_document(self, text: str, fmt: str) -> str:
        """Highlight a rendered document.

        Args:
            text: DOT or TikZ source
            fmt: Render format name ('dot' or 'tikz')

        Returns:
            Text with ANSI escape codes, or the plain text if highlighting is unavailable
        """
        if not self.enabled or fmt not in LEXERS:
            return text

        try:
            lexer = get_lexer_by_name(LEXERS[fmt])
        except ClassNotFound:
            return text
        return highlight(text, lexer, self.formatter)

    @staticmethod
    def is_available() -> bool:
        """Check if Pygments is available."""
        return PYGMENTS_AVAILABLE
