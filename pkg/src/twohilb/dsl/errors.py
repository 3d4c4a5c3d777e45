from __future__ import annotations


class DSLError(Exception):
    """An error tied to a span ``[start, end)`` of the source text."""

    kind = "error"

    def __init__(self, message: str, span: tuple[int, int], text: str | None = None):
        self.message = message
        self.span = span
        self.text = text
        super().__init__(self.describe())

    @property
    def position(self) -> int:
        return self.span[0]

    def describe(self) -> str:
        start, end = self.span
        where = f"column {start + 1}"
        if self.text is not None:
            snippet = self.text[start:end] or self.text[start:start + 1]
            if snippet:
                where += f" ({snippet!r})"
        return f"{self.kind} at {where}: {self.message}"


class DSLLexError(DSLError):
    kind = "lexical error"


class DSLSyntaxError(DSLError):
    kind = "syntax error"


class DSLArityError(DSLSyntaxError):
    kind = "arity error"


class DSLUnknownGenerator(DSLSyntaxError):
    kind = "unknown generator"


class DSLTypeError(DSLError):
    kind = "type error"
