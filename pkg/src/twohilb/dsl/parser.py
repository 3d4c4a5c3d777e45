"""Recursive-descent parser for cell expressions.

Grammar::

    expr   := vterm [ "." expr ]                 vertical, right-associative
    vterm  := hterm { "o" hterm }                horizontal, left-associative
    hterm  := "dag" "(" expr ")"
            | "scale" "(" scalar "," expr ")"
            | generator
            | "(" expr ")"
    scalar := ["-"] real [ ("+" | "-") real "i" ]
            | ["-"] real "i"
            | "1/sqrt(" int ")"

``A . B`` applies ``B`` first; ``A o B`` puts ``B`` on the inside. ``o`` binds
tighter than ``.``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import DSLArityError, DSLLexError, DSLSyntaxError, DSLUnknownGenerator
from .nodes import Dagger, Expr, GeneratorCall, HComp, IdOf, Measure, PhaseMatrix, Scale, VComp

INT_GENERATORS = ("WL", "WR", "Q", "Copy", "Compare", "Create", "Delete", "Bell")
BARE_GENERATORS = ("MBell", "UBell")

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[()\[\],./+-])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str      # "num", "name", "punct" or "eof"
    text: str
    start: int

    @property
    def end(self) -> int:
        return self.start + len(self.text)


def tokenize(text: str) -> list[Token]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DSLLexError(f"unexpected character {text[pos]!r}", (pos, pos + 1), text)
        if m.lastgroup != "ws":
            out.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(Token("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    # token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind in ("punct", "name") and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise DSLSyntaxError(f"expected {text!r}, found {found!r}",
                                 (self.tok.start, max(self.tok.end, self.tok.start + 1)),
                                 self.text)
        return self.advance()

    def error(self, msg: str, cls=DSLSyntaxError, span=None):
        t = self.tok
        raise cls(msg, span or (t.start, max(t.end, t.start + 1)), self.text)

    # grammar
    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r} after expression")
        return e

    def expr(self) -> Expr:
        upper = self.vterm()
        if self.at("."):
            self.advance()
            lower = self.expr()
            return VComp(upper, lower, (upper.span[0], lower.span[1]))
        return upper

    def vterm(self) -> Expr:
        left = self.hterm()
        while self.at("o"):
            self.advance()
            right = self.hterm()
            left = HComp(left, right, (left.span[0], right.span[1]))
        return left

    def hterm(self) -> Expr:
        t = self.tok
        if self.at("("):
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if t.kind != "name":
            self.error(f"expected an expression, found {t.text or 'end of input'!r}")
        if t.text == "dag":
            self.advance()
            self.expect("(")
            inner = self.expr()
            end = self.expect(")").end
            return Dagger(inner, (t.start, end))
        if t.text == "scale":
            self.advance()
            self.expect("(")
            value = self.scalar()
            self.expect(",")
            inner = self.expr()
            end = self.expect(")").end
            return Scale(value, inner, (t.start, end))
        return self.generator()

    def generator(self) -> Expr:
        t = self.advance()
        name = t.text
        if name in BARE_GENERATORS:
            if self.at("("):
                self.error(f"{name} takes no arguments", DSLArityError)
            return GeneratorCall(name, (), (t.start, t.end))
        if name in INT_GENERATORS:
            args, end = self.int_args()
            if len(args) != 1:
                raise DSLArityError(f"{name} takes exactly 1 argument, got {len(args)}",
                                    (t.start, end), self.text)
            if args[0] < 1:
                raise DSLArityError(f"{name} needs a positive size", (t.start, end), self.text)
            return GeneratorCall(name, tuple(args), (t.start, end))
        if name == "Id":
            self.expect("(")
            inner = self.expr()
            end = self.expect(")").end
            return IdOf(inner, (t.start, end))
        if name == "Meas":
            self.expect("(")
            b = self.tok
            if b.kind != "name":
                self.error("Meas expects a basis name such as Z, X, Y, Bell, C3 or F3")
            self.advance()
            end = self.expect(")").end
            return Measure(b.text, (t.start, end))
        if name == "CPhase":
            self.expect("(")
            rows = self.matrix()
            end = self.expect(")").end
            return PhaseMatrix(rows, (t.start, end))
        raise DSLUnknownGenerator(f"unknown generator {name!r}", (t.start, t.end), self.text)

    def int_args(self) -> tuple[list[int], int]:
        if not self.at("("):
            return [], self.toks[self.i - 1].end
        self.advance()
        args = []
        if not self.at(")"):
            while True:
                t = self.tok
                if t.kind != "num" or not t.text.isdigit():
                    self.error("expected an integer argument")
                args.append(int(self.advance().text))
                if not self.at(","):
                    break
                self.advance()
        return args, self.expect(")").end

    def matrix(self) -> tuple[tuple[complex, ...], ...]:
        start = self.expect("[").start
        rows = []
        while True:
            self.expect("[")
            row = [self.scalar()]
            while self.at(","):
                self.advance()
                row.append(self.scalar())
            self.expect("]")
            rows.append(tuple(row))
            if not self.at(","):
                break
            self.advance()
        end = self.expect("]").end
        if len({len(r) for r in rows}) != 1:
            raise DSLSyntaxError("matrix rows have different lengths", (start, end), self.text)
        return tuple(rows)

    def real(self) -> float:
        sign = 1.0
        if self.at("-"):
            self.advance()
            sign = -1.0
        t = self.tok
        if t.kind != "num":
            self.error("expected a number")
        self.advance()
        return sign * float(t.text)

    def _is_imag_unit(self) -> bool:
        return self.tok.kind == "name" and self.tok.text == "i" \
            and self.tok.start == self.toks[self.i - 1].end

    def scalar(self) -> complex:
        start = self.tok.start
        if self.tok.kind == "num" and self.tok.text == "1" and self.toks[self.i + 1].text == "/":
            self.advance()
            self.advance()
            self.expect("sqrt")
            self.expect("(")
            t = self.tok
            if t.kind != "num" or not t.text.isdigit() or int(t.text) < 1:
                self.error("sqrt needs a positive integer")
            self.advance()
            self.expect(")")
            return complex(1 / math.sqrt(int(t.text)))
        re_part = self.real()
        if self._is_imag_unit():
            self.advance()
            value = complex(0, re_part)
        elif self.at("+") or self.at("-"):
            sign = 1.0 if self.advance().text == "+" else -1.0
            t = self.tok
            if t.kind != "num":
                self.error("expected the imaginary part")
            self.advance()
            if not self._is_imag_unit():
                self.error("expected 'i' after the imaginary part")
            self.advance()
            value = complex(re_part, sign * float(t.text))
        else:
            value = complex(re_part)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise DSLSyntaxError("scalar is not finite", (start, self.tok.start), self.text)
        return value


def parse(text: str) -> Expr:
    return _Parser(text).parse()
