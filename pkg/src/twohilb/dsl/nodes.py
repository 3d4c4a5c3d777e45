"""Syntax tree of the cell expression language.

Every node records the character span it was parsed from. Spans are excluded
from equality, so a reparsed expression compares equal to the original.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

Span = tuple[int, int]


@dataclass(frozen=True)
class GeneratorCall:
    name: str
    args: tuple[int, ...] = ()
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class IdOf:
    inner: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Measure:
    basis: str
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class PhaseMatrix:
    rows: tuple[tuple[complex, ...], ...]
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class HComp:
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class VComp:
    upper: "Expr"
    lower: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Dagger:
    inner: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Scale:
    value: complex
    inner: "Expr"
    span: Span = field(default=(0, 0), compare=False)


Expr = Union[GeneratorCall, IdOf, Measure, PhaseMatrix, HComp, VComp, Dagger, Scale]
