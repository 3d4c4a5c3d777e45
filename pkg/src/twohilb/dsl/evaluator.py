"""Evaluate expressions to :class:`OneCell` or :class:`TwoCell` values.

A 1-cell appearing where a 2-cell is needed stands for its identity 2-cell,
and ``dag`` of a 1-cell is the 1-cell itself. Composition is strict: boundary
1-cells must have identical dims, no rebracketing is inserted.
"""

from __future__ import annotations

from typing import Union

import numpy as np

from .. import generators as gen
from ..core import CompositionError, OneCell, TwoCell, dagger2, hcomp1, hcomp2, identity_2, \
    scalar_mul, vcomp
from .errors import DSLTypeError
from .nodes import Dagger, Expr, GeneratorCall, HComp, IdOf, Measure, PhaseMatrix, Scale, VComp
from .parser import parse

Cell = Union[OneCell, TwoCell]

_ONE_CELLS = {"WL": gen.witness_left, "WR": gen.witness_right, "Q": gen.qudit}
_TWO_CELLS = {"Copy": gen.copy, "Compare": gen.compare, "Create": gen.create,
              "Delete": gen.delete, "Bell": gen.bell_state}
_BARE = {"MBell": gen.bell_measurement, "UBell": gen.bell_corrections}


def _promote(c: Cell) -> TwoCell:
    return identity_2(c) if isinstance(c, OneCell) else c


def _describe(c: Cell) -> str:
    if isinstance(c, OneCell):
        return f"1-cell {c}"
    return f"2-cell {c.source} => {c.target}"


class Evaluator:
    def __init__(self, text: str | None = None):
        self.text = text

    def fail(self, e: Expr, msg: str):
        raise DSLTypeError(msg, e.span, self.text)

    def eval(self, e: Expr) -> Cell:
        method = getattr(self, "eval_" + type(e).__name__)
        return method(e)

    def eval_GeneratorCall(self, e: GeneratorCall) -> Cell:
        if e.name in _ONE_CELLS:
            return _ONE_CELLS[e.name](*e.args)
        if e.name in _TWO_CELLS:
            return _TWO_CELLS[e.name](*e.args)
        return _BARE[e.name]()

    def eval_IdOf(self, e: IdOf) -> Cell:
        inner = self.eval(e.inner)
        if not isinstance(inner, OneCell):
            self.fail(e, f"Id expects a 1-cell, got a {_describe(inner)}")
        return identity_2(inner)

    def eval_Measure(self, e: Measure) -> Cell:
        try:
            basis = gen.named_basis(e.basis)
        except KeyError:
            self.fail(e, f"unknown basis {e.basis!r}")
        return gen.nondegenerate_measurement(basis)

    def eval_PhaseMatrix(self, e: PhaseMatrix) -> Cell:
        try:
            return gen.controlled_phase(np.array(e.rows, dtype=complex))
        except ValueError as exc:
            self.fail(e, str(exc))

    def eval_HComp(self, e: HComp) -> Cell:
        left, right = self.eval(e.left), self.eval(e.right)
        try:
            if isinstance(left, OneCell) and isinstance(right, OneCell):
                return hcomp1(left, right)
            return hcomp2(_promote(left), _promote(right))
        except CompositionError as exc:
            self.fail(e, f"{exc}; outer is a {_describe(left)}, inner is a {_describe(right)}")

    def eval_VComp(self, e: VComp) -> Cell:
        upper, lower = _promote(self.eval(e.upper)), _promote(self.eval(e.lower))
        if lower.target != upper.source:
            self.fail(e, f"lower cell ends at {lower.target} but upper cell starts at "
                         f"{upper.source}")
        return vcomp(upper, lower)

    def eval_Dagger(self, e: Dagger) -> Cell:
        inner = self.eval(e.inner)
        return inner if isinstance(inner, OneCell) else dagger2(inner)

    def eval_Scale(self, e: Scale) -> Cell:
        return scalar_mul(e.value, _promote(self.eval(e.inner)))


def evaluate(e: Expr, text: str | None = None) -> Cell:
    return Evaluator(text).eval(e)


def evaluate_text(text: str) -> Cell:
    return evaluate(parse(text), text)
