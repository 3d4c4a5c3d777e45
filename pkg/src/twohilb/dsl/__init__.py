"""A small language for pasting named cells together."""

from .errors import (DSLArityError, DSLError, DSLLexError, DSLSyntaxError, DSLTypeError,
                     DSLUnknownGenerator)
from .evaluator import evaluate, evaluate_text
from .nodes import Dagger, Expr, GeneratorCall, HComp, IdOf, Measure, PhaseMatrix, Scale, VComp
from .parser import parse, tokenize
from .printer import format_scalar, to_text

__all__ = [
    "DSLArityError", "DSLError", "DSLLexError", "DSLSyntaxError", "DSLTypeError",
    "DSLUnknownGenerator", "Dagger", "Expr", "GeneratorCall", "HComp", "IdOf", "Measure",
    "PhaseMatrix", "Scale", "VComp", "evaluate", "evaluate_text", "format_scalar", "parse",
    "to_text", "tokenize",
]
