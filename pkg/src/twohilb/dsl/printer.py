"""Fully parenthesized printing; ``parse(to_text(e)) == e``."""

from __future__ import annotations

from .nodes import Dagger, Expr, GeneratorCall, HComp, IdOf, Measure, PhaseMatrix, Scale, VComp


def format_scalar(z: complex) -> str:
    re_part, im = repr(float(z.real)), float(z.imag)
    if im == 0.0:
        return re_part
    sign = "-" if im < 0 else "+"
    return f"{re_part}{sign}{repr(abs(im))}i"


def to_text(e: Expr) -> str:
    if isinstance(e, GeneratorCall):
        if not e.args:
            return e.name
        return f"{e.name}({', '.join(str(a) for a in e.args)})"
    if isinstance(e, IdOf):
        return f"Id({to_text(e.inner)})"
    if isinstance(e, Measure):
        return f"Meas({e.basis})"
    if isinstance(e, PhaseMatrix):
        rows = ", ".join("[" + ", ".join(format_scalar(z) for z in row) + "]" for row in e.rows)
        return f"CPhase([{rows}])"
    if isinstance(e, HComp):
        return f"({to_text(e.left)} o {to_text(e.right)})"
    if isinstance(e, VComp):
        return f"({to_text(e.upper)} . {to_text(e.lower)})"
    if isinstance(e, Dagger):
        return f"dag({to_text(e.inner)})"
    if isinstance(e, Scale):
        return f"scale({format_scalar(e.value)}, {to_text(e.inner)})"
    raise TypeError(f"not an expression node: {e!r}")
