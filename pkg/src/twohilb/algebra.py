"""Classical structures in the scalar sector and their modules.

A witness ``W_L(n), W_R(n)`` induces a special commutative dagger-Frobenius
algebra on C^n, the one copying the standard basis. Measurements give modules
for it. Everything here is a plain matrix; the law checks return small report
objects with one boolean per equation.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from . import linalg as la
from .generators import ProjectorFamily
from .linalg import DEFAULT_TOL


@dataclass(frozen=True, eq=False)
class FrobeniusData:
    """Multiplication ``d x d^2`` and unit ``d x 1`` on C^d."""

    carrier: int
    mult: np.ndarray
    unit: np.ndarray

    def __post_init__(self):
        d = self.carrier
        mult, unit = la.as_matrix(self.mult), la.as_matrix(self.unit)
        if mult.shape != (d, d * d) or unit.shape != (d, 1):
            raise ValueError(f"expected mult {d}x{d * d} and unit {d}x1")
        object.__setattr__(self, "mult", mult)
        object.__setattr__(self, "unit", unit)

    @property
    def comult(self) -> np.ndarray:
        return la.dagger(self.mult)

    @property
    def counit(self) -> np.ndarray:
        return la.dagger(self.unit)


@dataclass(frozen=True, eq=False)
class ModuleData:
    algebra: FrobeniusData
    space: int
    action: np.ndarray

    def __post_init__(self):
        act = la.as_matrix(self.action)
        m, d = self.space, self.algebra.carrier
        if act.shape != (m, d * m):
            raise ValueError(f"action must be {m}x{d * m}")
        object.__setattr__(self, "action", act)


@dataclass(frozen=True)
class LawReport:
    """Base for the per-law reports; ``all()`` is true when every law holds."""

    def all(self) -> bool:
        return all(getattr(self, f.name) for f in fields(self))

    def failed(self) -> list[str]:
        return [f.name for f in fields(self) if not getattr(self, f.name)]


@dataclass(frozen=True)
class FrobeniusReport(LawReport):
    assoc: bool
    unit: bool
    comm: bool
    frobenius: bool
    special: bool


@dataclass(frozen=True)
class ModuleReport(LawReport):
    assoc: bool
    unit: bool


def induced_frobenius(n: int) -> FrobeniusData:
    if n < 1:
        raise ValueError("n must be positive")
    mult = np.zeros((n, n * n), dtype=complex)
    for i in range(n):
        mult[i, i * n + i] = 1.0
    return FrobeniusData(n, mult, np.ones((n, 1)))


def transport_frobenius(u, a: FrobeniusData, tol: float = DEFAULT_TOL) -> FrobeniusData:
    """Conjugate ``a`` along the unitary ``u``: ``u m (u^dag (x) u^dag)``."""
    u = la.as_matrix(u)
    if u.shape != (a.carrier, a.carrier) or not la.is_unitary(u, tol):
        raise ValueError("transport needs a unitary of the carrier's size")
    ud = la.dagger(u)
    return FrobeniusData(a.carrier, u @ a.mult @ la.kron(ud, ud), u @ a.unit)


def basis_frobenius(basis_matrix) -> FrobeniusData:
    """The classical structure copying the columns of a unitary."""
    u = la.as_matrix(basis_matrix)
    return transport_frobenius(u, induced_frobenius(u.shape[0]))


def frobenius_residuals(a: FrobeniusData) -> dict[str, float]:
    """Largest entrywise deviation in each law, keyed like :class:`FrobeniusReport`."""
    d = a.carrier
    m, u, md = a.mult, a.unit, a.comult
    i = la.eye(d)
    return {
        "assoc": la.max_abs_diff(m @ la.kron(m, i), m @ la.kron(i, m)),
        "unit": max(la.max_abs_diff(m @ la.kron(u, i), i),
                    la.max_abs_diff(m @ la.kron(i, u), i)),
        "comm": la.max_abs_diff(m @ la.tensor_swap(d, d), m),
        "frobenius": la.max_abs_diff(la.kron(i, m) @ la.kron(md, i), md @ m),
        "special": la.max_abs_diff(m @ md, i),
    }


def check_frobenius(a: FrobeniusData, tol: float = DEFAULT_TOL) -> FrobeniusReport:
    return FrobeniusReport(**{k: v <= tol for k, v in frobenius_residuals(a).items()})


def module_from_measurement(p: ProjectorFamily) -> ModuleData:
    """Action of the induced algebra on C^d: ``|i> (x) phi  ->  P_i phi``."""
    n, d = len(p.projectors), p.dimension
    action = np.hstack(p.projectors)
    return ModuleData(induced_frobenius(n), d, action)


def module_residuals(mod: ModuleData) -> dict[str, float]:
    a, act = mod.algebra, mod.action
    ia, im = la.eye(a.carrier), la.eye(mod.space)
    return {
        "assoc": la.max_abs_diff(act @ la.kron(ia, act), act @ la.kron(a.mult, im)),
        "unit": la.max_abs_diff(act @ la.kron(a.unit, im), im),
    }


def check_module(mod: ModuleData, tol: float = DEFAULT_TOL) -> ModuleReport:
    return ModuleReport(**{k: v <= tol for k, v in module_residuals(mod).items()})
