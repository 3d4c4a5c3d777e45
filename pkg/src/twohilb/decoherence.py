"""Systems leaking classical data into an environment.

An environment is a classical data type: a space ``E`` with copying
``delta: E -> E (x) E`` and deleting ``epsilon: E -> C``. A system ``S``
interacts with it through ``tau: S -> E (x) S``, which must be a comodule
(coaction) for the copying. Maps that commute with the interactions are
protected. Tensor factors are always flattened environment first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import linalg as la
from .algebra import LawReport
from .linalg import DEFAULT_TOL


@dataclass(frozen=True, eq=False)
class ClassicalDataType:
    dim: int
    delta: np.ndarray
    epsilon: np.ndarray

    def __post_init__(self):
        d = self.dim
        delta, eps = la.as_matrix(self.delta), la.as_matrix(self.epsilon)
        if delta.shape != (d * d, d) or eps.shape != (1, d):
            raise ValueError(f"expected delta {d * d}x{d} and epsilon 1x{d}")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "epsilon", eps)

    def same_as(self, other: "ClassicalDataType", tol: float = DEFAULT_TOL) -> bool:
        return (self.dim == other.dim and la.approx_eq(self.delta, other.delta, tol)
                and la.approx_eq(self.epsilon, other.epsilon, tol))


@dataclass(frozen=True, eq=False)
class InteractionSystem:
    sys_dim: int
    env: ClassicalDataType
    tau: np.ndarray

    def __post_init__(self):
        tau = la.as_matrix(self.tau)
        if tau.shape != (self.env.dim * self.sys_dim, self.sys_dim):
            raise ValueError(f"tau must be {self.env.dim * self.sys_dim}x{self.sys_dim}")
        object.__setattr__(self, "tau", tau)


@dataclass(frozen=True)
class ComonoidReport(LawReport):
    coassoc: bool
    counit: bool
    cocomm: bool


@dataclass(frozen=True)
class ClassicalStructureReport(LawReport):
    coassoc: bool
    counit: bool
    cocomm: bool
    frobenius: bool
    special: bool


@dataclass(frozen=True)
class InteractionReport(LawReport):
    coassoc: bool
    counit: bool


def standard_cdt(n: int) -> ClassicalDataType:
    """Copy and delete the standard basis of C^n."""
    if n < 1:
        raise ValueError("n must be positive")
    delta = np.zeros((n * n, n), dtype=complex)
    for i in range(n):
        delta[i * n + i, i] = 1.0
    return ClassicalDataType(n, delta, np.ones((1, n)))


def basis_cdt(basis_matrix) -> ClassicalDataType:
    """Copy and delete the columns of a unitary."""
    u = la.as_matrix(basis_matrix)
    if not la.is_unitary(u):
        raise ValueError("basis matrix must be unitary")
    c = standard_cdt(u.shape[0])
    return ClassicalDataType(c.dim, la.kron(u, u) @ c.delta @ la.dagger(u),
                             c.epsilon @ la.dagger(u))


def trivial_cdt() -> ClassicalDataType:
    return ClassicalDataType(1, [[1]], [[1]])


def comonoid_residuals(c: ClassicalDataType) -> dict[str, float]:
    d, eps = c.delta, c.epsilon
    i = la.eye(c.dim)
    return {
        "coassoc": la.max_abs_diff(la.kron(d, i) @ d, la.kron(i, d) @ d),
        "counit": max(la.max_abs_diff(la.kron(eps, i) @ d, i),
                      la.max_abs_diff(la.kron(i, eps) @ d, i)),
        "cocomm": la.max_abs_diff(la.tensor_swap(c.dim, c.dim) @ d, d),
    }


def classical_structure_residuals(c: ClassicalDataType) -> dict[str, float]:
    d, dd = c.delta, la.dagger(c.delta)
    i = la.eye(c.dim)
    return {
        **comonoid_residuals(c),
        "frobenius": la.max_abs_diff(la.kron(i, dd) @ la.kron(d, i), d @ dd),
        "special": la.max_abs_diff(dd @ d, i),
    }


def check_comonoid(c: ClassicalDataType, tol: float = DEFAULT_TOL) -> ComonoidReport:
    return ComonoidReport(**{k: v <= tol for k, v in comonoid_residuals(c).items()})


def check_classical_structure(c: ClassicalDataType,
                              tol: float = DEFAULT_TOL) -> ClassicalStructureReport:
    res = classical_structure_residuals(c)
    return ClassicalStructureReport(**{k: v <= tol for k, v in res.items()})


def self_interaction(c: ClassicalDataType) -> InteractionSystem:
    """The environment's own copying map, read as an interaction ``E -> E (x) E``."""
    return InteractionSystem(c.dim, c, c.delta)


def trivial_interaction(s_dim: int) -> InteractionSystem:
    return InteractionSystem(s_dim, trivial_cdt(), np.eye(s_dim))


def interaction_residuals(sys: InteractionSystem) -> dict[str, float]:
    env, tau = sys.env, sys.tau
    i_s, i_e = la.eye(sys.sys_dim), la.eye(env.dim)
    return {
        "coassoc": la.max_abs_diff(la.kron(env.delta, i_s) @ tau, la.kron(i_e, tau) @ tau),
        "counit": la.max_abs_diff(la.kron(env.epsilon, i_s) @ tau, i_s),
    }


def check_interaction(sys: InteractionSystem, tol: float = DEFAULT_TOL) -> InteractionReport:
    return InteractionReport(**{k: v <= tol for k, v in interaction_residuals(sys).items()})


def interactions_commute(a: InteractionSystem, b: InteractionSystem,
                         tol: float = DEFAULT_TOL) -> bool:
    """Whether applying ``a`` then ``b`` matches ``b`` then ``a`` up to swapping E, E'."""
    if a.sys_dim != b.sys_dim:
        raise ValueError("interactions act on systems of different dimension")
    e, e2 = a.env.dim, b.env.dim
    first = la.kron(la.eye(e), b.tau) @ a.tau
    swap = la.kron(la.tensor_swap(e2, e), la.eye(a.sys_dim))
    second = swap @ la.kron(la.eye(e2), a.tau) @ b.tau
    return la.approx_eq(first, second, tol)


def equalizer_map(a: InteractionSystem, b: InteractionSystem) -> np.ndarray:
    """``(tau (x) 1) - (swap (x) 1)(1 (x) tau')`` on ``S (x) S'``.

    Its kernel is the tensor product of the two systems over the environment.
    """
    s, s2, e = a.sys_dim, b.sys_dim, a.env.dim
    left = la.kron(a.tau, la.eye(s2))
    right = la.kron(la.tensor_swap(s, e), la.eye(s2)) @ la.kron(la.eye(s), b.tau)
    return la.as_matrix(left - right)


def tensor_over_environment(a: InteractionSystem, b: InteractionSystem,
                            tol: float = la.NULLSPACE_TOL
                            ) -> tuple[np.ndarray, InteractionSystem]:
    """Isometric embedding of ``S (x)_E S'`` into ``S (x) S'`` and its interaction."""
    if not a.env.same_as(b.env):
        raise ValueError("both interactions must use the same environment")
    emb = la.nullspace_basis(equalizer_map(a, b), tol)
    if emb.shape[1]:
        emb = la.canonical_basis(emb)
    k = emb.shape[1]
    e = a.env.dim
    induced = la.kron(la.eye(e), la.dagger(emb)) @ la.kron(a.tau, la.eye(b.sys_dim)) @ emb
    return emb, InteractionSystem(k, a.env, induced)


def buffered_interaction(tau_b: InteractionSystem, s_dim: int) -> InteractionSystem:
    """``tau_B (x) 1_S`` as an interaction of ``B (x) S``."""
    return InteractionSystem(tau_b.sys_dim * s_dim, tau_b.env,
                             la.kron(tau_b.tau, la.eye(s_dim)))


def is_protected(f, frm: InteractionSystem, to: InteractionSystem,
                 tol: float = DEFAULT_TOL) -> bool:
    f = la.as_matrix(f)
    if f.shape != (to.sys_dim, frm.sys_dim):
        raise ValueError(f"map must be {to.sys_dim}x{frm.sys_dim}")
    if not frm.env.same_as(to.env):
        raise ValueError("interactions must share an environment")
    return la.approx_eq(to.tau @ f, la.kron(la.eye(frm.env.dim), f) @ frm.tau, tol)


def copying_interaction(n: int, s_dim: int) -> InteractionSystem:
    """Copy the classical register of ``C^n (x) C^s`` into the environment."""
    return buffered_interaction(self_interaction(standard_cdt(n)), s_dim)


def controlled_form(f, n: int, d: int, tol: float = DEFAULT_TOL) -> Optional[list[np.ndarray]]:
    """The blocks ``f_i`` when ``f = sum_i |i><i| (x) f_i``, else ``None``.

    Such a form exists exactly when ``f`` is protected for the interaction
    copying the ``C^n`` register.
    """
    f = la.as_matrix(f)
    if f.shape != (n * d, n * d):
        raise ValueError(f"map must be {n * d}x{n * d}")
    sys = copying_interaction(n, d)
    if not is_protected(f, sys, sys, tol):
        return None
    return [la.as_matrix(f[i * d:(i + 1) * d, i * d:(i + 1) * d]) for i in range(n)]
