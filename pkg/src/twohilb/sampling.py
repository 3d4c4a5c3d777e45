"""Random cells, kits and interactions for property checks."""

from __future__ import annotations

import numpy as np

from . import linalg as la
from .core import OneCell, TwoCell, from_function
from .decoherence import InteractionSystem, buffered_interaction, self_interaction, standard_cdt
from .generators import OrthonormalBasis, ProjectorFamily, computational_basis, fourier_basis


def random_one_cell(rng: np.random.Generator, source: int, target: int,
                    max_dim: int = 3) -> OneCell:
    return OneCell(source, target, rng.integers(0, max_dim + 1, size=(target, source)).tolist())


def random_two_cell(rng: np.random.Generator, f: OneCell, g: OneCell) -> TwoCell:
    return from_function(f, g, lambda i, j: la.random_matrix(rng, g.dims[i][j], f.dims[i][j]))


def random_composable_quadruple(rng: np.random.Generator, max_obj: int = 3, max_dim: int = 3):
    """``(beta2, beta, alpha2, alpha)`` with ``alpha: f => f' => f''`` and
    ``beta: g => g' => g''`` where ``g`` composes after ``f``."""
    a, b, c = (int(x) for x in rng.integers(1, max_obj + 1, size=3))
    f0, f1, f2 = (random_one_cell(rng, a, b, max_dim) for _ in range(3))
    g0, g1, g2 = (random_one_cell(rng, b, c, max_dim) for _ in range(3))
    return (random_two_cell(rng, g1, g2), random_two_cell(rng, g0, g1),
            random_two_cell(rng, f1, f2), random_two_cell(rng, f0, f1))


def random_unitary_kit(rng: np.random.Generator, d: int = 2) -> list[np.ndarray]:
    """``d^2`` independent Haar unitaries; almost surely not trace-orthogonal."""
    return [la.random_unitary(rng, d) for _ in range(d * d)]


def random_orthogonal_kit(rng: np.random.Generator, base: list[np.ndarray]) -> list[np.ndarray]:
    """``V U_k W`` for Haar ``V, W``; preserves trace-orthogonality of ``base``."""
    d = base[0].shape[0]
    v, w = la.random_unitary(rng, d), la.random_unitary(rng, d)
    return [la.as_matrix(v @ u @ w) for u in base]


def random_unbiased_pair(rng: np.random.Generator, d: int) -> tuple[OrthonormalBasis,
                                                                      OrthonormalBasis]:
    """A complementary pair: the standard and Fourier bases rotated by one unitary."""
    u = la.random_unitary(rng, d)
    return (OrthonormalBasis.from_columns(u @ computational_basis(d).matrix()),
            OrthonormalBasis.from_columns(u @ fourier_basis(d).matrix()))


def random_basis(rng: np.random.Generator, d: int) -> OrthonormalBasis:
    return OrthonormalBasis.from_columns(la.random_unitary(rng, d))


def random_projector_family(rng: np.random.Generator, d: int) -> ProjectorFamily:
    """Split a Haar basis of C^d into consecutive groups of random sizes."""
    u = la.random_unitary(rng, d)
    cuts = sorted(rng.choice(np.arange(1, d), size=int(rng.integers(0, d)), replace=False)) \
        if d > 1 else []
    groups = np.split(np.arange(d), cuts)
    return ProjectorFamily(d, tuple(u[:, g] @ la.dagger(u[:, g]) for g in groups))


def random_interaction(rng: np.random.Generator, n: int, s_dim: int) -> InteractionSystem:
    """Basis-copying interaction of ``C^n (x) C^s`` conjugated by a random unitary."""
    buf = buffered_interaction(self_interaction(standard_cdt(n)), s_dim)
    v = la.random_unitary(rng, buf.sys_dim)
    tau = la.kron(la.eye(n), v) @ buf.tau @ la.dagger(v)
    return InteractionSystem(buf.sys_dim, buf.env, tau)
