"""Named 1-cells and 2-cells: witnesses, classical data, measurements, controls.

Typing of the main constructors (``A => B`` is a 2-cell, ``W_L(n)`` is the
column ``Hilb -> Hilb^n`` and ``W_R(n)`` the row ``Hilb^n -> Hilb``)::

    copy(n)                      id_n          => W_L(n) o W_R(n)
    create(n)                    id_1          => W_R(n) o W_L(n)
    nondegenerate_measurement    Q(d)          => W_R(d) o W_L(d)
    projective_measurement       Q(d)          => W_R(n) o T      (T has dims rank P_k)
    controlled_operation         W_L(n) o Q(d) => W_L(n) o Q(d)
    controlled_phase             W_L(n) o W_R(m) => W_L(n) o W_R(m)
    bell_state(d)                id_1          => Q(d) o Q(d)

``compare`` and ``delete`` are the daggers of ``copy`` and ``create``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg as la
from .core import OneCell, TwoCell, dagger2, from_function, hcomp1, hilbert_space, identity_1
from .linalg import DEFAULT_TOL


def _check_positive(n: int, what: str = "n") -> int:
    if int(n) != n or n < 1:
        raise ValueError(f"{what} must be a positive integer, got {n!r}")
    return int(n)


# --- bases and projector families -----------------------------------------

@dataclass(frozen=True, eq=False)
class OrthonormalBasis:
    """An ordered orthonormal basis of C^d, stored as d column vectors."""

    dimension: int
    vectors: tuple[np.ndarray, ...]

    def __post_init__(self):
        vecs = tuple(la.as_matrix(np.reshape(v, (-1, 1))) for v in self.vectors)
        if len(vecs) != self.dimension or any(v.shape[0] != self.dimension for v in vecs):
            raise ValueError(f"need {self.dimension} vectors of length {self.dimension}")
        object.__setattr__(self, "vectors", vecs)
        if not la.is_unitary(self.matrix(), DEFAULT_TOL):
            raise ValueError("basis vectors are not orthonormal")

    @classmethod
    def from_columns(cls, m) -> "OrthonormalBasis":
        m = la.as_matrix(m)
        return cls(m.shape[1], tuple(m[:, [k]] for k in range(m.shape[1])))

    def matrix(self) -> np.ndarray:
        """The unitary whose k-th column is the k-th basis vector."""
        if not self.vectors:
            return la.zeros(0, 0)
        return la.as_matrix(np.hstack(self.vectors))


def computational_basis(d: int) -> OrthonormalBasis:
    return OrthonormalBasis.from_columns(la.eye(_check_positive(d, "d")))


def fourier_basis(d: int) -> OrthonormalBasis:
    """Columns ``(1/sqrt d) sum_j w^{jk} |j>``; for d = 2 this is the +/- basis."""
    d = _check_positive(d, "d")
    j, k = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    return OrthonormalBasis.from_columns(np.exp(2j * np.pi * j * k / d) / np.sqrt(d))


def y_basis() -> OrthonormalBasis:
    return OrthonormalBasis.from_columns(np.array([[1, 1], [1j, -1j]]) / np.sqrt(2))


_MBELL = np.array([[1, 0, 0, 1],
                   [1, 0, 0, -1],
                   [0, 1, 1, 0],
                   [0, 1, -1, 0]], dtype=complex) / np.sqrt(2)

_UBELL = (np.array([[1, 0], [0, 1]], dtype=complex),
          np.array([[1, 0], [0, -1]], dtype=complex),
          np.array([[0, 1], [1, 0]], dtype=complex),
          np.array([[0, 1], [-1, 0]], dtype=complex))


def bell_basis() -> OrthonormalBasis:
    return OrthonormalBasis.from_columns(la.dagger(_MBELL))


def named_basis(name: str) -> OrthonormalBasis:
    """Look up ``Z``, ``X``, ``Y``, ``Bell``, ``C<d>`` or ``F<d>``."""
    fixed = {"Z": lambda: computational_basis(2), "X": lambda: fourier_basis(2),
             "Y": y_basis, "Bell": bell_basis}
    if name in fixed:
        return fixed[name]()
    if len(name) > 1 and name[0] in "CF" and name[1:].isdigit():
        d = int(name[1:])
        return computational_basis(d) if name[0] == "C" else fourier_basis(d)
    raise KeyError(f"unknown basis {name!r}")


@dataclass(frozen=True, eq=False)
class ProjectorFamily:
    """Complete family of mutually orthogonal projectors on C^d."""

    dimension: int
    projectors: tuple[np.ndarray, ...]

    def __post_init__(self):
        ps = tuple(la.as_matrix(p) for p in self.projectors)
        d = self.dimension
        if not ps:
            raise ValueError("projector family is empty")
        if any(p.shape != (d, d) for p in ps):
            raise ValueError(f"projectors must be {d}x{d}")
        for p in ps:
            if not (la.approx_eq(p @ p, p) and la.approx_eq(la.dagger(p), p)):
                raise ValueError("each projector must be idempotent and self-adjoint")
        for a in range(len(ps)):
            for b in range(a + 1, len(ps)):
                if not la.approx_eq(ps[a] @ ps[b], np.zeros((d, d))):
                    raise ValueError(f"projectors {a} and {b} are not orthogonal")
        if not la.approx_eq(sum(ps), np.eye(d)):
            raise ValueError("projectors do not sum to the identity")
        object.__setattr__(self, "projectors", ps)

    @classmethod
    def from_basis(cls, b: OrthonormalBasis) -> "ProjectorFamily":
        return cls(b.dimension, tuple(v @ la.dagger(v) for v in b.vectors))

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(la.rank(p) for p in self.projectors)


def image_basis(p) -> np.ndarray:
    """Orthonormal columns spanning the image of a projector, in a fixed gauge.

    The subspace is found as ``ker(I - P)``. Its basis is then re-chosen by
    Gram-Schmidt on the projected standard vectors ``P e_0, P e_1, ...``, so
    the result depends only on ``P`` and not on the SVD.
    """
    p = la.as_matrix(p)
    return la.canonical_basis(la.nullspace_basis(np.eye(p.shape[0]) - p))


# --- witnesses and classical data -----------------------------------------

def witness_left(n: int) -> OneCell:
    n = _check_positive(n)
    return OneCell(1, n, [[1]] * n)


def witness_right(n: int) -> OneCell:
    n = _check_positive(n)
    return OneCell(n, 1, [[1] * n])


def qudit(d: int) -> OneCell:
    return hilbert_space(_check_positive(d, "d"))


def copy(n: int) -> TwoCell:
    n = _check_positive(n)
    return from_function(identity_1(n), hcomp1(witness_left(n), witness_right(n)),
                         lambda i, j: la.eye(1) if i == j else la.zeros(1, 0))


def compare(n: int) -> TwoCell:
    return dagger2(copy(n))


def create(n: int) -> TwoCell:
    n = _check_positive(n)
    return TwoCell(identity_1(1), hcomp1(witness_right(n), witness_left(n)),
                   [[np.ones((n, 1))]])


def delete(n: int) -> TwoCell:
    return dagger2(create(n))


# --- measurements ----------------------------------------------------------

def nondegenerate_measurement(b: OrthonormalBasis) -> TwoCell:
    d = b.dimension
    return TwoCell(qudit(d), hcomp1(witness_right(d), witness_left(d)),
                   [[la.dagger(b.matrix())]])


def projective_measurement(p: ProjectorFamily) -> TwoCell:
    n = len(p.projectors)
    bases = [image_basis(q) for q in p.projectors]
    outcomes = OneCell(1, n, [[v.shape[1]] for v in bases])
    entry = np.vstack([la.dagger(v) for v in bases])
    return TwoCell(qudit(p.dimension), hcomp1(witness_right(n), outcomes), [[entry]])


def matched_measurement(maps: Sequence) -> TwoCell:
    """Measurement of C^d (x) C^d in the basis ``vec(U_k) / sqrt d``.

    ``vec`` flattens row-major. This is the measurement that pairs with the
    correction family ``maps`` in teleportation and dense coding; it is only
    a valid measurement when the ``U_k`` are trace-orthogonal unitaries.
    """
    maps = [la.as_matrix(u) for u in maps]
    d = maps[0].shape[0]
    if len(maps) != d * d:
        raise ValueError(f"need {d * d} maps of size {d}, got {len(maps)}")
    rows = np.stack([np.conj(u.reshape(-1)) for u in maps]) / np.sqrt(d)
    basis = OrthonormalBasis.from_columns(la.dagger(rows))
    return TwoCell(hcomp1(qudit(d), qudit(d)),
                   hcomp1(witness_right(d * d), witness_left(d * d)),
                   [[la.dagger(basis.matrix())]])


# --- controlled operations -------------------------------------------------

def controlled_operation(maps: Sequence) -> TwoCell:
    maps = [la.as_matrix(u) for u in maps]
    if not maps:
        raise ValueError("need at least one map")
    d = maps[0].shape[0]
    if any(u.shape != (d, d) for u in maps):
        raise ValueError("controlled maps must all be square of the same size")
    cell = hcomp1(witness_left(len(maps)), qudit(d))
    return TwoCell(cell, cell, [[u] for u in maps])


def controlled_phase(phases, tol: float = DEFAULT_TOL) -> TwoCell:
    phases = la.as_matrix(phases)
    if phases.size == 0:
        raise ValueError("phase matrix is empty")
    if np.max(np.abs(np.abs(phases) - 1)) > tol:
        raise ValueError("controlled phases must have unit modulus")
    n, m = phases.shape
    cell = hcomp1(witness_left(n), witness_right(m))
    return from_function(cell, cell, lambda i, j: [[phases[i, j]]])


def weyl_heisenberg_maps(d: int) -> list[np.ndarray]:
    """Generalized Pauli maps, ordered to match the qubit correction kit at d = 2.

    For d = 2 this returns I, Z, X and ZX; in general ``Z^b X^a`` with ``a``
    outer, where ``X|j> = |j+1>`` and ``Z|j> = w^j |j>``.
    """
    d = _check_positive(d, "d")
    w = np.exp(2j * np.pi / d)
    x = np.roll(np.eye(d), 1, axis=0)
    z = np.diag(w ** np.arange(d))
    return [la.as_matrix(np.linalg.matrix_power(z, b) @ np.linalg.matrix_power(x, a))
            for a in range(d) for b in range(d)]


# --- the qubit kit ---------------------------------------------------------

def bell_state(d: int) -> TwoCell:
    d = _check_positive(d, "d")
    q = qudit(d)
    return TwoCell(identity_1(1), hcomp1(q, q),
                   [[np.eye(d).reshape(d * d, 1) / np.sqrt(d)]])


def bell_measurement() -> TwoCell:
    return TwoCell(hcomp1(qudit(2), qudit(2)),
                   hcomp1(witness_right(4), witness_left(4)), [[_MBELL]])


def bell_corrections() -> TwoCell:
    return controlled_operation(_UBELL)


def bell_correction_maps() -> list[np.ndarray]:
    return [la.as_matrix(u) for u in _UBELL]
