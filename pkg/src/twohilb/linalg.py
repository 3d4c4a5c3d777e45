"""Dense complex linear algebra in the scalar sector (finite-dimensional Hilb).

Every matrix is a 2-D ``complex128`` numpy array. Two conventions are fixed
here and inherited by the rest of the package:

* Kronecker pairing is row-major: the pair ``(i1, i2)`` flattens to
  ``i1 * rows(b) + i2`` in ``kron(a, b)``.
* Direct sums place blocks in list order along the diagonal.

Zero-dimensional matrices (``rows == 0`` or ``cols == 0``) are ordinary values.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

DEFAULT_TOL = 1e-9
NULLSPACE_TOL = 1e-10


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a read-only 2-D complex array."""
    m = np.array(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    m.setflags(write=False)
    return m


def zeros(rows: int, cols: int) -> np.ndarray:
    return as_matrix(np.zeros((rows, cols), dtype=complex))


def eye(n: int) -> np.ndarray:
    return as_matrix(np.eye(n, dtype=complex))


def kron(a, b) -> np.ndarray:
    return as_matrix(np.kron(as_matrix(a), as_matrix(b)))


def kron_all(mats: Iterable) -> np.ndarray:
    out = as_matrix([[1.0]])
    for m in mats:
        out = kron(out, m)
    return out


def direct_sum(blocks: Sequence) -> np.ndarray:
    """Block-diagonal matrix of ``blocks``; ``direct_sum([])`` is 0x0."""
    blocks = [as_matrix(b) for b in blocks]
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = np.zeros((rows, cols), dtype=complex)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return as_matrix(out)


def dagger(a) -> np.ndarray:
    return as_matrix(np.conj(as_matrix(a)).T)


def matmul(*mats) -> np.ndarray:
    out = as_matrix(mats[0])
    for m in mats[1:]:
        m = as_matrix(m)
        if out.shape[1] != m.shape[0]:
            raise ValueError(f"cannot compose {out.shape} with {m.shape}")
        out = out @ m
    return as_matrix(out)


def max_abs_diff(a, b) -> float:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        return float("inf")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def approx_eq(a, b, tol: float = DEFAULT_TOL) -> bool:
    return max_abs_diff(a, b) <= tol


def is_isometry(a, tol: float = DEFAULT_TOL) -> bool:
    a = as_matrix(a)
    return approx_eq(dagger(a) @ a, np.eye(a.shape[1]), tol)


def is_unitary(a, tol: float = DEFAULT_TOL) -> bool:
    a = as_matrix(a)
    return (a.shape[0] == a.shape[1] and is_isometry(a, tol)
            and approx_eq(a @ dagger(a), np.eye(a.shape[0]), tol))


def nullspace_basis(a, tol: float = NULLSPACE_TOL) -> np.ndarray:
    """Orthonormal columns spanning ``ker(a)``.

    Singular values at or below ``tol`` count as zero. A full-rank input
    gives a matrix with no columns.
    """
    a = as_matrix(a)
    rows, cols = a.shape
    if cols == 0:
        return zeros(0, 0)
    if rows == 0:
        return eye(cols)
    _, s, vh = np.linalg.svd(a, full_matrices=True)
    rank = int(np.sum(s > tol))
    return as_matrix(np.conj(vh[rank:]).T)


def canonical_basis(v, tol: float = 1e-6) -> np.ndarray:
    """Re-choose orthonormal columns ``v`` in a gauge fixed by their span alone.

    Gram-Schmidt runs over the projections ``V V^dag e_0, V V^dag e_1, ...``
    of the standard basis, so two inputs with the same span give the same
    output. A span containing standard vectors keeps them exactly.
    """
    v = as_matrix(v)
    d, r = v.shape
    proj = v @ dagger(v)
    cols: list[np.ndarray] = []
    for j in range(d):
        if len(cols) == r:
            break
        w = proj[:, j].copy()
        for c in cols:
            w = w - c * np.vdot(c, w)
        nrm = np.linalg.norm(w)
        if nrm > tol:
            cols.append(w / nrm)
    if len(cols) != r:
        raise ValueError("columns are not orthonormal")
    if not cols:
        return zeros(d, 0)
    return as_matrix(np.stack(cols, axis=1))


def rank(a, tol: float = NULLSPACE_TOL) -> int:
    a = as_matrix(a)
    if a.size == 0:
        return 0
    return int(np.sum(np.linalg.svd(a, compute_uv=False) > tol))


def tensor_swap(d1: int, d2: int) -> np.ndarray:
    """Permutation sending ``|i> (x) |j>`` in C^d1 (x) C^d2 to ``|j> (x) |i>``."""
    if d1 < 0 or d2 < 0:
        raise ValueError("dimensions must be non-negative")
    p = np.zeros((d1 * d2, d1 * d2), dtype=complex)
    for i in range(d1):
        for j in range(d2):
            p[j * d1 + i, i * d2 + j] = 1.0
    return as_matrix(p)


def basis_vector(d: int, i: int) -> np.ndarray:
    v = np.zeros((d, 1), dtype=complex)
    v[i, 0] = 1.0
    return as_matrix(v)


def random_matrix(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return as_matrix(rng.normal(size=(rows, cols)) + 1j * rng.normal(size=(rows, cols)))


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-random unitary via phase-corrected QR."""
    q, r = np.linalg.qr(random_matrix(rng, n, n))
    d = np.diagonal(r)
    return as_matrix(q * (d / np.abs(d)))
