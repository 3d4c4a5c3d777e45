"""The strict skeletal 2-category of finite-dimensional 2-Hilbert spaces.

Objects are sizes ``n`` (standing for Hilb^n). A :class:`OneCell` is an
``m x n`` matrix of Hilbert-space dimensions; a :class:`TwoCell` is a matrix of
linear maps between two 1-cells of the same shape.

Horizontal composites use the matrix product with direct sum and tensor in
place of addition and multiplication. For ``g o f`` the ``(i, j)`` entry is
``(+)_k g[i][k] (x) f[k][j]`` with summands in increasing ``k``, matching
:func:`twohilb.linalg.kron` and :func:`twohilb.linalg.direct_sum`. This is only
associative up to a reordering of basis vectors; :func:`rebracket` and
:func:`associator` supply those permutations explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from . import linalg as la
from .linalg import DEFAULT_TOL


class CompositionError(ValueError):
    """Raised when cells are composed along mismatched boundaries."""


def _dims_tuple(dims, rows: int, cols: int) -> tuple[tuple[int, ...], ...]:
    out = tuple(tuple(int(x) for x in row) for row in dims)
    if len(out) != rows or any(len(row) != cols for row in out):
        raise ValueError(f"dims must be {rows}x{cols}, got {dims!r}")
    if any(x < 0 for row in out for x in row):
        raise ValueError("dimensions must be non-negative")
    return out


@dataclass(frozen=True)
class OneCell:
    """A linear functor Hilb^source -> Hilb^target, up to isomorphism."""

    source: int
    target: int
    dims: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.source < 1 or self.target < 1:
            raise ValueError("2-Hilbert space sizes must be positive")
        object.__setattr__(self, "dims", _dims_tuple(self.dims, self.target, self.source))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.target, self.source)

    def total_dim(self) -> int:
        return sum(sum(row) for row in self.dims)

    def __str__(self):
        return f"OneCell({self.source}->{self.target}, {[list(r) for r in self.dims]})"


def identity_1(n: int) -> OneCell:
    """Identity 1-cell on Hilb^n (dims form the identity matrix)."""
    return OneCell(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])


def hilbert_space(d: int) -> OneCell:
    """A Hilbert space C^d seen as a 1-cell Hilb -> Hilb."""
    return OneCell(1, 1, [[d]])


def hcomp1(g: OneCell, f: OneCell) -> OneCell:
    """Horizontal composite ``g o f`` (``f`` applied first)."""
    if f.target != g.source:
        raise CompositionError(
            f"cannot compose 1-cells: inner target Hilb^{f.target} "
            f"!= outer source Hilb^{g.source}")
    dims = np.array(g.dims, dtype=np.int64) @ np.array(f.dims, dtype=np.int64)
    return OneCell(f.source, g.target, dims.tolist())


def adjoint1(f: OneCell) -> OneCell:
    """The (ambidextrous) adjoint: transpose the dims, swap the ends."""
    return OneCell(f.target, f.source, [list(col) for col in zip(*f.dims)])


@dataclass(frozen=True, eq=False)
class TwoCell:
    """A natural transformation ``source => target`` as a matrix of maps."""

    source: OneCell
    target: OneCell
    entries: tuple[tuple[np.ndarray, ...], ...]

    def __post_init__(self):
        f, g = self.source, self.target
        if (f.source, f.target) != (g.source, g.target):
            raise CompositionError(
                f"2-cell boundaries must share objects: {f} vs {g}")
        rows = tuple(tuple(la.as_matrix(e) for e in row) for row in self.entries)
        if len(rows) != f.target or any(len(r) != f.source for r in rows):
            raise ValueError("entries must form a target x source matrix")
        for i, row in enumerate(rows):
            for j, e in enumerate(row):
                want = (g.dims[i][j], f.dims[i][j])
                if e.shape != want:
                    raise ValueError(f"entry ({i},{j}) has shape {e.shape}, expected {want}")
        object.__setattr__(self, "entries", rows)

    def entry(self, i: int, j: int) -> np.ndarray:
        return self.entries[i][j]

    def __repr__(self):
        return f"TwoCell({self.source} => {self.target})"


def from_function(source: OneCell, target: OneCell, fn) -> TwoCell:
    """Build a 2-cell whose ``(i, j)`` entry is ``fn(i, j)``."""
    return TwoCell(source, target, [[fn(i, j) for j in range(source.source)]
                                    for i in range(source.target)])


def identity_2(f: OneCell) -> TwoCell:
    return from_function(f, f, lambda i, j: la.eye(f.dims[i][j]))


def zero_2(source: OneCell, target: OneCell) -> TwoCell:
    return from_function(source, target,
                         lambda i, j: la.zeros(target.dims[i][j], source.dims[i][j]))


def vcomp(beta: TwoCell, alpha: TwoCell) -> TwoCell:
    """Vertical composite ``beta . alpha`` (``alpha`` first)."""
    if alpha.target != beta.source:
        raise CompositionError(
            f"cannot compose vertically: {alpha.target} is not {beta.source}")
    return from_function(alpha.source, beta.target,
                         lambda i, j: beta.entries[i][j] @ alpha.entries[i][j])


def vcomp_all(*cells: TwoCell) -> TwoCell:
    """``vcomp_all(a, b, c) == a . b . c``; the last cell is applied first."""
    out = cells[-1]
    for c in reversed(cells[:-1]):
        out = vcomp(c, out)
    return out


def hcomp2(beta: TwoCell, alpha: TwoCell) -> TwoCell:
    """Horizontal composite ``beta o alpha`` with ``alpha`` on the inside."""
    if alpha.source.target != beta.source.source:
        raise CompositionError(
            f"cannot compose horizontally: inner cell lands in "
            f"Hilb^{alpha.source.target}, outer cell starts at Hilb^{beta.source.source}")
    mid = alpha.source.target

    def entry(i, j):
        return la.direct_sum([la.kron(beta.entries[i][k], alpha.entries[k][j])
                              for k in range(mid)])

    return from_function(hcomp1(beta.source, alpha.source),
                         hcomp1(beta.target, alpha.target), entry)


def dagger2(alpha: TwoCell) -> TwoCell:
    return from_function(alpha.target, alpha.source,
                         lambda i, j: la.dagger(alpha.entries[i][j]))


def scalar_mul(c: complex, alpha: TwoCell) -> TwoCell:
    return from_function(alpha.source, alpha.target,
                         lambda i, j: complex(c) * alpha.entries[i][j])


def add2(alpha: TwoCell, beta: TwoCell) -> TwoCell:
    if alpha.source != beta.source or alpha.target != beta.target:
        raise CompositionError("cannot add 2-cells of different types")
    return from_function(alpha.source, alpha.target,
                         lambda i, j: alpha.entries[i][j] + beta.entries[i][j])


def max_entry_error(alpha: TwoCell, beta: TwoCell) -> float:
    """Largest entrywise deviation, ``inf`` when the types differ."""
    if alpha.source != beta.source or alpha.target != beta.target:
        return float("inf")
    errs = [la.max_abs_diff(a, b)
            for ra, rb in zip(alpha.entries, beta.entries) for a, b in zip(ra, rb)]
    return max(errs, default=0.0)


def eq2(alpha: TwoCell, beta: TwoCell, tol: float = DEFAULT_TOL) -> bool:
    return max_entry_error(alpha, beta) <= tol


def is_vertically_unitary(alpha: TwoCell, tol: float = DEFAULT_TOL) -> bool:
    return all(la.is_unitary(e, tol) for row in alpha.entries for e in row)


def is_vertically_invertible(alpha: TwoCell, tol: float = DEFAULT_TOL) -> bool:
    for row in alpha.entries:
        for e in row:
            if e.shape[0] != e.shape[1]:
                return False
            if e.size and np.min(np.linalg.svd(e, compute_uv=False)) <= tol:
                return False
    return True


# --- adjunctions -----------------------------------------------------------

def _cup(d: int) -> np.ndarray:
    """``1 -> sum_a |a> (x) |a>`` as a d^2 x 1 column."""
    return la.as_matrix(np.eye(d, dtype=complex).reshape(d * d, 1))


def adjunction_cells(f: OneCell) -> tuple[TwoCell, TwoCell]:
    """Unit ``id => f^dag o f`` and counit ``f o f^dag => id`` of ``f -| f^dag``.

    Each diagonal entry stacks the standard cups (or caps) of the dims in the
    corresponding column (or row) of ``f``; off-diagonal entries are
    zero-width maps.
    """
    fd = adjoint1(f)
    unit_target = hcomp1(fd, f)
    counit_source = hcomp1(f, fd)

    def unit_entry(j, jj):
        if j != jj:
            return la.zeros(unit_target.dims[j][jj], 0)
        return np.concatenate([_cup(f.dims[i][j]) for i in range(f.target)], axis=0)

    def counit_entry(i, ii):
        if i != ii:
            return la.zeros(0, counit_source.dims[i][ii])
        col = np.concatenate([_cup(f.dims[i][j]) for j in range(f.source)], axis=0)
        return la.as_matrix(col.T)

    sigma = from_function(identity_1(f.source), unit_target, unit_entry)
    tau = from_function(counit_source, identity_1(f.target), counit_entry)
    return sigma, tau


# --- bracketing ------------------------------------------------------------

Tree = Union[OneCell, tuple]


def tree_cell(tree: Tree) -> OneCell:
    """The 1-cell a bracketing tree ``(outer, inner)`` composes to."""
    if isinstance(tree, OneCell):
        return tree
    outer, inner = tree
    return hcomp1(tree_cell(outer), tree_cell(inner))


def _leaves(tree: Tree) -> list[OneCell]:
    if isinstance(tree, OneCell):
        return [tree]
    return _leaves(tree[0]) + _leaves(tree[1])


def _labels(tree: Tree, i: int, j: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Basis labels of entry ``(i, j)`` in the order the tree enumerates them.

    A label is ``(interior objects, local indices)`` along the chain of leaves
    and does not depend on the bracketing, only its position does.
    """
    if isinstance(tree, OneCell):
        return [((), (a,)) for a in range(tree.dims[i][j])]
    outer, inner = tree
    mid = tree_cell(inner).target
    out = []
    for k in range(mid):
        for po, lo in _labels(outer, i, k):
            for pi, li in _labels(inner, k, j):
                out.append((po + (k,) + pi, lo + li))
    return out


def _is_identity(f: OneCell) -> bool:
    return f == identity_1(f.source)


def _strip(tree: Tree) -> Tree | None:
    """Drop identity leaves, which never change the basis order."""
    if isinstance(tree, OneCell):
        return None if _is_identity(tree) else tree
    outer, inner = _strip(tree[0]), _strip(tree[1])
    if outer is None or inner is None:
        return inner if outer is None else outer
    return (outer, inner)


def rebracket(src: Tree, dst: Tree) -> TwoCell:
    """Permutation 2-cell between two bracketings of the same chain of 1-cells.

    Identity 1-cells in either chain are ignored.
    """
    f, g = tree_cell(src), tree_cell(dst)
    src, dst = _strip(src), _strip(dst)
    if src is None or dst is None:
        if f != g:
            raise CompositionError("rebracketing requires the same chain of 1-cells")
        return identity_2(f)
    if _leaves(src) != _leaves(dst):
        raise CompositionError("rebracketing requires the same chain of 1-cells")

    def entry(i, j):
        ls, ld = _labels(src, i, j), _labels(dst, i, j)
        pos = {lab: p for p, lab in enumerate(ls)}
        m = np.zeros((len(ld), len(ls)), dtype=complex)
        for q, lab in enumerate(ld):
            m[q, pos[lab]] = 1.0
        return m

    return from_function(f, g, entry)


def associator(f: OneCell, g: OneCell, h: OneCell) -> TwoCell:
    """``(h o g) o f  =>  h o (g o f)`` as an entrywise permutation."""
    hcomp1(hcomp1(h, g), f)
    return rebracket(((h, g), f), (h, (g, f)))


def whisker(left: OneCell | None, alpha: TwoCell, right: OneCell | None = None) -> TwoCell:
    """``id_left o alpha o id_right``, bracketed as ``left o (alpha o right)``."""
    out = alpha
    if right is not None:
        out = hcomp2(out, identity_2(right))
    if left is not None:
        out = hcomp2(identity_2(left), out)
    return out


def paste(*steps: tuple[TwoCell, Tree, Tree]) -> TwoCell:
    """Vertically compose ``(cell, source_tree, target_tree)`` steps in order.

    Steps are listed first-applied first. Whenever one step's target tree and
    the next step's source tree bracket the same chain differently, the
    rebracketing permutation is inserted between them.
    """
    out = None
    prev_tree = None
    for cell, src, dst in steps:
        if tree_cell(src) != cell.source or tree_cell(dst) != cell.target:
            raise CompositionError(f"bracketing trees do not match {cell!r}")
        if out is not None:
            if prev_tree != src:
                out = vcomp(rebracket(prev_tree, src), out)
            cell = vcomp(cell, out)
        out = cell
        prev_tree = dst
    if out is None:
        raise ValueError("nothing to paste")
    return out
