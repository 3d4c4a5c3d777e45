"""Equation-level checks of the protocols and of horizontal invertibility.

Composites are assembled with :func:`twohilb.core.paste`, which inserts
rebracketing permutations wherever two adjacent steps bracket the same chain
of 1-cells differently. Bracketing trees are written ``(outer, inner)``.

With ``W = W_R(n) o W_L(n)`` (a single wire carrying n classical values) the
protocol shapes are::

    teleportation   Q(d)          => W_R(n) o (W_L(n) o Q(d))
    dense coding    W_L(n)        => W_L(n) o (W_R(n) o W_L(n))
    complementarity Q(n)          => W o W
    erasure         W             => W

Equalities are judged after fitting a single complex scalar ``s`` with
``LHS ~ s * RHS``; every report carries the fitted value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import linalg as la
from .algebra import basis_frobenius
from .core import (CompositionError, OneCell, TwoCell, adjoint1, adjunction_cells, dagger2,
                   hcomp1, hcomp2, identity_1, identity_2, max_entry_error, paste,
                   scalar_mul, tree_cell, vcomp)
from .generators import (OrthonormalBasis, bell_state, compare, controlled_phase, copy, create,
                         delete, nondegenerate_measurement, qudit, witness_left,
                         witness_right)
from .linalg import DEFAULT_TOL


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    max_entry_error: float
    fitted_scalar: Optional[complex] = None


def fit_scalar(lhs: TwoCell, rhs: TwoCell) -> complex:
    """Least-squares ``s`` minimizing ``|lhs - s * rhs|`` over all entries."""
    if lhs.source != rhs.source or lhs.target != rhs.target:
        raise CompositionError("cannot fit a scalar between 2-cells of different types")
    a = np.concatenate([e.reshape(-1) for row in lhs.entries for e in row] + [np.zeros(0)])
    b = np.concatenate([e.reshape(-1) for row in rhs.entries for e in row] + [np.zeros(0)])
    denom = np.vdot(b, b).real
    return complex(np.vdot(b, a) / denom) if denom > 0 else 0j


def compare_with_fit(name: str, lhs: TwoCell, rhs: TwoCell, expected: complex | None,
                     tol: float = DEFAULT_TOL) -> CheckReport:
    """Fit ``s``; pass iff the residual is within ``tol`` and ``s`` is as expected."""
    if lhs.source != rhs.source or lhs.target != rhs.target:
        return CheckReport(name, False, float("inf"), None)
    s = fit_scalar(lhs, rhs)
    resid = max_entry_error(lhs, scalar_mul(s, rhs))
    ok = resid <= tol and (expected is None or abs(s - expected) <= tol)
    return CheckReport(name, bool(ok), resid, s)


# --- bending and horizontal invertibility ----------------------------------

def bend(alpha: TwoCell, source: tuple[OneCell, OneCell],
         target: tuple[OneCell, OneCell]) -> TwoCell:
    """Bend ``alpha: H o J => F o G`` into ``F^dag o H => G o J^dag``.

    The legs must be given because a 2-cell only records the composite
    1-cells. ``F`` is bent down on the left with the counit of ``F^dag``,
    ``J`` is bent up on the right with the unit of ``J^dag``.
    """
    h, j = source
    f, g = target
    if hcomp1(h, j) != alpha.source or hcomp1(f, g) != alpha.target:
        raise CompositionError("legs do not compose to the boundary of the 2-cell")
    fd, jd = adjoint1(f), adjoint1(j)
    eta_j = adjunction_cells(jd)[0]          # id => J o J^dag
    eps_f = adjunction_cells(fd)[1]          # F^dag o F => id
    return paste(
        (hcomp2(identity_2(hcomp1(fd, h)), eta_j),
         (fd, h), ((fd, h), (j, jd))),
        (hcomp2(identity_2(fd), hcomp2(alpha, identity_2(jd))),
         (fd, ((h, j), jd)), (fd, ((f, g), jd))),
        (hcomp2(eps_f, identity_2(hcomp1(g, jd))),
         ((fd, f), (g, jd)), (g, jd)),
    )


def _unitary_scale(alpha: TwoCell) -> float:
    """Positive ``c`` such that ``alpha / c`` has unit average Gram diagonal."""
    num = sum(float(np.sum(np.abs(e) ** 2)) for row in alpha.entries for e in row)
    den = sum(e.shape[1] for row in alpha.entries for e in row)
    return float(np.sqrt(num / den)) if den and num > 0 else 1.0


def is_horizontally_invertible(alpha: TwoCell, source, target,
                               tol: float = DEFAULT_TOL) -> bool:
    bent = bend(alpha, source, target)
    for row in bent.entries:
        for e in row:
            if e.shape[0] != e.shape[1]:
                return False
            if e.size and np.linalg.svd(e, compute_uv=False).min() <= tol:
                return False
    return True


def is_horizontally_unitary(alpha: TwoCell, source, target, tol: float = DEFAULT_TOL,
                            up_to_scalar: bool = False) -> bool:
    """Whether the bent composite is vertically unitary.

    With ``up_to_scalar`` the bent composite is first divided by its fitted
    positive scale, so ``alpha`` only needs to be a multiple of a
    horizontally unitary cell.
    """
    bent = bend(alpha, source, target)
    if up_to_scalar:
        bent = scalar_mul(1.0 / _unitary_scale(bent), bent)
    return all(la.is_unitary(e, tol) for row in bent.entries for e in row)


def measurement_legs(n: int, d: int):
    """Legs of a bipartite measurement ``Q(d) o Q(d) => W_R(n) o W_L(n)``."""
    return (qudit(d), qudit(d)), (witness_right(n), witness_left(n))


def correction_legs(n: int, d: int):
    """Legs of a controlled operation on ``W_L(n) o Q(d)``."""
    legs = (witness_left(n), qudit(d))
    return legs, legs


def _controlled_shape(correction: TwoCell) -> tuple[int, int]:
    c = correction.source
    if c.source != 1 or c != correction.target or len({row[0] for row in c.dims}) != 1:
        raise CompositionError("correction must be an endomorphism of W_L(n) o Q(d)")
    return c.target, c.dims[0][0]


# --- teleportation and dense coding ----------------------------------------

def teleportation_sides(measurement: TwoCell, correction: TwoCell):
    """Both sides of the teleportation equation, bracketed as ``W_R o (W_L o Q)``."""
    n, d = _controlled_shape(correction)
    q, wl, wr = qudit(d), witness_left(n), witness_right(n)
    one = identity_1(1)
    if measurement.source != hcomp1(q, q) or measurement.target != hcomp1(wr, wl):
        raise CompositionError("measurement must map Q(d) o Q(d) to W_R(n) o W_L(n)")
    lhs = paste(
        (hcomp2(identity_2(q), bell_state(d)), (q, one), (q, (q, q))),
        (hcomp2(measurement, identity_2(q)), ((q, q), q), ((wr, wl), q)),
        (hcomp2(identity_2(wr), correction), (wr, (wl, q)), (wr, (wl, q))),
    )
    rhs = paste(
        (hcomp2(create(n), identity_2(q)), (one, q), ((wr, wl), q)),
        (identity_2(tree_cell((wr, (wl, q)))), (wr, (wl, q)), (wr, (wl, q))),
    )
    return lhs, rhs


def check_teleportation(measurement: TwoCell, correction: TwoCell, n: int | None = None,
                        tol: float = DEFAULT_TOL) -> CheckReport:
    try:
        lhs, rhs = teleportation_sides(measurement, correction)
    except CompositionError:
        return CheckReport("teleportation", False, float("inf"), None)
    m = correction.source.target
    if n is not None and n != m:
        raise CompositionError(f"kit has {m} outcomes, not {n}")
    return compare_with_fit("teleportation", lhs, rhs, 1 / np.sqrt(m), tol)


def dense_coding_sides(correction: TwoCell, measurement: TwoCell):
    n, d = _controlled_shape(correction)
    q, wl, wr = qudit(d), witness_left(n), witness_right(n)
    one = identity_1(1)
    if measurement.source != hcomp1(q, q) or measurement.target != hcomp1(wr, wl):
        raise CompositionError("measurement must map Q(d) o Q(d) to W_R(n) o W_L(n)")
    lhs = paste(
        (hcomp2(identity_2(wl), bell_state(d)), (wl, one), (wl, (q, q))),
        (hcomp2(correction, identity_2(q)), ((wl, q), q), ((wl, q), q)),
        (hcomp2(identity_2(wl), measurement), (wl, (q, q)), (wl, (wr, wl))),
    )
    rhs = paste(
        (hcomp2(copy(n), identity_2(wl)), (identity_1(n), wl), ((wl, wr), wl)),
        (identity_2(tree_cell((wl, (wr, wl)))), (wl, (wr, wl)), (wl, (wr, wl))),
    )
    return lhs, rhs


def check_dense_coding(correction: TwoCell, measurement: TwoCell, n: int | None = None,
                       tol: float = DEFAULT_TOL) -> CheckReport:
    try:
        lhs, rhs = dense_coding_sides(correction, measurement)
    except CompositionError:
        return CheckReport("dense-coding", False, float("inf"), None)
    m = correction.source.target
    if n is not None and n != m:
        raise CompositionError(f"kit has {m} outcomes, not {n}")
    return compare_with_fit("dense-coding", lhs, rhs, 1.0, tol)


# --- complementarity and erasure -------------------------------------------

def _same_dim(red: OrthonormalBasis, green: OrthonormalBasis) -> int:
    if red.dimension != green.dimension:
        raise ValueError("bases must live in the same dimension")
    return red.dimension


def complementarity_lhs(red: OrthonormalBasis, green: OrthonormalBasis) -> TwoCell:
    """Measure red, copy the outcome, re-encode one copy in red, measure it in green."""
    n = _same_dim(red, green)
    wl, wr = witness_left(n), witness_right(n)
    w = hcomp1(wr, wl)
    m_red = nondegenerate_measurement(red)
    m_green = nondegenerate_measurement(green)
    q = qudit(n)
    return paste(
        (m_red, q, (wr, wl)),
        (hcomp2(identity_2(wr), hcomp2(copy(n), identity_2(wl))),
         (wr, (identity_1(n), wl)), (wr, ((wl, wr), wl))),
        (hcomp2(identity_2(w), dagger2(m_red)), ((wr, wl), (wr, wl)), ((wr, wl), q)),
        (hcomp2(identity_2(w), m_green), ((wr, wl), q), ((wr, wl), (wr, wl))),
    )


def complementarity_rhs(red: OrthonormalBasis, phi: TwoCell) -> TwoCell:
    """Measure red next to a fresh uniform classical value, then apply ``phi``."""
    n = red.dimension
    wl, wr = witness_left(n), witness_right(n)
    q = qudit(n)
    out = paste(
        (hcomp2(nondegenerate_measurement(red), create(n)), (q, identity_1(1)),
         ((wr, wl), (wr, wl))),
        (hcomp2(identity_2(wr), hcomp2(phi, identity_2(wl))),
         (wr, ((wl, wr), wl)), (wr, ((wl, wr), wl))),
        (identity_2(tree_cell(((wr, wl), (wr, wl)))), ((wr, wl), (wr, wl)),
         ((wr, wl), (wr, wl))),
    )
    return scalar_mul(1 / np.sqrt(n), out)


def _as_phase_cell(phi, n: int) -> TwoCell:
    if isinstance(phi, TwoCell):
        return phi
    return controlled_phase(phi)


def check_complementarity_physical(red: OrthonormalBasis, green: OrthonormalBasis, phi,
                                   tol: float = DEFAULT_TOL) -> CheckReport:
    n = _same_dim(red, green)
    phi = _as_phase_cell(phi, n)
    lhs = complementarity_lhs(red, green)
    try:
        rhs = complementarity_rhs(red, phi)
    except CompositionError:
        return CheckReport("complementarity", False, float("inf"), None)
    err = max_entry_error(lhs, rhs)
    s = fit_scalar(lhs, rhs) if err != float("inf") else None
    return CheckReport("complementarity", bool(err <= tol), err, s)


def find_controlled_phase(red: OrthonormalBasis, green: OrthonormalBasis,
                          tol: float = DEFAULT_TOL) -> Optional[np.ndarray]:
    """Phases ``phi`` making the physical complementarity equation hold, if any.

    Feeding the red basis vector ``r_i`` into the left-hand side yields
    ``|i> (x) sum_j c_ij |j>``; the candidate is ``phi_ij = sqrt(n) c_ij``.
    """
    n = _same_dim(red, green)
    lhs = complementarity_lhs(red, green).entry(0, 0)
    phases = np.zeros((n, n), dtype=complex)
    for i, r in enumerate(red.vectors):
        out = (lhs @ r).reshape(n, n)
        phases[i] = np.sqrt(n) * out[i]
    if np.max(np.abs(np.abs(phases) - 1)) > tol:
        return None
    return phases


def check_complementarity_frobenius(red: OrthonormalBasis, green: OrthonormalBasis,
                             tol: float = DEFAULT_TOL) -> CheckReport:
    """Complementarity stated with the two classical structures directly.

    ``n * m_r (1 (x) e_g m_g (x) 1)(d_r u_r (x) d_g) = u_r e_g`` with ``m, u``
    the multiplication and unit of the classical structure copying a basis,
    ``d = m^dag`` and ``e = u^dag``.
    """
    n = _same_dim(red, green)
    r, g = basis_frobenius(red.matrix()), basis_frobenius(green.matrix())
    i = la.eye(n)
    lhs = n * (r.mult @ la.kron_all([i, g.counit @ g.mult, i])
               @ la.kron(r.comult @ r.unit, g.comult))
    rhs = r.unit @ g.counit
    err = la.max_abs_diff(lhs, rhs)
    return CheckReport("complementarity-frobenius", bool(err <= tol), err, None)


def preparation_measurement(red: OrthonormalBasis, green: OrthonormalBasis) -> TwoCell:
    """``sqrt(n)`` times encode-in-red followed by measure-in-green, on ``W => W``."""
    n = _same_dim(red, green)
    comp = vcomp(nondegenerate_measurement(green), dagger2(nondegenerate_measurement(red)))
    return scalar_mul(np.sqrt(n), comp)


def preparation_measurement_legs(n: int):
    legs = (witness_right(n), witness_left(n))
    return legs, legs


def erasure_sides(red: OrthonormalBasis, green: OrthonormalBasis):
    """Prepare green, run the complementarity pipeline, then delete the red record."""
    n = _same_dim(red, green)
    w = hcomp1(witness_right(n), witness_left(n))
    prepare = dagger2(nondegenerate_measurement(green))
    lhs = vcomp(hcomp2(delete(n), identity_2(w)),
                vcomp(complementarity_lhs(red, green), prepare))
    return lhs, identity_2(w)


def check_erasure(red: OrthonormalBasis, green: OrthonormalBasis,
                  tol: float = DEFAULT_TOL) -> CheckReport:
    lhs, rhs = erasure_sides(red, green)
    return compare_with_fit("erasure", lhs, rhs, 1.0, tol)


def check_unerased(red: OrthonormalBasis, green: OrthonormalBasis, phi,
                   tol: float = DEFAULT_TOL) -> CheckReport:
    """Without the deletion, preparing green feeds the complementarity equation."""
    n = _same_dim(red, green)
    prepare = dagger2(nondegenerate_measurement(green))
    lhs = vcomp(complementarity_lhs(red, green), prepare)
    rhs = vcomp(complementarity_rhs(red, _as_phase_cell(phi, n)), prepare)
    err = max_entry_error(lhs, rhs)
    return CheckReport("unerased", bool(err <= tol), err, None)


# --- witness axioms ---------------------------------------------------------

def witness_snakes(n: int) -> list[tuple[str, TwoCell, TwoCell]]:
    """The four yanking equations and the hole deletion for ``W_L(n), W_R(n)``."""
    wl, wr = witness_left(n), witness_right(n)
    i1, i_n = identity_1(1), identity_1(n)
    snakes = [
        ("left-create-compare", paste(
            (hcomp2(identity_2(wl), create(n)), (wl, i1), (wl, (wr, wl))),
            (hcomp2(compare(n), identity_2(wl)), ((wl, wr), wl), (i_n, wl))), identity_2(wl)),
        ("right-create-compare", paste(
            (hcomp2(create(n), identity_2(wr)), (i1, wr), ((wr, wl), wr)),
            (hcomp2(identity_2(wr), compare(n)), (wr, (wl, wr)), (wr, i_n))), identity_2(wr)),
        ("right-copy-delete", paste(
            (hcomp2(identity_2(wr), copy(n)), (wr, i_n), (wr, (wl, wr))),
            (hcomp2(delete(n), identity_2(wr)), ((wr, wl), wr), (i1, wr))), identity_2(wr)),
        ("left-copy-delete", paste(
            (hcomp2(copy(n), identity_2(wl)), (i_n, wl), ((wl, wr), wl)),
            (hcomp2(identity_2(wl), delete(n)), (wl, (wr, wl)), (wl, i1))), identity_2(wl)),
        ("copy-then-compare", vcomp(compare(n), copy(n)), identity_2(i_n)),
    ]
    return snakes


def check_witness_axioms(n: int, tol: float = 1e-12) -> CheckReport:
    worst = max(max_entry_error(lhs, rhs) for _, lhs, rhs in witness_snakes(n))
    return CheckReport(f"witness-axioms-{n}", bool(worst <= tol), worst, None)


def kit_is_consistent(measurement: TwoCell, correction: TwoCell,
                      tol: float = DEFAULT_TOL) -> bool:
    """Teleportation and dense coding agree on whether a kit works."""
    return (check_teleportation(measurement, correction, tol=tol).passed
            == check_dense_coding(correction, measurement, tol=tol).passed)


def controlled_kit_unitary(correction: TwoCell, tol: float = DEFAULT_TOL) -> bool:
    n, d = _controlled_shape(correction)
    src, dst = correction_legs(n, d)
    return is_horizontally_unitary(correction, src, dst, tol, up_to_scalar=True)


__all__ = [
    "CheckReport", "bend", "check_complementarity_frobenius", "check_complementarity_physical",
    "check_dense_coding", "check_erasure", "check_teleportation", "check_unerased",
    "check_witness_axioms", "compare_with_fit", "complementarity_lhs", "complementarity_rhs",
    "controlled_kit_unitary", "correction_legs", "dense_coding_sides",
    "erasure_sides", "find_controlled_phase", "fit_scalar", "is_horizontally_invertible",
    "is_horizontally_unitary", "kit_is_consistent", "measurement_legs",
    "preparation_measurement", "preparation_measurement_legs", "teleportation_sides",
    "witness_snakes",
]
