"""Named batches of checks, each returning a list of :class:`CheckReport`.

These back the ``check`` command. Randomized batches take a seed so that runs
are reproducible.
"""

from __future__ import annotations

import math

import numpy as np

from . import algebra, sampling
from . import decoherence as deco
from . import linalg as la
from .core import hcomp2, max_entry_error, scalar_mul, vcomp
from .generators import (ProjectorFamily, bell_correction_maps, bell_corrections, bell_measurement,
                         computational_basis, controlled_operation, fourier_basis,
                         matched_measurement, weyl_heisenberg_maps)
from .protocols import (CheckReport, check_complementarity_frobenius, check_complementarity_physical,
                        check_dense_coding, check_erasure, check_teleportation,
                        check_witness_axioms, controlled_kit_unitary, correction_legs,
                        find_controlled_phase, is_horizontally_invertible,
                        is_horizontally_unitary, measurement_legs)

DEFAULT_SEED = 20240607


def _law_report(name: str, residuals: dict[str, float], tol: float) -> CheckReport:
    worst = max(residuals.values(), default=0.0)
    return CheckReport(name, bool(worst <= tol), worst, None)


def _flag(name: str, ok: bool) -> CheckReport:
    return CheckReport(name, bool(ok), 0.0 if ok else float("inf"), None)


def kit(n: int):
    """``(measurement, correction)`` with ``n`` outcomes; the qubit Bell kit when n = 4."""
    d = math.isqrt(n)
    if n < 1 or d * d != n:
        raise ValueError(f"the number of outcomes must be a perfect square, got {n}")
    if d == 2:
        return bell_measurement(), bell_corrections()
    maps = weyl_heisenberg_maps(d)
    return matched_measurement(maps), controlled_operation(maps)


def teleportation_reports(n: int = 4, tol: float = la.DEFAULT_TOL) -> list[CheckReport]:
    m, u = kit(n)
    return [check_teleportation(m, u, n, tol)]


def dense_coding_reports(n: int = 4, tol: float = la.DEFAULT_TOL) -> list[CheckReport]:
    m, u = kit(n)
    return [check_dense_coding(u, m, n, tol)]


def complementarity_reports(n: int = 2, tol: float = la.DEFAULT_TOL) -> list[CheckReport]:
    red, green = computational_basis(n), fourier_basis(n)
    phases = find_controlled_phase(red, green, tol)
    physical = (check_complementarity_physical(red, green, phases, tol) if phases is not None
                else CheckReport("complementarity", False, float("inf"), None))
    frob = check_complementarity_frobenius(red, green, tol)
    neg_phys = check_complementarity_physical(red, red, np.ones((n, n)), tol)
    neg_frob = check_complementarity_frobenius(red, red, tol)
    negative = n == 1 or (not neg_phys.passed and not neg_frob.passed
                          and find_controlled_phase(red, red, tol) is None)
    return [physical, frob, _flag("complementarity-negative-control", negative)]


def erasure_reports(n: int = 2, tol: float = la.DEFAULT_TOL) -> list[CheckReport]:
    return [check_erasure(computational_basis(n), fourier_basis(n), tol)]


def witness_reports(sizes=range(1, 7), tol: float = 1e-12) -> list[CheckReport]:
    return [check_witness_axioms(n, tol) for n in sizes]


def frobenius_reports(seed: int = DEFAULT_SEED, tol: float = la.DEFAULT_TOL,
                      max_n: int = 6) -> list[CheckReport]:
    rng = np.random.default_rng(seed)
    out = [_law_report(f"frobenius-induced-{n}",
                       algebra.frobenius_residuals(algebra.induced_frobenius(n)), tol)
           for n in range(1, max_n + 1)]
    worst = 0.0
    for k in range(10):
        d = 2 + k % 4
        a = algebra.transport_frobenius(la.random_unitary(rng, d), algebra.induced_frobenius(d))
        worst = max(worst, max(algebra.frobenius_residuals(a).values()))
    out.append(CheckReport("frobenius-transported", bool(worst <= tol), worst, None))
    families = [ProjectorFamily(4, (np.diag([1, 1, 0, 0]), np.diag([0, 0, 1, 1]))),
                ProjectorFamily(3, (np.eye(3),)),
                ProjectorFamily.from_basis(fourier_basis(3))]
    families += [sampling.random_projector_family(rng, d) for d in (2, 3, 4, 5)]
    worst = max(max(algebra.module_residuals(algebra.module_from_measurement(p)).values())
                for p in families)
    out.append(CheckReport("frobenius-modules", bool(worst <= tol), worst, None))
    return out


def interchange_reports(count: int = 100, seed: int = DEFAULT_SEED,
                        tol: float = la.DEFAULT_TOL) -> list[CheckReport]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(count):
        b2, b1, a2, a1 = sampling.random_composable_quadruple(rng)
        lhs = vcomp(hcomp2(b2, a2), hcomp2(b1, a1))
        rhs = hcomp2(vcomp(b2, b1), vcomp(a2, a1))
        worst = max(worst, max_entry_error(lhs, rhs))
    return [CheckReport("interchange", bool(worst <= tol), worst, None)]


def decoherence_reports(seed: int = DEFAULT_SEED,
                        tol: float = la.DEFAULT_TOL) -> list[CheckReport]:
    rng = np.random.default_rng(seed)
    out = []
    worst = max(max(deco.classical_structure_residuals(deco.standard_cdt(n)).values())
                for n in range(1, 7))
    out.append(CheckReport("decoherence-classical-structures", bool(worst <= tol), worst, None))
    worst = max(max(deco.interaction_residuals(deco.self_interaction(deco.standard_cdt(n)))
                    .values()) for n in range(1, 7))
    out.append(CheckReport("decoherence-self-interaction", bool(worst <= tol), worst, None))

    delta = deco.self_interaction(deco.standard_cdt(2))
    emb, induced = deco.tensor_over_environment(delta, delta)
    worst = max(deco.interaction_residuals(induced).values())
    ok = emb.shape[1] == 2 and la.is_isometry(emb, tol) and worst <= tol
    out.append(CheckReport("decoherence-tensor-over-environment", bool(ok), worst, None))

    worst = 0.0
    for _ in range(5):
        a, b = sampling.random_interaction(rng, 2, 2), sampling.random_interaction(rng, 2, 3)
        _, induced = deco.tensor_over_environment(a, b)
        worst = max(worst, max(deco.interaction_residuals(induced).values(), default=0.0))
    out.append(CheckReport("decoherence-random-tensor", bool(worst <= tol), worst, None))

    ok = True
    for k in range(10):
        s = 2 + k % 2
        buf = deco.buffered_interaction(delta, s)
        f = la.kron(la.eye(2), la.random_matrix(rng, s, s))
        ok &= deco.is_protected(f, buf, buf, tol)
    out.append(_flag("decoherence-buffered-protected", ok))

    agree = True
    for k in range(20):
        n, d = 2, 2 + k % 2
        if k % 2 == 0:
            f = la.direct_sum([la.random_matrix(rng, d, d) for _ in range(n)])
        else:
            f = la.random_matrix(rng, n * d, n * d)
        sys = deco.copying_interaction(n, d)
        blocks = deco.controlled_form(f, n, d, tol)
        protected = deco.is_protected(f, sys, sys, tol)
        agree &= (blocks is not None) == protected
        if blocks is not None:
            agree &= la.approx_eq(la.direct_sum(blocks), f, tol)
    out.append(_flag("decoherence-controlled-form", agree))
    return out


def double_unitarity_reports(seed: int = DEFAULT_SEED,
                             tol: float = la.DEFAULT_TOL) -> list[CheckReport]:
    """Horizontal unitarity of a correction kit against teleportation success."""
    rng = np.random.default_rng(seed)
    out = [
        _flag("bell-measurement-horizontally-unitary",
              is_horizontally_unitary(scalar_mul(math.sqrt(2), bell_measurement()),
                                      *measurement_legs(4, 2), tol)),
        _flag("bell-corrections-horizontally-unitary",
              is_horizontally_unitary(bell_corrections(), *correction_legs(4, 2), tol,
                                      up_to_scalar=True)),
    ]
    base = bell_correction_maps()
    hadamard = fourier_basis(2).matrix()
    phases = np.exp(1j * np.array([0.3, -1.1, 2.0, 0.7]))
    kits = {
        "standard": base,
        "phased": [p * u for p, u in zip(phases, base)],
        "permuted": [base[k] for k in (2, 0, 3, 1)],
        "conjugated": [hadamard @ u @ hadamard for u in base],
    }
    for k in range(3):
        kits[f"random-orthogonal-{k}"] = sampling.random_orthogonal_kit(rng, base)
    for name, maps in kits.items():
        u = controlled_operation(maps)
        tele = check_teleportation(matched_measurement(maps), u, tol=tol)
        hu = controlled_kit_unitary(u, tol)
        out.append(_flag(f"kit-{name}", tele.passed and hu))
    negatives = {f"random-unitary-{k}": sampling.random_unitary_kit(rng) for k in range(2)}
    negatives["singular"] = [np.eye(2), np.diag([1, 0]), base[2], base[1]]
    for name, maps in negatives.items():
        u = controlled_operation(maps)
        tele = check_teleportation(bell_measurement(), u, tol=tol)
        hu = controlled_kit_unitary(u, tol)
        out.append(_flag(f"kit-{name}-rejected", not tele.passed and not hu))
    two = controlled_operation([np.eye(2), np.diag([1, 0])])
    out.append(_flag("singular-control-not-invertible",
                     not is_horizontally_invertible(two, *correction_legs(2, 2), tol)))
    return out


CHECKS = ("teleportation", "dense-coding", "complementarity", "erasure", "witness-axioms",
          "frobenius", "interchange", "decoherence")


def run_check(name: str, n: int | None = None, tol: float = la.DEFAULT_TOL) -> list[CheckReport]:
    if name == "teleportation":
        return teleportation_reports(4 if n is None else n, tol)
    if name == "dense-coding":
        return dense_coding_reports(4 if n is None else n, tol)
    if name == "complementarity":
        return complementarity_reports(2 if n is None else n, tol)
    if name == "erasure":
        return erasure_reports(2 if n is None else n, tol)
    if name == "witness-axioms":
        return witness_reports(range(1, 7) if n is None else [n], min(tol, 1e-12))
    if name == "frobenius":
        return frobenius_reports(tol=tol, max_n=6 if n is None else n)
    if name == "interchange":
        return interchange_reports(100 if n is None else n, tol=tol)
    if name == "decoherence":
        return decoherence_reports(tol=tol)
    if name == "all":
        out = []
        for c in CHECKS:
            out += run_check(c, None, tol)
        return out + double_unitarity_reports(tol=tol)
    raise KeyError(f"unknown check {name!r}")
