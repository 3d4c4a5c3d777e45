"""End-to-end acceptance checks, one test per criterion.

Each test records a single PASS/FAIL line; the lines are written to the
terminal when the module finishes, whether or not output capture is on.
"""

import json
import math

import numpy as np
import pytest

import oracles
from twohilb import linalg as la
from twohilb import decoherence as deco
from twohilb.algebra import (check_frobenius, check_module, induced_frobenius,
                             module_from_measurement, transport_frobenius)
from twohilb.cli import main
from twohilb.core import hcomp2, max_entry_error, scalar_mul, vcomp
from twohilb.dsl import evaluate_text, parse
from twohilb.generators import (ProjectorFamily, bell_correction_maps, bell_corrections,
                                bell_measurement, computational_basis, controlled_operation,
                                fourier_basis, matched_measurement)
from twohilb.protocols import (check_complementarity_frobenius, check_complementarity_physical,
                               check_erasure, check_teleportation, check_witness_axioms,
                               controlled_kit_unitary, correction_legs, find_controlled_phase,
                               is_horizontally_invertible, is_horizontally_unitary,
                               measurement_legs)
from twohilb.sampling import (random_composable_quadruple, random_orthogonal_kit,
                              random_projector_family, random_unitary_kit)
from twohilb.serialize import deserialize, serialize

SEED = 7
_LINES = {}


@pytest.fixture(scope="module", autouse=True)
def summary(request):
    yield
    tr = request.config.pluginmanager.get_plugin("terminalreporter")
    if tr is None:
        return
    tr.write_line("")
    for n in sorted(_LINES):
        tr.write_line(_LINES[n])


def record(n: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {n:>2}: {title}"
    if detail:
        line += f"  [{detail}]"
    _LINES[n] = line
    print(line)
    assert ok, line


def _cli_json(capsys, *argv):
    code = main(list(argv))
    lines = capsys.readouterr().out.splitlines()
    return code, [json.loads(x) for x in lines]


def test_criterion_01_teleportation(capsys):
    code, docs = _cli_json(capsys, "check", "teleportation", "--n", "4", "--json")
    (doc,) = docs
    s = complex(*doc["fitted_scalar"])
    ok = (code == 0 and doc["passed"] and abs(s - 0.5) <= 1e-9
          and doc["max_entry_error"] <= 1e-9)
    record(1, "teleportation", ok, f"s={s.real:.12g}, residual={doc['max_entry_error']:.1e}")


def test_criterion_02_dense_coding(capsys):
    code, docs = _cli_json(capsys, "check", "dense-coding", "--n", "4", "--json")
    (doc,) = docs
    s = complex(*doc["fitted_scalar"])
    ok = code == 0 and doc["passed"] and abs(s - 1) <= 1e-9
    record(2, "dense coding", ok, f"s={s.real:.12g}, residual={doc['max_entry_error']:.1e}")


def test_criterion_03_complementarity():
    tol = 1e-9
    z, x = computational_basis(2), fourier_basis(2)
    phases = find_controlled_phase(z, x, tol)
    phases_ok = phases is not None and la.approx_eq(phases, [[1, 1], [1, -1]], tol)
    phys = check_complementarity_physical(z, x, [[1, 1], [1, -1]], tol)
    frob = check_complementarity_frobenius(z, x, tol)
    neg_phys = check_complementarity_physical(z, z, np.ones((2, 2)), tol)
    neg_frob = check_complementarity_frobenius(z, z, tol)
    ok = (phases_ok and phys.passed and frob.passed and not neg_phys.passed
          and not neg_frob.passed and find_controlled_phase(z, z, tol) is None)
    record(3, "complementarity", ok,
           f"physical={phys.max_entry_error:.1e}, frobenius={frob.max_entry_error:.1e}, "
           f"negative control residuals {neg_phys.max_entry_error:.2f}/"
           f"{neg_frob.max_entry_error:.2f}")


def test_criterion_04_erasure():
    rep = check_erasure(computational_basis(2), fourier_basis(2), 1e-9)
    record(4, "erasure", rep.passed and rep.max_entry_error <= 1e-9,
           f"residual={rep.max_entry_error:.1e}")


def test_criterion_05_witness_axioms():
    reps = [check_witness_axioms(n, 1e-12) for n in range(1, 7)]
    worst = max(r.max_entry_error for r in reps)
    record(5, "witness axioms n=1..6", all(r.passed for r in reps), f"worst={worst:.1e}")


def test_criterion_06_frobenius():
    rng = np.random.default_rng(SEED)
    induced = all(check_frobenius(induced_frobenius(n)).all() for n in range(1, 7))
    transported = all(check_frobenius(transport_frobenius(la.random_unitary(rng, d),
                                                          induced_frobenius(d))).all()
                      for d in (2, 3, 4, 5, 2, 3, 4, 5, 2, 3))
    families = [ProjectorFamily(4, (np.diag([1, 1, 0, 0]), np.diag([0, 0, 1, 1]))),
                ProjectorFamily.from_basis(fourier_basis(3))]
    families += [random_projector_family(rng, d) for d in (2, 3, 4, 5)]
    modules = all(check_module(module_from_measurement(p)).all() for p in families)
    record(6, "Frobenius suite", induced and transported and modules,
           f"induced={induced}, transported={transported}, modules={modules}")


def test_criterion_07_double_unitarity():
    rng = np.random.default_rng(SEED)
    tol = 1e-9
    m_ok = is_horizontally_unitary(scalar_mul(math.sqrt(2), bell_measurement()),
                                   *measurement_legs(4, 2), tol)
    u_ok = is_horizontally_unitary(bell_corrections(), *correction_legs(4, 2), tol,
                                   up_to_scalar=True)
    base = bell_correction_maps()
    h = fourier_basis(2).matrix()
    phases = np.exp(1j * np.array([0.4, -1.3, 2.2, 0.9]))
    kits = [base, [p * u for p, u in zip(phases, base)], [base[k] for k in (3, 1, 0, 2)],
            [h @ u @ h for u in base]]
    kits += [random_orthogonal_kit(rng, base) for _ in range(3)]
    agree = all(check_teleportation(matched_measurement(k), controlled_operation(k),
                                    tol=tol).passed
                and controlled_kit_unitary(controlled_operation(k), tol) for k in kits)
    bad = [random_unitary_kit(rng), [np.eye(2), np.diag([1, 0]), base[2], base[3]]]
    rejected = all(not check_teleportation(bell_measurement(), controlled_operation(k),
                                           tol=tol).passed
                   and not controlled_kit_unitary(controlled_operation(k), tol) for k in bad)
    singular = not is_horizontally_invertible(controlled_operation([np.eye(2), np.diag([1, 0])]),
                                              *correction_legs(2, 2), tol)
    record(7, "double unitarity", m_ok and u_ok and agree and rejected and singular,
           f"sqrt2*M={m_ok}, U={u_ok}, 7 kits agree={agree}, negatives rejected="
           f"{rejected and singular}")


def test_criterion_08_interchange():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(100):
        b2, b1, a2, a1 = random_composable_quadruple(rng, max_dim=3)
        worst = max(worst, max_entry_error(vcomp(hcomp2(b2, a2), hcomp2(b1, a1)),
                                           hcomp2(vcomp(b2, b1), vcomp(a2, a1))))
    record(8, "interchange law x100", worst <= 1e-9, f"worst={worst:.1e}")


def test_criterion_09_decoherence():
    rng = np.random.default_rng(SEED)
    tol = 1e-9
    cdt = all(deco.check_classical_structure(deco.standard_cdt(n), tol).all()
              for n in range(1, 7))
    comodule = all(deco.check_interaction(deco.self_interaction(deco.standard_cdt(n)), tol).all()
                   for n in range(1, 7))
    delta = deco.self_interaction(deco.standard_cdt(2))
    emb, induced = deco.tensor_over_environment(delta, delta)
    eq = deco.equalizer_map(delta, delta)
    oracle_dim = eq.shape[1] - oracles.gauss_rank(eq)
    tensor = emb.shape[1] == 2 == oracle_dim and deco.check_interaction(induced, tol).all()
    protected = True
    for k in range(10):
        s = 2 + k % 2
        buf = deco.buffered_interaction(delta, s)
        protected &= deco.is_protected(la.kron(la.eye(2), la.random_matrix(rng, s, s)),
                                       buf, buf, tol)
    agree = True
    for k in range(20):
        d = 2 + k % 2
        f = (la.direct_sum([la.random_matrix(rng, d, d) for _ in range(2)]) if k % 2 == 0
             else la.random_matrix(rng, 2 * d, 2 * d))
        sys = deco.copying_interaction(2, d)
        agree &= ((deco.controlled_form(f, 2, d, tol) is not None)
                  == deco.is_protected(f, sys, sys, tol) == (k % 2 == 0))
    ok = cdt and comodule and tensor and protected and agree
    record(9, "decoherence suite", ok,
           f"kernel dim={emb.shape[1]} (oracle {oracle_dim}), cdt={cdt}, comodule={comodule}, "
           f"protected={protected}, controlled form agrees={agree}")


def test_criterion_10_dsl():
    tele = "(WR(4) o UBell) . (MBell o Q(2)) . (Q(2) o Bell(2))"
    tele_rhs = "Create(4) o Q(2)"
    dense = "(WL(4) o MBell) . (UBell o Q(2)) . (WL(4) o Bell(2))"
    dense_rhs = "Copy(4) o WL(4)"
    t_lhs, t_rhs = evaluate_text(tele), evaluate_text(tele_rhs)
    d_lhs, d_rhs = evaluate_text(dense), evaluate_text(dense_rhs)
    t_err = max_entry_error(t_lhs, scalar_mul(0.5, t_rhs))
    d_err = max_entry_error(d_lhs, d_rhs)
    parsed = all(parse(s) is not None for s in (tele, tele_rhs, dense, dense_rhs))
    cells = (t_lhs, t_rhs, d_lhs, d_rhs, bell_measurement(), bell_corrections())
    lossless = all(max_entry_error(deserialize(serialize(c)), c) == 0 for c in cells)
    ok = parsed and t_err <= 1e-9 and d_err <= 1e-9 and lossless
    record(10, "DSL expressions and serialization", ok,
           f"teleportation={t_err:.1e}, dense coding={d_err:.1e}, lossless={lossless}")
