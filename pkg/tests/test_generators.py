import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from twohilb import linalg as la
from twohilb.core import OneCell, dagger2, eq2, hcomp1, identity_1, identity_2, is_vertically_unitary, vcomp
from twohilb.generators import (OrthonormalBasis, ProjectorFamily, bell_basis, bell_correction_maps,
                                bell_corrections, bell_measurement, bell_state, compare,
                                computational_basis, controlled_operation, controlled_phase, copy,
                                create, delete, fourier_basis, image_basis, matched_measurement,
                                named_basis, nondegenerate_measurement, projective_measurement,
                                qudit, weyl_heisenberg_maps, witness_left, witness_right)

r2 = 1 / np.sqrt(2)


def test_bell_measurement_matrix():
    expected = r2 * np.array([[1, 0, 0, 1], [1, 0, 0, -1], [0, 1, 1, 0], [0, 1, -1, 0]])
    m = bell_measurement()
    np.testing.assert_allclose(m.entry(0, 0), expected, atol=1e-15)
    assert m.source == hcomp1(qudit(2), qudit(2))
    assert m.target.dims == ((4,),)


def test_bell_measurement_is_the_nondegenerate_measurement_of_the_bell_basis():
    assert eq2(nondegenerate_measurement(bell_basis()), bell_measurement(), 1e-15)


def test_bell_corrections_column():
    u = bell_corrections()
    expected = [[[1, 0], [0, 1]], [[1, 0], [0, -1]], [[0, 1], [1, 0]], [[0, 1], [-1, 0]]]
    for k, e in enumerate(expected):
        np.testing.assert_array_equal(u.entry(k, 0), e)
    assert u.source == hcomp1(witness_left(4), qudit(2))


def test_bell_state_entries():
    np.testing.assert_allclose(bell_state(2).entry(0, 0), r2 * np.array([[1], [0], [0], [1]]))
    np.testing.assert_array_equal(bell_state(1).entry(0, 0), [[1]])


def test_create_four_is_a_column_of_ones():
    np.testing.assert_array_equal(create(4).entry(0, 0), np.ones((4, 1)))


def test_measurement_vertices_for_the_qubit_bases():
    np.testing.assert_array_equal(nondegenerate_measurement(computational_basis(2)).entry(0, 0),
                                  np.eye(2))
    np.testing.assert_allclose(nondegenerate_measurement(fourier_basis(2)).entry(0, 0),
                               r2 * np.array([[1, 1], [1, -1]]), atol=1e-15)


def test_copy_entries_are_diagonal_ones():
    c = copy(3)
    for i in range(3):
        for j in range(3):
            assert c.entry(i, j).shape == ((1, 1) if i == j else (1, 0))
    assert eq2(compare(3), dagger2(copy(3)), 0)
    assert eq2(delete(3), dagger2(create(3)), 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_copy_then_compare_deletes_the_hole(n):
    assert eq2(vcomp(compare(n), copy(n)), identity_2(identity_1(n)), 0)


@pytest.mark.parametrize("n", range(2, 5))
def test_compare_then_copy_is_not_the_identity(n):
    wl_wr = hcomp1(witness_left(n), witness_right(n))
    assert not eq2(vcomp(copy(n), compare(n)), identity_2(wl_wr), 0.5)


def test_delete_after_create_counts_outcomes():
    for n in range(1, 6):
        np.testing.assert_array_equal(vcomp(delete(n), create(n)).entry(0, 0), [[n]])


def test_named_bases():
    assert np.array_equal(named_basis("Z").matrix(), np.eye(2))
    assert la.approx_eq(named_basis("X").matrix(), r2 * np.array([[1, 1], [1, -1]]))
    assert named_basis("F5").dimension == 5
    assert named_basis("C3").dimension == 3
    with pytest.raises(KeyError):
        named_basis("Q7")


def test_basis_validation():
    with pytest.raises(ValueError):
        OrthonormalBasis.from_columns([[1, 1], [0, 1]])
    with pytest.raises(ValueError):
        OrthonormalBasis(2, (np.array([1, 0]),))


@pytest.mark.parametrize("d", range(1, 6))
def test_fourier_bases_are_unbiased_to_the_computational_basis(d):
    m = fourier_basis(d).matrix()
    np.testing.assert_allclose(np.abs(m) ** 2, np.full((d, d), 1 / d), atol=1e-12)


def test_projector_family_validation():
    with pytest.raises(ValueError):
        ProjectorFamily(2, (np.diag([1, 0]),))
    with pytest.raises(ValueError):
        ProjectorFamily(2, (np.diag([1, 0]), np.ones((2, 2)) / 2))
    with pytest.raises(ValueError):
        ProjectorFamily(2, ())


def test_projective_measurement_with_rank_two_outcome():
    p = ProjectorFamily(3, (np.diag([1, 0, 1]), np.diag([0, 1, 0])))
    m = projective_measurement(p)
    assert p.ranks == (2, 1)
    assert m.target.dims == ((3,),)
    np.testing.assert_array_equal(m.entry(0, 0), [[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert is_vertically_unitary(m)


def test_projective_measurement_in_the_standard_basis_is_the_identity():
    p = ProjectorFamily.from_basis(computational_basis(4))
    np.testing.assert_array_equal(projective_measurement(p).entry(0, 0), np.eye(4))


def test_rank_one_projective_measurement_agrees_up_to_row_phases(rng):
    b = OrthonormalBasis.from_columns(la.random_unitary(rng, 3))
    proj = projective_measurement(ProjectorFamily.from_basis(b)).entry(0, 0)
    plain = nondegenerate_measurement(b).entry(0, 0)
    ratio = np.sum(proj * np.conj(plain), axis=1)
    np.testing.assert_allclose(np.abs(ratio), 1, atol=1e-10)
    np.testing.assert_allclose(proj, ratio[:, None] * plain, atol=1e-10)


def test_image_basis_is_independent_of_how_the_projector_is_built(rng):
    v = la.random_unitary(rng, 4)[:, :2]
    w = v @ la.random_unitary(rng, 2)
    assert la.approx_eq(image_basis(v @ la.dagger(v)), image_basis(w @ la.dagger(w)), 1e-8)


@given(st.integers(1, 4), st.integers(1, 3), st.integers(0, 10**6))
def test_controlled_operations_compose_pointwise(n, d, seed):
    rng = np.random.default_rng(seed)
    us = [la.random_matrix(rng, d, d) for _ in range(n)]
    vs = [la.random_matrix(rng, d, d) for _ in range(n)]
    got = vcomp(controlled_operation(vs), controlled_operation(us))
    want = controlled_operation([v @ u for u, v in zip(us, vs)])
    assert eq2(got, want, 1e-10)
    assert eq2(controlled_operation([np.eye(d)] * n), identity_2(got.source), 0)


@given(st.integers(1, 4), st.integers(1, 3), st.integers(0, 10**6))
def test_controlled_unitaries_are_vertically_unitary(n, d, seed):
    rng = np.random.default_rng(seed)
    assert is_vertically_unitary(controlled_operation([la.random_unitary(rng, d)
                                                       for _ in range(n)]))


def test_controlled_operation_validation():
    with pytest.raises(ValueError):
        controlled_operation([])
    with pytest.raises(ValueError):
        controlled_operation([np.eye(2), np.eye(3)])


def test_controlled_phase():
    phi = controlled_phase([[1, 1], [1, -1]])
    assert phi.source == hcomp1(witness_left(2), witness_right(2))
    np.testing.assert_array_equal(phi.entry(1, 1), [[-1]])
    with pytest.raises(ValueError):
        controlled_phase([[1, 2]])
    with pytest.raises(ValueError):
        controlled_phase(np.zeros((0, 0)))


def test_weyl_heisenberg_at_two_is_the_qubit_kit():
    for a, b in zip(weyl_heisenberg_maps(2), bell_correction_maps()):
        np.testing.assert_allclose(a, b, atol=1e-15)


@pytest.mark.parametrize("d", range(1, 5))
def test_weyl_heisenberg_maps_are_trace_orthogonal_unitaries(d):
    maps = weyl_heisenberg_maps(d)
    assert len(maps) == d * d
    gram = np.array([[np.trace(la.dagger(a) @ b) for b in maps] for a in maps])
    np.testing.assert_allclose(gram, d * np.eye(d * d), atol=1e-12)
    assert all(la.is_unitary(u) for u in maps)


def test_matched_measurement_of_the_qubit_kit_is_the_bell_measurement():
    assert eq2(matched_measurement(bell_correction_maps()), bell_measurement(), 1e-15)


def test_matched_measurement_rejects_wrong_count():
    with pytest.raises(ValueError):
        matched_measurement([np.eye(2)] * 3)


def test_witness_validation():
    with pytest.raises(ValueError):
        witness_left(0)
    assert witness_right(3) == OneCell(3, 1, [[1, 1, 1]])
