import numpy as np
import pytest

from src.liegroup import exp_so3, hat, inertia_apply, inertia_operator, inertia_solve, vee
from src.models import InertiaModel


@pytest.fixture
def general_inertia():
    Q = exp_so3(np.array([0.3, -0.5, 0.9]))
    return InertiaModel.from_body_inertia(Q @ np.diag([5.0, 4.0, 3.0]) @ Q.T)


def test_principal_inertia_example():
    m = InertiaModel.from_J(np.diag([1.0, 2.0, 3.0]))
    np.testing.assert_array_equal(np.diag(m.I_b), [5.0, 4.0, 3.0])
    np.testing.assert_array_equal(inertia_apply(m, np.ones(3)), [5.0, 4.0, 3.0])
    np.testing.assert_array_equal(inertia_apply(m, np.zeros(3)), np.zeros(3))


def test_body_inertia_matches_matrix_operator(general_inertia):
    v = np.random.default_rng(3).normal(size=(40, 3))
    matrix_form = vee(inertia_operator(general_inertia, hat(v)))
    np.testing.assert_allclose(inertia_apply(general_inertia, v), matrix_form, atol=1e-13)


def test_inertia_is_self_adjoint(general_inertia):
    u, w = np.random.default_rng(4).normal(size=(2, 40, 3))
    np.testing.assert_allclose(
        np.sum(inertia_apply(general_inertia, u) * w, axis=-1),
        np.sum(inertia_apply(general_inertia, w) * u, axis=-1),
        atol=1e-13,
    )


def test_inertia_solve_inverts_apply(general_inertia):
    m = InertiaModel.from_principal([5.0, 4.0, 3.0])
    np.testing.assert_allclose(inertia_solve(m, np.array([5.0, 4.0, 3.0])), np.ones(3), atol=1e-15)
    np.testing.assert_array_equal(inertia_solve(m, np.zeros(3)), np.zeros(3))

    p = np.random.default_rng(5).normal(size=(40, 3))
    np.testing.assert_allclose(inertia_apply(general_inertia, inertia_solve(general_inertia, p)), p, atol=1e-12)


def test_body_inertia_and_J_conversions_are_inverse(general_inertia):
    rebuilt = InertiaModel.from_J(general_inertia.J)
    np.testing.assert_allclose(rebuilt.I_b, general_inertia.I_b, atol=1e-14)
    np.testing.assert_allclose(InertiaModel.from_body_inertia(rebuilt.I_b).J, general_inertia.J, atol=1e-14)
