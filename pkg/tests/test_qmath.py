import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bellxtalk import qmath
from bellxtalk.observables import HADAMARD, IDENTITY2, SIGMA1, SIGMA2, SIGMA3

KET0 = np.array([1, 0], dtype=complex)
KET1 = np.array([0, 1], dtype=complex)

finite = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)


def complex_vectors(dim):
    return st.lists(st.tuples(finite, finite), min_size=dim, max_size=dim).map(
        lambda parts: np.array([complex(re, im) for re, im in parts])
    )


def complex_matrices(dim):
    return st.lists(st.tuples(finite, finite), min_size=dim * dim, max_size=dim * dim).map(
        lambda parts: np.array([complex(re, im) for re, im in parts]).reshape(dim, dim)
    )


class TestInner:
    def test_orthonormal_basis(self):
        assert qmath.inner(KET0, KET0) == 1
        assert qmath.inner(KET0, KET1) == 0

    def test_conjugates_first_argument(self):
        assert qmath.inner(np.array([1j, 0]), KET0) == -1j

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            qmath.inner(KET0, np.zeros(4, dtype=complex) + np.array([1, 0, 0, 0]))

    @given(complex_vectors(2))
    def test_self_inner_real_nonnegative(self, u):
        value = qmath.inner(u, u)
        assert value.imag == 0.0
        assert value.real >= 0.0

    @given(complex_vectors(4), complex_vectors(4))
    def test_cauchy_schwarz(self, u, v):
        lhs = abs(qmath.inner(u, v)) ** 2
        rhs = qmath.inner(u, u).real * qmath.inner(v, v).real
        assert lhs <= rhs * (1.0 + 1e-12) + 1e-12


class TestTensor:
    def test_basis_products(self):
        assert np.array_equal(qmath.tensor_vec(KET0, KET1), [0, 1, 0, 0])
        assert np.array_equal(qmath.tensor_vec(KET1, KET1), [0, 0, 0, 1])

    def test_bilinearity(self):
        plus = (KET0 + KET1) / np.sqrt(2)
        expected = np.array([1, 0, 1, 0]) / np.sqrt(2)
        assert np.allclose(qmath.tensor_vec(plus, KET0), expected, atol=1e-15)

    def test_tensor_mat_identity(self):
        assert np.array_equal(qmath.tensor_mat(IDENTITY2, IDENTITY2), np.eye(4))

    def test_tensor_mat_diagonal_lifts(self):
        # hand-expanded Kronecker products
        assert np.array_equal(qmath.tensor_mat(SIGMA3, IDENTITY2), np.diag([1, 1, -1, -1]).astype(complex))
        assert np.array_equal(qmath.tensor_mat(IDENTITY2, SIGMA3), np.diag([1, -1, 1, -1]).astype(complex))

    @settings(max_examples=50)
    @given(complex_matrices(2), complex_matrices(2), complex_vectors(2), complex_vectors(2))
    def test_mixed_product_rule(self, a, b, u, v):
        lhs = qmath.mat_apply(qmath.tensor_mat(a, b), qmath.tensor_vec(u, v))
        rhs = qmath.tensor_vec(a @ u, b @ v)
        assert np.allclose(lhs, rhs, atol=1e-14 * max(1.0, np.abs(rhs).max()))


class TestMatrixOps:
    def test_mat_apply_pauli(self):
        assert np.array_equal(qmath.mat_apply(SIGMA1, KET0), KET1)

    def test_adjoint_hermitian_pauli(self):
        assert np.array_equal(qmath.adjoint(SIGMA2), SIGMA2)

    def test_frobenius_norm_zero(self):
        assert qmath.frobenius_norm(np.zeros((2, 2))) == 0.0

    def test_frobenius_norm_hadamard(self):
        assert qmath.frobenius_norm(HADAMARD) == pytest.approx(np.sqrt(2.0), abs=1e-15)

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            qmath.as_matrix(np.array([[np.nan, 0], [0, 0]]))
        with pytest.raises(ValueError):
            qmath.as_vector(np.array([np.inf, 0]))

    def test_rejects_wrong_shapes(self):
        with pytest.raises(ValueError):
            qmath.as_vector(np.zeros(3))
        with pytest.raises(ValueError):
            qmath.as_matrix(np.zeros((3, 3)))
        with pytest.raises(ValueError):
            qmath.mat_mul(np.eye(2), np.eye(4))

    @given(complex_matrices(4))
    def test_adjoint_involution_exact(self, m):
        assert np.array_equal(qmath.adjoint(qmath.adjoint(m)), m)

    @settings(max_examples=50)
    @given(complex_matrices(2), complex_matrices(2), complex_matrices(2))
    def test_mat_mul_associative(self, a, b, c):
        lhs = qmath.mat_mul(qmath.mat_mul(a, b), c)
        rhs = qmath.mat_mul(a, qmath.mat_mul(b, c))
        scale = max(1.0, np.abs(lhs).max())
        assert np.allclose(lhs, rhs, atol=1e-13 * scale)
