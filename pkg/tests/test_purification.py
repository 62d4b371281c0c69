import numpy as np
import pytest

from gaussinfo import (
    InvalidStateError,
    UnsupportedInputError,
    bipartite_complex_form,
    elementary_state,
    entropy,
    entropy_from_matrices,
    gauge_invariant_state,
    make_context,
    make_gaussian_state,
    matrix_sqrt_psd,
    mutual_correlation,
    partial_state,
    purify,
    purity_residual,
    thermal_entropy,
    vacuum_state,
)
from conftest import random_occupation


class TestMatrixSqrtPsd:
    def test_identity(self):
        np.testing.assert_array_equal(matrix_sqrt_psd(np.eye(3)), np.eye(3))

    def test_diagonal(self):
        np.testing.assert_allclose(matrix_sqrt_psd(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]))

    def test_scalar_two(self):
        np.testing.assert_allclose(matrix_sqrt_psd([[2.0]]), [[np.sqrt(2.0)]], rtol=1e-15)

    def test_square_relation_random(self, rng):
        a = rng.normal(size=(4, 4))
        mat = a @ a.T
        root = matrix_sqrt_psd(mat)
        np.testing.assert_allclose(root @ root, mat, rtol=1e-9, atol=1e-12)

    def test_tiny_negative_clamped(self):
        out = matrix_sqrt_psd(np.diag([1.0, -1e-12]))
        np.testing.assert_allclose(out, np.diag([1.0, 0.0]), atol=1e-6)

    def test_negative_beyond_tolerance_rejected(self):
        with pytest.raises(ValueError, match="negative eigenvalue"):
            matrix_sqrt_psd(np.diag([1.0, -1e-3]))

    def test_non_hermitian_rejected(self):
        with pytest.raises(ValueError, match="Hermitian"):
            matrix_sqrt_psd(np.array([[1.0, 0.5], [0.0, 1.0]]))


class TestPurify:
    def test_vacuum_purifies_to_product(self):
        ctx = make_context(1)
        bi = purify(vacuum_state(ctx))
        np.testing.assert_allclose(bi.cross_block(), np.zeros((2, 2)), atol=1e-15)
        np.testing.assert_allclose(bi.side_block(1), 0.5 * np.eye(2))
        np.testing.assert_allclose(bi.side_block(2), 0.5 * np.eye(2))
        assert purity_residual(bi) <= 1e-12

    def test_elementary_complex_form(self):
        bi = purify(elementary_state(1.0))
        expected = np.array([[1.5j, np.sqrt(2.0)], [np.sqrt(2.0), -1.5j]])
        np.testing.assert_allclose(bipartite_complex_form(bi), expected, atol=1e-12)

    def test_random_two_mode_purity(self, rng):
        st = gauge_invariant_state(make_context(2), random_occupation(rng, 2))
        assert purity_residual(purify(st)) <= 1e-8

    def test_nonzero_mean_unsupported(self):
        ctx = make_context(1)
        st = make_gaussian_state(ctx, [0.5, 0.0], 1.5 * np.eye(2))
        with pytest.raises(UnsupportedInputError):
            purify(st)

    def test_invalid_operand_surfaces_as_state_error(self):
        # bypass construction-time validation so the square-root operand
        # itself goes negative inside purify
        from gaussinfo import GaussianState

        ctx = make_context(1)
        bad = GaussianState(ctx, np.zeros(2), 0.4 * np.eye(2))
        with pytest.raises(InvalidStateError, match="square root"):
            purify(bad)

    def test_squeezed_state_supported(self):
        ctx = make_context(1)
        st = make_gaussian_state(ctx, [0.0, 0.0], np.diag([1.0, 0.3]))
        bi = purify(st)
        assert purity_residual(bi) <= 1e-10
        np.testing.assert_allclose(bi.side_block(1), st.alpha)

    def test_hbar_scaling(self):
        st = elementary_state(1.0, hbar=2.0)
        bi = purify(st)
        assert purity_residual(bi) <= 1e-12
        np.testing.assert_allclose(bi.side_block(1), st.alpha)
        np.testing.assert_allclose(
            entropy_from_matrices(bi.side_block(2), -bi.delta), thermal_entropy(1.0), rtol=1e-12
        )


class TestPartialState:
    def test_side_one_bit_for_bit(self):
        st = elementary_state(1.0)
        part = partial_state(purify(st), 1)
        assert np.array_equal(part.alpha, st.alpha)
        np.testing.assert_allclose(part.alpha, 1.5 * np.eye(2))

    def test_side_two_conjugate_context(self):
        st = elementary_state(1.0)
        part = partial_state(purify(st), 2)
        np.testing.assert_allclose(part.alpha, 1.5 * np.eye(2))
        np.testing.assert_array_equal(part.ctx.delta, -st.ctx.delta)

    def test_vacuum_both_sides(self):
        ctx = make_context(1)
        bi = purify(vacuum_state(ctx))
        for side in (1, 2):
            np.testing.assert_allclose(partial_state(bi, side).alpha, 0.5 * np.eye(2))

    def test_bad_side_rejected(self):
        bi = purify(elementary_state(0.5))
        with pytest.raises(ValueError):
            partial_state(bi, 3)


class TestPurificationEntropyConsistency:
    def test_joint_zero_partials_equal(self, rng):
        for _ in range(25):
            s = int(rng.integers(1, 4))
            st = gauge_invariant_state(make_context(s), random_occupation(rng, s))
            bi = purify(st)
            h = entropy(st).nats
            assert abs(entropy_from_matrices(bi.alpha12, bi.delta12)) <= 1e-8
            assert abs(entropy(partial_state(bi, 1)).nats - h) <= 1e-8
            assert abs(entropy(partial_state(bi, 2)).nats - h) <= 1e-8

    def test_mutual_correlation_is_twice_entropy(self, rng):
        for _ in range(10):
            s = int(rng.integers(1, 4))
            st = gauge_invariant_state(make_context(s), random_occupation(rng, s))
            bi = purify(st)
            np.testing.assert_allclose(
                mutual_correlation(bi), 2 * entropy(st).nats, atol=1e-8
            )

    def test_complex_form_matches_occupation_formula(self, rng):
        for s in (1, 2, 3):
            n_mat = random_occupation(rng, s)
            st = gauge_invariant_state(make_context(s), n_mat)
            cform = bipartite_complex_form(purify(st))
            root = matrix_sqrt_psd(n_mat @ n_mat + n_mat)
            upper = 1j * (n_mat + 0.5 * np.eye(s))
            np.testing.assert_allclose(cform[:s, :s], upper, atol=1e-9)
            np.testing.assert_allclose(cform[s:, s:], -upper, atol=1e-9)
            np.testing.assert_allclose(cform[:s, s:], root, atol=1e-9)
            np.testing.assert_allclose(cform[s:, :s], root, atol=1e-9)
